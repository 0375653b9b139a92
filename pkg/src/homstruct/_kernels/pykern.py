"""Pure-Python search kernel.

Evaluates the mod-p axiom systems directly on flat structure-constant
arrays (independent of the exact-arithmetic checkers) and enumerates
candidate assignments in lexicographic order. The compiled kernel in
``_ckern`` mirrors this module; both must produce identical streams.

Flat layout of a candidate: the product tensors in kind order (each
n*n*n, entry (i, j, k) at ((i*n)+j)*n+k), then the twist matrix (n*n,
entry (row, col) at row*n+col; column j is the image of e_j).

Two contraction helpers cover every identity:

* ``_ot(outer, inner, i, j, k, l)``: coordinate l of
  outer(inner(e_i, e_j), twist(e_k)) -- "combine first, twist the tail";
* ``_to(outer, inner, i, j, k, l)``: coordinate l of
  outer(twist(e_i), inner(e_j, e_k)) -- "twist the head, combine inside".
"""

NAME = "python"

KINDS = {
    "hom-algebra": 1,
    "hom-leibniz": 1,
    "hom-prelie": 1,
    "hom-dialgebra": 2,
    "hlsda": 2,
}


def layout(kind, n):
    """(total length, product offsets, twist offset) of the flat array."""
    products = KINDS[kind]
    offs = tuple(i * n ** 3 for i in range(products))
    alpha_off = products * n ** 3
    return alpha_off + n * n, offs, alpha_off


def _ot(v, n, al, outer, inner, i, j, k, l):
    acc = 0
    base = inner + (i * n + j) * n
    for m in range(n):
        cm = v[base + m]
        if cm == 0:
            continue
        row = outer + m * n * n
        for b in range(n):
            bk = v[al + b * n + k]
            if bk:
                acc += cm * bk * v[row + b * n + l]
    return acc


def _to(v, n, al, outer, inner, i, j, k, l):
    acc = 0
    base = inner + (j * n + k) * n
    for a in range(n):
        ai = v[al + a * n + i]
        if ai == 0:
            continue
        row = outer + a * n * n
        for m in range(n):
            cm = v[base + m]
            if cm:
                acc += ai * cm * v[row + m * n + l]
    return acc


def _mult_ok(v, n, p, mu, al):
    # twist(product(ei, ej)) == product(twist ei, twist ej)
    for i in range(n):
        for j in range(n):
            base = mu + (i * n + j) * n
            for k in range(n):
                lhs = 0
                arow = al + k * n
                for m in range(n):
                    lhs += v[arow + m] * v[base + m]
                rhs = 0
                for a in range(n):
                    ai = v[al + a * n + i]
                    if ai == 0:
                        continue
                    block = mu + a * n * n
                    for b in range(n):
                        bj = v[al + b * n + j]
                        if bj:
                            rhs += ai * bj * v[block + b * n + k]
                if (lhs - rhs) % p:
                    return False
    return True


def _homassoc_ok(v, n, p, mu, al):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, mu, mu, i, j, k, l)
                            - _ot(v, n, al, mu, mu, i, j, k, l)) % p:
                        return False
    return True


def _leibniz_ok(v, n, p, br, al):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    t1 = _ot(v, n, al, br, br, i, j, k, l)
                    t2 = _ot(v, n, al, br, br, i, k, j, l)
                    t3 = _to(v, n, al, br, br, i, j, k, l)
                    if (t1 - t2 - t3) % p:
                        return False
    return True


def _prelie_ok(v, n, p, mu, al):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = (_to(v, n, al, mu, mu, i, j, k, l)
                           - _ot(v, n, al, mu, mu, i, j, k, l))
                    rhs = (_to(v, n, al, mu, mu, j, i, k, l)
                           - _ot(v, n, al, mu, mu, j, i, k, l))
                    if (lhs - rhs) % p:
                        return False
    return True


def _dialgebra_axioms_ok(v, n, p, left, right, al):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, left, left, i, j, k, l)
                            - _to(v, n, al, left, right, i, j, k, l)) % p:
                        return False
                    if (_ot(v, n, al, left, right, i, j, k, l)
                            - _to(v, n, al, right, left, i, j, k, l)) % p:
                        return False
                    if (_ot(v, n, al, right, right, i, j, k, l)
                            - _ot(v, n, al, right, left, i, j, k, l)) % p:
                        return False
    return True


def _hlsda_ok(v, n, p, left, right, al):
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, left, left, i, j, k, l)
                            - _to(v, n, al, left, right, i, j, k, l)) % p:
                        return False
                    if (_ot(v, n, al, right, right, i, j, k, l)
                            - _ot(v, n, al, right, left, i, j, k, l)) % p:
                        return False
                    lhs = (_to(v, n, al, left, left, i, j, k, l)
                           - _ot(v, n, al, left, left, i, j, k, l))
                    rhs = (_to(v, n, al, right, left, j, i, k, l)
                           - _ot(v, n, al, left, right, j, i, k, l))
                    if (lhs - rhs) % p:
                        return False
                    lhs = (_to(v, n, al, right, right, i, j, k, l)
                           - _ot(v, n, al, right, right, i, j, k, l))
                    rhs = (_to(v, n, al, right, right, j, i, k, l)
                           - _ot(v, n, al, right, right, j, i, k, l))
                    if (lhs - rhs) % p:
                        return False
    return True


def passes(kind, v, n, p):
    """Does a flat candidate satisfy the kind's axiom system?"""
    _, offs, al = layout(kind, n)
    if kind == "hom-algebra":
        return _mult_ok(v, n, p, offs[0], al) and _homassoc_ok(v, n, p, offs[0], al)
    if kind == "hom-leibniz":
        return _leibniz_ok(v, n, p, offs[0], al)
    if kind == "hom-prelie":
        return _prelie_ok(v, n, p, offs[0], al)
    if kind == "hom-dialgebra":
        left, right = offs
        return (_mult_ok(v, n, p, left, al) and _mult_ok(v, n, p, right, al)
                and _homassoc_ok(v, n, p, left, al)
                and _homassoc_ok(v, n, p, right, al)
                and _dialgebra_axioms_ok(v, n, p, left, right, al))
    if kind == "hlsda":
        left, right = offs
        return _hlsda_ok(v, n, p, left, right, al)
    raise ValueError(f"unknown search kind {kind!r}")


def _candidates(fixed, p):
    """Yield flat candidates in lexicographic order over the free slots."""
    free = [i for i, x in enumerate(fixed) if x < 0]
    v = [x if x >= 0 else 0 for x in fixed]
    while True:
        yield v
        pos = len(free) - 1
        while pos >= 0:
            slot = free[pos]
            v[slot] += 1
            if v[slot] < p:
                break
            v[slot] = 0
            pos -= 1
        if pos < 0:
            return


def sweep(kind, n, p, fixed, cap):
    """Count all passing candidates; collect the first ``cap`` of them."""
    count = 0
    samples = []
    for v in _candidates(fixed, p):
        if passes(kind, v, n, p):
            count += 1
            if len(samples) < cap:
                samples.append(tuple(v))
    return count, samples


def audit(kind_a, kind_b, n, p, fixed):
    """Over all candidates: how many pass ``kind_a``, how many of those
    fail ``kind_b``, and the first such violation (or None)."""
    if KINDS[kind_a] != KINDS[kind_b]:
        raise ValueError("audit kinds must share one layout")
    count_a = 0
    violations = 0
    example = None
    for v in _candidates(fixed, p):
        if passes(kind_a, v, n, p):
            count_a += 1
            if not passes(kind_b, v, n, p):
                violations += 1
                if example is None:
                    example = tuple(v)
    return count_a, violations, example
