# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernel: identical semantics to pykern, C speed.

See pykern's module docstring for the flat candidate layout and the two
contraction helpers. Streams and counts must match pykern bit for bit.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

NAME = "compiled"

KINDS = {
    "hom-algebra": 1,
    "hom-leibniz": 1,
    "hom-prelie": 1,
    "hom-dialgebra": 2,
    "hlsda": 2,
}

_KIND_IDS = {
    "hom-algebra": 0,
    "hom-leibniz": 1,
    "hom-prelie": 2,
    "hom-dialgebra": 3,
    "hlsda": 4,
}


def layout(kind, n):
    products = KINDS[kind]
    offs = tuple(i * n ** 3 for i in range(products))
    alpha_off = products * n ** 3
    return alpha_off + n * n, offs, alpha_off


cdef inline long _ot(int* v, int n, int al, int outer, int inner,
                     int i, int j, int k, int l) noexcept:
    cdef long acc = 0
    cdef int base = inner + (i * n + j) * n
    cdef int m, b, row
    cdef long cm, bk
    for m in range(n):
        cm = v[base + m]
        if cm == 0:
            continue
        row = outer + m * n * n
        for b in range(n):
            bk = v[al + b * n + k]
            if bk != 0:
                acc += cm * bk * v[row + b * n + l]
    return acc


cdef inline long _to(int* v, int n, int al, int outer, int inner,
                     int i, int j, int k, int l) noexcept:
    cdef long acc = 0
    cdef int base = inner + (j * n + k) * n
    cdef int a, m, row
    cdef long ai, cm
    for a in range(n):
        ai = v[al + a * n + i]
        if ai == 0:
            continue
        row = outer + a * n * n
        for m in range(n):
            cm = v[base + m]
            if cm != 0:
                acc += ai * cm * v[row + m * n + l]
    return acc


cdef bint _mult_ok(int* v, int n, int p, int mu, int al) noexcept:
    cdef int i, j, k, m, a, b, base, arow, block
    cdef long lhs, rhs, ai, bj
    for i in range(n):
        for j in range(n):
            base = mu + (i * n + j) * n
            for k in range(n):
                lhs = 0
                arow = al + k * n
                for m in range(n):
                    lhs += (<long>v[arow + m]) * v[base + m]
                rhs = 0
                for a in range(n):
                    ai = v[al + a * n + i]
                    if ai == 0:
                        continue
                    block = mu + a * n * n
                    for b in range(n):
                        bj = v[al + b * n + j]
                        if bj != 0:
                            rhs += ai * bj * v[block + b * n + k]
                if (lhs - rhs) % p != 0:
                    return False
    return True


cdef bint _homassoc_ok(int* v, int n, int p, int mu, int al) noexcept:
    cdef int i, j, k, l
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, mu, mu, i, j, k, l)
                            - _ot(v, n, al, mu, mu, i, j, k, l)) % p != 0:
                        return False
    return True


cdef bint _leibniz_ok(int* v, int n, int p, int br, int al) noexcept:
    cdef int i, j, k, l
    cdef long t1, t2, t3
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    t1 = _ot(v, n, al, br, br, i, j, k, l)
                    t2 = _ot(v, n, al, br, br, i, k, j, l)
                    t3 = _to(v, n, al, br, br, i, j, k, l)
                    if (t1 - t2 - t3) % p != 0:
                        return False
    return True


cdef bint _prelie_ok(int* v, int n, int p, int mu, int al) noexcept:
    cdef int i, j, k, l
    cdef long lhs, rhs
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    lhs = (_to(v, n, al, mu, mu, i, j, k, l)
                           - _ot(v, n, al, mu, mu, i, j, k, l))
                    rhs = (_to(v, n, al, mu, mu, j, i, k, l)
                           - _ot(v, n, al, mu, mu, j, i, k, l))
                    if (lhs - rhs) % p != 0:
                        return False
    return True


cdef bint _dialgebra_axioms_ok(int* v, int n, int p, int left, int right,
                               int al) noexcept:
    cdef int i, j, k, l
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, left, left, i, j, k, l)
                            - _to(v, n, al, left, right, i, j, k, l)) % p != 0:
                        return False
                    if (_ot(v, n, al, left, right, i, j, k, l)
                            - _to(v, n, al, right, left, i, j, k, l)) % p != 0:
                        return False
                    if (_ot(v, n, al, right, right, i, j, k, l)
                            - _ot(v, n, al, right, left, i, j, k, l)) % p != 0:
                        return False
    return True


cdef bint _hlsda_ok(int* v, int n, int p, int left, int right, int al) noexcept:
    cdef int i, j, k, l
    cdef long lhs, rhs
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if (_to(v, n, al, left, left, i, j, k, l)
                            - _to(v, n, al, left, right, i, j, k, l)) % p != 0:
                        return False
                    if (_ot(v, n, al, right, right, i, j, k, l)
                            - _ot(v, n, al, right, left, i, j, k, l)) % p != 0:
                        return False
                    lhs = (_to(v, n, al, left, left, i, j, k, l)
                           - _ot(v, n, al, left, left, i, j, k, l))
                    rhs = (_to(v, n, al, right, left, j, i, k, l)
                           - _ot(v, n, al, left, right, j, i, k, l))
                    if (lhs - rhs) % p != 0:
                        return False
                    lhs = (_to(v, n, al, right, right, i, j, k, l)
                           - _ot(v, n, al, right, right, i, j, k, l))
                    rhs = (_to(v, n, al, right, right, j, i, k, l)
                           - _ot(v, n, al, right, right, j, i, k, l))
                    if (lhs - rhs) % p != 0:
                        return False
    return True


cdef bint _passes(int kind_id, int* v, int n, int p, int off2, int al) noexcept:
    if kind_id == 0:
        return _mult_ok(v, n, p, 0, al) and _homassoc_ok(v, n, p, 0, al)
    if kind_id == 1:
        return _leibniz_ok(v, n, p, 0, al)
    if kind_id == 2:
        return _prelie_ok(v, n, p, 0, al)
    if kind_id == 3:
        return (_mult_ok(v, n, p, 0, al) and _mult_ok(v, n, p, off2, al)
                and _homassoc_ok(v, n, p, 0, al)
                and _homassoc_ok(v, n, p, off2, al)
                and _dialgebra_axioms_ok(v, n, p, 0, off2, al))
    return _hlsda_ok(v, n, p, 0, off2, al)


cdef class _Cursor:
    """C odometer over the free slots of a fixed-pattern candidate."""

    cdef int* v
    cdef int* free_slots
    cdef int total, nfree, p
    cdef bint exhausted

    def __cinit__(self, fixed, int p):
        cdef int total = len(fixed)
        self.total = total
        self.p = p
        self.v = <int*>malloc(total * sizeof(int))
        self.free_slots = <int*>malloc(total * sizeof(int))
        if self.v == NULL or self.free_slots == NULL:
            raise MemoryError()
        cdef int i, x
        self.nfree = 0
        for i in range(total):
            x = fixed[i]
            if x < 0:
                self.v[i] = 0
                self.free_slots[self.nfree] = i
                self.nfree += 1
            else:
                self.v[i] = x
        self.exhausted = False

    cdef bint advance(self) noexcept:
        cdef int pos = self.nfree - 1
        cdef int slot
        while pos >= 0:
            slot = self.free_slots[pos]
            self.v[slot] += 1
            if self.v[slot] < self.p:
                return True
            self.v[slot] = 0
            pos -= 1
        return False

    def __dealloc__(self):
        if self.v != NULL:
            free(self.v)
        if self.free_slots != NULL:
            free(self.free_slots)


def sweep(kind, int n, int p, fixed, cap):
    """Count all passing candidates; collect the first ``cap`` of them."""
    cdef int kind_id = _KIND_IDS[kind]
    cdef int off2 = n * n * n
    cdef int al = KINDS[kind] * n * n * n
    cdef _Cursor cur = _Cursor(fixed, p)
    cdef long count = 0
    cdef long capv = cap
    cdef int t
    samples = []
    while True:
        if _passes(kind_id, cur.v, n, p, off2, al):
            count += 1
            if len(samples) < capv:
                samples.append(tuple(cur.v[t] for t in range(cur.total)))
        if not cur.advance():
            break
    return count, samples


def audit(kind_a, kind_b, int n, int p, fixed):
    """Over all candidates: count passing ``kind_a``, count those failing
    ``kind_b``, and return the first violation (or None)."""
    cdef int id_a = _KIND_IDS[kind_a]
    cdef int id_b = _KIND_IDS[kind_b]
    if KINDS[kind_a] != KINDS[kind_b]:
        raise ValueError("audit kinds must share one layout")
    cdef int off2 = n * n * n
    cdef int al = KINDS[kind_a] * n * n * n
    cdef _Cursor cur = _Cursor(fixed, p)
    cdef long count_a = 0, violations = 0
    cdef int t
    example = None
    while True:
        if _passes(id_a, cur.v, n, p, off2, al):
            count_a += 1
            if not _passes(id_b, cur.v, n, p, off2, al):
                violations += 1
                if example is None:
                    example = tuple(cur.v[t] for t in range(cur.total))
        if not cur.advance():
            break
    return count_a, violations, example


def passes(kind, v, int n, int p):
    """Single-candidate predicate (for parity tests against pykern)."""
    cdef int kind_id = _KIND_IDS[kind]
    cdef int off2 = n * n * n
    cdef int al = KINDS[kind] * n * n * n
    cdef int total = len(v)
    cdef int* buf = <int*>malloc(total * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    try:
        for i in range(total):
            buf[i] = v[i]
        return bool(_passes(kind_id, buf, n, p, off2, al))
    finally:
        free(buf)
