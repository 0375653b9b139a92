"""Exact vectors, linear maps, structure-constant tensors and the
multilinear calculus used to state every axiom.

Conventions fixed here and shared by the whole package:

* ``LinearMap`` stores an m-by-n matrix whose column j is the image of
  the j-th source basis vector.
* ``ProductTensor`` stores c[i][j][k] with mu(e_i, e_j) = sum_k c[i][j][k] e_k.
* ``CoproductTensor`` stores d[k][i][j] with delta(e_k) =
  sum_{i,j} d[k][i][j] e_i (x) e_j (output index first).
* The basis of a tensor square V (x) W is ordered lexicographically with
  the left factor major: e_i (x) f_j comes at position i*dim(W) + j.

All values are immutable after construction and every operation is a
pure function, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ShapeError
from .fields import require_same_field


@dataclass(frozen=True)
class Vector:
    field: object
    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))

    @property
    def dim(self):
        return len(self.coords)

    def add(self, other: "Vector") -> "Vector":
        _same_dim(self, other)
        f = require_same_field(self.field, other.field)
        return Vector(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def sub(self, other: "Vector") -> "Vector":
        _same_dim(self, other)
        f = require_same_field(self.field, other.field)
        return Vector(f, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Vector":
        f = self.field
        return Vector(f, tuple(f.mul(c, a) for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == self.field.zero for a in self.coords)


def zero_vector(field, n: int) -> Vector:
    return Vector(field, (field.zero,) * n)


def basis_vector(field, n: int, i: int) -> Vector:
    if not 0 <= i < n:
        raise ShapeError(f"basis index {i} out of range for dimension {n}")
    return Vector(field, tuple(field.one if j == i else field.zero for j in range(n)))


@dataclass(frozen=True)
class LinearMap:
    """An m-by-n matrix over one field; column j is the image of e_j."""

    field: object
    rows: tuple  # m rows, each a tuple of n scalars

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ShapeError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @property
    def target_dim(self):
        return len(self.rows)

    @property
    def source_dim(self):
        return len(self.rows[0]) if self.rows else 0

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def apply(self, v: Vector) -> Vector:
        if v.dim != self.source_dim:
            raise ShapeError(f"map expects dimension {self.source_dim}, got {v.dim}")
        f = require_same_field(self.field, v.field)
        out = []
        for row in self.rows:
            acc = f.zero
            for a, x in zip(row, v.coords):
                acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return Vector(f, tuple(out))

    def column(self, j: int) -> Vector:
        return Vector(self.field, tuple(row[j] for row in self.rows))

    def is_identity(self) -> bool:
        n, m = self.source_dim, self.target_dim
        if n != m:
            return False
        one, zero = self.field.one, self.field.zero
        return all(self.rows[i][j] == (one if i == j else zero)
                   for i in range(n) for j in range(n))


def identity_map(field, n: int) -> LinearMap:
    one, zero = field.one, field.zero
    return LinearMap(field, tuple(tuple(one if i == j else zero for j in range(n))
                                  for i in range(n)))


def map_from_columns(field, columns) -> LinearMap:
    cols = [tuple(c) for c in columns]
    if not cols:
        raise ShapeError("no columns")
    m = len(cols[0])
    if any(len(c) != m for c in cols):
        raise ShapeError("ragged columns")
    return LinearMap(field, tuple(tuple(col[i] for col in cols) for i in range(m)))


def compose(f: LinearMap, g: LinearMap) -> LinearMap:
    """Matrix product f.g, i.e. the map x -> f(g(x))."""
    if f.source_dim != g.target_dim:
        raise ShapeError(f"cannot compose {f.target_dim}x{f.source_dim} "
                         f"with {g.target_dim}x{g.source_dim}")
    k = require_same_field(f.field, g.field)
    rows = []
    for i in range(f.target_dim):
        row = []
        for j in range(g.source_dim):
            acc = k.zero
            for m in range(f.source_dim):
                acc = k.add(acc, k.mul(f.rows[i][m], g.rows[m][j]))
            row.append(acc)
        rows.append(tuple(row))
    return LinearMap(k, tuple(rows))


def kron(f: LinearMap, g: LinearMap) -> LinearMap:
    """Kronecker product acting on the lexicographically ordered tensor basis."""
    k = require_same_field(f.field, g.field)
    mf, nf = f.target_dim, f.source_dim
    mg, ng = g.target_dim, g.source_dim
    rows = []
    for i1 in range(mf):
        for i2 in range(mg):
            row = []
            for j1 in range(nf):
                for j2 in range(ng):
                    row.append(k.mul(f.rows[i1][j1], g.rows[i2][j2]))
            rows.append(tuple(row))
    return LinearMap(k, tuple(rows))


@dataclass(frozen=True)
class ProductTensor:
    """Structure constants of a bilinear product on an n-dimensional space."""

    field: object
    c: tuple  # c[i][j][k]

    def __post_init__(self):
        c = tuple(tuple(tuple(k) for k in j) for j in self.c)
        n = len(c)
        if any(len(j) != n for j in c) or any(len(k) != n for j in c for k in j):
            raise ShapeError("product tensor must be n x n x n")
        object.__setattr__(self, "c", c)

    @property
    def dim(self):
        return len(self.c)

    def entry(self, i: int, j: int, k: int):
        return self.c[i][j][k]


@dataclass(frozen=True)
class CoproductTensor:
    """Structure constants of a comultiplication, output index first."""

    field: object
    d: tuple  # d[k][i][j]

    def __post_init__(self):
        d = tuple(tuple(tuple(j) for j in i) for i in self.d)
        n = len(d)
        if any(len(i) != n for i in d) or any(len(j) != n for i in d for j in i):
            raise ShapeError("coproduct tensor must be n x n x n")
        object.__setattr__(self, "d", d)

    @property
    def dim(self):
        return len(self.d)

    def entry(self, k: int, i: int, j: int):
        return self.d[k][i][j]


@dataclass(frozen=True)
class Tensor2:
    """An element of V (x) W as a dim(V) x dim(W) coefficient matrix."""

    field: object
    entries: tuple  # entries[i][j]

    def __post_init__(self):
        e = tuple(tuple(r) for r in self.entries)
        if e and any(len(r) != len(e[0]) for r in e):
            raise ShapeError("ragged tensor square")
        object.__setattr__(self, "entries", e)

    @property
    def shape(self):
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    def add(self, other: "Tensor2") -> "Tensor2":
        _same_shape(self, other)
        f = require_same_field(self.field, other.field)
        return Tensor2(f, tuple(tuple(f.add(a, b) for a, b in zip(ra, rb))
                                for ra, rb in zip(self.entries, other.entries)))

    def sub(self, other: "Tensor2") -> "Tensor2":
        _same_shape(self, other)
        f = require_same_field(self.field, other.field)
        return Tensor2(f, tuple(tuple(f.sub(a, b) for a, b in zip(ra, rb))
                                for ra, rb in zip(self.entries, other.entries)))

    def map_left(self, g: LinearMap) -> "Tensor2":
        """Apply g to the left tensor leg."""
        n, m = self.shape
        if g.source_dim != n:
            raise ShapeError("left leg dimension mismatch")
        f = require_same_field(self.field, g.field)
        out = []
        for a in range(g.target_dim):
            row = []
            for j in range(m):
                acc = f.zero
                for i in range(n):
                    acc = f.add(acc, f.mul(g.rows[a][i], self.entries[i][j]))
                row.append(acc)
            out.append(tuple(row))
        return Tensor2(f, tuple(out))

    def map_right(self, g: LinearMap) -> "Tensor2":
        """Apply g to the right tensor leg."""
        n, m = self.shape
        if g.source_dim != m:
            raise ShapeError("right leg dimension mismatch")
        f = require_same_field(self.field, g.field)
        out = []
        for i in range(n):
            row = []
            for b in range(g.target_dim):
                acc = f.zero
                for j in range(m):
                    acc = f.add(acc, f.mul(g.rows[b][j], self.entries[i][j]))
                row.append(acc)
            out.append(tuple(row))
        return Tensor2(f, tuple(out))

    def contract_left(self, functional: LinearMap) -> Vector:
        """Contract the left leg with a 1-by-n functional, leaving a vector."""
        n, m = self.shape
        if functional.target_dim != 1 or functional.source_dim != n:
            raise ShapeError("functional must be 1 x left-dim")
        f = require_same_field(self.field, functional.field)
        row = functional.rows[0]
        return Vector(f, tuple(
            _dot(f, row, tuple(self.entries[i][j] for i in range(n)))
            for j in range(m)))

    def contract_right(self, functional: LinearMap) -> Vector:
        n, m = self.shape
        if functional.target_dim != 1 or functional.source_dim != m:
            raise ShapeError("functional must be 1 x right-dim")
        f = require_same_field(self.field, functional.field)
        row = functional.rows[0]
        return Vector(f, tuple(_dot(f, row, self.entries[i]) for i in range(n)))

    def is_zero(self) -> bool:
        z = self.field.zero
        return all(e == z for row in self.entries for e in row)


@dataclass(frozen=True)
class Tensor3:
    """An element of V (x) V (x) V as a cubical coefficient array."""

    field: object
    entries: tuple  # entries[i][j][k]

    def __post_init__(self):
        e = tuple(tuple(tuple(k) for k in j) for j in self.entries)
        object.__setattr__(self, "entries", e)

    def add(self, other: "Tensor3") -> "Tensor3":
        f = require_same_field(self.field, other.field)
        return Tensor3(f, tuple(
            tuple(tuple(f.add(a, b) for a, b in zip(ra, rb))
                  for ra, rb in zip(pa, pb))
            for pa, pb in zip(self.entries, other.entries)))

    def sub(self, other: "Tensor3") -> "Tensor3":
        f = require_same_field(self.field, other.field)
        return Tensor3(f, tuple(
            tuple(tuple(f.sub(a, b) for a, b in zip(ra, rb))
                  for ra, rb in zip(pa, pb))
            for pa, pb in zip(self.entries, other.entries)))


def outer(x: Vector, y: Vector) -> Tensor2:
    f = require_same_field(x.field, y.field)
    return Tensor2(f, tuple(tuple(f.mul(a, b) for b in y.coords) for a in x.coords))


def outer3_vt(x: Vector, t: Tensor2) -> Tensor3:
    """x (x) t as an element of V (x) V (x) V."""
    f = require_same_field(x.field, t.field)
    return Tensor3(f, tuple(
        tuple(tuple(f.mul(a, t.entries[i][j]) for j in range(t.shape[1]))
              for i in range(t.shape[0]))
        for a in x.coords))


def outer3_tv(t: Tensor2, z: Vector) -> Tensor3:
    """t (x) z as an element of V (x) V (x) V."""
    f = require_same_field(t.field, z.field)
    return Tensor3(f, tuple(
        tuple(tuple(f.mul(t.entries[i][j], c) for c in z.coords)
              for j in range(t.shape[1]))
        for i in range(t.shape[0])))


def apply_bilinear(p: ProductTensor, x: Vector, y: Vector) -> Vector:
    """Evaluate the bilinear product at (x, y)."""
    if p.dim != x.dim or p.dim != y.dim:
        raise ShapeError(f"product dimension {p.dim} does not match vectors "
                         f"{x.dim}, {y.dim}")
    f = require_same_field(p.field, x.field, y.field)
    n = p.dim
    out = [f.zero] * n
    for i in range(n):
        a = x.coords[i]
        if a == f.zero:
            continue
        for j in range(n):
            b = y.coords[j]
            if b == f.zero:
                continue
            ab = f.mul(a, b)
            row = p.c[i][j]
            for k in range(n):
                if row[k] != f.zero:
                    out[k] = f.add(out[k], f.mul(ab, row[k]))
    return Vector(f, tuple(out))


def apply_coproduct(q: CoproductTensor, x: Vector) -> Tensor2:
    """Evaluate the comultiplication at x, as an element of V (x) V."""
    if q.dim != x.dim:
        raise ShapeError(f"coproduct dimension {q.dim} does not match vector {x.dim}")
    f = require_same_field(q.field, x.field)
    n = q.dim
    acc = [[f.zero] * n for _ in range(n)]
    for k in range(n):
        c = x.coords[k]
        if c == f.zero:
            continue
        plane = q.d[k]
        for i in range(n):
            for j in range(n):
                if plane[i][j] != f.zero:
                    acc[i][j] = f.add(acc[i][j], f.mul(c, plane[i][j]))
    return Tensor2(f, tuple(tuple(row) for row in acc))


def bullet(p: ProductTensor, a: Tensor2, b: Tensor2) -> Tensor2:
    """Componentwise product on V (x) V:
    (x (x) y) . (x' (x) y') = mu(x, x') (x) mu(y, y')."""
    n = p.dim
    if a.shape != (n, n) or b.shape != (n, n):
        raise ShapeError("bullet operands must match the product dimension")
    f = require_same_field(p.field, a.field, b.field)
    out = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            u = a.entries[i][j]
            if u == f.zero:
                continue
            for i2 in range(n):
                for j2 in range(n):
                    v = b.entries[i2][j2]
                    if v == f.zero:
                        continue
                    uv = f.mul(u, v)
                    row_l = p.c[i][i2]
                    row_r = p.c[j][j2]
                    for k in range(n):
                        cl = row_l[k]
                        if cl == f.zero:
                            continue
                        for m in range(n):
                            cr = row_r[m]
                            if cr != f.zero:
                                out[k][m] = f.add(out[k][m],
                                                  f.mul(uv, f.mul(cl, cr)))
    return Tensor2(f, tuple(tuple(row) for row in out))


def product_on_legs(t: Tensor3, p: ProductTensor, legs) -> Tensor2:
    """Contract two adjacent legs of a cube with a product.

    ``legs=(0, 1)`` turns sum T_ijk e_i(x)e_j(x)e_k into
    sum T_ijk mu(e_i,e_j)(x)e_k; ``legs=(1, 2)`` acts on the right pair.
    """
    f = require_same_field(t.field, p.field)
    n = p.dim
    out = [[f.zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = t.entries[i][j][k]
                if v == f.zero:
                    continue
                if legs == (0, 1):
                    row = p.c[i][j]
                    for m in range(n):
                        if row[m] != f.zero:
                            out[m][k] = f.add(out[m][k], f.mul(v, row[m]))
                elif legs == (1, 2):
                    row = p.c[j][k]
                    for m in range(n):
                        if row[m] != f.zero:
                            out[i][m] = f.add(out[i][m], f.mul(v, row[m]))
                else:
                    raise ShapeError(f"legs must be (0, 1) or (1, 2), got {legs}")
    return Tensor2(f, tuple(tuple(row) for row in out))


def map_on_leg3(t: Tensor3, g: LinearMap, leg: int) -> Tensor3:
    """Apply a linear map to one leg of a cube."""
    f = require_same_field(t.field, g.field)
    n = g.source_dim
    m = g.target_dim
    e = t.entries
    if leg == 0:
        return Tensor3(f, tuple(
            tuple(tuple(_dot(f, tuple(g.rows[a][i] for i in range(n)),
                             tuple(e[i][j][k] for i in range(n)))
                        for k in range(len(e[0][0])))
                  for j in range(len(e[0])))
            for a in range(m)))
    if leg == 1:
        return Tensor3(f, tuple(
            tuple(tuple(_dot(f, tuple(g.rows[b][j] for j in range(n)),
                             tuple(e[i][j][k] for j in range(n)))
                        for k in range(len(e[0][0])))
                  for b in range(m))
            for i in range(len(e))))
    if leg == 2:
        return Tensor3(f, tuple(
            tuple(tuple(_dot(f, g.rows[c2], e[i][j])
                        for c2 in range(m))
                  for j in range(len(e[0])))
            for i in range(len(e))))
    raise ShapeError(f"leg must be 0, 1 or 2, got {leg}")


def coproduct_on_left(t: Tensor2, q: CoproductTensor) -> Tensor3:
    """(delta (x) id) applied to an element of V (x) V."""
    f = require_same_field(t.field, q.field)
    n = q.dim
    out = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            v = t.entries[i][k]
            if v == f.zero:
                continue
            plane = q.d[i]
            for a in range(n):
                for b in range(n):
                    if plane[a][b] != f.zero:
                        out[a][b][k] = f.add(out[a][b][k], f.mul(v, plane[a][b]))
    return Tensor3(f, tuple(tuple(tuple(r) for r in pl) for pl in out))


def coproduct_on_right(t: Tensor2, q: CoproductTensor) -> Tensor3:
    """(id (x) delta) applied to an element of V (x) V."""
    f = require_same_field(t.field, q.field)
    n = q.dim
    out = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            v = t.entries[i][k]
            if v == f.zero:
                continue
            plane = q.d[k]
            for a in range(n):
                for b in range(n):
                    if plane[a][b] != f.zero:
                        out[i][a][b] = f.add(out[i][a][b], f.mul(v, plane[a][b]))
    return Tensor3(f, tuple(tuple(tuple(r) for r in pl) for pl in out))


def tensors_equal(a, b) -> bool:
    """Exact entrywise equality for any two values of one shape and field."""
    if type(a) is not type(b):
        raise ShapeError(f"cannot compare {type(a).__name__} with {type(b).__name__}")
    require_same_field(a.field, b.field)
    if isinstance(a, Vector):
        if a.dim != b.dim:
            raise ShapeError("vector dimensions differ")
        return a.coords == b.coords
    if isinstance(a, LinearMap):
        if (a.source_dim, a.target_dim) != (b.source_dim, b.target_dim):
            raise ShapeError("map shapes differ")
        return a.rows == b.rows
    if isinstance(a, ProductTensor):
        if a.dim != b.dim:
            raise ShapeError("product dimensions differ")
        return a.c == b.c
    if isinstance(a, CoproductTensor):
        if a.dim != b.dim:
            raise ShapeError("coproduct dimensions differ")
        return a.d == b.d
    if isinstance(a, Tensor2):
        if a.shape != b.shape:
            raise ShapeError("tensor shapes differ")
        return a.entries == b.entries
    if isinstance(a, Tensor3):
        return a.entries == b.entries
    raise ShapeError(f"unsupported type {type(a).__name__}")


def product_from_basis_values(field, n: int, value_at) -> ProductTensor:
    """Build a product tensor from a callable giving mu(e_i, e_j) as a Vector."""
    c = []
    for i in range(n):
        plane = []
        for j in range(n):
            v = value_at(i, j)
            if v.dim != n:
                raise ShapeError("basis value has wrong dimension")
            plane.append(tuple(v.coords))
        c.append(tuple(plane))
    return ProductTensor(field, tuple(c))


def coproduct_from_basis_values(field, n: int, value_at) -> CoproductTensor:
    """Build a coproduct tensor from a callable giving delta(e_k) as a Tensor2."""
    d = []
    for k in range(n):
        t = value_at(k)
        if t.shape != (n, n):
            raise ShapeError("basis value has wrong shape")
        d.append(tuple(tuple(row) for row in t.entries))
    return CoproductTensor(field, tuple(d))


def _dot(f, xs, ys):
    acc = f.zero
    for a, b in zip(xs, ys):
        acc = f.add(acc, f.mul(a, b))
    return acc


def _same_dim(a: Vector, b: Vector):
    if a.dim != b.dim:
        raise ShapeError(f"dimension mismatch: {a.dim} vs {b.dim}")


def _same_shape(a: Tensor2, b: Tensor2):
    if a.shape != b.shape:
        raise ShapeError(f"shape mismatch: {a.shape} vs {b.shape}")
