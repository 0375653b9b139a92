"""Exhaustive enumeration of small structures over prime fields, and
brute-force morphism search between small structures.

Enumeration walks every assignment of the free structure constants in
lexicographic order (first flat slot most significant) and keeps those
satisfying the kind's axiom system. The hot loop runs in the compiled
kernel when available and in the pure-Python twin otherwise; streams are
identical either way, so runs are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _kernels
from ._kernels import pykern
from .axioms import check_morphism
from .errors import BudgetExceededError, FieldMismatchError, ShapeError
from .fields import PrimeField, require_same_field
from .linalg import LinearMap, ProductTensor, basis_vector
from .structures import (HLSDA, HomAlgebra, HomDialgebra, HomLeibniz,
                         HomPreLie, Morphism)

RAW_CANDIDATE_BUDGET = 2 ** 32

SEARCH_KINDS = tuple(pykern.KINDS)


@dataclass(frozen=True)
class SearchSpec:
    """What to enumerate: an axiom system, a dimension and a prime, with
    optional pinned structure constants and a unit requirement."""

    kind: str
    dim: int
    prime: int
    fixed: Optional[dict] = None  # section name -> nested array with None holes
    require_unit: bool = False
    cap: int = 256  # structures to materialize; the count is always exact


@dataclass(frozen=True)
class SearchResult:
    count: int
    structures: tuple
    kernel: str
    spec: SearchSpec


@dataclass(frozen=True)
class AuditResult:
    """Outcome of sweeping one axiom system against another."""

    count: int          # candidates passing kind_a
    violations: int     # of those, how many fail kind_b
    example: object     # first violating structure, or None
    kernel: str


def _sections(kind):
    names = ["mu"] if pykern.KINDS[kind] == 1 else ["mu", "mu2"]
    return names + ["alpha"]


def _flat_template(spec: SearchSpec):
    """Merge unit prefill and user-pinned entries into the flat pattern."""
    n, p = spec.dim, spec.prime
    gf = PrimeField(p)  # validates primality
    total, offs, alpha_off = pykern.layout(spec.kind, n)
    fixed = [-1] * total

    def pin(pos, value):
        value = gf.coerce(value)
        if fixed[pos] >= 0 and fixed[pos] != value:
            raise ShapeError("conflicting pinned values for one slot")
        fixed[pos] = value

    if spec.require_unit:
        for off in offs:
            for j in range(n):
                for k in range(n):
                    pin(off + (0 * n + j) * n + k, 1 if j == k else 0)
                    pin(off + (j * n + 0) * n + k, 1 if j == k else 0)
    user = spec.fixed or {}
    names = _sections(spec.kind)
    for section, array in user.items():
        if section not in names:
            raise ShapeError(f"unknown section {section!r} for kind {spec.kind}")
        if section == "alpha":
            for i in range(n):
                for j in range(n):
                    val = array[i][j]
                    if val is not None:
                        pin(alpha_off + i * n + j, val)
        else:
            off = offs[0] if section == "mu" else offs[1]
            for i in range(n):
                for j in range(n):
                    for k in range(n):
                        val = array[i][j][k]
                        if val is not None:
                            pin(off + (i * n + j) * n + k, val)
    return fixed, offs, alpha_off


def _budget_or_raise(fixed, p):
    free = sum(1 for x in fixed if x < 0)
    raw = p ** free
    if raw > RAW_CANDIDATE_BUDGET:
        raise BudgetExceededError(
            f"{raw} raw candidates exceed the budget of {RAW_CANDIDATE_BUDGET}")
    return raw


def structure_from_flat(kind, flat, n, p, with_unit=False):
    """Materialize a kernel candidate as a checkable structure."""
    gf = PrimeField(p)
    _, offs, alpha_off = pykern.layout(kind, n)

    def tensor(off):
        return ProductTensor(gf, tuple(
            tuple(tuple(flat[off + (i * n + j) * n + k] for k in range(n))
                  for j in range(n))
            for i in range(n)))

    alpha = LinearMap(gf, tuple(
        tuple(flat[alpha_off + i * n + j] for j in range(n))
        for i in range(n)))
    unit = basis_vector(gf, n, 0) if with_unit else None
    if kind == "hom-algebra":
        return HomAlgebra(tensor(offs[0]), alpha, unit)
    if kind == "hom-leibniz":
        return HomLeibniz(tensor(offs[0]), alpha)
    if kind == "hom-prelie":
        return HomPreLie(tensor(offs[0]), alpha)
    if kind == "hom-dialgebra":
        return HomDialgebra(tensor(offs[0]), tensor(offs[1]), alpha)
    if kind == "hlsda":
        return HLSDA(tensor(offs[0]), tensor(offs[1]), alpha)
    raise ValueError(f"unknown search kind {kind!r}")


def enumerate_structures(spec: SearchSpec, kernel: str = "auto") -> SearchResult:
    """All structures over GF(prime) passing the kind's axiom system.

    Returns the exact count and the first ``spec.cap`` structures in
    lexicographic order of their flattened constants.
    """
    if spec.kind not in SEARCH_KINDS:
        raise ValueError(f"unknown search kind {spec.kind!r}; "
                         f"choose from {SEARCH_KINDS}")
    fixed, _, _ = _flat_template(spec)
    _budget_or_raise(fixed, spec.prime)
    kern = _kernels.get_kernel(kernel)
    count, samples = kern.sweep(spec.kind, spec.dim, spec.prime, fixed, spec.cap)
    structures = tuple(
        structure_from_flat(spec.kind, s, spec.dim, spec.prime,
                            spec.require_unit)
        for s in samples)
    return SearchResult(count, structures, kern.NAME, spec)


def audit_inclusion(kind_a: str, kind_b: str, dim: int, prime: int,
                    kernel: str = "auto") -> AuditResult:
    """Sweep the common candidate space of two axiom systems, counting
    candidates that pass ``kind_a`` and, among them, those failing
    ``kind_b``; materializes the first violation."""
    if pykern.KINDS.get(kind_a) != pykern.KINDS.get(kind_b):
        raise ValueError("audit kinds must share one candidate layout")
    total, _, _ = pykern.layout(kind_a, dim)
    fixed = [-1] * total
    _budget_or_raise(fixed, prime)
    kern = _kernels.get_kernel(kernel)
    count, violations, example = kern.audit(kind_a, kind_b, dim, prime, fixed)
    structure = None
    if example is not None:
        structure = structure_from_flat(kind_a, example, dim, prime)
    return AuditResult(count, violations, structure, kern.NAME)


def group_by_isomorphism(structures) -> list:
    """Optional post-pass: group enumerated structures into orbits under
    invertible intertwiners (no quotient is taken by default).

    Quadratic in the number of structures and exponential in the matrix
    slots, so only sensible at desk scale; the budget guard still applies
    through the morphism search.
    """
    structures = list(structures)
    orbits = []
    for s in structures:
        placed = False
        for orbit in orbits:
            if _isomorphic(orbit[0], s):
                orbit.append(s)
                placed = True
                break
        if not placed:
            orbits.append([s])
    return orbits


def _isomorphic(a, b) -> bool:
    if a.dim != b.dim:
        return False
    gf = require_same_field(a.field, b.field)
    for m in find_morphisms(a, b):
        if _invertible(m.f, gf):
            return True
    return False


def _invertible(f: LinearMap, gf: PrimeField) -> bool:
    n = f.source_dim
    rows = [list(r) for r in f.rows]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] % gf.p), None)
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = gf.inv(rows[col][col])
        for r in range(n):
            if r != col and rows[r][col]:
                factor = gf.mul(rows[r][col], inv)
                rows[r] = [gf.sub(x, gf.mul(factor, y))
                           for x, y in zip(rows[r], rows[col])]
    return True


def find_morphisms(src, dst, cap: Optional[int] = None) -> list:
    """All matrices over the shared prime field intertwining both
    structures, in lexicographic order; includes the zero map whenever it
    qualifies and the identity for equal structures."""
    gf = require_same_field(src.field, dst.field)
    if not isinstance(gf, PrimeField):
        raise FieldMismatchError("morphism search needs a prime field")
    if src.kind != dst.kind:
        raise ShapeError(f"kind mismatch: {src.kind} vs {dst.kind}")
    n, m = src.dim, dst.dim
    p = gf.p
    slots = n * m
    if p ** slots > RAW_CANDIDATE_BUDGET:
        raise BudgetExceededError(
            f"{p ** slots} candidate matrices exceed the budget")
    out = []
    digits = [0] * slots
    while True:
        f = LinearMap(gf, tuple(
            tuple(digits[i * n + j] for j in range(n)) for i in range(m)))
        if check_morphism(f, src, dst, witness_cap=1).passed:
            out.append(Morphism(f, src, dst))
            if cap is not None and len(out) >= cap:
                return out
        pos = slots - 1
        while pos >= 0:
            digits[pos] += 1
            if digits[pos] < p:
                break
            digits[pos] = 0
            pos -= 1
        if pos < 0:
            return out
