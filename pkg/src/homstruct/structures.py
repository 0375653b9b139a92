"""Tagged records for every algebraic species handled by the toolkit,
plus structural validation.

Validation is purely structural: shapes, uniform field mode, and the
declared unit really acting as a two-sided unit. Axiom checking lives in
:mod:`homstruct.axioms`. Findings carry a severity so that advisory
conditions (for example a twist map that does not fix the unit, which
blocks the unit-adjoining constructions but is otherwise legal) surface
as warnings rather than defects.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import MissingMapError
from .fields import require_same_field
from .linalg import (CoproductTensor, LinearMap, ProductTensor, Vector,
                     apply_bilinear, basis_vector, tensors_equal)

TWO_HOM_VARIANTS = (
    "2-hom-assoc-algebra",
    "2-hom-assoc-bialgebra",
    "2-hom-bialgebra",
    "2-2-hom-bialgebra",
)


@dataclass(frozen=True)
class HomAlgebra:
    mu: ProductTensor
    alpha: LinearMap
    unit: Optional[Vector] = None

    kind = "hom-algebra"

    @property
    def dim(self):
        return self.mu.dim

    @property
    def field(self):
        return self.mu.field

    def products(self):
        return {"mu": self.mu}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class HomCoalgebra:
    delta: CoproductTensor
    alpha: LinearMap
    counit: Optional[LinearMap] = None

    kind = "hom-coalgebra"
    unit = None

    @property
    def dim(self):
        return self.delta.dim

    @property
    def field(self):
        return self.delta.field

    def products(self):
        return {}

    def coproducts(self):
        return {"delta": self.delta}

    def counits(self):
        return {"counit": self.counit} if self.counit is not None else {}


@dataclass(frozen=True)
class HomBialgebra:
    mu: ProductTensor
    unit: Vector
    delta: CoproductTensor
    counit: LinearMap
    alpha: LinearMap

    kind = "hom-bialgebra"

    @property
    def dim(self):
        return self.mu.dim

    @property
    def field(self):
        return self.mu.field

    def products(self):
        return {"mu": self.mu}

    def coproducts(self):
        return {"delta": self.delta}

    def counits(self):
        return {"counit": self.counit}

    def algebra(self) -> HomAlgebra:
        return HomAlgebra(self.mu, self.alpha, self.unit)

    def coalgebra(self) -> HomCoalgebra:
        return HomCoalgebra(self.delta, self.alpha, self.counit)


@dataclass(frozen=True)
class TwoHomStructure:
    """One space carrying two products (and possibly two coproducts).

    The four variants share the product pair and the twist; which
    coalgebra maps must be present depends on the variant. Bialgebra
    views (mu_i with delta_j) are materialized on demand via
    :meth:`view`, never stored.
    """

    variant: str
    mu1: ProductTensor
    mu2: ProductTensor
    alpha: LinearMap
    unit: Optional[Vector] = None
    delta1: Optional[CoproductTensor] = None
    delta2: Optional[CoproductTensor] = None
    counit1: Optional[LinearMap] = None
    counit2: Optional[LinearMap] = None

    @property
    def kind(self):
        return self.variant

    @property
    def dim(self):
        return self.mu1.dim

    @property
    def field(self):
        return self.mu1.field

    def products(self):
        return {"mu1": self.mu1, "mu2": self.mu2}

    def coproducts(self):
        out = {}
        if self.delta1 is not None:
            out["delta1"] = self.delta1
        if self.delta2 is not None:
            out["delta2"] = self.delta2
        return out

    def counits(self):
        out = {}
        if self.counit1 is not None:
            out["counit1"] = self.counit1
        if self.counit2 is not None:
            out["counit2"] = self.counit2
        return out

    def view(self, which_mu: int, which_delta: int) -> HomBialgebra:
        """The bialgebra view (mu_i, delta_j, counit_j)."""
        mu = self.mu1 if which_mu == 1 else self.mu2
        delta = self.delta1 if which_delta == 1 else self.delta2
        counit = self.counit1 if which_delta == 1 else self.counit2
        if self.unit is None or delta is None or counit is None:
            raise MissingMapError(
                f"view ({which_mu}, {which_delta}) needs a unit, a "
                f"comultiplication and a counit")
        return HomBialgebra(mu, self.unit, delta, counit, self.alpha)


@dataclass(frozen=True)
class HomDialgebra:
    left: ProductTensor
    right: ProductTensor
    alpha: LinearMap

    kind = "hom-dialgebra"
    unit = None

    @property
    def dim(self):
        return self.left.dim

    @property
    def field(self):
        return self.left.field

    def products(self):
        return {"left": self.left, "right": self.right}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class DifferentialHomAlgebra:
    algebra: HomAlgebra
    d: LinearMap

    kind = "differential-hom-algebra"

    @property
    def mu(self):
        return self.algebra.mu

    @property
    def alpha(self):
        return self.algebra.alpha

    @property
    def unit(self):
        return self.algebra.unit

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def field(self):
        return self.algebra.field

    def products(self):
        return {"mu": self.mu}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class HomLeibniz:
    bracket: ProductTensor
    alpha: LinearMap

    kind = "hom-leibniz"
    unit = None

    @property
    def dim(self):
        return self.bracket.dim

    @property
    def field(self):
        return self.bracket.field

    def products(self):
        return {"bracket": self.bracket}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class HomPreLie:
    product: ProductTensor
    alpha: LinearMap

    kind = "hom-prelie"
    unit = None

    @property
    def dim(self):
        return self.product.dim

    @property
    def field(self):
        return self.product.field

    def products(self):
        return {"product": self.product}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class HLSDA:
    """Hom-left-symmetric dialgebra: two products, four twisted identities."""

    left: ProductTensor
    right: ProductTensor
    alpha: LinearMap

    kind = "hlsda"
    unit = None

    @property
    def dim(self):
        return self.left.dim

    @property
    def field(self):
        return self.left.field

    def products(self):
        return {"left": self.left, "right": self.right}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class AffineStructure:
    """A pair of bilinear maps compatible with a hom-Leibniz bracket."""

    nabla1: ProductTensor
    nabla2: ProductTensor
    leibniz: HomLeibniz

    kind = "affine-hom-leibniz"
    unit = None

    @property
    def alpha(self):
        return self.leibniz.alpha

    @property
    def dim(self):
        return self.nabla1.dim

    @property
    def field(self):
        return self.nabla1.field

    def products(self):
        return {"nabla1": self.nabla1, "nabla2": self.nabla2,
                "bracket": self.leibniz.bracket}

    def coproducts(self):
        return {}

    def counits(self):
        return {}


@dataclass(frozen=True)
class Morphism:
    """A linear map between two structures of the same kind."""

    f: LinearMap
    src: object
    dst: object


@dataclass(frozen=True)
class Finding:
    code: str
    severity: str  # "defect" | "warning"
    message: str

    def __str__(self):
        return f"[{self.severity}] {self.code}: {self.message}"


def validate(s) -> list:
    """Structural audit. Returns all findings; defects mean the structure
    is unusable, warnings record advisory conditions. Pure and idempotent."""
    findings = []
    try:
        n = s.dim
    except (AttributeError, IndexError):
        return [Finding("shape", "defect", "structure has no coherent dimension")]

    fields = []
    maps = {}
    maps.update(s.products())
    for name, q in s.coproducts().items():
        maps[name] = q
    for name, t in maps.items():
        fields.append((name, t.field))
        if t.dim != n:
            findings.append(Finding("shape", "defect",
                                    f"{name} has dimension {t.dim}, expected {n}"))
    alpha = s.alpha
    fields.append(("alpha", alpha.field))
    if alpha.source_dim != n or alpha.target_dim != n:
        findings.append(Finding("shape", "defect",
                                f"alpha is {alpha.target_dim}x{alpha.source_dim}, "
                                f"expected {n}x{n}"))
    for name, eps in s.counits().items():
        fields.append((name, eps.field))
        if eps.target_dim != 1 or eps.source_dim != n:
            findings.append(Finding("shape", "defect",
                                    f"{name} is {eps.target_dim}x{eps.source_dim}, "
                                    f"expected 1x{n}"))
    unit = getattr(s, "unit", None)
    if unit is not None:
        fields.append(("unit", unit.field))
        if unit.dim != n:
            findings.append(Finding("shape", "defect",
                                    f"unit has dimension {unit.dim}, expected {n}"))
    if isinstance(s, DifferentialHomAlgebra):
        fields.append(("d", s.d.field))
        if s.d.source_dim != n or s.d.target_dim != n:
            findings.append(Finding("shape", "defect", "d must be n x n"))
    if isinstance(s, AffineStructure) and s.leibniz.dim != n:
        findings.append(Finding("shape", "defect",
                                "affine maps must match the bracket dimension"))
    try:
        require_same_field(*(f for _, f in fields))
    except Exception:
        modes = sorted({f.name for _, f in fields})
        findings.append(Finding("field-mode", "defect",
                                f"mixed field modes: {', '.join(modes)}"))

    if isinstance(s, TwoHomStructure):
        findings.extend(_validate_variant(s))

    if any(f.severity == "defect" for f in findings):
        return findings  # shape problems make the unit check meaningless

    if unit is not None:
        findings.extend(_validate_unit(s, unit))
    return findings


def _validate_variant(s: TwoHomStructure):
    out = []
    if s.variant not in TWO_HOM_VARIANTS:
        out.append(Finding("variant", "defect", f"unknown variant {s.variant!r}"))
        return out
    need = {
        "2-hom-assoc-algebra": (),
        "2-hom-assoc-bialgebra": ("unit", "delta1", "counit1"),
        "2-hom-bialgebra": ("unit", "delta1", "delta2", "counit1", "counit2"),
        "2-2-hom-bialgebra": ("unit", "delta1", "delta2", "counit1", "counit2"),
    }[s.variant]
    for field_name in need:
        if getattr(s, field_name) is None:
            out.append(Finding("missing-map", "defect",
                               f"variant {s.variant} requires {field_name}"))
    return out


def _validate_unit(s, unit: Vector):
    """Check the declared unit on the basis (enough, by bilinearity)."""
    out = []
    n = s.dim
    f = s.field
    for name, p in s.products().items():
        if isinstance(s, AffineStructure):
            break  # affine maps carry no unit law
        for i in range(n):
            e = basis_vector(f, n, i)
            left = apply_bilinear(p, unit, e)
            right = apply_bilinear(p, e, unit)
            if not tensors_equal(left, e):
                out.append(Finding("unit", "defect",
                                   f"{name}(unit, e{i + 1}) = {left.coords}, "
                                   f"expected e{i + 1}"))
            if not tensors_equal(right, e):
                out.append(Finding("unit", "defect",
                                   f"{name}(e{i + 1}, unit) = {right.coords}, "
                                   f"expected e{i + 1}"))
    if not out:
        alpha_u = s.alpha.apply(unit)
        if not tensors_equal(alpha_u, unit):
            out.append(Finding("unit-not-fixed", "warning",
                               "twist does not fix the unit; structure is not "
                               "eligible for the unit-adjoining constructions"))
        if not _is_basis_vector(unit):
            out.append(Finding("unit-not-basis", "warning",
                               "unit is not a basis vector; the second "
                               "unit-adjoining construction needs one"))
    return out


def _is_basis_vector(v: Vector) -> bool:
    one, zero = v.field.one, v.field.zero
    return (sum(1 for c in v.coords if c == one) == 1
            and all(c in (one, zero) for c in v.coords))


def unit_basis_index(s) -> Optional[int]:
    """Index of the unit if it is a basis vector, else None."""
    unit = getattr(s, "unit", None)
    if unit is None or not _is_basis_vector(unit):
        return None
    return next(i for i, c in enumerate(unit.coords) if c == unit.field.one)


def is_valid(s) -> bool:
    return not any(f.severity == "defect" for f in validate(s))


def is_unit_extension_eligible(s) -> bool:
    """True when the structure is unital and its twist fixes the unit."""
    unit = getattr(s, "unit", None)
    if unit is None:
        return False
    return tensors_equal(s.alpha.apply(unit), unit)


def unit_vector(s) -> Vector:
    """The stored unit eta(1); raises if the structure declares none."""
    unit = getattr(s, "unit", None)
    if unit is None:
        raise MissingMapError(f"{s.kind} structure declares no unit")
    return unit


def counit_map(s) -> LinearMap:
    """The stored counit; raises if the structure declares none."""
    counits = s.counits()
    if not counits:
        raise MissingMapError(f"{s.kind} structure declares no counit")
    if "counit" in counits:
        return counits["counit"]
    return counits[sorted(counits)[0]]
