"""One checker per axiom family.

Every identity is evaluated on all basis tuples, which suffices because
both sides are multilinear in their arguments. A failed identity is
reported through a :class:`Witness` carrying the basis tuple and the two
exactly evaluated sides, so any failure can be replayed.

The same axiom suites drive the random-vector cross-check in
:mod:`homstruct.oracle`: each suite entry is an evaluator over arbitrary
vectors, and the checkers here simply run it on basis tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .errors import ShapeError
from .linalg import (apply_bilinear, apply_coproduct, basis_vector, bullet,
                     coproduct_on_left, coproduct_on_right, map_on_leg3,
                     outer, outer3_tv, outer3_vt, product_on_legs,
                     tensors_equal, zero_vector)
from .structures import (AffineStructure, DifferentialHomAlgebra, HLSDA,
                         HomAlgebra, HomBialgebra, HomCoalgebra, HomDialgebra,
                         HomLeibniz, HomPreLie, TwoHomStructure)

DEFAULT_WITNESS_CAP = 16

COUNIT_MODES = ("eq7", "eq8")  # squared-twist form vs plain-twist form


@dataclass(frozen=True)
class Witness:
    """A basis tuple where an identity fails, with both evaluated sides."""

    axiom: str
    at: tuple
    lhs: object
    rhs: object
    where: str = ""

    def label(self, basis=None):
        names = [basis[i] if basis else f"e{i + 1}" for i in self.at]
        loc = f"{self.where}: " if self.where else ""
        return f"{loc}{self.axiom} @ ({', '.join(names)})"


@dataclass(frozen=True)
class InfoNote:
    """A non-fatal observation (reported, never failing the verdict)."""

    name: str
    holds: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class Verdict:
    witnesses: tuple
    checked: tuple
    info: tuple = ()
    truncated: bool = False

    @property
    def passed(self) -> bool:
        return not self.witnesses

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failing_axioms(self) -> tuple:
        seen = []
        for w in self.witnesses:
            if w.axiom not in seen:
                seen.append(w.axiom)
        return tuple(seen)


@dataclass(frozen=True)
class AxiomTest:
    """An identity: ``evaluate(*vectors)`` returns the two sides."""

    axiom: str
    arity: int
    evaluate: Callable
    where: str = ""
    fatal: bool = True


# ---------------------------------------------------------------------------
# suite builders

def _algebra_tests(mu, alpha, unit, where=""):
    def mult(x, y):
        return alpha.apply(apply_bilinear(mu, x, y)), \
            apply_bilinear(mu, alpha.apply(x), alpha.apply(y))

    def homassoc(x, y, z):
        return apply_bilinear(mu, alpha.apply(x), apply_bilinear(mu, y, z)), \
            apply_bilinear(mu, apply_bilinear(mu, x, y), alpha.apply(z))

    tests = [AxiomTest("multiplicativity", 2, mult, where),
             AxiomTest("hom-associativity", 3, homassoc, where)]
    if unit is not None:
        tests += [
            AxiomTest("unit-left", 1,
                      lambda x: (apply_bilinear(mu, unit, x), x), where),
            AxiomTest("unit-right", 1,
                      lambda x: (apply_bilinear(mu, x, unit), x), where),
        ]
    return tests


def _coassoc_tests(delta, alpha, where=""):
    def comult(x):
        t = apply_coproduct(delta, x)
        return t.map_left(alpha).map_right(alpha), \
            apply_coproduct(delta, alpha.apply(x))

    def coassoc(x):
        t = apply_coproduct(delta, x)
        lhs = map_on_leg3(coproduct_on_right(t, delta), alpha, 0)
        rhs = map_on_leg3(coproduct_on_left(t, delta), alpha, 2)
        return lhs, rhs

    return [AxiomTest("comultiplicativity", 1, comult, where),
            AxiomTest("hom-coassociativity", 1, coassoc, where)]


def _counit_tests(delta, counit, alpha, counit_mode, where=""):
    if counit_mode not in COUNIT_MODES:
        raise ValueError(f"counit mode must be one of {COUNIT_MODES}")
    squared = counit_mode == "eq7"

    def target(x):
        ax = alpha.apply(x)
        return alpha.apply(ax) if squared else ax

    def left(x):
        t = apply_coproduct(delta, x)
        out = t.contract_left(counit)
        return (alpha.apply(out) if squared else out), target(x)

    def right(x):
        t = apply_coproduct(delta, x)
        out = t.contract_right(counit)
        return (alpha.apply(out) if squared else out), target(x)

    return [AxiomTest("counit-left", 1, left, where),
            AxiomTest("counit-right", 1, right, where)]


def _coalgebra_tests(delta, counit, alpha, counit_mode, where=""):
    tests = _coassoc_tests(delta, alpha, where)
    if counit is not None:
        tests += _counit_tests(delta, counit, alpha, counit_mode, where)
    return tests


def _compat_tests(mu, delta, counit, alpha, where=""):
    f = mu.field

    def coproduct_mult(x, y):
        lhs = apply_coproduct(delta, apply_bilinear(mu, x, y))
        rhs = bullet(mu, apply_coproduct(delta, x), apply_coproduct(delta, y))
        return lhs, rhs

    def counit_mult(x, y):
        lhs = counit.apply(apply_bilinear(mu, x, y))
        ex = counit.apply(x).coords[0]
        ey = counit.apply(y).coords[0]
        from .linalg import Vector
        return lhs, Vector(f, (f.mul(ex, ey),))

    def counit_twist(x):
        return counit.apply(alpha.apply(x)), counit.apply(x)

    return (_coassoc_tests(delta, alpha, where)[:1]  # comultiplicativity
            + [AxiomTest("coproduct-multiplicativity", 2, coproduct_mult, where),
               AxiomTest("counit-multiplicativity", 2, counit_mult, where),
               AxiomTest("counit-twist-invariance", 1, counit_twist, where)])


def _infinitesimal_test(mu, delta, alpha, where=""):
    def inf(x, y):
        lhs = apply_coproduct(delta, apply_bilinear(mu, x, y))
        ax, ay = alpha.apply(x), alpha.apply(y)
        first = product_on_legs(outer3_vt(ax, apply_coproduct(delta, y)),
                                mu, (0, 1)).map_right(alpha)
        second = product_on_legs(outer3_tv(apply_coproduct(delta, x), ay),
                                 mu, (1, 2)).map_left(alpha)
        third = outer(alpha.apply(ax), ay)
        return lhs, first.add(second).sub(third)

    return [AxiomTest("infinitesimal", 2, inf, where)]


def _dialgebra_axiom_tests(left, right, alpha, where=""):
    def inner_left(x, y, z):
        ax = alpha.apply(x)
        return apply_bilinear(left, ax, apply_bilinear(left, y, z)), \
            apply_bilinear(left, ax, apply_bilinear(right, y, z))

    def middle(x, y, z):
        return apply_bilinear(left, apply_bilinear(right, x, y), alpha.apply(z)), \
            apply_bilinear(right, alpha.apply(x), apply_bilinear(left, y, z))

    def inner_right(x, y, z):
        az = alpha.apply(z)
        return apply_bilinear(right, apply_bilinear(right, x, y), az), \
            apply_bilinear(right, apply_bilinear(left, x, y), az)

    return [AxiomTest("inner-irrelevance-left", 3, inner_left, where),
            AxiomTest("middle-exchange", 3, middle, where),
            AxiomTest("inner-irrelevance-right", 3, inner_right, where)]


def _leibniz_test(bracket, alpha, where=""):
    def leibniz(x, y, z):
        lhs = apply_bilinear(bracket, apply_bilinear(bracket, x, y),
                             alpha.apply(z))
        rhs = apply_bilinear(bracket, apply_bilinear(bracket, x, z),
                             alpha.apply(y)).add(
            apply_bilinear(bracket, alpha.apply(x),
                           apply_bilinear(bracket, y, z)))
        return lhs, rhs

    return [AxiomTest("leibniz", 3, leibniz, where)]


def _prelie_test(product, alpha, where=""):
    def left_symmetry(x, y, z):
        def assoc(u, v, w):
            return apply_bilinear(product, alpha.apply(u),
                                  apply_bilinear(product, v, w)).sub(
                apply_bilinear(product, apply_bilinear(product, u, v),
                               alpha.apply(w)))
        return assoc(x, y, z), assoc(y, x, z)

    return [AxiomTest("left-symmetry", 3, left_symmetry, where)]


def _hlsda_tests(left, right, alpha, where=""):
    base = _dialgebra_axiom_tests(left, right, alpha, where)

    def mixed(x, y, z):
        ax, ay, az = alpha.apply(x), alpha.apply(y), alpha.apply(z)
        lhs = apply_bilinear(left, ax, apply_bilinear(left, y, z)).sub(
            apply_bilinear(left, apply_bilinear(left, x, y), az))
        rhs = apply_bilinear(right, ay, apply_bilinear(left, x, z)).sub(
            apply_bilinear(left, apply_bilinear(right, y, x), az))
        return lhs, rhs

    def right_sym(x, y, z):
        ax, ay, az = alpha.apply(x), alpha.apply(y), alpha.apply(z)
        lhs = apply_bilinear(right, ax, apply_bilinear(right, y, z)).sub(
            apply_bilinear(right, apply_bilinear(right, x, y), az))
        rhs = apply_bilinear(right, ay, apply_bilinear(right, x, z)).sub(
            apply_bilinear(right, apply_bilinear(right, y, x), az))
        return lhs, rhs

    return [base[0], base[2],
            AxiomTest("left-symmetry-mixed", 3, mixed, where),
            AxiomTest("left-symmetry-right", 3, right_sym, where)]


def _affine_tests(a: AffineStructure, where=""):
    n1, n2 = a.nabla1, a.nabla2
    br = a.leibniz.bracket
    alpha = a.alpha

    def bracket_diff(x, y):
        return apply_bilinear(n2, x, y).sub(apply_bilinear(n1, y, x)), \
            apply_bilinear(br, x, y)

    def n1_inner(x, y, z):
        az = alpha.apply(z)
        return apply_bilinear(n1, apply_bilinear(n1, x, y), az), \
            apply_bilinear(n1, apply_bilinear(n2, x, y), az)

    def n2_inner(x, y, z):
        ax = alpha.apply(x)
        return apply_bilinear(n2, ax, apply_bilinear(n2, y, z)), \
            apply_bilinear(n2, ax, apply_bilinear(n1, y, z))

    def n2_bracket(x, y, z):
        lhs = apply_bilinear(n2, alpha.apply(x),
                             apply_bilinear(n2, y, z)).sub(
            apply_bilinear(n1, alpha.apply(y), apply_bilinear(n2, x, z)))
        return lhs, apply_bilinear(n2, apply_bilinear(br, x, y),
                                   alpha.apply(z))

    def n1_bracket(x, y, z):
        lhs = apply_bilinear(n1, alpha.apply(x),
                             apply_bilinear(n1, y, z)).sub(
            apply_bilinear(n1, alpha.apply(y), apply_bilinear(n1, x, z)))
        return lhs, apply_bilinear(n1, apply_bilinear(br, x, y),
                                   alpha.apply(z))

    return (_leibniz_test(br, alpha, where)
            + [AxiomTest("nabla-bracket-difference", 2, bracket_diff, where),
               AxiomTest("nabla1-inner-exchange", 3, n1_inner, where),
               AxiomTest("nabla2-inner-exchange", 3, n2_inner, where),
               AxiomTest("nabla2-bracket-rule", 3, n2_bracket, where),
               AxiomTest("nabla1-bracket-rule", 3, n1_bracket, where)])


def _differential_tests(dh: DifferentialHomAlgebra, where=""):
    mu, alpha, d = dh.mu, dh.alpha, dh.d
    n, f = dh.dim, dh.field

    def derivation(x, y):
        return d.apply(apply_bilinear(mu, x, y)), \
            apply_bilinear(mu, d.apply(x), y).add(
                apply_bilinear(mu, x, d.apply(y)))

    def square_zero(x):
        return d.apply(d.apply(x)), zero_vector(f, n)

    def twist_comm(x):
        return d.apply(alpha.apply(x)), alpha.apply(d.apply(x))

    return (_algebra_tests(mu, alpha, dh.unit, where)
            + [AxiomTest("derivation-rule", 2, derivation, where),
               AxiomTest("square-zero", 1, square_zero, where),
               AxiomTest("twist-commutation", 1, twist_comm, where)])


# ---------------------------------------------------------------------------
# suite drivers

def run_suite(structure_dim, field, tests, witness_cap=DEFAULT_WITNESS_CAP):
    """Evaluate every test on all basis tuples, in deterministic order."""
    witnesses = []
    checked = []
    info = []
    truncated = False
    basis = [basis_vector(field, structure_dim, i) for i in range(structure_dim)]
    for test in tests:
        key = f"{test.where}/{test.axiom}" if test.where else test.axiom
        if key not in checked:
            checked.append(key)
        local = []
        for at in itertools.product(range(structure_dim), repeat=test.arity):
            lhs, rhs = test.evaluate(*(basis[i] for i in at))
            if not tensors_equal(lhs, rhs):
                local.append(Witness(test.axiom, at, lhs, rhs, test.where))
                if test.fatal and len(witnesses) + len(local) >= witness_cap:
                    truncated = True
                    break
        if test.fatal:
            witnesses.extend(local)
            if truncated:
                break
        else:
            info.append(InfoNote(test.axiom, not local, tuple(local)))
    return Verdict(tuple(witnesses), tuple(checked), tuple(info), truncated)


def merge_verdicts(parts) -> Verdict:
    """Combine labelled sub-verdicts; fails iff any constituent fails."""
    witnesses, checked, info = [], [], []
    truncated = False
    for label, v in parts:
        for w in v.witnesses:
            where = f"{label}/{w.where}" if label and w.where else (label or w.where)
            witnesses.append(Witness(w.axiom, w.at, w.lhs, w.rhs, where))
        for c in v.checked:
            key = f"{label}/{c}" if label else c
            if key not in checked:
                checked.append(key)
        for note in v.info:
            name = f"{label}/{note.name}" if label else note.name
            info.append(InfoNote(name, note.holds, note.witnesses))
        truncated = truncated or v.truncated
    return Verdict(tuple(witnesses), tuple(checked), tuple(info), truncated)


# ---------------------------------------------------------------------------
# public checkers

def check_hom_algebra(a: HomAlgebra, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Multiplicativity and twisted associativity (plus the unit law when
    a unit is declared)."""
    tests = _algebra_tests(a.mu, a.alpha, a.unit)
    return run_suite(a.dim, a.field, tests, witness_cap)


def check_hom_coalgebra(c: HomCoalgebra, counit_mode="eq7",
                        witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Twisted coassociativity, comultiplicativity, and the counit law.

    Two counit conventions exist: ``eq7`` compares the contracted
    coproduct against the squared twist, ``eq8`` against the twist
    itself with identity legs.
    """
    tests = _coalgebra_tests(c.delta, c.counit, c.alpha, counit_mode)
    return run_suite(c.dim, c.field, tests, witness_cap)


def check_bialgebra_compat(b: HomBialgebra,
                           witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """The four compatibility identities making the coproduct and counit
    morphisms of twisted algebras."""
    tests = _compat_tests(b.mu, b.delta, b.counit, b.alpha)
    return run_suite(b.dim, b.field, tests, witness_cap)


def check_hom_bialgebra(b: HomBialgebra, counit_mode="eq7",
                        witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Full unital bialgebra suite: algebra + coalgebra + compatibility."""
    tests = (_algebra_tests(b.mu, b.alpha, b.unit)
             + _coassoc_tests(b.delta, b.alpha)[1:]  # coassociativity
             + _counit_tests(b.delta, b.counit, b.alpha, counit_mode)
             + _compat_tests(b.mu, b.delta, b.counit, b.alpha))
    return run_suite(b.dim, b.field, tests, witness_cap)


def check_infinitesimal(b: HomBialgebra, counit_mode="eq7",
                        witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """The twisted infinitesimal relation, with the underlying algebra and
    coalgebra axioms reported alongside as prerequisites."""
    tests = (_algebra_tests(b.mu, b.alpha, b.unit)
             + _coalgebra_tests(b.delta, b.counit, b.alpha, counit_mode)
             + _infinitesimal_test(b.mu, b.delta, b.alpha))
    return run_suite(b.dim, b.field, tests, witness_cap)


def check_dialgebra(d: HomDialgebra, strict_assoc=False,
                    witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Both products twisted-associative and multiplicative, plus the three
    bar-side axioms. ``strict_assoc`` demands plain associativity instead."""
    tests = []
    for name, p in (("left", d.left), ("right", d.right)):
        if strict_assoc:
            def strict(x, y, z, _p=p):
                return apply_bilinear(_p, x, apply_bilinear(_p, y, z)), \
                    apply_bilinear(_p, apply_bilinear(_p, x, y), z)
            tests.append(AxiomTest("associativity", 3, strict, name))
            tests.append(_algebra_tests(p, d.alpha, None, name)[0])
        else:
            tests.extend(_algebra_tests(p, d.alpha, None, name))
    tests.extend(_dialgebra_axiom_tests(d.left, d.right, d.alpha))
    return run_suite(d.dim, d.field, tests, witness_cap)


def check_differential(dh: DifferentialHomAlgebra,
                       witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Derivation rule, square-zero, and twist commutation over a passing
    twisted-associative algebra."""
    return run_suite(dh.dim, dh.field, _differential_tests(dh), witness_cap)


def check_hom_leibniz(l: HomLeibniz, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """The twisted Leibniz identity. Bracket multiplicativity under the
    twist and vanishing of self-brackets are reported as non-fatal info."""
    tests = _leibniz_test(l.bracket, l.alpha)
    mult = _algebra_tests(l.bracket, l.alpha, None)[0]
    tests.append(AxiomTest("bracket-multiplicativity", 2, mult.evaluate,
                           fatal=False))

    def self_zero(x):
        return apply_bilinear(l.bracket, x, x), zero_vector(l.field, l.dim)

    tests.append(AxiomTest("self-bracket-zero", 1, self_zero, fatal=False))
    return run_suite(l.dim, l.field, tests, witness_cap)


def check_hom_prelie(p: HomPreLie, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Left symmetry of twisted associators."""
    return run_suite(p.dim, p.field, _prelie_test(p.product, p.alpha),
                     witness_cap)


def check_hlsda(s: HLSDA, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """The four left-disymmetry identities."""
    return run_suite(s.dim, s.field, _hlsda_tests(s.left, s.right, s.alpha),
                     witness_cap)


def check_affine(a: AffineStructure, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Bracket compatibility and the four affine identities, with the
    underlying Leibniz check as a prerequisite."""
    return run_suite(a.dim, a.field, _affine_tests(a), witness_cap)


def check_morphism(f, src, dst, witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Does ``f`` intertwine every map the two structures carry?

    Products, the twist, and (when present on both sides) unit,
    coproducts, and counits must all commute with ``f``.
    """
    if src.kind != dst.kind:
        raise ShapeError(f"kind mismatch: {src.kind} vs {dst.kind}")
    if f.source_dim != src.dim or f.target_dim != dst.dim:
        raise ShapeError("morphism matrix shape does not match the structures")
    sp, dp = src.products(), dst.products()
    if set(sp) != set(dp):
        raise ShapeError("structures carry different product families")
    tests = []
    for name in sorted(sp):
        def intertwine(x, y, _s=sp[name], _d=dp[name]):
            return f.apply(apply_bilinear(_s, x, y)), \
                apply_bilinear(_d, f.apply(x), f.apply(y))
        tests.append(AxiomTest("product-intertwine", 2, intertwine, name))

    def twist(x):
        return f.apply(src.alpha.apply(x)), dst.alpha.apply(f.apply(x))

    tests.append(AxiomTest("twist-intertwine", 1, twist))
    if getattr(src, "unit", None) is not None and getattr(dst, "unit", None) is not None:
        tests.append(AxiomTest("unit-preserved", 0,
                               lambda: (f.apply(src.unit), dst.unit)))
    sq, dq = src.coproducts(), dst.coproducts()
    for name in sorted(set(sq) & set(dq)):
        def cop_intertwine(x, _s=sq[name], _d=dq[name]):
            return apply_coproduct(_s, x).map_left(f).map_right(f), \
                apply_coproduct(_d, f.apply(x))
        tests.append(AxiomTest("coproduct-intertwine", 1, cop_intertwine, name))
    se, de = src.counits(), dst.counits()
    for name in sorted(set(se) & set(de)):
        def counit_pres(x, _s=se[name], _d=de[name]):
            return _d.apply(f.apply(x)), _s.apply(x)
        tests.append(AxiomTest("counit-preserved", 1, counit_pres, name))
    return run_suite(src.dim, src.field, tests, witness_cap)


def classify_two_hom(s: TwoHomStructure) -> str:
    """Type tag by equality of the two products and the two coproducts."""
    same_mu = tensors_equal(s.mu1, s.mu2)
    d1 = s.delta1
    d2 = s.delta2 if s.delta2 is not None else s.delta1
    same_delta = True if d1 is None else tensors_equal(d1, d2)
    return f"({1 if same_mu else 2}-{1 if same_delta else 2})"


def check_composite(kind: str, s, counit_mode="eq7",
                    witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Aggregate the constituent checks a composite kind demands."""
    if isinstance(s, HomBialgebra) and kind == "2-hom-bialgebra":
        s = TwoHomStructure("2-hom-bialgebra", s.mu, s.mu, s.alpha, s.unit,
                            s.delta, s.delta, s.counit, s.counit)
    if not isinstance(s, TwoHomStructure):
        raise ShapeError(f"composite check needs a two-product structure, "
                         f"got {type(s).__name__}")
    if kind != s.variant:
        raise ShapeError(f"kind mismatch: structure is {s.variant}, "
                         f"check asked for {kind}")
    parts = []
    if kind == "2-hom-assoc-algebra":
        for name, mu in (("mu1", s.mu1), ("mu2", s.mu2)):
            v = run_suite(s.dim, s.field,
                          _algebra_tests(mu, s.alpha, s.unit), witness_cap)
            parts.append((name, v))
    elif kind == "2-hom-assoc-bialgebra":
        parts.append(("mu1+delta",
                      check_hom_bialgebra(s.view(1, 1), counit_mode, witness_cap)))
        parts.append(("mu2+delta",
                      check_infinitesimal(s.view(2, 1), counit_mode, witness_cap)))
    elif kind == "2-hom-bialgebra":
        for i in (1, 2):
            for j in (1, 2):
                parts.append((f"mu{i}+delta{j}",
                              check_hom_bialgebra(s.view(i, j), counit_mode,
                                                  witness_cap)))
    elif kind == "2-2-hom-bialgebra":
        parts.append(("mu1+delta1",
                      check_hom_bialgebra(s.view(1, 1), counit_mode, witness_cap)))
        parts.append(("mu2+delta2",
                      check_hom_bialgebra(s.view(2, 2), counit_mode, witness_cap)))
        parts.append(("mu1+delta2",
                      check_infinitesimal(s.view(1, 2), counit_mode, witness_cap)))
        parts.append(("mu2+delta1",
                      check_infinitesimal(s.view(2, 1), counit_mode, witness_cap)))
    else:
        raise ShapeError(f"unknown composite kind {kind!r}")
    merged = merge_verdicts(parts)
    if kind in ("2-hom-bialgebra", "2-2-hom-bialgebra"):
        note = InfoNote(f"type {classify_two_hom(s)}", True)
        merged = Verdict(merged.witnesses, merged.checked,
                         merged.info + (note,), merged.truncated)
    return merged


# ---------------------------------------------------------------------------
# registry: check id -> (structure predicate, runner, suite builder)

def suite_for(check_id: str, s, counit_mode="eq7", strict_assoc=False):
    """The flat list of axiom tests a check would run on ``s``.

    Used by the random-vector oracle so that cross-checks exercise the
    same identities the basis checker evaluated.
    """
    if check_id == "hom-algebra":
        return _algebra_tests(s.mu, s.alpha, s.unit)
    if check_id == "hom-coalgebra":
        return _coalgebra_tests(s.delta, s.counit, s.alpha, counit_mode)
    if check_id == "bialgebra-compat":
        return _compat_tests(s.mu, s.delta, s.counit, s.alpha)
    if check_id == "hom-bialgebra":
        return (_algebra_tests(s.mu, s.alpha, s.unit)
                + _coassoc_tests(s.delta, s.alpha)[1:]
                + _counit_tests(s.delta, s.counit, s.alpha, counit_mode)
                + _compat_tests(s.mu, s.delta, s.counit, s.alpha))
    if check_id == "infinitesimal":
        return (_algebra_tests(s.mu, s.alpha, s.unit)
                + _coalgebra_tests(s.delta, s.counit, s.alpha, counit_mode)
                + _infinitesimal_test(s.mu, s.delta, s.alpha))
    if check_id == "hom-dialgebra":
        tests = []
        for name, p in (("left", s.left), ("right", s.right)):
            if strict_assoc:
                def strict(x, y, z, _p=p):
                    return apply_bilinear(_p, x, apply_bilinear(_p, y, z)), \
                        apply_bilinear(_p, apply_bilinear(_p, x, y), z)
                tests.append(AxiomTest("associativity", 3, strict, name))
                tests.append(_algebra_tests(p, s.alpha, None, name)[0])
            else:
                tests.extend(_algebra_tests(p, s.alpha, None, name))
        return tests + _dialgebra_axiom_tests(s.left, s.right, s.alpha)
    if check_id == "differential":
        return _differential_tests(s)
    if check_id == "hom-leibniz":
        return _leibniz_test(s.bracket, s.alpha)
    if check_id == "hom-prelie":
        return _prelie_test(s.product, s.alpha)
    if check_id == "hlsda":
        return _hlsda_tests(s.left, s.right, s.alpha)
    if check_id == "affine":
        return _affine_tests(s)
    if check_id in ("2-hom-assoc-algebra", "2-hom-assoc-bialgebra",
                    "2-hom-bialgebra", "2-2-hom-bialgebra"):
        return _composite_suite(check_id, s, counit_mode)
    raise ValueError(f"unknown check id {check_id!r}")


def _composite_suite(kind, s, counit_mode):
    def relabel(tests, label):
        return [AxiomTest(t.axiom, t.arity, t.evaluate,
                          f"{label}/{t.where}" if t.where else label, t.fatal)
                for t in tests]

    out = []
    if kind == "2-hom-assoc-algebra":
        out += relabel(_algebra_tests(s.mu1, s.alpha, s.unit), "mu1")
        out += relabel(_algebra_tests(s.mu2, s.alpha, s.unit), "mu2")
        return out
    if kind == "2-hom-assoc-bialgebra":
        out += relabel(suite_for("hom-bialgebra", s.view(1, 1), counit_mode),
                       "mu1+delta")
        out += relabel(suite_for("infinitesimal", s.view(2, 1), counit_mode),
                       "mu2+delta")
        return out
    if kind == "2-hom-bialgebra":
        for i in (1, 2):
            for j in (1, 2):
                out += relabel(suite_for("hom-bialgebra", s.view(i, j),
                                         counit_mode), f"mu{i}+delta{j}")
        return out
    out += relabel(suite_for("hom-bialgebra", s.view(1, 1), counit_mode),
                   "mu1+delta1")
    out += relabel(suite_for("hom-bialgebra", s.view(2, 2), counit_mode),
                   "mu2+delta2")
    out += relabel(suite_for("infinitesimal", s.view(1, 2), counit_mode),
                   "mu1+delta2")
    out += relabel(suite_for("infinitesimal", s.view(2, 1), counit_mode),
                   "mu2+delta1")
    return out


def run_check(check_id: str, s, counit_mode="eq7", strict_assoc=False,
              witness_cap=DEFAULT_WITNESS_CAP) -> Verdict:
    """Run a check selected by id (the CLI entry point into this module)."""
    if check_id == "hom-algebra":
        return check_hom_algebra(s, witness_cap)
    if check_id == "hom-coalgebra":
        return check_hom_coalgebra(s, counit_mode, witness_cap)
    if check_id == "bialgebra-compat":
        return check_bialgebra_compat(s, witness_cap)
    if check_id == "hom-bialgebra":
        return check_hom_bialgebra(s, counit_mode, witness_cap)
    if check_id == "infinitesimal":
        return check_infinitesimal(s, counit_mode, witness_cap)
    if check_id == "hom-dialgebra":
        return check_dialgebra(s, strict_assoc, witness_cap)
    if check_id == "differential":
        return check_differential(s, witness_cap)
    if check_id == "hom-leibniz":
        return check_hom_leibniz(s, witness_cap)
    if check_id == "hom-prelie":
        return check_hom_prelie(s, witness_cap)
    if check_id == "hlsda":
        return check_hlsda(s, witness_cap)
    if check_id == "affine":
        return check_affine(s, witness_cap)
    if check_id in ("2-hom-assoc-algebra", "2-hom-assoc-bialgebra",
                    "2-hom-bialgebra", "2-2-hom-bialgebra"):
        return check_composite(check_id, s, counit_mode, witness_cap)
    raise ValueError(f"unknown check id {check_id!r}")


CHECK_IDS = (
    "hom-algebra", "hom-coalgebra", "bialgebra-compat", "hom-bialgebra",
    "infinitesimal", "hom-dialgebra", "differential", "hom-leibniz",
    "hom-prelie", "hlsda", "affine",
    "2-hom-assoc-algebra", "2-hom-assoc-bialgebra", "2-hom-bialgebra",
    "2-2-hom-bialgebra",
)
