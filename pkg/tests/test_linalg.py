import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import homstruct as hs
from homstruct.errors import ShapeError
from homstruct.fields import PrimeField
from homstruct.linalg import (apply_bilinear, apply_coproduct, bullet,
                              compose, kron, outer, tensors_equal)

from conftest import F, lmap, vec


class TestApplyBilinear:
    def test_basis_value_from_table(self, hom3dim):
        # the (e1, e3) entry of the 3-dim table is 2*e3
        out = apply_bilinear(hom3dim.mu, vec([1, 0, 0]), vec([0, 0, 1]))
        assert out.coords == vec([0, 0, 2]).coords

    def test_zero_vector_annihilates(self, hom3dim):
        zero = hs.zero_vector(F, 3)
        out = apply_bilinear(hom3dim.mu, zero, vec([1, 1, 1]))
        assert out.is_zero()

    def test_bilinear_expansion(self, hom3dim):
        # (e1 + e2, e3) expands to 2*e3 + 2*e3
        out = apply_bilinear(hom3dim.mu, vec([1, 1, 0]), vec([0, 0, 1]))
        assert out.coords == vec([0, 0, 4]).coords

    def test_dimension_mismatch(self, hom3dim):
        with pytest.raises(ShapeError):
            apply_bilinear(hom3dim.mu, vec([1, 0]), vec([0, 0, 1]))

    def test_mixed_fields_rejected(self, hom3dim):
        gf = PrimeField(2)
        x = hs.Vector(gf, (1, 0, 0))
        with pytest.raises(Exception):
            apply_bilinear(hom3dim.mu, x, x)

    def test_agrees_with_multilinear_extension(self, hom3dim):
        rng = random.Random(7)
        pool = [Fraction(k) for k in range(-2, 3)]
        basis = [hs.basis_vector(F, 3, i) for i in range(3)]
        for _ in range(20):
            x = vec([rng.choice(pool) for _ in range(3)])
            y = vec([rng.choice(pool) for _ in range(3)])
            direct = apply_bilinear(hom3dim.mu, x, y)
            expanded = hs.zero_vector(F, 3)
            for i in range(3):
                for j in range(3):
                    term = apply_bilinear(hom3dim.mu, basis[i], basis[j])
                    expanded = expanded.add(
                        term.scale(F.mul(x.coords[i], y.coords[j])))
            assert tensors_equal(direct, expanded)


class TestApplyCoproduct:
    def test_basis_value(self, coalg2dim):
        t = apply_coproduct(coalg2dim.delta, vec([1, 0]))
        assert t.entries == ((F.zero, F.zero), (F.zero, F.one))

    def test_zero(self, coalg2dim):
        assert apply_coproduct(coalg2dim.delta, vec([0, 0])).is_zero()

    def test_linearity(self, coalg2dim):
        t = apply_coproduct(coalg2dim.delta, vec([1, 1]))
        assert t.entries[1][1] == F.coerce(2)


class TestComposeKron:
    def test_kron_identities(self):
        id2 = hs.identity_map(F, 2)
        assert kron(id2, id2).rows == hs.identity_map(F, 4).rows

    def test_collapse_map_is_idempotent(self):
        alpha = lmap([[0, 0], [1, 1]])
        assert compose(alpha, alpha).rows == alpha.rows

    def test_kron_action_on_elementary_tensor(self):
        alpha = lmap([[0, 0], [1, 1]])
        e1e1 = hs.Vector(F, (F.one, F.zero, F.zero, F.zero))
        out = kron(alpha, alpha).apply(e1e1)
        # the image is e2 (x) e2, the last slot in lexicographic order
        assert out.coords == (F.zero, F.zero, F.zero, F.one)

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(-3, 3), min_size=16, max_size=16),
           st.lists(st.integers(-3, 3), min_size=16, max_size=16))
    def test_kron_multiplicative(self, a_entries, b_entries):
        def as_map(entries):
            rows = [entries[i * 4:(i + 1) * 4][:2] for i in range(2)]
            other = [entries[8 + i * 2:10 + i * 2] for i in range(2)]
            return lmap(rows), lmap(other)

        f, h = as_map(a_entries)
        g, k = as_map(b_entries)
        lhs = compose(kron(f, g), kron(h, k))
        rhs = kron(compose(f, h), compose(g, k))
        assert tensors_equal(lhs, rhs)

    def test_lexicographic_ordering_consistent(self):
        f = lmap([[1, 2], [3, 4]])
        g = lmap([[0, 1], [1, 1]])
        for i in range(2):
            for j in range(2):
                e = hs.zero_vector(F, 4)
                coords = list(e.coords)
                coords[i * 2 + j] = F.one
                flat = kron(f, g).apply(hs.Vector(F, tuple(coords)))
                expected = outer(f.apply(hs.basis_vector(F, 2, i)),
                                 g.apply(hs.basis_vector(F, 2, j)))
                unflat = tuple(flat.coords[a * 2 + b]
                               for a in range(2) for b in range(2))
                assert unflat == tuple(x for row in expected.entries
                                       for x in row)

    def test_compose_shape_mismatch(self):
        with pytest.raises(ShapeError):
            compose(lmap([[1, 0]]), lmap([[1, 0]]))


class TestTensorsEqual:
    def test_reflexive(self, hom3dim):
        assert tensors_equal(hom3dim.mu, hom3dim.mu)

    def test_canonical_rationals(self):
        a = vec(["1/2", 0])
        b = vec(["2/4", 0])
        assert tensors_equal(a, b)

    def test_opposite_of_noncommutative_differs(self, hom3dim):
        from homstruct.constructions import opposite
        assert not tensors_equal(hom3dim.mu, opposite(hom3dim.mu))

    def test_shape_mismatch_raises(self):
        with pytest.raises(ShapeError):
            tensors_equal(vec([1, 0]), vec([1, 0, 0]))
        with pytest.raises(ShapeError):
            tensors_equal(vec([1, 0]), lmap([[1, 0]]))


def test_map_on_leg_matches_elementary_tensors(half):
    from homstruct.linalg import map_on_leg3, outer3_vt, outer
    g = lmap([[0, 1], [1, half]])
    x, y, z = vec([1, 2]), vec([3, 0]), vec([0, 5])
    cube = outer3_vt(x, outer(y, z))
    for leg, (a, b, c) in ((0, (g.apply(x), y, z)),
                           (1, (x, g.apply(y), z)),
                           (2, (x, y, g.apply(z)))):
        got = map_on_leg3(cube, g, leg)
        expected = outer3_vt(a, outer(b, c))
        assert tensors_equal(got, expected)


def test_bullet_matches_componentwise_products(z2group):
    mu = z2group.mu
    a = outer(vec([1, 1]), vec([1, 0]))
    b = outer(vec([0, 1]), vec([1, 1]))
    got = bullet(mu, a, b)
    expected = outer(apply_bilinear(mu, vec([1, 1]), vec([0, 1])),
                     apply_bilinear(mu, vec([1, 0]), vec([1, 1])))
    assert tensors_equal(got, expected)
