import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constel.arith import INFINITY
from constel.errors import MathDomainError, PointOnBoundaryError
from constel.softpoints import (
    DeltaSupport3,
    GeneralDeltaQ,
    P1PointQ,
    campana_abc_bound_check,
    campana_abc_bound_exact,
    enumerate_soft_points,
    is_soft_integral_3pt,
    is_soft_integral_general,
    is_soft_integral_weighted,
)

import _oracles

D222 = DeltaSupport3(2, 2, 2)


def std_support(m=2):
    return GeneralDeltaQ(((P1PointQ(0, 1), m), (P1PointQ(1, 1), m), (P1PointQ(1, 0), m)))


class TestP1PointQ:
    def test_canonicalization(self):
        assert (P1PointQ(9, 25).a, P1PointQ(9, 25).c) == (9, 25)
        assert (P1PointQ(-3, -6).a, P1PointQ(-3, -6).c) == (1, 2)
        assert (P1PointQ(4, -6).a, P1PointQ(4, -6).c) == (-2, 3)
        assert (P1PointQ(-5, 0).a, P1PointQ(-5, 0).c) == (1, 0)
        assert P1PointQ(7, 0).is_infinity

    def test_b_coordinate(self):
        assert P1PointQ(9, 25).b == 16
        assert P1PointQ(-8, 1).b == 9

    def test_rejects_origin(self):
        with pytest.raises(ValueError):
            P1PointQ(0, 0)


class TestSoft3pt:
    def test_examples(self):
        assert is_soft_integral_3pt(P1PointQ(9, 25), D222)
        assert is_soft_integral_3pt(P1PointQ(1, 9), D222)  # b = 8 = 2^3
        assert not is_soft_integral_3pt(P1PointQ(2, 3), D222)

    def test_boundary_points_rejected(self):
        for pt in (P1PointQ(0, 1), P1PointQ(1, 1), P1PointQ(1, 0)):
            with pytest.raises(PointOnBoundaryError):
                is_soft_integral_3pt(pt, D222)
            with pytest.raises(PointOnBoundaryError):
                is_soft_integral_3pt(pt, DeltaSupport3(INFINITY, INFINITY, INFINITY))

    def test_infinite_multiplicity_demands_units(self):
        dinf = DeltaSupport3(INFINITY, INFINITY, INFINITY)
        assert not is_soft_integral_3pt(P1PointQ(1, 2), dinf)  # c = 2 is no unit
        assert not is_soft_integral_3pt(P1PointQ(-1, 1), dinf)  # b = 2 is no unit
        assert is_soft_integral_3pt(P1PointQ(-1, 1), DeltaSupport3(INFINITY, 1, INFINITY))

    @settings(max_examples=200, deadline=None)
    @given(
        st.integers(min_value=-400, max_value=400).filter(lambda a: a != 0),
        st.integers(min_value=1, max_value=400),
        st.sampled_from([1, 2, 3]),
        st.sampled_from([1, 2, 3]),
        st.sampled_from([1, 2, 3]),
    )
    def test_monotone_in_multiplicities(self, a, c, n0, n1, ninf):
        pt = P1PointQ(a, c)
        if pt.a == 0 or pt.b == 0 or pt.c == 0:
            return
        if is_soft_integral_3pt(pt, DeltaSupport3(n0, n1, ninf)):
            weaker = DeltaSupport3(max(1, n0 - 1), max(1, n1 - 1), max(1, ninf - 1))
            assert is_soft_integral_3pt(pt, weaker)


class TestSoftGeneral:
    def test_standard_support_matches_3pt(self):
        std = std_support()
        for a in range(-60, 61):
            for c in range(1, 61):
                if math.gcd(abs(a), c) != 1:
                    continue
                pt = P1PointQ(a, c)
                if pt.a == 0 or pt.b == 0 or pt.c == 0:
                    continue
                assert is_soft_integral_general(pt, std) == is_soft_integral_3pt(pt, D222)

    def test_standard_support_matches_3pt_on_enumerated_points(self):
        # the enumerated soft points up to height 1e4 all pass the general
        # test on the standard support too
        std = std_support()
        for pt in enumerate_soft_points(D222, 10**4):
            assert is_soft_integral_general(pt, std)

    def test_examples(self):
        one = GeneralDeltaQ(((P1PointQ(1, 2), 2),))
        assert is_soft_integral_general(P1PointQ(1, 3), one)  # det -1, no prime meets
        assert not is_soft_integral_general(P1PointQ(1, 5), one)  # v_3(-3) = 1 < 2

    def test_s_excludes_primes(self):
        one = GeneralDeltaQ(((P1PointQ(1, 2), 2),), primes=frozenset({3}))
        assert is_soft_integral_general(P1PointQ(1, 5), one)

    def test_infinite_support_point(self):
        one = GeneralDeltaQ(((P1PointQ(1, 2), INFINITY),))
        assert is_soft_integral_general(P1PointQ(1, 3), one)
        assert not is_soft_integral_general(P1PointQ(1, 5), one)

    def test_support_point_equality_rejected(self):
        one = GeneralDeltaQ(((P1PointQ(1, 2), 2),))
        with pytest.raises(PointOnBoundaryError):
            is_soft_integral_general(P1PointQ(1, 2), one)

    def test_collision_invariant(self):
        with pytest.raises(ValueError):
            GeneralDeltaQ(((P1PointQ(0, 1), 2), (P1PointQ(3, 1), 2)))
        GeneralDeltaQ(((P1PointQ(0, 1), 2), (P1PointQ(3, 1), 2)), primes=frozenset({3}))
        with pytest.raises(ValueError):
            GeneralDeltaQ(((P1PointQ(1, 2), 2), (P1PointQ(1, 2), 3)))

    def test_multiplicity_floor(self):
        with pytest.raises(ValueError):
            GeneralDeltaQ(((P1PointQ(1, 2), 1),))


class TestSoftWeighted:
    def test_examples(self):
        assert is_soft_integral_weighted(P1PointQ(9, 25), std_support())
        one = GeneralDeltaQ(((P1PointQ(1, 2), 2),))
        assert not is_soft_integral_weighted(P1PointQ(1, 5), one)  # 1/2 < 1
        assert is_soft_integral_weighted(P1PointQ(1, 3), one)  # empty condition

    def test_implied_by_general_up_to_1000(self):
        std = std_support()
        for pt in enumerate_soft_points(D222, 1000):
            assert is_soft_integral_weighted(pt, std)

    def test_agreement_on_random_points(self):
        std = std_support()
        for a in range(-40, 41):
            for c in range(1, 41):
                if math.gcd(abs(a), c) != 1:
                    continue
                pt = P1PointQ(a, c)
                if pt.a == 0 or pt.b == 0 or pt.c == 0:
                    continue
                general = is_soft_integral_general(pt, std)
                if general:
                    assert is_soft_integral_weighted(pt, std)


class TestEnumeration:
    def test_golden_positive_window(self):
        pts = enumerate_soft_points(D222, 100, positive_only=True)
        assert [(p.a, p.c) for p in pts] == [
            (1, 9),
            (8, 9),
            (9, 25),
            (16, 25),
            (32, 81),
            (49, 81),
        ]

    def test_matches_brute_oracle(self):
        for delta in (D222, DeltaSupport3(2, 1, 2), DeltaSupport3(3, 3, 3), DeltaSupport3(1, 1, 1)):
            bound = 60 if delta.n0 == 1 and delta.n1 == 1 else 300
            got = [(p.a, p.c) for p in enumerate_soft_points(delta, bound)]
            expected = _oracles.brute_soft_points(delta.n0, delta.n1, delta.n_inf, bound)
            assert got == expected, delta

    def test_all_units_empty(self):
        dinf = DeltaSupport3(INFINITY, INFINITY, INFINITY)
        assert enumerate_soft_points(dinf, 100) == []

    def test_trivial_structure_counts_coprime_pairs(self):
        pts = enumerate_soft_points(DeltaSupport3(1, 1, 1), 5)
        expected = [
            (a, c)
            for c in range(1, 6)
            for a in range(-5, 6)
            if a != 0 and a != c and math.gcd(abs(a), c) == 1
        ]
        assert [(p.a, p.c) for p in pts] == sorted(expected, key=lambda t: (t[1], t[0]))

    def test_monotone_in_delta(self):
        stronger = [(p.a, p.c) for p in enumerate_soft_points(DeltaSupport3(3, 3, 3), 1000)]
        weaker = {(p.a, p.c) for p in enumerate_soft_points(D222, 1000)}
        assert set(stronger) <= weaker

    def test_rejects_tiny_bound(self):
        with pytest.raises(ValueError):
            enumerate_soft_points(D222, 1)

    def test_worker_counts_agree(self):
        single = enumerate_soft_points(D222, 2000)
        assert enumerate_soft_points(D222, 2000, workers=3) == single


class TestBoundCheck:
    def test_examples(self):
        bc = campana_abc_bound_check(P1PointQ(9, 25), D222)
        assert bc.holds
        assert bc.lhs == pytest.approx(1.5 * math.log(25), abs=1e-12)
        assert bc.rhs == pytest.approx(math.log(30), abs=1e-12)
        bc = campana_abc_bound_check(P1PointQ(1, 9), D222)
        assert bc.holds
        assert bc.lhs == pytest.approx(1.5 * math.log(9), abs=1e-12)
        assert bc.rhs == pytest.approx(math.log(6), abs=1e-12)
        bc = campana_abc_bound_check(P1PointQ(8, 9), D222)
        assert bc.holds and bc.rhs == pytest.approx(math.log(6), abs=1e-12)

    def test_exact_variant_agrees(self):
        for pt in enumerate_soft_points(D222, 2000):
            check = campana_abc_bound_check(pt, D222)
            assert check.holds
            assert campana_abc_bound_exact(pt, D222)

    def test_preconditions(self):
        with pytest.raises(MathDomainError):
            campana_abc_bound_check(P1PointQ(2, 3), D222)
        with pytest.raises(MathDomainError):
            campana_abc_bound_check(P1PointQ(9, 25), DeltaSupport3(2, 2, INFINITY))
        with pytest.raises(PointOnBoundaryError):
            campana_abc_bound_check(P1PointQ(1, 0), D222)
