"""The p-adic L-function: interpolation route, convergent series route, the
weight-space zeta function, and the irregular machinery."""

from fractions import Fraction

import pytest

from eiszeta.bernoulli import bernoulli_number
from eiszeta.kubota import (
    AdmissibilityError,
    PoleError,
    WeightPoint,
    irregular_branches,
    irregular_scan,
    lp_interpolation,
    lp_series,
    zeta_weight,
)
from eiszeta.padic import PadicContext, PadicNumber, agreement_precision


class TestWeightPoint:
    def test_classical_coordinates(self):
        w = WeightPoint.classical(5, 4, 2)
        assert w.branch == 2  # (4 + 2) mod 4
        assert w.s == 4

    def test_parity_rejected(self):
        with pytest.raises(AdmissibilityError):
            WeightPoint.classical(5, 4, 1)

    def test_critical_constraints(self):
        WeightPoint.classical(5, 3, 1).validate_critical()
        with pytest.raises(AdmissibilityError):
            WeightPoint.classical(5, 1, 1).validate_critical()
        with pytest.raises(AdmissibilityError):
            WeightPoint.classical(5, 2, 0).validate_critical()
        # weight 2 with a nontrivial even character is admissible
        WeightPoint.classical(5, 2, 2).validate_critical()

    def test_twin_coordinates(self):
        w = WeightPoint.classical(5, 4, 0)
        tw = w.twin()
        assert tw.k == -2
        assert tw.s == -2
        assert tw.branch == 2  # 2 - k - i mod 4
        # twin of a (p,k,i) point sits on branch 2 - k - i
        w2 = WeightPoint.classical(37, 4, 2)
        assert w2.twin().branch == (2 - 4 - 2) % 36 == 32

    def test_intrinsic_rejects_odd_branch(self):
        with pytest.raises(AdmissibilityError):
            WeightPoint.intrinsic(5, 1, 0)

    def test_value_at(self):
        ctx = PadicContext(5, 12)
        w = WeightPoint.classical(5, 4, 0)
        assert w.value_at(2, ctx) == PadicNumber.from_int(16, ctx)
        tw = w.twin()
        assert tw.value_at(2, ctx) == PadicNumber.from_rational(Fraction(1, 4), ctx)

    def test_trivial_weight_detection(self):
        assert WeightPoint.classical(5, 0, 0).is_trivial
        assert not WeightPoint.classical(5, 4, 0).is_trivial


class TestInterpolation:
    def test_p5_j2_n2(self):
        # chi' is trivial: -(1-5) * B_2 / 2 = 1/3
        ctx = PadicContext(5, 20)
        expected = -(1 - Fraction(5)) * bernoulli_number(2) / 2
        assert expected == Fraction(1, 3)
        lv = lp_interpolation(2, 2, ctx)
        assert lv.value == PadicNumber.from_rational(expected, ctx)
        assert lv.route == "interpolation"

    def test_odd_branch_rejected(self):
        with pytest.raises(AdmissibilityError):
            lp_interpolation(2, 3, PadicContext(5, 10))

    def test_p5_j0_n4_stabilized_zeta_value(self):
        # chi' = omega^(-4) = trivial: -(1 - 5^3) B_4 / 4
        ctx = PadicContext(5, 20)
        expected = -(1 - Fraction(5) ** 3) * bernoulli_number(4) / 4
        assert expected == Fraction(-31, 30)
        lv = lp_interpolation(4, 0, ctx)
        assert lv.value == PadicNumber.from_rational(expected, ctx)

    def test_p7_j2_n2(self):
        ctx = PadicContext(7, 20)
        expected = -(1 - Fraction(7)) * bernoulli_number(2) / 2
        assert expected == Fraction(1, 2)
        assert lp_interpolation(2, 2, ctx).value == PadicNumber.from_rational(expected, ctx)


class TestSeries:
    def test_two_route_agreement_spot(self):
        ctx = PadicContext(5, 20)
        sv = lp_series(-1, 2, ctx)
        iv = lp_interpolation(2, 2, ctx)
        assert agreement_precision(sv.value, iv.value) >= 15
        assert sv.route == "series"
        assert sv.precision_achieved >= 15

    def test_two_route_small_grid(self):
        for p in (5, 7):
            ctx = PadicContext(p, 20)
            for j in range(0, p - 1, 2):
                for n in (1, 2, 3, p - 1, p, 13):
                    sv = lp_series(1 - n, j, ctx)
                    iv = lp_interpolation(n, j, ctx)
                    assert agreement_precision(sv.value, iv.value) >= 15, (p, j, n)

    def test_branch_zero_values_carry_the_pole_factor(self):
        # valuation is -1 - v(n) on the trivial branch
        ctx = PadicContext(5, 20)
        assert lp_series(-3, 0, ctx).value.valuation == -1
        assert lp_series(1 - 5, 0, ctx).value.valuation == -2

    def test_nontrivial_branch_regular_prime_values_are_units(self):
        ctx = PadicContext(5, 16)
        for s in (-7, -1, 0, 2, 3, 9):
            assert lp_series(s, 2, ctx).value.valuation == 0

    def test_pole_rejected(self):
        with pytest.raises(PoleError):
            lp_series(1, 0, PadicContext(5, 12))

    def test_removable_point_on_nontrivial_branch(self):
        # s = 1 with j != 0 is a 0/0 of the series but a finite value;
        # consistency with a nearby argument via analyticity
        ctx = PadicContext(5, 20)
        at1 = lp_series(1, 2, ctx)
        near = lp_series(1 + 5**6, 2, ctx)
        assert agreement_precision(at1.value, near.value) >= 6
        assert at1.precision_achieved >= 8

    def test_non_integer_argument(self):
        ctx = PadicContext(5, 16)
        lv = lp_series(Fraction(1, 3), 2, ctx)  # 1/3 is a 5-adic integer
        assert lv.value.valuation == 0
        with pytest.raises(ValueError):
            lp_series(Fraction(1, 5), 2, ctx)

    def test_kummer_congruence_samples(self):
        # fixed nonzero branch: values at n and n + (p-1) agree mod p
        for p, j in ((5, 2), (7, 2), (7, 4)):
            ctx = PadicContext(p, 14)
            for n in range(1, 8):
                a = lp_interpolation(n, j, ctx).value
                b = lp_interpolation(n + p - 1, j, ctx).value
                assert agreement_precision(a, b) >= 1, (p, j, n)


class TestZetaWeight:
    def test_classical_value(self):
        ctx = PadicContext(5, 20)
        w = WeightPoint.classical(5, 4, 0)
        zv = zeta_weight(w, ctx)
        assert agreement_precision(
            zv.value, PadicNumber.from_rational(Fraction(-31, 30), ctx)
        ) >= 15

    def test_classical_matches_interpolation_route(self):
        for p, k, i in ((5, 4, 0), (5, 3, 1), (7, 5, 1), (7, 4, 2), (13, 6, 2)):
            ctx = PadicContext(p, 18)
            w = WeightPoint.classical(p, k, i)
            zv = zeta_weight(w, ctx)
            iv = lp_interpolation(k, w.branch, ctx)
            assert agreement_precision(zv.value, iv.value) >= 12, (p, k, i)

    def test_classical_nonvanishing(self):
        for p in (5, 7, 11):
            ctx = PadicContext(p, 14)
            for k in range(1, 8):
                for i in range(0, p - 1):
                    if (k - i) % 2:
                        continue
                    w = WeightPoint.classical(p, k, i)
                    if w.is_trivial:
                        continue
                    assert not zeta_weight(w, ctx).value.is_zero_to_precision, (p, k, i)

    def test_twin_evaluation_argument(self):
        # zeta at the twin weight is the branch-(2-k-i) function at k-1
        ctx = PadicContext(5, 16)
        w = WeightPoint.classical(5, 4, 0)
        tw = w.twin()
        zv = zeta_weight(tw, ctx)
        assert zv.branch == 2
        direct = lp_series(3, 2, ctx)
        assert agreement_precision(zv.value, direct.value) >= 14

    def test_trivial_weight_rejected(self):
        with pytest.raises(PoleError):
            zeta_weight(WeightPoint.classical(5, 0, 0), PadicContext(5, 10))


class TestIrregular:
    def test_regular_primes_empty(self):
        for p in (5, 7, 11, 13):
            assert irregular_branches(p) == []
            assert irregular_scan(p, PadicContext(p, 10)) == []

    def test_p37(self):
        assert irregular_branches(37) == [32]
        assert bernoulli_number(32).numerator % 37 == 0

    def test_p157_two_branches(self):
        assert irregular_branches(157) == [62, 110]

    def test_witness_structure(self):
        hits = irregular_scan(37, PadicContext(37, 12))
        assert len(hits) == 1
        j, wit = hits[0]
        assert j == 32
        # a zero on the branch forces positive valuation everywhere...
        assert wit.baseline_valuation >= 1
        # ...and the zero's residue class shows up as a valuation jump;
        # a single simple zero means exactly one jump class on the grid
        assert len(wit.elevated) == 1
        for s, v in wit.elevated:
            assert v > wit.baseline_valuation

    def test_zero_locus_grid_counts(self):
        # finitely many zeros per branch, restated on a grid: a regular prime
        # has no zero-to-precision hits anywhere, while each zero-carrying
        # branch shows exactly one elevated residue class (simple zeros)
        for p in (5, 7):
            ctx = PadicContext(p, 12)
            for j in range(0, p - 1, 2):
                for s in range(-3, 9):
                    if j == 0 and s == 1:
                        continue
                    assert not lp_series(s, j, ctx).value.is_zero_to_precision, (p, j, s)
        for p, branches in ((37, [32]), (59, [44])):
            hits = irregular_scan(p, PadicContext(p, 10))
            assert [j for j, _ in hits] == branches
            assert all(len(wit.elevated) == 1 for _, wit in hits)
