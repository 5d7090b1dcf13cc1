"""Tests for step sets, tuning space construction, and pitch evaluation."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from mpmath import mp, mpf

from tuningspaces import (
    ClosureViolation,
    Exact,
    ExactnessError,
    MonotonicityViolation,
    PitchCoordinate,
    Ratio,
    RootOffset,
    StepSet,
    describe,
    make_custom,
    make_nedo,
    make_ntet,
)

mp.dps = 50

EXAMPLE_CUSTOM_STEPS = (
    Ratio(Fraction(5, 4)),
    RootOffset(Fraction(1, 5)),
    RootOffset(Fraction(1, 20)),
    RootOffset(Fraction(1, 2)),
)


def tet_oracle(standard_pitch, n, k, j):
    """High-precision pitch 2**k * pitch * 2**(j/n), independent of Exact."""
    return mpf(standard_pitch) * mp.power(2, k + mpf(j) / n)


class TestMakeNtet:
    def test_twelve_tet_shape(self):
        space = make_ntet(440, 12)
        assert space.n == 12
        assert space.chromatic
        assert space.step_set.partition_factors[12] == 2

    def test_trivial_space_single_doubling_step(self):
        space = make_ntet(100, 1)
        assert space.step_set.steps == (Ratio(Exact.pow2(1)),)
        assert space.partition(0) == (Exact(100), Exact(200))
        assert space.chromatic

    def test_nineteen_tet_closure(self):
        space = make_ntet(261.626, 19)
        # closure is exact in the symbolic form
        assert space.step_set.partition_factors[19] == 2
        # and the float rendering of step-by-step multiplication agrees
        acc = 1.0
        for _ in range(19):
            acc *= 2 ** (1 / 19)
        assert abs(acc - 2) < 1e-12 * 2

    def test_rejects_zero_steps(self):
        with pytest.raises(ValueError):
            make_ntet(440, 0)
        with pytest.raises(ValueError):
            make_nedo(440, 0)

    def test_rejects_non_positive_pitch(self):
        with pytest.raises(ValueError):
            make_ntet(0, 12)
        with pytest.raises(ValueError):
            make_nedo(-440, 5)


class TestMakeNedo:
    def test_five_edo_base_octave(self):
        space = make_nedo(100, 5)
        assert [p.as_fraction() for p in space.partition(0)] == [100, 120, 140, 160, 180, 200]

    def test_five_edo_next_octave(self):
        space = make_nedo(100, 5)
        assert [p.as_fraction() for p in space.partition(1)] == [200, 240, 280, 320, 360, 400]

    def test_closed_form_matches_step_composition_exactly(self):
        # oracle: 2**k * pitch * (1 + j/n), in plain Fraction arithmetic
        for n in (1, 5, 7, 12):
            space = make_nedo(Fraction(441, 2), n)
            for k in range(-4, 5):
                for j in range(n + 1):
                    expected = Fraction(2) ** k * Fraction(441, 2) * (1 + Fraction(j, n))
                    assert space.pitch_at((k, j)).as_fraction() == expected

    def test_single_division_equals_single_tet_pitch_set(self):
        tet = make_ntet(Fraction(441, 2), 1)
        edo = make_nedo(Fraction(441, 2), 1)
        for k in range(-3, 4):
            assert tet.partition(k) == edo.partition(k)
        # the rules differ even though the pitch sets coincide
        assert tet.step_set != edo.step_set


class TestMakeCustom:
    def test_worked_example_base_octave(self):
        space = make_custom(500, EXAMPLE_CUSTOM_STEPS)
        assert [p.as_fraction() for p in space.partition(0)] == [500, 625, 725, 750, 1000]
        assert not space.chromatic

    def test_worked_example_lower_octave(self):
        space = make_custom(500, EXAMPLE_CUSTOM_STEPS)
        values = [p.as_fraction() for p in space.partition(-1)]
        assert values == [
            Fraction(250),
            Fraction(625, 2),
            Fraction(725, 2),
            Fraction(375),
            Fraction(500),
        ]
        assert values[2] == Fraction(725, 2) == 362.5

    def test_closure_violation(self):
        with pytest.raises(ClosureViolation):
            make_custom(500, [Ratio(Fraction(3, 2))])

    def test_monotonicity_violation_shrinking_ratio(self):
        with pytest.raises(MonotonicityViolation):
            make_custom(500, [Ratio(Fraction(1, 2)), Ratio(4)])

    def test_monotonicity_violation_zero_offset(self):
        with pytest.raises(MonotonicityViolation):
            make_custom(500, [RootOffset(0), RootOffset(1)])

    def test_monotonicity_violation_negative_offset(self):
        with pytest.raises(MonotonicityViolation):
            make_custom(500, [RootOffset(Fraction(-1, 2)), RootOffset(Fraction(3, 2))])

    def test_offset_after_irrational_ratio_rejected(self):
        with pytest.raises(ExactnessError):
            make_custom(500, [Ratio(Exact.pow2(Fraction(1, 2))), RootOffset(Fraction(1, 2))])

    def test_empty_step_list_rejected(self):
        with pytest.raises(ValueError):
            make_custom(500, [])

    def test_uniform_irrational_custom_space_is_chromatic(self):
        half_octave = Ratio(Exact.pow2(Fraction(1, 2)))
        space = make_custom(300, [half_octave, half_octave])
        assert space.chromatic
        assert space.step_set.partition_factors[2] == 2


class TestPitchAt:
    def test_tritone_above_concert_pitch(self):
        space = make_ntet(440, 12)
        value = space.pitch_at((0, 6))
        assert value == Exact(440, Fraction(6, 12))
        assert abs(float(value) - 622.254) < 0.001

    def test_identity_composition(self):
        assert make_ntet(440, 12).pitch_at((0, 0)) == 440

    def test_low_octave_value_against_oracle(self):
        value = make_ntet(440, 12).pitch_at((-1, 3))
        assert abs(float(value) - float(tet_oracle(440, 12, -1, 3))) < 1e-9
        assert abs(float(value) - 261.626) < 0.001

    def test_out_of_range_coordinates(self):
        space = make_ntet(440, 12)
        with pytest.raises(ValueError):
            space.pitch_at((0, 13))
        with pytest.raises(ValueError):
            space.pitch_at((0, -1))

    def test_closed_form_matches_step_composition(self):
        # rebuild pitches by literal repeated multiplication and compare
        space = make_ntet(440, 12)
        step = Exact.pow2(Fraction(1, 12))
        for k in range(-8, 9):
            acc = Exact(440).times_pow2(k)
            for j in range(13):
                assert space.pitch_at((k, j)) == acc
                closed_form = Exact(440, k + Fraction(j, 12))
                assert space.pitch_at((k, j)) == closed_form
                acc = acc * step


class TestCoordinates:
    def test_endpoint_canonicalizes_upward(self):
        space = make_ntet(440, 12)
        assert space.canonical((0, 12)) == PitchCoordinate(1, 0)
        assert space.canonical((-3, 12)) == PitchCoordinate(-2, 0)
        assert space.canonical((2, 5)) == PitchCoordinate(2, 5)

    def test_endpoint_pitch_identification(self):
        for space in (make_ntet(440, 12), make_nedo(100, 5), make_custom(500, EXAMPLE_CUSTOM_STEPS)):
            for k in range(-4, 5):
                assert space.pitch_at((k, space.n)) == space.pitch_at((k + 1, 0))

    @given(st.integers(-30, 30), st.integers(0, 12))
    def test_octave_homogeneity(self, k, i):
        space = make_ntet(440, 12)
        assert space.pitch_at((k + 1, i)) == space.pitch_at((k, i)) * 2

    def test_octave_homogeneity_for_offset_rules(self):
        space = make_custom(500, EXAMPLE_CUSTOM_STEPS)
        for k in range(-6, 6):
            for i in range(space.n + 1):
                assert space.pitch_at((k + 1, i)) == space.pitch_at((k, i)) * 2


class TestStepBetween:
    def test_same_octave(self):
        space = make_ntet(440, 12)
        assert space.step_between((0, 2), (0, 5)) == 3

    def test_antisymmetry(self):
        space = make_ntet(440, 12)
        assert space.step_between((0, 5), (0, 2)) == -3

    def test_across_octave_boundary(self):
        # counting partition points from (0,11): (1,0) then (1,1) is 2 steps
        space = make_ntet(440, 12)
        assert space.step_between((0, 11), (1, 1)) == 2

    @given(
        st.integers(-10, 10), st.integers(0, 5), st.integers(-10, 10), st.integers(0, 5)
    )
    def test_matches_pitch_order(self, ka, ia, kb, ib):
        space = make_nedo(100, 5)
        steps = space.step_between((ka, ia), (kb, ib))
        fa, fb = space.pitch_at((ka, ia)), space.pitch_at((kb, ib))
        if steps > 0:
            assert fa < fb
        elif steps < 0:
            assert fa > fb
        else:
            assert fa == fb


class TestStepSetBasics:
    def test_uniform_flag(self):
        assert StepSet((RootOffset(Fraction(1, 3)),) * 3).uniform
        assert not StepSet(EXAMPLE_CUSTOM_STEPS).uniform

    def test_step_type_checked(self):
        with pytest.raises(TypeError):
            StepSet((Fraction(1, 2),))  # bare numbers are not rules

    def test_describe_labels(self):
        assert describe(make_ntet(440, 12)) == "12-TET tuned to 440 Hz"
        assert describe(make_nedo(100, 5)) == "5-EDO tuned to 100 Hz"
        assert describe(make_custom(500, EXAMPLE_CUSTOM_STEPS)) == "custom 4-step tuning at 500 Hz"
