"""Tests for forecast accuracy metrics over seven-day velocities."""

from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from driftmon import (
    ValidationError,
    VelocityPair,
    actual_velocity,
    coefficient_of_variation,
    mae,
    wmape,
)

velocities = st.floats(min_value=0.0, max_value=1e6, allow_nan=False)


def pairs_of(values: list[tuple[float, float]]) -> list[VelocityPair]:
    return [
        VelocityPair(unit_id=f"u{i}", predicted=p, actual=v)
        for i, (p, v) in enumerate(values)
    ]


class TestVelocityPair:
    def test_rejects_negative_values(self) -> None:
        with pytest.raises(ValidationError, match="predicted"):
            VelocityPair(unit_id="u", predicted=-0.1, actual=0.0)
        with pytest.raises(ValidationError, match="actual"):
            VelocityPair(unit_id="u", predicted=0.0, actual=-0.1)

    def test_rejects_non_finite_values(self) -> None:
        for bad in (math.nan, math.inf):
            with pytest.raises(ValidationError):
                VelocityPair(unit_id="u", predicted=bad, actual=1.0)
            with pytest.raises(ValidationError):
                VelocityPair(unit_id="u", predicted=1.0, actual=bad)


class TestActualVelocity:
    def test_window_must_hold_exactly_seven_days(self) -> None:
        for n in (0, 6, 8):
            with pytest.raises(ValidationError, match="7 days"):
                actual_velocity([1.0] * n)

    def test_hand_examples(self) -> None:
        assert actual_velocity([0.0] * 7) == 0.0
        assert actual_velocity([7.0] * 7) == 7.0
        assert actual_velocity([0.0, 0.0, 7.0, 0.0, 0.0, 0.0, 0.0]) == 1.0


class TestMae:
    def test_empty_input_rejected(self) -> None:
        with pytest.raises(ValidationError, match="at least one"):
            mae([])

    def test_perfect_forecast_is_zero(self) -> None:
        assert mae(pairs_of([(1.0, 1.0), (3.5, 3.5)])) == 0.0

    def test_hand_examples(self) -> None:
        assert mae(pairs_of([(2.0, 1.0), (4.0, 2.0)])) == pytest.approx(1.5, abs=1e-12)
        assert mae(pairs_of([(0.0, 5.0)])) == pytest.approx(5.0, abs=1e-12)

    @given(st.lists(st.tuples(velocities, velocities), min_size=1, max_size=20), st.randoms())
    def test_permutation_invariance(self, raw, rand) -> None:
        items = pairs_of(raw)
        shuffled = items[:]
        rand.shuffle(shuffled)
        assert mae(shuffled) == pytest.approx(mae(items), rel=1e-12, abs=1e-12)

    @given(
        st.lists(st.tuples(velocities, velocities), min_size=1, max_size=10),
        st.floats(min_value=0.01, max_value=100.0),
    )
    def test_homogeneity_under_scaling(self, raw, c) -> None:
        """Scaling every velocity by c scales the error by exactly c."""
        items = pairs_of(raw)
        scaled = pairs_of([(p * c, v * c) for p, v in raw])
        assert mae(scaled) == pytest.approx(c * mae(items), rel=1e-9, abs=1e-9)


class TestWmape:
    def test_empty_input_rejected(self) -> None:
        with pytest.raises(ValidationError, match="at least one"):
            wmape([])

    def test_perfect_forecast_is_zero(self) -> None:
        assert wmape(pairs_of([(2.0, 2.0), (0.0, 0.0)])) == 0.0

    def test_defined_when_actuals_are_zero(self) -> None:
        assert wmape(pairs_of([(1.0, 0.0), (1.0, 0.0)])) == pytest.approx(100.0, abs=1e-12)

    def test_hand_example(self) -> None:
        assert wmape(pairs_of([(2.0, 1.0), (0.0, 0.0)])) == pytest.approx(25.0, abs=1e-12)

    @given(st.lists(st.tuples(velocities, velocities), min_size=1, max_size=20), st.randoms())
    def test_permutation_invariance(self, raw, rand) -> None:
        items = pairs_of(raw)
        shuffled = items[:]
        rand.shuffle(shuffled)
        assert wmape(shuffled) == pytest.approx(wmape(items), rel=1e-12, abs=1e-12)

    @given(st.lists(st.tuples(velocities, velocities), min_size=1, max_size=12))
    def test_decomposes_into_single_pair_means(self, raw) -> None:
        """The N-pair value is the arithmetic mean of single-pair values."""
        items = pairs_of(raw)
        singles = [wmape([item]) for item in items]
        assert wmape(items) == pytest.approx(math.fsum(singles) / len(singles), rel=1e-9, abs=1e-9)

    def test_non_negative(self) -> None:
        assert wmape(pairs_of([(0.0, 9.0), (9.0, 0.0)])) >= 0.0


class TestCoefficientOfVariation:
    def test_needs_at_least_two_values(self) -> None:
        with pytest.raises(ValidationError, match="at least two"):
            coefficient_of_variation([3.0])

    def test_zero_mean_is_undefined(self) -> None:
        with pytest.raises(ValidationError, match="zero mean"):
            coefficient_of_variation([1.0, -1.0])

    def test_constant_sample_has_zero_dispersion(self) -> None:
        assert coefficient_of_variation([3.0, 3.0, 3.0]) == 0.0

    def test_hand_example(self) -> None:
        assert coefficient_of_variation([2.0, 4.0]) == pytest.approx(0.4714, abs=1e-4)

    def test_uses_sample_standard_deviation(self) -> None:
        """The N-1 denominator: for (2, 4) that is s = sqrt(2), not 1."""
        expected = math.sqrt(2.0) / 3.0
        assert coefficient_of_variation([2.0, 4.0]) == pytest.approx(expected, abs=1e-15)

    @given(
        st.lists(st.floats(min_value=0.1, max_value=1e4), min_size=2, max_size=20),
        st.floats(min_value=0.01, max_value=1000.0),
    )
    def test_invariant_under_positive_scaling(self, values, c) -> None:
        assert coefficient_of_variation([v * c for v in values]) == pytest.approx(
            coefficient_of_variation(values), rel=1e-9, abs=1e-9
        )
