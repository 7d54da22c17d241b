"""Tests for the quadrature, convolution and goodness-of-fit oracles."""

import math

import numpy as np
import pytest

from relaylink.core import AvgSnrTriple, InvalidParameterError, NonConvergenceError
from relaylink.modules.oracle import (
    QuadratureResult,
    conv_pdf_numeric,
    ks_critical_value,
    ks_statistic,
    quad_interval,
    quad_semiinf,
    selected_hop_pdf_numeric,
    slope_fit,
)
from relaylink.modules.stats import RelayHopRole, pdf_selected_hop


class TestQuadrature:
    """Test the adaptive integrators."""

    def test_finite_interval(self) -> None:
        """The integral of sin over [0, pi] is 2."""
        result = quad_interval(math.sin, 0.0, math.pi)
        assert isinstance(result, QuadratureResult)
        assert result.value == pytest.approx(2.0, abs=1e-10)
        assert result.abs_error_estimate <= 1e-10
        assert result.evaluations > 0

    @pytest.mark.parametrize("scale", [1.0, 5.0, 100.0])
    def test_semi_infinite_range(self, scale: float) -> None:
        """An exponential tail of mean 5 integrates to 5 whatever the mapping scale."""
        result = quad_semiinf(lambda x: math.exp(-x / 5.0), 1e-10, scale=scale)
        assert result.value == pytest.approx(5.0, abs=1e-9)

    def test_budget_exhaustion_raises(self) -> None:
        """An integrand the budget cannot resolve raises instead of returning a poor value."""
        with pytest.raises(NonConvergenceError) as info:
            quad_interval(lambda x: x * math.sin(1e4 * x), 0.0, 50.0, 1e-12, max_evaluations=21 * 50)
        assert info.value.extensions["tol"] == 1e-12
        assert info.value.extensions["abs_error_estimate"] > 1e-12

    def test_rejects_bad_arguments(self) -> None:
        """Tolerance and scale must be positive."""
        with pytest.raises(InvalidParameterError) as info:
            quad_interval(math.sin, 0.0, 1.0, 0.0)
        assert info.value.extensions["field"] == "tol"
        with pytest.raises(InvalidParameterError) as info:
            quad_semiinf(math.exp, scale=-1.0)
        assert info.value.extensions["field"] == "scale"

    @pytest.mark.parametrize("tol", [1e-6, 1e-8, 1e-10])
    def test_error_estimate_bounds_refinement(self, tol: float) -> None:
        """Halving the tolerance moves the value by no more than the coarser error estimate."""

        def integrand(x: float) -> float:
            return 0.5 * math.erfc(math.sqrt(x)) * math.exp(-x / 3.0) / 3.0

        coarse = quad_semiinf(integrand, tol, scale=3.0)
        fine = quad_semiinf(integrand, tol / 2.0, scale=3.0)
        assert abs(fine.value - coarse.value) <= coarse.abs_error_estimate


class TestNumericDensities:
    """Test the independent numerical routes to the densities."""

    @pytest.mark.parametrize("role", list(RelayHopRole))
    def test_single_relay_is_exponential(self, generic_snrs: AvgSnrTriple, role: RelayHopRole) -> None:
        """With one relay the hop keeps its own exponential law."""
        mean = generic_snrs.gbar_rd if role == RelayHopRole.relay_to_destination else generic_snrs.gbar_sr
        for x in (0.5, 2.0, 9.0):
            assert selected_hop_pdf_numeric(x, generic_snrs, 1, role) == pytest.approx(math.exp(-x / mean) / mean)

    @pytest.mark.parametrize("k", [2, 3])
    def test_selected_hop_matches_closed_form(self, generic_snrs: AvgSnrTriple, k: int) -> None:
        """The conditional-integral route agrees with the mixture."""
        for x in (0.0, 0.3, 4.0, 20.0):
            numeric = selected_hop_pdf_numeric(x, generic_snrs, k)
            assert numeric == pytest.approx(pdf_selected_hop(x, generic_snrs, k), rel=1e-7, abs=1e-14)

    def test_convolution_of_two_unit_exponentials(self) -> None:
        """Two unit exponentials sum to a Gamma(2) variable."""
        for beta in (0.0, 0.5, 3.0):
            density = conv_pdf_numeric(lambda x: math.exp(-x), lambda x: math.exp(-x), beta)
            assert density == pytest.approx(beta * math.exp(-beta), abs=1e-12)

    def test_rejects_negative_arguments(self, generic_snrs: AvgSnrTriple) -> None:
        """Densities live on [0, inf)."""
        with pytest.raises(InvalidParameterError):
            selected_hop_pdf_numeric(-1.0, generic_snrs, 2)
        with pytest.raises(InvalidParameterError):
            conv_pdf_numeric(math.exp, math.exp, -1.0)


class TestGoodnessOfFit:
    """Test the KS and slope estimators."""

    def test_ks_statistic_small_for_matching_law(self, rng: np.random.Generator) -> None:
        """Uniform samples sit close to the uniform CDF."""
        samples = rng.uniform(size=10_000)
        assert ks_statistic(samples, lambda x: np.clip(x, 0.0, 1.0)) < ks_critical_value(10_000, alpha=1e-6)

    def test_ks_statistic_large_for_wrong_law(self, rng: np.random.Generator) -> None:
        """Exponential samples are far from the uniform CDF."""
        samples = rng.exponential(size=10_000)
        assert ks_statistic(samples, lambda x: np.clip(x, 0.0, 1.0)) > 0.2

    def test_ks_critical_value(self) -> None:
        """About 1.63 / sqrt(n) at the 1% level."""
        assert ks_critical_value(10_000) == pytest.approx(1.6276 / 100.0, rel=1e-3)
        assert ks_critical_value(100, alpha=0.05) == pytest.approx(1.3581 / 10.0, rel=1e-3)

    def test_ks_rejects_empty_input(self) -> None:
        """There is no empirical CDF without samples."""
        with pytest.raises(InvalidParameterError):
            ks_statistic([], lambda x: x)
        with pytest.raises(InvalidParameterError):
            ks_critical_value(0)

    def test_slope_of_power_law(self) -> None:
        """A BER falling two decades per ten dB has slope 2."""
        points = [(s, 0.3 * 10 ** (-2.0 * s / 10.0)) for s in (20.0, 25.0, 30.0, 35.0)]
        assert slope_fit(points) == pytest.approx(2.0)

    @pytest.mark.parametrize(
        "points",
        [
            [(10.0, 1e-3)],
            [(10.0, 1e-3), (20.0, 0.0)],
            [(10.0, 1e-3), (20.0, math.nan)],
            [(10.0, 1e-3), (10.0, 1e-4)],
        ],
    )
    def test_slope_rejects_degenerate_input(self, points: list[tuple[float, float]]) -> None:
        """Fewer than two points, non-positive BER, or one SNR value."""
        with pytest.raises(InvalidParameterError):
            slope_fit(points)
