"""Tests for the alternating binomial mixtures and their numerical helpers."""

import math
from decimal import Decimal, localcontext

import numpy as np
import pytest

from relaylink.core import AvgSnrTriple, NearSingularParametersError
from relaylink.modules.stats import SingularityPolicy, alternating_binomial, compensated_sum, resolve_singularity
from relaylink.modules.stats.series import decay, exp_difference_quotient, hop_mixture_sums, psi
from relaylink.modules.stats.singularity import JITTER_RTOL, singular_collisions


@pytest.mark.parametrize("k", [1, 2, 5, 10, 20])
def test_alternating_binomial_matches_comb(k: int) -> None:
    """The running recurrence yields C(K, i) (-1)^(i-1)."""
    expected = [(i, math.comb(k, i) * (-1) ** (i - 1)) for i in range(1, k + 1)]
    assert list(alternating_binomial(k)) == expected


def test_alternating_binomial_sums_to_one() -> None:
    """sum_i C(K, i) (-1)^(i-1) = 1 for every K."""
    for k in range(1, 21):
        assert sum(c for _, c in alternating_binomial(k)) == 1


def test_compensated_sum_recovers_cancelled_digits() -> None:
    """Neumaier summation keeps the small term a naive sum loses."""
    terms = [1e16, 1.0, -1e16]
    assert sum(terms) == 0.0
    assert compensated_sum(terms) == 1.0


def test_compensated_sum_is_elementwise() -> None:
    """Arrays are summed position by position."""
    total = compensated_sum([np.array([1e16, 1.0]), np.array([1.0, 2.0]), np.array([-1e16, 3.0])])
    np.testing.assert_array_equal(total, [1.0, 6.0])


def test_decay_underflows_to_zero() -> None:
    """Exponents past the underflow point give exact zeros."""
    values = decay(1.0, np.array([0.0, 1.0, 800.0]))
    np.testing.assert_allclose(values, [1.0, math.exp(-1.0), 0.0])


def test_exp_difference_quotient_limits() -> None:
    """The quotient tends to x e^(-s x) as r approaches s."""
    x = np.array([0.5, 2.0, 10.0])
    exact = exp_difference_quotient(1.0, 1.0, x)
    near = exp_difference_quotient(1.0, 1.0 + 1e-12, x)
    np.testing.assert_allclose(exact, x * np.exp(-x))
    np.testing.assert_allclose(near, exact, rtol=1e-9)
    np.testing.assert_allclose(
        exp_difference_quotient(0.5, 2.0, x),
        (np.exp(-0.5 * x) - np.exp(-2.0 * x)) / 1.5,
    )


def test_psi_is_integral_of_decay() -> None:
    """psi(r, x) = (1 - e^(-r x)) / r."""
    assert psi(2.0, 1.5) == pytest.approx((1.0 - math.exp(-3.0)) / 2.0)


def test_hop_mixture_works_in_decimal() -> None:
    """The mixture accepts Decimal averages and kernels."""
    with localcontext(prec=50):
        a, b = Decimal(7), Decimal(5)
        gbar = a * b / (a + b)
        first, second = hop_mixture_sums(a, b, gbar, 3, lambda rate: 1 / rate)
        total = sum(first, Decimal(0)) + sum(second, Decimal(0))
    # kernel 1/r integrates the density: total mass is 1
    assert abs(total - 1) < Decimal("1e-45")


class TestSingularity:
    """Test detection and jittering of coincident poles."""

    def test_detects_direct_equals_second_hop(self) -> None:
        """gbar_sd = gbar_rd is a collision."""
        snrs = AvgSnrTriple(gbar_sd=5.0, gbar_sr=9.0, gbar_rd=5.0)
        assert "gbar_sd = gbar_rd" in singular_collisions(snrs, 1)

    def test_detects_multiple_of_direct_equals_bottleneck(self, mid_snrs: AvgSnrTriple) -> None:
        """At d = 0.5, nu = 2 the pole 2 gbar_sd = gbar shows up from K = 2."""
        assert singular_collisions(mid_snrs, 1) == []
        assert singular_collisions(mid_snrs, 2) == ["2 * gbar_sd = gbar"]

    def test_regular_parameters_pass_through(self, generic_snrs: AvgSnrTriple) -> None:
        """Nothing is perturbed away from the poles."""
        assert resolve_singularity(generic_snrs, 4) == (generic_snrs, False)

    def test_jitter_moves_direct_link_only(self, mid_snrs: AvgSnrTriple) -> None:
        """The default policy nudges gbar_sd by the jitter tolerance."""
        snrs, jittered = resolve_singularity(mid_snrs, 2)
        assert jittered is True
        assert snrs.gbar_sd == pytest.approx(mid_snrs.gbar_sd * (1.0 + JITTER_RTOL), rel=1e-15)
        assert (snrs.gbar_sr, snrs.gbar_rd) == (mid_snrs.gbar_sr, mid_snrs.gbar_rd)
        assert singular_collisions(snrs, 2) == []

    def test_raise_policy(self, mid_snrs: AvgSnrTriple) -> None:
        """The strict policy raises with the colliding averages attached."""
        with pytest.raises(NearSingularParametersError) as info:
            resolve_singularity(mid_snrs, 2, SingularityPolicy.raise_error)
        assert info.value.extensions["collisions"] == ["2 * gbar_sd = gbar"]
