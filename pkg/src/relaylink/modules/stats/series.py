"""Alternating binomial mixtures and the numerical helpers they are built from.

Every exact statistic of the selected hop is a finite mixture over ``i = 1..K``
with coefficients ``C(K, i) (-1)^(i-1)``. Writing ``a`` for the average of the
other hop, ``b`` for the hop of interest and ``g`` for the bottleneck average,
the density of the hop of interest is

    sum_i c_i * i / ((i - 1) a + i b) * [e^(-x/b) - e^(-i x/g)] + sum_i c_i * i / b * e^(-i x/g)

Replacing the exponential ``e^(-r x)`` by any linear functional of it (its
integral up to x, its mean, its BPSK error average, ...) gives the matching
closed form, so the mixture is evaluated once for a caller-supplied kernel
``r -> functional(e^(-r x))``.
"""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator
from typing import Any

import numpy as np

from ...core.schemas import AvgSnrTriple
from .schemas import RelayHopRole

# exp(-745) is the last double above zero
EXP_UNDERFLOW = 745.0


def alternating_binomial(k: int) -> Iterator[tuple[int, int]]:
    """Yield ``(i, C(K, i) (-1)^(i-1))`` for i = 1..K using the running recurrence."""
    coeff = k
    for i in range(1, k + 1):
        yield i, coeff if i % 2 == 1 else -coeff
        coeff = coeff * (k - i) // (i + 1)


def hop_averages(snrs: AvgSnrTriple, role: RelayHopRole) -> tuple[float, float]:
    """Return ``(other hop average, hop of interest average)`` for a role."""
    if role == RelayHopRole.relay_to_destination:
        return snrs.gbar_sr, snrs.gbar_rd
    return snrs.gbar_rd, snrs.gbar_sr


def hop_mixture_sums(a: Any, b: Any, gbar: Any, k: int, kernel: Callable[[Any], Any]) -> tuple[list[Any], list[Any]]:
    """Split the hop mixture into the terms of its two sums.

    Works for floats, numpy arrays and ``decimal.Decimal`` alike: the averages
    and the kernel decide the arithmetic. ``gbar`` must be ``a b / (a + b)``.
    """
    head = kernel(1 / b)
    first: list[Any] = []
    second: list[Any] = []
    for i, c in alternating_binomial(k):
        tail = kernel(i / gbar)
        # equals i g / (a (i b - g)), which divides by zero once g rounds to b
        first.append(c * i / ((i - 1) * a + i * b) * (head - tail))
        second.append(c * i / b * tail)
    return first, second


def compensated_sum(terms: Iterable[Any]) -> Any:
    """Neumaier-compensated sum, elementwise over numpy arrays."""
    total: Any = 0.0
    comp: Any = 0.0
    for term in terms:
        t = np.asarray(term, dtype=np.float64)
        s = total + t
        comp = comp + np.where(np.abs(total) >= np.abs(t), (total - s) + t, (t - s) + total)
        total = s
    return total + comp


def decay(rate: float, x: Any) -> Any:
    """``exp(-rate * x)`` with arguments past the underflow point pinned to zero."""
    t = rate * np.asarray(x, dtype=np.float64)
    return np.where(t > EXP_UNDERFLOW, 0.0, np.exp(-np.minimum(t, EXP_UNDERFLOW)))


def exp_difference_quotient(s: float, r: float, x: Any) -> Any:
    """``(e^(-s x) - e^(-r x)) / (r - s)`` without cancellation when r is close to s."""
    x = np.asarray(x, dtype=np.float64)
    low = min(r, s)
    gap = abs(r - s)
    if gap == 0.0:
        return x * decay(low, x)
    return decay(low, x) * -np.expm1(-gap * x) / gap


def psi(rate: float, x: Any) -> Any:
    """``(1 - e^(-rate x)) / rate``, the integral of ``e^(-rate t)`` over [0, x]."""
    return -np.expm1(-rate * np.asarray(x, dtype=np.float64)) / rate
