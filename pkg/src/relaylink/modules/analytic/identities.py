"""BPSK error averages of a single exponential term, in closed form.

``l(alpha)`` is ``(1/2) * integral of erfc(sqrt(x)) e^(-alpha x)`` over [0, inf)
and ``theta(a)`` is the same average taken against ``Psi_a`` with the direct
branch folded into the weight. Both are written in a form free of the
subtraction ``1 - 1/sqrt(1 + alpha)``, which loses every digit for small alpha.
"""

from __future__ import annotations

import math
from decimal import Decimal

from ...core.exceptions import InvalidParameterError


def l_of_alpha(alpha: float) -> float:
    """``(1/(2 alpha)) (1 - 1/sqrt(1 + alpha))``."""
    if not alpha > 0.0:
        raise InvalidParameterError(f"alpha must be positive, got {alpha!r}", field="alpha", valid="(0, inf)")
    root = math.sqrt(1.0 + alpha)
    return 1.0 / (2.0 * root * (root + 1.0))


def theta_of_a(a: float, gbar_sd: float) -> float:
    """``(1/(2a)) [sqrt(1/(1 + 1/gbar_sd)) - sqrt(1/(1 + a + 1/gbar_sd))]``."""
    if not a > 0.0:
        raise InvalidParameterError(f"a must be positive, got {a!r}", field="a", valid="(0, inf)")
    if not gbar_sd > 0.0:
        raise InvalidParameterError(f"gbar_sd must be positive, got {gbar_sd!r}", field="gbar_sd", valid="(0, inf)")
    u = 1.0 + 1.0 / gbar_sd
    ru = math.sqrt(u)
    rv = math.sqrt(u + a)
    return 1.0 / (2.0 * ru * rv * (ru + rv))


def l_of_alpha_decimal(alpha: Decimal) -> Decimal:
    """Extended-precision ``l_of_alpha`` at the current decimal context."""
    root = (1 + alpha).sqrt()
    return 1 / (2 * root * (root + 1))


def theta_of_a_decimal(a: Decimal, u: Decimal) -> Decimal:
    """Extended-precision ``theta_of_a`` with ``u = 1 + 1/gbar_sd`` precomputed."""
    ru = u.sqrt()
    rv = (u + a).sqrt()
    return 1 / (2 * ru * rv * (ru + rv))
