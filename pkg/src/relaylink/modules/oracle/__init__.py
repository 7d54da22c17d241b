"""Oracle feature - quadrature, convolution, goodness-of-fit, and slope estimators."""

from .goodness import ks_critical_value, ks_statistic, slope_fit
from .integrals import conv_pdf_numeric, selected_hop_pdf_numeric
from .quadrature import MAX_EVALUATIONS, quad_interval, quad_semiinf
from .schemas import QuadratureResult

__all__ = [
    "QuadratureResult",
    "MAX_EVALUATIONS",
    "quad_interval",
    "quad_semiinf",
    "selected_hop_pdf_numeric",
    "conv_pdf_numeric",
    "ks_statistic",
    "ks_critical_value",
    "slope_fit",
]
