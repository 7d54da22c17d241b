"""Numeric type aliases shared by the scalar and vectorised code paths."""

from __future__ import annotations

from typing import Any

import numpy as np
import numpy.typing as npt

type FloatArray = npt.NDArray[np.float64]
type ComplexArray = npt.NDArray[np.complex128]
type IntArray = npt.NDArray[np.int64]
type BoolArray = npt.NDArray[np.bool_]

# Scalars stay scalars; sequences and arrays come back as float64 arrays
type RealInput = float | npt.ArrayLike
type RealOutput = Any


def as_output(values: Any, scalar_input: bool) -> RealOutput:
    """Return a Python float for scalar input and a float64 array otherwise."""
    if scalar_input:
        return float(np.asarray(values, dtype=np.float64))
    return np.asarray(values, dtype=np.float64)
