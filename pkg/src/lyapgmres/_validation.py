"""Input validation helpers shared by the kernels and estimators."""

import numbers

import numpy as np


def as_matrix(x, name="matrix"):
    """Return `x` as a finite complex128 2-D array."""
    a = np.asarray(x)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2:
        raise ValueError(f"{name} must be 2-D, got shape {a.shape}")
    a = a.astype(np.complex128, copy=False)
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} contains NaN or Inf entries")
    return a


def as_square(x, name="matrix"):
    a = as_matrix(x, name)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be square, got shape {a.shape}")
    return a


def as_vector(x, n=None, name="vector"):
    v = np.asarray(x).astype(np.complex128, copy=False).reshape(-1)
    if n is not None and v.shape[0] != n:
        raise ValueError(f"{name} has length {v.shape[0]}, expected {n}")
    if not np.all(np.isfinite(v)):
        raise ValueError(f"{name} contains NaN or Inf entries")
    return v


def check_same_size(a, b, names=("A", "B")):
    if a.shape[0] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {names[0]} is {a.shape}, "
                         f"{names[1]} is {b.shape}")


def check_count(value, name, minimum=0):
    if not isinstance(value, numbers.Integral) or value < minimum:
        raise ValueError(f"{name} must be an integer >= {minimum}, got {value!r}")
    return int(value)


def hermitian_part(a):
    return 0.5 * (a + a.conj().T)
