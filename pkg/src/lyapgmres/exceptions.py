"""Exception types raised by the numerical kernels."""

import numpy as np


class LyapGmresError(Exception):
    """Base class for numerical failures in this package."""


class ConvergenceError(LyapGmresError):
    """An iterative kernel did not converge within its iteration cap."""


class NotPositiveDefiniteError(LyapGmresError, np.linalg.LinAlgError):
    """Cholesky met a non-positive pivot.

    Attributes
    ----------
    index : int
        Zero-based position of the offending pivot.
    pivot : float
        Value of the pivot at that position.
    """

    def __init__(self, index, pivot, message=None):
        self.index = index
        self.pivot = pivot
        if message is None:
            message = f"non-positive pivot {pivot:.6g} at index {index}"
        super().__init__(message)


class HalfPlaneError(LyapGmresError):
    """The spectrum is not in the required open half-plane.

    Attributes
    ----------
    eigenvalue : complex
        The offending (leftmost) eigenvalue.
    """

    def __init__(self, eigenvalue, message=None):
        self.eigenvalue = eigenvalue
        if message is None:
            message = (f"eigenvalue {eigenvalue:.6g} is not in the open right "
                       f"half-plane")
        super().__init__(message)


class SingularMatrixError(LyapGmresError, np.linalg.LinAlgError):
    """A matrix that must be invertible is (numerically) singular."""
