"""Lyapunov inner products, numerical ranges and GMRES convergence bounds."""

from . import bounds, fov, gallery, gmres, io, linalg, lyapunov
from .analysis import AnalysisConfig, cmd_analyze, cmd_fov, cmd_gmres, cmd_iterate
from .bounds import BoundCurve, beckermann, cp_circle, diagonalization, elman
from .estimators import FieldOfValues, GmresBoundEstimator, LyapunovInnerProduct
from .exceptions import (ConvergenceError, HalfPlaneError, LyapGmresError,
                         NotPositiveDefiniteError, SingularMatrixError)
from .fov import FovBoundary, boundary, numerical_radius, omega_set, power_fov
from .gallery import (GalleryProblem, damped_string, integration_matrix,
                      jordan_matrix, kkt_matrix)
from .gmres import GmresTrace, polynomial_oracle, trial_ensemble
from .gram import GramInnerProduct, matrix_norm
from .lyapunov import LyapunovSolution, inverse_iteration, solve, solve_gram
from .specs import parse_matrix_spec

__version__ = "0.1.0"
