"""Analysis pipelines behind the command-line subcommands.

Each ``cmd_*`` function takes an :class:`AnalysisConfig`, writes its files to
``config.output_dir`` and returns a JSON-ready summary.
"""

import logging
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import bounds, fov, gmres, io
from .exceptions import HalfPlaneError
from .gram import GramInnerProduct, matrix_norm
from .linalg import schur, spectral_norm
from .lyapunov import inverse_iteration
from .specs import parse_matrix_spec

log = logging.getLogger(__name__)

C_CHOICES = ("auto", "explicit", "identity", "hermitian-part", "diagonalization",
             "none")


@dataclass
class AnalysisConfig:
    matrix_spec: str
    c_choice: str = "auto"
    shift: float = 0.0
    iterations: int = 1
    n_angles: int = fov.DEFAULT_ANGLES
    rotate: float = 0.0
    seed: int = 0
    trials: int = 100
    output_dir: str = "."
    format: str = "csv"
    k_max: int = None
    boundaries: bool = False

    def __post_init__(self):
        if self.shift < 0:
            raise ValueError(f"shift must be >= 0, got {self.shift}")
        if self.iterations < 0:
            raise ValueError(f"iterations must be >= 0, got {self.iterations}")
        if self.n_angles < 4:
            raise ValueError(f"n_angles must be >= 4, got {self.n_angles}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.format not in ("csv", "json"):
            raise ValueError(f"format must be 'csv' or 'json', got {self.format!r}")
        if not (self.c_choice in C_CHOICES or self.c_choice.startswith("file:")):
            raise ValueError(f"unknown C choice {self.c_choice!r}")


@dataclass(eq=False)
class Prepared:
    problem: object
    a: np.ndarray          # rotated matrix actually analyzed
    theta: float
    warnings: list


def prepare(config):
    """Parse the matrix and apply the rotation ``exp(i theta)``.

    Problems whose spectrum is in the left half-plane are rotated by ``pi``
    when no explicit rotation is requested.
    """
    problem = parse_matrix_spec(config.matrix_spec)
    theta = float(config.rotate)
    notes = []
    if theta == 0.0 and problem.half_plane == "left":
        theta = float(np.pi)
        notes.append("left half-plane problem: analyzing exp(i*pi) A = -A")
    a = problem.a if theta == 0.0 else rotate(problem.a, theta)
    return Prepared(problem=problem, a=a, theta=theta, warnings=notes)


def rotate(a, theta):
    if theta == np.pi:
        return -np.asarray(a)
    return np.exp(1j * theta) * np.asarray(a)


def _check_spectrum(a):
    lam = np.diag(schur(a).t)
    k = int(np.argmin(lam.real))
    if not lam[k].real > 0:
        raise HalfPlaneError(complex(lam[k]),
                             f"leftmost eigenvalue {lam[k]:.6g} is not in the "
                             f"open right half-plane after rotation")


def initial_c(prep, choice):
    """Right-hand side ``C`` (also ``G_0``) selected by `choice`."""
    a = prep.a
    n = a.shape[0]
    if choice in ("auto", "identity"):
        return np.eye(n, dtype=np.complex128)
    if choice == "explicit":
        if prep.problem.c_explicit is None:
            raise ValueError(f"{prep.problem.label} has no explicit C")
        return prep.problem.c_explicit
    if choice == "hermitian-part":
        return a + a.conj().T
    if choice == "diagonalization":
        lam, v = np.linalg.eig(a)
        v = v / np.linalg.norm(v, axis=0)
        vinv = np.linalg.solve(v, np.eye(n))
        return vinv.conj().T @ np.diag(lam.conj() + lam) @ vinv
    if choice.startswith("file:"):
        c = io.read_matrix_market(choice[5:])
        if c.shape != a.shape:
            raise ValueError(f"C from {choice} has shape {c.shape}, expected {a.shape}")
        return c
    raise ValueError(f"unknown C choice {choice!r}")


def inner_product(prep, config):
    """The inner product the analysis uses, plus notes about how it was built."""
    notes = []
    problem = prep.problem
    choice = config.c_choice
    if choice == "none":
        return GramInnerProduct.identity(prep.a.shape[0]), notes
    use_explicit = problem.g_explicit is not None and choice in ("auto", "explicit")
    if use_explicit:
        if config.iterations != 1 or config.shift:
            notes.append("explicit G used as given; iterations/shift ignored")
        ip = GramInnerProduct.from_matrix(problem.g_explicit)
        return ip, notes + list(ip.warnings)
    _check_spectrum(prep.a)
    if config.iterations < 1:
        raise ValueError("iterations must be >= 1 to build a Lyapunov inner product")
    c = initial_c(prep, choice)
    family = inverse_iteration(prep.a, c, config.iterations, shift=config.shift,
                               c0=choice)
    ip = family[config.iterations]
    return ip, notes + list(ip.warnings)


def rates(a, ip, n_angles, notes, label=""):
    """``mu_g, norm_g, sqrt_kappa2, rho_e, rho_beta, rho_g`` and the boundary."""
    bnd = fov.boundary(a, ip, n_angles, label=label)
    norm_g = matrix_norm(ip, a)
    out = {"mu_g": bnd.mu, "norm_g": norm_g, "sqrt_kappa2": ip.sqrt_kappa2,
           "rho_e": None, "rho_beta": None, "rho_g": None}
    if bnd.mu > 0:
        out["rho_e"] = bounds.elman_rate(bnd.mu, norm_g)
        out["rho_beta"] = bounds.beckermann_rate(bnd.mu, norm_g)
        out["rho_g"] = bounds.circle_rate(bnd)[1]
    else:
        notes.append(f"mu <= 0 (mu = {bnd.mu:.6g}): bounds not applicable")
    return out, bnd


def bound_curves(summary, bnd, kappa2, k_max):
    if summary["rho_e"] is None:
        return []
    mu_g, norm_g = summary["mu_g"], summary["norm_g"]
    return [bounds.elman(mu_g, norm_g, kappa2, k_max),
            bounds.beckermann(mu_g, norm_g, kappa2, k_max),
            bounds.cp_circle(bnd, kappa2, k_max)]


def _out(config):
    path = Path(config.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_analyze(config):
    """Euclidean and ``G`` quantities together with the bound curves."""
    prep = prepare(config)
    out = _out(config)
    notes = list(prep.warnings)
    a = prep.a
    ip, ip_notes = inner_product(prep, config)
    notes += ip_notes
    euclid = fov.boundary(a, None, config.n_angles, label="euclid")
    summary_g, bnd_g = rates(a, ip, config.n_angles, notes)
    summary = {"matrix": prep.problem.label, "theta": prep.theta,
               "c_choice": config.c_choice, "shift": config.shift,
               "iterations": config.iterations,
               "mu_euclid": euclid.mu, "norm2": spectral_norm(a), **summary_g,
               "warnings": notes}
    k_max = config.k_max if config.k_max is not None else a.shape[0]
    curves = bound_curves(summary_g, bnd_g, ip.kappa2, k_max)
    summary["bounds"] = [c.summary() for c in curves]
    io.write_boundary_csv(euclid, out / "fov_euclid.csv")
    io.write_boundary_csv(bnd_g, out / "fov_g.csv")
    io.write_curves_csv(curves, out / "bounds.csv")
    io.write_json(summary, out / "summary.json")
    return summary


def cmd_fov(config):
    """Boundaries of ``W(A)`` and ``W_G(A)`` with ``mu`` and numerical radius."""
    prep = prepare(config)
    out = _out(config)
    notes = list(prep.warnings)
    ip, ip_notes = inner_product(prep, config)
    notes += ip_notes
    euclid = fov.boundary(prep.a, None, config.n_angles, label="euclid")
    in_g = fov.boundary(prep.a, ip, config.n_angles, label="g")
    io.write_boundary_csv(euclid, out / "fov_euclid.csv")
    io.write_boundary_csv(in_g, out / "fov_g.csv")
    summary = {"matrix": prep.problem.label, "theta": prep.theta,
               "mu_euclid": euclid.mu, "radius_euclid": euclid.radius,
               "mu_g": in_g.mu, "radius_g": in_g.radius,
               "sqrt_kappa2": ip.sqrt_kappa2, "warnings": notes}
    io.write_json(summary, out / "summary.json")
    return summary


def cmd_gmres(config):
    """GMRES traces for random right-hand sides, checked against every bound."""
    prep = prepare(config)
    out = _out(config)
    notes = list(prep.warnings)
    a = prep.a
    ip, ip_notes = inner_product(prep, config)
    notes += ip_notes
    summary_g, bnd = rates(a, ip, config.n_angles, notes)
    traces = gmres.trial_ensemble(a, config.trials, config.seed,
                                  label=prep.problem.label)
    k_max = max(t.iterations for t in traces)
    curves = bound_curves(summary_g, bnd, ip.kappa2, k_max)
    report = {"matrix": prep.problem.label, "trials": config.trials,
              "seed": config.seed, **summary_g, "bounds": {}, "warnings": notes}
    for curve in curves:
        checks = [bounds.validate(t, curve) for t in traces]
        report["bounds"][curve.kind] = {
            "constant": curve.constant, "rate": curve.rate,
            "max_ratio": max(c.max_ratio for c in checks),
            "violations": sum(c.violation for c in checks)}
    io.write_traces_csv(traces, out / "traces.csv")
    io.write_json(report, out / "validate.json")
    return report


ITERATE_COLUMNS = ["m", "sqrt_kappa2", "mu_g", "norm_g", "rho_e", "rho_beta",
                   "rho_g"]


def iterate_rows(a, c, steps, shift, n_angles, out=None, prefix=""):
    """Rows of the inverse-iteration table; optional per-``m`` boundary files."""
    family = inverse_iteration(a, c, steps, shift=shift)
    rows = []
    for m, ip in family:
        notes = []
        summary, bnd = rates(a, ip, n_angles, notes)
        rows.append({"m": m, **{k: summary[k] for k in ITERATE_COLUMNS[1:]}})
        if out is not None:
            io.write_boundary_csv(bnd, Path(out) / f"{prefix}fov_g_m{m}.csv")
    return rows


def cmd_iterate(config):
    """Table over ``m`` for (shifted) Lyapunov inverse iteration from ``G_0 = C``."""
    if config.iterations < 1:
        raise ValueError("iterate needs iterations >= 1")
    prep = prepare(config)
    out = _out(config)
    _check_spectrum(prep.a)
    c = initial_c(prep, "identity" if config.c_choice in ("auto", "none")
                  else config.c_choice)
    rows = iterate_rows(prep.a, c, config.iterations, config.shift,
                        config.n_angles, out if config.boundaries else None)
    io.write_table_csv(ITERATE_COLUMNS,
                       ([r[k] if r[k] is not None else "" for k in ITERATE_COLUMNS]
                        for r in rows), out / "iterate.csv")
    summary = {"matrix": prep.problem.label, "shift": config.shift,
               "c_choice": config.c_choice, "rows": rows,
               "warnings": list(prep.warnings)}
    if config.format == "json":
        io.write_json(summary, out / "iterate.json")
    return summary
