"""Reproduction targets with fixed parameters, output names and reference checks.

Every target writes its data files plus ``report.json`` with the schema
``{target, checks: [{name, expected, actual, tol, pass}]}``.
"""

from dataclasses import asdict, dataclass
from pathlib import Path

import numpy as np

from . import bounds, expected, fov, gallery, gmres, io
from .analysis import ITERATE_COLUMNS, iterate_rows, rates
from .gram import GramInnerProduct
from .lyapunov import inverse_iteration

TARGETS = ("fig2", "fig3", "fig4", "fig5", "fig6", "table1", "fig7")


@dataclass
class Check:
    name: str
    expected: object
    actual: object
    tol: object
    passed: bool

    def as_dict(self):
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def check_rel(name, exp, act, rtol):
    ok = bool(abs(act - exp) <= rtol * abs(exp))
    return Check(name, exp, float(act), rtol, ok)


def check_abs(name, exp, act, atol):
    return Check(name, exp, float(act), atol, bool(abs(act - exp) <= atol))


def check_range(name, lo, hi, act):
    return Check(name, [lo, hi], float(act), None, bool(lo <= act <= hi))


def check_le(name, bound, act):
    return Check(name, f"<= {bound}", float(act), bound, bool(act <= bound))


def check_true(name, act, detail=None):
    return Check(name, True, detail if detail is not None else bool(act), None,
                 bool(act))


@dataclass
class Report:
    target: str
    checks: list

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def as_dict(self):
        return {"target": self.target, "passed": self.passed,
                "checks": [c.as_dict() for c in self.checks]}


def _integration(spec):
    return gallery.integration_matrix(spec["n"], spec["gamma"])


def _iteration_table(spec, out, name):
    a = _integration(spec)
    c = np.eye(a.shape[0], dtype=np.complex128)
    rows = iterate_rows(a, c, len(spec["mu_g"]), spec["shift"],
                        fov.DEFAULT_ANGLES, out, prefix=f"{name}_")
    io.write_table_csv(ITERATE_COLUMNS,
                       ([r[k] for k in ITERATE_COLUMNS] for r in rows),
                       out / f"{name}_table.csv")
    checks = []
    for r in rows:
        i = r["m"] - 1
        for key in ("sqrt_kappa2", "mu_g", "norm_g"):
            checks.append(check_rel(f"{key}[m={r['m']}]", spec[key][i], r[key],
                                    spec["rtol"]))
    return checks


def fig5(out):
    return _iteration_table(expected.FIG5, out, "fig5")


def fig6(out):
    return _iteration_table(expected.FIG6, out, "fig6")


def table1(out):
    spec = expected.TABLE1
    a = _integration(expected.FIG5)
    c = np.eye(a.shape[0], dtype=np.complex128)
    families = {}
    for shift in sorted({s for s, _ in spec["cases"]}):
        m_max = max(m for s, m in spec["cases"] if s == shift)
        families[shift] = inverse_iteration(a, c, m_max, shift=shift)
    found = {"rho_e": [], "rho_beta": [], "rho_g": []}
    for shift, m in spec["cases"]:
        summary, _ = rates(a, families[shift][m], spec["n_angles"], [])
        for key in found:
            found[key].append(summary[key])
    header = ["rate"] + [f"s={s:g},m={m}" for s, m in spec["cases"]]
    io.write_table_csv(header, ([key] + vals for key, vals in found.items()),
                       out / "table1.csv")
    checks = []
    tols = {"rho_e": spec["atol_e"], "rho_beta": spec["atol_beta"],
            "rho_g": spec["atol_g"]}
    for key, vals in found.items():
        for (shift, m), exp, act in zip(spec["cases"], spec[key], vals):
            checks.append(check_abs(f"{key}[s={shift:g},m={m}]", exp, act,
                                    tols[key]))
    worst = max(abs(act - exp) for key in found
                for exp, act in zip(spec[key], found[key]))
    checks.append(Check("max_abs_deviation", 0.0, worst, spec["atol_g"],
                        bool(worst <= spec["atol_g"])))
    return checks


def fig2(out):
    spec = expected.FIG2
    problem = gallery.damped_string(spec["N"])
    ip = GramInnerProduct.from_matrix(problem.g_explicit)
    a = -problem.a
    euclid = fov.boundary(a, None, label="euclid")
    in_g = fov.boundary(a, ip, label="g")
    io.write_boundary_csv(euclid, out / "fig2_fov_euclid.csv")
    io.write_boundary_csv(in_g, out / "fig2_fov_g.csv")
    lam = np.linalg.eigvals(problem.a)
    io.write_points_csv(np.sort_complex(lam), out / "fig2_eigenvalues.csv")
    target = -problem.parameters["a"]
    dist = np.sort(np.abs(lam - target))
    split = float(dist[1] / abs(target))
    return [
        check_rel("sqrt_kappa2", spec["sqrt_kappa2"], ip.sqrt_kappa2, spec["rtol"]),
        check_le("lyapunov_residual", spec["max_lyapunov_residual"],
                 problem.lyapunov_residual()),
        check_le("double_eigenvalue_split", spec["double_eig_rtol"], split),
        check_true("mu_g_positive", in_g.mu > 0, in_g.mu),
    ]


def _fan(a, ip, summary, bnd, trials, label, out, prefix):
    traces = gmres.trial_ensemble(a, trials, expected.SEED, label=label)
    io.write_traces_csv(traces, out / f"{prefix}_traces.csv")
    k_max = max(t.iterations for t in traces)
    curves = [bounds.elman(summary["mu_g"], summary["norm_g"], ip.kappa2, k_max),
              bounds.beckermann(summary["mu_g"], summary["norm_g"], ip.kappa2,
                                k_max),
              bounds.cp_circle(bnd, ip.kappa2, k_max)]
    io.write_curves_csv(curves, out / f"{prefix}_bounds.csv")
    checks = []
    for curve in curves:
        worst = max(bounds.validate(t, curve).max_ratio for t in traces)
        limit = 1 + bounds.VIOLATION_SLACK
        checks.append(check_le(f"{curve.kind}_max_ratio", limit, worst))
    return checks, traces


def fig3(out):
    spec = expected.FIG3
    a = gallery.jordan_matrix(spec["n"], spec["alpha"])
    ip = inverse_iteration(a, np.eye(spec["n"]), 1)[1]
    notes = []
    summary, bnd = rates(a, ip, fov.DEFAULT_ANGLES, notes)
    io.write_boundary_csv(fov.boundary(a, None, label="euclid"),
                          out / "fig3_fov_euclid.csv")
    io.write_boundary_csv(bnd, out / "fig3_fov_g.csv")
    lo, hi = spec["mu_g"] / spec["mu_factor"], spec["mu_g"] * spec["mu_factor"]
    checks = [check_rel("sqrt_kappa2", spec["sqrt_kappa2"], ip.sqrt_kappa2,
                        spec["rtol"]),
              check_range("mu_g", lo, hi, summary["mu_g"])]
    if summary["rho_e"] is not None:
        fan, _ = _fan(a, ip, summary, bnd, spec["trials"], "jordan", out, "fig3")
        checks += fan
    return checks


def fig4(out):
    spec = expected.FIG4
    a = _integration(spec)
    ip = inverse_iteration(a, np.eye(spec["n"]), 1)[1]
    summary, bnd = rates(a, ip, fov.DEFAULT_ANGLES, [])
    io.write_boundary_csv(fov.boundary(a, None, label="euclid"),
                          out / "fig4_fov_euclid.csv")
    io.write_boundary_csv(bnd, out / "fig4_fov_g.csv")
    checks = [check_range("mu_g", *spec["mu_g_range"], summary["mu_g"]),
              check_range("sqrt_kappa2", *spec["sqrt_kappa2_range"],
                          ip.sqrt_kappa2)]
    fan, _ = _fan(a, ip, summary, bnd, spec["trials"], "integration", out, "fig4")
    return checks + fan


def fig7(out):
    spec = expected.FIG7
    a = _integration(spec)
    omega = fov.omega_set(a)
    power = fov.power_fov(a)
    io.write_points_csv(omega.points, out / "fig7_omega.csv")
    io.write_points_csv(power, out / "fig7_power_fov.csv")
    io.write_boundary_csv(fov.boundary(a, None, label="euclid"),
                          out / "fig7_fov_euclid.csv")
    min_abs = float(np.min(np.abs(omega.points)))
    return [
        check_true("power_fov_min_re_positive", power.real.min() > 0,
                   float(power.real.min())),
        Check("omega_min_abs", f">= {omega.cut_radius!r} - {spec['cut_slack']}",
              min_abs, spec["cut_slack"],
              bool(min_abs >= omega.cut_radius - spec["cut_slack"])),
    ]


RUNNERS = {"fig2": fig2, "fig3": fig3, "fig4": fig4, "fig5": fig5, "fig6": fig6,
           "table1": table1, "fig7": fig7}


def run(target, output_dir="."):
    """Run one target, write its files and ``report.json``; return the report."""
    if target not in RUNNERS:
        raise ValueError(f"unknown target {target!r}; expected one of {TARGETS}")
    out = Path(output_dir)
    out.mkdir(parents=True, exist_ok=True)
    report = Report(target, RUNNERS[target](out))
    io.write_json(report.as_dict(), out / "report.json")
    return report
