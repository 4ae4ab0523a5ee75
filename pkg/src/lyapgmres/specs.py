"""Parser for the matrix mini-language used on the command line.

Grammar::

    family:key=value[,key=value...]     e.g. jordan:n=100,alpha=1.1
    file:<path>                         Matrix Market file

Families and their (required) parameters:

=============  ==========================
jordan         n (int), alpha (float)
integration    n (int), gamma (float)
string         N (int)
kkt            M (int), N (int), eta (float or 'auto'), seed (int)
=============  ==========================
"""

from . import gallery
from .io import read_matrix_market


class MatrixSpecError(ValueError):
    """A matrix spec string could not be parsed."""


def _int(token, key, value):
    try:
        return int(value)
    except ValueError:
        raise MatrixSpecError(
            f"{token!r}: parameter {key}={value!r} is not an integer") from None


def _float(token, key, value):
    try:
        return float(value)
    except ValueError:
        raise MatrixSpecError(
            f"{token!r}: parameter {key}={value!r} is not a number") from None


def _eta(token, key, value):
    return "auto" if value == "auto" else _float(token, key, value)


FAMILIES = {
    "jordan": ({"n": _int, "alpha": _float},
               lambda p: gallery.GalleryProblem(
                   a=gallery.jordan_matrix(p["n"], p["alpha"]), label="",
                   parameters=p)),
    "integration": ({"n": _int, "gamma": _float},
                    lambda p: gallery.GalleryProblem(
                        a=gallery.integration_matrix(p["n"], p["gamma"]),
                        label="", parameters=p)),
    "string": ({"N": _int}, lambda p: gallery.damped_string(p["N"])),
    "kkt": ({"M": _int, "N": _int, "eta": _eta, "seed": _int},
            lambda p: gallery.kkt_matrix(p["M"], p["N"], p["eta"], p["seed"])),
}


def parse_matrix_spec(spec):
    """Build the :class:`~lyapgmres.gallery.GalleryProblem` named by `spec`."""
    spec = spec.strip()
    family, sep, rest = spec.partition(":")
    if not sep:
        raise MatrixSpecError(f"{spec!r}: expected 'family:key=value,...'")
    if family == "file":
        if not rest:
            raise MatrixSpecError(f"{spec!r}: missing file path")
        try:
            a = read_matrix_market(rest)
        except OSError as exc:
            raise MatrixSpecError(f"{spec!r}: cannot read file: {exc}") from exc
        return gallery.GalleryProblem(a=a, label=spec, parameters={"path": rest})
    if family not in FAMILIES:
        raise MatrixSpecError(f"{spec!r}: unknown matrix family {family!r}; "
                              f"expected one of {sorted(FAMILIES) + ['file']}")
    converters, build = FAMILIES[family]
    params = {}
    for token in filter(None, (t.strip() for t in rest.split(","))):
        key, eq, value = token.partition("=")
        if not eq:
            raise MatrixSpecError(f"{spec!r}: token {token!r} is not key=value")
        if key not in converters:
            raise MatrixSpecError(f"{spec!r}: unexpected parameter {key!r} for "
                                  f"{family}; expected {sorted(converters)}")
        if key in params:
            raise MatrixSpecError(f"{spec!r}: parameter {key!r} given twice")
        params[key] = converters[key](token, key, value)
    missing = sorted(set(converters) - set(params))
    if missing:
        raise MatrixSpecError(f"{spec!r}: missing parameter(s) {missing}")
    try:
        problem = build(params)
    except ValueError as exc:
        raise MatrixSpecError(f"{spec!r}: {exc}") from exc
    problem.label = spec
    return problem
