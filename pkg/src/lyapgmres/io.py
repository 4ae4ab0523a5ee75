"""Matrix Market and CSV/JSON output.

Floats are written with 17 significant digits so that files round-trip
exactly and identical runs produce byte-identical output.
"""

import csv
import json
from pathlib import Path

import numpy as np
import scipy.io
import scipy.sparse

from ._validation import as_matrix


class MatrixMarketError(ValueError):
    """Malformed or inconsistent Matrix Market file."""


def fmt(x):
    return format(float(x), ".17g")


def read_matrix_market(path):
    """Read a dense or coordinate Matrix Market file as a complex array.

    Symmetric, skew-symmetric and Hermitian storage is expanded.
    """
    path = Path(path)
    try:
        with open(path, "rb") as fh:
            header = fh.readline().decode("ascii", "replace").strip()
        if not header.lower().startswith("%%matrixmarket"):
            raise MatrixMarketError(f"{path}: missing %%MatrixMarket header")
        data = scipy.io.mmread(path)
    except MatrixMarketError:
        raise
    except OSError:
        raise
    except Exception as exc:
        raise MatrixMarketError(f"{path}: {exc}") from exc
    if scipy.sparse.issparse(data):
        data = data.toarray()
    return as_matrix(np.asarray(data), str(path))


def write_matrix_market(a, path, comment=""):
    """Write `a` in dense array format with 17 significant digits."""
    a = np.asarray(a)
    if np.iscomplexobj(a) and not np.any(a.imag):
        a = a.real
    scipy.io.mmwrite(str(path), a, comment=comment, precision=17)


def _dump_rows(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) if isinstance(v, (float, np.floating)) else v
                        for v in row])
    return path


def write_boundary_csv(boundary, path):
    """Columns ``theta, support, re_z, im_z``."""
    rows = zip(boundary.angles.tolist(), boundary.support.tolist(),
               boundary.points.real.tolist(), boundary.points.imag.tolist())
    return _dump_rows(path, ["theta", "support", "re_z", "im_z"], rows)


def write_points_csv(points, path):
    """Columns ``re_z, im_z`` for a bare list of complex points."""
    points = np.asarray(points)
    rows = zip(points.real.tolist(), points.imag.tolist())
    return _dump_rows(path, ["re_z", "im_z"], rows)


def write_traces_csv(traces, path):
    """Columns ``trial, k, rel_residual``."""
    def rows():
        for t, tr in enumerate(traces):
            trial = tr.trial if tr.trial is not None else t
            for k, r in enumerate(np.asarray(tr.rel_residuals).tolist()):
                yield trial, k, r
    return _dump_rows(path, ["trial", "k", "rel_residual"], rows())


def write_curve_csv(curve, path):
    """Columns ``k, bound_value`` for one curve."""
    rows = enumerate(np.asarray(curve.values).tolist())
    return _dump_rows(path, ["k", "bound_value"], rows)


def write_curves_csv(curves, path):
    """Long format ``kind, k, bound_value`` for several curves in one file."""
    def rows():
        for c in curves:
            for k, v in enumerate(np.asarray(c.values).tolist()):
                yield c.kind, k, v
    return _dump_rows(path, ["kind", "k", "bound_value"], rows())


def write_table_csv(header, rows, path):
    return _dump_rows(path, header, rows)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [float(obj.real), float(obj.imag)]
    return obj


def write_json(obj, path):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w") as fh:
        json.dump(_jsonable(obj), fh, indent=2, sort_keys=False)
        fh.write("\n")
    return path


def to_json(obj):
    return json.dumps(_jsonable(obj), indent=2)
