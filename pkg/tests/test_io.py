import numpy as np
import pytest

from lyapgmres import fov, gallery, io
from lyapgmres.bounds import elman
from lyapgmres.gmres import trial_ensemble


def test_complex_array_file(tmp_path):
    path = tmp_path / "a.mtx"
    path.write_text("%%MatrixMarket matrix array complex general\n2 2\n"
                    "1 2\n3 4\n5 6\n7 8\n")
    np.testing.assert_array_equal(io.read_matrix_market(path),
                                  [[1 + 2j, 5 + 6j], [3 + 4j, 7 + 8j]])


def test_hermitian_coordinate_expanded(tmp_path):
    path = tmp_path / "h.mtx"
    path.write_text("%%MatrixMarket matrix coordinate complex hermitian\n"
                    "2 2 3\n1 1 2 0\n2 1 1 -1\n2 2 3 0\n")
    np.testing.assert_array_equal(io.read_matrix_market(path),
                                  [[2, 1 + 1j], [1 - 1j, 3]])


def test_round_trip_bitwise(tmp_path, rng):
    a = gallery.integration_matrix(10, 2.0)
    io.write_matrix_market(a, tmp_path / "i.mtx")
    np.testing.assert_array_equal(io.read_matrix_market(tmp_path / "i.mtx"), a)
    z = rng.standard_normal((5, 4)) + 1j * rng.standard_normal((5, 4))
    io.write_matrix_market(z, tmp_path / "z.mtx")
    np.testing.assert_array_equal(io.read_matrix_market(tmp_path / "z.mtx"), z)


@pytest.mark.parametrize("text", [
    "not a header\n2 2\n1\n2\n3\n4\n",
    "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n",
    "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n",
])
def test_malformed(tmp_path, text):
    path = tmp_path / "bad.mtx"
    path.write_text(text)
    with pytest.raises(io.MatrixMarketError):
        io.read_matrix_market(path)


def test_csv_schemas(tmp_path):
    b = fov.boundary(np.diag([1.0, 2.0]), n_angles=8)
    io.write_boundary_csv(b, tmp_path / "b.csv")
    lines = (tmp_path / "b.csv").read_text().splitlines()
    assert lines[0] == "theta,support,re_z,im_z" and len(lines) == 9
    traces = trial_ensemble(np.eye(3), 2, seed=0)
    io.write_traces_csv(traces, tmp_path / "t.csv")
    rows = [line.split(",") for line in (tmp_path / "t.csv").read_text().splitlines()]
    assert rows[0] == ["trial", "k", "rel_residual"]
    assert [r[:2] for r in rows[1:]] == [["0", "0"], ["0", "1"], ["1", "0"], ["1", "1"]]
    assert [float(r[2]) for r in rows[1:]] == pytest.approx([1, 0, 1, 0], abs=1e-15)
    curve = elman(0.5, 1.0, 1.0, 2)
    io.write_curve_csv(curve, tmp_path / "c.csv")
    assert (tmp_path / "c.csv").read_text().splitlines()[0] == "k,bound_value"
    io.write_curves_csv([curve], tmp_path / "cs.csv")
    assert (tmp_path / "cs.csv").read_text().splitlines()[1].startswith("elman,0,")


def test_float_format_round_trips():
    x = 0.1 + 0.2
    assert float(io.fmt(x)) == x


def test_json_handles_numpy(tmp_path):
    io.write_json({"a": np.float64(1.5), "b": np.int64(2), "c": np.bool_(True),
                   "z": 1 + 2j, "l": (np.float32(0.5),)}, tmp_path / "x.json")
    import json
    assert json.loads((tmp_path / "x.json").read_text()) == {
        "a": 1.5, "b": 2, "c": True, "z": [1.0, 2.0], "l": [0.5]}
