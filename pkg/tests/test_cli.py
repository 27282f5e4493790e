import json

import numpy as np
import pytest

from qlattice.cli import main
from qlattice.golden import worked_example
from qlattice.serialize import dump_json, matrix_to_json, subspace_to_json


@pytest.fixture
def example_files(tmp_path):
    H1, H2, H3, rho = worked_example()
    paths = {}
    for name, H in (("h1", H1), ("h2", H2), ("h3", H3)):
        p = tmp_path / f"{name}.json"
        dump_json(subspace_to_json(H), str(p))
        paths[name] = str(p)
    p = tmp_path / "rho.json"
    dump_json(matrix_to_json(rho.matrix), str(p))
    paths["rho"] = str(p)
    return paths


def test_repro_reports_known_failures(capsys):
    code = main(["repro"])
    out = capsys.readouterr().out
    assert code == 1
    assert "D(1,2,3)" in out
    assert "FAIL" in out and "pass" in out
    assert "failing records:" in out
    # the reproducible rows must pass
    for name in ("D(1,2)", "varpi1", "E[D(1,2)]"):
        line = next(l for l in out.splitlines() if f" {name} " in f" {l.strip()} " or l.strip().startswith(name))
        assert "pass" in line


def test_sweep_exit_zero_and_deterministic(capsys):
    argv = ["sweep", "--d", "3", "--trials", "4", "--seed", "11", "--check", "e3,moments"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    second = capsys.readouterr().out
    assert first == second
    assert "pass" in first


def test_sweep_rejects_unknown_check(capsys):
    assert main(["sweep", "--d", "3", "--check", "nonsense"]) == 2
    assert "UnknownCheck" in capsys.readouterr().err


def test_sweep_rejects_zero_trials(capsys):
    assert main(["sweep", "--d", "3", "--trials", "0"]) == 2
    assert "InvalidConfig" in capsys.readouterr().err


def test_coherent_demo(capsys):
    code = main(["coherent", "--d", "3", "--labels", "0,0;1,1", "--shift", "1,2"])
    out = capsys.readouterr().out
    assert code == 0
    assert f"{np.log(2):.9f}" in out
    assert "covariance" in out


def test_coherent_rejects_even_dimension(capsys):
    assert main(["coherent", "--d", "4", "--labels", "0,0"]) == 2
    assert "EvenDimension" in capsys.readouterr().err


def test_coherent_position_basis(tmp_path, capsys):
    fid = tmp_path / "fid.json"
    dump_json(matrix_to_json(np.array([[1.0], [0.0], [0.0]])), str(fid))
    code = main(["coherent", "--d", "3", "--fiducial", str(fid),
                 "--labels", "0,0;0,1;0,2"])
    out = capsys.readouterr().out
    assert code == 0
    assert "trace: 3.000000" in out


def test_mobius_command_matches_reference(example_files, capsys):
    code = main(["mobius", example_files["h1"], example_files["h2"],
                 "--rho", example_files["rho"]])
    out = capsys.readouterr().out
    assert code == 0
    assert "E = -0.701" in out
    assert "classification: lower" in out
    matrix = json.loads(out[:out.index("eigenvalues")])
    flat = np.array([complex(re, im) for re, im in matrix["data"]]).reshape(3, 3)
    assert abs(flat[0, 0].real - 0.019) <= 5e-3


def test_mobius_orthogonal_lines_zero(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    dump_json({"d": 2, "vectors": [[[1, 0], [0, 0]]]}, str(a))
    dump_json({"d": 2, "vectors": [[[0, 0], [1, 0]]]}, str(b))
    assert main(["mobius", str(a), str(b)]) == 0
    out = capsys.readouterr().out
    assert "trace: 0.000" in out
    matrix = json.loads(out[:out.index("eigenvalues")])
    assert all(abs(re) <= 1e-12 and abs(im) <= 1e-12 for re, im in matrix["data"])


def test_mobius_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{")
    assert main(["mobius", str(bad), str(bad)]) == 2
    assert "ParseError" in capsys.readouterr().err


def test_eps_env_override(monkeypatch):
    from qlattice.tolerances import default_tolerance
    monkeypatch.setenv("QLATTICE_EPS", "1e-6")
    assert default_tolerance().identity_eps == 1e-6
    monkeypatch.delenv("QLATTICE_EPS")
    assert default_tolerance().identity_eps == 1e-9
