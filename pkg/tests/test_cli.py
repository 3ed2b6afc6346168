import csv
import io
import json
import math

import numpy as np
import pytest

from crosscoef.cli import main


def _csv(text):
    return np.array([[float(v) for v in row] for row in csv.reader(io.StringIO(text))])


def test_fill_legendre_x2_csv(capsys):
    assert main(["fill", "--case", "legendre-x2", "--n", "12"]) == 0
    T = _csv(capsys.readouterr().out)
    assert T.shape == (13, 13)
    assert T[0, 0] == pytest.approx(1 / 3, abs=1e-15)
    assert T[1, 1] == pytest.approx(0.6, abs=1e-15)


def test_csv_header(capsys):
    assert main(["closed", "--case", "identity", "--n", "3", "--header"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    assert rows[0] == ["", "0", "1", "2", "3"]
    assert rows[2][0] == "1" and float(rows[2][2]) == 1.0


def test_gtable_json_verify(capsys):
    assert main(["gtable", "--m", "0", "--n", "8", "--format", "json", "--verify"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["report"]["oracle_dev"] <= 1e-8
    assert payload["entries"][0][0] == pytest.approx(math.pi, rel=1e-15)
    assert payload["entries"][2][2] == pytest.approx(11 * math.pi / 32, rel=1e-14)


def test_laguerre_connect_equal_parameters_is_identity(capsys):
    code = main(["verify", "--case", "laguerre-connect", "--alpha", "1.5", "--beta", "1.5",
                 "--n", "10", "--format", "json"])
    assert code == 0
    T = np.array(json.loads(capsys.readouterr().out)["entries"])
    assert np.abs(T - np.eye(11)).max() <= 1e-12


@pytest.mark.parametrize(
    "case, extra",
    [
        ("identity", []),
        ("legendre-x2", []),
        ("laguerre-connect", ["--alpha", "2.5", "--beta", "0.5"]),
        ("ultraspherical-F", ["--alpha", "2"]),
    ],
)
def test_verify_passes(case, extra, capsys):
    assert main(["verify", "--case", case, "--n", "16", *extra]) == 0
    assert "PASS" in capsys.readouterr().err


def test_verify_signed_laguerre_fails(capsys):
    # the closed signed table disagrees with its own oracle; see the README
    assert main(["verify", "--case", "laguerre-signed", "--alpha", "1", "--n", "10"]) == 1
    assert "FAIL" in capsys.readouterr().err


def test_json_round_trip_is_exact(tmp_path, capsys):
    out = tmp_path / "t.json"
    assert main(["fill", "--case", "laguerre-connect", "--alpha", "2.5", "--beta", "0.5",
                 "--n", "12", "--format", "json", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["m_max"] == payload["n_max"] == 12
    assert payload["params"] == {"alpha": 2.5, "beta": 0.5}

    csv_out = tmp_path / "t.csv"
    assert main(["fill", "--case", "laguerre-connect", "--alpha", "2.5", "--beta", "0.5",
                 "--n", "12", "-o", str(csv_out)]) == 0
    assert np.array_equal(_csv(csv_out.read_text()), np.array(payload["entries"]))


def test_coeffs(capsys):
    assert main(["coeffs", "--family", "laguerre", "--param", "1", "--n", "2"]) == 0
    T = _csv(capsys.readouterr().out)
    np.testing.assert_allclose(T[2], [2, 6, math.sqrt(12)], rtol=1e-15)


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--case", "laguerre-signed", "--alpha", "0", "--n", "4"],
        ["verify", "--case", "laguerre-connect", "--alpha", "-1", "--n", "4"],
        ["gtable", "--m", "5", "--n", "3"],
        ["coeffs", "--family", "ultraspherical", "--param", "-2", "--n", "3"],
    ],
)
def test_invalid_configuration_exits_2(argv, capsys):
    assert main(argv) == 2
    assert "error" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [["fill", "--case", "nope", "--n", "3"], ["fill", "--case", "identity", "--n", "0"]])
def test_malformed_flags_exit_2(argv):
    with pytest.raises(SystemExit) as info:
        main(argv)
    assert info.value.code == 2
