"""Tests for config parsing and the command-line interface."""

import numpy as np
import pytest

from conftest import M0, SQRT2
from gqms.cli import main
from gqms.config import ConfigError, format_model, parse_model_text

M0_TEXT = """\
# rotation with balanced loss/gain
omega = 1.0
kraus = 1.4142135623730951 0 0 0
kraus = 0 0 1 0
"""

M1_TEXT = """\
omega = 0.0
kappa_im = 0.4714045207910317
kraus = 1.4142135623730951 0 1 0
"""

INVALID_TEXT = """\
omega = 1.0
kraus = 0 0 1 0
"""


@pytest.fixture
def m0_cfg(tmp_path):
    path = tmp_path / "m0.cfg"
    path.write_text(M0_TEXT)
    return str(path)


@pytest.fixture
def m1_cfg(tmp_path):
    path = tmp_path / "m1.cfg"
    path.write_text(M1_TEXT)
    return str(path)


class TestConfigParsing:
    def test_parses_m0(self):
        model = parse_model_text(M0_TEXT)
        assert model.omega == 1.0 and model.kappa == 0 and len(model.kraus) == 2
        assert abs(model.kraus[0][0] - SQRT2) < 1e-15

    def test_round_trip(self):
        model = parse_model_text(M0_TEXT)
        assert parse_model_text(format_model(model)) == model

    def test_unknown_key_cites_line(self):
        with pytest.raises(ConfigError, match=":2: unknown key 'Omega'"):
            parse_model_text("omega = 1\nOmega = 2\nkraus = 1 0 0 0\n")

    def test_duplicate_key(self):
        with pytest.raises(ConfigError, match="duplicate"):
            parse_model_text("omega = 1\nomega = 2\nkraus = 1 0 0 0\n")

    def test_bad_kraus_arity(self):
        with pytest.raises(ConfigError, match="kraus needs 4 values"):
            parse_model_text("kraus = 1 0 0\n")

    def test_non_numeric(self):
        with pytest.raises(ConfigError, match="non-numeric"):
            parse_model_text("omega = fast\nkraus = 1 0 0 0\n")

    def test_requires_kraus(self):
        with pytest.raises(ConfigError, match="kraus"):
            parse_model_text("omega = 1\n")


class TestSpectrumCommand:
    def test_lattice_csv(self, m0_cfg, tmp_path, capsys):
        out = tmp_path / "lattice.csv"
        code = main(
            ["spectrum", "--config", m0_cfg, "--s", "0.5", "--max-degree", "3",
             "--out", str(out)]
        )
        assert code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == "re,im,n,m,multiplicity"
        assert "-0.5,-1,1,0,1" in lines

    def test_deterministic_output(self, m0_cfg, tmp_path):
        out1, out2 = tmp_path / "a.csv", tmp_path / "b.csv"
        for out in (out1, out2):
            assert main(["spectrum", "--config", m0_cfg, "--out", str(out)]) == 0
        assert out1.read_bytes() == out2.read_bytes()

    def test_svg_scatter(self, m0_cfg, tmp_path):
        svg = tmp_path / "lattice.svg"
        code = main(
            ["spectrum", "--config", m0_cfg, "--max-degree", "2",
             "--out", str(tmp_path / "l.csv"), "--svg", str(svg)]
        )
        assert code == 0
        body = svg.read_text()
        assert body.startswith("<svg")
        assert body.count("<circle") == 6  # six simple lattice points at degree 2

    def test_invalid_model_exits_2(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(INVALID_TEXT)
        assert main(["spectrum", "--config", cfg.as_posix()]) == 2
        assert "gamma" in capsys.readouterr().err

    def test_missing_file_exits_2(self, tmp_path):
        assert main(["spectrum", "--config", str(tmp_path / "nope.cfg")]) == 2


class TestGapCommand:
    def test_m1_values(self, m1_cfg, tmp_path, capsys):
        out = tmp_path / "gap.csv"
        assert main(["gap", "--config", m1_cfg, "--out", str(out)]) == 0
        stdout = capsys.readouterr().out
        assert "gap_kms = 0.028595479209" in stdout
        assert "gap_gns = 0" in stdout
        rows = dict(
            line.split(",") for line in out.read_text().splitlines()[1:]
        )
        assert abs(float(rows["gap_kms"]) - 0.0285955) < 1e-6
        assert rows["zero_simple_gns"] == "0"
        assert rows["compact_resolvent_kms"] == "1"

    def test_non_diagonal_exits_2(self, tmp_path):
        cfg = tmp_path / "nd.cfg"
        cfg.write_text("omega = 1\nkappa_re = 0.3\nkraus = 1.4 0 0.5 0\n")
        assert main(["gap", "--config", str(cfg)]) == 2


class TestVerifyCommand:
    def test_quick_campaign(self, m0_cfg, tmp_path, capsys):
        out = tmp_path / "verify.csv"
        code = main(
            [
                "verify", "--config", m0_cfg, "--n-max", "20", "--max-degree", "3",
                "--workers", "2", "--out", str(out),
                # loosened for the small cutoff; defaults assume n_max = 40
                "--tol", "spectrum_convergence=1e-1",
                "--tol", "weyl_action=1e-2",
                "--tol", "gap_numeric=1e-2",
                "--tol", "characteristic_invariance=1e-4",
                "--tol", "adjoint_spectrum=1e-4",
            ]
        )
        stdout = capsys.readouterr().out
        assert code == 0, stdout
        lines = out.read_text().splitlines()
        assert lines[0] == "quantity,value,tolerance,status"
        assert all(line.endswith(",pass") for line in lines[1:])
        assert "checks passed" in stdout

    def test_invalid_model_exits_2(self, tmp_path, capsys):
        cfg = tmp_path / "bad.cfg"
        cfg.write_text(INVALID_TEXT)
        assert main(["verify", "--config", str(cfg)]) == 2
        err = capsys.readouterr().err
        assert "gamma > 0" in err and "gamma^2 + Omega^2 - |kappa|^2 > 0" in err

    def test_unknown_tolerance_rejected(self, m0_cfg):
        assert main(["verify", "--config", m0_cfg, "--tol", "nope=1"]) == 2


class TestStandardizeCommand:
    def test_m0(self, m0_cfg, capsys):
        assert main(["standardize", "--config", m0_cfg]) == 0
        out = capsys.readouterr().out
        assert "nu = 3" in out
        assert "beta = 0.693147180560" in out

    def test_displaced_model(self, tmp_path, capsys):
        cfg = tmp_path / "disp.cfg"
        cfg.write_text(
            "omega = 1.0\nzeta_re = -0.5\nzeta_im = -1.0\n"
            "kraus = 1.4142135623730951 0 0 0\nkraus = 0 0 1 0\n"
        )
        assert main(["standardize", "--config", str(cfg)]) == 0
        out = capsys.readouterr().out
        assert "omega_re = 1" in out


class TestDualCommand:
    def test_m0_round_trip(self, m0_cfg, tmp_path):
        out = tmp_path / "dual.cfg"
        assert main(["dual", "--config", m0_cfg, "--out", str(out)]) == 0
        dual = parse_model_text(out.read_text())
        assert dual.omega == -1.0
        pairs = np.array(dual.kraus, dtype=complex)
        assert np.allclose(sorted(pairs[:, 0], key=abs), [0, SQRT2], atol=1e-12)

    def test_rejects_non_diagonal(self, tmp_path):
        cfg = tmp_path / "nd.cfg"
        cfg.write_text("omega = 1\nkappa_re = 0.3\nkraus = 1.4 0 0.5 0\n")
        assert main(["dual", "--config", str(cfg)]) == 2
