"""
Tests for the command-line interface, report files and configuration loading.
"""

import json

import pytest

from src.cli import create_parser, run
from src.cli.config_loader import load_config, parse_config_text
from src.config.constants import SUBCOMMANDS
from src.config.settings import settings
from src.schemas.common import ReportEnvelope
from src.schemas.reports import MomentReport
from src.utils.exceptions import ConfigError, ValidationError


def _run(output_dir, *argv):
    return run([*argv, "--output-dir", str(output_dir), "--workers", "1"])


class TestParser:
    def test_help(self, capsys):
        assert run(["--help"]) == 0
        assert "theta-moment" in capsys.readouterr().out

    def test_subcommand_help(self):
        assert run(["rand-model", "--help"]) == 0

    def test_unknown_flag(self, output_dir):
        assert _run(output_dir, "theta-moment", "--q", "5", "--bogus") == 2

    def test_missing_command(self):
        assert run([]) == 2

    def test_every_subcommand_registered(self):
        parser = create_parser()
        choices = parser._subparsers._group_actions[0].choices
        assert set(SUBCOMMANDS) == set(choices)


class TestExitCodes:
    def test_theta_modulus_too_small(self, output_dir, capsys):
        assert _run(output_dir, "theta-moment", "--q", "0") == 2
        assert "q >= 3" in capsys.readouterr().err

    def test_bound_eval_small_modulus(self, output_dir):
        assert _run(output_dir, "bound-eval", "--q", "13", "--shifts", "0,0") == 2

    def test_shift_count_mismatch(self, output_dir):
        assert _run(output_dir, "bound-eval", "--q", "101", "--shifts", "0,0", "--k", "2") == 2

    def test_bad_config_file(self, output_dir, tmp_path, capsys):
        config = tmp_path / "run.conf"
        config.write_text("tol=1e-8\nthis line is wrong\n")
        assert _run(output_dir, "char-table", "--q", "5", "--config", str(config)) == 2
        assert "line 2" in capsys.readouterr().err


class TestReports:
    def test_csv_is_reproducible(self, output_dir):
        argv = ("theta-moment", "--q", "13", "--k", "2", "--parity", "odd")
        assert _run(output_dir, *argv) == 0
        first = (output_dir / "theta-moment.csv").read_bytes()
        assert _run(output_dir, *argv) == 0
        assert (output_dir / "theta-moment.csv").read_bytes() == first

    def test_csv_layout(self, output_dir):
        assert _run(output_dir, "theta-moment", "--q", "5") == 0
        lines = (output_dir / "theta-moment.csv").read_text().splitlines()
        assert lines[0] == f"# tool_version={settings.VERSION}"
        assert "# params.q=5" in lines
        assert not any(line.startswith("# workers") for line in lines)
        header = [line for line in lines if not line.startswith("#")][0]
        assert header == "q,k,parity,raw,normalization,ratio,eps,family_size"

    def test_json_envelope(self, output_dir, capsys):
        assert _run(output_dir, "theta-moment", "--q", "5", "--format", "json") == 0
        text = (output_dir / "theta-moment.json").read_text()
        assert text in capsys.readouterr().out
        envelope = ReportEnvelope.model_validate(json.loads(text))
        assert envelope.report_type == "MomentReport"
        assert envelope.config.params["q"] == 5
        (report,) = envelope.reports()
        assert isinstance(report, MomentReport)
        assert report.family_size == 1

    def test_config_file_tol_in_envelope(self, output_dir, tmp_path):
        config = tmp_path / "run.conf"
        config.write_text("tol=1e-12\n")
        assert _run(output_dir, "theta-moment", "--q", "7", "--format", "json",
                    "--config", str(config)) == 0
        data = json.loads((output_dir / "theta-moment.json").read_text())
        assert data["config"]["tol"] == 1e-12
        assert data["payload"][0]["eps"] == 1e-12

    def test_bound_eval_is_json(self, output_dir):
        assert _run(output_dir, "bound-eval", "--q", "101", "--shifts", "0,0.5", "--V", "10") == 0
        data = json.loads((output_dir / "bound-eval.json").read_text())
        assert data["report_type"] == "BoundProfile"
        assert data["payload"][0]["k"] == 1

    def test_large_values_rows(self, output_dir):
        argv = ("large-values", "--q", "31", "--shifts", "0,0", "--vmin", "-2", "--vmax", "2", "--vsteps", "5")
        assert _run(output_dir, *argv) == 0
        lines = [line for line in (output_dir / "large-values.csv").read_text().splitlines()
                 if not line.startswith("#")]
        assert lines[0] == "V,count"
        assert len(lines) == 6

    def test_rand_model(self, output_dir):
        argv = ("rand-model", "--q", "29", "--samples", "200", "--seed", "5")
        assert _run(output_dir, *argv) == 0
        text = (output_dir / "rand-model.csv").read_text()
        assert "# seed=5" in text.splitlines()

    def test_char_table(self, output_dir):
        assert _run(output_dir, "char-table", "--q", "5") == 0
        lines = (output_dir / "char-table.csv").read_text().splitlines()
        assert len([line for line in lines if not line.startswith("#")]) == 5


class TestConfigLoader:
    def test_defaults(self, tmp_path):
        path = tmp_path / "empty.conf"
        path.write_text("")
        config = load_config(str(path))
        assert config.tol == settings.DEFAULT_TOL
        assert config.seed == settings.DEFAULT_SEED

    def test_file_values(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("# comment\ntol = 1e-12\n\nformat=json  # trailing\n")
        config = load_config(str(path))
        assert config.tol == 1e-12
        assert config.format == "json"

    def test_flags_override_file(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("tol=1e-12\nseed=3\n")
        config = load_config(str(path), overrides={"tol": 1e-6, "seed": None})
        assert config.tol == 1e-6
        assert config.seed == 3

    def test_zero_workers(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("workers=0\n")
        with pytest.raises(ValidationError) as exc_info:
            load_config(str(path))
        assert exc_info.value.details["field"] == "workers"

    def test_malformed_line(self):
        with pytest.raises(ConfigError) as exc_info:
            parse_config_text("tol=1e-10\nseed\n")
        assert exc_info.value.line == 2
        assert "line 2" in exc_info.value.message

    def test_unknown_key(self):
        with pytest.raises(ConfigError) as exc_info:
            parse_config_text("precision=1\n")
        assert exc_info.value.line == 1

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(str(tmp_path / "absent.conf"))
