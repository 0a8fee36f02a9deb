"""
Tests for settings, logging, summation, parallel map, helpers, validators and exceptions.
"""

import json
import logging
import math

import numpy as np
import pytest
from pydantic import ValidationError as PydanticValidationError

from src.config.constants import EXIT_CODES
from src.config.settings import get_settings, reload_settings, settings
from src.utils.exceptions import (
    ComputationError,
    ConfigError,
    DomainError,
    PoleError,
    PrecisionError,
    ValidationError,
    to_exit_code,
)
from src.utils.helpers import (
    format_exponents,
    format_number,
    linear_grid,
    log_plus,
    parse_float_list,
    parse_prime_range,
)
from src.utils.logger import log_with_context, setup_logger
from src.utils.parallel import parallel_map, split_chunks
from src.utils.summation import chunked_sum, compensated_sum, two_sum
from src.utils.validators import (
    validate_grid,
    validate_prime_range,
    validate_shifts,
)


def _square(x):
    return x * x


class TestSummation:
    def test_two_sum_is_exact(self):
        s, t = two_sum(1.0, 1e-17)
        assert s == 1.0 and t == 1e-17

    def test_cancellation(self):
        values = [1e16, 1.0, -1e16, 1.0]
        assert compensated_sum(values) == 2.0

    def test_complex(self):
        values = np.array([1e16 + 1j, 1.0 - 1e16j, -1e16 + 1e16j, 1.0])
        assert compensated_sum(values) == 2.0 + 1j

    def test_axis(self):
        values = np.arange(12, dtype=float).reshape(3, 4)
        assert np.array_equal(compensated_sum(values, axis=1), values.sum(axis=1))

    def test_empty(self):
        assert compensated_sum([]) == 0.0

    def test_chunked_matches_math_fsum(self):
        values = np.random.default_rng(0).normal(size=5000) * 1e8
        assert chunked_sum(values, chunk_size=64) == pytest.approx(math.fsum(values), rel=1e-14)


class TestParallel:
    def test_order_preserved(self):
        assert parallel_map(_square, range(20), workers=3) == [i * i for i in range(20)]

    def test_inline(self):
        assert parallel_map(_square, [3], workers=8) == [9]

    def test_split_chunks(self):
        assert split_chunks(list(range(5)), 2) == [[0, 1], [2, 3], [4]]
        with pytest.raises(ValueError):
            split_chunks([1], 0)


class TestHelpers:
    def test_float_list(self):
        assert parse_float_list("0, 0.5,-1e-3") == [0.0, 0.5, -0.001]
        assert parse_float_list("") == []
        with pytest.raises(ValueError):
            parse_float_list("a,b")

    def test_prime_range(self):
        assert parse_prime_range("1009:10007") == (1009, 10007)
        with pytest.raises(ValueError):
            parse_prime_range("1009")

    def test_linear_grid(self):
        assert linear_grid(0.0, 1.0, 3) == [0.0, 0.5, 1.0]
        assert linear_grid(2.0, 5.0, 1) == [2.0]

    def test_log_plus(self):
        assert log_plus(0.5) == 0.0
        assert log_plus(-math.e) == pytest.approx(1.0)

    def test_format_number(self):
        assert format_number(0.1) == "0.1"
        assert format_number(np.float64(1e-10)) == "1e-10"
        assert format_number(True) == "true"
        assert format_number(np.int64(7)) == "7"
        assert format_number([0.0, 0.5]) == "0.0;0.5"
        assert format_number(None) == ""

    def test_format_exponents(self):
        assert format_exponents((1, 0)) == "1;0"
        assert format_exponents(()) == "-"


class TestValidators:
    def test_shifts(self):
        assert validate_shifts([0.0, 1.0])[0]
        assert not validate_shifts([0.0])[0]
        assert not validate_shifts([])[0]
        assert not validate_shifts([0.0, float("nan")])[0]

    def test_prime_range(self):
        assert validate_prime_range(3, 3)[0]
        assert not validate_prime_range(2, 10)[0]
        assert not validate_prime_range(20, 10)[0]

    def test_grid(self):
        assert validate_grid(-1.0, 1.0, 5)[0]
        assert not validate_grid(1.0, -1.0, 5)[0]
        assert not validate_grid(0.0, 1.0, 0)[0]


class TestExceptions:
    def test_domain_error_carries_constraint(self):
        error = DomainError("q too small", constraint="q >= 3")
        assert error.details["constraint"] == "q >= 3"
        assert to_exit_code(error) == EXIT_CODES["USAGE_ERROR"]

    def test_config_error_prefixes_line(self):
        error = ConfigError("bad", line=4, path="run.conf")
        assert error.message == "line 4: bad"
        assert isinstance(error, ValidationError)
        assert to_exit_code(error) == EXIT_CODES["USAGE_ERROR"]

    def test_computation_errors(self):
        assert to_exit_code(PoleError()) == EXIT_CODES["COMPUTATION_ERROR"]
        assert to_exit_code(PrecisionError("unreachable", achieved=1e-9)) == EXIT_CODES["COMPUTATION_ERROR"]
        assert to_exit_code(ComputationError("failed")) == EXIT_CODES["COMPUTATION_ERROR"]
        assert to_exit_code(RuntimeError("boom")) == EXIT_CODES["COMPUTATION_ERROR"]


class TestSettings:
    def test_environment_overrides(self, monkeypatch):
        monkeypatch.setenv("WORKERS", "1")
        monkeypatch.setenv("DEFAULT_TOL", "1e-12")
        monkeypatch.setenv("LOG_LEVEL", "debug")
        fresh = reload_settings()
        assert fresh.WORKERS == 1
        assert fresh.DEFAULT_TOL == 1e-12
        assert fresh.LOG_LEVEL == "DEBUG"
        assert fresh.run_defaults["tol"] == 1e-12

    def test_rejects_bad_format(self, monkeypatch):
        monkeypatch.setenv("OUTPUT_FORMAT", "xml")
        with pytest.raises(PydanticValidationError):
            reload_settings()

    def test_shared_instance(self):
        assert get_settings() is settings


class TestLogger:
    def test_import_leaves_logging_unconfigured(self):
        assert logging.getLogger("thetamoments").handlers == []

    def test_json_context(self, capsys):
        logger = setup_logger("thetamoments.json_check", "INFO", log_format="json")
        log_with_context(logger, "WARNING", "column above tolerance", q=7, tol=1e-16)
        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record["message"] == "column above tolerance"
        assert record["level"] == "WARNING"
        assert record["extra"] == {"q": 7, "tol": 1e-16}
