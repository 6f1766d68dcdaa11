"""
Unit Tests for Configuration, Errors and Logging Setup

Author: Disintegrator Team
Date: 2026-10-17
"""

import inspect
import json
import logging
import pytest
from pydantic import ValidationError

from disintegrator.shared import exceptions
from disintegrator.shared.config import Config, get_config, reset_config, set_config
from disintegrator.shared.exceptions import (
    AmbiguousAtom, ConfigException, ContractError, DisintegratorException, DivisorStraddlesZero, FuelError,
    InputDemandExceeded, NeedMoreInput,
    NullConditioningSet, OracleException, SearchDiverged, SpaceMismatch, SpecValidationError,
)
from disintegrator.shared.logging_setup import configure_logging


class TestConfig:
    """Test the settings singleton"""

    def test_defaults(self):
        """Defaults match the documented values"""
        config = get_config()
        assert config.default_precision == 20
        assert config.default_fuel == 64
        assert config.witness_bound == 128
        assert config.input_demand_cap == 2 ** 20
        assert config.mixture_initial_horizon == 4
        assert config.report_schema == 1

    def test_environment_override(self, monkeypatch):
        """DISINTEGRATOR_ variables override defaults"""
        monkeypatch.setenv("DISINTEGRATOR_DEFAULT_FUEL", "7")
        reset_config()
        assert get_config().default_fuel == 7

    def test_set_config(self):
        """set_config replaces the singleton"""
        set_config(Config(witness_bound=3))
        assert get_config().witness_bound == 3

    def test_positive_precision(self):
        """Precision below 1 is rejected"""
        with pytest.raises(ValidationError):
            Config(default_precision=0)


class TestExceptions:
    """Test the error hierarchy"""

    @pytest.mark.parametrize("error", [NullConditioningSet, SpaceMismatch, AmbiguousAtom, ConfigException])
    def test_contract_errors(self, error):
        """Broken preconditions are contract errors"""
        assert issubclass(error, ContractError)
        assert error.exit_code == 2

    @pytest.mark.parametrize("error", [SearchDiverged, InputDemandExceeded, DivisorStraddlesZero])
    def test_fuel_errors(self, error):
        """Exhausted budgets are fuel errors"""
        assert issubclass(error, FuelError)
        assert error.exit_code == 3

    def test_hierarchy_rooted(self):
        """Every error class derives from the package root"""
        classes = [c for _, c in inspect.getmembers(exceptions, inspect.isclass) if c.__module__ == exceptions.__name__]
        assert len(classes) > 20
        for cls in classes:
            assert issubclass(cls, DisintegratorException)
            assert cls.mro()[-1] is object

    def test_need_more_input(self):
        """NeedMoreInput carries its demand and is neither kind"""
        error = NeedMoreInput(12)
        assert error.demanded == 12
        assert isinstance(error, OracleException)
        assert not isinstance(error, (ContractError, FuelError))

    def test_spec_diagnostics(self):
        """Spec errors keep every diagnostic"""
        error = SpecValidationError(["a: bad", "b: worse"])
        assert error.diagnostics == ["a: bad", "b: worse"]
        assert str(error) == "a: bad; b: worse"


class TestLogging:
    """Test logging setup"""

    def test_json_records(self, capsys):
        """JSON mode emits one object per record"""
        configure_logging("INFO", json=True)
        logging.getLogger("disintegrator.test").info("hello")
        line = capsys.readouterr().err.strip().splitlines()[-1]
        assert json.loads(line)["message"] == "hello"

    def test_level(self):
        """The root level follows the argument"""
        configure_logging("ERROR", json=False)
        assert logging.getLogger().level == logging.ERROR
