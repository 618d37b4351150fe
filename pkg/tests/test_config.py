import pytest
from pydantic import ValidationError

from karyx.config import Settings
from karyx.exceptions import UsageError
from karyx.models.schemas import RunConfig


def test_settings_defaults(monkeypatch) -> None:
    for name in ("KARYX_TOLERANCE", "KARYX_TRIALS", "KARYX_SEED", "KARYX_LOG_LEVEL", "KARYX_HR_ZERO_LEVEL"):
        monkeypatch.delenv(name, raising=False)
    settings = Settings.from_env()
    assert settings.tolerance == 1e-9
    assert settings.trials == 200
    assert settings.seed == 7
    assert settings.log_level == "WARNING"
    assert settings.hr_zero_level == "ignore"


def test_settings_read_the_environment(monkeypatch) -> None:
    monkeypatch.setenv("KARYX_TRIALS", "25")
    monkeypatch.setenv("KARYX_LOG_LEVEL", "debug")
    monkeypatch.setenv("KARYX_HR_ZERO_LEVEL", "error")
    settings = Settings.from_env()
    assert settings.trials == 25
    assert settings.log_level == "DEBUG"
    assert settings.hr_zero_level == "error"


@pytest.mark.parametrize("name,value", [("KARYX_TRIALS", "0"), ("KARYX_TOLERANCE", "-1"), ("KARYX_LOG_LEVEL", "loud")])
def test_invalid_settings_are_usage_errors(monkeypatch, name, value) -> None:
    monkeypatch.setenv(name, value)
    with pytest.raises(UsageError):
        Settings.from_env()


def test_run_config_accepts_weights_for_hsiao_raghavan() -> None:
    config = RunConfig(command="compute", input="g.json", method="hsiao-raghavan", weights=[1, 2])
    assert config.weights == [1.0, 2.0]
    assert RunConfig(command="compare", input="g.json", weights=[1, 3]).weights == [1.0, 3.0]


@pytest.mark.parametrize(
    "fields",
    [
        {"command": "compute", "input": "g.json", "method": "paper", "weights": [1, 2]},
        {"command": "compute", "input": "g.json", "method": "hsiao-raghavan", "weights": [2, 1]},
        {"command": "compute"},
        {"command": "verify", "n": 3},
        {"command": "verify", "n": 3, "k": 2, "trials": 0},
        {"command": "verify", "n": 3, "k": 2, "tolerance": 0},
        {"command": "plot", "input": "g.json"},
    ],
)
def test_run_config_rejects_inconsistent_runs(fields) -> None:
    with pytest.raises(ValidationError):
        RunConfig(**fields)
