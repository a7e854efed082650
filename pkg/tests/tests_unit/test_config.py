"""
Unit tests for the environment-driven Config.
"""
import os
from pathlib import Path

import pytest

from dscones.config import Config


## INFO: THIS IS TO TEST THE DEFAULTS WHEN NO VARIABLE IS SET.
def test_config_defaults(clean_env):
    """Test the documented defaults."""
    config = Config()

    assert config.rank_limit == 4
    assert config.seed == 7
    assert config.workers == 4
    assert config.cases == 50
    assert config.log_level == "WARNING"
    assert config.golden_dir.parts[-2:] == ("golden", "v1")


## INFO: THIS IS TO TEST THAT ENVIRONMENT VARIABLES OVERRIDE THE DEFAULTS.
def test_config_reads_environment(clean_env, mocker, tmp_path):
    """Test values coming from the environment."""
    mocker.patch.dict(os.environ, {
        "RANK_LIMIT"        : "2",
        "DSCONES_SEED"      : "0",
        "DSCONES_WORKERS"   : "1",
        "DSCONES_CASES"     : "5",
        "DSCONES_GOLDEN_DIR": str(tmp_path),
        "DSCONES_LOG_LEVEL" : "debug",
    })
    config = Config()

    assert config.rank_limit == 2
    assert config.seed == 0
    assert config.workers == 1
    assert config.cases == 5
    assert config.golden_dir == Path(tmp_path)
    assert config.log_level == "DEBUG"


@pytest.mark.parametrize("name, value", [
    ("DSCONES_WORKERS", "0"),
    ("DSCONES_CASES", "-3"),
    ("RANK_LIMIT", "four"),
    ("DSCONES_LOG_LEVEL", "LOUD"),
])
def test_config_rejects_bad_values(clean_env, mocker, name, value):
    """Test that invalid settings fail at construction."""
    mocker.patch.dict(os.environ, {name: value})

    with pytest.raises(ValueError) as exc_info:
        Config()
    assert name in str(exc_info.value)
