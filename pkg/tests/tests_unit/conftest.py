"""
Pytest configuration for unit tests.
Provides a clean environment for building Config objects.
"""
import os

import pytest


@pytest.fixture
def clean_env(mocker):
    """Remove every DSCONES_* and RANK_LIMIT variable for the duration of a test."""
    keep = {k: v for k, v in os.environ.items() if not k.startswith("DSCONES_") and k != "RANK_LIMIT"}
    mocker.patch.dict(os.environ, keep, clear=True)
    return os.environ
