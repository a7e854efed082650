"""
Pytest configuration for the verification layer.
Provides toy cases and an isolated golden directory.
"""
import pytest

from dscones.config import settings
from dscones.utils.errors import NotRegularError
from dscones.verify.runner import Case


@pytest.fixture
def toy_cases():
    """Five cases: three pass, one fails, one raises a library error."""
    def boom():
        raise NotRegularError("x lies on a wall")

    return [
        Case("A1/equal/0", lambda: (1, 1), {"x": 1}),
        Case("A1/equal/1", lambda: (2, 2)),
        Case("A1/differ/0", lambda: (0, 2), {"x": "1/2"}),
        Case("A1/equal/2", lambda: ([1, 2], [1, 2])),
        Case("A1/raises/0", boom),
    ]


@pytest.fixture
def golden_dir(mocker, tmp_path):
    """Point settings.golden_dir at an empty temporary directory."""
    mocker.patch.object(settings, "golden_dir", tmp_path)
    return tmp_path
