"""
Pytest configuration for the command line.
Runs dscones.main.main in-process and captures its streams.
"""
import json
from typing import NamedTuple

import pytest

from dscones.config import settings
from dscones.main import main


class CliResult(NamedTuple):
    code: int
    out: str
    err: str

    def json(self):
        return json.loads(self.out)


@pytest.fixture
def cli(capsys):
    """Call the CLI with an argv list and return (exit code, stdout, stderr)."""
    def run(*argv: str) -> CliResult:
        code = main(list(argv))
        captured = capsys.readouterr()
        return CliResult(code, captured.out, captured.err)
    return run


@pytest.fixture
def golden_dir(mocker, tmp_path):
    """Point settings.golden_dir at an empty temporary directory."""
    mocker.patch.object(settings, "golden_dir", tmp_path)
    return tmp_path
