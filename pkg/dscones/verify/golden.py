"""
Golden d-tables on disk: one JSON file per system under settings.golden_dir.
"""

## Imports
import json
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from dscones.config import settings
from dscones.core.constants import d_table
from dscones.core.rootsys import RootSystem
from dscones.models.report_models import GoldenTable
from dscones.utils.errors import DsConesError
from dscones.utils.helpers import get_logger


logger = get_logger(__name__)


def golden_path(label: str, directory: Optional[Path] = None) -> Path:
     return Path(directory or settings.golden_dir) / f"{label}.json"


def load_golden(label: str, directory: Optional[Path] = None) -> Optional[GoldenTable]:
     """
     Read the golden table of a system.

     Returns:
          The table, or None if no file exists for the system.

     Raises:
          DsConesError: if the file exists but is not a valid golden table.
     """
     path = golden_path(label, directory)
     if not path.exists():
          return None
     try:
          return GoldenTable.model_validate(json.loads(path.read_text()))
     except (json.JSONDecodeError, ValidationError) as e:
          raise DsConesError(f"Golden file {path} is malformed: {e}")


def golden_from_system(system: RootSystem, seed: Optional[int] = None) -> GoldenTable:
     table = d_table(system, seed=seed)
     return GoldenTable(system=system.label, base_chamber="e", q=system.q_invariant(), table=table.by_word())


def write_golden(golden: GoldenTable, directory: Optional[Path] = None) -> Path:
     path = golden_path(golden.system, directory)
     path.parent.mkdir(parents=True, exist_ok=True)
     path.write_text(json.dumps(golden.model_dump(), sort_keys=True, indent=2) + "\n")
     logger.info("Golden table for %s written to %s", golden.system, path)
     return path


def diff_golden(golden: GoldenTable, computed: Dict[str, int]) -> Dict[str, tuple]:
     """word -> (golden, computed) for every word where the two disagree."""
     words = set(golden.table) | set(computed)
     return {
          w: (golden.table.get(w), computed.get(w))
          for w in sorted(words)
          if golden.table.get(w) != computed.get(w)
     }
