##Imports
import os
from pathlib import Path
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

_REPO_ROOT = Path(__file__).resolve().parent.parent


class Config:
     """
     Configuration class for the dscones CLI and verification suites.

     Loads configuration from environment variables.
     """
     def __init__(self):
          # Largest accepted rank (default: 4, F4 worst case)
          self.rank_limit = self._positive_int("RANK_LIMIT", "4")

          # Seed for verify suites and deep generic points (default: 7)
          self.seed = self._positive_int("DSCONES_SEED", "7", allow_zero=True)

          # Worker pool size for verify (default: 4)
          self.workers = self._positive_int("DSCONES_WORKERS", "4")

          # Randomized cases per property (default: 50)
          self.cases = self._positive_int("DSCONES_CASES", "50")

          # Golden d-tables directory
          self.golden_dir = Path(os.getenv("DSCONES_GOLDEN_DIR", str(_REPO_ROOT / "golden" / "v1")))

          # Diagnostics level for stderr logging
          self.log_level = os.getenv("DSCONES_LOG_LEVEL", "WARNING").upper()
          if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
               raise ValueError(
                    f"DSCONES_LOG_LEVEL={self.log_level!r} is not a logging level. "
                    "Please set it in your .env file to one of DEBUG, INFO, WARNING, ERROR."
               )


     @staticmethod
     def _positive_int(name: str, default: str, allow_zero: bool = False) -> int:
          raw = os.getenv(name, default)
          try:
               value = int(raw)
          except ValueError:
               raise ValueError(
                    f"{name} environment variable must be an integer, got {raw!r}. "
                    "Please fix it in your .env file."
               )
          if value < 0 or (value == 0 and not allow_zero):
               raise ValueError(f"{name} must be positive, got {value}.")
          return value


settings = Config()
