"""
Suite registry: suite name -> case builder and default root systems.
"""

## Imports
import random
from typing import Callable, Dict, List, NamedTuple, Optional, Sequence

from dscones.config import settings
from dscones.core.rootsys import RootSystem, root_system
from dscones.models.report_models import SuiteSummary, VerifyReport
from dscones.utils.errors import UnsupportedSystemError
from dscones.utils.helpers import get_logger
from dscones.verify.runner import Case, case_seed, run_cases
from dscones.verify.suites import (
     appendix_a,
     appendix_b,
     section1,
     section2,
     section3,
     section5,
     section6,
)


logger = get_logger(__name__)


class SuiteEntry(NamedTuple):
     build : Callable[[RootSystem, random.Random, int], List[Case]]
     types : Sequence[str]


SUITES: Dict[str, SuiteEntry] = {
     appendix_a.SUITE : SuiteEntry(appendix_a.build_cases, ("B2", "A3")),
     appendix_b.SUITE : SuiteEntry(appendix_b.build_cases, ("B2", "G2")),
     section1.SUITE   : SuiteEntry(section1.build_cases, ("A2", "A3", "A1xA1", "B2", "G2", "B3", "C3")),
     section2.SUITE   : SuiteEntry(section2.build_cases, ("B2", "G2", "B3")),
     section3.SUITE   : SuiteEntry(section3.build_cases, ("A1", "A1xA1", "A1xA1xA1", "B2", "G2", "B3", "C3")),
     section5.SUITE   : SuiteEntry(section5.build_cases, ("A1", "A2", "B2", "G2")),
     section6.SUITE   : SuiteEntry(section6.build_cases, ("A1", "A1xA1", "B2", "G2")),
}

ALL = "all"


def suite_entry(name: str) -> SuiteEntry:
     """
     Raises:
          UnsupportedSystemError: for an unknown suite name (exit code 2, a usage error).
     """
     if name not in SUITES:
          raise UnsupportedSystemError(f"Unknown suite {name!r}; choose one of {', '.join(SUITES)} or {ALL}")
     return SUITES[name]


def run_suite(name: str, types: Optional[Sequence[str]] = None, seed: Optional[int] = None,
              cases: Optional[int] = None, workers: Optional[int] = None) -> List[VerifyReport]:
     """
     Build and run one suite on each requested system.

     Args:
          name: suite name.
          types: system labels, the suite defaults when empty.
          seed: settings.seed by default.
          cases: randomized cases per property, settings.cases by default.
          workers: pool size, settings.workers by default.

     Returns:
          One VerifyReport per system, in the order given.
     """
     entry = suite_entry(name)
     seed = settings.seed if seed is None else seed
     cases = cases or settings.cases
     reports = []
     for label in types or entry.types:
          system = root_system(label)
          rng = case_seed(seed, name, system.label)
          built = entry.build(system, rng, cases)
          logger.info("Suite %s on %s built %d cases", name, system.label, len(built))
          reports.append(run_cases(name, system.label, seed, built, workers))
     return reports


def run_all(types: Optional[Sequence[str]] = None, seed: Optional[int] = None,
            cases: Optional[int] = None, workers: Optional[int] = None) -> SuiteSummary:
     seed = settings.seed if seed is None else seed
     reports: List[VerifyReport] = []
     for name in SUITES:
          reports.extend(run_suite(name, types, seed, cases, workers))
     return SuiteSummary(
          seed         = seed,
          cases_run    = sum(r.cases_run for r in reports),
          cases_failed = sum(r.cases_failed for r in reports),
          reports      = reports,
     )
