"""
Worker-pool runner for verification suites.

A suite is built serially from a seeded generator into a list of Case
objects; only the evaluation runs in the pool. ThreadPoolExecutor.map yields
results in input order, so a report is identical for identical
(suite, system, seed, cases) whatever the pool size.
"""

## Imports
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from dscones.config import settings
from dscones.models.report_models import FailureRecord, VerifyReport
from dscones.utils.errors import DsConesError
from dscones.utils.helpers import format_rational, get_logger


logger = get_logger(__name__)


@dataclass(frozen=True)
class Case:
     """
     One verification case: check() returns (expected, got) and passes iff they are equal.
     """
     case_id : str
     check   : Callable[[], Tuple[Any, Any]]
     inputs  : Dict[str, Any] = field(default_factory=dict)


def jsonable(value: Any) -> Any:
     """Rationals to ints or "p/q" strings, tuples to lists, recursively."""
     if isinstance(value, bool):
          return value
     if isinstance(value, (int, Fraction)):
          return format_rational(value)
     if isinstance(value, dict):
          return {str(k): jsonable(v) for k, v in value.items()}
     if isinstance(value, (list, tuple)):
          return [jsonable(v) for v in value]
     return value if value is None or isinstance(value, str) else str(value)


def case_seed(seed: int, suite: str, label: str) -> random.Random:
     """Deterministic generator for one (suite, system) pair."""
     return random.Random(f"{seed}:{suite}:{label}")


##> ============================================================================
##> EVALUATION
##> ============================================================================

def _evaluate(case: Case) -> Optional[FailureRecord]:
     """
     Run a single case.

     Returns:
          None when the case passes, otherwise a FailureRecord.
     """
     try:
          expected, got = case.check()
     except DsConesError as e:
          expected, got = "no error", f"{type(e).__name__}: {e.message}"
     except Exception as e:
          logger.exception("Case %s raised unexpectedly", case.case_id)
          expected, got = "no error", f"{type(e).__name__}: {e}"
     else:
          if expected == got:
               return None
     return FailureRecord(
          case_id  = case.case_id,
          inputs   = jsonable(case.inputs),
          expected = jsonable(expected),
          got      = jsonable(got),
     )


def run_cases(suite: str, system: str, seed: int, cases: Sequence[Case],
              workers: Optional[int] = None) -> VerifyReport:
     """
     Evaluate the cases in a worker pool and aggregate them in input order.

     Args:
          suite: suite name for the report.
          system: root system label for the report.
          seed: the seed the cases were drawn from.
          cases: the cases, already built.
          workers: pool size, settings.workers by default.

     Returns:
          VerifyReport with failures in input order.
     """
     workers = workers or settings.workers
     if workers > 1 and len(cases) > 1:
          with ThreadPoolExecutor(max_workers=workers) as pool:
               outcomes: List[Optional[FailureRecord]] = list(pool.map(_evaluate, cases))
     else:
          outcomes = [_evaluate(c) for c in cases]
     failures = [f for f in outcomes if f is not None]
     logger.info("Suite %s on %s finished: %d cases, %d failed", suite, system, len(cases), len(failures))
     return VerifyReport(
          suite        = suite,
          system       = system,
          cases_run    = len(cases),
          cases_failed = len(failures),
          seed         = seed,
          failures     = failures,
     )
