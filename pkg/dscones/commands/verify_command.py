"""
`verify --suite NAME`: run an invariant suite and report every failed case.
"""

## Imports
import argparse
import json
from pathlib import Path
from typing import List, Optional

from dscones.utils.helpers import get_logger
from dscones.verify.registry import ALL, run_all, run_suite


logger = get_logger(__name__)


def _types(text: Optional[str]) -> Optional[List[str]]:
     if not text:
          return None
     return [t.strip() for t in text.split(",") if t.strip()]


def register(subparsers) -> None:
     parser = subparsers.add_parser("verify", help="Run a verification suite.")
     parser.add_argument("--suite", required=True, help="appendixA, appendixB, section1, section2, section3, section5, section6 or all.")
     parser.add_argument("--types", default=None, help="Comma-separated Cartan types; the suite defaults when omitted.")
     parser.add_argument("--seed", type=int, default=None)
     parser.add_argument("--cases", type=int, default=None, help="Randomized cases per property.")
     parser.add_argument("--workers", type=int, default=None)
     parser.add_argument("--out", type=Path, default=None, help="Write the JSON report here instead of stdout.")
     parser.set_defaults(handler=run_verify)


def run_verify(args: argparse.Namespace) -> int:
     """
     Returns:
          0 when every case passed, 1 otherwise.
     """
     types = _types(args.types)
     if args.suite == ALL:
          summary = run_all(types, args.seed, args.cases, args.workers)
          payload, failed = summary.model_dump(), summary.cases_failed
     else:
          reports = run_suite(args.suite, types, args.seed, args.cases, args.workers)
          failed = sum(r.cases_failed for r in reports)
          payload = reports[0].model_dump() if len(reports) == 1 else [r.model_dump() for r in reports]
     text = json.dumps(payload, sort_keys=True)
     if args.out:
          args.out.write_text(text + "\n")
          logger.info("Report written to %s", args.out)
     else:
          print(text)
     if failed:
          logger.warning("Suite %s: %d cases failed", args.suite, failed)
     return 1 if failed else 0
