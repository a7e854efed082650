## Main Application
import argparse
import sys
from typing import List, Optional, Sequence

from dscones.commands import eval_command, table_command, verify_command
from dscones.commands.eval_command import VALUE_FLAGS
from dscones.utils.errors import DsConesError
from dscones.utils.helpers import get_logger


logger = get_logger(__name__)

USAGE_EXIT = 2


def _join_negative_values(argv: Sequence[str]) -> List[str]:
     """
     Rewrite "--x -1,2" as "--x=-1,2".

     argparse reads a value such as "-1,2" or "-inf" as an option of its own.
     """
     out: List[str] = []
     i = 0
     while i < len(argv):
          token = argv[i]
          if token in VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
               out.append(f"{token}={argv[i + 1]}")
               i += 2
               continue
          out.append(token)
          i += 1
     return out


def build_parser() -> argparse.ArgumentParser:
     parser = argparse.ArgumentParser(
          prog        = "dscones",
          description = "Exact polyhedral cone valuations and Weyl chamber sums.",
     )
     subparsers = parser.add_subparsers(dest="command", required=True)
     table_command.register(subparsers)
     verify_command.register(subparsers)
     eval_command.register(subparsers)
     return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
     """
     Entry point for the dscones command line.

     Returns:
          0 on success, 1 if a verification failed, 2 for usage errors,
          3 when a mathematical precondition fails (-1 not in W) and 4 for
          any other precondition violation.
     """
     argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
     parser = build_parser()
     try:
          args = parser.parse_args(argv)
     except SystemExit as e:
          return USAGE_EXIT if e.code else 0

     try:
          return args.handler(args)
     except DsConesError as e:
          logger.error("%s: %s", type(e).__name__, e.message)
          return e.exit_code
     except Exception:
          logger.exception("Unexpected error running %s", args.command)
          raise


if __name__ == "__main__":
     sys.exit(main())
