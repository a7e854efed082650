"""
`table d`: the d-table of a root system and of its coroot system.

Prints a DTableReport as JSON, or CSV rows word,length,d,d_vee ordered by
length and word. --write-golden stores the table under settings.golden_dir.
"""

## Imports
import argparse
import csv
import io
import json

from dscones.core.constants import d_table, d_vee_table
from dscones.core.rootsys import RootSystem, root_system
from dscones.models.report_models import DTableReport
from dscones.utils.errors import PreconditionError
from dscones.utils.helpers import format_vector, format_word, get_logger, parse_word
from dscones.verify.golden import golden_from_system, write_golden


logger = get_logger(__name__)


def register(subparsers) -> None:
     parser = subparsers.add_parser("table", help="Compute the d-table of a root system.")
     parser.add_argument("table", choices=["d"], help="Which table to compute.")
     parser.add_argument("--type", required=True, help="Cartan type such as B2 or A1xA1, or a JSON Cartan matrix.")
     parser.add_argument("--base-chamber", default="e", help="Reduced word w of the base chamber w(C+), default e.")
     parser.add_argument("--format", choices=["json", "csv"], default="json")
     parser.add_argument("--seed", type=int, default=None, help="Seed for the deep generic points.")
     parser.add_argument("--write-golden", action="store_true", help="Also write golden/<type>.json (base chamber e only).")
     parser.set_defaults(handler=run_table)


def build_report(system: RootSystem, base_word: str = "e", seed=None) -> DTableReport:
     """
     Compute d and d^vee at the chamber w(C+) for the word w.

     Raises:
          MathPreconditionError: if -1 is not in W.
          PreconditionError: if the word uses a reflection the system does not have.
     """
     word = parse_word(base_word)
     c0 = system.element_from_word(word).act_on_chamber(system.base_chamber)
     table = d_table(system, c0, seed)
     vee = d_vee_table(system, c0, seed)
     return DTableReport(
          system       = system.label,
          base_chamber = format_word(word),
          q            = system.q_invariant(),
          seed         = table.seed,
          x0           = format_vector(table.x0),
          lambda0      = format_vector(table.lam0),
          d            = table.by_word(),
          d_vee        = vee.by_word(),
     )


def to_csv(system: RootSystem, report: DTableReport) -> str:
     buffer = io.StringIO()
     writer = csv.writer(buffer, lineterminator="\n")
     writer.writerow(["word", "length", "d", "d_vee"])
     for w in sorted(system.weyl_group(), key=lambda w: (w.length, w.word)):
          key = format_word(w.word)
          writer.writerow([key, w.length, report.d[key], report.d_vee[key]])
     return buffer.getvalue()


def run_table(args: argparse.Namespace) -> int:
     system = root_system(args.type)
     report = build_report(system, args.base_chamber, args.seed)
     if args.write_golden:
          if report.base_chamber != "e":
               raise PreconditionError("Golden tables are stored for the base chamber e only")
          write_golden(golden_from_system(system, args.seed))
     if args.format == "csv":
          print(to_csv(system, report), end="")
     else:
          print(json.dumps(report.model_dump(), sort_keys=True))
     logger.info("Table d for %s printed as %s", system.label, args.format)
     return 0
