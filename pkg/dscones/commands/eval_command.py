"""
`eval FUNCTION`: thin dispatch from flags to a single library function.

Vectors are comma-separated rationals ("1/2,-3"), cone generators are
';'-separated vectors, Weyl words are "s1*s2" ("e" for the identity) and
Levi subsets are 1-based simple-root indices ("1,3", "" for the torus).
"""

## Imports
import argparse
import json
from typing import Callable, Dict

from dscones.core.cones import cone_from_generators, phi, psi
from dscones.core.constants import BQuery, b_constant, cbar, m_R, psi_R
from dscones.core.parafan import (
     NU_MINUS_INF,
     NU_PLUS_INF,
     cell_label,
     kostant_reps,
     levi_fan,
     nu_middle,
     truncated_cohomology,
)
from dscones.core.rootsys import Chamber, RootSystem, root_system
from dscones.models.report_models import EvalValue, WeightSumModel, WeightTermModel
from dscones.utils.errors import PreconditionError
from dscones.utils.helpers import (
     format_vector,
     format_word,
     get_logger,
     parse_index_set,
     parse_vector,
     parse_vectors,
     parse_word,
)


logger = get_logger(__name__)

# flags whose values may start with "-"
VALUE_FLAGS = ("--x", "--lambda", "--tau", "--nu", "--rays")


def _chamber(system: RootSystem, word: str) -> Chamber:
     return system.element_from_word(parse_word(word)).act_on_chamber(system.base_chamber)


def _emit(value) -> None:
     print(json.dumps(EvalValue(value=value).model_dump(), sort_keys=True))


##> ============================================================================
##> HANDLERS
##> ============================================================================

def _eval_cone(fn: Callable) -> Callable[[argparse.Namespace], int]:
     def handler(args: argparse.Namespace) -> int:
          x, lam = parse_vector(args.x), parse_vector(args.lam)
          cone = cone_from_generators(parse_vectors(args.rays), dim=len(x))
          _emit(fn(cone, x, lam))
          return 0
     return handler


def _eval_psi_r(args: argparse.Namespace) -> int:
     system = root_system(args.type)
     _emit(psi_R(system, _chamber(system, args.chamber), parse_vector(args.x), parse_vector(args.lam)))
     return 0


def _eval_m(args: argparse.Namespace) -> int:
     _emit(m_R(root_system(args.type), parse_vector(args.x), parse_vector(args.lam)))
     return 0


def _eval_cbar(args: argparse.Namespace) -> int:
     _emit(cbar(root_system(args.type), parse_vector(args.x), parse_vector(args.lam)))
     return 0


def _eval_b(args: argparse.Namespace) -> int:
     system = root_system(args.type)
     query = BQuery(_chamber(system, args.chamber), parse_vector(args.tau), parse_vector(args.x), parse_vector(args.lam))
     _emit(b_constant(query))
     return 0


def _eval_kostant(args: argparse.Namespace) -> int:
     system = root_system(args.type)
     _emit([format_word(w.word) for w in kostant_reps(system, parse_index_set(args.levi))])
     return 0


def _parse_nu(system: RootSystem, text: str):
     text = text.strip()
     if text == "middle":
          return nu_middle(system)
     if text in (NU_MINUS_INF, NU_PLUS_INF):
          return text
     return parse_vector(text)


def _eval_e_nu_p(args: argparse.Namespace) -> int:
     """
     Raises:
          PreconditionError: if --p names no open cone of the fan.
     """
     system = root_system(args.type)
     subset = parse_index_set(args.levi)
     fan = levi_fan(system, subset)
     if args.p.startswith("#"):
          cell = fan.cell(int(args.p[1:]))
     else:
          cell = fan.cell_from_word(parse_word(args.p))
     if cell.dim != fan.dim:
          raise PreconditionError(f"--p {args.p} does not name an open cone of the fan")
     nu = _parse_nu(system, args.nu)
     result = truncated_cohomology(system, subset, cell.index, parse_vector(args.lam), nu)
     model = WeightSumModel(
          system = system.label,
          levi   = [j + 1 for j in subset],
          p      = cell_label(fan, cell),
          nu     = nu if isinstance(nu, str) else format_vector(nu),
          terms  = [
               WeightTermModel(
                    sign           = t.sign,
                    weight         = format_vector(t.weight),
                    kostant_length = t.kostant_length,
                    word           = format_word(t.word),
               )
               for t in result.terms
          ],
     )
     print(json.dumps(model.model_dump(), sort_keys=True))
     return 0


##> ============================================================================
##> PARSER
##> ============================================================================

def _add(functions, name: str, handler: Callable, help_text: str, **flags: bool) -> argparse.ArgumentParser:
     parser = functions.add_parser(name, help=help_text)
     if flags.get("type"):
          parser.add_argument("--type", required=True, help="Cartan type or JSON Cartan matrix.")
     if flags.get("point"):
          parser.add_argument("--x", required=True, help="Point of X.")
          parser.add_argument("--lambda", dest="lam", required=True, help="Functional in X*.")
     parser.set_defaults(handler=handler)
     return parser


def register(subparsers) -> None:
     parser = subparsers.add_parser("eval", help="Evaluate a single function.")
     functions = parser.add_subparsers(dest="function", required=True)

     cone_handlers: Dict[str, Callable] = {"psi": psi, "phi": phi}
     for name, fn in cone_handlers.items():
          p = _add(functions, name, _eval_cone(fn), f"{name} of the cone on --rays.", point=True)
          p.add_argument("--rays", required=True, help="';'-separated generators, '' for the origin.")

     p = _add(functions, "psiR", _eval_psi_r, "Chamber sum psi_R(C0, x, lambda).", type=True, point=True)
     p.add_argument("--chamber", default="e", help="Word w of the base chamber w(C+).")
     _add(functions, "m", _eval_m, "Stable constant m_R(x, lambda).", type=True, point=True)
     _add(functions, "cbar", _eval_cbar, "cbar_R(x, lambda) from the wall recursion.", type=True, point=True)

     p = _add(functions, "b", _eval_b, "Individual constant b_R(tau, C; x, lambda).", type=True, point=True)
     p.add_argument("--tau", required=True)
     p.add_argument("--chamber", default="e")

     p = _add(functions, "kostant", _eval_kostant, "Kostant representatives of W_L \\ W.", type=True)
     p.add_argument("--levi", default="", help="1-based simple roots of J.")

     p = _add(functions, "e_nu_p", _eval_e_nu_p, "Truncated virtual module E^nu_P.", type=True)
     p.add_argument("--levi", default="")
     p.add_argument("--p", default="e", help="Word carrying the standard open cone to C_P, or '#index'.")
     p.add_argument("--lambda", dest="lam", required=True, help="Dominant weight.")
     p.add_argument("--nu", default="middle", help="'middle', '-inf', '+inf' or a weight.")
