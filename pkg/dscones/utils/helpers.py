## Imports
import logging
import sys
from fractions import Fraction
from typing import Any, Iterable, List, Sequence, Tuple

from dscones.config import settings
from dscones.utils.errors import PreconditionError


_HANDLER_INSTALLED = False


def get_logger(name: str) -> logging.Logger:
     """
     Return a module logger writing to stderr.

     stdout is reserved for machine-readable output, so every diagnostic goes
     through this logger instead of print.
     """
     global _HANDLER_INSTALLED
     if not _HANDLER_INSTALLED:
          root = logging.getLogger("dscones")
          handler = logging.StreamHandler(sys.stderr)
          handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
          root.addHandler(handler)
          root.setLevel(settings.log_level)
          root.propagate = False
          _HANDLER_INSTALLED = True
     return logging.getLogger(name)


##> ============================================================================
##> RATIONAL PARSING / FORMATTING
##> ============================================================================

def parse_rational(text: str) -> Fraction:
     """
     Parse "p", "p/q" or a finite decimal into an exact Fraction.

     Raises:
          PreconditionError: if the text is not a rational literal.
     """
     try:
          return Fraction(text.strip())
     except (ValueError, ZeroDivisionError) as e:
          raise PreconditionError(f"Invalid rational literal {text!r}: {e}")


def parse_vector(text: str) -> Tuple[Fraction, ...]:
     """Parse a comma-separated rational vector such as "1/2,-3"; "" is the 0-dim vector."""
     text = text.strip()
     if not text:
          return ()
     return tuple(parse_rational(part) for part in text.split(","))


def parse_vectors(text: str) -> List[Tuple[Fraction, ...]]:
     """Parse a ';'-separated list of vectors."""
     text = text.strip()
     if not text:
          return []
     return [parse_vector(part) for part in text.split(";")]


def parse_index_set(text: str) -> Tuple[int, ...]:
     """Parse 1-based comma-separated simple-root indices into sorted 0-based ones."""
     text = text.strip()
     if not text:
          return ()
     try:
          indices = sorted({int(part) - 1 for part in text.split(",")})
     except ValueError as e:
          raise PreconditionError(f"Invalid index list {text!r}: {e}")
     if indices and indices[0] < 0:
          raise PreconditionError(f"Simple-root indices are 1-based, got {text!r}")
     return tuple(indices)


def format_rational(value: Fraction) -> Any:
     """Integers stay ints, other rationals become "p/q" strings."""
     value = Fraction(value)
     if value.denominator == 1:
          return value.numerator
     return f"{value.numerator}/{value.denominator}"


def format_vector(vector: Iterable[Fraction]) -> List[Any]:
     return [format_rational(c) for c in vector]


def format_word(word: Sequence[int]) -> str:
     """Reduced word (0-based indices) to the "s1*s2" key used in tables; identity is "e"."""
     if not word:
          return "e"
     return "*".join(f"s{i + 1}" for i in word)


def parse_word(text: str) -> Tuple[int, ...]:
     """Inverse of format_word; also accepts "1,2" style index lists."""
     text = text.strip()
     if text in ("", "e"):
          return ()
     parts = text.replace(",", "*").split("*")
     try:
          return tuple(int(part.strip().lstrip("s")) - 1 for part in parts)
     except ValueError as e:
          raise PreconditionError(f"Invalid Weyl word {text!r}: {e}")
