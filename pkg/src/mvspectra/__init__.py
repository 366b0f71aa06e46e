"""MV-algebra prime spectra, Conrad filters and localization at primes."""
from .algebras import (Chain, Chang, Lex, LexElem, Product, build, format_element,
                       format_expr)
from .conrad import conrad_filter, counits, is_counit
from .core import DEFAULT_WINDOW, check_mv_axioms, eval_op
from .dsl import parse, parse_algebra, parse_element, parse_filter
from .filters import all_filters, format_filter, generate_filter, is_prime, primes
from .localize import ell, quotient, spectrum_iso_check
from .spectrum import stem, to_dot

__version__ = "0.1.0"

__all__ = [
    "Chain", "Chang", "Lex", "LexElem", "Product", "build", "format_element", "format_expr",
    "conrad_filter", "counits", "is_counit", "DEFAULT_WINDOW", "check_mv_axioms", "eval_op",
    "parse", "parse_algebra", "parse_element", "parse_filter", "all_filters", "format_filter",
    "generate_filter", "is_prime", "primes", "ell", "quotient", "spectrum_iso_check", "stem",
    "to_dot",
]
