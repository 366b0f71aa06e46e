"""Command-line front end.

Exit codes: 0 success, 1 a check failed, 2 usage or literal error.
"""
from __future__ import annotations

import argparse
import sys

from .algebras import format_element, format_expr
from .conrad import describe_conrad, counits, is_counit
from .core import DEFAULT_WINDOW, InvariantError, UnsupportedError, check_mv_axioms
from .dsl import ParseError, SemanticError, parse, parse_algebra
from .filters import format_filter, is_prime
from .localize import ell, localize, spectrum_iso_check
from .spectrum import is_root_system, spectrum, stem, to_dot
from .verify import CATALOG, SUITES, run_suites

VERBS = ("parse", "axioms", "pspec", "counits", "conrad", "ell", "localize", "verify", "catalog")


class UsageError(ValueError):
    pass


def _emit(rows, fmt, out):
    """rows: tuples of fields; 'lines' joins with spaces, 'tsv' with tabs."""
    sep = "\t" if fmt == "tsv" else " "
    for r in rows:
        out.write(sep.join(str(f) for f in r).rstrip() + "\n")


def _prime_at(A, text):
    P = parse("filter", text, A)
    if not is_prime(A, P):
        raise UsageError(f"{format_filter(P)} is not a prime filter of {format_expr(A.expr)}")
    return P


def cmd_parse(args, A, out):
    rows = [("algebra", format_expr(A.expr))]
    if args.at:
        rows.append(("filter", format_filter(parse("filter", args.at, A))))
    if args.element:
        rows.append(("element", format_element(parse("element", args.element, A))))
    _emit(rows, args.format, out)
    return 0


def cmd_axioms(args, A, out):
    rep = check_mv_axioms(A, args.window)
    _emit([("axioms", format_expr(A.expr), str(rep))], args.format, out)
    return 0 if rep.ok else 1


def cmd_pspec(args, A, out):
    at = _prime_at(A, args.at) if args.at else None
    p = spectrum(A, "minimal" if args.minimal else "prime", at=at)
    rows = [("node", name) for name in p.names]
    rows += [("cover", p.names[i], p.names[j]) for i, j in p.covers()]
    if at is None and not args.minimal:
        rows += [("stem", name) for name, _ in stem(A)]
    rows.append(("root_system", "yes" if is_root_system(p) else "no"))
    _emit(rows, args.format, out)
    if args.dot:
        with open(args.dot, "w") as fh:
            fh.write(to_dot(p))
    if args.figure:
        from .plotting import save_hasse
        save_hasse(p, args.figure, title=f"PSpec {format_expr(A.expr)}")
    return 0


def cmd_counits(args, A, out):
    rows = []
    for u in counits(A, args.window):
        rows.append(("counit", format_element(u), format_element(is_counit(A, u).v)))
    _emit(rows, args.format, out)
    return 0


def cmd_conrad(args, A, out):
    out.write(describe_conrad(A) + "\n")
    return 0


def cmd_ell(args, A, out):
    P = _prime_at(A, args.at)
    out.write(format_filter(ell(A, P, args.window)) + "\n")
    return 0


def cmd_localize(args, A, out):
    P = _prime_at(A, args.at)
    L = localize(A, P, args.window)
    out.write(L.signature + "\n")
    rep = spectrum_iso_check(A, P, args.window)
    _emit([("ell", format_filter(L.by))]
          + [("iso", a, b) for a, b in rep.mapping.items()], args.format, out)
    return 0


def cmd_verify(args, A, out):
    suites = args.suite or SUITES
    results = run_suites(A, args.window, suites)
    if args.format == "tsv":
        _emit([(r.suite, r.name, "PASS" if r.ok else "FAIL", r.counterexample or "")
               for r in results], "tsv", out)
    else:
        for r in results:
            out.write(r.line() + "\n")
    return 0 if all(r.ok for r in results) else 1


def cmd_catalog(args, A, out):
    rows = []
    for text in CATALOG:
        B = parse_algebra(text)
        rows.append((text, B.size if B.finite else "symbolic", describe_conrad(B)))
    _emit(rows, args.format, out)
    return 0


_COMMANDS = {
    "parse": cmd_parse, "axioms": cmd_axioms, "pspec": cmd_pspec, "counits": cmd_counits,
    "conrad": cmd_conrad, "ell": cmd_ell, "localize": cmd_localize, "verify": cmd_verify,
    "catalog": cmd_catalog,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="mvspectra",
        description="Prime spectra, Conrad filters and localizations of MV-algebras.")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("algebra", nargs="?", help='algebra literal, e.g. "lex:2"')
    ap.add_argument("--at", help="filter literal (required by ell and localize)")
    ap.add_argument("--element", help="element literal (parse only)")
    ap.add_argument("--window", type=int, default=DEFAULT_WINDOW,
                    help="coordinate bound for symbolic algebras (default %(default)s)")
    ap.add_argument("--minimal", action="store_true", help="pspec: minimal primes only")
    ap.add_argument("--dot", metavar="PATH", help="pspec: write the Hasse diagram as DOT")
    ap.add_argument("--figure", metavar="PATH", help="pspec: render the Hasse diagram (png/svg/pdf)")
    ap.add_argument("--format", choices=("lines", "tsv"), default="lines")
    ap.add_argument("--suite", action="append", choices=SUITES, help="verify: restrict suites")
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.window < 1:
        ap.error("--window must be at least 1")
    if args.verb != "catalog" and args.algebra is None:
        ap.error(f"{args.verb} needs an algebra literal")
    if args.verb in ("ell", "localize") and not args.at:
        ap.error(f"{args.verb} needs --at FILTER")
    try:
        A = parse_algebra(args.algebra) if args.algebra else None
        return _COMMANDS[args.verb](args, A, out)
    except (ParseError, SemanticError, UsageError, UnsupportedError) as exc:
        print(f"mvspectra: error: {exc}", file=sys.stderr)
        return 2
    except InvariantError as exc:
        print(f"mvspectra: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
