"""Property suites replayed against one algebra.

Each check returns None on success or a short counterexample string.  A check
that raises an ``InvariantError`` (or any other exception) counts as a failure
with the exception text as its counterexample.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .algebras import format_element, is_linear
from .conrad import (HypothesisError, conrad_filter, contains_counits,
                     counit_separator, counit_witness_in_window, dominates_complement,
                     filters_above, incomparable_prime, is_counit,
                     join_complement_filter, maximal_filters)
from .core import DEFAULT_WINDOW, MVAlgebra, check_mv_axioms
from .filters import (all_filters, closure_filter, comparable, format_filter,
                      generate_filter, is_implication_filter, is_minimal_prime,
                      is_prime, issubset, maximal_filter_avoiding,
                      minimal_primes_below, one, prime_counterexample, primes)
from .localize import (check_universal, comparability_via_ell, connecting_map,
                       ell, ell_via_minimal, homomorphism_counterexample,
                       incomparable_arrow, localize, minimal_prime_avoiding,
                       shell, spectrum_iso_check)
from .spectrum import is_root_system, spectrum, stem

CATALOG = ["chain:1", "chain:2", "chain:3", "chain:4", "chain:5",
           "product[chain:1,chain:1]", "product[chain:2,chain:3]",
           "chang", "lex:2", "lex:3", "product[chang,lex:2]"]

SUITES = ("core", "filters", "spectrum", "conrad", "localize")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def line(self) -> str:
        head = f"CHECK {self.suite}.{self.name}"
        return f"{head} PASS" if self.ok else f"{head} FAIL {self.counterexample}"


_CHECKS: dict[str, list[tuple[str, Callable]]] = {s: [] for s in SUITES}


def _check(suite, name):
    def deco(fn):
        _CHECKS[suite].append((name, fn))
        return fn
    return deco


def _scope(A, window):
    return A.elements(0 if A.finite else window)


def _f(F):
    return format_filter(F)


# --------------------------------------------------------------------------
# core

@_check("core", "mv_axioms")
def _(A, w):
    rep = check_mv_axioms(A, w)
    return None if rep.ok else str(rep)


@_check("core", "scalar_matches_vector")
def _(A, w):
    elems = _scope(A, w)
    step = max(1, len(elems) // 40)
    sample = elems[::step]
    X = A.encode(sample)
    for op in ("oplus", "imp", "meet", "join", "otimes"):
        V = getattr(A, "v_" + op)(np.repeat(X, len(sample), 0), np.tile(X, (len(sample), 1)))
        for i, (x, y) in enumerate(itertools.product(sample, repeat=2)):
            if A.decode(V[i]) != getattr(A, op)(x, y):
                return f"{op} at ({format_element(x)}, {format_element(y)})"
    return None


# --------------------------------------------------------------------------
# filters

@_check("filters", "catalog_are_implication_filters")
def _(A, w):
    for F in all_filters(A):
        if not is_implication_filter(A, F, w):
            return _f(F)
    return None


@_check("filters", "join_and_arrow_primality_agree")
def _(A, w):
    for F in all_filters(A):
        if not F.proper:
            continue
        j = prime_counterexample(A, F, w, "join") is None
        a = prime_counterexample(A, F, w, "arrow") is None
        if not (j == a == is_prime(A, F)):
            return f"{_f(F)}: join={j} arrow={a} declared={is_prime(A, F)}"
    return None


@_check("filters", "maximal_avoiding_is_prime")
def _(A, w):
    for a in _scope(A, w):
        if a == A.one:
            continue
        M = maximal_filter_avoiding(A, a)
        if M.contains(a) or not is_prime(A, M):
            return format_element(a)
    return None


@_check("filters", "generation_routes_agree")
def _(A, w):
    if not A.finite:
        return None
    elems = A.elements()
    for S in itertools.chain(itertools.combinations(elems, 1), itertools.combinations(elems, 2)):
        if generate_filter(A, S) != closure_filter(A, S):
            return "{" + ", ".join(map(format_element, S)) + "}"
    return None


@_check("filters", "primes_are_factor_pullbacks")
def _(A, w):
    from .algebras import ProductAlgebra
    from .filters import components
    if not isinstance(A, ProductAlgebra):
        return None
    for P in primes(A):
        parts = components(P)
        moving = [(c, p) for c, p in zip(A.children, parts) if p.proper]
        if len(moving) != 1 or not is_prime(*moving[0]):
            return _f(P)
    return None


@_check("filters", "inclusion_matches_membership")
def _(A, w):
    E = A.window(0 if A.finite else w)
    fs = all_filters(A)
    masks = [F.v_contains(E) for F in fs]
    for (F, mf), (G, mg) in itertools.product(zip(fs, masks), repeat=2):
        if issubset(F, G) != bool(np.all(~mf | mg)):
            return f"{_f(F)} vs {_f(G)}"
    return None


# --------------------------------------------------------------------------
# spectrum

@_check("spectrum", "partial_order")
def _(A, w):
    return None if spectrum(A).is_partial_order() else "inclusion is not a partial order"


@_check("spectrum", "root_system")
def _(A, w):
    return None if is_root_system(spectrum(A)) else "some up-set is not a chain"


@_check("spectrum", "stem_minimum_is_conrad")
def _(A, w):
    st = stem(A)
    N = conrad_filter(A)
    if bool(st) != N.proper:
        return f"stem size {len(st)} but N = {_f(N)}"
    if st:
        least = [F for _, F in st if all(issubset(F, G) for _, G in st)]
        if least != [N]:
            return f"least stem element is not {_f(N)}"
    return None


@_check("spectrum", "minimal_spectrum_inside_prime_spectrum")
def _(A, w):
    for P in primes(A):
        mu = set(spectrum(A, "minimal", at=P).filters)
        ps = set(spectrum(A, "prime", at=P).filters)
        if not mu <= ps or set(minimal_primes_below(A, P)) - mu:
            return _f(P)
    return None


@_check("spectrum", "finite_spectra_are_antichains")
def _(A, w):
    if not A.finite:
        return None
    p = spectrum(A)
    for i, j in itertools.permutations(range(len(p)), 2):
        if p.leq[i][j]:
            return f"{p.names[i]} < {p.names[j]}"
    return None


# --------------------------------------------------------------------------
# conrad

@_check("conrad", "counit_rule_matches_search")
def _(A, w):
    for x in _scope(A, w):
        if (is_counit(A, x, w) is None) != (counit_witness_in_window(A, x, w) is None):
            return format_element(x)
    return None


@_check("conrad", "dominance_iff_counits")
def _(A, w):
    for P in primes(A):
        if dominates_complement(A, P, w) != (contains_counits(P, w) is None):
            return _f(P)
    return None


@_check("conrad", "counit_separates_incomparable")
def _(A, w):
    fs = [F for F in all_filters(A)]
    for P, Q in itertools.permutations(fs, 2):
        if not comparable(P, Q):
            counit_separator(A, P, Q, w)
    return None


@_check("conrad", "incomparable_prime_witness")
def _(A, w):
    for P in primes(A):
        try:
            Q = incomparable_prime(A, P, w)
        except HypothesisError:
            continue
        if not is_prime(A, Q) or comparable(P, Q):
            return _f(P)
    return None


@_check("conrad", "comparable_with_every_prime")
def _(A, w):
    N = conrad_filter(A)
    for P in primes(A):
        if not comparable(N, P):
            return _f(P)
    return None


@_check("conrad", "prime_when_proper")
def _(A, w):
    N = conrad_filter(A)
    return None if not N.proper or is_prime(A, N) else _f(N)


@_check("conrad", "minimal_iff_trivial")
def _(A, w):
    N = conrad_filter(A)
    if is_minimal_prime(A, N) != (N == one(A)):
        return _f(N)
    if is_linear(A, w) is None and N != one(A):
        return f"linear but N = {_f(N)}"
    return None


@_check("conrad", "filters_above_form_chain")
def _(A, w):
    above = filters_above(A, conrad_filter(A))
    for F, G in itertools.combinations(above, 2):
        if not comparable(F, G):
            return f"{_f(F)} vs {_f(G)}"
    return None


@_check("conrad", "unique_maximal_contains_counits")
def _(A, w):
    ms = maximal_filters(A)
    if len(ms) != 1:
        return None
    M = ms[0]
    for u in _scope(A, w):
        wit = is_counit(A, u, w)
        if wit is None:
            continue
        Fb = join_complement_filter(A, wit.v, w)
        if not Fb.contains(u) or Fb.contains(A.zero) or not issubset(Fb, M):
            return format_element(u)
    N = conrad_filter(A)
    if not N.proper or not issubset(N, M):
        return f"N = {_f(N)}"
    return None


# --------------------------------------------------------------------------
# localize

@_check("localize", "ell_equals_minimal_meet")
def _(A, w):
    for P in primes(A):
        if ell(A, P, w) != ell_via_minimal(A, P):
            return _f(P)
    return None


@_check("localize", "ell_fixed_iff_minimal")
def _(A, w):
    for P in primes(A):
        L = ell(A, P, w)
        if not issubset(L, P) or (L == P) != is_minimal_prime(A, P):
            return _f(P)
    return None


@_check("localize", "ell_below_minimal_primes")
def _(A, w):
    for P in primes(A):
        for m in minimal_primes_below(A, P):
            if not issubset(ell(A, P, w), m):
                return f"{_f(P)} over {_f(m)}"
    return None


@_check("localize", "minimal_prime_avoids_outside_ell")
def _(A, w):
    for P in primes(A):
        L = ell(A, P, w)
        for p in _scope(A, w):
            if P.contains(p) and not L.contains(p):
                m = minimal_prime_avoiding(A, P, p, w)
                if m.contains(p) or not issubset(m, P):
                    return f"{_f(P)} at {format_element(p)}"
    return None


@_check("localize", "ell_reverses_order")
def _(A, w):
    for P, Q in itertools.permutations(primes(A), 2):
        if issubset(Q, P) and not issubset(ell(A, P, w), ell(A, Q, w)):
            return f"{_f(Q)} in {_f(P)}"
    return None


@_check("localize", "ell_detects_comparability")
def _(A, w):
    for P, F in itertools.product(primes(A), repeat=2):
        lhs, rhs = comparability_via_ell(A, P, F, w)
        if lhs != rhs:
            return f"{_f(P)}, {_f(F)}"
    return None


@_check("localize", "quotients_are_mv_algebras")
def _(A, w):
    for P in primes(A):
        L = localize(A, P, w)
        rep = check_mv_axioms(L.algebra, w)
        if not rep.ok:
            return f"{L}: {rep}"
        hit = homomorphism_counterexample(L.projection, w)
        if hit is not None:
            return f"{L}: {hit}"
        if shell(L.projection, w) != L.by:
            return f"{L}: shell"
    return None


@_check("localize", "spectrum_isomorphism")
def _(A, w):
    for P in primes(A):
        spectrum_iso_check(A, P, w)
    return None


@_check("localize", "connecting_maps")
def _(A, w):
    for P, Q in itertools.product(primes(A), repeat=2):
        if issubset(Q, P):
            connecting_map(A, P, Q, w)
    return None


@_check("localize", "incomparable_arrow_witness")
def _(A, w):
    for P, Q in itertools.permutations(primes(A), 2):
        if not comparable(P, Q):
            incomparable_arrow(A, P, Q, w)
    return None


@_check("localize", "universal_property")
def _(A, w):
    for Q in primes(A):
        f = localize(A, Q, w).projection
        for P in primes(A):
            rep = check_universal(f, P, w)
            if rep.violation:
                return f"f = quotient by {_f(f.by)}, P = {_f(P)}"
    return None


def run_suites(A: MVAlgebra, window: int = DEFAULT_WINDOW, suites=SUITES) -> list[CheckResult]:
    out = []
    for suite in suites:
        for name, fn in _CHECKS[suite]:
            try:
                ce = fn(A, window)
            except Exception as exc:  # a failing assertion is a failing check
                ce = f"{type(exc).__name__}: {exc}"
            out.append(CheckResult(suite, name, ce))
    return out
