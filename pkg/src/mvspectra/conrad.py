"""Counits, the Conrad filter and the facts tying them to the prime spectrum.

A counit is u < 1 admitting some v < 1 with u ∨ v = 1.  The Conrad filter N is
the implication filter generated by all counits; when proper it is the least
prime comparable to every prime.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebras import LexAlgebra, LexElem, format_element
from .core import (DEFAULT_WINDOW, InvariantError, MVAlgebra, first_true, one_code,
                   op_table, table_bound)
from .filters import (Explicit, Filter, LexFilter, ProductFilter, all_filters,
                      format_filter, generate_filter, is_implication_filter, membership,
                      is_prime, issubset, maximal_filter_avoiding, one, whole,
                      zero_set)


class HypothesisError(ValueError):
    """The input does not satisfy the hypothesis of the requested construction."""


class ComparabilityError(ValueError):
    pass


@dataclass(frozen=True)
class CounitWitness:
    u: object
    v: object

    def __str__(self):
        return f"{format_element(self.u)} ∨ {format_element(self.v)} = 1"


def _scope(A, window):
    return A.elements(0 if A.finite else window)


def _counit_partner(A: MVAlgebra, x):
    if x == A.one:
        return None
    if A.finite:
        for v in A.elements():
            if v != A.one and A.join(x, v) == A.one:
                return v
        return None
    if isinstance(A, LexAlgebra):
        # (1,v) ∨ (1,w) = (1, v∧w): need a disjoint nonzero support
        if x.top == 0 or all(c > 0 for c in x.vec):
            return None
        return LexElem(1, tuple(int(c == 0) for c in x.vec))
    ones = [c.one for c in A.children]
    for j, (c, a) in enumerate(zip(A.children, x)):
        if a == c.one:
            v = list(ones)
            v[j] = c.zero
            return tuple(v)
    for j, (c, a) in enumerate(zip(A.children, x)):
        w = _counit_partner(c, a)
        if w is not None:
            v = list(ones)
            v[j] = w
            return tuple(v)
    return None


def is_counit(A: MVAlgebra, x, window: int = DEFAULT_WINDOW) -> CounitWitness | None:
    """Witness that x is a counit, or None.

    Finite algebras are searched exhaustively; Lex(k) and symbolic products use
    the closed forms (see ``counit_witness_in_window`` for the brute-force twin).
    """
    A.validate(x)
    v = _counit_partner(A, x)
    if v is None:
        return None
    if not (A.lt(x, A.one) and A.lt(v, A.one) and A.join(x, v) == A.one):
        raise InvariantError(f"bad counit witness {format_element(v)} for {format_element(x)}")
    return CounitWitness(x, v)


def counit_witness_in_window(A: MVAlgebra, x, window: int = DEFAULT_WINDOW):
    """Brute-force partner search over the window (first in canonical order)."""
    if x == A.one:
        return None
    b = 0 if A.finite else window
    elems = _scope(A, window)
    i = int(A.code(A.encode([x]), b)[0])
    if not 0 <= i < len(elems) or elems[i] != x:
        raise ValueError(f"{format_element(x)} lies outside the window")
    row = op_table(A, "join", b)[i] == one_code(A, table_bound(A, b))
    row[int(A.code(A.encode([A.one]), b)[0])] = False
    j = first_true(row)
    return None if j is None else elems[j]


def counits(A: MVAlgebra, window: int = DEFAULT_WINDOW) -> list:
    return [x for x in _scope(A, window) if is_counit(A, x) is not None]


def conrad_filter(A: MVAlgebra) -> Filter:
    """N(A), the filter generated by the counits.

    Finite: generated directly.  Chang: {1}.  Lex(k), k >= 2: the radical.
    A product of two or more factors: the whole algebra (improper).
    """
    if A.finite:
        return generate_filter(A, counits(A))
    if isinstance(A, LexAlgebra):
        return one(A) if A.k == 1 else LexFilter(A, frozenset())
    if len(A.children) == 1:
        return ProductFilter(A, (conrad_filter(A.children[0]),))
    return whole(A)


def contains_counits(P: Filter, window: int = DEFAULT_WINDOW):
    """First in-scope counit missing from P, or None."""
    for u in counits(P.owner, window):
        if not P.contains(u):
            return u
    return None


def dominates_complement(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> bool:
    """True iff every in-scope p in P lies above every in-scope x outside P.

    Asserted to coincide with "P contains every in-scope counit".
    """
    if not P.proper or not is_prime(A, P):
        raise ValueError(f"{format_filter(P)} must be a proper prime filter")
    b = 0 if A.finite else window
    inP = membership(P, b)
    leq = op_table(A, "imp", b) == one_code(A, table_bound(A, b))
    verdict = bool(leq[np.ix_(~inP, inP)].all())
    if verdict != (contains_counits(P, window) is None):
        raise InvariantError(f"dominance and counit containment disagree on {format_filter(P)}")
    return verdict


def _first_in(F: Filter, G: Filter, window):
    """First in-scope element of F outside G."""
    A = F.owner
    E = A.window(0 if A.finite else window)
    i = first_true(F.v_contains(E) & ~G.v_contains(E))
    return None if i is None else _scope(A, window)[i]


def counit_separator(A: MVAlgebra, P: Filter, Q: Filter, window: int = DEFAULT_WINDOW):
    """A counit in Q outside P, for incomparable filters P and Q.

    Takes x in Q \\ P and y in P \\ Q and returns y → x.
    """
    x = _first_in(Q, P, window)
    y = _first_in(P, Q, window)
    if x is None or y is None:
        raise ComparabilityError(f"{format_filter(P)} and {format_filter(Q)} are comparable in scope")
    r = A.imp(y, x)
    if is_counit(A, r) is None or not Q.contains(r) or P.contains(r):
        raise InvariantError(f"{format_element(r)} does not separate {format_filter(Q)} from {format_filter(P)}")
    return r


def incomparable_prime(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> Filter:
    """A prime incomparable to P, for a prime P missing some counit.

    Picks g outside P and p in P with p not above g, then the maximal filter
    avoiding g → p.
    """
    if not is_prime(A, P):
        raise ValueError(f"{format_filter(P)} is not prime")
    if contains_counits(P, window) is None:
        raise HypothesisError(f"{format_filter(P)} contains every counit in scope")
    b = 0 if A.finite else window
    elems = _scope(A, window)
    inP = membership(P, b)
    leq = op_table(A, "imp", b) == one_code(A, table_bound(A, b))
    i = first_true(~leq[np.ix_(~inP, inP)].ravel())
    if i is None:
        raise InvariantError(f"{format_filter(P)} dominates its complement but misses a counit")
    outside, inside = np.flatnonzero(~inP), np.flatnonzero(inP)
    g = elems[outside[i // len(inside)]]
    p = elems[inside[i % len(inside)]]
    Q = maximal_filter_avoiding(A, A.imp(g, p))
    pg = A.imp(p, g)
    if not Q.contains(pg) or P.contains(pg) or issubset(P, Q) or issubset(Q, P):
        raise InvariantError(f"{format_filter(Q)} is not incomparable to {format_filter(P)}")
    return Q


def join_complement_filter(A: MVAlgebra, b, window: int = DEFAULT_WINDOW) -> Filter:
    """{x : x ∨ b = 1} for b < 1; always an implication filter."""
    A.validate(b)
    if b == A.one:
        raise ValueError("b must be below 1")
    F = _join_complement(A, b)
    if not is_implication_filter(A, F, window):
        raise InvariantError(f"{{x : x ∨ {format_element(b)} = 1}} is not an implication filter")
    return F


def _join_complement(A, b):
    if A.finite:
        return Explicit(A, frozenset(x for x in A.elements() if A.join(x, b) == A.one))
    if isinstance(A, LexAlgebra):
        support = [i + 1 for i, c in enumerate(b.vec) if c]
        if b.top == 0 or len(support) == A.k:
            return one(A)
        return zero_set(A, support)
    return ProductFilter(A, tuple(whole(c) if a == c.one else _join_complement(c, a)
                                  for c, a in zip(A.children, b)))


def maximal_filters(A: MVAlgebra) -> list[Filter]:
    proper = [F for F in all_filters(A) if F.proper]
    return [F for F in proper if not any(G != F and issubset(F, G) for G in proper)]


def filters_above(A: MVAlgebra, N: Filter) -> list[Filter]:
    return [F for F in all_filters(A) if issubset(N, F)]


def describe_conrad(A: MVAlgebra) -> str:
    N = conrad_filter(A)
    return format_filter(N) + ("" if N.proper else " (improper)")

