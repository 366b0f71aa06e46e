"""Implication filters: explicit sets on finite algebras, descriptors otherwise.

Filters are canonical values, so ``==`` is set equality:

* finite owner: ``Explicit(members)``;
* ``Lex(k)``: ``LexFilter(zeros)`` is {(1, v) : v_i = 0 for i in zeros}; an
  empty ``zeros`` is the radical, the full index set is {1}; ``whole=True``
  is the improper filter.  These are all the implication filters of Lex(k);
* symbolic product: ``ProductFilter(parts)``, the product of one filter per
  factor (a pullback has every part but one equal to the whole factor).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .algebras import LexAlgebra, ProductAlgebra, format_element
from .core import (DEFAULT_WINDOW, InvariantError, MVAlgebra, UnsupportedError,
                   first_true, one_code, op_table, table_bound)


@dataclass(frozen=True)
class Filter:
    owner: MVAlgebra

    def __contains__(self, x) -> bool:
        return self.contains(x)

    def contains(self, x) -> bool:
        raise NotImplementedError

    def v_contains(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    @property
    def proper(self) -> bool:
        return self != whole(self.owner)

    def __str__(self) -> str:
        return format_filter(self)


@dataclass(frozen=True)
class Explicit(Filter):
    members: frozenset

    def contains(self, x):
        return x in self.members

    @cached_property
    def _mask(self):
        A = self.owner
        mask = np.zeros(A.code_space(0), dtype=bool)
        if self.members:
            mask[A.code(A.encode(self.members), 0)] = True
        return mask

    def v_contains(self, X):
        return self._mask[self.owner.code(X, 0)]

    def __repr__(self):
        return f"Explicit({format_filter(self)})"


@dataclass(frozen=True)
class LexFilter(Filter):
    zeros: frozenset
    whole: bool = False

    def contains(self, x):
        if self.whole:
            return True
        return x.top == 1 and all(x.vec[i - 1] == 0 for i in self.zeros)

    def v_contains(self, X):
        if self.whole:
            return np.ones(len(X), dtype=bool)
        ok = X[:, 0] == 1
        for i in self.zeros:
            ok &= X[:, i] == 0
        return ok

    def __repr__(self):
        return f"LexFilter({format_filter(self)})"


@dataclass(frozen=True)
class ProductFilter(Filter):
    parts: tuple

    def contains(self, x):
        return all(p.contains(c) for p, c in zip(self.parts, x))

    def v_contains(self, X):
        ok = np.ones(len(X), dtype=bool)
        for i, p in enumerate(self.parts):
            ok &= p.v_contains(self.owner.component(X, i))
        return ok

    def __repr__(self):
        return f"ProductFilter({format_filter(self)})"


# --------------------------------------------------------------------------
# Constructors

def upset(A: MVAlgebra, m) -> Explicit:
    return Explicit(A, frozenset(x for x in A.elements() if A.leq(m, x)))


def explicit(A: MVAlgebra, members) -> Explicit:
    if not A.finite:
        raise UnsupportedError("explicit filters need a finite algebra")
    members = frozenset(members)
    for x in members:
        A.validate(x)
    return Explicit(A, members)


def one(A: MVAlgebra) -> Filter:
    if A.finite:
        return Explicit(A, frozenset([A.one]))
    if isinstance(A, LexAlgebra):
        return LexFilter(A, frozenset(range(1, A.k + 1)))
    return ProductFilter(A, tuple(one(c) for c in A.children))


def whole(A: MVAlgebra) -> Filter:
    if A.finite:
        return Explicit(A, frozenset(A.elements()))
    if isinstance(A, LexAlgebra):
        return LexFilter(A, frozenset(), whole=True)
    return ProductFilter(A, tuple(whole(c) for c in A.children))


def rad(A: MVAlgebra) -> Filter:
    if not isinstance(A, LexAlgebra):
        raise UnsupportedError("the radical descriptor is only available on lex/chang")
    return LexFilter(A, frozenset())


def zero_set(A: MVAlgebra, S) -> Filter:
    if not isinstance(A, LexAlgebra):
        raise UnsupportedError("m{...} is only available on lex/chang")
    S = frozenset(S)
    if not S or not S <= set(range(1, A.k + 1)):
        raise ValueError(f"index set {sorted(S)} must be a nonempty subset of 1..{A.k}")
    return LexFilter(A, S)


def product_of(A: ProductAlgebra, parts) -> Filter:
    parts = tuple(parts)
    if len(parts) != len(A.children) or any(p.owner != c for p, c in zip(parts, A.children)):
        raise ValueError("one filter per factor is required")
    if A.finite:
        return Explicit(A, frozenset(itertools.product(*(sorted(p.members) for p in parts))))
    return ProductFilter(A, parts)


def pullback(A: MVAlgebra, i: int, F: Filter) -> Filter:
    """{x : x_i in F} for a 1-based factor index i."""
    if not isinstance(A, ProductAlgebra):
        raise UnsupportedError("pull{...} needs a product algebra")
    if not 1 <= i <= len(A.children):
        raise ValueError(f"factor index {i} out of range 1..{len(A.children)}")
    parts = [whole(c) for c in A.children]
    parts[i - 1] = F
    return product_of(A, parts)


def components(F: Filter) -> tuple:
    """Factor filters of a filter on a product (explicit ones are projected)."""
    A = F.owner
    if isinstance(F, ProductFilter):
        return F.parts
    parts = tuple(Explicit(c, frozenset(x[i] for x in F.members))
                  for i, c in enumerate(A.children))
    if product_of(A, parts) != F:
        raise InvariantError(f"{F} is not a product of factor filters")
    return parts


# --------------------------------------------------------------------------
# Literals

def format_filter(F: Filter) -> str:
    A = F.owner
    if isinstance(F, LexFilter):
        if F.whole:
            return "whole"
        if len(F.zeros) == A.k:
            return "one"
        if not F.zeros:
            return "rad"
        return "m{" + ",".join(map(str, sorted(F.zeros))) + "}"
    if isinstance(F, ProductFilter):
        if F == one(A):
            return "one"
        if F == whole(A):
            return "whole"
        moving = [i for i, p in enumerate(F.parts) if p != whole(p.owner)]
        if len(moving) == 1:
            i = moving[0]
            return f"pull{{{i + 1};{format_filter(F.parts[i])}}}"
        return "prod{" + ";".join(format_filter(p) for p in F.parts) + "}"
    if F == whole(A):
        return "whole"
    if F == one(A):
        return "one"
    if F.members:
        m = min(F.members)
        for x in F.members:
            m = A.meet(m, x)
        if upset(A, m) == F:
            return f"gen{{{format_element(m)}}}"
    return "{" + ",".join(format_element(x) for x in sorted(F.members)) + "}"


# --------------------------------------------------------------------------
# Generation

def _require_finite(A):
    if not A.finite:
        raise UnsupportedError("filter generation is only supported on finite algebras")


def generate_filter(A: MVAlgebra, S) -> Explicit:
    """Smallest implication filter containing S: the up-set of the stable
    ⊗-power of the meet of S."""
    _require_finite(A)
    m = A.one
    for s in S:
        A.validate(s)
        m = A.meet(m, s)
    while (sq := A.otimes(m, m)) != m:
        m = sq
    return upset(A, m)


def closure_filter(A: MVAlgebra, S) -> Explicit:
    """Same as ``generate_filter`` but by saturating 1, ∧, x⊗x and ≤-upward."""
    _require_finite(A)
    elems = A.elements()
    F = {A.one, *S}
    while True:
        new = set(F)
        for x in F:
            new.add(A.otimes(x, x))
            new.update(y for y in elems if A.leq(x, y))
        for x, y in itertools.combinations(F, 2):
            new.add(A.meet(x, y))
        if new == F:
            return Explicit(A, frozenset(F))
        F = new


def smallest_filter_containing(A: MVAlgebra, S) -> Filter:
    """Intersection of every catalog filter containing S.

    The catalog lists all implication filters of every supported algebra, so
    this is exact generation for finite and symbolic algebras alike.
    """
    S = list(S)
    X = A.encode(S) if S else None
    out = whole(A)
    for F in all_filters(A):
        if X is None or F.v_contains(X).all():
            out = intersect(out, F)
    return out


def filter_contains(F: Filter, x) -> bool:
    F.owner.validate(x)
    return F.contains(x)


# --------------------------------------------------------------------------
# Set algebra on filters

def _same_owner(F, G):
    if F.owner != G.owner:
        raise ValueError("filters belong to different algebras")


def issubset(F: Filter, G: Filter) -> bool:
    _same_owner(F, G)
    if isinstance(F, Explicit):
        return F.members <= G.members
    if isinstance(F, LexFilter):
        return G.whole or (not F.whole and F.zeros >= G.zeros)
    return all(issubset(p, q) for p, q in zip(F.parts, G.parts))


def comparable(F: Filter, G: Filter) -> bool:
    return issubset(F, G) or issubset(G, F)


def intersect(F: Filter, G: Filter) -> Filter:
    _same_owner(F, G)
    if isinstance(F, Explicit):
        return Explicit(F.owner, F.members & G.members)
    if isinstance(F, LexFilter):
        if F.whole:
            return G
        if G.whole:
            return F
        return LexFilter(F.owner, F.zeros | G.zeros)
    return ProductFilter(F.owner, tuple(intersect(p, q) for p, q in zip(F.parts, G.parts)))


def intersect_all(A: MVAlgebra, filters) -> Filter:
    out = whole(A)
    for F in filters:
        out = intersect(out, F)
    return out


# --------------------------------------------------------------------------
# Predicates

def _tables(A, window):
    b = 0 if A.finite else window
    return b, table_bound(A, b)


def is_implication_filter(A: MVAlgebra, F: Filter, window: int = DEFAULT_WINDOW) -> bool:
    """Lattice-filter-plus-powers test, cross-checked against modus ponens."""
    b, tb = _tables(A, window)
    inF, inF2 = membership(F, b), membership(F, tb)
    has_one = bool(F.v_contains(A.encode([A.one]))[0])
    imp = op_table(A, "imp", b)[inF]
    out = ~inF[None, :]
    upward = not np.any((imp == one_code(A, tb)) & out)
    meets = bool(inF2[op_table(A, "meet", b)[np.ix_(inF, inF)]].all())
    powers = bool(inF2[np.diagonal(op_table(A, "otimes", b))[inF]].all())
    lattice_verdict = has_one and upward and meets and powers
    mp_verdict = has_one and not np.any(inF2[imp] & out)
    if lattice_verdict != mp_verdict:
        raise InvariantError(f"filter tests disagree on {F}: lattice={lattice_verdict} mp={mp_verdict}")
    return lattice_verdict


def prime_counterexample(A: MVAlgebra, F: Filter, window: int = DEFAULT_WINDOW,
                         criterion: str = "join"):
    """First in-scope pair violating primality of F, or None.

    ``join``: x∨y in F but neither x nor y; ``arrow``: neither x→y nor y→x in F.
    """
    b, tb = _tables(A, window)
    inF, inF2 = membership(F, b), membership(F, tb)
    if criterion == "join":
        bad = inF2[op_table(A, "join", b)] & ~inF[:, None] & ~inF[None, :]
    elif criterion == "arrow":
        imp = inF2[op_table(A, "imp", b)]
        bad = ~imp & ~imp.T
    else:
        raise ValueError(criterion)
    i = first_true(bad.ravel())
    if i is None:
        return None
    elems = A.elements(b)
    return elems[i // len(inF)], elems[i % len(inF)]


def is_prime(A: MVAlgebra, F: Filter) -> bool:
    """Proper implication filter with x∨y in F ⇒ x in F or y in F.

    Finite: exhaustive.  Lex(k): the primes are m{i} and the radical.
    Symbolic products: pullbacks of a factor prime.
    """
    if F.owner != A:
        raise ValueError("filter does not belong to this algebra")
    if not F.proper:
        return False
    if A.finite:
        return is_implication_filter(A, F) and prime_counterexample(A, F) is None
    if isinstance(F, LexFilter):
        return len(F.zeros) <= 1
    moving = [p for p in F.parts if p.proper]
    return len(moving) == 1 and is_prime(moving[0].owner, moving[0])


# --------------------------------------------------------------------------
# Enumeration

@lru_cache(maxsize=None)
def all_filters(A: MVAlgebra) -> tuple:
    """Every implication filter, in a deterministic order.

    Finite: up-sets of ⊗-idempotents, ordered by idempotent.  Lex(k): {1},
    then m{S} by decreasing |S|, the radical, the whole algebra.  Symbolic
    products: all products of factor filters.
    """
    if A.finite:
        return tuple(upset(A, e) for e in A.elements() if A.otimes(e, e) == e)
    if isinstance(A, LexAlgebra):
        out = [one(A)]
        for size in range(A.k - 1, 0, -1):
            out.extend(LexFilter(A, frozenset(S))
                       for S in itertools.combinations(range(1, A.k + 1), size))
        return tuple(out + [rad(A), whole(A)])
    return tuple(ProductFilter(A, parts)
                 for parts in itertools.product(*(all_filters(c) for c in A.children)))


@lru_cache(maxsize=None)
def primes(A: MVAlgebra) -> tuple:
    return tuple(F for F in all_filters(A) if is_prime(A, F))


def is_minimal_prime(A: MVAlgebra, P: Filter) -> bool:
    return is_prime(A, P) and not any(Q != P and issubset(Q, P) for Q in primes(A))


@lru_cache(maxsize=None)
def minimal_primes(A: MVAlgebra) -> tuple:
    return tuple(P for P in primes(A) if is_minimal_prime(A, P))


def minimal_primes_below(A: MVAlgebra, P: Filter) -> list:
    if not is_prime(A, P):
        raise ValueError(f"{P} is not prime")
    return [m for m in minimal_primes(A) if issubset(m, P)]


def maximal_filter_avoiding(A: MVAlgebra, a) -> Filter:
    """An inclusion-maximal filter not containing ``a``; ties go to the
    earliest filter in ``all_filters`` order.  The result is always prime."""
    A.validate(a)
    if a == A.one:
        raise ValueError("every filter contains 1")
    cands = [F for F in all_filters(A) if not F.contains(a)]
    for F in cands:
        if not any(G != F and issubset(F, G) for G in cands):
            if not is_prime(A, F):
                raise InvariantError(f"maximal filter avoiding {format_element(a)} is not prime: {F}")
            return F
    raise InvariantError("no filter avoids the element")  # {1} always does


@lru_cache(maxsize=None)
def membership(F: Filter, bound: int) -> np.ndarray:
    """F.v_contains over window(bound), cached."""
    A = F.owner
    m = F.v_contains(A.window(0 if A.finite else bound))
    m.setflags(write=False)
    return m
