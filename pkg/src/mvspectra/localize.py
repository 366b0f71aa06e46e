"""Localization at a prime: ℓ(P), quotients, connecting maps and shells.

ℓ(P) is the implication filter generated by {x → p : p in P, x not in P}.  It
coincides with the meet of the minimal primes below P, and the quotient
A/ℓ(P) has a prime spectrum order-isomorphic to the primes comparable to P.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from .algebras import (ChainAlgebra, LexAlgebra, LexElem, ProductAlgebra,
                       format_element, format_expr)
from .conrad import ComparabilityError, conrad_filter, contains_counits
from .core import (DEFAULT_WINDOW, InvariantError, MVAlgebra, UnsupportedError,
                   check_mv_axioms, codes_in, first_true, op_table, pairs,
                   table_bound)
from .filters import (Filter, all_filters, components, format_filter,
                      generate_filter, intersect_all, is_implication_filter,
                      is_minimal_prime, is_prime, issubset, membership,
                      minimal_primes_below,
                      one, smallest_filter_containing)
from .spectrum import SpectrumPoset, order_iso, spectrum


def _bound(A: MVAlgebra, window: int) -> int:
    return 0 if A.finite else window


# --------------------------------------------------------------------------
# Morphisms

@dataclass(frozen=True, eq=False)
class Morphism:
    source: MVAlgebra
    target: MVAlgebra
    fn: Callable
    vfn: Callable
    kind: str = "table"
    by: Filter | None = None

    def __call__(self, x):
        return self.fn(x)

    def __str__(self):
        return f"{self.kind}: {format_expr(self.source.expr)} -> {format_expr(self.target.expr)}"


def identity(A: MVAlgebra) -> Morphism:
    return Morphism(A, A, lambda x: x, lambda X: X, "identity")


def from_table(source: MVAlgebra, target: MVAlgebra, mapping: dict) -> Morphism:
    """Morphism of finite algebras given as an element -> element table."""
    if not source.finite:
        raise UnsupportedError("table morphisms need a finite source")
    elems = source.elements()
    rows = target.encode([mapping[x] for x in elems])
    table = np.empty((source.code_space(0), target.width), dtype=np.int64)
    table[source.code(source.encode(elems), 0)] = rows
    return Morphism(source, target, mapping.__getitem__, lambda X: table[source.code(X, 0)])


def compose(g: Morphism, f: Morphism) -> Morphism:
    """g ∘ f."""
    if f.target != g.source:
        raise ValueError("morphisms do not compose")
    return Morphism(f.source, g.target, lambda x: g.fn(f.fn(x)),
                    lambda X: g.vfn(f.vfn(X)), "composite")


def homomorphism_counterexample(f: Morphism, window: int = DEFAULT_WINDOW):
    """First in-scope failure of f(x⊕y) = f(x)⊕f(y), f(¬x) = ¬f(x), f(0) = 0."""
    A, T = f.source, f.target
    if f.fn(A.zero) != T.zero:
        return ("zero", A.zero)
    b, tb = _bound(A, window), table_bound(A, _bound(A, window))
    E = A.window(b)
    elems = A.elements(b)
    img = f.vfn(E)
    bad = first_true(~np.all(f.vfn(A.v_neg(E)) == T.v_neg(img), axis=1))
    if bad is not None:
        return ("neg", elems[bad])
    tgt = codes_in(T, img, _bound(T, window))
    if tgt is None:
        # images leave the target window: compare rows directly
        X, Y = pairs(E, E)
        eq = np.all(f.vfn(A.v_oplus(X, Y)) == T.v_oplus(f.vfn(X), f.vfn(Y)), axis=1)
    else:
        bt = _bound(T, window)
        rhs = op_table(T, "oplus", bt)[np.ix_(tgt, tgt)]
        proj = codes_in(T, f.vfn(A.window(tb)), table_bound(T, bt))
        if proj is not None:
            eq = (proj[op_table(A, "oplus", b)] == rhs).ravel()
        else:
            lhs = f.vfn(A.window(tb))[op_table(A, "oplus", b)]
            eq = np.all(lhs == T.window(table_bound(T, bt))[rhs], axis=2).ravel()
    bad = first_true(~eq)
    if bad is not None:
        return ("oplus", elems[bad // len(E)], elems[bad % len(E)])
    return None


# --------------------------------------------------------------------------
# Quotients

@dataclass(frozen=True, eq=False)
class _Collapse:
    target: MVAlgebra
    project: Callable
    lift: Callable
    v_project: Callable
    v_lift: Callable


def _identity_collapse(A):
    return _Collapse(A, lambda x: x, lambda y: y, lambda X: X, lambda Y: Y)


def _collapse(A: MVAlgebra, F: Filter) -> _Collapse | None:
    """Closed-form quotient A/F onto a catalog algebra; None when trivial."""
    if not F.proper:
        return None
    if F == one(A):
        return _identity_collapse(A)
    if isinstance(A, LexAlgebra):
        keep = sorted(i - 1 for i in F.zeros)
        k = A.k
        if not keep:
            return _Collapse(
                ChainAlgebra(1),
                lambda x: x.top,
                lambda t: LexElem(t, (0,) * k),
                lambda X: X[:, :1].copy(),
                lambda Y: np.hstack([Y, np.zeros((len(Y), k), dtype=np.int64)]))
        cols = [0] + [1 + i for i in keep]

        def lift(y):
            vec = [0] * k
            for j, i in enumerate(keep):
                vec[i] = y.vec[j]
            return LexElem(y.top, vec)

        def v_lift(Y):
            out = np.zeros((len(Y), 1 + k), dtype=np.int64)
            out[:, cols] = Y
            return out

        return _Collapse(LexAlgebra(len(keep)),
                         lambda x: LexElem(x.top, tuple(x.vec[i] for i in keep)),
                         lift, lambda X: X[:, cols], v_lift)
    if isinstance(A, ProductAlgebra):
        subs = [_collapse(c, p) for c, p in zip(A.children, components(F))]
        live = [(i, s) for i, s in enumerate(subs) if s is not None]
        if not live:
            return None
        ones = [c.one for c in A.children]
        one_rows = [c.encode([c.one]) for c in A.children]

        def lift(y):
            out = list(ones)
            for (i, s), part in zip(live, (y,) if len(live) == 1 else y):
                out[i] = s.lift(part)
            return tuple(out)

        if len(live) == 1:
            (i, s), = live
            T = s.target

            def project(x):
                return s.project(x[i])

            def v_project(X):
                return s.v_project(A.component(X, i))

            def split(Y):
                return [Y]
        else:
            T = ProductAlgebra(tuple(s.target for _, s in live))

            def project(x):
                return tuple(s.project(x[i]) for i, s in live)

            def v_project(X):
                return np.hstack([s.v_project(A.component(X, i)) for i, s in live])

            def split(Y):
                return [T.component(Y, j) for j in range(len(live))]

        def v_lift(Y):
            cols = [np.repeat(r, len(Y), axis=0) for r in one_rows]
            for (i, s), part in zip(live, split(Y)):
                cols[i] = s.v_lift(part)
            return np.hstack(cols)

        return _Collapse(T, project, lift, v_project, v_lift)
    raise UnsupportedError(f"no closed form for {format_expr(A.expr)}/{format_filter(F)}")


def congruent(A: MVAlgebra, F: Filter, x, y) -> bool:
    """x ~ y iff x → y and y → x both lie in F."""
    return F.contains(A.imp(x, y)) and F.contains(A.imp(y, x))


def _exhaustive(A: MVAlgebra, F: Filter) -> _Collapse | None:
    """Finite quotient by brute force, transported onto a product of chains.

    Classes are represented by their least element.  The quotient splits along
    the atoms of its Boolean skeleton (idempotents); each atom's down-set is a
    chain, giving an explicit isomorphism which is then checked exhaustively.
    """
    elems = A.elements()
    rep, reps = {}, []
    for x in elems:
        for r in reps:
            two_arrow = congruent(A, F, x, r)
            if two_arrow != F.contains(A.meet(A.imp(x, r), A.imp(r, x))):
                raise InvariantError("two-arrow and single-element congruence disagree")
            if two_arrow:
                rep[x] = r
                break
        else:
            rep[x] = x
            reps.append(x)
    for x in elems:
        if rep[A.neg(x)] != rep[A.neg(rep[x])]:
            raise InvariantError(f"not a congruence at ¬{format_element(x)}")
        for y in elems:
            if rep[A.oplus(x, y)] != rep[A.oplus(rep[x], rep[y])]:
                raise InvariantError(f"not a congruence at {format_element(x)}⊕{format_element(y)}")
    if {x for x in elems if rep[x] == rep[A.one]} != set(F.members):
        raise InvariantError("the class of 1 is not the filter")
    qzero, qone = rep[A.zero], rep[A.one]

    def qleq(a, b):
        return rep[A.imp(a, b)] == qone

    idem = [e for e in reps if rep[A.otimes(e, e)] == e]
    atoms = [e for e in idem if e != qzero
             and not any(f not in (qzero, e) and qleq(f, e) for f in idem)]
    if not atoms:
        return None
    atoms.sort(reverse=True)
    chains = []
    for e in atoms:
        down = [r for r in reps if qleq(r, e)]
        down.sort(key=lambda r: sum(qleq(c, r) for c in down))
        chains.append(down)
    if len(atoms) == 1:
        T = ChainAlgebra(len(chains[0]) - 1)
        iso = {r: chains[0].index(rep[A.meet(r, atoms[0])]) for r in reps}
    else:
        T = ProductAlgebra(tuple(ChainAlgebra(len(c) - 1) for c in chains))
        iso = {r: tuple(c.index(rep[A.meet(r, e)]) for c, e in zip(chains, atoms)) for r in reps}
    inv = {v: r for r, v in iso.items()}
    if len(inv) != len(reps) or set(inv) != set(T.elements()):
        raise InvariantError("quotient decomposition is not a bijection")
    for a in reps:
        if iso[rep[A.neg(a)]] != T.neg(iso[a]):
            raise InvariantError("quotient decomposition does not preserve ¬")
        for b in reps:
            if iso[rep[A.oplus(a, b)]] != T.oplus(iso[a], iso[b]):
                raise InvariantError("quotient decomposition does not preserve ⊕")
    project = {x: iso[rep[x]] for x in elems}
    fwd = from_table(A, T, project)
    back = from_table(T, A, inv)
    return _Collapse(T, project.__getitem__, inv.__getitem__, fwd.vfn, back.vfn)


def _window_mismatch(A, F, c: _Collapse, window):
    """Check a closed form against the congruence definition on the window."""
    b, tb = _bound(A, window), table_bound(A, _bound(A, window))
    elems = A.elements(b)
    T = c.target
    inF2 = membership(F, tb)
    arrows = inF2[op_table(A, "imp", b)]
    cong = arrows & arrows.T
    if not np.array_equal(cong, inF2[op_table(A, "biimp", b)]):
        return "two-arrow and single-element congruence disagree"
    E = A.window(b)
    pc = codes_in(T, c.v_project(E), _bound(T, window))
    if pc is None:
        return "projection leaves the target window"
    bad = first_true((cong != (pc[:, None] == pc[None, :])).ravel())
    if bad is not None:
        n = len(E)
        return f"class mismatch at {format_element(elems[bad // n])}, {format_element(elems[bad % n])}"
    if not np.array_equal(membership(F, b), T.v_is_one(c.v_project(E))):
        return "the class of 1 is not the filter"
    Wt = T.window(_bound(T, window))
    if not np.array_equal(c.v_project(c.v_lift(Wt)), Wt):
        return "lift is not a section of the projection"
    f = Morphism(A, T, c.project, c.v_project, "quotient", F)
    hit = homomorphism_counterexample(f, window)
    return None if hit is None else f"projection is not a homomorphism: {hit}"


@dataclass(frozen=True, eq=False)
class QuotientAlgebra:
    base: MVAlgebra
    by: Filter
    algebra: MVAlgebra
    route: str
    _c: _Collapse

    def project(self, x):
        return self._c.project(x)

    def lift(self, y):
        return self._c.lift(y)

    def v_project(self, X):
        return self._c.v_project(X)

    def v_lift(self, Y):
        return self._c.v_lift(Y)

    def representative(self, x):
        return self.lift(self.project(x))

    @property
    def projection(self) -> Morphism:
        return Morphism(self.base, self.algebra, self._c.project, self._c.v_project,
                        "quotient", self.by)

    @property
    def signature(self) -> str:
        return format_expr(self.algebra.expr)

    def __str__(self):
        return f"{format_expr(self.base.expr)}/{format_filter(self.by)} ≅ {self.signature}"


def _flat(A: MVAlgebra) -> list:
    if isinstance(A, ProductAlgebra):
        return [t for c in A.children for t in _flat(c)]
    return [format_expr(A.expr)]


def quotient_closed_form(A: MVAlgebra, F: Filter) -> QuotientAlgebra:
    c = _collapse(A, F)
    if c is None:
        raise UnsupportedError("the quotient by the whole algebra is trivial")
    return QuotientAlgebra(A, F, c.target, "closed-form", c)


@lru_cache(maxsize=None)
def quotient(A: MVAlgebra, F: Filter, window: int = DEFAULT_WINDOW) -> QuotientAlgebra:
    """A/F.

    Finite: congruence classes computed exhaustively (least element as
    representative), cross-checked against the closed form.  Symbolic: closed
    form, validated on the window against the congruence definition.
    """
    if F.owner != A:
        raise ValueError("filter does not belong to this algebra")
    if not is_implication_filter(A, F, window):
        raise ValueError(f"{format_filter(F)} is not an implication filter")
    closed = quotient_closed_form(A, F)
    if A.finite:
        c = _exhaustive(A, F)
        if c is None:
            raise UnsupportedError("the quotient by the whole algebra is trivial")
        if _flat(c.target) != _flat(closed.algebra):
            raise InvariantError(f"quotient routes disagree: {format_expr(c.target.expr)} "
                                 f"vs {closed.signature}")
        E = A.window(0)
        X, Y = pairs(E, E)
        k1 = np.all(c.v_project(X) == c.v_project(Y), axis=1)
        k2 = np.all(closed.v_project(X) == closed.v_project(Y), axis=1)
        if not np.array_equal(k1, k2):
            raise InvariantError("quotient routes induce different congruences")
        Q = QuotientAlgebra(A, F, c.target, "exhaustive", c)
    else:
        problem = _window_mismatch(A, F, closed._c, window)
        if problem:
            raise InvariantError(f"{A.expr}/{format_filter(F)}: {problem}")
        Q = closed
    rep = check_mv_axioms(Q.algebra, window)
    if not rep.ok:
        raise InvariantError(f"quotient fails the MV axioms: {rep}")
    return Q


def image_filter(Q: QuotientAlgebra, F: Filter, window: int = DEFAULT_WINDOW) -> Filter:
    """F/Q.by as a filter of the quotient algebra (F must contain Q.by)."""
    if not issubset(Q.by, F):
        raise ValueError(f"{format_filter(F)} does not contain {format_filter(Q.by)}")
    T = Q.algebra
    Wt = T.window(_bound(T, window))
    target = F.v_contains(Q.v_lift(Wt))
    hits = [G for G in all_filters(T) if np.array_equal(G.v_contains(Wt), target)]
    if len(hits) != 1:
        raise InvariantError(f"image of {format_filter(F)} matches {len(hits)} filters")
    return hits[0]


def preimage_filter(Q: QuotientAlgebra, G: Filter, window: int = DEFAULT_WINDOW) -> Filter:
    A = Q.base
    E = A.window(_bound(A, window))
    target = G.v_contains(Q.v_project(E))
    hits = [F for F in all_filters(A) if np.array_equal(F.v_contains(E), target)]
    if len(hits) != 1:
        raise InvariantError(f"preimage of {format_filter(G)} matches {len(hits)} filters")
    return hits[0]


# --------------------------------------------------------------------------
# ℓ(P)

def _require_prime(A, P):
    if P.owner != A:
        raise ValueError("filter does not belong to this algebra")
    if not P.proper:
        raise ValueError("ℓ is only defined for proper prime filters")
    if not is_prime(A, P):
        raise ValueError(f"{format_filter(P)} is not prime")


def arrow_generators(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> list:
    """Distinct in-scope values x → p with p in P and x outside P."""
    b = _bound(A, window)
    inP = membership(P, b)
    codes = np.unique(op_table(A, "imp", b)[np.ix_(~inP, inP)])
    W = A.window(table_bound(A, b))
    return sorted(A.decode(r) for r in W[codes])


def ell_via_minimal(A: MVAlgebra, P: Filter) -> Filter:
    """Meet of the minimal primes below P."""
    return intersect_all(A, minimal_primes_below(A, P))


@lru_cache(maxsize=None)
def ell(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> Filter:
    """ℓ(P), the filter generated by the arrows x → p (x outside P, p in P).

    Finite: generated exactly.  Symbolic: the meet of the minimal primes below
    P, asserted equal to the filter generated by the in-window arrows.
    """
    _require_prime(A, P)
    gens = arrow_generators(A, P, window)
    if A.finite:
        return generate_filter(A, gens)
    meet = ell_via_minimal(A, P)
    generated = smallest_filter_containing(A, gens)
    if generated != meet:
        raise InvariantError(f"ℓ({format_filter(P)}): arrows generate {format_filter(generated)}, "
                             f"minimal primes meet in {format_filter(meet)}")
    return meet


def localize(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> QuotientAlgebra:
    """A/ℓ(P); asserts the image of P contains every in-scope counit there."""
    Q = quotient(A, ell(A, P, window), window)
    image = image_filter(Q, P, window)
    missing = contains_counits(image, window)
    if missing is not None:
        raise InvariantError(f"image of {format_filter(P)} misses counit {format_element(missing)}")
    return Q


def connecting_map(A: MVAlgebra, P: Filter, Q: Filter, window: int = DEFAULT_WINDOW) -> Morphism:
    """A/ℓ(P) -> A/ℓ(Q) for primes Q ⊆ P, sending [x] to [x]."""
    _require_prime(A, P)
    _require_prime(A, Q)
    if not issubset(Q, P):
        raise ComparabilityError(f"{format_filter(Q)} is not contained in {format_filter(P)}")
    if not issubset(ell(A, P, window), ell(A, Q, window)):
        raise InvariantError("ℓ is not order-reversing here")
    LP, LQ = localize(A, P, window), localize(A, Q, window)
    f = Morphism(LP.algebra, LQ.algebra, lambda y: LQ.project(LP.lift(y)),
                 lambda Y: LQ.v_project(LP.v_lift(Y)), "connecting")
    E = A.window(_bound(A, window))
    if not np.array_equal(f.vfn(LP.v_project(E)), LQ.v_project(E)):
        raise InvariantError("connecting map is not well defined")
    hit = homomorphism_counterexample(f, window)
    if hit is not None:
        raise InvariantError(f"connecting map is not a homomorphism: {hit}")
    return f


def shell(f: Morphism, window: int = DEFAULT_WINDOW) -> Filter:
    """{x : f(x) = 1}, identified among the source's filters."""
    A = f.source
    E = A.window(_bound(A, window))
    target = f.target.v_is_one(f.vfn(E))
    hits = [F for F in all_filters(A) if np.array_equal(F.v_contains(E), target)]
    if len(hits) != 1:
        raise InvariantError(f"shell matches {len(hits)} filters")
    sh = hits[0]
    if f.by is not None and sh != f.by:
        raise InvariantError(f"shell {format_filter(sh)} differs from {format_filter(f.by)}")
    if not is_implication_filter(A, sh, window):
        raise InvariantError("shell is not an implication filter")
    return sh


@dataclass(frozen=True)
class UniversalReport:
    shell_inside: bool          # sh(f) ⊆ P
    conrad_covered: bool        # N(target) ⊆ f[P]↑
    ell_inside_shell: bool      # ℓ(P) ⊆ sh(f)

    @property
    def violation(self) -> bool:
        return self.shell_inside and self.conrad_covered and not self.ell_inside_shell

    def __str__(self):
        def mark(b):
            return "yes" if b else "no"
        return (f"H1 {mark(self.shell_inside)} H2 {mark(self.conrad_covered)} "
                f"C {mark(self.ell_inside_shell)}" + (" VIOLATION" if self.violation else ""))


def check_universal(f: Morphism, P: Filter, window: int = DEFAULT_WINDOW) -> UniversalReport:
    """Report both hypotheses and the conclusion ℓ(P) ⊆ sh(f) of the
    factorisation property; only H1 ∧ H2 ∧ ¬C is a violation."""
    A, T = f.source, f.target
    if P.owner != A or not is_implication_filter(A, P, window):
        raise ValueError("P must be a filter of the morphism's source")
    _require_prime(A, P)
    sh = shell(f, window)
    h1 = issubset(sh, P)
    N = conrad_filter(T)
    Wt = T.window(_bound(T, window))
    Ny = Wt[N.v_contains(Wt)]
    E = A.window(_bound(A, window))
    imgs = np.unique(f.vfn(E[P.v_contains(E)]), axis=0)
    Ii, Yy = pairs(imgs, Ny)
    above = T.v_leq(Ii, Yy).reshape(len(imgs), len(Ny))
    h2 = bool(above.any(axis=0).all())
    c = issubset(ell(A, P, window), sh)
    return UniversalReport(h1, h2, c)


def comparability_via_ell(A: MVAlgebra, P: Filter, F: Filter,
                          window: int = DEFAULT_WINDOW) -> tuple[bool, bool]:
    """(ℓ(P) ⊆ F, F comparable to P); the two always agree for primes."""
    _require_prime(A, P)
    _require_prime(A, F)
    lhs = issubset(ell(A, P, window), F)
    rhs = issubset(F, P) or issubset(P, F)
    if lhs != rhs:
        raise InvariantError(f"ℓ({format_filter(P)}) ⊆ {format_filter(F)} is {lhs} "
                             f"but comparability is {rhs}")
    return lhs, rhs


def minimal_prime_avoiding(A: MVAlgebra, P: Filter, p, window: int = DEFAULT_WINDOW) -> Filter:
    """A minimal prime below P missing p, for p in P outside ℓ(P)."""
    if not P.contains(p) or ell(A, P, window).contains(p):
        raise ValueError(f"{format_element(p)} must lie in P but not in ℓ(P)")
    for m in minimal_primes_below(A, P):
        if not m.contains(p):
            return m
    raise InvariantError(f"every minimal prime below {format_filter(P)} contains {format_element(p)}")


def incomparable_arrow(A: MVAlgebra, P: Filter, Q: Filter, window: int = DEFAULT_WINDOW):
    """For incomparable primes: q in Q\\P, p in P\\Q with q → p in ℓ(P) but not in Q."""
    E = A.window(_bound(A, window))
    elems = A.elements(_bound(A, window))
    inP, inQ = P.v_contains(E), Q.v_contains(E)
    iq, ip = first_true(inQ & ~inP), first_true(inP & ~inQ)
    if iq is None or ip is None:
        raise ComparabilityError(f"{format_filter(P)} and {format_filter(Q)} are comparable in scope")
    q, p = elems[iq], elems[ip]
    r = A.imp(q, p)
    if not ell(A, P, window).contains(r) or Q.contains(r):
        raise InvariantError(f"{format_element(r)} is not in ℓ({format_filter(P)}) minus {format_filter(Q)}")
    return q, p, r


@dataclass(frozen=True)
class IsoReport:
    prime: str
    quotient: str
    source: SpectrumPoset
    target: SpectrumPoset
    mapping: dict

    def lines(self) -> list[str]:
        out = [f"localization at {self.prime}: {self.quotient}"]
        out += [f"  {a} -> {b}" for a, b in self.mapping.items()]
        return out


def spectrum_iso_check(A: MVAlgebra, P: Filter, window: int = DEFAULT_WINDOW) -> IsoReport:
    """Show F ↦ F/ℓ(P) is an order isomorphism PSpec(P) -> PSpec(A/ℓ(P))."""
    _require_prime(A, P)
    L = localize(A, P, window)
    src = spectrum(A, "prime", at=P)
    tgt = spectrum(L.algebra, "prime")
    images = [image_filter(L, F, window) for F in src.filters]
    index = {G: j for j, G in enumerate(tgt.filters)}
    if sorted(index.get(G, -1) for G in images) != list(range(len(tgt))):
        raise InvariantError("F ↦ F/ℓ(P) is not a bijection onto the quotient spectrum")
    perm = [index[G] for G in images]
    n = len(src)
    for i in range(n):
        for j in range(n):
            if src.leq[i][j] != tgt.leq[perm[i]][perm[j]]:
                raise InvariantError("F ↦ F/ℓ(P) does not preserve and reflect the order")
    if order_iso(src, tgt) is None:
        raise InvariantError("no order isomorphism found by search")
    mapping = {src.names[i]: tgt.names[perm[i]] for i in range(n)}
    return IsoReport(format_filter(P), str(L), src, tgt, mapping)


def is_minimal(A: MVAlgebra, P: Filter) -> bool:
    return is_minimal_prime(A, P)
