import itertools

import pytest

from mvspectra.algebras import ChainAlgebra, LexAlgebra, LexElem
from mvspectra.conrad import ComparabilityError
from mvspectra.core import UnsupportedError, check_mv_axioms
from mvspectra.filters import (explicit, format_filter, one, primes, pullback, rad,
                               whole, zero_set)
from mvspectra.localize import (check_universal, comparability_via_ell, compose,
                                connecting_map, ell, ell_via_minimal, from_table,
                                Morphism, homomorphism_counterexample, identity,
                                image_filter, incomparable_arrow, localize,
                                minimal_prime_avoiding, preimage_filter, quotient,
                                quotient_closed_form, shell, spectrum_iso_check)
from mvspectra.verify import CATALOG


def pull(A, i, F=None):
    return pullback(A, i, F if F is not None else one(A.children[i - 1]))


def test_ell_examples(alg):
    L = alg("lex:2")
    assert ell(L, rad(L)) == one(L)
    assert ell(L, zero_set(L, {1})) == zero_set(L, {1})
    P = alg("product[chain:2,chain:3]")
    assert ell(P, pull(P, 1)) == pull(P, 1)
    with pytest.raises(ValueError):
        ell(L, whole(L))
    L3 = alg("lex:3")
    with pytest.raises(ValueError):
        ell(L3, zero_set(L3, {1, 2}))


def test_ell_via_minimal_examples(alg):
    L = alg("lex:2")
    assert ell_via_minimal(L, rad(L)) == one(L)
    C = alg("chang")
    assert ell_via_minimal(C, rad(C)) == one(C)
    for m in (zero_set(L, {1}), zero_set(L, {2})):
        assert ell_via_minimal(L, m) == m


def test_lex3_rad_localizes_to_itself(alg):
    L = alg("lex:3")
    assert ell(L, rad(L)) == one(L)


def test_quotient_examples(alg):
    L = alg("lex:2")
    Q = quotient(L, zero_set(L, {1}))
    assert Q.algebra == LexAlgebra(1) and Q.signature == "chang"
    assert Q.project(LexElem(1, (3, 7))) == LexElem(1, (3,))
    P = alg("product[chain:2,chain:3]")
    Q2 = quotient(P, pull(P, 1))
    assert Q2.algebra == ChainAlgebra(2) and Q2.route == "exhaustive"
    for text in ["chain:3", "lex:2", "product[chain:1,chain:1]"]:
        A = alg(text)
        assert quotient(A, one(A)).algebra == A


def test_quotient_rad_is_boolean(alg):
    L = alg("lex:3")
    Q = quotient(L, rad(L))
    assert Q.algebra == ChainAlgebra(1)
    assert Q.project(LexElem(1, (4, 0, 2))) == 1
    assert Q.project(LexElem(0, (4, 0, 2))) == 0


def test_quotient_representatives_are_least(alg):
    P = alg("product[chain:2,chain:3]")
    Q = quotient(P, pull(P, 2))
    assert Q.algebra == ChainAlgebra(3)
    assert [Q.lift(y) for y in range(4)] == [(0, 0), (0, 1), (0, 2), (0, 3)]


def test_finite_routes_agree(alg):
    P = alg("product[chain:2,chain:3]")
    for F in [pull(P, 1), pull(P, 2), one(P)]:
        closed = quotient_closed_form(P, F)
        ex = quotient(P, F)
        for x, y in itertools.product(P.elements(), repeat=2):
            assert (closed.project(x) == closed.project(y)) == (ex.project(x) == ex.project(y))


def test_quotient_rejects_bad_inputs(alg):
    C2 = alg("chain:2")
    with pytest.raises(ValueError):
        quotient(C2, explicit(C2, {1, 2}))
    with pytest.raises(UnsupportedError):
        quotient(C2, whole(C2))


def test_localize_examples(alg):
    L = alg("lex:2")
    assert localize(L, rad(L)).algebra == LexAlgebra(2)
    assert localize(L, zero_set(L, {1})).algebra == LexAlgebra(1)
    B = alg("product[chain:1,chain:1]")
    assert localize(B, pull(B, 1)).algebra == ChainAlgebra(1)


def test_quotients_pass_axioms(alg):
    for text in CATALOG:
        A = alg(text)
        for P in primes(A):
            assert check_mv_axioms(localize(A, P).algebra, 5).ok


def test_connecting_map_examples(alg):
    L = alg("lex:2")
    m1 = zero_set(L, {1})
    f = connecting_map(L, rad(L), m1)
    assert f.source == LexAlgebra(2) and f.target == LexAlgebra(1)
    assert f(LexElem(1, (2, 5))) == LexElem(1, (2,))
    g = connecting_map(L, m1, m1)
    assert all(g(x) == x for x in LexAlgebra(1).elements(3))
    C = alg("chang")
    h = connecting_map(C, rad(C), one(C))
    assert h.source == h.target == C
    assert all(h(x) == x for x in C.elements(3))
    with pytest.raises(ComparabilityError):
        connecting_map(L, m1, zero_set(L, {2}))


def test_shell_examples(alg):
    L = alg("lex:2")
    assert shell(quotient(L, zero_set(L, {1})).projection) == zero_set(L, {1})
    assert shell(identity(L)) == one(L)
    assert shell(quotient(L, rad(L)).projection) == rad(L)


def test_universal_property_scenarios(alg):
    L = alg("lex:2")
    m1 = zero_set(L, {1})
    r = check_universal(quotient(L, m1).projection, m1)
    assert (r.shell_inside, r.conrad_covered, r.ell_inside_shell) == (True, True, True)
    r = check_universal(quotient(L, rad(L)).projection, rad(L))
    assert (r.shell_inside, r.conrad_covered, r.ell_inside_shell) == (True, True, True)
    B = alg("product[chain:1,chain:1]")
    r = check_universal(quotient(B, pull(B, 2)).projection, pull(B, 1))
    assert (r.shell_inside, r.conrad_covered, r.ell_inside_shell) == (False, True, False)
    assert not r.violation


def test_universal_requires_prime(alg):
    L = alg("lex:3")
    with pytest.raises(ValueError):
        check_universal(identity(L), zero_set(L, {1, 2}))


def test_comparability_examples(alg):
    L = alg("lex:2")
    m1, m2 = zero_set(L, {1}), zero_set(L, {2})
    assert comparability_via_ell(L, rad(L), m1) == (True, True)
    assert comparability_via_ell(L, m1, m2) == (False, False)
    for text in CATALOG:
        A = alg(text)
        for P in primes(A):
            assert comparability_via_ell(A, P, P) == (True, True)


def test_spectrum_iso_examples(alg):
    L = alg("lex:2")
    rep = spectrum_iso_check(L, zero_set(L, {1}))
    assert rep.mapping == {"m{1}": "one", "rad": "rad"}
    rep = spectrum_iso_check(L, rad(L))
    assert rep.mapping == {"m{1}": "m{1}", "m{2}": "m{2}", "rad": "rad"}
    P = alg("product[chain:2,chain:3]")
    rep = spectrum_iso_check(P, pull(P, 1))
    assert len(rep.mapping) == 1 and rep.target.names == ("one",)


def test_incomparable_arrow_caveat(alg):
    L = alg("lex:2")
    q, p, r = incomparable_arrow(L, zero_set(L, {1}), zero_set(L, {2}))
    assert ell(L, zero_set(L, {1})).contains(r) and not zero_set(L, {2}).contains(r)
    B = alg("product[chain:1,chain:1]")
    q, p, r = incomparable_arrow(B, pull(B, 1), pull(B, 2))
    assert r == B.imp(q, p) == (1, 0)


def test_minimal_prime_avoiding(alg):
    L = alg("lex:2")
    p = LexElem(1, (3, 0))
    assert minimal_prime_avoiding(L, rad(L), p) == zero_set(L, {1})
    with pytest.raises(ValueError):
        minimal_prime_avoiding(L, zero_set(L, {1}), LexElem(1, (0, 2)))


def test_image_and_preimage(alg):
    L = alg("lex:2")
    Q = quotient(L, zero_set(L, {1}))
    assert format_filter(image_filter(Q, rad(L))) == "rad"
    assert preimage_filter(Q, one(Q.algebra)) == zero_set(L, {1})
    with pytest.raises(ValueError):
        image_filter(Q, zero_set(L, {2}))


def test_table_morphisms(alg):
    C2, C1 = alg("chain:2"), alg("chain:1")
    bad = from_table(C2, C1, {0: 0, 1: 1, 2: 1})
    assert homomorphism_counterexample(bad) is not None
    B = alg("product[chain:1,chain:1]")
    proj = from_table(B, C1, {x: x[0] for x in B.elements()})
    assert homomorphism_counterexample(proj) is None
    assert shell(proj) == pull(B, 1)
    assert homomorphism_counterexample(compose(identity(C1), proj)) is None


def _squaring(X):
    out = X.copy()
    out[:, 1:] = X[:, 1:] ** 2
    return out


@pytest.mark.parametrize("window", [2, 5])
def test_symbolic_oplus_failure_is_caught(window):
    # squaring the infinitesimal part respects 0 and ¬ but not ⊕
    L = LexAlgebra(1)
    f = Morphism(L, L, lambda x: LexElem(x.top, (x.vec[0] ** 2,)), _squaring)
    hit = homomorphism_counterexample(f, window)
    assert hit is not None and hit[0] == "oplus"
