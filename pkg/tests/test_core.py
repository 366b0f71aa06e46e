import itertools
from dataclasses import dataclass

import numpy as np
import pytest

from mvspectra.algebras import ChainAlgebra, LexElem
from mvspectra.core import (ShapeError, check_mv_axioms, eval_op, first_true, op_table, pairs,
                            table_bound)
from mvspectra.dsl import parse_algebra
from mvspectra.verify import CATALOG


def test_chain_truncated_sum(alg):
    assert eval_op(alg("chain:4"), "⊕", 3, 2) == 4


def test_chain_negation(alg):
    assert eval_op(alg("chain:4"), "¬", 1) == 3


def test_chain_implication(alg):
    assert eval_op(alg("chain:2"), "→", 2, 1) == 1


def test_lex_sum_mixed_tops(alg):
    L = alg("lex:2")
    assert eval_op(L, "⊕", LexElem(0, (1, 2)), LexElem(1, (2, 1))) == LexElem(1, (1, 0))


def test_order_returns_bool(alg):
    assert eval_op(alg("chain:3"), "<=", 1, 2) is True
    assert eval_op(alg("chain:3"), "≤", 2, 1) is False


def test_op_aliases_agree(alg):
    A = alg("chain:5")
    for a, b in [("⊗", "otimes"), ("→", "->"), ("∧", "meet"), ("∨", "join")]:
        assert eval_op(A, a, 4, 3) == eval_op(A, b, 4, 3)


def test_shape_errors(alg):
    with pytest.raises(ShapeError):
        eval_op(alg("chain:2"), "⊕", 3, 0)
    with pytest.raises(ShapeError):
        eval_op(alg("lex:2"), "¬", LexElem(0, (1,)))
    with pytest.raises(ShapeError):
        eval_op(alg("product[chain:1,chain:1]"), "¬", (1,))


def test_arity_and_unknown_op(alg):
    with pytest.raises(ValueError):
        eval_op(alg("chain:2"), "¬", 1, 1)
    with pytest.raises(ValueError):
        eval_op(alg("chain:2"), "%", 1, 1)


@pytest.mark.parametrize("text", CATALOG)
def test_axioms_on_catalog(alg, text):
    assert check_mv_axioms(alg(text), 5).ok


def test_axioms_lex2_window4(alg):
    assert check_mv_axioms(alg("lex:2"), 4).ok


def test_axioms_reject_bad_window(alg):
    with pytest.raises(ValueError):
        check_mv_axioms(alg("chain:2"), 0)


@dataclass(frozen=True)
class _BrokenNeg(ChainAlgebra):
    def neg(self, x):
        return x

    def v_neg(self, X):
        return X.copy()


def test_corrupted_negation_is_caught():
    rep = check_mv_axioms(_BrokenNeg(3), 5)
    assert not rep.ok
    # with ¬ = id the top becomes 0, so x ⊕ ¬0 = ¬0 fails first at x = 1
    assert rep.law == "oplus_absorbs_top"
    assert rep.counterexample == (1,)
    assert str(rep).startswith("FAIL oplus_absorbs_top")


@dataclass(frozen=True)
class _BrokenSum(ChainAlgebra):
    def v_oplus(self, X, Y):
        out = np.minimum(self.n, X + Y)
        return np.where((X == 1) & (Y == 2), self.n, out)


def test_broken_commutativity_is_caught():
    rep = check_mv_axioms(_BrokenSum(4), 5)
    assert rep.law == "oplus_commutative"
    assert rep.counterexample == (1, 2)


@pytest.mark.parametrize("text", ["chain:3", "product[chain:1,chain:2]"])
def test_derived_ops_are_lattice_ops(alg, text):
    A = alg(text)
    E = A.elements()
    for x, y in itertools.product(E, repeat=2):
        lower = [z for z in E if A.leq(z, x) and A.leq(z, y)]
        upper = [z for z in E if A.leq(x, z) and A.leq(y, z)]
        m, j = A.meet(x, y), A.join(x, y)
        assert m in lower and all(A.leq(z, m) for z in lower)
        assert j in upper and all(A.leq(j, z) for z in upper)
        assert A.leq(x, y) == (A.imp(x, y) == A.one)


def test_pairs_order_is_x_major():
    X = np.array([[0], [1]])
    Y = np.array([[5], [6], [7]])
    P, Q = pairs(X, Y)
    assert P[:, 0].tolist() == [0, 0, 0, 1, 1, 1]
    assert Q[:, 0].tolist() == [5, 6, 7, 5, 6, 7]
    assert first_true(np.array([False, True, True])) == 1
    assert first_true(np.array([False])) is None


def test_window_is_read_only(alg):
    W = alg("lex:2").window(2)
    assert W.shape == (18, 3)
    with pytest.raises(ValueError):
        W[0, 0] = 1


@pytest.mark.parametrize("text", ["product[chain:2,chain:3]", "product[chang,lex:2]",
                                  "product[chain:1,chang]"])
@pytest.mark.parametrize("op", ["oplus", "imp", "otimes", "meet", "join", "biimp"])
def test_product_table_matches_direct(text, op):
    A = parse_algebra(text)
    b = 0 if A.finite else 2
    E = A.window(b)
    X, Y = pairs(E, E)
    R = A.v_meet(A.v_imp(X, Y), A.v_imp(Y, X)) if op == "biimp" else getattr(A, "v_" + op)(X, Y)
    W = A.window(table_bound(A, b))
    assert np.array_equal(W[op_table(A, op, b)].reshape(-1, A.width), R)
