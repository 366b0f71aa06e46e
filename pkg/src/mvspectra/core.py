"""MV-algebra operation interface, derived operations and the axiom checker.

Every concrete algebra supplies only ``oplus`` and ``neg`` (scalar) plus
``v_oplus`` and ``v_neg`` (row-wise on integer arrays).  Everything else is
derived here, so the order can never drift from the operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

Element = Any

DEFAULT_WINDOW = 5


class ShapeError(ValueError):
    """An element does not belong to the algebra it was used with."""


class InvariantError(RuntimeError):
    """An internal consistency assertion failed (a counterexample was found)."""


class UnsupportedError(ValueError):
    """The requested construction is outside the supported catalog."""


class MVAlgebra:
    """Base class.  Subclasses are frozen dataclasses and hence hashable."""

    finite: bool = True
    width: int = 1

    # -- primitives ---------------------------------------------------------
    def oplus(self, x, y):
        raise NotImplementedError

    def neg(self, x):
        raise NotImplementedError

    def v_oplus(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def v_neg(self, X: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def validate(self, x) -> None:
        raise NotImplementedError

    def elements(self, bound: int = DEFAULT_WINDOW) -> tuple:
        raise NotImplementedError

    def encode(self, xs: Sequence) -> np.ndarray:
        raise NotImplementedError

    def decode(self, row) -> Element:
        raise NotImplementedError

    def code(self, X: np.ndarray, bound: int) -> np.ndarray:
        """Rank of each row within ``elements(bound)`` (rows must lie in it)."""
        raise NotImplementedError

    def code_space(self, bound: int) -> int:
        raise NotImplementedError

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def size(self) -> int | None:
        return len(self.elements()) if self.finite else None

    # -- derived scalar operations -------------------------------------------
    @property
    def one(self):
        return self.neg(self.zero)

    def otimes(self, x, y):
        return self.neg(self.oplus(self.neg(x), self.neg(y)))

    def imp(self, x, y):
        return self.oplus(self.neg(x), y)

    def meet(self, x, y):
        return self.otimes(x, self.imp(x, y))

    def join(self, x, y):
        return self.imp(self.imp(x, y), y)

    def leq(self, x, y) -> bool:
        return self.imp(x, y) == self.one

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def power(self, x, n: int):
        r = self.one
        for _ in range(n):
            r = self.otimes(r, x)
        return r

    # -- derived vector operations -------------------------------------------
    def v_otimes(self, X, Y):
        return self.v_neg(self.v_oplus(self.v_neg(X), self.v_neg(Y)))

    def v_imp(self, X, Y):
        return self.v_oplus(self.v_neg(X), Y)

    def v_meet(self, X, Y):
        return self.v_otimes(X, self.v_imp(X, Y))

    def v_join(self, X, Y):
        return self.v_imp(self.v_imp(X, Y), Y)

    def v_is_one(self, X) -> np.ndarray:
        return np.all(X == _one_row(self), axis=1)

    def v_leq(self, X, Y) -> np.ndarray:
        return self.v_is_one(self.v_imp(X, Y))

    # -- misc ----------------------------------------------------------------
    def window(self, bound: int = DEFAULT_WINDOW) -> np.ndarray:
        return _window_array(self, bound)

    def index(self, x) -> int:
        if not self.finite:
            raise UnsupportedError("index() is defined for finite algebras only")
        return int(self.code(self.encode([x]), 0)[0])


@lru_cache(maxsize=None)
def _one_row(A: MVAlgebra) -> np.ndarray:
    return A.encode([A.one])[0]


@lru_cache(maxsize=None)
def _window_array(A: MVAlgebra, bound: int) -> np.ndarray:
    arr = A.encode(A.elements(bound))
    arr.setflags(write=False)
    return arr


def pairs(X: np.ndarray, Y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """All (x, y) row pairs, x-major, so flat index i*len(Y)+j is (X[i], Y[j])."""
    return np.repeat(X, len(Y), axis=0), np.tile(Y, (len(X), 1))


def first_true(mask: np.ndarray) -> int | None:
    idx = np.flatnonzero(mask)
    return int(idx[0]) if idx.size else None


# --------------------------------------------------------------------------
# Operation dispatch

_OPS = {
    "⊕": "oplus", "oplus": "oplus", "+": "oplus",
    "¬": "neg", "neg": "neg", "~": "neg",
    "⊗": "otimes", "otimes": "otimes", "*": "otimes",
    "→": "imp", "imp": "imp", "->": "imp",
    "∧": "meet", "meet": "meet", "&": "meet",
    "∨": "join", "join": "join", "|": "join",
    "≤": "leq", "leq": "leq", "<=": "leq",
}


def eval_op(A: MVAlgebra, op: str, *args):
    """Evaluate ``op`` on ``args`` in ``A``; ``≤`` returns a bool."""
    try:
        name = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    arity = 1 if name == "neg" else 2
    if len(args) != arity:
        raise ValueError(f"{op} takes {arity} argument(s), got {len(args)}")
    for a in args:
        A.validate(a)
    return getattr(A, name)(*args)


# --------------------------------------------------------------------------
# Axiom checker

@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    law: str | None = None
    counterexample: tuple = ()

    def __str__(self) -> str:
        if self.ok:
            return "PASS"
        from .algebras import format_element
        xs = ", ".join(format_element(x) for x in self.counterexample)
        return f"FAIL {self.law} at ({xs})"


def _unary_laws(A, X):
    z = np.broadcast_to(A.encode([A.zero])[0], X.shape)
    top = A.v_neg(z)
    yield "neg_involution", np.all(A.v_neg(A.v_neg(X)) == X, axis=1)
    yield "oplus_unit", np.all(A.v_oplus(X, z) == X, axis=1)
    yield "oplus_absorbs_top", np.all(A.v_oplus(X, top) == top, axis=1)


def _binary_laws(A, X, Y, n):
    """X, Y is the x-major grid of n elements, so swapping x and y is a transpose."""
    w = X.shape[1]

    def swap(R):
        return R.reshape(n, n, w).transpose(1, 0, 2).reshape(n * n, w)

    S = A.v_oplus(X, Y)
    yield "oplus_commutative", np.all(S == swap(S), axis=1)
    imp = A.v_oplus(A.v_neg(X), Y)
    luk = A.v_oplus(A.v_neg(imp), Y)            # ¬(¬x⊕y)⊕y
    yield "lukasiewicz", np.all(luk == swap(luk), axis=1)
    back = swap(imp)                            # y → x
    yield "prelinearity", A.v_is_one(A.v_imp(A.v_imp(imp, back), back))


def _assoc_counterexample(A, bound, E):
    """First (i, j, k) with (x⊕y)⊕z != x⊕(y⊕z), via code tables."""
    n = len(E)
    if A.finite:
        b2 = b3 = bound
        W2 = E
    else:
        b2, b3 = 2 * bound, 3 * bound
        W2 = A.window(b2)
    X, Y = pairs(E, E)
    t1 = A.code(A.v_oplus(X, Y), b2).astype(np.int32).reshape(n, n)
    P, Q = pairs(W2, E)
    t2 = A.code(A.v_oplus(P, Q), b3).astype(np.int32).reshape(len(W2), n)      # a ⊕ z
    Q2, P2 = pairs(E, W2)
    t2r = A.code(A.v_oplus(Q2, P2), b3).astype(np.int32).reshape(n, len(W2))   # x ⊕ a
    step = max(1, 2_000_000 // (n * n))
    for i0 in range(0, n, step):
        rows = np.arange(i0, min(n, i0 + step))
        left = t2[t1[rows]]                       # (x_i ⊕ y_j) ⊕ z_k
        right = t2r[rows[:, None, None], t1]      # x_i ⊕ (y_j ⊕ z_k)
        bad = first_true((left != right).ravel())
        if bad is not None:
            return i0 + bad // (n * n), bad // n % n, bad % n
    return None


@lru_cache(maxsize=None)
def check_mv_axioms(A: MVAlgebra, window: int = DEFAULT_WINDOW) -> AxiomReport:
    """Exhaustive (finite) or window-bounded (symbolic) check of the MV axioms.

    Laws are tried in a fixed order and each law's instances in canonical
    enumeration order, so the reported counterexample is deterministic.
    Associativity on a symbolic product is checked factor by factor; the
    remaining laws always run on the product window itself.
    """
    if window < 1:
        raise ValueError("window must be >= 1")
    bound = 0 if A.finite else window
    E = A.window(bound)
    elems = A.elements(bound)
    for law, ok in _unary_laws(A, E):
        bad = first_true(~ok)
        if bad is not None:
            return AxiomReport(False, law, (elems[bad],))
    X, Y = pairs(E, E)
    n = len(E)
    for law, ok in _binary_laws(A, X, Y, n):
        bad = first_true(~ok)
        if bad is not None:
            return AxiomReport(False, law, (elems[bad // n], elems[bad % n]))
    from .algebras import ProductAlgebra
    if isinstance(A, ProductAlgebra) and not A.finite:
        for child in A.children:
            rep = check_mv_axioms(child, window)
            if not rep.ok:
                return AxiomReport(False, f"{rep.law} (factor)", rep.counterexample)
        return AxiomReport(True)
    hit = _assoc_counterexample(A, bound, E)
    if hit is not None:
        return AxiomReport(False, "oplus_associative", tuple(elems[i] for i in hit))
    return AxiomReport(True)


# --------------------------------------------------------------------------
# Operation tables on window codes

_TABLE_OPS = ("oplus", "imp", "otimes", "meet", "join", "biimp")


def table_bound(A: MVAlgebra, bound: int) -> int:
    """Window holding every binary result of two elements of window(bound)."""
    return 0 if A.finite else 2 * bound


def codes_in(A: MVAlgebra, X: np.ndarray, bound: int) -> np.ndarray | None:
    """Codes of the rows of X in window(bound), or None if some row lies outside."""
    c = A.code(X, bound)
    if c.size and (c.min() < 0 or c.max() >= A.code_space(bound)):
        return None
    if not np.array_equal(A.window(bound)[c], X):
        return None
    return c


@lru_cache(maxsize=None)
def op_table(A: MVAlgebra, op: str, bound: int) -> np.ndarray:
    """T[i, j] = code of (x_i op x_j) in window(table_bound), x from window(bound).

    ``biimp`` is (x → y) ∧ (y → x).
    """
    if op not in _TABLE_OPS:
        raise ValueError(f"no table for {op!r}")
    b = 0 if A.finite else bound
    E = A.window(b)
    if getattr(A, "children", None):
        out = _product_table(A, op, b)
        out.setflags(write=False)
        return out
    X, Y = pairs(E, E)
    if op == "biimp":
        R = A.v_meet(A.v_imp(X, Y), A.v_imp(Y, X))
    else:
        R = getattr(A, "v_" + op)(X, Y)
    c = codes_in(A, R, table_bound(A, b))
    if c is None:
        raise InvariantError(f"{op} leaves the doubled window")
    out = c.reshape(len(E), len(E))
    out.setflags(write=False)
    return out


def _product_table(A, op: str, b: int) -> np.ndarray:
    # operations act factorwise, so the table is a mixed-radix blend of factor tables
    E, tb = A.window(b), table_bound(A, b)
    out = np.zeros((len(E), len(E)), dtype=np.int64)
    for i, c in enumerate(A.children):
        idx = c.code(A.component(E, i), b)
        out *= c.code_space(tb)
        out += op_table(c, op, b)[np.ix_(idx, idx)]
    return out


def one_code(A: MVAlgebra, bound: int) -> int:
    return int(A.code(A.encode([A.one]), bound)[0])
