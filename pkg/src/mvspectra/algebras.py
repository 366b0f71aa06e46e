"""Catalog of concrete MV-algebras with exact closed-form arithmetic.

* ``Chain(n)``: the Łukasiewicz chain {0, ..., n}.
* ``Lex(k)``: the Γ-interval of Z ×lex Z^k at the strong unit (1, 0); ``Chang``
  is ``Lex(1)``.  An element is ``LexElem(0, v)`` (the infinitesimal (0, v)) or
  ``LexElem(1, v)`` (the co-infinitesimal u - (0, v)), with v in N^k.
* ``Product([...])``: direct products, computed componentwise.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
import numpy as np

from .core import MVAlgebra, ShapeError, DEFAULT_WINDOW


# --------------------------------------------------------------------------
# Expressions

@dataclass(frozen=True)
class Chain:
    n: int


@dataclass(frozen=True)
class Chang:
    pass


@dataclass(frozen=True)
class Lex:
    k: int


@dataclass(frozen=True)
class Product:
    children: tuple

    def __init__(self, children):
        object.__setattr__(self, "children", tuple(children))


AlgebraExpr = Chain | Chang | Lex | Product


def format_expr(expr: AlgebraExpr) -> str:
    if isinstance(expr, Chain):
        return f"chain:{expr.n}"
    if isinstance(expr, Chang):
        return "chang"
    if isinstance(expr, Lex):
        return f"lex:{expr.k}"
    return "product[" + ",".join(format_expr(c) for c in expr.children) + "]"


# --------------------------------------------------------------------------
# Elements

@dataclass(frozen=True, order=True)
class LexElem:
    top: int
    vec: tuple

    def __init__(self, top, vec):
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "vec", tuple(vec))

    def __repr__(self):
        return format_element(self)


def format_element(x) -> str:
    if isinstance(x, LexElem):
        tag = "coinf" if x.top else "inf"
        return f"{tag}[{','.join(map(str, x.vec))}]"
    if isinstance(x, tuple):
        return "(" + ",".join(format_element(c) for c in x) + ")"
    return str(x)


# --------------------------------------------------------------------------
# Algebras

@dataclass(frozen=True)
class ChainAlgebra(MVAlgebra):
    n: int
    finite = True
    width = 1

    @property
    def expr(self):
        return Chain(self.n)

    @property
    def zero(self):
        return 0

    def oplus(self, x, y):
        return min(self.n, x + y)

    def neg(self, x):
        return self.n - x

    def v_oplus(self, X, Y):
        return np.minimum(self.n, X + Y)

    def v_neg(self, X):
        return self.n - X

    def validate(self, x):
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)) or not 0 <= x <= self.n:
            raise ShapeError(f"{x!r} is not an element of chain:{self.n}")

    def elements(self, bound=DEFAULT_WINDOW):
        return tuple(range(self.n + 1))

    def encode(self, xs):
        return np.asarray(list(xs), dtype=np.int64).reshape(-1, 1)

    def decode(self, row):
        return int(row[0])

    def code(self, X, bound):
        return X[:, 0].astype(np.int64)

    def code_space(self, bound):
        return self.n + 1


@dataclass(frozen=True)
class LexAlgebra(MVAlgebra):
    k: int
    finite = False

    @property
    def width(self):
        return 1 + self.k

    @property
    def expr(self):
        return Chang() if self.k == 1 else Lex(self.k)

    @property
    def zero(self):
        return LexElem(0, (0,) * self.k)

    def oplus(self, x, y):
        if x.top and y.top:
            return LexElem(1, (0,) * self.k)
        if not x.top and not y.top:
            return LexElem(0, tuple(a + b for a, b in zip(x.vec, y.vec)))
        inf, co = (x, y) if y.top else (y, x)
        return LexElem(1, tuple(max(w - v, 0) for v, w in zip(inf.vec, co.vec)))

    def neg(self, x):
        return LexElem(1 - x.top, x.vec)

    def v_oplus(self, X, Y):
        tx, ty = X[:, 0], Y[:, 0]
        vx, vy = X[:, 1:], Y[:, 1:]
        out = np.empty(np.broadcast_shapes(X.shape, Y.shape), dtype=np.int64)
        np.bitwise_or(tx, ty, out=out[:, 0])
        vec = out[:, 1:]
        # mixed tops: the co-infinitesimal's co-vector minus the other, floored
        # at 0; two co-infinitesimals give sign 0 and hence the unit
        np.subtract(vy, vx, out=vec)
        vec *= (ty - tx)[:, None]
        np.maximum(vec, 0, out=vec)
        low = out[:, 0] == 0
        if low.any():
            vec[low] = vx[low] + vy[low]
        return out

    def v_neg(self, X):
        out = X.copy()
        out[:, 0] = 1 - X[:, 0]
        return out

    def validate(self, x):
        if not isinstance(x, LexElem) or x.top not in (0, 1) or len(x.vec) != self.k \
                or any(isinstance(c, bool) or not isinstance(c, int) or c < 0 for c in x.vec):
            raise ShapeError(f"{x!r} is not an element of lex:{self.k}")

    def elements(self, bound=DEFAULT_WINDOW):
        return tuple(LexElem(t, v) for t in (0, 1)
                     for v in itertools.product(range(bound + 1), repeat=self.k))

    def encode(self, xs):
        rows = [(x.top, *x.vec) for x in xs]
        return np.asarray(rows, dtype=np.int64).reshape(-1, self.width)

    def decode(self, row):
        return LexElem(int(row[0]), tuple(int(c) for c in row[1:]))

    def code(self, X, bound):
        r = bound + 1
        c = X[:, 0].astype(np.int64)
        for i in range(1, self.width):
            c = c * r + X[:, i]
        return c

    def code_space(self, bound):
        return 2 * (bound + 1) ** self.k


@dataclass(frozen=True)
class ProductAlgebra(MVAlgebra):
    children: tuple
    _slices: tuple = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        out, start = [], 0
        for c in self.children:
            out.append(slice(start, start + c.width))
            start += c.width
        object.__setattr__(self, "_slices", tuple(out))

    @property
    def finite(self):
        return all(c.finite for c in self.children)

    @property
    def width(self):
        return sum(c.width for c in self.children)

    @property
    def expr(self):
        return Product([c.expr for c in self.children])

    @property
    def zero(self):
        return tuple(c.zero for c in self.children)

    def oplus(self, x, y):
        return tuple(c.oplus(a, b) for c, a, b in zip(self.children, x, y))

    def neg(self, x):
        return tuple(c.neg(a) for c, a in zip(self.children, x))

    def v_oplus(self, X, Y):
        out = np.empty(np.broadcast_shapes(X.shape, Y.shape), dtype=np.int64)
        for c, s in zip(self.children, self._slices):
            out[:, s] = c.v_oplus(X[:, s], Y[:, s])
        return out

    def v_neg(self, X):
        out = np.empty(X.shape, dtype=np.int64)
        for c, s in zip(self.children, self._slices):
            out[:, s] = c.v_neg(X[:, s])
        return out

    def validate(self, x):
        if not isinstance(x, tuple) or len(x) != len(self.children):
            raise ShapeError(f"{x!r} is not an element of {format_expr(self.expr)}")
        for c, a in zip(self.children, x):
            c.validate(a)

    def elements(self, bound=DEFAULT_WINDOW):
        return tuple(itertools.product(*(c.elements(bound) for c in self.children)))

    def encode(self, xs):
        xs = list(xs)
        if not xs:
            return np.zeros((0, self.width), dtype=np.int64)
        cols = [c.encode([x[i] for x in xs]) for i, c in enumerate(self.children)]
        return np.hstack(cols)

    def decode(self, row):
        return tuple(c.decode(row[s]) for c, s in zip(self.children, self._slices))

    def component(self, X, i):
        return X[:, self._slices[i]]

    def code(self, X, bound):
        c = np.zeros(len(X), dtype=np.int64)
        for child, s in zip(self.children, self._slices):
            c = c * child.code_space(bound) + child.code(X[:, s], bound)
        return c

    def code_space(self, bound):
        out = 1
        for c in self.children:
            out *= c.code_space(bound)
        return out


def build(expr: AlgebraExpr) -> MVAlgebra:
    """Instantiate a catalog expression, rejecting trivial one-element algebras."""
    if isinstance(expr, Chain):
        if expr.n < 1:
            raise ValueError("chain:n needs n >= 1")
        return ChainAlgebra(expr.n)
    if isinstance(expr, Chang):
        return LexAlgebra(1)
    if isinstance(expr, Lex):
        if expr.k < 1:
            raise ValueError("lex:k needs k >= 1")
        return LexAlgebra(expr.k)
    if isinstance(expr, Product):
        if not expr.children:
            raise ValueError("empty product")
        return ProductAlgebra(tuple(build(c) for c in expr.children))
    raise TypeError(f"not an algebra expression: {expr!r}")


def enumerate_window(A: MVAlgebra, bound: int) -> tuple:
    """Whole carrier (finite) or all elements with coordinates <= bound."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    return A.elements(bound)


def signature(A: MVAlgebra) -> str:
    return format_expr(A.expr)


def is_linear(A: MVAlgebra, window: int = DEFAULT_WINDOW) -> tuple | None:
    """None if totally ordered in scope, else the first incomparable pair."""
    for x, y in itertools.combinations(A.elements(window), 2):
        if not A.leq(x, y) and not A.leq(y, x):
            return x, y
    return None
