"""Recursive-descent parser for algebra, filter and element literals.

    algebra := 'chain' ':' INT | 'chang' | 'lex' ':' INT | 'product' '[' algebra (',' algebra)* ']'
    filter  := 'one' | 'whole' | 'rad' | 'm' '{' INT (',' INT)* '}'
             | 'gen' '{' elem (';' elem)* '}' | 'pull' '{' INT ';' filter '}'
             | 'prod' '{' filter (';' filter)* '}'
    elem    := INT | '(' elem (',' elem)* ')' | ('inf'|'coinf') '[' INT (',' INT)* ']'

Whitespace is ignored between tokens.  ``prod`` names a product of factor
filters, which the printer needs for filters moving in several factors.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .algebras import (Chain, ChainAlgebra, Chang, Lex, LexAlgebra, LexElem,
                       Product, ProductAlgebra, build)
from .core import MVAlgebra
from .filters import (Filter, generate_filter, one, product_of, pullback, rad,
                      whole, zero_set)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int, expected=()):
        self.offset = offset
        self.expected = frozenset(expected)
        exp = f" (expected {', '.join(sorted(self.expected))})" if self.expected else ""
        super().__init__(f"{message} at byte {offset}{exp}")


class SemanticError(ValueError):
    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at byte {offset}")


_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<word>[A-Za-z_]+)|(?P<punct>[:\[\]{}(),;]))")


@dataclass(frozen=True)
class _Tok:
    kind: str       # 'int', 'word', 'punct' or 'end'
    text: str
    offset: int     # byte offset


def _tokenize(text: str) -> list[_Tok]:
    data = text.encode()
    out, pos = [], 0
    n = len(text)
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            rest = text[pos:]
            if rest.strip() == "":
                break
            skip = len(rest) - len(rest.lstrip())
            where = len(text[:pos + skip].encode())
            raise ParseError(f"unexpected character {text[pos + skip]!r}", where)
        kind = m.lastgroup
        out.append(_Tok(kind, m.group(kind), len(text[:m.start(kind)].encode())))
        pos = m.end()
        if pos >= n:
            break
    out.append(_Tok("end", "", len(data)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def fail(self, expected):
        t = self.tok
        what = "end of input" if t.kind == "end" else repr(t.text)
        raise ParseError(f"unexpected {what}", t.offset, expected)

    def take(self, text: str) -> _Tok:
        if self.tok.text != text or self.tok.kind == "end":
            self.fail({repr(text)})
        t = self.tok
        self.i += 1
        return t

    def accept(self, text: str) -> bool:
        if self.tok.kind != "end" and self.tok.text == text:
            self.i += 1
            return True
        return False

    def integer(self) -> tuple[int, int]:
        if self.tok.kind != "int":
            self.fail({"INT"})
        t = self.tok
        self.i += 1
        return int(t.text), t.offset

    def finish(self):
        if self.tok.kind != "end":
            self.fail({"end of input"})

    def seq(self, item, sep: str, close: str) -> list:
        out = [item()]
        while not self.accept(close):
            if self.tok.text != sep:
                self.fail({repr(sep), repr(close)})
            self.i += 1
            out.append(item())
        return out

    # -- algebra --------------------------------------------------------------
    def algebra(self):
        t = self.tok
        if self.accept("chain") or self.accept("lex"):
            self.take(":")
            n, at = self.integer()
            if n < 1:
                raise SemanticError(f"{t.text} index must be at least 1", at)
            return Chain(n) if t.text == "chain" else Lex(n)
        if self.accept("chang"):
            return Chang()
        if self.accept("product"):
            self.take("[")
            return Product(self.seq(self.algebra, ",", "]"))
        self.fail({"'chain'", "'chang'", "'lex'", "'product'"})

    # -- element --------------------------------------------------------------
    def element(self, A: MVAlgebra):
        t = self.tok
        if t.kind == "int":
            n, at = self.integer()
            if not isinstance(A, ChainAlgebra):
                raise SemanticError("integer literal outside a chain", at)
            if n > A.n:
                raise SemanticError(f"chain index {n} out of range 0..{A.n}", at)
            return n
        if self.accept("("):
            if not isinstance(A, ProductAlgebra):
                raise SemanticError("tuple literal outside a product", t.offset)
            parts = []

            def item():
                if len(parts) >= len(A.children):
                    raise SemanticError(f"too many coordinates for a {len(A.children)}-fold product",
                                        self.tok.offset)
                parts.append(self.element(A.children[len(parts)]))
                return parts[-1]

            self.seq(item, ",", ")")
            if len(parts) != len(A.children):
                raise SemanticError(f"expected {len(A.children)} coordinates, got {len(parts)}",
                                    t.offset)
            return tuple(parts)
        if self.accept("inf") or self.accept("coinf"):
            if not isinstance(A, LexAlgebra):
                raise SemanticError(f"{t.text}[...] outside lex/chang", t.offset)
            self.take("[")
            vec = self.seq(lambda: self.integer()[0], ",", "]")
            if len(vec) != A.k:
                raise SemanticError(f"lex vector width {len(vec)} does not match {A.k}", t.offset)
            return LexElem(int(t.text == "coinf"), tuple(vec))
        self.fail({"INT", "'('", "'inf'", "'coinf'"})

    # -- filter ---------------------------------------------------------------
    def filter(self, A: MVAlgebra) -> Filter:
        t = self.tok
        if self.accept("one"):
            return one(A)
        if self.accept("whole"):
            return whole(A)
        if self.accept("rad"):
            if not isinstance(A, LexAlgebra):
                raise SemanticError("rad needs lex/chang", t.offset)
            return rad(A)
        if self.accept("m"):
            if not isinstance(A, LexAlgebra):
                raise SemanticError("m{...} needs lex/chang", t.offset)
            self.take("{")
            idx = self.seq(self.integer, ",", "}")
            for i, at in idx:
                if not 1 <= i <= A.k:
                    raise SemanticError(f"coordinate {i} out of range 1..{A.k}", at)
            return zero_set(A, [i for i, _ in idx])
        if self.accept("gen"):
            if not A.finite:
                raise SemanticError("gen{...} needs a finite algebra", t.offset)
            self.take("{")
            return generate_filter(A, self.seq(lambda: self.element(A), ";", "}"))
        if self.accept("pull") or self.accept("prod"):
            if not isinstance(A, ProductAlgebra):
                raise SemanticError(f"{t.text}{{...}} needs a product algebra", t.offset)
            self.take("{")
            if t.text == "pull":
                i, at = self.integer()
                if not 1 <= i <= len(A.children):
                    raise SemanticError(f"factor {i} out of range 1..{len(A.children)}", at)
                self.take(";")
                F = self.filter(A.children[i - 1])
                self.take("}")
                return pullback(A, i, F)
            parts = []

            def item():
                if len(parts) >= len(A.children):
                    raise SemanticError("too many factor filters", self.tok.offset)
                parts.append(self.filter(A.children[len(parts)]))
                return parts[-1]

            self.seq(item, ";", "}")
            if len(parts) != len(A.children):
                raise SemanticError(f"expected {len(A.children)} factor filters", t.offset)
            return product_of(A, parts)
        self.fail({"'one'", "'whole'", "'rad'", "'m'", "'gen'", "'pull'", "'prod'"})


def parse(kind: str, text: str, context: MVAlgebra | None = None):
    """Parse ``text`` as an algebra expression, a filter or an element.

    Filters and elements need the algebra they live in as ``context``.
    """
    if kind not in ("algebra", "filter", "element"):
        raise ValueError(f"unknown literal kind {kind!r}")
    if kind != "algebra" and context is None:
        raise ValueError(f"{kind} literals need an algebra context")
    p = _Parser(text)
    value = p.algebra() if kind == "algebra" else getattr(p, kind)(context)
    p.finish()
    return value


def parse_algebra(text: str) -> MVAlgebra:
    return build(parse("algebra", text))


def parse_filter(A: MVAlgebra, text: str) -> Filter:
    return parse("filter", text, A)


def parse_element(A: MVAlgebra, text: str):
    return parse("element", text, A)

