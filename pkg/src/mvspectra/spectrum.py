"""Prime and minimal spectra as finite posets: root systems, stems, DOT."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import MVAlgebra
from .filters import (Filter, comparable, format_filter, is_prime, issubset,
                      minimal_primes, primes)


@dataclass(frozen=True)
class SpectrumPoset:
    names: tuple
    filters: tuple
    leq: tuple          # leq[i][j]: node i below node j

    @classmethod
    def from_filters(cls, filters) -> "SpectrumPoset":
        filters = tuple(filters)
        leq = tuple(tuple(issubset(F, G) for G in filters) for F in filters)
        return cls(tuple(format_filter(F) for F in filters), filters, leq)

    @classmethod
    def from_relation(cls, names, leq) -> "SpectrumPoset":
        """Hand-built poset (no filters attached)."""
        return cls(tuple(names), (None,) * len(names), tuple(tuple(r) for r in leq))

    def __len__(self):
        return len(self.names)

    def lt(self, i, j) -> bool:
        return i != j and self.leq[i][j]

    def up_set(self, i) -> list[int]:
        return [j for j in range(len(self)) if self.leq[i][j]]

    def covers(self) -> list[tuple[int, int]]:
        n = len(self)
        return [(i, j) for i in range(n) for j in range(n)
                if self.lt(i, j) and not any(self.lt(i, k) and self.lt(k, j) for k in range(n))]

    def is_partial_order(self) -> bool:
        n, r = len(self), self.leq
        return (all(r[i][i] for i in range(n))
                and all(not (r[i][j] and r[j][i]) for i in range(n) for j in range(n) if i != j)
                and all(r[i][k] for i, j, k in itertools.product(range(n), repeat=3)
                        if r[i][j] and r[j][k]))

    def rank(self, i) -> int:
        below = [j for j in range(len(self)) if self.lt(j, i)]
        return 1 + max((self.rank(j) for j in below), default=-1)


def spectrum(A: MVAlgebra, kind: str = "prime", at: Filter | None = None) -> SpectrumPoset:
    """PSpec, PSpec(F), μS or μS(F) of A, nodes in catalog order."""
    if kind not in ("prime", "minimal"):
        raise ValueError(f"kind must be 'prime' or 'minimal', not {kind!r}")
    if at is not None and not is_prime(A, at):
        raise ValueError(f"{format_filter(at)} is not a prime filter")
    pool = primes(A) if kind == "prime" else minimal_primes(A)
    if at is not None:
        pool = [P for P in pool if comparable(P, at)]
    return SpectrumPoset.from_filters(pool)


def stem(A: MVAlgebra) -> list[tuple[str, Filter]]:
    """Primes comparable to every prime (possibly none)."""
    ps = primes(A)
    return [(format_filter(P), P) for P in ps if all(comparable(P, Q) for Q in ps)]


def is_root_system(p: SpectrumPoset) -> bool:
    for i in range(len(p)):
        up = p.up_set(i)
        if any(not (p.leq[a][b] or p.leq[b][a]) for a, b in itertools.combinations(up, 2)):
            return False
    return True


def order_iso(p: SpectrumPoset, q: SpectrumPoset) -> dict[str, str] | None:
    """Lexicographically least order isomorphism p -> q, as a name map."""
    n = len(p)
    if n != len(q):
        return None
    for perm in itertools.permutations(range(n)):
        if all(p.leq[i][j] == q.leq[perm[i]][perm[j]] for i in range(n) for j in range(n)):
            return {p.names[i]: q.names[perm[i]] for i in range(n)}
    return None


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: SpectrumPoset, name: str = "spectrum") -> str:
    """Graphviz digraph of the covering relation, edges pointing upward."""
    lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    lines += [f"  n{i} [label={_quote(label)}];" for i, label in enumerate(p.names)]
    lines += [f"  n{i} -> n{j};" for i, j in p.covers()]
    lines.append("}")
    return "\n".join(lines) + "\n"
