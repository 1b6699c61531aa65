"""Finite directed posets given by an explicit reflexive-transitive relation."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence


@dataclass(frozen=True)
class DirectedPoset:
    """A finite set with a binary relation, intended to be a directed order.

    The constructor does not force validity; :meth:`violations` reports every
    failure of reflexivity, transitivity, and directedness so that defective
    inputs can be diagnosed rather than rejected opaquely.
    """

    elements: tuple[str, ...]
    leq: frozenset[tuple[str, str]] = field(default_factory=frozenset)

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise ValueError("duplicate poset elements")
        known = set(self.elements)
        for i, j in self.leq:
            if i not in known or j not in known:
                raise ValueError(f"relation pair ({i!r}, {j!r}) uses unknown elements")

    @staticmethod
    def chain(n: int, prefix: str = "") -> "DirectedPoset":
        """The n-stage truncation 1 <= 2 <= ... <= n of the infinite chain."""
        elements = tuple(f"{prefix}{k}" for k in range(1, n + 1))
        leq = frozenset(
            (elements[a], elements[b]) for a in range(n) for b in range(a, n)
        )
        return DirectedPoset(elements, leq)

    @staticmethod
    def from_covers(elements: Sequence[str], covers: Iterable[tuple[str, str]]) -> "DirectedPoset":
        """Reflexive-transitive closure of the given cover relations."""
        elements = tuple(elements)
        index = {e: k for k, e in enumerate(elements)}
        n = len(elements)
        adj = [[False] * n for _ in range(n)]
        for k in range(n):
            adj[k][k] = True
        for i, j in covers:
            adj[index[i]][index[j]] = True
        for m in range(n):  # Floyd-Warshall closure
            for i in range(n):
                if adj[i][m]:
                    row_m = adj[m]
                    row_i = adj[i]
                    for j in range(n):
                        if row_m[j]:
                            row_i[j] = True
        leq = frozenset(
            (elements[i], elements[j]) for i in range(n) for j in range(n) if adj[i][j]
        )
        return DirectedPoset(elements, leq)

    def le(self, i: str, j: str) -> bool:
        return (i, j) in self.leq

    def strict_pairs(self) -> list[tuple[str, str]]:
        return [(i, j) for i in self.elements for j in self.elements if i != j and self.le(i, j)]

    def covers(self) -> list[tuple[str, str]]:
        """Pairs i < j with no element strictly between."""
        out = []
        for i, j in self.strict_pairs():
            if self.le(j, i):
                continue  # i ~ j in a preorder cycle; closure handled elsewhere
            between = any(
                k != i and k != j and self.le(i, k) and self.le(k, j) and not self.le(k, i) and not self.le(j, k)
                for k in self.elements
            )
            if not between:
                out.append((i, j))
        return out

    def upper_bounds(self, i: str, j: str) -> list[str]:
        return [k for k in self.elements if self.le(i, k) and self.le(j, k)]

    def greatest(self) -> str | None:
        for k in self.elements:
            if all(self.le(i, k) for i in self.elements):
                return k
        return None

    def product(self, other: "DirectedPoset") -> "DirectedPoset":
        elements = tuple(f"({a},{b})" for a in self.elements for b in other.elements)
        leq = frozenset(
            (f"({a},{b})", f"({c},{d})")
            for (a, c) in self.leq
            for (b, d) in other.leq
        )
        return DirectedPoset(elements, leq)

    def violations(self) -> list[str]:
        out = []
        for e in self.elements:
            if not self.le(e, e):
                out.append(f"not reflexive at {e}")
        for i, j in self.leq:
            if i != j and self.le(j, i):
                out.append(f"not antisymmetric: {i} <= {j} <= {i}")
            for k in self.elements:
                if self.le(j, k) and not self.le(i, k):
                    out.append(f"not transitive: {i} <= {j} <= {k} but not {i} <= {k}")
        for a in range(len(self.elements)):
            for b in range(a + 1, len(self.elements)):
                i, j = self.elements[a], self.elements[b]
                if not self.upper_bounds(i, j):
                    out.append(f"no upper bound for {{{i}, {j}}}")
        return out
