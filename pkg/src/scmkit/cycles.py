"""Cycles on a dual graph: fundamental cycle, canonical cycle, genus.

Sign convention for the canonical cycle: ``Z_K . E_i = E_i^2 + 2``.  With this
choice Z_K is effective (all coefficients >= 0), vanishes exactly on ADE
graphs, and ``(Z_K - Z_f) . E_i`` is nonnegative on every (-2)-curve.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .graph import DualGraph, GraphError, intersection_matrix, pair, require_valid


@dataclass(frozen=True)
class Cycle:
    """Rational combination of exceptional curves, indexed in vertex order."""

    ids: tuple[str, ...]
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != len(self.ids):
            raise ValueError("cycle needs one coefficient per vertex")
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, graph: DualGraph) -> "Cycle":
        return cls(graph.ids, (0,) * len(graph))

    @classmethod
    def curve(cls, graph: DualGraph, vertex: str) -> "Cycle":
        k = graph.index(vertex)
        return cls(graph.ids, tuple(int(j == k) for j in range(len(graph))))

    @classmethod
    def from_mapping(cls, graph: DualGraph, coeffs: Mapping[str, object]) -> "Cycle":
        if set(coeffs) != set(graph.ids):
            raise ValueError("cycle support differs from the graph's vertex set")
        return cls(graph.ids, tuple(Fraction(coeffs[v]) for v in graph.ids))

    def __getitem__(self, vertex: str) -> Fraction:
        return self.coeffs[self.ids.index(vertex)]

    def _check(self, other: "Cycle"):
        if other.ids != self.ids:
            raise ValueError("cycles live on different vertex sets")

    def __add__(self, other: "Cycle") -> "Cycle":
        self._check(other)
        return Cycle(self.ids, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "Cycle") -> "Cycle":
        self._check(other)
        return Cycle(self.ids, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rmul__(self, scalar) -> "Cycle":
        return Cycle(self.ids, tuple(scalar * a for a in self.coeffs))

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.ids, self.coeffs))

    def to_json(self) -> dict[str, str]:
        return {v: str(c) for v, c in zip(self.ids, self.coeffs)}


def degrees(graph: DualGraph, z: Cycle) -> tuple[Fraction, ...]:
    """The vector ``(Z . E_i)_i``."""
    if z.ids != graph.ids:
        raise ValueError("cycle is not indexed by the graph's vertex set")
    m = intersection_matrix(graph)
    return tuple(sum((m[i][j] * z.coeffs[j] for j in range(len(z.coeffs)) if m[i][j]), Fraction(0))
                 for i in range(len(z.coeffs)))


def plus(x) -> Fraction:
    return max(Fraction(x), Fraction(0))


def minus(x) -> Fraction:
    return max(-Fraction(x), Fraction(0))


def laufer(graph: DualGraph) -> Cycle:
    """Laufer's algorithm; assumes a negative definite form, no other checks.

    Starts at the reduced cycle and adds the lowest-index curve with positive
    degree until the cycle is anti-nef.
    """
    m = intersection_matrix(graph)
    n = len(graph)
    z = [1] * n
    deg = [sum(m[i][j] * z[j] for j in range(n)) for i in range(n)]
    while True:
        i = next((k for k in range(n) if deg[k] > 0), None)
        if i is None:
            break
        z[i] += 1
        for k in range(n):
            deg[k] += m[k][i]
    return Cycle(graph.ids, tuple(z))


def fundamental_cycle(graph: DualGraph) -> Cycle:
    require_valid(graph)
    if len(graph) == 0:
        raise GraphError("the empty graph has no fundamental cycle; use Cycle.zero")
    zf = laufer(graph)
    assert all(d <= 0 for d in degrees(graph, zf))
    return zf


def solve_exact(matrix, rhs) -> list[Fraction]:
    """Gauss-Jordan elimination over the rationals for a nonsingular system."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n] for row in a]


def canonical_degrees(graph: DualGraph) -> tuple[int, ...]:
    """``K . E_i = -E_i^2 - 2`` from adjunction on a smooth rational curve."""
    return tuple(-w - 2 for w in graph.weights)


def canonical_cycle(graph: DualGraph) -> Cycle:
    require_valid(graph)
    rhs = [w + 2 for w in graph.weights]
    return Cycle(graph.ids, tuple(solve_exact(intersection_matrix(graph), rhs)))


def arithmetic_genus(graph: DualGraph, z: Cycle) -> Fraction:
    """``p_a(Z) = 1 + (Z.Z + K.Z) / 2`` for an integral cycle."""
    if not z.is_integral():
        raise ValueError("arithmetic genus is only defined here for integral cycles")
    k = canonical_degrees(graph)
    kz = sum((a * ki for a, ki in zip(z.coeffs, k)), Fraction(0))
    return 1 + (pair(graph, z, z) + kz) / 2


def is_rational(graph: DualGraph) -> bool:
    if len(graph) == 0:
        return True
    return arithmetic_genus(graph, fundamental_cycle(graph)) == 0


def is_gorenstein(graph: DualGraph) -> bool:
    require_valid(graph)
    return all(w == -2 for w in graph.weights)


def omega_is_special(graph: DualGraph) -> bool:
    """Whether the canonical module is special, for a non-Gorenstein graph."""
    if is_gorenstein(graph):
        raise ValueError("omega_is_special presumes a non-Gorenstein graph")
    ws = sorted(graph.weights)
    return ws.count(-3) == 1 and ws.count(-2) == len(ws) - 1
