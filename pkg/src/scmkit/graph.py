"""Dual graph data model, intersection form and input validation.

A dual graph is a weighted tree: one vertex per exceptional curve, weighted by
its self-intersection, with an edge wherever two curves meet (transversally,
once).  Everything here is exact integer/rational arithmetic.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

STAR = "*"


class GraphError(ValueError):
    """Malformed input that cannot be represented as a dual graph."""


class InvalidGraphError(ValueError):
    """Raised by operations that require a graph passing :func:`validate`."""

    def __init__(self, report: "ValidationReport"):
        failed = [c.name for c in report.checks if not c.passed]
        super().__init__(f"graph failed validation: {', '.join(failed)}")
        self.report = report


@dataclass(frozen=True)
class DualGraph:
    """Weighted graph of exceptional curves.

    ``vertices`` is a sequence of ``(id, self_intersection)`` pairs in input
    order; ``edges`` a sequence of id pairs.  Construction only checks that
    ids are unique and edges refer to known vertices; loops, repeated edges
    and the geometric conditions are reported by :func:`validate`.
    """

    vertices: tuple[tuple[str, int], ...] = ()
    edges: tuple[tuple[str, str], ...] = ()
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _adj: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        verts = tuple((str(v), w) for v, w in self.vertices)
        for v, w in verts:
            if isinstance(w, bool) or not isinstance(w, int):
                raise TypeError(f"self-intersection of {v!r} must be an int, got {w!r}")
        index = {v: k for k, (v, _) in enumerate(verts)}
        if len(index) != len(verts):
            raise GraphError("duplicate vertex ids")
        edges = []
        for a, b in self.edges:
            if a not in index or b not in index:
                raise GraphError(f"edge ({a!r}, {b!r}) refers to an unknown vertex")
            edges.append((a, b) if index[a] <= index[b] else (b, a))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", tuple(edges))
        object.__setattr__(self, "_index", index)
        adj = {v: set() for v in index}
        for a, b in edges:
            if a != b:
                adj[a].add(b)
                adj[b].add(a)
        object.__setattr__(self, "_adj", {v: sorted(ns, key=index.__getitem__) for v, ns in adj.items()})

    @classmethod
    def build(cls, weights: dict[str, int] | Iterable[tuple[str, int]], edges=()) -> "DualGraph":
        items = weights.items() if isinstance(weights, dict) else weights
        return cls(tuple(items), tuple(tuple(e) for e in edges))

    @property
    def ids(self) -> tuple[str, ...]:
        return tuple(v for v, _ in self.vertices)

    @property
    def weights(self) -> tuple[int, ...]:
        return tuple(w for _, w in self.vertices)

    def __len__(self) -> int:
        return len(self.vertices)

    def index(self, vertex: str) -> int:
        try:
            return self._index[vertex]
        except KeyError:
            raise KeyError(f"unknown vertex {vertex!r}") from None

    def self_int(self, vertex: str) -> int:
        return self.vertices[self.index(vertex)][1]

    def edge_set(self) -> set[frozenset]:
        """Distinct non-loop edges as unordered pairs."""
        return {frozenset(e) for e in self.edges if e[0] != e[1]}

    def neighbours(self, vertex: str) -> list[str]:
        self.index(vertex)
        return list(self._adj[vertex])

    def degree(self, vertex: str) -> int:
        return len(self.neighbours(vertex))

    def induced(self, keep: Iterable[str]) -> "DualGraph":
        keep = set(keep)
        return DualGraph(
            tuple(v for v in self.vertices if v[0] in keep),
            tuple(e for e in self.edges if e[0] in keep and e[1] in keep),
        )

    def components(self) -> list[list[str]]:
        """Connected components, each in input order, ordered by first vertex."""
        seen: set[str] = set()
        comps = []
        for v in self.ids:
            if v in seen:
                continue
            stack, comp = [v], {v}
            while stack:
                for u in self.neighbours(stack.pop()):
                    if u not in comp:
                        comp.add(u)
                        stack.append(u)
            seen |= comp
            comps.append([u for u in self.ids if u in comp])
        return comps

    def to_json(self) -> dict:
        return {
            "vertices": [{"id": v, "self": w} for v, w in self.vertices],
            "edges": [list(e) for e in self.edges],
        }


def parse_graph(data: dict | str) -> DualGraph:
    """Strict parser for the ``{"vertices": [...], "edges": [...]}`` format."""
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise GraphError("top level must be an object")
    raw_vertices = data.get("vertices", [])
    raw_edges = data.get("edges", [])
    if not isinstance(raw_vertices, list) or not isinstance(raw_edges, list):
        raise GraphError("'vertices' and 'edges' must be lists")

    vertices = []
    seen = set()
    for item in raw_vertices:
        if not isinstance(item, dict) or "id" not in item or "self" not in item:
            raise GraphError(f"vertex entry needs 'id' and 'self': {item!r}")
        vid, w = item["id"], item["self"]
        if not isinstance(vid, str) or not vid:
            raise GraphError(f"vertex id must be a nonempty string: {vid!r}")
        if vid == STAR:
            raise GraphError(f"{STAR!r} is reserved for the free module vertex")
        if vid in seen:
            raise GraphError(f"duplicate vertex id {vid!r}")
        if isinstance(w, bool) or not isinstance(w, int):
            raise GraphError(f"self-intersection of {vid!r} must be an integer: {w!r}")
        if w > -2:
            raise GraphError(f"self-intersection of {vid!r} is {w}, must be <= -2")
        seen.add(vid)
        vertices.append((vid, w))

    edges = []
    pairs = set()
    for item in raw_edges:
        if not isinstance(item, list) or len(item) != 2:
            raise GraphError(f"edge must be a pair of ids: {item!r}")
        a, b = item
        if a not in seen or b not in seen:
            raise GraphError(f"edge {item!r} refers to an unknown vertex")
        if a == b:
            raise GraphError(f"self-edge at {a!r}")
        key = frozenset((a, b))
        if key in pairs:
            raise GraphError(f"duplicate edge {item!r}")
        pairs.add(key)
        edges.append((a, b))
    return DualGraph(tuple(vertices), tuple(edges))


@functools.lru_cache(maxsize=4096)
def intersection_matrix(graph: DualGraph) -> tuple[tuple[int, ...], ...]:
    n = len(graph)
    rows = [[0] * n for _ in range(n)]
    for k, w in enumerate(graph.weights):
        rows[k][k] = w
    for e in graph.edge_set():
        a, b = (graph.index(v) for v in e)
        rows[a][b] = rows[b][a] = 1
    return tuple(tuple(r) for r in rows)


def pair(graph: DualGraph, z, w) -> Fraction:
    """Intersection number of two cycles on ``graph``."""
    for c in (z, w):
        if tuple(c.ids) != graph.ids:
            raise ValueError("cycle is not indexed by the graph's vertex set")
    m = intersection_matrix(graph)
    a, b = z.coeffs, w.coeffs
    return sum(
        (a[i] * m[i][j] * b[j] for i in range(len(a)) for j in range(len(b)) if m[i][j]),
        Fraction(0),
    )


def bareiss_determinant(rows) -> int:
    """Fraction-free determinant of a square integer matrix."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(rows) -> list[int]:
    return [bareiss_determinant([r[:k] for r in rows[:k]]) for k in range(1, len(rows) + 1)]


def is_negative_definite(graph: DualGraph) -> bool:
    neg = [[-x for x in r] for r in intersection_matrix(graph)]
    return all(d > 0 for d in leading_minors(neg))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    vertices: tuple[str, ...]
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "verdict": "pass" if self.passed else "fail",
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _check_simple(graph):
    loops = [e[0] for e in graph.edges if e[0] == e[1]]
    if loops:
        return Check("simple", False, f"self-edge at {loops[0]}")
    if len({frozenset(e) for e in graph.edges}) != len(graph.edges):
        return Check("simple", False, "repeated edge")
    return Check("simple", True)


def _check_tree(graph):
    n = len(graph)
    if n == 0:
        return Check("tree", True, "empty graph")
    m = len(graph.edge_set())
    ncomp = len(graph.components())
    if ncomp != 1:
        return Check("tree", False, f"{ncomp} connected components")
    if m != n - 1:
        return Check("tree", False, f"{m} edges on {n} vertices, expected {n - 1}")
    return Check("tree", True)


def _check_weights(graph):
    bad = [v for v, w in graph.vertices if w > -2]
    if bad:
        return Check("weights", False, "self-intersection > -2 at " + ", ".join(bad))
    return Check("weights", True)


def _check_definite(graph):
    neg = [[-x for x in r] for r in intersection_matrix(graph)]
    minors = leading_minors(neg)
    bad = next((k for k, d in enumerate(minors) if d <= 0), None)
    if bad is not None:
        return Check("negative_definite", False, f"leading minor {bad + 1} of -M is {minors[bad]}")
    return Check("negative_definite", True, f"det(-M) = {minors[-1] if minors else 1}")


def _check_rational(graph, definite: bool):
    from .cycles import arithmetic_genus, laufer

    if not definite:
        return Check("rational", False, "not evaluated: intersection form is not negative definite")
    if len(graph) == 0:
        return Check("rational", True, "empty graph")
    pa = arithmetic_genus(graph, laufer(graph))
    return Check("rational", pa == 0, f"p_a(Z_f) = {pa}")


@functools.lru_cache(maxsize=4096)
def validate(graph: DualGraph) -> ValidationReport:
    """Run every structural and geometric check; never raises."""
    checks = [_check_simple(graph), _check_tree(graph), _check_weights(graph)]
    definite = _check_definite(graph)
    checks += [definite, _check_rational(graph, definite.passed)]
    return ValidationReport(graph.ids, tuple(checks))


def require_valid(graph: DualGraph) -> DualGraph:
    report = validate(graph)
    if not report.passed:
        raise InvalidGraphError(report)
    return graph
