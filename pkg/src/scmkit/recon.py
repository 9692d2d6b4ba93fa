"""Quiver and Ext data of the reconstruction algebra End_R(R + sum M_i).

Vertex ``*`` is the free module R, every other vertex is the special CM
module M_i attached to the curve E_i.  Arrow rule:

* ``i -> j``: ``E_i . E_j`` for distinct curves,
* ``i -> *``: ``-Z_f . E_i``,
* ``* -> i``: ``((Z_K - Z_f) . E_i)_+``.

Arrows ``i -> *`` at curves that are not (-2)-curves are tagged ``extra``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cycles import Cycle, canonical_cycle, degrees, fundamental_cycle, minus, plus
from .graph import STAR, DualGraph, intersection_matrix, require_valid
from .quiver import Quiver


def _cycle_degrees(graph: DualGraph):
    """Return ``(Z_f . E_i, (Z_K - Z_f) . E_i)`` as dicts keyed by vertex."""
    if len(graph) == 0:
        return {}, {}
    zf = fundamental_cycle(graph)
    zk = canonical_cycle(graph)
    return (dict(zip(graph.ids, degrees(graph, zf))),
            dict(zip(graph.ids, degrees(graph, zk - zf))))


def reconstruction_quiver(graph: DualGraph) -> Quiver:
    require_valid(graph)
    zf_deg, diff_deg = _cycle_degrees(graph)
    arrows: dict[tuple[str, str], int] = {}
    extra = set()
    m = intersection_matrix(graph)
    ids = graph.ids
    for a, i in enumerate(ids):
        for b, j in enumerate(ids):
            if a != b and m[a][b]:
                arrows[(i, j)] = m[a][b]
        out = int(-zf_deg[i])
        arrows[(i, STAR)] = out
        arrows[(STAR, i)] = int(plus(diff_deg[i]))
        if graph.self_int(i) != -2 and out:
            extra.add((i, STAR))
    return Quiver((STAR,) + ids, arrows, frozenset(extra))


@dataclass(frozen=True)
class ExtTable:
    """``dim Ext^d_A(S_i, S_x)`` for d in 1..3, i a curve, x a curve or ``*``.

    Entries with source ``S_*`` are deliberately absent.
    """

    vertices: tuple[str, ...]
    entries: dict[tuple[int, str, str], int]

    def __call__(self, d: int, source: str, target: str) -> int:
        if source == STAR:
            raise KeyError("Ext groups with source S_* are not available")
        return self.entries[(d, source, target)]

    def row_sum(self, d: int, source: str) -> int:
        return sum(n for (dd, s, _), n in self.entries.items() if dd == d and s == source)

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "entries": [{"d": d, "source": s, "target": t, "dim": n}
                        for (d, s, t), n in self.entries.items()],
        }


def ext_table(graph: DualGraph) -> ExtTable:
    q = reconstruction_quiver(graph)
    _, diff_deg = _cycle_degrees(graph)
    entries = {}
    targets = graph.ids + (STAR,)
    for i in graph.ids:
        e2 = graph.self_int(i)
        # degree 1 counts arrows into i
        for x in targets:
            entries[(1, i, x)] = q.mult(x, i)
        for x in targets:
            if x == i:
                entries[(2, i, x)] = -e2 - 1
            elif x == STAR:
                entries[(2, i, x)] = int(minus(diff_deg[i]))
            else:
                entries[(2, i, x)] = 0
        for x in targets:
            entries[(3, i, x)] = -e2 - 2 if x == STAR else 0
    return ExtTable(graph.ids, entries)


def projective_dimension(graph: DualGraph, vertex: str) -> int:
    """Projective dimension of the simple module at a curve: 2 or 3."""
    require_valid(graph)
    return 2 if graph.self_int(vertex) == -2 else 3


def global_dimension(graph: DualGraph) -> int:
    require_valid(graph)
    return 2 if all(w == -2 for w in graph.weights) else 3


@dataclass(frozen=True)
class VertexRelations:
    vertex: str
    self_int: int
    self_relations: int
    star_relations: int
    other_relations: int

    @property
    def single_cyclic_relation(self) -> bool:
        """Exactly one relation, and it starts and ends at this vertex."""
        return self.self_relations == 1 and self.star_relations == 0 and self.other_relations == 0

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "self": self.self_int,
            "self_relations": self.self_relations,
            "star_relations": self.star_relations,
            "other_relations": self.other_relations,
            "single_cyclic_relation": self.single_cyclic_relation,
        }


@dataclass(frozen=True)
class RelationsReport:
    vertices: tuple[VertexRelations, ...]
    global_dimension: int

    def __getitem__(self, vertex: str) -> VertexRelations:
        return next(v for v in self.vertices if v.vertex == vertex)

    def to_json(self) -> dict:
        return {
            "vertices": [v.to_json() for v in self.vertices],
            "global_dimension": self.global_dimension,
        }


def relations_report(graph: DualGraph) -> RelationsReport:
    """Relation counts per vertex read off ``Ext^2`` between simples."""
    table = ext_table(graph)
    rows = []
    for i in graph.ids:
        others = sum(table(2, i, j) for j in graph.ids if j != i)
        rows.append(VertexRelations(i, graph.self_int(i), table(2, i, i), table(2, i, STAR), others))
    return RelationsReport(tuple(rows), global_dimension(graph))
