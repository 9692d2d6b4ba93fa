"""Finite quivers with arrow multiplicities, plus JSON and DOT rendering."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .graph import STAR


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: dict[tuple[str, str], int] = field(default_factory=dict)
    extra: frozenset = frozenset()

    def __post_init__(self):
        vs = set(self.vertices)
        clean = {}
        for (a, b), n in self.arrows.items():
            if a not in vs or b not in vs:
                raise ValueError(f"arrow {a}->{b} leaves the vertex set")
            if n < 0:
                raise ValueError("negative arrow multiplicity")
            if n:
                clean[(a, b)] = n
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", clean)
        object.__setattr__(self, "extra", frozenset(p for p in self.extra if p in clean))

    def mult(self, a: str, b: str) -> int:
        return self.arrows.get((a, b), 0)

    def arrow_multiset(self) -> Counter:
        return Counter(self.arrows)

    def in_degree(self, v: str) -> int:
        return sum(n for (_, b), n in self.arrows.items() if b == v)

    def out_degree(self, v: str) -> int:
        return sum(n for (a, _), n in self.arrows.items() if a == v)

    def is_symmetric(self) -> bool:
        return all(self.mult(b, a) == n for (a, b), n in self.arrows.items())

    def has_loops(self) -> bool:
        return any(a == b for a, b in self.arrows)

    def delete(self, drop: Iterable[str]) -> "Quiver":
        """Quiver obtained by removing vertices and every arrow touching them."""
        drop = set(drop)
        keep = tuple(v for v in self.vertices if v not in drop)
        arrows = {p: n for p, n in self.arrows.items() if p[0] not in drop and p[1] not in drop}
        return Quiver(keep, arrows, self.extra)

    def _ordered_arrows(self):
        pos = {v: k for k, v in enumerate(self.vertices)}
        return sorted(self.arrows.items(), key=lambda item: (pos[item[0][0]], pos[item[0][1]]))

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [
                {"from": a, "to": b, "mult": n, "extra": (a, b) in self.extra}
                for (a, b), n in self._ordered_arrows()
            ],
        }

    def to_dot(self, name: str = "Q") -> str:
        lines = [f"digraph {name} {{"]
        for v in self.vertices:
            shape = ' [shape=star]' if v == STAR else ""
            lines.append(f'  "{v}"{shape};')
        for (a, b), n in self._ordered_arrows():
            style = ' [color=green]' if (a, b) in self.extra else ""
            lines.extend(f'  "{a}" -> "{b}"{style};' for _ in range(n))
        lines.append("}")
        return "\n".join(lines) + "\n"


def doubled(graph_ids: Iterable[str], edges: Iterable[tuple[str, str]]) -> Quiver:
    """Double of an undirected graph: one arrow each way per edge."""
    arrows: dict[tuple[str, str], int] = {}
    for a, b in edges:
        arrows[(a, b)] = arrows.get((a, b), 0) + 1
        arrows[(b, a)] = arrows.get((b, a), 0) + 1
    return Quiver(tuple(graph_ids), arrows)
