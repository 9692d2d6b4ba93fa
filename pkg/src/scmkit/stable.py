"""The stable category of special CM modules and what can be read from the graph.

Relatively projective specials are R and the M_i at curves that are not
(-2)-curves, so the stable category only retains the (-2)-curves.  Its AR
quiver is the double of the (-2)-subconfiguration, a disjoint union of ADE
diagrams.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .cycles import canonical_cycle, degrees, fundamental_cycle, plus
from .graph import STAR, DualGraph, intersection_matrix, require_valid
from .quiver import Quiver, doubled
from .recon import reconstruction_quiver

CREPANT_NOTE = "the stable category only retains the crepant (-2) curves"


class NotDynkinError(ValueError):
    pass


@dataclass(frozen=True)
class ProjectiveClassification:
    relatively_projective: tuple[str, ...]
    non_projective: tuple[str, ...]
    ext1_self_nonzero: dict[str, bool]
    note: str = CREPANT_NOTE

    @property
    def stable_is_zero(self) -> bool:
        return not self.non_projective

    def to_json(self) -> dict:
        return {
            "relatively_projective": [STAR, *self.relatively_projective],
            "non_projective": list(self.non_projective),
            "ext1_self_nonzero": self.ext1_self_nonzero,
            "stable_category_zero": self.stable_is_zero,
            "note": self.note,
        }


def classify_projectives(graph: DualGraph) -> ProjectiveClassification:
    require_valid(graph)
    minus_two = [v for v, w in graph.vertices if w == -2]
    rest = [v for v, w in graph.vertices if w != -2]
    return ProjectiveClassification(
        tuple(rest), tuple(minus_two), {v: w == -2 for v, w in graph.vertices}
    )


def minus_two_subgraph(graph: DualGraph) -> DualGraph:
    """Induced forest on the (-2)-curves."""
    require_valid(graph)
    return graph.induced(v for v, w in graph.vertices if w == -2)


@dataclass(frozen=True)
class DynkinComponent:
    type: str
    vertices: tuple[str, ...]

    def to_json(self) -> dict:
        return {"type": self.type, "vertices": list(self.vertices)}


def _arm_lengths(forest: DualGraph, centre: str) -> list[int]:
    arms = []
    for start in forest.neighbours(centre):
        prev, cur, length = centre, start, 1
        while True:
            nxt = [u for u in forest.neighbours(cur) if u != prev]
            if len(nxt) != 1:
                if nxt:
                    raise NotDynkinError(f"second branch point at {cur}")
                break
            prev, cur, length = cur, nxt[0], length + 1
        arms.append(length)
    return sorted(arms)


def _classify_tree(forest: DualGraph, comp: list[str]) -> str:
    n = len(comp)
    sub = forest.induced(comp)
    if len(sub.edge_set()) != n - 1:
        raise NotDynkinError(f"component {comp} is not a tree")
    degs = {v: sub.degree(v) for v in comp}
    branch = [v for v in comp if degs[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or degs[branch[0]] > 3:
        raise NotDynkinError(f"component {comp} has no ADE shape")
    arms = _arm_lengths(sub, branch[0])
    if arms[:2] == [1, 1]:
        return f"D{arms[2] + 3}"
    named = {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}
    try:
        return named[tuple(arms)]
    except KeyError:
        raise NotDynkinError(f"component {comp} has arms {arms}") from None


def dynkin_classify(forest: DualGraph) -> list[DynkinComponent]:
    """ADE type of every connected component of a (-2)-forest."""
    return [DynkinComponent(_classify_tree(forest, comp), tuple(comp))
            for comp in forest.components()]


def stable_ar_quiver(graph: DualGraph) -> Quiver:
    forest = minus_two_subgraph(graph)
    return doubled(forest.ids, forest.edges)


@dataclass(frozen=True)
class ARSequence:
    """``0 -> M_i -> Y -> M_i -> 0`` with Y given by its multiplicities."""

    vertex: str
    middle: dict[str, int]
    free_rank: int

    def to_json(self) -> dict:
        return {
            "vertex": self.vertex,
            "left": self.vertex,
            "right": self.vertex,
            "middle": [{"module": f"M_{j}", "mult": n} for j, n in self.middle.items()]
                      + ([{"module": "R", "mult": self.free_rank}] if self.free_rank else []),
        }


@dataclass(frozen=True)
class RelativelyProjective:
    vertex: str

    def to_json(self) -> dict:
        return {"vertex": self.vertex, "relatively_projective": True}


def ar_sequence(graph: DualGraph, vertex: str) -> ARSequence | RelativelyProjective:
    require_valid(graph)
    k = graph.index(vertex)
    if graph.self_int(vertex) != -2:
        return RelativelyProjective(vertex)
    m = intersection_matrix(graph)
    middle = {j: m[k][graph.index(j)] for j in graph.ids
              if j != vertex and m[k][graph.index(j)]}
    zf = fundamental_cycle(graph)
    zk = canonical_cycle(graph)
    free = int(plus(degrees(graph, zk - zf)[k]))
    return ARSequence(vertex, middle, free)


@dataclass(frozen=True)
class StableEndomorphismQuiver:
    quiver: Quiver
    deleted: tuple[str, ...]
    self_injective: bool = True
    factor_of_reconstruction: bool = True

    def to_json(self) -> dict:
        return {
            "quiver": self.quiver.to_json(),
            "deleted_idempotents": list(self.deleted),
            "self_injective": self.self_injective,
            "factor_of_reconstruction": self.factor_of_reconstruction,
        }


def stable_endomorphism_quiver(graph: DualGraph) -> StableEndomorphismQuiver:
    """Quiver of the stable endomorphism algebra of the sum of all M_i.

    The two flags are consequences of the general theory, not computations.
    """
    q = stable_ar_quiver(graph)
    deleted = (STAR,) + tuple(v for v, w in graph.vertices if w != -2)
    return StableEndomorphismQuiver(q, deleted)


def gorenstein_partners(graph: DualGraph) -> list[str]:
    """ADE types whose stable CM categories match the stable category, componentwise."""
    return [c.type for c in dynkin_classify(minus_two_subgraph(graph))]


@dataclass(frozen=True)
class TiltingDecision:
    n: int
    answer: str  # "yes" | "no" | "unknown"
    witness: Optional[str] = None
    reason: str = field(default="", compare=False)

    def to_json(self) -> dict:
        return {"n": self.n, "answer": self.answer, "witness": self.witness}


def _is_chain(graph: DualGraph) -> bool:
    return all(graph.degree(v) <= 2 for v in graph.ids)


def cluster_tilting(graph: DualGraph, n: int) -> TiltingDecision:
    """Does CM(R) have an n-cluster tilting object?"""
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise ValueError(f"n must be a positive integer, got {n!r}")
    require_valid(graph)
    if len(graph) == 0:
        return TiltingDecision(n, "yes", "R", "regular ring")
    if n == 1:
        if _is_chain(graph):
            return TiltingDecision(n, "yes", "CM(R)", "cyclic quotient singularity: finite CM type")
        if all(w == -2 for w in graph.weights):
            return TiltingDecision(n, "yes", "CM(R)", "ADE quotient singularity: finite CM type")
        return TiltingDecision(n, "unknown", None, "quotient-ness is not decided from the graph")
    if n == 2:
        if graph.weights == (-3,):
            return TiltingDecision(n, "yes", "R+omega", "the 1/3(1,1) singularity")
        return TiltingDecision(n, "no", None, "neither regular nor 1/3(1,1)")
    return TiltingDecision(n, "no", None, "not regular")
