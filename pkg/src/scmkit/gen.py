"""Graph generators and the brute-force fundamental cycle oracle."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

import networkx as nx

from .cycles import Cycle, laufer
from .graph import DualGraph, GraphError, intersection_matrix, require_valid, validate


@dataclass(frozen=True)
class PlainTree:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))

    def degree(self, v: str) -> int:
        return sum(v in e for e in self.edges)

    def is_tree(self) -> bool:
        g = nx.Graph()
        g.add_nodes_from(self.vertices)
        g.add_edges_from(self.edges)
        if len(self.vertices) == 0 or g.number_of_edges() != len(self.edges):
            return False
        if any(a == b for a, b in self.edges) or g.number_of_nodes() != len(self.vertices):
            return False
        return nx.is_tree(g)


def rationalize_tree(tree: PlainTree) -> DualGraph:
    """Weight a tree so that it becomes a rational dual graph.

    Leaves get -2, a vertex with d >= 2 neighbours gets -d.  A lone vertex
    gets -2.
    """
    if not tree.is_tree():
        raise GraphError("rationalize_tree needs a nonempty connected acyclic graph")
    weights = []
    for v in tree.vertices:
        d = tree.degree(v)
        weights.append((v, -2 if d <= 1 else -d))
    return DualGraph(tuple(weights), tree.edges)


def paper_family(m: int) -> DualGraph:
    """Chain b1..b_{2m+1} (-2,-3,-2,...,-3,-2) with a (-2) leaf t_k on each -3."""
    if m < 1:
        raise ValueError("paper_family needs m >= 1")
    bottom = [f"b{k}" for k in range(1, 2 * m + 2)]
    tops = [f"t{k}" for k in range(1, m + 1)]
    edges = list(zip(bottom, bottom[1:]))
    edges += [(bottom[2 * k - 1], t) for k, t in enumerate(tops, start=1)]
    return rationalize_tree(PlainTree(tuple(bottom + tops), tuple(edges)))


def random_tree(n: int, seed: int) -> PlainTree:
    """Uniform labelled tree on E1..En, decoded from a seeded Pruefer sequence."""
    if n < 1:
        raise ValueError("random_tree needs n >= 1")
    names = [f"E{k}" for k in range(1, n + 1)]
    if n == 1:
        return PlainTree((names[0],))
    if n == 2:
        return PlainTree(tuple(names), ((names[0], names[1]),))
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    g = nx.from_prufer_sequence(seq)
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    return PlainTree(tuple(names), tuple((names[a], names[b]) for a, b in edges))


def brute_force_fundamental_cycle(graph: DualGraph, bound: int | None = None) -> Cycle:
    """Componentwise minimum of all anti-nef cycles with entries in [1, bound].

    ``bound`` defaults to one more than the largest Laufer coefficient, which
    only sizes the search box.
    """
    require_valid(graph)
    if len(graph) == 0:
        raise GraphError("the empty graph has no fundamental cycle")
    if bound is None:
        bound = max(laufer(graph).coeffs) + 1
    if bound < 1:
        raise ValueError("bound must be >= 1")
    m = intersection_matrix(graph)
    n = len(graph)
    kept = [
        z for z in itertools.product(range(1, int(bound) + 1), repeat=n)
        if all(sum(m[i][j] * z[j] for j in range(n)) <= 0 for i in range(n))
    ]
    if not kept:
        raise ValueError(f"no anti-nef cycle with entries <= {bound}; raise the bound")
    keep_set = set(kept)
    for a, b in itertools.combinations(kept, 2):
        assert tuple(map(min, a, b)) in keep_set, "anti-nef cycles not closed under min"
    low = tuple(min(col) for col in zip(*kept))
    assert low in keep_set
    return Cycle(graph.ids, tuple(Fraction(x) for x in low))


# named graphs

def chain(weights, prefix: str = "E") -> DualGraph:
    ids = [f"{prefix}{k}" for k in range(1, len(weights) + 1)]
    return DualGraph(tuple(zip(ids, weights)), tuple(zip(ids, ids[1:])))


def ade(label: str) -> DualGraph:
    """All-(-2) graph of type A_n, D_n (n >= 4), E6, E7 or E8."""
    kind, n = label[0].upper(), int(label[1:])
    if kind == "A" and n >= 1:
        return chain([-2] * n)
    ids = [f"E{k}" for k in range(1, n + 1)]
    verts = tuple((v, -2) for v in ids)
    if kind == "D" and n >= 4:
        # chain E1..E_{n-1}, extra leaf En on E_{n-2}
        edges = list(zip(ids[:-1], ids[1:-1])) + [(ids[n - 3], ids[n - 1])]
        return DualGraph(verts, tuple(edges))
    if kind == "E" and n in (6, 7, 8):
        # chain E1..E_{n-1}, extra leaf En on E3
        edges = list(zip(ids[:-1], ids[1:-1])) + [(ids[2], ids[n - 1])]
        return DualGraph(verts, tuple(edges))
    raise ValueError(f"unknown ADE label {label!r}")


def _example_graph(weights) -> DualGraph:
    ids = ("b1", "b2", "t", "b3", "b4")
    edges = (("b1", "b2"), ("b2", "t"), ("b2", "b3"), ("b3", "b4"))
    return DualGraph(tuple(zip(ids, weights)), edges)


def example_graphs() -> dict[str, DualGraph]:
    """The three dual graphs of the worked example table.

    Chain b1-b2-b3-b4 with a top leaf t on b2; the non-(-2) curve moves along
    the chain from b4 (G1) to b3 (G2) to b2 (G3).
    """
    return {
        "G1": _example_graph((-2, -2, -2, -2, -4)),
        "G2": _example_graph((-2, -2, -2, -4, -2)),
        "G3": _example_graph((-2, -4, -2, -2, -2)),
    }


def empty_graph() -> DualGraph:
    return DualGraph()


def small_tree_corpus(max_vertices: int = 5, weights=(-2, -3, -4)) -> list[DualGraph]:
    """Every tree shape on <= max_vertices vertices with every weighting, validated only."""
    out = []
    for n in range(1, max_vertices + 1):
        shapes = [[]] if n == 1 else [sorted(t.edges()) for t in nx.nonisomorphic_trees(n)]
        ids = [f"E{k}" for k in range(1, n + 1)]
        for edges in shapes:
            named = tuple((ids[a], ids[b]) for a, b in edges)
            for ws in itertools.product(weights, repeat=n):
                g = DualGraph(tuple(zip(ids, ws)), named)
                if validate(g).passed:
                    out.append(g)
    return out


def standard_corpus() -> dict[str, DualGraph]:
    """Named graphs used for corpus-wide property checks."""
    corpus = {"empty": empty_graph(), "minus3": chain([-3]), "chain_232": chain([-2, -3, -2])}
    corpus.update(example_graphs())
    for label in [f"A{k}" for k in range(1, 9)] + [f"D{k}" for k in range(4, 9)] + ["E6", "E7", "E8"]:
        corpus[label] = ade(label)
    for m in range(1, 5):
        corpus[f"family{m}"] = paper_family(m)
    corpus["star4"] = rationalize_tree(PlainTree(("c", "l1", "l2", "l3", "l4"),
                                                 tuple(("c", f"l{k}") for k in range(1, 5))))
    for k, g in enumerate(small_tree_corpus(4)):
        corpus[f"small{k}"] = g
    for seed in range(40):
        corpus[f"random{seed}"] = rationalize_tree(random_tree(2 + seed % 11, seed))
    return corpus
