"""Numerical syzygy arithmetic for CM modules given by rank and Chern data.

A CM module M enters only through ``rank M`` and the degrees
``c_i = c_1(M) . E_i``.  Its first syzygy is ``sum_i (Omega M_i)^{c_i}``
(and ``Omega M_i = M_i^*``), so M needs ``rank M + Z_f . c_1(M)`` generators.

Second syzygies are not computed: the Chern data of ``M_i^*`` is not
determined by the graph.  For a non-free special M over a non-Gorenstein
ring, ``Omega^2 M`` is never isomorphic to M.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cycles import canonical_degrees, fundamental_cycle
from .graph import DualGraph, GraphError, require_valid


class MalformedModuleClass(ValueError):
    pass


@dataclass(frozen=True)
class ModuleClass:
    rank: int
    chern: tuple[int, ...]

    def __post_init__(self):
        chern = tuple(self.chern)
        object.__setattr__(self, "chern", chern)
        if any(isinstance(x, bool) or not isinstance(x, int) for x in (self.rank, *chern)):
            raise MalformedModuleClass("rank and chern entries must be integers")
        if self.rank < 0 or any(c < 0 for c in chern):
            raise MalformedModuleClass("rank and chern entries must be nonnegative")
        if self.rank == 0 and any(chern):
            raise MalformedModuleClass("rank 0 forces zero chern class")

    @classmethod
    def free(cls, graph: DualGraph, rank: int = 1) -> "ModuleClass":
        return cls(rank, (0,) * len(graph))

    @classmethod
    def omega(cls, graph: DualGraph) -> "ModuleClass":
        """The canonical module: rank 1, ``c_1 . E_i = K . E_i``."""
        return cls(1, canonical_degrees(graph))

    def __add__(self, other: "ModuleClass") -> "ModuleClass":
        if len(other.chern) != len(self.chern):
            raise MalformedModuleClass("direct sum of classes on different graphs")
        return ModuleClass(self.rank + other.rank, tuple(a + b for a, b in zip(self.chern, other.chern)))

    def is_free(self) -> bool:
        return not any(self.chern)


def _check(graph: DualGraph, m: ModuleClass):
    require_valid(graph)
    if len(m.chern) != len(graph):
        raise MalformedModuleClass(f"chern vector has {len(m.chern)} entries, graph has {len(graph)} vertices")


def syzygy_decomposition(graph: DualGraph, m: ModuleClass) -> dict[str, int]:
    """Multiplicity of each ``Omega M_i`` in ``Omega M``; zero entries omitted."""
    _check(graph, m)
    return {v: c for v, c in zip(graph.ids, m.chern) if c}


def min_generators(graph: DualGraph, m: ModuleClass) -> int:
    _check(graph, m)
    if len(graph) == 0:
        return m.rank
    zf = fundamental_cycle(graph)
    return m.rank + sum(int(a) * c for a, c in zip(zf.coeffs, m.chern))


def syzygy_rank(graph: DualGraph, m: ModuleClass) -> int:
    return min_generators(graph, m) - m.rank


def omega_syzygy(graph: DualGraph) -> dict[str, int]:
    if len(graph) == 0:
        raise GraphError("omega_syzygy needs a nonempty graph")
    return syzygy_decomposition(graph, ModuleClass.omega(graph))


def decomposition_json(decomp: dict[str, int]) -> list[dict]:
    return [{"omega_M": v, "mult": n} for v, n in decomp.items()]
