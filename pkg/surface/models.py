"""
Ribbon graphs and the homology data read off them. Value types only.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

import numpy as np

from diagram.constants import OVER, UNDER
from surface.constants import CORNER_RULE, TRANSVERSAL_RULE


@dataclass(frozen=True)
class RibbonGraph:
    """
    Darts are 0..len(edge)-1. edge[d] is the dart at the other end of d's edge;
    rotation lists the counter-clockwise dart cycle of every vertex.
    """

    edge: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]
    mirrored: bool = False

    @property
    def darts(self) -> int:
        return len(self.edge)

    @property
    def vertex_count(self) -> int:
        return len(self.rotation)

    @property
    def edge_count(self) -> int:
        return len(self.edge) // 2

    @cached_property
    def next_dart(self) -> tuple[int, ...]:
        succ = [None] * len(self.edge)
        for cycle in self.rotation:
            order = cycle[::-1] if self.mirrored else cycle
            for k, d in enumerate(order):
                succ[d] = order[(k + 1) % len(order)]
        return tuple(succ)

    @cached_property
    def vertex_of(self) -> tuple[int, ...]:
        owner = [None] * len(self.edge)
        for v, cycle in enumerate(self.rotation):
            for d in cycle:
                owner[d] = v
        return tuple(owner)


@dataclass(frozen=True, eq=False)
class HomologyData:
    """
    ids[k] is the crossing whose pairings sit at index k of v and M.
    v[k] = alpha_k . gamma_D, M[k, l] = alpha_k . alpha_l.
    """

    ids: tuple[int, ...]
    v: np.ndarray
    M: np.ndarray
    genus: int

    def __post_init__(self):
        v = np.array(self.v, dtype=np.int64).reshape(len(self.ids))
        M = np.array(self.M, dtype=np.int64).reshape(len(self.ids), len(self.ids))
        v.flags.writeable = False
        M.flags.writeable = False
        object.__setattr__(self, "ids", tuple(self.ids))
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "M", M)

    def __eq__(self, other):
        if not isinstance(other, HomologyData):
            return NotImplemented
        return (
            self.ids == other.ids
            and self.genus == other.genus
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.M, other.M)
        )

    __hash__ = None

    @cached_property
    def index(self) -> Mapping[int, int]:
        return MappingProxyType({c: k for k, c in enumerate(self.ids)})

    def is_trivial(self) -> bool:
        return not self.v.any() and not self.M.any()


@dataclass(frozen=True)
class LocalRules:
    transversal: Mapping[tuple[str, str], int] = field(
        default_factory=lambda: dict(TRANSVERSAL_RULE)
    )
    corner: Mapping[tuple[int, int], int] = field(
        default_factory=lambda: dict(CORNER_RULE)
    )

    def __post_init__(self):
        object.__setattr__(self, "transversal", MappingProxyType(dict(self.transversal)))
        object.__setattr__(self, "corner", MappingProxyType(dict(self.corner)))

    def __hash__(self):
        return hash((tuple(sorted(self.transversal.items())), tuple(sorted(self.corner.items()))))

    def with_flipped_transversal(self) -> "LocalRules":
        # used by the fuzz mutation oracle; any correct suite must reject it
        return LocalRules(
            transversal={k: -s for k, s in self.transversal.items()},
            corner=self.corner,
        )

    @property
    def over_under(self) -> int:
        return self.transversal[(OVER, UNDER)]

    @property
    def under_over(self) -> int:
        return self.transversal[(UNDER, OVER)]


DEFAULT_RULES = LocalRules()
