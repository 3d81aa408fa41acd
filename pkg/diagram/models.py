"""
In-memory value types for based Gauss diagrams. Nothing here is persisted;
construction and validation go through diagram.services.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from diagram.constants import OVER, OVER_FIRST, UNDER, UNDER_FIRST


@dataclass(frozen=True)
class Passage:
    crossing: int
    role: str

    def switched(self) -> "Passage":
        return Passage(self.crossing, UNDER if self.role == OVER else OVER)

    def relabeled(self, mapping: Mapping[int, int]) -> "Passage":
        return Passage(mapping[self.crossing], self.role)


@dataclass(frozen=True)
class GaussDiagram:
    passages: tuple[Passage, ...] = ()
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "passages", tuple(self.passages))
        object.__setattr__(self, "signs", MappingProxyType(dict(self.signs)))

    def __hash__(self):
        return hash((self.passages, tuple(sorted(self.signs.items()))))

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.passages == other.passages and dict(self.signs) == dict(
            other.signs
        )

    def __len__(self):
        return len(self.passages)

    @property
    def n(self) -> int:
        return len(self.signs)

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    @cached_property
    def positions(self) -> Mapping[int, tuple[int, int]]:
        """crossing id -> (index of over passage, index of under passage)"""
        over, under = {}, {}
        for k, p in enumerate(self.passages):
            (over if p.role == OVER else under)[p.crossing] = k
        return MappingProxyType({c: (over[c], under[c]) for c in over})

    def interval(self, crossing: int) -> tuple[int, int]:
        p, q = self.positions[crossing]
        return (p, q) if p < q else (q, p)

    def crossing_type(self, crossing: int) -> int:
        p, q = self.positions[crossing]
        return OVER_FIRST if p < q else UNDER_FIRST


class LongDiagram(GaussDiagram):
    """Passages read from -inf to +inf along the long strand."""

    pass


class ClosedDiagram(GaussDiagram):
    """Cyclic passage sequence; index 0 is an arbitrary starting point."""

    pass
