"""
Virtual 2-string tangles. Both strands run left to right; crossing ids are
shared between them and every id occurs exactly twice overall.
"""

from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

from diagram.models import Passage
from laurent.models import LaurentPoly
from tangle.constants import STRAND_A, STRAND_B


@dataclass(frozen=True)
class TangleDiagram:
    strand_a: tuple[Passage, ...] = ()
    strand_b: tuple[Passage, ...] = ()
    signs: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "strand_a", tuple(self.strand_a))
        object.__setattr__(self, "strand_b", tuple(self.strand_b))
        object.__setattr__(self, "signs", MappingProxyType(dict(self.signs)))

    def __hash__(self):
        return hash((self.strand_a, self.strand_b, tuple(sorted(self.signs.items()))))

    def __eq__(self, other):
        if not isinstance(other, TangleDiagram):
            return NotImplemented
        return (
            self.strand_a == other.strand_a
            and self.strand_b == other.strand_b
            and dict(self.signs) == dict(other.signs)
        )

    @property
    def n(self) -> int:
        return len(self.signs)

    @cached_property
    def ids(self) -> tuple[int, ...]:
        return tuple(sorted(self.signs))

    @cached_property
    def strands_of(self) -> Mapping[int, tuple[str, str]]:
        """crossing id -> (strand of its first passage, strand of its second)"""
        seen = {}
        for label, strand in ((STRAND_A, self.strand_a), (STRAND_B, self.strand_b)):
            for p in strand:
                seen.setdefault(p.crossing, []).append(label)
        return MappingProxyType({c: tuple(s) for c, s in seen.items()})


@dataclass(frozen=True)
class TangleInvariants:
    """
    U[a, X]: sum of eps (t^v - 1) over self crossings of strand X with type a.
    V[a]: sum of eps t^v over mixed crossings that are type a in the right closure.
    linking[a] = V[a](1).
    """

    U: Mapping[tuple[int, str], LaurentPoly]
    V: Mapping[int, LaurentPoly]
    linking: Mapping[int, int]

    def __post_init__(self):
        for name in ("U", "V", "linking"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))

    def U_total(self, a: int) -> LaurentPoly:
        return self.U[a, STRAND_A] + self.U[a, STRAND_B]
