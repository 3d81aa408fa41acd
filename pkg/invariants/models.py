from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from types import MappingProxyType

from invariants.constants import POLY_NAMES
from laurent.models import LaurentPoly


@dataclass(frozen=True)
class InvariantBundle:
    W: Mapping[int, LaurentPoly]
    F: Mapping[tuple[int, int], LaurentPoly]
    G: Mapping[tuple[int, int], LaurentPoly]
    H: Mapping[tuple[int, int], LaurentPoly]
    omega: Mapping[int, int]

    def __post_init__(self):
        for name in ("W", "F", "G", "H", "omega"):
            object.__setattr__(self, name, MappingProxyType(dict(getattr(self, name))))

    def __hash__(self):
        return hash(tuple(self.items()))

    def __getitem__(self, name: str) -> LaurentPoly:
        """bundle["W0"], bundle["G10"], ..."""
        if name not in POLY_NAMES:
            raise KeyError(name)
        family, digits = name[0], tuple(int(d) for d in name[1:])
        if family == "W":
            return self.W[digits[0]]
        return getattr(self, family)[digits]

    def items(self) -> Iterator[tuple[str, LaurentPoly]]:
        for name in POLY_NAMES:
            yield name, self[name]


@dataclass(frozen=True)
class IdentityCheck:
    identity: str
    subject: str
    passed: bool
    left: LaurentPoly | int
    right: LaurentPoly | int

    @property
    def label(self) -> str:
        return f"{self.identity} {self.subject}".strip()


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...] = field(default_factory=tuple)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[IdentityCheck]:
        return [c for c in self.checks if not c.passed]

    def identities(self) -> set[str]:
        return {c.identity for c in self.checks}
