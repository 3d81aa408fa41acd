from dataclasses import dataclass, field

from laurent.models import LaurentPoly


@dataclass(frozen=True)
class Target:
    family: str
    a: int
    b: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.a}{self.b}"

    @property
    def diagonal(self) -> bool:
        return self.a == self.b

    def swapped(self) -> "Target":
        return Target(self.family, 1 - self.a, 1 - self.b)


@dataclass(frozen=True)
class GenusBounds:
    """
    Bounds on the 1- and 2-supporting genus. Lower bounds come from the
    polynomial obstructions, upper bounds from the diagram's own surfaces.
    reasons says which obstruction raised each lower bound.
    """

    sg1_lower: int
    sg1_upper: int
    sg2_lower: int
    sg2_upper: int
    reasons: tuple[str, ...] = field(default_factory=tuple)

    @property
    def sg1(self) -> tuple[int, int]:
        return self.sg1_lower, self.sg1_upper

    @property
    def sg2(self) -> tuple[int, int]:
        return self.sg2_lower, self.sg2_upper


@dataclass(frozen=True)
class RealizationReport:
    target: str
    expected: LaurentPoly
    actual: LaurentPoly
    genus: int
    crossings: int

    @property
    def passed(self) -> bool:
        return self.expected == self.actual and self.genus <= 1
