from dataclasses import dataclass


@dataclass(frozen=True)
class Counterexample:
    """First failing check of a fuzz run, with enough to replay it."""

    iteration: int
    check: str
    diagram: str
    other: str | None
    details: tuple[str, ...]


@dataclass(frozen=True)
class FuzzReport:
    seed: int
    iterations: int
    checks: int
    mutant: bool = False
    counterexample: Counterexample | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None
