"""Exception hierarchy shared by the engine modules."""

from __future__ import annotations

from dataclasses import dataclass


class SatakeError(Exception):
    """Base class for all engine errors."""


class InvalidCartanType(SatakeError, ValueError):
    pass


@dataclass(frozen=True)
class Issue:
    """One violated root-datum invariant."""

    kind: str
    indices: tuple[int, ...]
    message: str

    def __str__(self) -> str:
        where = ",".join(str(i) for i in self.indices)
        return f"{self.kind}[{where}]: {self.message}"


class InvalidRootDatum(SatakeError, ValueError):
    def __init__(self, issues):
        self.issues = list(issues)
        super().__init__("; ".join(str(i) for i in self.issues))


class NotDominant(SatakeError, ValueError):
    pass


class WeylGroupTooLarge(SatakeError):
    def __init__(self, order, cap):
        self.order = order
        self.cap = cap
        super().__init__(f"Weyl group of order {order} exceeds the cap {cap}")


class DatumMismatch(SatakeError, ValueError):
    pass


class NegativeMultiplicity(SatakeError):
    pass


class NonWInvariantInput(SatakeError, ValueError):
    pass


class ParityError(SatakeError, ArithmeticError):
    """An exact halving met an odd value; signals a lattice bookkeeping bug."""


class ResourceCapExceeded(SatakeError):
    pass
