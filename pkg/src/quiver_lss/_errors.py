"""Exception hierarchy for quiver-lss.

Every error raised on purpose by the library derives from QuiverLssError, so
callers (and the CLI) can separate domain failures from programming errors.
Each error has a stable ``code`` and a ``details`` mapping for JSON reports.
"""

from __future__ import annotations

from typing import Any


class QuiverLssError(Exception):
    """Base exception with structured error information."""

    def __init__(self, message: str, *, details: dict[str, Any] | None = None) -> None:
        super().__init__(message)
        self.details = details or {}

    @property
    def code(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict[str, Any]:
        """Convert to a dictionary for JSON output."""
        return {"error": str(self), "code": self.code, "details": self.details}


class ConfigError(QuiverLssError):
    """Error in configuration."""


# Core quiver

class QuiverFileError(QuiverLssError):
    """Syntax or consistency error in a quiver file."""


class OrientedCycleError(QuiverLssError):
    """The quiver has an oriented cycle (a loop counts as one)."""

    def __init__(self, cycle: list[int]) -> None:
        labels = " -> ".join(str(v + 1) for v in [*cycle, cycle[0]])
        super().__init__(f"oriented cycle: {labels}", details={"cycle": [v + 1 for v in cycle]})
        self.cycle = cycle


class ArithmeticOverflowError(QuiverLssError, OverflowError):
    """An integer result left the signed 64-bit range."""


class DimensionMismatchError(QuiverLssError, ValueError):
    """A vector does not match the vertex count of its quiver."""


class PreconditionError(QuiverLssError, ValueError):
    """An operation was called outside its domain."""


# Generic decomposition

class DecompositionOrderError(QuiverLssError):
    """Generic decomposition terms could not be put in perpendicular order."""


# Local quivers and perpendicular categories

class LocalQuiverError(QuiverLssError):
    """A root sequence does not define a local quiver."""


class NegativeArrowCountError(LocalQuiverError):
    def __init__(self, i: int, j: int, count: int) -> None:
        super().__init__(
            f"negative arrow count {count} from member {i + 1} to member {j + 1}",
            details={"i": i + 1, "j": j + 1, "count": count},
        )


class HomNotTrivialError(LocalQuiverError):
    def __init__(self, i: int, j: int, hom: int) -> None:
        super().__init__(
            f"hom(member {i + 1}, member {j + 1}) = {hom}, expected 0",
            details={"i": i + 1, "j": j + 1, "hom": hom},
        )


class NonLoopCycleError(LocalQuiverError):
    """The loop-stripped local quiver has an oriented cycle."""


class PerpError(QuiverLssError):
    """Failure while computing a perpendicular category."""


class NotRealSchurRootError(PerpError):
    pass


class SummandCountMismatchError(PerpError):
    pass


class NoWhiteSinkError(PerpError):
    """Recovering simples from projectives (or injectives) deadlocked."""


class ExpansionError(QuiverLssError):
    """A vector is not a nonnegative integer combination of a basis."""


class NonIntegerExpansionError(ExpansionError):
    pass


class NegativeExpansionError(ExpansionError):
    pass


# Locally semi-simple decompositions

class PushPreconditionError(QuiverLssError):
    """A pushing step was requested on a pair that does not allow it."""


class LssStageError(QuiverLssError):
    """An internal assertion of the lss algorithm failed."""

    def __init__(self, stage: int, message: str) -> None:
        super().__init__(f"stage {stage}: {message}", details={"stage": stage})
        self.stage = stage


class NotPrehomogeneousError(QuiverLssError):
    pass


# Oracle

class OracleError(QuiverLssError):
    pass


class NegativeExtError(OracleError):
    """Sampled hom fell below the Euler form; samples were unlucky."""
