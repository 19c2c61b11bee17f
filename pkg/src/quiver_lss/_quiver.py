"""Quiver data model, file format, Euler/Tits forms and path counting.

Quiver file format: one statement per line, comments start with #.

    vertices <n>
    arrow <tail> <head>

Vertices are numbered 1..n in files and on the command line, 0..n-1 inside
the library. Parallel arrows are written by repeating the ``arrow`` line.

Example:
    # Kronecker quiver with two arrows
    vertices 2
    arrow 1 2
    arrow 1 2
"""

from __future__ import annotations

import heapq
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from quiver_lss._errors import (
    ArithmeticOverflowError,
    DimensionMismatchError,
    OrientedCycleError,
    PreconditionError,
    QuiverFileError,
)

DimVector = tuple[int, ...]
Weight = tuple[int, ...]

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def checked(value: int, what: str = "value") -> int:
    """Return value, or raise if it does not fit a signed 64-bit integer."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise ArithmeticOverflowError(f"{what} overflows 64-bit range: {value}")
    return value


@dataclass(frozen=True, slots=True)
class Quiver:
    """A finite quiver: n vertices and a list of (tail, head) arrows.

    Arrows are stored individually, so parallel arrows appear repeatedly and
    a file round-trips exactly. Loops and cycles are representable (local
    quivers carry loops); algorithms that need acyclicity check it through
    topological_order.
    """

    n: int
    arrows: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] = ()
    _counts: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    _weighted: tuple[tuple[int, int, int], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise PreconditionError(f"vertex count must be nonnegative, got {self.n}")
        arrows = tuple((int(t), int(h)) for t, h in self.arrows)
        for t, h in arrows:
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise PreconditionError(
                    f"arrow {t + 1} -> {h + 1} references a vertex outside 1..{self.n}"
                )
        object.__setattr__(self, "arrows", arrows)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v + 1) for v in range(self.n)))
        elif len(self.labels) != self.n:
            raise PreconditionError(f"{len(self.labels)} labels given for {self.n} vertices")

        counts = [[0] * self.n for _ in range(self.n)]
        for t, h in arrows:
            counts[t][h] += 1
        object.__setattr__(self, "_counts", tuple(tuple(row) for row in counts))
        object.__setattr__(
            self,
            "_weighted",
            tuple(
                (t, h, counts[t][h]) for t in range(self.n) for h in range(self.n) if counts[t][h]
            ),
        )

    def arrow_count(self, tail: int, head: int) -> int:
        """Number of arrows tail -> head."""
        return self._counts[tail][head]

    def loop_count(self, vertex: int) -> int:
        """Number of loops at a 0-based vertex."""
        return self._counts[vertex][vertex]

    def without_loops(self) -> Quiver:
        """The same quiver with every loop removed."""
        return Quiver(self.n, tuple((t, h) for t, h in self.arrows if t != h), self.labels)


def arrow_matrix(quiver: Quiver) -> tuple[tuple[int, ...], ...]:
    """The n x n matrix of arrow counts."""
    return quiver._counts


class RootClass(Enum):
    """Classification of a dimension vector by its Tits form value."""

    REAL = "real"
    ISOTROPIC = "isotropic"
    STRICTLY_IMAGINARY = "strictly-imaginary"
    NOT_A_ROOT = "not-a-root"

    @property
    def is_imaginary(self) -> bool:
        return self in (RootClass.ISOTROPIC, RootClass.STRICTLY_IMAGINARY)

    @classmethod
    def from_tits(cls, q: int) -> RootClass:
        if q == 1:
            return cls.REAL
        if q == 0:
            return cls.ISOTROPIC
        if q < 0:
            return cls.STRICTLY_IMAGINARY
        return cls.NOT_A_ROOT


# ============================================================================
# Vectors
# ============================================================================


def check_vector(quiver: Quiver, vector: Iterable[int], name: str = "vector") -> DimVector:
    """Validate a dimension vector against a quiver and return it as a tuple."""
    v = tuple(int(x) for x in vector)
    if len(v) != quiver.n:
        raise DimensionMismatchError(f"{name} has length {len(v)}, quiver has {quiver.n} vertices")
    if any(x < 0 for x in v):
        raise PreconditionError(f"{name} has a negative entry: {v}")
    return v


def unit_vector(n: int, a: int) -> DimVector:
    """The dimension vector of the simple at vertex a (0-based) among n vertices."""
    return tuple(1 if v == a else 0 for v in range(n))


def vadd(a: Sequence[int], b: Sequence[int]) -> DimVector:
    """Componentwise a + b."""
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a: Sequence[int], b: Sequence[int]) -> DimVector:
    """Componentwise a - b."""
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vscale(k: int, a: Sequence[int]) -> DimVector:
    """k * a."""
    return tuple(k * x for x in a)


def is_zero(a: Sequence[int]) -> bool:
    return all(x == 0 for x in a)


def leq(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise a <= b."""
    return all(x <= y for x, y in zip(a, b, strict=True))


def combine(coefficients: Sequence[int], vectors: Sequence[Sequence[int]], n: int) -> DimVector:
    """The linear combination sum(c_k * v_k) as an n-vector."""
    total = [0] * n
    for c, v in zip(coefficients, vectors, strict=True):
        for i, x in enumerate(v):
            total[i] += c * x
    return tuple(total)


def subvectors(a: Sequence[int]) -> Iterator[DimVector]:
    """All b with 0 <= b <= a, in lexicographic order."""
    if not a:
        yield ()
        return
    for head in range(a[0] + 1):
        for tail in subvectors(a[1:]):
            yield (head, *tail)


# ============================================================================
# Forms
# ============================================================================


def euler_form(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """The Euler form <a, b> = sum_v a_v b_v - sum_arrows a_t b_h.

    Raises:
        DimensionMismatchError: If a vector length differs from the vertex count.
        ArithmeticOverflowError: If the result leaves the 64-bit range.
    """
    if len(a) != quiver.n or len(b) != quiver.n:
        raise DimensionMismatchError(
            f"vectors of length {len(a)} and {len(b)} on a quiver with {quiver.n} vertices"
        )
    value = sum(x * y for x, y in zip(a, b))
    for t, h, count in quiver._weighted:
        value -= count * a[t] * b[h]
    return checked(value, "Euler form")


def tits_form(quiver: Quiver, a: Sequence[int]) -> tuple[int, RootClass]:
    """The Tits form q(a) = <a, a> together with the root class it implies."""
    q = euler_form(quiver, a, a)
    return q, RootClass.from_tits(q)


def root_class(quiver: Quiver, a: Sequence[int]) -> RootClass:
    """Classify a by its Tits form; see tits_form."""
    return tits_form(quiver, a)[1]


# ============================================================================
# Order and paths
# ============================================================================


def topological_order(quiver: Quiver) -> list[int]:
    """Order the vertices so that every arrow goes from an earlier to a later one.

    Among the available vertices the smallest index is always taken first,
    so the order is deterministic.

    Raises:
        OrientedCycleError: With one cycle, if the quiver is not acyclic.
    """
    indegree = [0] * quiver.n
    successors: list[list[int]] = [[] for _ in range(quiver.n)]
    for t, h in quiver.arrows:
        indegree[h] += 1
        successors[t].append(h)

    ready = [v for v in range(quiver.n) if indegree[v] == 0]
    heapq.heapify(ready)
    order: list[int] = []
    while ready:
        v = heapq.heappop(ready)
        order.append(v)
        for h in successors[v]:
            indegree[h] -= 1
            if indegree[h] == 0:
                heapq.heappush(ready, h)

    if len(order) < quiver.n:
        raise OrientedCycleError(_find_cycle(quiver, set(range(quiver.n)) - set(order)))
    return order


def _find_cycle(quiver: Quiver, remaining: set[int]) -> list[int]:
    # Every vertex left after Kahn's algorithm has a predecessor that is also left.
    predecessor: dict[int, int] = {}
    for t, h in quiver.arrows:
        if t in remaining and h in remaining:
            predecessor.setdefault(h, t)

    walk: list[int] = []
    seen: dict[int, int] = {}
    v = min(remaining)
    while v not in seen:
        seen[v] = len(walk)
        walk.append(v)
        v = predecessor[v]
    cycle = walk[seen[v]:]
    cycle.reverse()
    return cycle


def path_counts(quiver: Quiver) -> list[list[int]]:
    """counts[u][v] = number of oriented paths u -> v, trivial paths included."""
    order = topological_order(quiver)
    counts = [[0] * quiver.n for _ in range(quiver.n)]
    for u in reversed(order):
        row = counts[u]
        row[u] = 1
        for t, h in quiver.arrows:
            if t == u:
                for v in range(quiver.n):
                    row[v] = checked(row[v] + counts[h][v], "path count")
    return counts


def projective_dims(quiver: Quiver) -> list[DimVector]:
    """Dimension vectors of the indecomposable projectives P_1, ..., P_n."""
    counts = path_counts(quiver)
    return [tuple(counts[a]) for a in range(quiver.n)]


def injective_dims(quiver: Quiver) -> list[DimVector]:
    """Dimension vectors of the indecomposable injectives I_1, ..., I_n."""
    counts = path_counts(quiver)
    return [tuple(counts[v][a] for v in range(quiver.n)) for a in range(quiver.n)]


# ============================================================================
# File format
# ============================================================================


def _parse_index(token: str, n: int, line_number: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise QuiverFileError(
            f"Line {line_number}: invalid vertex '{token}'", details={"line": line_number}
        ) from None
    if not 1 <= value <= n:
        raise QuiverFileError(
            f"Line {line_number}: vertex {value} out of range 1..{n}",
            details={"line": line_number, "vertex": value},
        )
    return value - 1


def _parse_count(words: list[str], line: str, line_number: int) -> int:
    # isdecimal rejects superscripts and other digit-like characters int() refuses
    if len(words) == 2 and words[1].isdecimal():
        try:
            return int(words[1])
        except ValueError:
            pass
    raise QuiverFileError(
        f"Line {line_number}: expected 'vertices <n>', got '{line}'",
        details={"line": line_number},
    )


def parse_quiver(text: str, *, allow_cycles: bool = False) -> Quiver:
    """Parse a quiver file.

    Args:
        text: The file contents.
        allow_cycles: Accept loops and oriented cycles. The decomposition and
            perpendicular algorithms need acyclic quivers, so this is off by default.

    Returns:
        The quiver with arrows in file order.

    Raises:
        QuiverFileError: On a syntax error (with line number), an arrow
            referencing a missing vertex, or a missing/conflicting vertex count.
        OrientedCycleError: If the quiver has a loop or cycle and allow_cycles is False.
    """
    n: int | None = None
    arrows: list[tuple[int, int]] = []

    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        words = line.split()
        keyword = words[0]
        if keyword == "vertices":
            declared = _parse_count(words, line, line_number)
            if n is not None and declared != n:
                raise QuiverFileError(
                    f"Line {line_number}: vertex count {declared} conflicts with earlier {n}",
                    details={"line": line_number},
                )
            if arrows and n is None:
                raise QuiverFileError(
                    f"Line {line_number}: 'vertices' must precede all arrows",
                    details={"line": line_number},
                )
            n = declared
        elif keyword == "arrow":
            if n is None:
                raise QuiverFileError(
                    f"Line {line_number}: arrow before 'vertices' declaration",
                    details={"line": line_number},
                )
            if len(words) != 3:
                raise QuiverFileError(
                    f"Line {line_number}: expected 'arrow <tail> <head>', got '{line}'",
                    details={"line": line_number},
                )
            arrows.append(
                (_parse_index(words[1], n, line_number), _parse_index(words[2], n, line_number))
            )
        else:
            raise QuiverFileError(
                f"Line {line_number}: unknown statement '{keyword}'", details={"line": line_number}
            )

    if n is None:
        raise QuiverFileError("missing 'vertices <n>' declaration")

    quiver = Quiver(n, tuple(arrows))
    if not allow_cycles:
        topological_order(quiver)
    return quiver


def load_quiver(path: str | os.PathLike[str], *, allow_cycles: bool = False) -> Quiver:
    """Load a quiver file.

    Raises:
        FileNotFoundError: If the file doesn't exist.
        QuiverFileError: If the file is malformed or not UTF-8.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise QuiverFileError(
            f"{path}: not UTF-8 text (byte {e.start})", details={"path": str(path)}
        ) from None
    return parse_quiver(text, allow_cycles=allow_cycles)


def format_quiver(quiver: Quiver) -> str:
    """Inverse of parse_quiver."""
    lines = [f"vertices {quiver.n}"]
    lines.extend(f"arrow {t + 1} {h + 1}" for t, h in quiver.arrows)
    return "\n".join(lines) + "\n"


def parse_dim_vector(text: str, n: int) -> DimVector:
    """Parse the CLI vector syntax "2,3"."""
    try:
        v = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise PreconditionError(f"invalid dimension vector '{text}'") from None
    if len(v) != n:
        raise DimensionMismatchError(f"dimension vector '{text}' has length {len(v)}, expected {n}")
    if any(x < 0 for x in v):
        raise PreconditionError(f"dimension vector '{text}' has a negative entry")
    return v


def parse_root_sequence(text: str, n: int) -> list[DimVector]:
    """Parse the CLI sequence syntax "a,b;c,d". An empty string is the empty sequence."""
    text = text.strip()
    if not text:
        return []
    return [parse_dim_vector(part.strip(), n) for part in text.split(";")]
