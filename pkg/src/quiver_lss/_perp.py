"""Local quivers and perpendicular categories of real Schur roots.

For a real Schur root g with generic representation W, the right
perpendicular category W^perp (Hom(W, -) = 0 = Ext(W, -)) is equivalent to
the representations of an acyclic quiver with n - 1 vertices. Its simple
objects are computed from the generic decompositions of the corrected
projectives P_a - <g, P_a> g, followed by an elimination that turns
projective dimension vectors into simple ones. The left category ^perp W
is the dual computation with injectives.

Perpendicular categories of sequences are obtained one root at a time,
working inside the category built so far.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Literal

from quiver_lss._errors import (
    HomNotTrivialError,
    NegativeArrowCountError,
    NonLoopCycleError,
    NoWhiteSinkError,
    NotRealSchurRootError,
    OrientedCycleError,
    PerpError,
    PreconditionError,
    SummandCountMismatchError,
)
from quiver_lss._homext import generic_decomposition, generic_ext, generic_hom, is_schur_root
from quiver_lss._linalg import expand_in_basis
from quiver_lss._quiver import (
    DimVector,
    Quiver,
    check_vector,
    combine,
    euler_form,
    injective_dims,
    is_zero,
    projective_dims,
    root_class,
    tits_form,
    topological_order,
    unit_vector,
    vscale,
    vsub,
)

Side = Literal["right", "left"]


@dataclass(frozen=True, slots=True)
class RootSequence:
    """An ordered sequence of roots of a quiver, with optional multiplicities."""

    quiver: Quiver
    roots: tuple[DimVector, ...]
    mults: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "roots", tuple(check_vector(self.quiver, r, "root") for r in self.roots)
        )
        if self.mults is not None:
            if len(self.mults) != len(self.roots):
                raise PreconditionError(
                    f"{len(self.mults)} multiplicities for {len(self.roots)} roots"
                )
            if any(m < 1 for m in self.mults):
                raise PreconditionError(f"multiplicities must be positive: {self.mults}")


@dataclass(frozen=True, slots=True)
class LocalQuiver:
    """The quiver on the members of a root sequence.

    There are delta_ij - <root_i, root_j> arrows i -> j; gamma holds the
    multiplicities, i.e. the dimension vector on the local quiver.
    """

    quiver: Quiver
    source_sequence: RootSequence
    gamma: DimVector = field(default=())

    def loop_counts(self) -> tuple[int, ...]:
        return tuple(self.quiver.loop_count(v) for v in range(self.quiver.n))

    def is_acyclic_except_loops(self) -> bool:
        try:
            topological_order(self.quiver.without_loops())
        except OrientedCycleError:
            return False
        return True


def _euler_quiver(quiver: Quiver, roots: Sequence[DimVector]) -> Quiver:
    """The quiver with delta_ij - <root_i, root_j> arrows i -> j."""
    arrows: list[tuple[int, int]] = []
    for i, ri in enumerate(roots):
        for j, rj in enumerate(roots):
            count = (1 if i == j else 0) - euler_form(quiver, ri, rj)
            if count < 0:
                raise NegativeArrowCountError(i, j, count)
            arrows.extend([(i, j)] * count)
    return Quiver(len(roots), tuple(arrows))


def _check_trivial_homs(quiver: Quiver, roots: Sequence[DimVector]) -> None:
    for i, ri in enumerate(roots):
        for j, rj in enumerate(roots):
            if i != j:
                hom = generic_hom(quiver, ri, rj)
                if hom != 0:
                    raise HomNotTrivialError(i, j, hom)


def local_quiver(
    quiver: Quiver, roots: Sequence[Sequence[int]], mults: Sequence[int] | None = None
) -> LocalQuiver:
    """The local quiver of a sequence with pairwise trivial generic homs.

    Raises:
        HomNotTrivialError: If hom(root_i, root_j) != 0 for some i != j.
        NegativeArrowCountError: If delta_ij - <root_i, root_j> < 0.
    """
    seq = RootSequence(quiver, tuple(roots), tuple(mults) if mults is not None else None)
    _check_trivial_homs(quiver, seq.roots)
    gamma = seq.mults if seq.mults is not None else tuple(1 for _ in seq.roots)
    return LocalQuiver(_euler_quiver(quiver, seq.roots), seq, gamma)


def _order_by_local_quiver(quiver: Quiver, roots: Sequence[DimVector]) -> list[int]:
    # Non-loop arrows i -> j of the local quiver must end up going from a later
    # to an earlier position, so j has to precede i.
    sigma = _euler_quiver(quiver, roots)
    constraints = tuple((h, t) for t, h in sigma.arrows if t != h)
    try:
        return topological_order(Quiver(len(roots), constraints))
    except OrientedCycleError as e:
        raise NonLoopCycleError(
            f"local quiver has an oriented cycle through {[roots[v] for v in e.cycle]}",
            details={"cycle": [list(roots[v]) for v in e.cycle]},
        ) from None


def canonical_order(
    quiver: Quiver, roots: Sequence[Sequence[int]], mults: Sequence[int] | None = None
) -> RootSequence:
    """Reorder a sequence with trivial mutual homs into a perpendicular sequence.

    Members not forced apart by the local quiver keep their input order.

    Raises:
        HomNotTrivialError: If two members have a nonzero generic hom.
        NonLoopCycleError: If the local quiver has a cycle other than a loop.
    """
    seq = RootSequence(quiver, tuple(roots), tuple(mults) if mults is not None else None)
    _check_trivial_homs(quiver, seq.roots)
    order = _order_by_local_quiver(quiver, seq.roots)
    return RootSequence(
        quiver,
        tuple(seq.roots[i] for i in order),
        tuple(seq.mults[i] for i in order) if seq.mults is not None else None,
    )


@dataclass(frozen=True, slots=True)
class QuiverSchurReport:
    """Result of is_quiver_schur_sequence."""

    perpendicular: bool
    euler_nonpos: bool
    circ_checked: bool
    unchecked_pairs: tuple[tuple[int, int], ...] = ()

    @property
    def is_quiver_schur(self) -> bool:
        return self.perpendicular and self.euler_nonpos

    def to_dict(self) -> dict[str, object]:
        return {
            "perpendicular": self.perpendicular,
            "euler_nonpos": self.euler_nonpos,
            "circ_checked": self.circ_checked,
            "unchecked_pairs": [[i + 1, j + 1] for i, j in self.unchecked_pairs],
        }


def is_quiver_schur_sequence(quiver: Quiver, roots: Sequence[Sequence[int]]) -> QuiverSchurReport:
    """Check the quiver Schur conditions on a root sequence.

    The one-dimensionality of cross semi-invariants is automatic when at
    least one root of a pair is real; pairs of distinct imaginary roots are
    reported as unchecked.
    """
    seq = [check_vector(quiver, r, "root") for r in roots]

    perpendicular = all(not is_zero(r) and is_schur_root(quiver, r) for r in seq)
    euler_nonpos = True
    unchecked: list[tuple[int, int]] = []
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if perpendicular and (
                generic_hom(quiver, seq[i], seq[j]) != 0 or generic_ext(quiver, seq[i], seq[j]) != 0
            ):
                perpendicular = False
            if euler_form(quiver, seq[j], seq[i]) > 0:
                euler_nonpos = False
            if (
                seq[i] != seq[j]
                and root_class(quiver, seq[i]).is_imaginary
                and root_class(quiver, seq[j]).is_imaginary
            ):
                unchecked.append((i, j))

    return QuiverSchurReport(perpendicular, euler_nonpos, not unchecked, tuple(unchecked))


# ============================================================================
# Perpendicular category of one real Schur root
# ============================================================================


def _recover_simples(quiver: Quiver, betas: list[DimVector], side: Side) -> list[DimVector]:
    """Turn projective (right) or injective (left) dimension vectors into simple ones."""

    def form(k: int, j: int) -> int:
        if side == "right":
            return euler_form(quiver, betas[k], betas[j])
        return euler_form(quiver, betas[j], betas[k])

    alphas: list[DimVector | None] = [None] * len(betas)
    white = list(range(len(betas)))
    black: list[int] = []
    while white:
        chosen = next(
            (j for j in white if all(form(k, j) == 0 for k in white if k != j)), None
        )
        if chosen is None:
            raise NoWhiteSinkError(
                f"no eligible entry among {[betas[j] for j in white]}",
                details={"white": [list(betas[j]) for j in white]},
            )
        alpha = betas[chosen]
        for k in black:
            alpha = vsub(alpha, vscale(form(k, chosen), alphas[k]))
        if any(x < 0 for x in alpha):
            raise PerpError(f"recovered simple {alpha} has a negative entry")
        alphas[chosen] = alpha
        white.remove(chosen)
        black.append(chosen)
    return [a for a in alphas if a is not None]


def _perp_schur(quiver: Quiver, g: DimVector, side: Side) -> list[DimVector]:
    q, _ = tits_form(quiver, g)
    if is_zero(g) or q != 1 or not is_schur_root(quiver, g):
        raise NotRealSchurRootError(
            f"{g} is not a real Schur root (Tits form {q})", details={"root": list(g)}
        )

    dims = projective_dims(quiver) if side == "right" else injective_dims(quiver)
    if g in dims:
        skip = dims.index(g)
        return [unit_vector(quiver.n, v) for v in range(quiver.n) if v != skip]

    summands: list[DimVector] = []
    for d in dims:
        k = euler_form(quiver, g, d) if side == "right" else euler_form(quiver, d, g)
        corrected = vsub(d, vscale(k, g))
        if is_zero(corrected):
            continue
        for term in generic_decomposition(quiver, corrected).terms:
            if term.root not in summands:
                summands.append(term.root)

    if len(summands) != quiver.n - 1:
        raise SummandCountMismatchError(
            f"expected {quiver.n - 1} distinct summands, found {len(summands)}: {summands}",
            details={"summands": [list(s) for s in summands]},
        )
    return _recover_simples(quiver, summands, side)


def right_perp_schur(quiver: Quiver, g: Sequence[int]) -> list[DimVector]:
    """Dimension vectors of the n - 1 simple objects of W^perp, W generic of dimension g.

    Raises:
        OrientedCycleError: If the quiver is not acyclic.
        NotRealSchurRootError: If g is not a real Schur root.
        SummandCountMismatchError: If the corrected projectives do not yield n - 1 summands.
        NoWhiteSinkError: If the simples cannot be recovered.
    """
    topological_order(quiver)
    return _perp_schur(quiver, check_vector(quiver, g, "g"), "right")


def left_perp_schur(quiver: Quiver, g: Sequence[int]) -> list[DimVector]:
    """Dimension vectors of the n - 1 simple objects of ^perp W, W generic of dimension g."""
    topological_order(quiver)
    return _perp_schur(quiver, check_vector(quiver, g, "g"), "left")


# ============================================================================
# Perpendicular category of a sequence
# ============================================================================


def _perp_sequence(
    quiver: Quiver, roots: Sequence[Sequence[int]], side: Side
) -> list[DimVector]:
    order = topological_order(quiver)
    seq = [check_vector(quiver, r, "root") for r in roots]
    if len(seq) > quiver.n:
        raise PreconditionError(f"{len(seq)} roots on a quiver with {quiver.n} vertices")
    if not seq:
        return [unit_vector(quiver.n, v) for v in reversed(order)]

    current = [unit_vector(quiver.n, v) for v in range(quiver.n)]
    for root in seq if side == "right" else reversed(seq):
        sigma = _euler_quiver(quiver, current)
        gamma = expand_in_basis(current, root)
        simples = _perp_schur(sigma, gamma, side)
        current = [combine(s, current, quiver.n) for s in simples]

    return [current[i] for i in _order_by_local_quiver(quiver, current)]


def right_perp_sequence(quiver: Quiver, roots: Sequence[Sequence[int]]) -> list[DimVector]:
    """The n - t simple objects of the right perpendicular category of a sequence.

    The input must be a perpendicular sequence of real Schur roots. The
    result is itself ordered as a perpendicular sequence; for the empty input
    it is the unit vectors in reverse topological order.

    Raises:
        NonIntegerExpansionError, NegativeExpansionError: If a root does not
            lie in the category built from the roots before it.
        PerpError: Propagated from right_perp_schur.
    """
    return _perp_sequence(quiver, roots, "right")


def left_perp_sequence(quiver: Quiver, roots: Sequence[Sequence[int]]) -> list[DimVector]:
    """The n - t simple objects of the left perpendicular category of a sequence."""
    return _perp_sequence(quiver, roots, "left")


def perp_sequence(quiver: Quiver, roots: Sequence[Sequence[int]], side: Side) -> list[DimVector]:
    if side not in ("right", "left"):
        raise PreconditionError(f"side must be 'right' or 'left', got {side!r}")
    return _perp_sequence(quiver, roots, side)


def perp_schur(quiver: Quiver, g: Sequence[int], side: Side) -> list[DimVector]:
    if side == "right":
        return right_perp_schur(quiver, g)
    if side == "left":
        return left_perp_schur(quiver, g)
    raise PreconditionError(f"side must be 'right' or 'left', got {side!r}")


__all__ = [
    "LocalQuiver",
    "QuiverSchurReport",
    "RootSequence",
    "Side",
    "canonical_order",
    "is_quiver_schur_sequence",
    "left_perp_schur",
    "left_perp_sequence",
    "local_quiver",
    "perp_schur",
    "perp_sequence",
    "right_perp_schur",
    "right_perp_sequence",
]
