"""Locally semi-simple decompositions.

The generic locally semi-simple decomposition of a dimension vector is the
summand structure of a representation with closed SL-orbit that is generic
among those. It is computed from the generic decomposition in three stages:

1. push every imaginary member to the left of every real one;
2. replace the real tail by the simples of the category it generates;
3. while some later member has positive Euler form against an earlier one,
   push the earlier (imaginary) member right past it.

For prehomogeneous vectors the same decomposition is also available from
double perpendicular categories, together with the full Luna stratification
and the generators of the semi-invariant ring.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from itertools import combinations

from quiver_lss._errors import (
    ExpansionError,
    LocalQuiverError,
    LssStageError,
    NotPrehomogeneousError,
    PerpError,
    PushPreconditionError,
)
from quiver_lss._homext import (
    Decomposition,
    Term,
    _require_acyclic,
    generic_decomposition,
    generic_ext,
    generic_hom,
)
from quiver_lss._linalg import expand_in_basis
from quiver_lss._perp import left_perp_sequence, local_quiver, right_perp_sequence
from quiver_lss._quiver import (
    DimVector,
    Quiver,
    RootClass,
    Weight,
    check_vector,
    euler_form,
    is_zero,
    root_class,
    tits_form,
    unit_vector,
    vscale,
    vsub,
)

# Stage 3 shrinks an imaginary member on every push; this only guards
# against an inconsistent input looping forever.
_MAX_PUSHES = 10_000

RootWithMult = tuple[DimVector, int]


@dataclass(frozen=True, slots=True)
class LssDecomposition(Decomposition):
    """A locally semi-simple decomposition in quiver Schur sequence order.

    Repeated isotropic summands are one member carrying the multiplicity;
    a strictly imaginary member always has multiplicity 1.
    """

    almost_loopless: bool = True

    def to_dict(self) -> dict[str, object]:
        return {
            "total": list(self.total),
            "terms": [t.to_dict() for t in self.terms],
            "almost_loopless": self.almost_loopless,
        }


def is_almost_loopless(quiver: Quiver, pairs: Sequence[RootWithMult]) -> bool:
    roots = [r for r, _ in pairs]
    for root, mult in pairs:
        if root_class(quiver, root) is RootClass.STRICTLY_IMAGINARY and (
            mult != 1 or roots.count(root) != 1
        ):
            return False
    return True


def _build(quiver: Quiver, pairs: Sequence[RootWithMult], total: DimVector) -> LssDecomposition:
    terms = tuple(Term(r, m, root_class(quiver, r)) for r, m in pairs)
    return LssDecomposition(terms, total, is_almost_loopless(quiver, pairs))


def make_almost_loopless(
    quiver: Quiver, pairs: Iterable[tuple[Sequence[int], int]]
) -> list[RootWithMult]:
    """Merge repeated summands.

    A strictly imaginary root b occurring as m1*b + ... + mk*b becomes the
    single root (m1 + ... + mk) * b with multiplicity 1; any other repeated
    root becomes one member with the summed multiplicity. The first
    occurrence fixes the position.
    """
    merged: dict[DimVector, int] = {}
    for root, mult in pairs:
        root = check_vector(quiver, root, "root")
        merged[root] = merged.get(root, 0) + mult
    result: list[RootWithMult] = []
    for root, mult in merged.items():
        if root_class(quiver, root) is RootClass.STRICTLY_IMAGINARY and mult != 1:
            result.append((vscale(mult, root), 1))
        else:
            result.append((root, mult))
    return result


# ============================================================================
# Pushing
# ============================================================================


def _check_pushable(quiver: Quiver, a: DimVector, b: DimVector) -> int:
    if generic_hom(quiver, a, b) != 0:
        raise PushPreconditionError(
            f"hom({a}, {b}) = {generic_hom(quiver, a, b)}, expected 0",
            details={"a": list(a), "b": list(b)},
        )
    if generic_ext(quiver, a, b) != 0 or generic_ext(quiver, b, a) != 0:
        raise PushPreconditionError(
            f"ext between {a} and {b} does not vanish in both directions",
            details={"a": list(a), "b": list(b)},
        )
    p = euler_form(quiver, b, a)
    if p < 0:
        raise PushPreconditionError(
            f"<{b}, {a}> = {p} is negative although ext({b}, {a}) = 0",
            details={"a": list(a), "b": list(b)},
        )
    return p


def _require_imaginary(quiver: Quiver, v: DimVector) -> None:
    q, _ = tits_form(quiver, v)
    if q > 0:
        raise PushPreconditionError(
            f"{v} is not imaginary (Tits form {q})", details={"root": list(v)}
        )


def _nonnegative(v: DimVector, what: str) -> DimVector:
    if any(x < 0 for x in v):
        raise PushPreconditionError(f"{what} {v} has a negative entry", details={"vector": list(v)})
    return v


def push_right(
    quiver: Quiver, first: tuple[Sequence[int], int], second: tuple[Sequence[int], int]
) -> tuple[RootWithMult, RootWithMult]:
    """Push the imaginary member a of the pair (a, b) right past b.

    With p = <b, a> = hom(b, a), the pair (a, m_a), (b, m_b) becomes
    (b, m_b + p * m_a), (a - p * b, m_a). For p = 0 this is a transposition.

    Raises:
        PushPreconditionError: If hom(a, b) != 0, an ext between a and b is
            nonzero, a is real, or the result has a negative entry.
    """
    a, ma = check_vector(quiver, first[0], "a"), first[1]
    b, mb = check_vector(quiver, second[0], "b"), second[1]
    _require_imaginary(quiver, a)
    p = _check_pushable(quiver, a, b)
    c = _nonnegative(vsub(a, vscale(p, b)), "pushed root")
    return (b, mb + p * ma), (c, ma)


def push_left(
    quiver: Quiver, first: tuple[Sequence[int], int], second: tuple[Sequence[int], int]
) -> tuple[RootWithMult, RootWithMult]:
    """Push the imaginary member b of the pair (a, b) left past a.

    With p = <b, a>, the pair becomes (b - p * a, m_b), (a, m_a + p * m_b).
    """
    a, ma = check_vector(quiver, first[0], "a"), first[1]
    b, mb = check_vector(quiver, second[0], "b"), second[1]
    _require_imaginary(quiver, b)
    p = _check_pushable(quiver, a, b)
    c = _nonnegative(vsub(b, vscale(p, a)), "pushed root")
    return (c, mb), (a, ma + p * mb)


def _is_imaginary(quiver: Quiver, v: DimVector) -> bool:
    return tits_form(quiver, v)[0] <= 0


# ============================================================================
# Generic locally semi-simple decomposition
# ============================================================================


def _stage_one(quiver: Quiver, seq: list[RootWithMult]) -> int:
    for i in range(1, len(seq)):
        j = i
        while j > 0 and _is_imaginary(quiver, seq[j][0]) and not _is_imaginary(
            quiver, seq[j - 1][0]
        ):
            try:
                seq[j - 1], seq[j] = push_left(quiver, seq[j - 1], seq[j])
            except PushPreconditionError as e:
                raise LssStageError(1, str(e)) from e
            j -= 1

    s = sum(1 for root, _ in seq if _is_imaginary(quiver, root))
    if any(not _is_imaginary(quiver, root) for root, _ in seq[:s]):
        raise LssStageError(1, f"imaginary members are not all in front: {[r for r, _ in seq]}")
    return s


def _stage_two(quiver: Quiver, tail: list[RootWithMult]) -> list[RootWithMult]:
    if not tail:
        return []
    n = quiver.n
    target = tuple(0 for _ in range(n))
    for root, mult in tail:
        target = tuple(x + mult * y for x, y in zip(target, root, strict=True))
    try:
        simples = left_perp_sequence(quiver, right_perp_sequence(quiver, [r for r, _ in tail]))
        mults = expand_in_basis(simples, target)
    except (ExpansionError, LocalQuiverError, PerpError) as e:
        raise LssStageError(2, str(e)) from e
    if len(simples) != len(tail) or 0 in mults:
        raise LssStageError(
            2, f"real tail {[r for r, _ in tail]} did not map onto {len(tail)} simples"
        )
    return list(zip(simples, mults, strict=True))


def _minimal_segment(quiver: Quiver, seq: list[RootWithMult]) -> tuple[int, int] | None:
    for width in range(1, len(seq)):
        for i in range(len(seq) - width):
            j = i + width
            if euler_form(quiver, seq[j][0], seq[i][0]) > 0:
                return i, j
    return None


def _stage_three(quiver: Quiver, seq: list[RootWithMult]) -> list[RootWithMult]:
    for _ in range(_MAX_PUSHES):
        segment = _minimal_segment(quiver, seq)
        if segment is None:
            return seq
        i, j = segment
        gj = seq[j][0]
        for k in range(i + 1, j):
            if euler_form(quiver, gj, seq[k][0]) != 0:
                raise LssStageError(
                    3, f"<{gj}, {seq[k][0]}> != 0 inside the minimal segment [{i + 1}, {j + 1}]"
                )
        seq.insert(i + 1, seq.pop(j))
        try:
            left, right = push_right(quiver, seq[i], seq[i + 1])
        except PushPreconditionError as e:
            raise LssStageError(3, str(e)) from e
        seq[i] = left
        if is_zero(right[0]):
            del seq[i + 1]
        else:
            seq[i + 1] = right
    raise LssStageError(3, f"no fixed point after {_MAX_PUSHES} pushes")


def generic_lss_decomposition(quiver: Quiver, a: Sequence[int]) -> LssDecomposition:
    """The generic locally semi-simple decomposition of a.

    Returns a quiver Schur sequence with multiplicities, almost loopless,
    with as many members as the generic decomposition of a has terms.

    Raises:
        PreconditionError: If a is zero.
        OrientedCycleError: If the quiver is not acyclic.
        LssStageError: If an internal step of one of the stages fails.
    """
    a = check_vector(quiver, a, "a")
    decomposition = generic_decomposition(quiver, a)
    seq: list[RootWithMult] = [(t.root, t.mult) for t in decomposition.terms]

    s = _stage_one(quiver, seq)
    seq = seq[:s] + _stage_two(quiver, seq[s:])
    seq = _stage_three(quiver, seq)
    return _build(quiver, make_almost_loopless(quiver, seq), a)


# ============================================================================
# Prehomogeneous vectors
# ============================================================================


def is_prehomogeneous(quiver: Quiver, a: Sequence[int]) -> bool:
    """Whether the representation space of a has a dense orbit."""
    return all(t.root_class is RootClass.REAL for t in generic_decomposition(quiver, a).terms)


def _prehomogeneous_perp(quiver: Quiver, b: Sequence[int]) -> tuple[DimVector, list[DimVector]]:
    b = check_vector(quiver, b, "b")
    _require_acyclic(quiver)
    decomposition = generic_decomposition(quiver, b)
    if any(t.root_class is not RootClass.REAL for t in decomposition.terms):
        raise NotPrehomogeneousError(
            f"{b} is not prehomogeneous: {decomposition}", details={"dim": list(b)}
        )
    return b, right_perp_sequence(quiver, decomposition.roots)


def _decompose_over(
    quiver: Quiver, simples: Sequence[DimVector], b: DimVector
) -> LssDecomposition:
    mults = expand_in_basis(simples, b)
    return _build(quiver, [(r, m) for r, m in zip(simples, mults, strict=True) if m > 0], b)


def preh_lss(quiver: Quiver, b: Sequence[int]) -> LssDecomposition:
    """The generic locally semi-simple decomposition of a prehomogeneous vector.

    b is expanded over the left perpendicular category of the right
    perpendicular category of its generic decomposition.

    Raises:
        NotPrehomogeneousError: If b has a non-real generic summand.
        ExpansionError: If b does not expand over the resulting simples.
    """
    b, perp = _prehomogeneous_perp(quiver, b)
    return _decompose_over(quiver, left_perp_sequence(quiver, perp), b)


def semi_invariant_generators(quiver: Quiver, b: Sequence[int]) -> list[tuple[DimVector, Weight]]:
    """Generators of the semi-invariant ring of a prehomogeneous vector.

    One determinantal semi-invariant per member g of the right perpendicular
    category of the generic decomposition, of weight -<., g>.
    """
    _, perp = _prehomogeneous_perp(quiver, b)
    return [(g, _weight(quiver, g)) for g in perp]


def _weight(quiver: Quiver, g: DimVector) -> Weight:
    return tuple(-euler_form(quiver, unit_vector(quiver.n, v), g) for v in range(quiver.n))


def evaluate_weight(weight: Sequence[int], v: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(weight, v, strict=True))


@dataclass(frozen=True, slots=True)
class Stratum:
    """A Luna stratum of a prehomogeneous vector.

    It corresponds to a subsequence of the right perpendicular category;
    exactly the generators in the subsequence are nonzero on it.
    """

    indices: tuple[int, ...]
    subsequence: tuple[DimVector, ...]
    decomposition: LssDecomposition
    nonvanishing: tuple[tuple[DimVector, Weight], ...]

    def is_in_closure_of(self, other: Stratum) -> bool:
        return set(self.indices) <= set(other.indices)

    def to_dict(self) -> dict[str, object]:
        return {
            "subsequence": [list(g) for g in self.subsequence],
            "decomposition": self.decomposition.to_dict(),
            "nonvanishing": [
                {"root": list(g), "weight": list(w)} for g, w in self.nonvanishing
            ],
        }


def luna_strata(quiver: Quiver, b: Sequence[int]) -> list[Stratum]:
    """All Luna strata of a prehomogeneous vector, smallest subsequences first.

    There are 2^(n - t) strata for t generic summands. The stratum of the
    full subsequence is the generic one (preh_lss); the empty subsequence
    gives the decomposition over the simple roots.
    """
    b, perp = _prehomogeneous_perp(quiver, b)
    strata: list[Stratum] = []
    for size in range(len(perp) + 1):
        for indices in combinations(range(len(perp)), size):
            subsequence = tuple(perp[i] for i in indices)
            decomposition = _decompose_over(
                quiver, left_perp_sequence(quiver, subsequence), b
            )
            strata.append(
                Stratum(
                    indices,
                    subsequence,
                    decomposition,
                    tuple((g, _weight(quiver, g)) for g in subsequence),
                )
            )
    return strata


# ============================================================================
# Validation
# ============================================================================


@dataclass(frozen=True, slots=True)
class GenericLssReport:
    """Result of is_generic_lss."""

    almost_loopless: bool
    local_quiver_acyclic: bool
    term_count: int
    expected_term_count: int

    @property
    def passed(self) -> bool:
        return (
            self.almost_loopless
            and self.local_quiver_acyclic
            and self.term_count == self.expected_term_count
        )

    def to_dict(self) -> dict[str, object]:
        return {
            "almost_loopless": self.almost_loopless,
            "local_quiver_acyclic": self.local_quiver_acyclic,
            "term_count": self.term_count,
            "expected_term_count": self.expected_term_count,
            "passed": self.passed,
        }


def is_generic_lss(quiver: Quiver, d: Decomposition) -> GenericLssReport:
    """Check the shape of a candidate generic locally semi-simple decomposition.

    It must be almost loopless, its local quiver must have no oriented cycle
    other than loops, and it must have as many members as the generic
    decomposition of its total.
    """
    pairs = [(t.root, t.mult) for t in d.terms]
    try:
        acyclic = local_quiver(quiver, d.roots, d.mults).is_acyclic_except_loops()
    except LocalQuiverError:
        acyclic = False
    return GenericLssReport(
        almost_loopless=is_almost_loopless(quiver, pairs),
        local_quiver_acyclic=acyclic,
        term_count=len(d.terms),
        expected_term_count=len(generic_decomposition(quiver, d.total).terms),
    )


__all__ = [
    "GenericLssReport",
    "LssDecomposition",
    "Stratum",
    "evaluate_weight",
    "generic_lss_decomposition",
    "is_almost_loopless",
    "is_generic_lss",
    "is_prehomogeneous",
    "luna_strata",
    "make_almost_loopless",
    "preh_lss",
    "push_left",
    "push_right",
    "semi_invariant_generators",
]
