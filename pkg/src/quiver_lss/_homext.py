"""Generic hom/ext dimensions, Schur roots and generic decompositions.

For dimension vectors a, b of an acyclic quiver, ext(a, b) is computed by the
subrepresentation recursion

    ext(a, b) = max { -<a', b> : a' is a generic subrepresentation of a }
    a' <-> a  iff  ext(a', a - a') == 0

or dually as the maximum of -<a, b''> over generic quotients b'' of b,
and hom(a, b) = <a, b> + ext(a, b). Both are dimensions for an *independent*
generic pair (A, B); for a == b this is not End(A) (see oracle_end_dim).

Results are memoized per (quiver, a, b). The cache is a plain dict guarded by
a lock for writes; entries are deterministic, so concurrent readers may race
on a missing entry and both store the same value.
"""

from __future__ import annotations

import threading
from collections import Counter
from collections.abc import Sequence
from dataclasses import dataclass

from quiver_lss._errors import DecompositionOrderError, OrientedCycleError, PreconditionError
from quiver_lss._quiver import (
    DimVector,
    Quiver,
    RootClass,
    check_vector,
    euler_form,
    is_zero,
    leq,
    root_class,
    subvectors,
    topological_order,
    vsub,
)

# ============================================================================
# Memo cache
# ============================================================================

_ext_cache: dict[tuple[Quiver, DimVector, DimVector], int] = {}
_split_cache: dict[tuple[Quiver, DimVector, bool], DimVector | None] = {}
_acyclic: set[Quiver] = set()
_cache_lock = threading.Lock()
_stats = {"hits": 0, "misses": 0}


def clear_cache() -> None:
    """Drop all memoized values. Useful for testing."""
    with _cache_lock:
        _ext_cache.clear()
        _split_cache.clear()
        _acyclic.clear()
        _stats["hits"] = 0
        _stats["misses"] = 0


def cache_info() -> dict[str, int]:
    """Number of memoized ext values and split searches, with hit/miss counts."""
    with _cache_lock:
        return {
            "ext_entries": len(_ext_cache),
            "split_entries": len(_split_cache),
            "hits": _stats["hits"],
            "misses": _stats["misses"],
        }


def _require_acyclic(quiver: Quiver) -> None:
    if quiver in _acyclic:
        return
    topological_order(quiver)
    with _cache_lock:
        _acyclic.add(quiver)


# ============================================================================
# hom / ext
# ============================================================================


def _lattice_size(v: DimVector) -> int:
    size = 1
    for x in v:
        size *= x + 1
    return size


def _ext_vanishes(quiver: Quiver, a: DimVector, b: DimVector) -> bool:
    # ext(a, b) >= -<a, b>, so a negative Euler form settles it without recursion.
    return euler_form(quiver, a, b) >= 0 and _ext(quiver, a, b) == 0


def _best_subrep(quiver: Quiver, a: DimVector, b: DimVector, best: int) -> int:
    # Candidates by decreasing -<a', b>: the first generic subrepresentation
    # wins, and nothing below the current best needs the costly subrep test.
    candidates: list[tuple[int, DimVector]] = []
    for sub in subvectors(a):
        if sub != a and not is_zero(sub):
            value = -euler_form(quiver, sub, b)
            if value > best:
                candidates.append((value, sub))
    candidates.sort(key=lambda item: (-item[0], item[1]))
    for value, sub in candidates:
        if _ext_vanishes(quiver, sub, vsub(a, sub)):
            return value
    return best


def _best_quotient(quiver: Quiver, a: DimVector, b: DimVector, best: int) -> int:
    # Same maximum taken over generic quotients b'' of b, scoring -<a, b''>.
    candidates: list[tuple[int, DimVector]] = []
    for quo in subvectors(b):
        if quo != b and not is_zero(quo):
            value = -euler_form(quiver, a, quo)
            if value > best:
                candidates.append((value, quo))
    candidates.sort(key=lambda item: (-item[0], item[1]))
    for value, quo in candidates:
        if _ext_vanishes(quiver, vsub(b, quo), quo):
            return value
    return best


def _ext(quiver: Quiver, a: DimVector, b: DimVector) -> int:
    key = (quiver, a, b)

    # Fast path: no lock for the lookup
    cached = _ext_cache.get(key)
    if cached is not None:
        with _cache_lock:
            _stats["hits"] += 1
        return cached

    best = 0
    if not is_zero(a) and not is_zero(b):
        best = max(0, -euler_form(quiver, a, b))
        # Both maxima equal ext(a, b); walk the smaller lattice.
        if _lattice_size(b) < _lattice_size(a):
            best = _best_quotient(quiver, a, b, best)
        else:
            best = _best_subrep(quiver, a, b, best)

    with _cache_lock:
        _stats["misses"] += 1
        _ext_cache[key] = best
    return best


def generic_ext(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """dim Ext(A, B) for generic, independent A of dimension a and B of dimension b.

    Raises:
        OrientedCycleError: If the quiver is not acyclic.
        DimensionMismatchError: If a vector has the wrong length.
    """
    _require_acyclic(quiver)
    return _ext(quiver, check_vector(quiver, a, "a"), check_vector(quiver, b, "b"))


def generic_hom(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """dim Hom(A, B) for generic, independent A and B, via Ringel's formula."""
    ext = generic_ext(quiver, a, b)
    return euler_form(quiver, a, b) + ext


def is_generic_subrep(quiver: Quiver, sub: Sequence[int], a: Sequence[int]) -> bool:
    """Whether a generic representation of dimension a has a subrepresentation of dimension sub.

    Raises:
        PreconditionError: If sub is not componentwise <= a.
    """
    _require_acyclic(quiver)
    sub = check_vector(quiver, sub, "sub")
    a = check_vector(quiver, a, "a")
    if not leq(sub, a):
        raise PreconditionError(f"{sub} is not componentwise <= {a}")
    if is_zero(sub) or sub == a:
        return True
    return _ext_vanishes(quiver, sub, vsub(a, sub))


# ============================================================================
# Schur roots and generic decomposition
# ============================================================================


def _find_split(quiver: Quiver, a: DimVector, reverse: bool) -> DimVector | None:
    key = (quiver, a, reverse)
    if key in _split_cache:
        return _split_cache[key]

    found: DimVector | None = None
    candidates = list(subvectors(a))
    if reverse:
        candidates.reverse()
    for b in candidates:
        if is_zero(b) or b == a:
            continue
        c = vsub(a, b)
        # Each unordered split once
        if b > c:
            continue
        # With ext zero both ways, <b, c> and <c, b> are homs, and some split
        # has a Schur summand on one side.
        if euler_form(quiver, b, c) < 0 or euler_form(quiver, c, b) < 0:
            continue
        if euler_form(quiver, b, b) > 1 and euler_form(quiver, c, c) > 1:
            continue
        if _ext(quiver, b, c) == 0 and _ext(quiver, c, b) == 0:
            found = b
            break

    with _cache_lock:
        _split_cache[key] = found
    return found


def is_schur_root(quiver: Quiver, a: Sequence[int]) -> bool:
    """Whether the generic representation of dimension a is indecomposable.

    True iff a admits no split a = b + c (b, c nonzero) with ext(b, c) = 0 = ext(c, b).

    Raises:
        PreconditionError: If a is zero.
    """
    _require_acyclic(quiver)
    a = check_vector(quiver, a, "a")
    if is_zero(a):
        raise PreconditionError("the zero vector is not a root")
    return _find_split(quiver, a, False) is None


@dataclass(frozen=True, slots=True)
class Term:
    """One summand m * root of a decomposition."""

    root: DimVector
    mult: int
    root_class: RootClass

    def to_dict(self) -> dict[str, object]:
        return {"root": list(self.root), "mult": self.mult, "class": self.root_class.value}


@dataclass(frozen=True, slots=True)
class Decomposition:
    """An ordered decomposition total = sum(mult * root)."""

    terms: tuple[Term, ...]
    total: DimVector

    def __post_init__(self) -> None:
        acc = [0] * len(self.total)
        for term in self.terms:
            if term.mult < 1:
                raise PreconditionError(f"multiplicity {term.mult} of {term.root} is not positive")
            for i, x in enumerate(term.root):
                acc[i] += term.mult * x
        if tuple(acc) != self.total:
            raise PreconditionError(f"terms sum to {tuple(acc)}, not {self.total}")

    @property
    def roots(self) -> tuple[DimVector, ...]:
        return tuple(t.root for t in self.terms)

    @property
    def mults(self) -> tuple[int, ...]:
        return tuple(t.mult for t in self.terms)

    def as_multiset(self) -> tuple[tuple[DimVector, int], ...]:
        """Order-free view: sorted (root, mult) pairs."""
        return tuple(sorted((t.root, t.mult) for t in self.terms))

    def to_dict(self) -> dict[str, object]:
        return {"total": list(self.total), "terms": [t.to_dict() for t in self.terms]}

    def __str__(self) -> str:
        return " + ".join(
            f"{t.mult} x ({','.join(map(str, t.root))}) [{t.root_class.value}]" for t in self.terms
        )


def _split_all(quiver: Quiver, a: DimVector, reverse: bool) -> list[DimVector]:
    b = _find_split(quiver, a, reverse)
    if b is None:
        return [a]
    return _split_all(quiver, b, reverse) + _split_all(quiver, vsub(a, b), reverse)


def hom_order(quiver: Quiver, roots: Sequence[DimVector]) -> list[int]:
    """Indices of roots ordered so that hom(root_i, root_j) = 0 whenever i comes before j.

    Ties keep the input order.

    Raises:
        DecompositionOrderError: If no such order exists.
    """
    homs = {
        (i, j): generic_hom(quiver, roots[i], roots[j])
        for i in range(len(roots))
        for j in range(len(roots))
        if i != j
    }
    return _order_by_homs(roots, homs)


def _order_by_homs(roots: Sequence[DimVector], homs: dict[tuple[int, int], int]) -> list[int]:
    arrows = [(j, i) for (i, j), hom in homs.items() if hom > 0]
    try:
        return topological_order(Quiver(len(roots), tuple(arrows)))
    except OrientedCycleError as e:
        raise DecompositionOrderError(
            f"summands {[roots[v] for v in e.cycle]} have cyclic nonzero homs",
            details={"cycle": [list(roots[v]) for v in e.cycle]},
        ) from None


def generic_decomposition(
    quiver: Quiver, a: Sequence[int], *, reverse: bool = False
) -> Decomposition:
    """The generic (canonical) decomposition of a.

    Terms are distinct Schur roots with multiplicities, ordered so that
    hom(root_i, root_j) = 0 = ext(root_i, root_j) for i < j.

    Args:
        quiver: An acyclic quiver.
        a: A nonzero dimension vector.
        reverse: Search splits in backward lexicographic order. The result
            is the same; this exists to check that.

    Raises:
        PreconditionError: If a is zero.
        OrientedCycleError: If the quiver is not acyclic.
        DecompositionOrderError: If the summands cannot be ordered.
    """
    _require_acyclic(quiver)
    a = check_vector(quiver, a, "a")
    if is_zero(a):
        raise PreconditionError("cannot decompose the zero vector")

    counts = Counter(_split_all(quiver, a, reverse))
    roots = sorted(counts)
    # Distinct summands have no ext between them, so hom is the Euler form.
    homs = {
        (i, j): euler_form(quiver, roots[i], roots[j])
        for i in range(len(roots))
        for j in range(len(roots))
        if i != j
    }
    order = _order_by_homs(roots, homs)
    terms = tuple(
        Term(roots[i], counts[roots[i]], root_class(quiver, roots[i])) for i in order
    )
    return Decomposition(terms, a)


def has_trivial_invariants(quiver: Quiver, a: Sequence[int]) -> bool:
    """Whether every SL(a)-invariant on the representation space is constant.

    This holds exactly when the generic decomposition of a has as many
    distinct summands as the quiver has vertices.
    """
    return len(generic_decomposition(quiver, a).terms) == quiver.n
