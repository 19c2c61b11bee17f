"""Exact rational linear algebra on small integer systems."""

from __future__ import annotations

from collections.abc import Sequence

from sympy import Matrix, Rational

from quiver_lss._errors import NegativeExpansionError, NonIntegerExpansionError


def _columns(vectors: Sequence[Sequence[int]], length: int) -> Matrix:
    if not vectors:
        return Matrix.zeros(length, 0)
    return Matrix([list(v) for v in vectors]).T


def rank(vectors: Sequence[Sequence[int]], length: int) -> int:
    """Rank over the rationals of the given vectors."""
    if not vectors:
        return 0
    return _columns(vectors, length).rank()


def is_linearly_independent(vectors: Sequence[Sequence[int]], length: int) -> bool:
    return rank(vectors, length) == len(vectors)


def expand_in_basis(basis: Sequence[Sequence[int]], target: Sequence[int]) -> tuple[int, ...]:
    """Coefficients c with sum(c_k * basis_k) == target.

    The basis vectors must be linearly independent; the solution is then
    unique and must consist of nonnegative integers.

    Raises:
        NonIntegerExpansionError: If target is outside the rational span, or a
            coefficient is not an integer.
        NegativeExpansionError: If a coefficient is negative.
    """
    length = len(target)
    if not basis:
        if any(target):
            raise NonIntegerExpansionError(
                f"{tuple(target)} is not in the span of the empty basis",
                details={"target": list(target)},
            )
        return ()

    a = _columns(basis, length)
    b = Matrix(list(target))
    try:
        solution, free = a.gauss_jordan_solve(b)
    except ValueError:
        raise NonIntegerExpansionError(
            f"{tuple(target)} is not in the span of {[tuple(v) for v in basis]}",
            details={"target": list(target), "basis": [list(v) for v in basis]},
        ) from None
    if free.shape[0] != 0:
        raise NonIntegerExpansionError(
            f"basis {[tuple(v) for v in basis]} is linearly dependent",
            details={"basis": [list(v) for v in basis]},
        )

    coefficients: list[int] = []
    for value in solution:
        value = Rational(value)
        if value.q != 1:
            raise NonIntegerExpansionError(
                f"coefficient {value} in the expansion of {tuple(target)} is not an integer",
                details={"target": list(target)},
            )
        if value < 0:
            raise NegativeExpansionError(
                f"coefficient {value} in the expansion of {tuple(target)} is negative",
                details={"target": list(target)},
            )
        coefficients.append(int(value))
    return tuple(coefficients)
