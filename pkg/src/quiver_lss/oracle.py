"""Brute-force verification over a large prime field.

Representations are sampled with uniform random matrices over F_p and Hom
spaces are computed as null spaces of the linear system

    V(phi) f(t phi) = f(h phi) U(phi)   for every arrow phi

by Gaussian elimination mod p. Generic dimensions are minima over samples
(upper semicontinuity); a mismatch with the symbolic values has probability
of order (dimension) / p per sample.

Usage:
    from quiver_lss import oracle
    cfg = oracle.OracleConfig(trials=3)
    oracle.oracle_hom(quiver, (1, 1), (1, 0), cfg)
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field, replace
from typing import Literal

import numpy as np

from quiver_lss._config import OracleConfig, _report, _warn
from quiver_lss._errors import NegativeExtError, PreconditionError
from quiver_lss._homext import Decomposition
from quiver_lss._linalg import is_linearly_independent
from quiver_lss._lss import Stratum, is_almost_loopless
from quiver_lss._quiver import DimVector, Quiver, check_vector, euler_form, is_zero

Kind = Literal["generic", "lss", "perp"]


@dataclass(frozen=True, eq=False)
class FieldRep:
    """A representation of a quiver over F_p.

    matrices[k] is the dims[h] x dims[t] matrix of the k-th arrow t -> h.
    """

    quiver: Quiver
    dims: DimVector
    prime: int
    matrices: tuple[np.ndarray, ...] = field(repr=False)


def sample_rep(
    quiver: Quiver, dims: Sequence[int], cfg: OracleConfig, *, trial: int = 0, stream: int = 0
) -> FieldRep:
    """Sample a representation with i.i.d. uniform entries in [0, p).

    The generator is seeded with (cfg.seed XOR trial, stream), so equal
    arguments give identical matrices; distinct streams give independent
    samples within one trial.
    """
    dims = check_vector(quiver, dims, "dims")
    rng = np.random.default_rng([cfg.seed ^ trial, stream])
    matrices = tuple(
        rng.integers(0, cfg.prime, size=(dims[h], dims[t]), dtype=np.int64)
        for t, h in quiver.arrows
    )
    return FieldRep(quiver, dims, cfg.prime, matrices)


def rank_mod_p(matrix: np.ndarray, p: int) -> int:
    """Rank of an integer matrix over F_p.

    Entries are reduced into [0, p) first; p < 2^31 keeps every product of
    two residues inside int64.
    """
    r = np.asarray(matrix, dtype=np.int64) % p
    rows, cols = r.shape
    pivot_row = 0
    for col in range(cols):
        if pivot_row == rows:
            break
        nonzero = np.nonzero(r[pivot_row:, col])[0]
        if nonzero.size == 0:
            continue
        found = pivot_row + int(nonzero[0])
        if found != pivot_row:
            r[[pivot_row, found]] = r[[found, pivot_row]]

        inv = pow(int(r[pivot_row, col]), p - 2, p)
        r[pivot_row] = (r[pivot_row] * inv) % p

        # Eliminate below
        factors = r[pivot_row + 1 :, col].copy()
        r[pivot_row + 1 :] = (r[pivot_row + 1 :] - np.outer(factors, r[pivot_row])) % p
        pivot_row += 1
    return pivot_row


def _hom_system(u: FieldRep, v: FieldRep) -> np.ndarray:
    offsets: list[int] = []
    total = 0
    for x in range(u.quiver.n):
        offsets.append(total)
        total += v.dims[x] * u.dims[x]

    blocks: list[np.ndarray] = []
    for (t, h), u_phi, v_phi in zip(u.quiver.arrows, u.matrices, v.matrices, strict=True):
        rows = v.dims[h] * u.dims[t]
        if rows == 0:
            continue
        block = np.zeros((rows, total), dtype=np.int64)
        # Row-major vec: vec(A X) = (A kron I) vec(X), vec(X B) = (I kron B^T) vec(X)
        block[:, offsets[t] : offsets[t] + v.dims[t] * u.dims[t]] += np.kron(
            v_phi, np.eye(u.dims[t], dtype=np.int64)
        )
        block[:, offsets[h] : offsets[h] + v.dims[h] * u.dims[h]] -= np.kron(
            np.eye(v.dims[h], dtype=np.int64), u_phi.T
        )
        blocks.append(block % u.prime)

    if not blocks:
        return np.zeros((0, total), dtype=np.int64)
    return np.vstack(blocks)


def hom_dim(u: FieldRep, v: FieldRep) -> int:
    """dim Hom(U, V) over F_p.

    Raises:
        PreconditionError: If U and V live on different quivers or fields.
    """
    if u.quiver != v.quiver or u.prime != v.prime:
        raise PreconditionError("representations over different quivers or fields")
    system = _hom_system(u, v)
    unknowns = system.shape[1]
    if unknowns == 0:
        return 0
    return unknowns - rank_mod_p(system, u.prime)


def oracle_hom(quiver: Quiver, a: Sequence[int], b: Sequence[int], cfg: OracleConfig) -> int:
    """Minimum of dim Hom(U, V) over cfg.trials independent sampled pairs."""
    a = check_vector(quiver, a, "a")
    b = check_vector(quiver, b, "b")
    return min(
        hom_dim(
            sample_rep(quiver, a, cfg, trial=trial, stream=0),
            sample_rep(quiver, b, cfg, trial=trial, stream=1),
        )
        for trial in range(cfg.trials)
    )


def oracle_ext(quiver: Quiver, a: Sequence[int], b: Sequence[int], cfg: OracleConfig) -> int:
    """oracle_hom(a, b) - <a, b>.

    Raises:
        NegativeExtError: If the result is negative (unlucky samples).
    """
    ext = oracle_hom(quiver, a, b, cfg) - euler_form(quiver, a, b)
    if ext < 0:
        raise NegativeExtError(
            f"sampled ext({tuple(a)}, {tuple(b)}) = {ext}; rerun with more trials",
            details={"a": list(a), "b": list(b), "ext": ext},
        )
    return ext


def oracle_end_dim(quiver: Quiver, a: Sequence[int], cfg: OracleConfig) -> int:
    """Minimum over trials of dim End(V) for one sample V used on both sides.

    Raises:
        PreconditionError: If a is zero.
    """
    a = check_vector(quiver, a, "a")
    if is_zero(a):
        raise PreconditionError("End of the zero representation is not defined here")
    return min(
        hom_dim(rep, rep)
        for rep in (sample_rep(quiver, a, cfg, trial=trial) for trial in range(cfg.trials))
    )


def oracle_is_schur(quiver: Quiver, a: Sequence[int], cfg: OracleConfig) -> bool:
    return oracle_end_dim(quiver, a, cfg) == 1


# ============================================================================
# Decomposition reports
# ============================================================================


@dataclass(frozen=True, slots=True)
class CheckResult:
    """Outcome of a single oracle check."""

    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict[str, object]:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Ordered check results; passes when every check passes."""

    kind: Kind
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def to_dict(self) -> dict[str, object]:
        return {
            "kind": self.kind,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }


def _fmt(v: DimVector) -> str:
    return "(" + ",".join(map(str, v)) + ")"


def _ext_check(
    name: str, quiver: Quiver, x: DimVector, y: DimVector, cfg: OracleConfig
) -> CheckResult:
    try:
        ext = oracle_ext(quiver, x, y, cfg)
    except NegativeExtError as e:
        return CheckResult(name, False, str(e))
    return CheckResult(name, ext == 0, f"ext = {ext}")


def _generic_checks(quiver: Quiver, d: Decomposition, cfg: OracleConfig) -> list[CheckResult]:
    checks: list[CheckResult] = []
    for term in d.terms:
        end = oracle_end_dim(quiver, term.root, cfg)
        checks.append(CheckResult(f"schur {_fmt(term.root)}", end == 1, f"dim End = {end}"))
        if term.mult > 1:
            checks.append(
                _ext_check(f"ext {_fmt(term.root)} self", quiver, term.root, term.root, cfg)
            )
    roots = d.roots
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            for x, y in ((roots[i], roots[j]), (roots[j], roots[i])):
                checks.append(_ext_check(f"ext {_fmt(x)} {_fmt(y)}", quiver, x, y, cfg))
    return checks


def _lss_checks(quiver: Quiver, d: Decomposition, cfg: OracleConfig) -> list[CheckResult]:
    checks: list[CheckResult] = []
    roots = d.roots
    for i in range(len(roots)):
        for j in range(len(roots)):
            if i != j:
                hom = oracle_hom(quiver, roots[i], roots[j], cfg)
                checks.append(
                    CheckResult(f"hom {_fmt(roots[i])} {_fmt(roots[j])}", hom == 0, f"hom = {hom}")
                )
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            value = euler_form(quiver, roots[j], roots[i])
            checks.append(
                CheckResult(
                    f"euler {_fmt(roots[j])} {_fmt(roots[i])}", value <= 0, f"<,> = {value}"
                )
            )
    computed = is_almost_loopless(quiver, [(t.root, t.mult) for t in d.terms])
    claimed = getattr(d, "almost_loopless", None)
    checks.append(
        CheckResult(
            "almost loopless",
            computed if claimed is None else computed == claimed,
            f"computed {computed}, claimed {claimed}",
        )
    )
    return checks


def verify_decomposition(
    quiver: Quiver, d: Decomposition, kind: Kind, cfg: OracleConfig
) -> VerificationReport:
    """Check a decomposition against sampled representations.

    generic: every root is Schur and exts between distinct terms vanish in
    both directions (and ext(root, root) = 0 for a repeated root).
    lss: homs between distinct terms vanish, <root_j, root_i> <= 0 for
    i < j, and the almost-loopless flag matches the terms.

    Failed checks are reported, never raised; a negative sampled ext is a
    failed check.
    """
    if kind == "generic":
        checks = _generic_checks(quiver, d, cfg)
    elif kind == "lss":
        checks = _lss_checks(quiver, d, cfg)
    else:
        raise PreconditionError(f"kind must be 'generic' or 'lss', got {kind!r}")

    report = VerificationReport(kind, tuple(checks))
    for failure in report.failures:
        _warn(f"oracle check failed: {failure.name}: {failure.detail}")
    _report(f"oracle: {len(report.checks)} {kind} checks, passed: {report.passed}")
    return report


def verify_strata(
    quiver: Quiver, strata: Sequence[Stratum], cfg: OracleConfig
) -> VerificationReport:
    """Check each stratum against the left perpendicular category of its subsequence.

    Check names carry the stratum number, counted from 1.
    """
    checks: list[CheckResult] = []
    for k, stratum in enumerate(strata, start=1):
        part = verify_perpendicular(
            quiver, stratum.subsequence, stratum.decomposition.roots, "left", cfg
        )
        checks.extend(replace(c, name=f"stratum {k}: {c.name}") for c in part.checks)
    return VerificationReport("perp", tuple(checks))


def verify_perpendicular(
    quiver: Quiver,
    roots: Sequence[Sequence[int]],
    simples: Sequence[Sequence[int]],
    side: Literal["right", "left"],
    cfg: OracleConfig,
) -> VerificationReport:
    """Check that simples lie in the right (or left) perpendicular category of roots.

    For side "right" this asks hom(g, r) = 0 = ext(g, r) for every root g
    and simple r; for "left" the arguments are swapped. The simples must
    also be linearly independent.
    """
    if side not in ("right", "left"):
        raise PreconditionError(f"side must be 'right' or 'left', got {side!r}")
    roots = [check_vector(quiver, g, "root") for g in roots]
    simples = [check_vector(quiver, r, "simple") for r in simples]

    checks = [
        CheckResult(
            "independent",
            is_linearly_independent(simples, quiver.n),
            f"{len(simples)} simples",
        )
    ]
    for g in roots:
        for r in simples:
            x, y = (g, r) if side == "right" else (r, g)
            hom = oracle_hom(quiver, x, y, cfg)
            ext = hom - euler_form(quiver, x, y)
            checks.append(
                CheckResult(
                    f"perp {_fmt(x)} {_fmt(y)}", hom == 0 and ext == 0, f"hom = {hom}, ext = {ext}"
                )
            )

    report = VerificationReport("perp", tuple(checks))
    for failure in report.failures:
        _warn(f"oracle check failed: {failure.name}: {failure.detail}")
    return report


__all__ = [
    "CheckResult",
    "FieldRep",
    "OracleConfig",
    "VerificationReport",
    "hom_dim",
    "oracle_end_dim",
    "oracle_ext",
    "oracle_hom",
    "oracle_is_schur",
    "rank_mod_p",
    "sample_rep",
    "verify_decomposition",
    "verify_perpendicular",
    "verify_strata",
]
