"""Tests for pushing, locally semi-simple decompositions and Luna strata."""

from __future__ import annotations

from collections import Counter

import pytest

from quiver_lss import (
    Decomposition,
    LssStageError,
    NotPrehomogeneousError,
    PushPreconditionError,
    Quiver,
    RootClass,
    Term,
    evaluate_weight,
    generic_lss_decomposition,
    is_almost_loopless,
    is_generic_lss,
    is_prehomogeneous,
    luna_strata,
    make_almost_loopless,
    preh_lss,
    push_left,
    push_right,
    semi_invariant_generators,
)
from quiver_lss._lss import _stage_two


@pytest.fixture
def kronecker_tail() -> Quiver:
    """1 => 2 -> 3: a Kronecker pair followed by one more arrow."""
    return Quiver(3, ((0, 1), (0, 1), (1, 2)))


@pytest.fixture
def kronecker_head() -> Quiver:
    """3 -> 1 => 2: one arrow into a Kronecker pair."""
    return Quiver(3, ((0, 1), (0, 1), (2, 0)))


def multiset(d: Decomposition) -> Counter[tuple[int, ...]]:
    """Root -> multiplicity, ignoring term order."""
    return Counter(dict(d.as_multiset()))


class TestPush:
    """Tests for push_right and push_left."""

    def test_push_right(self, kronecker_tail: Quiver) -> None:
        """<(0,0,1),(1,1,1)> = 1, so one copy of (0,0,1) splits off (1,1,1)."""
        left, right = push_right(kronecker_tail, ((1, 1, 1), 2), ((0, 0, 1), 3))
        assert left == ((0, 0, 1), 5)
        assert right == ((1, 1, 0), 2)

    def test_push_left(self, kronecker_head: Quiver) -> None:
        left, right = push_left(kronecker_head, ((0, 0, 1), 2), ((1, 1, 1), 3))
        assert left == ((1, 1, 0), 3)
        assert right == ((0, 0, 1), 5)

    def test_transposition(self) -> None:
        """With <b, a> = 0 a push only swaps the pair."""
        q = Quiver(4, ((0, 1), (0, 1)))
        left, right = push_right(q, ((1, 1, 0, 0), 1), ((0, 0, 1, 0), 4))
        assert left == ((0, 0, 1, 0), 4)
        assert right == ((1, 1, 0, 0), 1)

    def test_nonzero_hom(self, k2: Quiver) -> None:
        """hom((1,1),(1,0)) = 1."""
        with pytest.raises(PushPreconditionError):
            push_right(k2, ((1, 1), 1), ((1, 0), 1))

    def test_real_member_rejected(self, kronecker_tail: Quiver) -> None:
        with pytest.raises(PushPreconditionError) as exc_info:
            push_right(kronecker_tail, ((0, 0, 1), 1), ((1, 1, 1), 1))
        assert "not imaginary" in str(exc_info.value)

    def test_push_left_needs_imaginary_second(self, kronecker_head: Quiver) -> None:
        with pytest.raises(PushPreconditionError):
            push_left(kronecker_head, ((1, 1, 1), 1), ((0, 0, 1), 1))


class TestMakeAlmostLoopless:
    """Tests for make_almost_loopless and is_almost_loopless."""

    def test_strictly_imaginary_merged_into_one_root(self, k3: Quiver) -> None:
        assert make_almost_loopless(k3, [((1, 1), 1), ((1, 1), 2)]) == [((3, 3), 1)]

    def test_isotropic_keeps_multiplicity(self, k2: Quiver) -> None:
        assert make_almost_loopless(k2, [((1, 1), 1), ((1, 1), 2)]) == [((1, 1), 3)]

    def test_first_occurrence_fixes_position(self, a2: Quiver) -> None:
        pairs = [((0, 1), 1), ((1, 0), 1), ((0, 1), 1)]
        assert make_almost_loopless(a2, pairs) == [((0, 1), 2), ((1, 0), 1)]

    def test_is_almost_loopless(self, k3: Quiver) -> None:
        assert is_almost_loopless(k3, [((2, 2), 1), ((1, 0), 3)])
        assert not is_almost_loopless(k3, [((1, 1), 2)])
        assert not is_almost_loopless(k3, [((1, 1), 1), ((1, 1), 1)])


class TestGenericLss:
    """Tests for generic_lss_decomposition."""

    def test_a2(self, a2: Quiver) -> None:
        """The real tail is replaced by the simple roots."""
        d = generic_lss_decomposition(a2, (2, 1))
        assert [(t.root, t.mult) for t in d.terms] == [((0, 1), 1), ((1, 0), 2)]
        assert d.total == (2, 1)

    def test_three_arrows(self, k3: Quiver) -> None:
        d = generic_lss_decomposition(k3, (4, 1))
        assert multiset(d) == Counter({(1, 0): 4, (0, 1): 1})

    def test_real_schur_root(self, k2: Quiver) -> None:
        d = generic_lss_decomposition(k2, (2, 1))
        assert d.terms == (Term((2, 1), 1, RootClass.REAL),)

    def test_isotropic(self, k2: Quiver) -> None:
        d = generic_lss_decomposition(k2, (3, 3))
        assert d.terms == (Term((1, 1), 3, RootClass.ISOTROPIC),)
        assert d.almost_loopless

    def test_strictly_imaginary(self, k3: Quiver) -> None:
        """A strictly imaginary Schur root is its own decomposition."""
        d = generic_lss_decomposition(k3, (2, 2))
        assert d.terms == (Term((2, 2), 1, RootClass.STRICTLY_IMAGINARY),)

    def test_stage_three_push(self, kronecker_tail: Quiver) -> None:
        """(1,1,2) = (1,1,1) + (0,0,1) generically; (0,0,1) splits off the imaginary root."""
        d = generic_lss_decomposition(kronecker_tail, (1, 1, 2))
        assert [(t.root, t.mult) for t in d.terms] == [((0, 0, 1), 2), ((1, 1, 0), 1)]
        assert d.terms[1].root_class is RootClass.ISOTROPIC

    def test_stage_one_push(self, kronecker_head: Quiver) -> None:
        d = generic_lss_decomposition(kronecker_head, (1, 1, 2))
        assert multiset(d) == Counter({(1, 1, 0): 1, (0, 0, 1): 2})

    def test_term_count_matches_generic(self, k2: Quiver) -> None:
        for dim in [(1, 0), (2, 1), (3, 3), (4, 2)]:
            report = is_generic_lss(k2, generic_lss_decomposition(k2, dim))
            assert report.passed, report.to_dict()

    def test_to_dict(self, k2: Quiver) -> None:
        d = generic_lss_decomposition(k2, (3, 3))
        assert d.to_dict() == {
            "total": [3, 3],
            "terms": [{"root": [1, 1], "mult": 3, "class": "isotropic"}],
            "almost_loopless": True,
        }

    def test_stage_two_failure(self, a2: Quiver) -> None:
        """A tail that is not a perpendicular sequence is reported as a stage error."""
        with pytest.raises(LssStageError) as exc_info:
            _stage_two(a2, [((1, 1), 1), ((1, 1), 1)])
        assert exc_info.value.stage == 2
        assert str(exc_info.value).startswith("stage 2:")


class TestIsGenericLss:
    """Tests for is_generic_lss."""

    def test_passes(self, kronecker_tail: Quiver) -> None:
        d = generic_lss_decomposition(kronecker_tail, (1, 1, 2))
        report = is_generic_lss(kronecker_tail, d)
        assert report.almost_loopless
        assert report.local_quiver_acyclic
        assert report.term_count == report.expected_term_count == 2

    def test_nonzero_hom_fails(self, a2: Quiver) -> None:
        """The generic decomposition of (2,1) is not locally semi-simple."""
        d = Decomposition(
            (Term((1, 0), 1, RootClass.REAL), Term((1, 1), 1, RootClass.REAL)), (2, 1)
        )
        report = is_generic_lss(a2, d)
        assert not report.local_quiver_acyclic
        assert not report.passed

    def test_wrong_term_count(self, k2: Quiver) -> None:
        d = Decomposition(
            (Term((1, 0), 1, RootClass.REAL), Term((0, 1), 1, RootClass.REAL)), (1, 1)
        )
        report = is_generic_lss(k2, d)
        assert report.expected_term_count == 1
        assert not report.passed


class TestPrehomogeneous:
    """Tests for is_prehomogeneous and preh_lss."""

    def test_is_prehomogeneous(self, k2: Quiver) -> None:
        assert is_prehomogeneous(k2, (2, 1))
        assert not is_prehomogeneous(k2, (1, 1))

    def test_preh_lss_schur(self, k2: Quiver) -> None:
        assert preh_lss(k2, (2, 1)).terms == (Term((2, 1), 1, RootClass.REAL),)

    def test_preh_lss_multiple(self, k2: Quiver) -> None:
        assert preh_lss(k2, (4, 2)).terms == (Term((2, 1), 2, RootClass.REAL),)

    def test_agrees_with_generic_lss(self, k3: Quiver, a3: Quiver) -> None:
        for quiver, dim in [(k3, (4, 1)), (a3, (1, 2, 1)), (a3, (2, 1, 1))]:
            assert multiset(preh_lss(quiver, dim)) == multiset(
                generic_lss_decomposition(quiver, dim)
            )

    def test_not_prehomogeneous(self, k2: Quiver) -> None:
        with pytest.raises(NotPrehomogeneousError):
            preh_lss(k2, (3, 3))


class TestLunaStrata:
    """Tests for luna_strata."""

    def test_kronecker(self, k2: Quiver) -> None:
        strata = luna_strata(k2, (2, 1))
        assert len(strata) == 2
        empty, full = strata
        assert empty.subsequence == ()
        assert [(t.root, t.mult) for t in empty.decomposition.terms] == [((0, 1), 1), ((1, 0), 2)]
        assert full.subsequence == ((3, 2),)
        assert full.decomposition.terms == (Term((2, 1), 1, RootClass.REAL),)

    def test_closure_order(self, k2: Quiver) -> None:
        empty, full = luna_strata(k2, (2, 1))
        assert empty.is_in_closure_of(full)
        assert not full.is_in_closure_of(empty)

    def test_generic_stratum_is_preh_lss(self, a3: Quiver) -> None:
        strata = luna_strata(a3, (1, 2, 1))
        assert strata[-1].decomposition == preh_lss(a3, (1, 2, 1))

    @pytest.mark.parametrize(("fixture", "dim"), [("a2", (2, 1)), ("k3", (4, 1))])
    def test_no_perpendicular_roots(
        self, request: pytest.FixtureRequest, fixture: str, dim: tuple[int, ...]
    ) -> None:
        """n generic summands leave a single stratum."""
        assert len(luna_strata(request.getfixturevalue(fixture), dim)) == 1

    def test_count_is_power_of_two(self, a3: Quiver) -> None:
        """(1,0,0) has one summand, so 2^(3 - 1) strata."""
        assert len(luna_strata(a3, (1, 0, 0))) == 4

    def test_to_dict(self, k2: Quiver) -> None:
        full = luna_strata(k2, (2, 1))[1]
        assert full.to_dict()["nonvanishing"] == [{"root": [3, 2], "weight": [1, -2]}]


class TestSemiInvariants:
    """Tests for semi_invariant_generators."""

    def test_kronecker(self, k2: Quiver) -> None:
        assert semi_invariant_generators(k2, (2, 1)) == [((3, 2), (1, -2))]

    def test_weight_vanishes_on_dimension(self, k2: Quiver) -> None:
        """A semi-invariant on Rep(b) has weight sigma with sigma(b) = 0."""
        for dim in [(2, 1), (4, 2)]:
            for _, weight in semi_invariant_generators(k2, dim):
                assert evaluate_weight(weight, dim) == 0

    def test_no_generators(self, a2: Quiver) -> None:
        assert semi_invariant_generators(a2, (2, 1)) == []

    def test_not_prehomogeneous(self, k3: Quiver) -> None:
        with pytest.raises(NotPrehomogeneousError):
            semi_invariant_generators(k3, (1, 1))
