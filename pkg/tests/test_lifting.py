"""Horn filling, Kan/quasi-category checks, lifting problems, fibrations."""

import itertools

import pytest

from finsimp.categories import is_groupoid, nerve
from finsimp.groups import cyclic_group, one_object_groupoid
from finsimp.lifting import (
    HornMap,
    LiftingProblem,
    FibrationResult,
    has_unique_inner_fillers,
    horn_fillers,
    horn_maps,
    is_kan,
    is_kan_fibration,
    is_quasicategory,
    is_trivial_fibration,
    solve_lift,
)
from finsimp.simplicial import (
    TruncationError,
    compose,
    constant_map,
    enumerate_maps,
    horn,
    identity_map,
    simplex_boundary,
    standard_simplex,
    truncate,
)


# --- horn map counting oracles -----------------------------------------------

def test_low_horn_maps_count_vertices():
    S = standard_simplex(2)
    for i in (0, 1):
        assert len(horn_maps(S, 1, i)) == 3


def test_middle_horn_maps_into_an_edge():
    # maps of the composable-pair shape into the edge = weakly increasing
    # triples in {0, 1}
    maps = horn_maps(standard_simplex(1), 2, 1)
    triples = [t for t in itertools.product(range(2), repeat=3) if t[0] <= t[1] <= t[2]]
    assert len(maps) == len(triples)


def test_outer_horn_maps_into_a_group_nerve():
    N = nerve(one_object_groupoid(cyclic_group(2)), 3)
    assert len(horn_maps(N, 2, 0)) == 4


def test_horn_fillers_in_the_full_simplex():
    S = standard_simplex(2)
    for hm in horn_maps(S, 2, 1):
        assert len(horn_fillers(S, hm)) >= 1


# --- Kan and quasi-category checks -------------------------------------------

def test_edge_is_not_kan_but_is_quasicategory():
    S = standard_simplex(1)
    res = is_kan(S, 2)
    assert not res.holds
    assert res.witness.n == 2 and res.witness.i in (0, 2)
    assert is_quasicategory(S, 2).holds


def test_boundary_of_triangle_is_not_a_quasicategory():
    B, _ = simplex_boundary(2)
    res = is_quasicategory(B, 2)
    assert not res.holds
    assert res.witness.i == 1


def test_kan_iff_groupoid_over_corpus(corpus):
    for name, C, expect_gpd in corpus:
        N = nerve(C, 4)
        res = is_kan(N, 3)
        assert res.holds == expect_gpd, name
        if not expect_gpd:
            # the witness is always an outer horn
            assert res.witness.i in (0, res.witness.n), name


def test_nerves_are_quasicategories_with_unique_inner_fillers(corpus):
    for name, C, _ in corpus:
        N = nerve(C, 4)
        assert is_quasicategory(N, 3).holds, name
        uniq = has_unique_inner_fillers(N, 3)
        assert uniq.holds, name


def test_unique_fillers_fail_on_a_kan_complex_with_loops():
    # the free homotopy from g to itself gives two fillers for one inner horn
    N = nerve(one_object_groupoid(cyclic_group(2)), 4)
    assert has_unique_inner_fillers(N, 3).holds
    # shrink the check: fillers of a middle horn in the 2-truncated window
    W = truncate(N, 2)
    with pytest.raises(TruncationError):
        has_unique_inner_fillers(W, 3)


def test_checks_guard_windows():
    W = truncate(standard_simplex(3), 2)
    with pytest.raises(TruncationError):
        is_kan(W, 3)
    assert is_quasicategory(W, 2).holds
    with pytest.raises(ValueError):
        is_kan(standard_simplex(1), 0)


# --- lifting problems ---------------------------------------------------------

def test_solve_lift_composable_pair():
    # a composable pair in the nerve of the walking arrow lifts uniquely
    from finsimp.categories import arrow_category

    N = nerve(arrow_category(), 3)
    H, incl = horn(2, 1)
    p = constant_map(N, standard_simplex(0), "0")
    for hm in horn_maps(N, 2, 1):
        bottom = constant_map(standard_simplex(2), standard_simplex(0), "0")
        problem = LiftingProblem(incl, p, hm.assignment, bottom)
        assert problem.validate() == []
        sols = solve_lift(problem, find_all=True)
        assert len(sols) == 1
        lift = solve_lift(problem)
        assert compose(p, lift) == bottom
        assert lift.assign["01"] == hm.assignment.assign["01"]


def test_solve_lift_unsolvable():
    S = standard_simplex(1)
    H, incl = horn(2, 0)
    hms = horn_maps(S, 2, 0)
    p = constant_map(S, standard_simplex(0), "0")
    bottom = constant_map(standard_simplex(2), standard_simplex(0), "0")
    bad = [
        hm for hm in hms
        if hm.assignment.assign["01"].gen == "01" and hm.assignment.assign["02"].word
    ]
    assert bad
    problem = LiftingProblem(incl, p, bad[0].assignment, bottom)
    assert solve_lift(problem) is None
    assert solve_lift(problem, find_all=True) == []


def test_lifting_problem_validation_catches_non_commuting_squares():
    S = standard_simplex(1)
    H, incl = horn(1, 0)
    top = enumerate_maps(H, S)[0]
    p = identity_map(S)
    bottom = constant_map(S, S, "1")  # wrong: does not extend the top corner
    problem = LiftingProblem(incl, p, top, bottom)
    assert any("commute" in line for line in problem.validate())


# --- fibration checks ---------------------------------------------------------

def test_group_nerve_collapse_is_a_kan_fibration():
    N = nerve(one_object_groupoid(cyclic_group(2)), 4)
    p = constant_map(N, standard_simplex(0), "0")
    res = is_kan_fibration(p, 3)
    assert res.holds


def test_edge_collapse_is_a_kan_fibration_only_at_depth_one():
    S = standard_simplex(1)
    p = constant_map(S, standard_simplex(0), "0")
    assert is_kan_fibration(p, 1).holds
    res = is_kan_fibration(p, 2)
    assert not res.holds
    assert res.witness.validate() == []


def test_edge_collapse_is_not_a_trivial_fibration():
    S = standard_simplex(1)
    p = constant_map(S, standard_simplex(0), "0")
    res = is_trivial_fibration(p, 1)
    assert not res.holds
    witness_top = res.witness.top
    # the unsolvable sphere swaps the endpoints
    assert witness_top.assign["0"].gen == "1"
    assert witness_top.assign["1"].gen == "0"
    assert res.witness.validate() == []


def test_identity_is_a_trivial_fibration():
    S = standard_simplex(2)
    assert is_trivial_fibration(identity_map(S), 2).holds


def test_point_collapse_of_point_is_everything():
    S = standard_simplex(0)
    p = identity_map(S)
    assert is_kan_fibration(p, 2).holds
    assert is_trivial_fibration(p, 2).holds


def test_fibration_result_shape():
    S = standard_simplex(0)
    res = is_kan_fibration(identity_map(S), 1)
    assert isinstance(res, FibrationResult)
    assert res.checked_to == 1
    assert bool(res)
