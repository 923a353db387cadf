"""Fast verdicts vs the exact fallbacks, on simple and non-simple inputs."""

from itertools import combinations

import pytest

import oracles as orc
from polyadj.adjacency import (
    Verdict,
    algebraic_test,
    all_pairs_adjacency,
    combinatorial_test,
    fast_test,
    neighbor_lists,
    precompute,
)
from polyadj.generators import cube, prism3, simplex, slack_embed

CUBE3_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3),
    (2, 6), (3, 7), (4, 5), (4, 6), (5, 7), (6, 7),
]
PRISM3_EDGES = [
    (0, 1), (0, 2), (0, 4), (1, 3), (1, 5), (2, 3), (2, 4), (3, 5), (4, 5),
]
# all pairs except the apexes (2, 3)
BIPYRAMID3_EDGES = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4), (3, 4),
]


def test_precompute_classifies():
    o = precompute(cube(3))
    assert (o.dim, o.simple) == (3, True)
    o = precompute(slack_embed(orc.fixture("bipyramid3")))
    assert (o.dim, o.simple) == (3, False)
    o = precompute(slack_embed(orc.fixture("truncated_cube")))
    assert (o.dim, o.simple) == (3, True)
    o = precompute(slack_embed(orc.fixture("bipyramid_simplex4")))
    assert (o.dim, o.simple) == (5, False)


def test_fast_test_cube_examples():
    p = cube(3)
    o = precompute(p)
    assert fast_test(o, 0, 1) is Verdict.ADJACENT
    # two face diagonals of the x3 = 0 facet share their intersection
    assert o.join_map.lookup(p.zero_sets[0] & p.zero_sets[6]) == 2
    assert fast_test(o, 0, 6) is Verdict.NON_ADJACENT
    assert fast_test(o, 0, 7) is Verdict.NON_ADJACENT  # antipodal


def test_fast_test_bipyramid_apexes():
    p = slack_embed(orc.fixture("bipyramid3"))
    o = precompute(p)
    # the apex pair is the unique pair with empty intersection, so its count
    # is 1; non-simple input downgrades that to indeterminate
    assert fast_test(o, 2, 3) is Verdict.INDETERMINATE
    assert combinatorial_test(p, 2, 3) is False
    assert algebraic_test(p, 2, 3) is False


def test_argument_errors():
    p = cube(2)
    o = precompute(p)
    with pytest.raises(ValueError, match="distinct"):
        fast_test(o, 1, 1)
    with pytest.raises(ValueError, match="out of range"):
        fast_test(o, 0, 4)
    with pytest.raises(ValueError, match="distinct"):
        combinatorial_test(p, 2, 2)
    with pytest.raises(ValueError, match="out of range"):
        algebraic_test(p, -1, 0)


def test_fast_test_uses_exactly_one_lookup():
    p = cube(3)
    o = precompute(p)
    calls = []
    inner = o.join_map

    class Counting:
        def lookup(self, s):
            calls.append(s)
            return inner.lookup(s)

    o.join_map = Counting()
    fast_test(o, 0, 6)
    assert len(calls) == 1


def test_three_tests_agree_on_simple_fixtures():
    fixtures = [("cube", d) for d in (2, 3, 4)]
    fixtures += [("simplex", d) for d in (2, 3, 4, 5)]
    fixtures += [("prism3", None), ("truncated_cube", None)]
    for name, d in fixtures:
        p = slack_embed(orc.fixture(name, d))
        o = precompute(p)
        assert o.simple
        for u, v in combinations(range(p.vertex_count), 2):
            fast = fast_test(o, u, v)
            assert fast is not Verdict.INDETERMINATE
            want = fast is Verdict.ADJACENT
            assert combinatorial_test(p, u, v) == want, (name, u, v)
            assert algebraic_test(p, u, v) == want, (name, u, v)


def test_fast_filter_is_sound_on_non_simple_fixtures():
    for name in ("bipyramid3", "bipyramid_simplex4"):
        h = orc.fixture(name)
        p = slack_embed(h)
        o = precompute(p)
        assert not o.simple
        for u, v in combinations(range(p.vertex_count), 2):
            fast = fast_test(o, u, v)
            assert fast is not Verdict.ADJACENT  # never asserted when non-simple
            truth = orc.adjacent(h, u, v)
            if fast is Verdict.NON_ADJACENT:
                assert not truth, (name, u, v)
                assert not combinatorial_test(p, u, v)
            else:
                assert combinatorial_test(p, u, v) == truth
            assert algebraic_test(p, u, v) == truth


def test_all_pairs_adjacency_frozen_lists():
    assert all_pairs_adjacency(cube(3)) == CUBE3_EDGES
    assert all_pairs_adjacency(prism3()) == PRISM3_EDGES
    assert all_pairs_adjacency(slack_embed(orc.fixture("bipyramid3"))) == BIPYRAMID3_EDGES
    assert all_pairs_adjacency(simplex(4)) == list(combinations(range(5), 2))


def test_all_pairs_matches_oracle():
    for name, d in [("cube", 4), ("truncated_cube", None), ("bipyramid_simplex4", None)]:
        h = orc.fixture(name, d)
        assert all_pairs_adjacency(slack_embed(h)) == orc.edges(h), name


def test_all_pairs_accepts_precomputed_oracle():
    p = cube(3)
    o = precompute(p)
    assert all_pairs_adjacency(p, o) == CUBE3_EDGES


def test_neighbor_lists():
    nb = neighbor_lists(8, CUBE3_EDGES)
    assert nb[0] == [1, 2, 4]
    assert nb[7] == [3, 5, 6]
    assert all(len(lst) == 3 for lst in nb)
