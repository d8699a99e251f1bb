import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import enumerate_words
from lamplighter import (
    Branch,
    BudgetExceededError,
    GenSet,
    GroupElement,
    Word,
    apply_generator,
    automata_length,
    build_geodesic,
    check_left_light,
    count_geodesics,
    distance,
    evaluate,
    length,
    make_dm,
    make_wk,
    wreath_length,
)
from lamplighter.metrics import doubly_visited, mask_length, trajectory
from lamplighter.oracle import bfs_distance

E = GroupElement
FIG2 = E((4, 5, 6, -1, -6), -2)
A = E((0,), 0)

elements = st.builds(
    E,
    st.lists(st.integers(-10, 10), max_size=8).map(tuple),
    st.integers(-12, 12),
)


class TestWreathLength:
    def test_a(self):
        assert wreath_length(A).value == 1

    def test_fig2(self):
        rep = wreath_length(FIG2)
        assert rep.value == 27
        assert rep.branch is Branch.RIGHT_FIRST
        assert rep.genset is GenSet.WREATH

    def test_fig2_against_bfs(self):
        assert bfs_distance(E.identity(), FIG2, "wreath") == 27

    def test_pure_cursor(self):
        assert wreath_length(E((), -3)).value == 3
        assert wreath_length(E((), -3)).branch is Branch.SINGLE_SIDE

    def test_tie(self):
        assert wreath_length(E((2, -2), 0)).branch is Branch.BOTH

    def test_left_first(self):
        assert wreath_length(E((2, -1), 3)).branch is Branch.LEFT_FIRST


class TestAutomataLength:
    def test_a_is_two(self):
        assert automata_length(A).value == 2

    def test_fig2_is_24(self):
        rep = automata_length(FIG2)
        assert (rep.value, rep.branch) == (24, Branch.RIGHT_FIRST)

    def test_fig2_against_bfs(self):
        assert bfs_distance(E.identity(), FIG2, "automata") == 24

    @pytest.mark.parametrize("m", range(1, 9))
    def test_dm(self, m):
        assert automata_length(make_dm(m)).value == 4 * m

    def test_w5(self):
        assert automata_length(E((5, -4), 0)).value == 20

    def test_positive_side_only(self):
        # l = 0: i_m + |r - i_m|
        assert automata_length(E((3,), -1)).value == 7
        assert automata_length(E((3,), -1)).branch is Branch.SINGLE_SIDE

    def test_identity_cursor(self):
        assert automata_length(E((), 4)).value == 4

    def test_one_bulb_at_one(self):
        # derived by enumerating all words of length <= 2
        assert automata_length(E((1,), 0)).value == 2
        assert enumerate_words("automata", 2)[E((1,), 0)] == (2, 2)

    @settings(max_examples=300)
    @given(elements, st.sampled_from(list(GenSet)))
    def test_mask_length_agrees(self, e, gs):
        off = 40
        assert mask_length(e.to_mask(off), e.cursor, off, gs) == length(e, gs).value


class TestBranch:
    @given(elements, st.sampled_from(list(GenSet)))
    def test_branch_matches_sides(self, e, gs):
        rep = length(e, gs)
        one_sided = all(p > 0 for p in e.bulbs) or all(p <= 0 for p in e.bulbs)
        assert (rep.branch is Branch.SINGLE_SIDE) == one_sided


class TestUnitStep:
    @settings(max_examples=300)
    @given(elements, st.sampled_from(list(GenSet)))
    def test_neighbours_differ_by_one(self, e, gs):
        n = length(e, gs).value
        for g in gs.letters:
            assert abs(length(apply_generator(e, g), gs).value - n) == 1


class TestDistance:
    def test_self(self):
        assert distance(FIG2, FIG2, "automata") == 0

    def test_identity_to_a(self):
        assert distance(E.identity(), A, "automata") == 2

    @pytest.mark.parametrize("k", range(1, 6))
    def test_shortened_wk_diverge(self, k):
        w = make_wk(k)
        for s in range(1, k + 1):
            right = evaluate(Word.parse("t" * s, "automata"))
            left = evaluate(Word.parse("T" * s, "automata"))
            assert distance(w * right, w * left, "automata") == 2 * s

    @given(elements, elements, elements, st.sampled_from(list(GenSet)))
    def test_metric_axioms(self, x, y, z, gs):
        assert distance(x, y, gs) == distance(y, x, gs)
        assert distance(x, z, gs) <= distance(x, y, gs) + distance(y, z, gs)

    def test_against_bfs(self):
        rng = random.Random(7)
        for _ in range(20):
            for gs in GenSet:
                x = evaluate(Word(tuple(rng.choice(gs.letters) for _ in range(8)), gs))
                y = evaluate(Word(tuple(rng.choice(gs.letters) for _ in range(8)), gs))
                assert distance(x, y, gs) == bfs_distance(x, y, gs)


class TestBuildGeodesic:
    def test_identity(self):
        assert len(build_geodesic(E.identity(), "automata")) == 0
        assert len(build_geodesic(E.identity(), "wreath")) == 0

    def test_fig2_is_the_listed_word(self):
        word = build_geodesic(FIG2, "automata")
        assert str(word) == "tttrrrTTTTTTTRTTTTRttttt"

    def test_a(self):
        assert str(build_geodesic(A, "automata")) in ("Tr", "Rt")
        assert str(build_geodesic(A, "wreath")) == "a"

    @settings(max_examples=300)
    @given(elements, st.sampled_from(list(GenSet)))
    def test_valid(self, e, gs):
        word = build_geodesic(e, gs)
        assert evaluate(word) == e
        assert len(word) == length(e, gs).value

    def test_trajectory_starts_at_origin_ends_at_cursor(self):
        path = trajectory(FIG2, "automata")
        assert path[0] == 0 and path[-1] == -2
        assert min(path) == -7 and max(path) == 6


def _trajectory_product(e, gs):
    """Independent count for cursor-off-origin automata elements: one sweep,
    and each bulb site crossed c times offers 2^(c-1) toggle placements."""
    path = trajectory(e, gs)
    crossings = {}
    for p, q in zip(path, path[1:]):
        crossings[max(p, q)] = crossings.get(max(p, q), 0) + 1
    total = 1
    for c in crossings.values():
        total *= 2 ** (c - 1)
    return total


class TestCountGeodesics:
    def test_a(self):
        assert count_geodesics(A, "automata").count == 2

    def test_t(self):
        assert count_geodesics(E((), 1), "automata").count == 1

    def test_identity(self):
        rep = count_geodesics(E.identity(), "wreath")
        assert (rep.count, rep.u, rep.cursor_at_origin) == (1, 0, True)

    def test_fig2(self):
        rep = count_geodesics(FIG2, "automata")
        assert rep.u == 11
        assert rep.count == _trajectory_product(FIG2, "automata") == 2**11
        assert rep.count >= 2**10

    @pytest.mark.parametrize("gs, max_len", [("automata", 6), ("wreath", 7)])
    def test_against_brute_force(self, gs, max_len):
        for e, (n, words) in enumerate_words(gs, max_len).items():
            assert count_geodesics(e, gs).count == words, e

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            count_geodesics(FIG2, "automata", budget=23)
        count_geodesics(FIG2, "automata", budget=24)

    @settings(max_examples=100, deadline=None)
    @given(
        st.builds(E, st.lists(st.integers(-5, 5), max_size=6).map(tuple), st.integers(-5, 5)),
        st.sampled_from(list(GenSet)),
    )
    def test_lower_bound(self, e, gs):
        rep = count_geodesics(e, gs)
        assert rep.count >= 2**rep.u
        if e.cursor == 0 and any(p > 0 for p in e.bulbs) and any(p <= 0 for p in e.bulbs):
            # wreath sweeps coincide when the leftmost bulb sits at the origin
            if gs is GenSet.AUTOMATA or min(e.bulbs) < 0:
                assert rep.count >= 2 ** (rep.u + 1)

    def test_wreath_origin_leftmost_has_one_sweep(self):
        rep = count_geodesics(E((0, 1), 0), "wreath")
        assert (rep.count, rep.u) == (2, 1)

    def test_doubly_visited_wreath_counts_lit_only(self):
        # 0 -> 2 -> -2 -> 0: bulbs 1 and -1 are passed twice, the extremes once
        assert doubly_visited(E((1, 2, -2), 0), "wreath") == 1
        assert doubly_visited(E((2, -2), 0), "wreath") == 0


class TestLeftLight:
    def test_empty(self):
        assert check_left_light(Word.parse("", "automata"))

    def test_a_representative(self):
        assert check_left_light(Word.parse("Tr", "automata"))

    def test_wreath_rejected(self):
        with pytest.raises(ValueError):
            check_left_light(Word.parse("a", "wreath"))

    @settings(max_examples=500)
    @given(st.lists(st.sampled_from(GenSet.AUTOMATA.letters), max_size=40))
    def test_always_true(self, letters):
        assert check_left_light(Word(tuple(letters), GenSet.AUTOMATA))
