import random

import pytest
from hypothesis import assume, given, strategies as st

from legrid import (
    Convention,
    NotAPermutation,
    ParseError,
    SameComponent,
    SharedCell,
    SizeMismatch,
    UnknownComponent,
    grid_to_json,
    grid_to_text,
    linking_number,
    new_grid,
    parse_grid,
    reverse_component,
    to_front,
    writhe,
)

from helpers import brute_linking, brute_writhe, trace_components

UNKNOT = (2, [0, 1], [1, 0])
SPLIT = (4, [0, 1, 2, 3], [1, 0, 3, 2])
TREFOIL = (5, [0, 1, 2, 3, 4], [2, 3, 4, 0, 1])
# 4x4 two-component grid with two signed crossings, found by exhaustive
# search (see test_linking_hopf_search below).
HOPF = (4, [0, 1, 2, 3], [2, 3, 0, 1])


@st.composite
def grids(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    xs = draw(st.permutations(range(n)))
    os = draw(st.permutations(range(n)))
    assume(all(x != o for x, o in zip(xs, os)))
    return new_grid(n, xs, os)


class TestNewGrid:
    def test_minimal_unknot(self):
        g = new_grid(*UNKNOT)
        assert len(g.components) == 1

    def test_split_grid_has_two_components(self):
        g = new_grid(*SPLIT)
        assert [sorted(c.columns) for c in g.components] == [[0, 1], [2, 3]]

    def test_shared_cell(self):
        with pytest.raises(SharedCell):
            new_grid(2, [0, 1], [0, 1])

    def test_not_a_permutation(self):
        with pytest.raises(NotAPermutation):
            new_grid(2, [0, 0], [1, 0])
        with pytest.raises(NotAPermutation):
            new_grid(2, [0, 1], [1, 1])

    def test_size_mismatch(self):
        with pytest.raises(SizeMismatch):
            new_grid(3, [0, 1], [1, 0])
        with pytest.raises(SizeMismatch):
            new_grid(0, [], [])

    def test_one_by_one_is_forced_shared_cell(self):
        with pytest.raises(SharedCell):
            new_grid(1, [0], [0])

    @given(grids())
    def test_components_partition_columns(self, g):
        cols = sorted(c for comp in g.components for c in comp.columns)
        assert cols == list(range(g.n))
        assert [sorted(c.columns) for c in g.components] == trace_components(g.xs, g.os)


class TestFront:
    def test_unknot_front(self):
        f = to_front(new_grid(*UNKNOT))
        assert len(f.crossings) == 0
        assert f.cusps[0].total == 2

    def test_split_grid_has_no_inter_component_crossings(self):
        f = to_front(new_grid(*SPLIT))
        assert all(x.over_component == x.under_component for x in f.crossings)

    @given(grids())
    def test_cusp_parity(self, g):
        for conv in Convention:
            f = to_front(g, conv)
            assert all(cc.total % 2 == 0 for cc in f.cusps)

    def test_convention_parse(self):
        assert Convention.parse("nw-se") is Convention.NW_SE
        assert Convention.parse("ne-sw") is Convention.NE_SW
        with pytest.raises(ValueError):
            Convention.parse("sideways")


class TestWrithe:
    def test_unknot(self):
        assert writhe(new_grid(*UNKNOT), 0) == 0

    def test_split_components(self):
        g = new_grid(*SPLIT)
        assert writhe(g, 0) == 0
        assert writhe(g, 1) == 0

    def test_trefoil_matches_brute_force(self):
        n, xs, os = TREFOIL
        assert brute_writhe(xs, os, 0) == -3  # frozen from the sign oracle
        assert writhe(new_grid(n, xs, os), 0) == -3

    def test_random_grids_match_brute_force(self):
        rng = random.Random(11)
        for _ in range(100):
            n = rng.randint(2, 8)
            while True:
                xs = rng.sample(range(n), n)
                os = rng.sample(range(n), n)
                if all(x != o for x, o in zip(xs, os)):
                    break
            g = new_grid(n, xs, os)
            for comp in g.components:
                assert writhe(g, comp.index) == brute_writhe(xs, os, comp.index)

    def test_unknown_component(self):
        with pytest.raises(UnknownComponent):
            writhe(new_grid(*UNKNOT), 1)


class TestLinking:
    def test_split_link(self):
        assert linking_number(new_grid(*SPLIT), 0, 1) == 0

    def test_linking_hopf_search(self):
        # Exhaustive search over 4x4 grids: every two-component diagram
        # with |signed inter-component crossings| = 2 links once.
        from helpers import all_marker_lists, brute_crossings

        found = 0
        for xs, os in all_marker_lists(4):
            comps = trace_components(xs, os)
            if len(comps) != 2:
                continue
            signed = sum(s for _, _, s, a, b in brute_crossings(xs, os) if a != b)
            if abs(signed) == 2:
                found += 1
                assert abs(linking_number(new_grid(4, xs, os), 0, 1)) == 1
        assert found > 0

    def test_hopf_fixture(self):
        assert linking_number(new_grid(*HOPF), 0, 1) == -1

    def test_symmetry_and_reversal(self):
        rng = random.Random(23)
        seen = 0
        while seen < 100:
            n = rng.randint(4, 8)
            xs = rng.sample(range(n), n)
            os = rng.sample(range(n), n)
            if any(x == o for x, o in zip(xs, os)):
                continue
            g = new_grid(n, xs, os)
            if len(g.components) < 2:
                continue
            seen += 1
            a, b = rng.sample(range(len(g.components)), 2)
            lk = linking_number(g, a, b)
            assert lk == linking_number(g, b, a)
            assert lk == brute_linking(xs, os, a, b)
            assert linking_number(reverse_component(g, a), a, b) == -lk

    def test_same_component_rejected(self):
        with pytest.raises(SameComponent):
            linking_number(new_grid(*SPLIT), 1, 1)

    def test_unknown_component(self):
        with pytest.raises(UnknownComponent):
            linking_number(new_grid(*SPLIT), 0, 5)


class TestReverse:
    @given(grids())
    def test_involution(self, g):
        c = 0
        assert reverse_component(reverse_component(g, c), c) == g

    def test_reversed_unknot_is_valid(self):
        g = reverse_component(new_grid(*UNKNOT), 0)
        assert len(g.components) == 1

    def test_unknown_component(self):
        with pytest.raises(UnknownComponent):
            reverse_component(new_grid(*UNKNOT), 3)


class TestSerialization:
    def test_text_round_trip(self):
        g = new_grid(*TREFOIL)
        assert parse_grid(grid_to_text(g)) == g

    def test_text_format_example(self):
        g = parse_grid("n=2\nX=0,1\nO=1,0\n")
        assert (g.n, g.xs, g.os) == (2, (0, 1), (1, 0))

    def test_comments_and_blank_lines(self):
        text = "# the minimal unknot\n\nn=2\nX=0,1\n# markers\nO=1,0\n\n"
        assert parse_grid(text) == new_grid(*UNKNOT)

    def test_json_round_trip_is_byte_identical(self):
        g = new_grid(*SPLIT)
        emitted = grid_to_json(g)
        assert emitted == '{"n": 4, "x": [0, 1, 2, 3], "o": [1, 0, 3, 2]}'
        assert parse_grid(emitted) == g
        assert grid_to_json(parse_grid(emitted)) == emitted

    @given(grids())
    def test_round_trips_any_grid(self, g):
        assert parse_grid(grid_to_text(g)) == g
        assert parse_grid(grid_to_json(g)) == g

    def test_parse_error_positions(self):
        with pytest.raises(ParseError) as exc:
            parse_grid("n=2\nX=0,huh\nO=1,0\n")
        assert (exc.value.line, exc.value.column) == (2, 5)
        with pytest.raises(ParseError) as exc:
            parse_grid("m=2\nX=0,1\nO=1,0\n")
        assert exc.value.line == 1

    def test_bad_permutation_reports_line(self):
        with pytest.raises(NotAPermutation) as exc:
            parse_grid("n=2\nX=0,0\nO=1,0\n")
        assert "line 2" in str(exc.value)

    def test_json_rejects_extra_keys(self):
        with pytest.raises(ParseError):
            parse_grid('{"n": 2, "x": [0, 1], "o": [1, 0], "q": 1}')

    def test_missing_lines(self):
        with pytest.raises(ParseError):
            parse_grid("n=2\nX=0,1\n")
