from math import factorial

import pytest
from hypothesis import given, strategies as st

from diskstrip import (
    DomainError,
    StripParams,
    Symbol,
    SymbolParseError,
    dimension,
    enumerate_cells,
    faces,
    format_symbol,
    parse_symbol,
)

from conftest import SMALL, brute_cells, composition_count, texts


def test_parse_simple():
    assert parse_symbol("3 1|2") == Symbol(((3, 1), (2,)))


def test_parse_figure_symbol():
    s = parse_symbol("14 10 9 8|13 7 6 5|12 4 3 2|11 1")
    assert s.n == 14
    assert len(s.blocks) == 4
    assert s.blocks[0] == (14, 10, 9, 8)


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("1 2|2", "duplicate label 2"),
        ("1|3", "missing label 2"),
        ("1||2", "empty block"),
        ("1 x|2", "'x'"),
        ("01|2", "'01'"),
        ("", "empty block"),
        ("1 -2", "'-2'"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(SymbolParseError, match=fragment):
        parse_symbol(text)


@pytest.mark.parametrize(
    "blocks, text",
    [(((3, 1), (2,)), "3 1|2"), (((1,), (2,), (3,)), "1|2|3"), (((2, 1, 3),), "2 1 3")],
)
def test_format(blocks, text):
    assert format_symbol(Symbol(blocks)) == text


def test_parse_normalizes_whitespace():
    assert format_symbol(parse_symbol("  3   1 |\t2 ")) == "3 1|2"


@given(st.permutations(list(range(1, 9))), st.data())
def test_roundtrip(perm, data):
    cuts = data.draw(st.sets(st.integers(1, len(perm) - 1)))
    bounds = [0, *sorted(cuts), len(perm)]
    s = Symbol(tuple(tuple(perm[a:b]) for a, b in zip(bounds, bounds[1:])))
    assert parse_symbol(format_symbol(s)) == s
    assert s.dimension + len(s.blocks) == s.n


def test_width_one_rejected():
    with pytest.raises(DomainError):
        StripParams(3, 1)
    with pytest.raises(DomainError):
        StripParams(0, 2)


def test_enumerate_2_2():
    assert texts(enumerate_cells(StripParams(2, 2))) == {"1|2", "2|1", "1 2", "2 1"}


@pytest.mark.parametrize("n, w, total, by_dim", [(3, 2, 18, {0: 6, 1: 12}), (3, 3, 24, {0: 6, 1: 12, 2: 6})])
def test_enumerate_counts(n, w, total, by_dim):
    p = StripParams(n, w)
    assert len(enumerate_cells(p)) == total
    for d, c in by_dim.items():
        assert len(enumerate_cells(p, d)) == c


@pytest.mark.parametrize("n, w", SMALL)
def test_enumeration_matches_brute_force(n, w):
    p = StripParams(n, w)
    cells = enumerate_cells(p)
    assert texts(cells) == brute_cells(n, w)
    assert len(cells) == len(texts(cells))
    for d in range(-1, n + 1):
        expected = factorial(n) * composition_count(n, w, n - d) if d >= 0 else 0
        got = enumerate_cells(p, d)
        assert len(got) == expected
        assert all(s.dimension == d and s.fits(w) for s in got)


def test_enumeration_order_is_lexicographic():
    cells = [format_symbol(s) for s in enumerate_cells(StripParams(4, 3))]
    assert cells == sorted(cells)


@pytest.mark.parametrize("n, w, d", [(3, 2, 1), (1, 4, 0), (14, 4, 10), (6, 4, 4), (7, 2, 3)])
def test_dimension(n, w, d):
    assert dimension(StripParams(n, w)) == d


@pytest.mark.parametrize("n, w", SMALL)
def test_dimension_is_max_cell_dimension(n, w):
    p = StripParams(n, w)
    assert dimension(p) == max(s.dimension for s in enumerate_cells(p))
    assert enumerate_cells(p, dimension(p) + 1) == []


def test_faces_examples():
    assert faces(parse_symbol("1 2|3")) == [(parse_symbol("1|2|3"), 1), (parse_symbol("2|1|3"), 1)]
    assert [format_symbol(f) for f, _ in faces(parse_symbol("1 2"))] == ["1|2", "2|1"]
    assert faces(parse_symbol("1|2|3")) == []


@pytest.mark.parametrize("n, w", [(3, 3), (4, 2), (4, 4), (5, 3)])
def test_face_invariants(n, w):
    p = StripParams(n, w)
    for s in enumerate_cells(p):
        fs = faces(s)
        assert sum(k for _, k in fs) == sum(2 ** len(b) - 2 for b in s.blocks)
        for f, _ in fs:
            assert f.dimension == s.dimension - 1
            assert f.fits(w)
            Symbol(f.blocks)  # validates


def test_face_multiplicities_are_one():
    # splitting a block into two order-inherited parts is recoverable from the face
    for s in enumerate_cells(StripParams(5, 5)):
        assert all(k == 1 for _, k in faces(s))
