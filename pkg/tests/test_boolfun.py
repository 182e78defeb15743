from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stte.boolfun import (
    PolyParseError,
    anf_from_tt,
    eval_anf,
    eval_tt,
    parse_poly,
    print_poly,
    tt_from_anf,
    tt_of,
)

POINTS = list(product((0, 1), repeat=3))


def pointwise_mask(f):
    """Truth table built by evaluating a Python function at the 8 points."""
    return sum(f(x, y, z) << (4 * x + 2 * y + z) for x, y, z in POINTS)


def test_eval_examples():
    assert all(eval_tt(0x00, *p) == 0 for p in POINTS)
    assert pointwise_mask(lambda x, y, z: y) == 0xCC
    assert eval_tt(0xCC, 1, 1, 0) == 1
    assert pointwise_mask(lambda x, y, z: x ^ z) == 0x5A
    assert eval_tt(0x5A, 1, 0, 1) == 0


def test_anf_examples():
    assert anf_from_tt(0x00) == 0
    assert pointwise_mask(lambda x, y, z: (x & y) ^ x ^ y) == 0xFC
    assert print_poly(anf_from_tt(0xFC)) == "xy+x+y"
    assert print_poly(anf_from_tt(0x80)) == "xyz"
    assert tt_from_anf(parse_poly("xy+x+y")) == 0xFC
    assert tt_from_anf(parse_poly("xyz")) == 0x80
    assert tt_from_anf(0) == 0


@pytest.mark.parametrize("tt", range(256))
def test_tt_anf_round_trip(tt):
    assert tt_from_anf(anf_from_tt(tt)) == tt


@pytest.mark.parametrize("p", range(256))
def test_print_parse_round_trip_and_evaluation(p):
    assert parse_poly(print_poly(p)) == p
    tt = tt_from_anf(p)
    for pt in POINTS:
        assert eval_tt(tt, *pt) == eval_anf(p, *pt)


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", 0),
        ("x+z", (1 << 4) | (1 << 1)),
        ("xyz+xy+xz+yz+x+y+z", 0xFE),
        ("y+y", 0),
        ("yx", 1 << 6),
        (" x z + 1 ", (1 << 5) | 1),
        ("1+1+1", 1),
    ],
)
def test_parse(text, expected):
    assert parse_poly(text) == expected


@pytest.mark.parametrize(
    "coeffs, text",
    [(0, "0"), ((1 << 4) | (1 << 1), "x+z"), (0xFF, "xyz+xy+xz+yz+x+y+z+1")],
)
def test_print(coeffs, text):
    assert print_poly(coeffs) == text


@pytest.mark.parametrize(
    "text, pos",
    [("", 0), ("x+", 2), ("+x", 0), ("x*y", 1), ("xq", 1), ("x++y", 2), ("xx", 1), ("2", 0)],
)
def test_parse_errors_carry_position(text, pos):
    with pytest.raises(PolyParseError) as info:
        parse_poly(text)
    assert info.value.pos == pos


@given(st.lists(st.sampled_from(["1", "x", "y", "z", "xy", "yz", "zx", "xyz", "zyx"]), min_size=1))
def test_parse_is_xor_of_terms(terms):
    expected = 0
    for t in terms:
        expected ^= parse_poly(t)
    assert parse_poly("+".join(terms)) == expected
    assert tt_of("+".join(terms)) == tt_from_anf(expected)
