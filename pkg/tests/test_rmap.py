import random
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from stte.boolfun import anf_from_tt, eval_anf
from stte.rmap import (
    IDENTITY,
    RMap,
    apply,
    apply_at,
    image_cardinality,
    is_bijective,
    parse_rmap,
    satisfies_stte,
    sigma1_conjugate,
    sigma2_conjugate,
)

codes = st.integers(0, (1 << 24) - 1)


def naive_stte(R: RMap) -> bool:
    """Slot-list evaluation of both sides with components read from the ANF."""
    anfs = [anf_from_tt(r) for r in R.components]

    def Rmap(t):
        return tuple(eval_anf(a, *t) for a in anfs)

    def act(state, legs):
        state = list(state)
        out = Rmap([state[leg - 1] for leg in legs])
        for leg, v in zip(legs, out):
            state[leg - 1] = v
        return state

    for state in product((0, 1), repeat=6):
        lhs, rhs = list(state), list(state)
        for legs in ((3, 5, 6), (2, 4, 6), (1, 4, 5), (1, 2, 3)):
            lhs = act(lhs, legs)
        for legs in ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6)):
            rhs = act(rhs, legs)
        if lhs != rhs:
            return False
    return True


def state(*bits):
    return int("".join(map(str, bits)), 2)


def test_code_round_trip():
    R = RMap.from_polys("0", "x+z", "0")
    assert R.code == 0x005A00
    assert RMap.from_code(R.code) == R
    with pytest.raises(ValueError):
        RMap.from_code(1 << 24)


def test_parse_rmap_forms():
    R37 = RMap.from_polys("0", "x+z", "0")
    assert parse_rmap(["0", "x+z", "0"]) == R37
    assert parse_rmap(["23040"]) == R37
    assert parse_rmap(["0x005a00"]) == R37
    assert parse_rmap(["005a00"]) == R37
    with pytest.raises(ValueError):
        parse_rmap(["x", "y"])


def test_apply_examples(R):
    assert apply(IDENTITY, (0, 1, 1)) == (0, 1, 1)
    assert apply(R(37), (1, 0, 0)) == (0, 1, 0)
    assert all(apply(R(1), t) == (0, 0, 0) for t in product((0, 1), repeat=3))


def test_apply_at_examples(R):
    for s in range(64):
        assert apply_at(IDENTITY, s, (2, 4, 6)) == s
    swap = RMap.from_polys("y", "x", "z")
    assert apply_at(swap, state(0, 1, 0, 0, 0, 0), (1, 2, 3)) == state(1, 0, 0, 0, 0, 0)
    assert apply_at(R(37), state(1, 0, 0, 0, 0, 0), (1, 4, 5)) == state(0, 0, 0, 1, 0, 0)


@pytest.mark.parametrize("legs", [(1, 1, 2), (3, 2, 1), (0, 1, 2), (4, 5, 7)])
def test_apply_at_rejects_bad_legs(legs):
    with pytest.raises(ValueError):
        apply_at(IDENTITY, 0, legs)


def test_stte_examples():
    assert satisfies_stte(IDENTITY)
    assert satisfies_stte(RMap.from_polys("y", "x", "z"))
    assert not satisfies_stte(RMap.from_polys("z", "y", "x"))
    assert not naive_stte(RMap.from_polys("z", "y", "x"))


def test_image_cardinality_examples(R):
    assert image_cardinality(IDENTITY) == 8
    assert R(63) == RMap.from_polys("y", "y", "y")
    assert image_cardinality(R(63)) == 2
    assert image_cardinality(R(379)) == 7
    assert is_bijective(IDENTITY)
    assert not is_bijective(R(1))
    assert is_bijective(R(400))


def test_sigma_examples(R):
    assert sigma1_conjugate(R(3)) == R(4) == RMap.from_polys("y", "0", "0")
    assert sigma1_conjugate(IDENTITY) == IDENTITY
    assert sigma1_conjugate(R(387)) == R(388) == RMap.from_polys("y", "x", "z")
    assert sigma2_conjugate(R(1)) == R(2)
    assert sigma2_conjugate(R(63)) == R(63)
    assert sigma2_conjugate(R(37)) == R(38) == RMap.from_polys("1", "x+z+1", "1")


def test_stte_agrees_with_naive_on_random_sample(solutions):
    rng = random.Random(20240607)
    sample = [RMap.from_code(rng.randrange(1 << 24)) for _ in range(100_000)]
    sample += list(solutions)
    hits = 0
    for R in sample:
        fast = satisfies_stte(R)
        assert fast == naive_stte(R), R
        hits += fast
    assert hits >= len(solutions)


def test_sigma_involutive_and_commuting_on_random_sample():
    rng = random.Random(7)
    for _ in range(100_000):
        R = RMap.from_code(rng.randrange(1 << 24))
        s1, s2 = sigma1_conjugate(R), sigma2_conjugate(R)
        assert sigma1_conjugate(s1) == R
        assert sigma2_conjugate(s2) == R
        assert sigma1_conjugate(s2) == sigma2_conjugate(s1)


@given(codes)
def test_image_cardinality_invariant_under_sigma(code):
    R = RMap.from_code(code)
    k = image_cardinality(R)
    assert image_cardinality(sigma1_conjugate(R)) == k
    assert image_cardinality(sigma2_conjugate(R)) == k


def test_sigma_preserves_solutions(solutions):
    for R in solutions:
        assert satisfies_stte(sigma1_conjugate(R))
        assert satisfies_stte(sigma2_conjugate(R))
