import numpy as np
import pytest

from stte.rmap import IDENTITY, RMap, image_cardinality, satisfies_stte, sigma1_conjugate, sigma2_conjugate
from stte.search import (
    ConsistencyError,
    SolutionSet,
    enumerate_solutions,
    histogram_by_image_cardinality,
    orbit_decomposition,
    search_range,
)


def test_search_range_matches_scalar_check():
    lo = 0x3C5A00
    found = search_range(lo, lo + 4096).tolist()
    expected = [c for c in range(lo, lo + 4096) if satisfies_stte(RMap.from_code(c))]
    assert found == expected


def test_enumeration_basics(solutions, R):
    assert len(solutions) == 406
    assert IDENTITY in solutions
    assert R(1) in solutions
    assert RMap.from_polys("0", "0", "0") in solutions
    keys = [(image_cardinality(S), S.code) for S in solutions]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_histogram(solutions):
    assert histogram_by_image_cardinality(solutions) == {1: 2, 2: 62, 3: 98, 4: 164, 5: 16, 6: 36, 7: 2, 8: 26}
    assert histogram_by_image_cardinality([]) == dict.fromkeys(range(1, 9), 0)
    assert {k: len(v) for k, v in solutions.by_cardinality.items()} == {
        k: v for k, v in histogram_by_image_cardinality(solutions).items() if v
    }


def test_parallel_enumeration_identical(solutions):
    assert enumerate_solutions(jobs=3).solutions == solutions.solutions


def test_closure_under_sigma(solutions):
    assert {sigma1_conjugate(S) for S in solutions} == set(solutions)
    assert {sigma2_conjugate(S) for S in solutions} == set(solutions)


def test_orbits(solutions, R):
    orbits = orbit_decomposition(solutions)
    assert sum(len(o) for o in orbits) == 406
    assert {len(o) for o in orbits} == {1, 2, 4}
    first_members = [o.members[0] for o in orbits]
    assert first_members == sorted(first_members, key=lambda S: (image_cardinality(S), S.code))
    by_member = {S: o for o in orbits for S in o.members}

    o12 = by_member[R(1)]
    assert set(o12.members) == {R(1), R(2)}
    assert [label for _, _, label in o12.edges] == ["sigma2"]
    assert o12.self_symmetries == {"sigma1"}

    o63 = by_member[R(63)]
    assert o63.members == (R(63),) and not o63.edges
    assert o63.self_symmetries == {"sigma1", "sigma2"}

    square = by_member[R(3)]
    assert set(square.members) == {R(3), R(4), R(5), R(6)}
    edges = {(frozenset((a, b)), label) for a, b, label in square.edges}
    assert edges == {
        (frozenset((R(3), R(4))), "sigma1"),
        (frozenset((R(5), R(6))), "sigma1"),
        (frozenset((R(3), R(5))), "sigma2"),
        (frozenset((R(4), R(6))), "sigma2"),
    }
    assert not square.self_symmetries


def test_orbit_decomposition_rejects_unclosed_set(R):
    with pytest.raises(ConsistencyError):
        orbit_decomposition([R(3)])


def test_solution_set_deduplicates():
    s = SolutionSet((IDENTITY, IDENTITY))
    assert len(s) == 1
    assert SolutionSet.from_codes(np.array([IDENTITY.code])).solutions == (IDENTITY,)
