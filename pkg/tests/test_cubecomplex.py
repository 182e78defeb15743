import random

import numpy as np
import pytest

from stte.cubecomplex import (
    FACES,
    SUBCUBES,
    boundary3_matrix,
    boundary4_matrix,
    enumerate_permitted4_bruteforce,
    enumerate_permitted4_propagate,
    face_index,
    format_matrix,
    is_permitted4,
    permitted3,
    sink_faces,
    source_faces,
)
from stte.intlinalg import rank
from stte.rmap import IDENTITY, LEGS_LHS, RMap
from stte.search import ConsistencyError


def test_face_layout():
    assert len(FACES) == 24 and len(set(FACES)) == 24
    for f, face in enumerate(FACES):
        coords = dict(face.fixed_coords)
        pair = tuple(ax for ax in (1, 2, 3, 4) if ax not in coords)
        assert face_index(pair, coords) == f
    assert len(SUBCUBES) == 8
    # classes met by the 3-faces reproduce the leg triples of the equation
    classes = {}
    for sc in SUBCUBES:
        classes[sc.free] = tuple(FACES[f].pair_class for f in sc.incoming)
    assert sorted(classes.values()) == sorted(LEGS_LHS)


def test_sources_and_sinks():
    assert len(source_faces()) == 6
    assert len(sink_faces()) == 6
    assert not set(source_faces()) & set(sink_faces())


def test_permitted3(R):
    assert permitted3(IDENTITY, (0, 1, 0)) == ((0, 1, 0), (0, 1, 0))
    assert permitted3(R(37), (1, 0, 1)).outgoing == (0, 0, 0)


def _class_constant(values):
    col = 0
    for f, face in enumerate(FACES):
        col |= values[face.pair_class - 1] << f
    return col


def test_is_permitted4_identity():
    assert is_permitted4(IDENTITY, 0)
    # one face of class 1 differs from its three parallel faces
    assert not is_permitted4(IDENTITY, 1 << 0)


def test_propagation_identity_sources():
    cols = enumerate_permitted4_propagate(IDENTITY)
    assert len(cols) == 64
    assert _class_constant((1, 0, 0, 0, 0, 0)) in cols
    assert sorted(_class_constant([(k >> i) & 1 for i in range(6)]) for k in range(64)) == cols


@pytest.mark.slow
def test_bruteforce_identity_and_r37(R):
    ident = enumerate_permitted4_bruteforce(IDENTITY)
    assert len(ident) == 64
    assert ident == enumerate_permitted4_propagate(IDENTITY)
    r37 = enumerate_permitted4_bruteforce(R(37))
    assert len(r37) == 64
    assert r37 == enumerate_permitted4_propagate(R(37))


def test_bruteforce_non_solution_still_defined():
    R = RMap.from_polys("z", "y", "x")
    cols = enumerate_permitted4_bruteforce(R, block=1 << 22)
    assert all(is_permitted4(R, c) for c in cols)
    assert len(cols) != 64
    with pytest.raises(ConsistencyError):
        enumerate_permitted4_propagate(R)


def test_boundary3_examples(R):
    assert boundary3_matrix(R(37))[:, 0].tolist() == [0, 0, -1, -1, 0, -2, -1, -3]
    assert boundary3_matrix(R(400))[:, 0].tolist() == [3, 1, 1, -1, 1, -1, -1, -3]


def test_boundary3_entry_formula_by_hand(R):
    M = boundary3_matrix(R(37))
    # t = (1,0,1): inputs contain one 0 and two 1s; outputs (0,0,0)
    assert M[5].tolist() == [1 - 3, 2 - 0]


def test_boundary4_identity_is_zero():
    assert not boundary4_matrix(IDENTITY).any()


def test_boundary4_refuses_non_solution():
    with pytest.raises(ValueError):
        boundary4_matrix(RMap.from_polys("z", "y", "x"))


def test_complex_invariants_all_solutions(solutions):
    for S in solutions:
        M3 = boundary3_matrix(S)
        M4 = boundary4_matrix(S)
        assert M4.shape == (64, 8)
        assert not M3.sum(axis=1).any()
        assert (M3[:, 1] == -M3[:, 0]).all()
        assert not M4.sum(axis=1).any()
        assert not (M4 @ M3).any()
        assert not (M4 @ np.ones(8, dtype=np.int64)).any()
        assert rank(M3) <= 1
        assert rank(M4) <= 7


def test_propagation_rows_are_permitted(solutions):
    rng = random.Random(3)
    for S in rng.sample(list(solutions), 20):
        cols = enumerate_permitted4_propagate(S)
        assert len(set(cols)) == 64
        assert all(is_permitted4(S, c) for c in cols)


def test_format_matrix():
    text = format_matrix([[1, -2], [0, 3]], header=["rows: t", "cols: color"])
    assert text == "# rows: t\n# cols: color\n1 -2\n0 3\n"
