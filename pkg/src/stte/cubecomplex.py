"""Permitted colorings of the 3- and 4-cube and the boundary matrices.

Face conventions
----------------
A 2-face of the 4-cube is given by the pair of axes it spans and by the
values of the two remaining coordinates.  The six pairs are ordered
``(1,2), (1,3), (2,3), (1,4), (2,4), (3,4)`` (classes 1..6), and face
number ``4*(class-1) + 2*u + w`` has the smaller fixed coordinate equal to
``u`` and the larger equal to ``w``.  A :data:`Coloring4` is a 24-bit
integer whose bit ``f`` is the color of face ``f``.

In a 3-cube with free axes ``a < b < c`` the argument ``j`` of ``R`` sits on
the face normal to the ``(4-j)``-th axis: argument 1 on ``x_c = 0``,
argument 2 on ``x_b = 1``, argument 3 on ``x_a = 0``; output ``j`` sits on
the opposite face.  The incoming 3-faces of the 4-cube are ``x1 = 0``,
``x2 = 1``, ``x3 = 0``, ``x4 = 1``.
"""

from __future__ import annotations

from itertools import combinations
from typing import NamedTuple, Sequence

import numpy as np

from .rmap import TRIPLES, RMap, apply, satisfies_stte
from .search import ConsistencyError

__all__ = [
    "Cube3Coloring",
    "Face2",
    "FACES",
    "SUBCUBES",
    "boundary3_matrix",
    "boundary4_matrix",
    "enumerate_permitted4_bruteforce",
    "enumerate_permitted4_propagate",
    "face_index",
    "format_matrix",
    "incoming_3faces",
    "is_permitted4",
    "permitted3",
    "sink_faces",
    "source_faces",
]

PAIRS = ((1, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 4))


class Face2(NamedTuple):
    pair_class: int  # 1..6, see PAIRS
    fixed_coords: tuple  # ((axis, value), (axis, value)), axes ascending


def _make_faces():
    faces = []
    for cls, pair in enumerate(PAIRS, 1):
        lo, hi = (ax for ax in (1, 2, 3, 4) if ax not in pair)
        for u in (0, 1):
            for w in (0, 1):
                faces.append(Face2(cls, ((lo, u), (hi, w))))
    return tuple(faces)


FACES = _make_faces()


def face_index(pair: tuple[int, int], coords: dict[int, int]) -> int:
    """Bit position of the face spanning ``pair`` at the given fixed coordinates."""
    cls = PAIRS.index(tuple(sorted(pair)))
    lo, hi = sorted(ax for ax in (1, 2, 3, 4) if ax not in pair)
    return 4 * cls + 2 * coords[lo] + coords[hi]


class Subcube(NamedTuple):
    free: tuple[int, int, int]
    fixed_axis: int
    fixed_value: int
    incoming: tuple[int, int, int]  # face index for arguments 1, 2, 3
    outgoing: tuple[int, int, int]  # face index for outputs 1, 2, 3


def _make_subcubes():
    cubes = []
    for free in combinations((1, 2, 3, 4), 3):
        (d,) = (ax for ax in (1, 2, 3, 4) if ax not in free)
        a, b, c = free
        for v in (0, 1):
            # (pair, normal axis, incoming value of the normal coordinate)
            roles = (((a, b), c, 0), ((a, c), b, 1), ((b, c), a, 0))
            inc = tuple(face_index(p, {n: x, d: v}) for p, n, x in roles)
            out = tuple(face_index(p, {n: 1 - x, d: v}) for p, n, x in roles)
            cubes.append(Subcube(free, d, v, inc, out))
    return tuple(cubes)


SUBCUBES = _make_subcubes()


def incoming_3faces() -> tuple[tuple[Subcube, Subcube], ...]:
    """Pairs (incoming, outgoing) of 3-faces, one pair per fixed axis 1..4."""
    pairs = []
    for d in (1, 2, 3, 4):
        in_val = 0 if d % 2 else 1
        by_val = {sc.fixed_value: sc for sc in SUBCUBES if sc.fixed_axis == d}
        pairs.append((by_val[in_val], by_val[1 - in_val]))
    return tuple(pairs)


_BOUNDARY_FACES = incoming_3faces()


def source_faces() -> list[int]:
    """Faces incoming in both 3-subcubes that contain them."""
    inc = [f for sc in SUBCUBES for f in sc.incoming]
    return sorted(f for f in set(inc) if inc.count(f) == 2)


def sink_faces() -> list[int]:
    out = [f for sc in SUBCUBES for f in sc.outgoing]
    return sorted(f for f in set(out) if out.count(f) == 2)


def _propagation_order():
    known = set(source_faces())
    order = []
    pending = list(SUBCUBES)
    while pending:
        ready = [sc for sc in pending if all(f in known for f in sc.incoming)]
        if not ready:
            raise ConsistencyError("determination relation has a cycle")
        for sc in ready:
            order.append(sc)
            known.update(sc.outgoing)
            pending.remove(sc)
    return tuple(order)


_ORDER = _propagation_order()


class Cube3Coloring(NamedTuple):
    incoming: tuple[int, int, int]  # argument order
    outgoing: tuple[int, int, int]


def permitted3(R: RMap, triple: Sequence[int]) -> Cube3Coloring:
    """The permitted coloring of a single 3-cube with the given incoming colors."""
    t = tuple(int(b) for b in triple)
    return Cube3Coloring(t, apply(R, t))


def _bit(col: int, f: int) -> int:
    return (col >> f) & 1


def _restrict(col: int, faces: Sequence[int]) -> tuple[int, int, int]:
    return tuple(_bit(col, f) for f in faces)


def is_permitted4(R: RMap, col: int) -> bool:
    for sc in SUBCUBES:
        if apply(R, _restrict(col, sc.incoming)) != _restrict(col, sc.outgoing):
            return False
    return True


def enumerate_permitted4_bruteforce(R: RMap, block: int = 1 << 21) -> list[int]:
    """Filter every one of the 2^24 colorings; slow but assumption-free."""
    tabs = [np.array([(r >> i) & 1 for i in range(8)], dtype=np.uint8) for r in R.components]
    found = []
    for lo in range(0, 1 << 24, block):
        cols = np.arange(lo, lo + block, dtype=np.uint32)
        for sc in SUBCUBES:
            if cols.size == 0:
                break
            i1, i2, i3 = ((cols >> f) & 1 for f in sc.incoming)
            idx = (4 * i1 + 2 * i2 + i3).astype(np.uint8)
            ok = np.ones(cols.shape, dtype=bool)
            for tab, f in zip(tabs, sc.outgoing):
                ok &= tab[idx] == ((cols >> f) & 1)
            cols = cols[ok]
        found.extend(cols.tolist())
    return found


def enumerate_permitted4_propagate(R: RMap) -> list[int]:
    """All permitted colorings, built from the 64 choices of source colors.

    Requires ``R`` to solve the tetrahedron equation; otherwise two
    subcubes can disagree about a sink face and ConsistencyError is raised.
    """
    sources = source_faces()
    result = []
    for choice in range(64):
        colors = {f: (choice >> (5 - n)) & 1 for n, f in enumerate(sources)}
        for sc in _ORDER:
            out = apply(R, tuple(colors[f] for f in sc.incoming))
            for f, c in zip(sc.outgoing, out):
                if colors.setdefault(f, c) != c:
                    raise ConsistencyError(f"conflicting colors on face {f} for {R}")
        result.append(sum(c << f for f, c in colors.items()))
    result.sort()
    if len(set(result)) != len(result):
        raise ConsistencyError("propagation produced duplicate colorings")
    return result


def boundary3_matrix(R: RMap) -> np.ndarray:
    """8x2 matrix of the boundary of the 3-cube; row ``t``, column = color."""
    M = np.zeros((8, 2), dtype=np.int64)
    for t in TRIPLES:
        row = 4 * t[0] + 2 * t[1] + t[2]
        for x in t:
            M[row, x] += 1
        for x in apply(R, t):
            M[row, x] -= 1
    return M


def _triple_index(col: int, sc: Subcube, R: RMap) -> int:
    t = _restrict(col, sc.incoming)
    if apply(R, t) != _restrict(col, sc.outgoing):
        raise ConsistencyError(f"restriction of {col:#08x} to {sc.free}|x{sc.fixed_axis}={sc.fixed_value} not permitted")
    return 4 * t[0] + 2 * t[1] + t[2]


def boundary4_matrix(R: RMap, colorings: Sequence[int] | None = None) -> np.ndarray:
    """Boundary of the 4-cube: one row per permitted coloring, 8 columns."""
    if not satisfies_stte(R):
        raise ValueError(f"{R} does not satisfy the tetrahedron equation")
    if colorings is None:
        colorings = enumerate_permitted4_propagate(R)
    M = np.zeros((len(colorings), 8), dtype=np.int64)
    for row, col in enumerate(colorings):
        for inc, out in _BOUNDARY_FACES:
            M[row, _triple_index(col, inc, R)] += 1
            M[row, _triple_index(col, out, R)] -= 1
    return M


def format_matrix(M, header: Sequence[str] = ()) -> str:
    lines = [f"# {h}" for h in header]
    lines += [" ".join(str(int(v)) for v in row) for row in np.asarray(M)]
    return "\n".join(lines) + "\n"
