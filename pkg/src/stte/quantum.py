"""Linear operators built from R-operators and the quantum tetrahedron equation.

The operator sends ``e_x (x) e_y (x) e_z`` to ``c(x,y,z) e_R(x,y,z)``.  The
cocycle ``c`` is realised as ``t ** w[4x+2y+z]`` for an integer 3-cocycle
``w`` and a rational ``t``; all arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Sequence

import numpy as np

from .cubecomplex import boundary4_matrix
from .rmap import LEGS_LHS, LEGS_RHS, TRIPLES, RMap, apply

__all__ = ["Cocycle", "build_qoperator", "check_qte", "embed_on_legs"]


@dataclass(frozen=True)
class Cocycle:
    w: tuple[int, ...]
    t: Fraction = Fraction(2)

    def __post_init__(self):
        object.__setattr__(self, "w", tuple(int(a) for a in self.w))
        object.__setattr__(self, "t", Fraction(self.t))
        if len(self.w) != 8:
            raise ValueError("cocycle exponent vector needs 8 entries")
        if self.t in (0, 1, -1):
            raise ValueError(f"t = {self.t} is degenerate for a twist")

    def value(self, index: int) -> Fraction:
        return self.t ** self.w[index]

    def is_cocycle_for(self, R: RMap) -> bool:
        return not np.any(boundary4_matrix(R) @ np.array(self.w, dtype=np.int64))


def build_qoperator(R: RMap, c: Cocycle | None = None, check: bool = True) -> np.ndarray:
    """8x8 matrix (object dtype, Fraction entries) of the twisted operator.

    ``check=False`` skips the cocycle condition; it exists so tests can
    show what goes wrong without it.
    """
    if c is not None and check and not c.is_cocycle_for(R):
        raise ValueError(f"w = {c.w} is not a 3-cocycle for {R}")
    Q = np.full((8, 8), Fraction(0), dtype=object)
    for t in TRIPLES:
        col = 4 * t[0] + 2 * t[1] + t[2]
        out = apply(R, t)
        Q[4 * out[0] + 2 * out[1] + out[2], col] = Fraction(1) if c is None else c.value(col)
    return Q


def _local_index(s: int, legs: Sequence[int]) -> int:
    i, j, k = (((s >> (6 - leg)) & 1) for leg in legs)
    return 4 * i + 2 * j + k


@lru_cache(maxsize=None)
def _embedding_pattern(legs: tuple[int, int, int]):
    leg_mask = sum(1 << (6 - leg) for leg in legs)
    rows, cols = np.nonzero(
        (np.arange(64)[:, None] & ~leg_mask) == (np.arange(64)[None, :] & ~leg_mask)
    )
    local_rows = np.array([_local_index(int(r), legs) for r in rows])
    local_cols = np.array([_local_index(int(c), legs) for c in cols])
    return rows, cols, local_rows, local_cols


def embed_on_legs(Q: np.ndarray, legs: Sequence[int]) -> np.ndarray:
    """64x64 matrix acting as ``Q`` on the given tensor legs, identity elsewhere."""
    legs = tuple(legs)
    if len(legs) != 3 or not 1 <= legs[0] < legs[1] < legs[2] <= 6:
        raise ValueError(f"invalid leg triple {legs}")
    rows, cols, lr, lc = _embedding_pattern(legs)
    E = np.full((64, 64), Q.flat[0] * 0, dtype=Q.dtype)
    E[rows, cols] = Q[lr, lc]
    return E


def _integer_operator(R: RMap, c: Cocycle | None) -> np.ndarray:
    """The operator times the lcm of its entry denominators, as integers."""
    if c is None:
        values = [1] * 8
    else:
        fracs = [c.value(i) for i in range(8)]
        scale = lcm(*(f.denominator for f in fracs))
        values = [int(f * scale) for f in fracs]
    small = max(abs(v) for v in values) < 1 << 31
    Q = np.zeros((8, 8), dtype=np.int64 if small else object)
    for t in TRIPLES:
        col = 4 * t[0] + 2 * t[1] + t[2]
        out = apply(R, t)
        Q[4 * out[0] + 2 * out[1] + out[2], col] = values[col]
    return Q


def _exact_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    # int64 only when no partial sum can overflow; otherwise Python ints.
    bound = int(np.max(np.abs(A))) * int(np.max(np.abs(B))) * A.shape[1]
    if bound < 1 << 62:
        return A.astype(np.int64, copy=False) @ B.astype(np.int64, copy=False)
    return A.astype(object).dot(B.astype(object))


def _product(Q: np.ndarray, legs_in_order) -> np.ndarray:
    result = None
    for legs in legs_in_order:
        E = embed_on_legs(Q, legs)
        result = E if result is None else _exact_matmul(result, E)
    return result


def check_qte(R: RMap, c: Cocycle | None = None, check: bool = True) -> bool:
    """Exact check of the quantum tetrahedron equation for the operator of ``R``.

    Both sides are products of the same four embedded factors, so scaling
    the operator to integer entries scales both sides by the same nonzero
    factor and leaves the equality unchanged.
    """
    if c is not None and check and not c.is_cocycle_for(R):
        raise ValueError(f"w = {c.w} is not a 3-cocycle for {R}")
    Q = _integer_operator(R, c)
    lhs = _product(Q, LEGS_LHS)
    rhs = _product(Q, LEGS_RHS)
    return bool(np.array_equal(lhs, rhs))
