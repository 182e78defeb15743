"""R-operators on two colors and the set-theoretic tetrahedron equation.

An R-operator is a map ``R: X^3 -> X^3`` with ``X = {0, 1}``, given by three
truth tables ``(r1, r2, r3)`` (see :mod:`stte.boolfun`).  Its canonical code
is the 24-bit integer ``r1 << 16 | r2 << 8 | r3``.

Six-slot states ``(x1, ..., x6)`` are packed into an integer in ``[0, 64)``
with ``x1`` as the most significant bit.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Sequence

from .boolfun import anf_from_tt, print_poly, tt_of

__all__ = [
    "IDENTITY",
    "LEGS_LHS",
    "LEGS_RHS",
    "RMap",
    "apply",
    "apply_at",
    "image_cardinality",
    "is_bijective",
    "parse_rmap",
    "satisfies_stte",
    "sigma1_conjugate",
    "sigma2_conjugate",
]

# Factors of R_123 R_145 R_246 R_356 = R_356 R_246 R_145 R_123, written
# left to right.  The rightmost factor acts first.
LEGS_LHS = ((1, 2, 3), (1, 4, 5), (2, 4, 6), (3, 5, 6))
LEGS_RHS = tuple(reversed(LEGS_LHS))

TRIPLES = tuple(product((0, 1), repeat=3))


@dataclass(frozen=True, order=True)
class RMap:
    r1: int
    r2: int
    r3: int

    @classmethod
    def from_code(cls, code: int) -> RMap:
        if not 0 <= code < 1 << 24:
            raise ValueError(f"code {code} outside [0, 2^24)")
        return cls((code >> 16) & 0xFF, (code >> 8) & 0xFF, code & 0xFF)

    @classmethod
    def from_polys(cls, p1: str, p2: str, p3: str) -> RMap:
        return cls(tt_of(p1), tt_of(p2), tt_of(p3))

    @property
    def code(self) -> int:
        return (self.r1 << 16) | (self.r2 << 8) | self.r3

    @property
    def components(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)

    def polys(self) -> tuple[str, str, str]:
        return tuple(print_poly(anf_from_tt(r)) for r in self.components)

    def __call__(self, x: int, y: int, z: int) -> tuple[int, int, int]:
        return apply(self, (x, y, z))

    def __str__(self) -> str:
        return "(" + ", ".join(self.polys()) + ")"


IDENTITY = RMap.from_polys("x", "y", "z")


def parse_rmap(args: Sequence[str]) -> RMap:
    """Name an R-operator by three polynomials or by a single 24-bit code.

    A code may be decimal or hexadecimal (``0x`` prefix, or exactly six hex
    digits).
    """
    if len(args) == 3:
        return RMap.from_polys(*args)
    if len(args) == 1:
        text = args[0].strip()
        if text.lower().startswith("0x"):
            return RMap.from_code(int(text, 16))
        if re.fullmatch(r"[0-9a-fA-F]{6}", text) and not text.isdigit():
            return RMap.from_code(int(text, 16))
        return RMap.from_code(int(text, 10))
    raise ValueError("expected three polynomials or one code")


def apply(R: RMap, t: Sequence[int]) -> tuple[int, int, int]:
    i = 4 * t[0] + 2 * t[1] + t[2]
    return ((R.r1 >> i) & 1, (R.r2 >> i) & 1, (R.r3 >> i) & 1)


def _check_legs(legs: Sequence[int]) -> None:
    i, j, k = legs
    if not 1 <= i < j < k <= 6:
        raise ValueError(f"invalid leg triple {tuple(legs)}")


def apply_at(R: RMap, s: int, legs: Sequence[int]) -> int:
    """Apply ``R`` to slots ``legs`` (1-based, increasing) of the state ``s``."""
    _check_legs(legs)
    if not 0 <= s < 64:
        raise ValueError(f"state {s} outside [0, 64)")
    shifts = [6 - leg for leg in legs]
    t = [(s >> sh) & 1 for sh in shifts]
    out = apply(R, t)
    for sh, bit in zip(shifts, out):
        s = (s & ~(1 << sh)) | (bit << sh)
    return s


@lru_cache(maxsize=None)
def _leg_index_tables() -> dict:
    """For every leg triple, the input index of each state and the slot shifts."""
    tables = {}
    for legs in LEGS_LHS:
        shifts = tuple(6 - leg for leg in legs)
        clear = 63 & ~sum(1 << sh for sh in shifts)
        idx = tuple(
            4 * ((s >> shifts[0]) & 1) + 2 * ((s >> shifts[1]) & 1) + ((s >> shifts[2]) & 1)
            for s in range(64)
        )
        tables[legs] = (idx, shifts, clear)
    return tables


def _act(R: RMap, legs, s: int) -> int:
    idx, (a, b, c), clear = _leg_index_tables()[legs]
    i = idx[s]
    return (
        (s & clear)
        | (((R.r1 >> i) & 1) << a)
        | (((R.r2 >> i) & 1) << b)
        | (((R.r3 >> i) & 1) << c)
    )


def satisfies_stte(R: RMap) -> bool:
    """Check the tetrahedron equation pointwise on all 64 states."""
    for s in range(64):
        lhs = s
        for legs in reversed(LEGS_LHS):
            lhs = _act(R, legs, lhs)
        rhs = s
        for legs in reversed(LEGS_RHS):
            rhs = _act(R, legs, rhs)
        if lhs != rhs:
            return False
    return True


def image_cardinality(R: RMap) -> int:
    return len({apply(R, t) for t in TRIPLES})


def is_bijective(R: RMap) -> bool:
    return image_cardinality(R) == 8


def _from_function(f) -> RMap:
    comps = [0, 0, 0]
    for t in TRIPLES:
        i = 4 * t[0] + 2 * t[1] + t[2]
        for m, bit in enumerate(f(*t)):
            comps[m] |= bit << i
    return RMap(*comps)


def sigma1_conjugate(R: RMap) -> RMap:
    """``s R s`` with ``s(x, y, z) = (z, y, x)``."""
    return _from_function(lambda x, y, z: tuple(reversed(apply(R, (z, y, x)))))


def sigma2_conjugate(R: RMap) -> RMap:
    """``s R s`` with ``s`` the global color flip."""
    return _from_function(lambda x, y, z: tuple(1 ^ b for b in apply(R, (1 ^ x, 1 ^ y, 1 ^ z))))
