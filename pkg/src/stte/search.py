"""Exhaustive search for tetrahedron-equation solutions over two colors.

The 2^24 candidate codes are checked in blocks with numpy.  For each of the
64 states both sides of the equation are evaluated for every surviving
candidate of the block at once, and candidates whose sides differ are
dropped before the next state is tried.  Most candidates die on the first
few states, so the full sweep takes seconds.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .rmap import (
    LEGS_LHS,
    LEGS_RHS,
    RMap,
    image_cardinality,
    sigma1_conjugate,
    sigma2_conjugate,
)

__all__ = [
    "ConsistencyError",
    "Orbit",
    "SolutionSet",
    "enumerate_solutions",
    "histogram_by_image_cardinality",
    "orbit_decomposition",
    "search_range",
]

N_CANDIDATES = 1 << 24
BLOCK = 1 << 20


class ConsistencyError(RuntimeError):
    """An internal invariant failed; indicates a bug, not bad user input."""


def _leg_tables():
    tables = {}
    for legs in LEGS_LHS:
        a, b, c = (6 - leg for leg in legs)
        states = np.arange(64, dtype=np.uint8)
        idx = 4 * ((states >> a) & 1) + 2 * ((states >> b) & 1) + ((states >> c) & 1)
        clear = np.uint8(63 & ~((1 << a) | (1 << b) | (1 << c)))
        tables[legs] = (idx.astype(np.uint8), (np.uint8(a), np.uint8(b), np.uint8(c)), clear)
    return tables


_TABLES = _leg_tables()


def _act(r1, r2, r3, legs, s):
    idx, (a, b, c), clear = _TABLES[legs]
    i = idx[s]
    return (
        (s & clear)
        | (((r1 >> i) & 1) << a)
        | (((r2 >> i) & 1) << b)
        | (((r3 >> i) & 1) << c)
    )


def search_range(start: int, stop: int) -> np.ndarray:
    """Sorted codes in ``[start, stop)`` that satisfy the tetrahedron equation."""
    found = []
    for lo in range(start, stop, BLOCK):
        codes = np.arange(lo, min(lo + BLOCK, stop), dtype=np.uint32)
        for s0 in range(64):
            if codes.size == 0:
                break
            r1 = ((codes >> 16) & 0xFF).astype(np.uint8)
            r2 = ((codes >> 8) & 0xFF).astype(np.uint8)
            r3 = (codes & 0xFF).astype(np.uint8)
            lhs = np.full(codes.shape, s0, dtype=np.uint8)
            rhs = lhs.copy()
            for legs in reversed(LEGS_LHS):
                lhs = _act(r1, r2, r3, legs, lhs)
            for legs in reversed(LEGS_RHS):
                rhs = _act(r1, r2, r3, legs, rhs)
            codes = codes[lhs == rhs]
        found.append(codes)
    return np.concatenate(found) if found else np.empty(0, dtype=np.uint32)


def _sort_key(R: RMap):
    return (image_cardinality(R), R.code)


@dataclass(frozen=True)
class SolutionSet:
    """Solutions in canonical order: by image cardinality, then by code."""

    solutions: tuple[RMap, ...]
    by_cardinality: dict = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        ordered = tuple(sorted(set(self.solutions), key=_sort_key))
        object.__setattr__(self, "solutions", ordered)
        groups: dict[int, list[RMap]] = {}
        for R in ordered:
            groups.setdefault(image_cardinality(R), []).append(R)
        object.__setattr__(self, "by_cardinality", {k: tuple(v) for k, v in groups.items()})

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> SolutionSet:
        return cls(tuple(RMap.from_code(int(c)) for c in codes))

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __contains__(self, R):
        code = R.code if isinstance(R, RMap) else R
        return code in self.codes

    @property
    def codes(self) -> frozenset:
        return frozenset(R.code for R in self.solutions)


def enumerate_solutions(jobs: int = 1) -> SolutionSet:
    """Check all 2^24 candidates; ``jobs > 1`` splits the range across processes."""
    if jobs <= 1:
        codes = search_range(0, N_CANDIDATES)
    else:
        step = -(-N_CANDIDATES // (jobs * 4))
        bounds = [(lo, min(lo + step, N_CANDIDATES)) for lo in range(0, N_CANDIDATES, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(search_range, *zip(*bounds)))
        codes = np.concatenate(parts)
    return SolutionSet.from_codes(codes.tolist())


def histogram_by_image_cardinality(s: Iterable[RMap]) -> dict[int, int]:
    counts = Counter(image_cardinality(R) for R in s)
    return {k: counts.get(k, 0) for k in range(1, 9)}


@dataclass(frozen=True)
class Orbit:
    members: tuple[RMap, ...]
    edges: tuple[tuple[RMap, RMap, str], ...]
    self_symmetries: frozenset

    def __len__(self):
        return len(self.members)


_SIGMAS = (("sigma1", sigma1_conjugate), ("sigma2", sigma2_conjugate))


def orbit_decomposition(s: SolutionSet | Sequence[RMap]) -> list[Orbit]:
    """Split a conjugation-closed set of solutions into its sigma orbits.

    Orbits come out ordered by their first member in canonical order; each
    orbit lists its members canonically, its sigma edges between distinct
    members, and the sigmas that fix every member.
    """
    if not isinstance(s, SolutionSet):
        s = SolutionSet(tuple(s))
    members = set(s.solutions)
    seen: set[RMap] = set()
    orbits = []
    for R in s.solutions:
        if R in seen:
            continue
        orbit = {R}
        frontier = [R]
        while frontier:
            cur = frontier.pop()
            for _, conj in _SIGMAS:
                img = conj(cur)
                if img not in members:
                    raise ConsistencyError(f"set not closed: {cur} maps to {img} outside it")
                if img not in orbit:
                    orbit.add(img)
                    frontier.append(img)
        ordered = tuple(sorted(orbit, key=_sort_key))
        edges = []
        fixed = set()
        for name, conj in _SIGMAS:
            images = {M: conj(M) for M in ordered}
            if all(images[M] == M for M in ordered):
                fixed.add(name)
            for M in ordered:
                img = images[M]
                if img != M and _sort_key(M) < _sort_key(img):
                    edges.append((M, img, name))
        if len(ordered) not in (1, 2, 4):
            raise ConsistencyError(f"orbit of size {len(ordered)}")
        seen |= orbit
        orbits.append(Orbit(ordered, tuple(edges), frozenset(fixed)))
    return orbits
