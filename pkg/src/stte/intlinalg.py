"""Exact integer linear algebra for small matrices.

Entries are Python ints, so there is no fixed-width overflow to detect.
Lattices are kept in a canonical row Hermite normal form (positive pivots,
entries above each pivot reduced into ``[0, pivot)``), which makes lattice
equality a plain comparison of bases.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "AbelianGroup",
    "Lattice",
    "hnf",
    "image_lattice",
    "kernel_lattice",
    "lattice_contains",
    "lattice_equal",
    "lattice_sum",
    "quotient",
    "rank",
    "snf",
    "to_int_rows",
]

Rows = list[list[int]]


def to_int_rows(M) -> Rows:
    """Copy any 2-d array-like into a list of lists of Python ints."""
    return [[int(v) for v in row] for row in M]


def _identity(n: int) -> Rows:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _transpose(A: Rows, ncols: int | None = None) -> Rows:
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def _hnf_with_transform(A: Rows, ncols: int) -> tuple[Rows, Rows]:
    """Row-reduce ``A`` to Hermite form; return ``(H, T)`` with ``T A = H``.

    ``H`` keeps zero rows at the bottom so that the rows of ``T`` there span
    the left kernel of ``A``.
    """
    H = [row[:] for row in A]
    m = len(H)
    T = _identity(m)
    r = 0
    pivots = []
    for j in range(ncols):
        if r == m:
            break
        # gcd-combine column j of rows r.. into row r
        while True:
            nz = [i for i in range(r, m) if H[i][j] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(H[i][j]))
            H[r], H[p] = H[p], H[r]
            T[r], T[p] = T[p], T[r]
            done = True
            for i in range(r + 1, m):
                if H[i][j]:
                    q = H[i][j] // H[r][j]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[r])]
                    if H[i][j]:
                        done = False
            if done:
                break
        if r < m and H[r][j] != 0:
            if H[r][j] < 0:
                H[r] = [-a for a in H[r]]
                T[r] = [-a for a in T[r]]
            for i in range(r):
                q = H[i][j] // H[r][j]
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    T[i] = [a - q * b for a, b in zip(T[i], T[r])]
            pivots.append(j)
            r += 1
    return H, T


def hnf(rows, ncols: int | None = None) -> Rows:
    """Canonical row Hermite normal form; zero rows dropped."""
    A = to_int_rows(rows)
    if ncols is None:
        ncols = len(A[0]) if A else 0
    H, _ = _hnf_with_transform(A, ncols)
    return [row for row in H if any(row)]


def rank(M) -> int:
    A = to_int_rows(M)
    return len(hnf(A, len(A[0]) if A else 0))


def snf(M) -> tuple[Rows, Rows, Rows]:
    """Smith normal form: return ``(S, U, V)`` with ``U M V = S``.

    ``S`` is diagonal with nonnegative entries ``d1 | d2 | ...``; ``U`` and
    ``V`` are unimodular.
    """
    A = to_int_rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def swap_cols(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    def add_row(dst, src, q):  # row dst += q * row src
        A[dst] = [a + q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        while True:
            entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not entries:
                break
            _, i, j = min(entries)
            swap_rows(t, i)
            swap_cols(t, j)
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, -(A[i][t] // p))
                    clean = clean and A[i][t] == 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, -(A[t][j] // p))
                    clean = clean and A[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < m and t < n and A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
    return A, U, V


def _matmul(A: Rows, B: Rows) -> Rows:
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


@dataclass(frozen=True)
class Lattice:
    """A sublattice of Z^n, stored by its canonical basis (rows)."""

    ambient_dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[int]], ambient_dim: int) -> Lattice:
        rows = [list(map(int, v)) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in Z^{ambient_dim}")
        return cls(ambient_dim, tuple(map(tuple, hnf(rows, ambient_dim))))

    @classmethod
    def full(cls, n: int) -> Lattice:
        return cls.span(_identity(n), n)

    @classmethod
    def zero(cls, n: int) -> Lattice:
        return cls(n, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence[int]) -> list[int] | None:
        """Integer coordinates of ``v`` in the canonical basis, or None."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in Z^{self.ambient_dim}")
        rest = [int(a) for a in v]
        coords = []
        for row in self.basis:
            j = next(k for k, a in enumerate(row) if a)
            if any(rest[:j]):
                return None
            q, r = divmod(rest[j], row[j])
            if r:
                return None
            coords.append(q)
            if q:
                rest = [a - q * b for a, b in zip(rest, row)]
        return coords if not any(rest) else None

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def generator(self) -> tuple[int, ...] | None:
        """The generator of a rank-1 lattice with its first nonzero entry positive."""
        if self.rank == 0:
            return None
        if self.rank != 1:
            raise ValueError("lattice is not cyclic")
        return self.basis[0]


def _check_dims(a: Lattice, b: Lattice) -> None:
    if a.ambient_dim != b.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {a.ambient_dim} != {b.ambient_dim}")


def lattice_contains(L: Lattice, v: Sequence[int]) -> bool:
    return v in L


def lattice_equal(a: Lattice, b: Lattice) -> bool:
    _check_dims(a, b)
    return a.basis == b.basis


def lattice_sum(a: Lattice, b: Lattice) -> Lattice:
    _check_dims(a, b)
    return Lattice.span(a.basis + b.basis, a.ambient_dim)


def kernel_lattice(M) -> Lattice:
    """``{v in Z^cols : M v = 0}``."""
    A = to_int_rows(M)
    if not A:
        raise ValueError("kernel of a matrix with no rows needs an explicit width")
    ncols = len(A[0])
    # T M^T = H; rows of T at zero rows of H satisfy M t = 0 and form a basis.
    H, T = _hnf_with_transform(_transpose(A), len(A))
    kernel = [t for h, t in zip(H, T) if not any(h)]
    return Lattice.span(kernel, ncols)


def image_lattice(M) -> Lattice:
    """Z-span of the columns of ``M``."""
    A = to_int_rows(M)
    return Lattice.span(_transpose(A), len(A))


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion {self.torsion} is not a divisibility chain")
        if any(d < 2 for d in self.torsion):
            raise ValueError("torsion coefficients must be >= 2")

    @property
    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.free_rank:
            return None
        n = 1
        for d in self.torsion:
            n *= d
        return n

    def __str__(self) -> str:
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def quotient(big: Lattice, small: Lattice) -> AbelianGroup:
    """Structure of ``big / small``; ``small`` must lie inside ``big``."""
    _check_dims(big, small)
    coords = []
    for v in small.basis:
        c = big.coordinates(v)
        if c is None:
            raise ValueError(f"{v} is not in the larger lattice")
        coords.append(c)
    if not coords:
        return AbelianGroup(big.rank)
    S, _, _ = snf(coords)
    diag = [S[i][i] for i in range(min(len(S), len(S[0])))]
    nonzero = [d for d in diag if d]
    return AbelianGroup(big.rank - len(nonzero), tuple(d for d in nonzero if d > 1))
