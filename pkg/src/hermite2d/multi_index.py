"""Total-degree shells of nonnegative integer matrices K.

Symmetric shells vary the upper triangle (diagonal included) and mirror it;
general shells vary all N*N cells. Both are yielded lazily in ascending
lexicographic order of the free-cell vector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

import numpy as np

__all__ = [
    "MultiIndexMatrix",
    "DerivedSums",
    "free_cells",
    "compositions",
    "enumerate_shell",
    "shell_array",
    "shell_size",
    "derived_sums",
    "composition_table",
]


def free_cells(N: int, symmetric: bool) -> list[tuple[int, int]]:
    if N < 1:
        raise ValueError("N must be positive")
    if symmetric:
        return [(m, n) for m in range(N) for n in range(m, N)]
    return [(m, n) for m in range(N) for n in range(N)]


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` cells, lexicographically ascending."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def shell_size(N: int, degree: int, symmetric: bool) -> int:
    F = len(free_cells(N, symmetric))
    return math.comb(degree + F - 1, F - 1)


@dataclass(frozen=True)
class MultiIndexMatrix:
    entries: tuple[tuple[int, ...], ...]
    symmetric: bool = False

    def __post_init__(self):
        N = len(self.entries)
        if any(len(row) != N for row in self.entries):
            raise ValueError("K must be square")
        if any(k < 0 for row in self.entries for k in row):
            raise ValueError("entries must be nonnegative")
        if self.symmetric:
            for m in range(N):
                for n in range(m):
                    if self.entries[m][n] != self.entries[n][m]:
                        raise ValueError("symmetric K must satisfy k_mn = k_nm")

    @property
    def N(self) -> int:
        return len(self.entries)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @property
    def total_degree(self) -> int:
        """Entry sum over the support (upper triangle when symmetric)."""
        if self.symmetric:
            return sum(self.entries[m][n] for m, n in free_cells(self.N, True))
        return sum(map(sum, self.entries))

    @property
    def trace(self) -> int:
        return sum(self.entries[j][j] for j in range(self.N))

    @classmethod
    def from_cells(cls, N: int, values, symmetric: bool) -> "MultiIndexMatrix":
        k = [[0] * N for _ in range(N)]
        for (m, n), v in zip(free_cells(N, symmetric), values):
            k[m][n] = int(v)
            if symmetric:
                k[n][m] = int(v)
        return cls(tuple(map(tuple, k)), symmetric)


@dataclass(frozen=True)
class DerivedSums:
    row_sums: tuple[int, ...]
    col_sums: tuple[int, ...]
    trace: int
    k_ell: Optional[tuple[int, ...]] = None


def derived_sums(K: MultiIndexMatrix) -> DerivedSums:
    """Row sums r, column sums c, trace, and (symmetric K only) the Hermite
    degrees k_ell = k_{ell,ell} + sum_j k_{ell,j}."""
    a = K.array
    r = tuple(int(v) for v in a.sum(axis=1))
    c = tuple(int(v) for v in a.sum(axis=0))
    tr = int(np.trace(a))
    k_ell = None
    if K.symmetric:
        k_ell = tuple(int(a[l, l] + a[l].sum()) for l in range(K.N))
    return DerivedSums(r, c, tr, k_ell)


def enumerate_shell(N: int, degree: int, symmetric: bool) -> Iterator[MultiIndexMatrix]:
    if degree < 0:
        raise ValueError("degree must be nonnegative")
    F = len(free_cells(N, symmetric))
    for values in compositions(degree, F):
        yield MultiIndexMatrix.from_cells(N, values, symmetric)


@lru_cache(maxsize=256)
def _composition_array(total: int, parts: int) -> np.ndarray:
    arr = np.array(list(compositions(total, parts)), dtype=np.int64)
    arr.setflags(write=False)
    return arr


def shell_array(N: int, degree: int, symmetric: bool) -> np.ndarray:
    """Free-cell values of the whole shell as a read-only (count, F) array,
    rows in the same order as :func:`enumerate_shell`."""
    return _composition_array(degree, len(free_cells(N, symmetric)))


@lru_cache(maxsize=1024)
def composition_table(total: int, parts: int):
    """(array of compositions, dict composition -> row index)."""
    arr = _composition_array(total, parts)
    index = {tuple(int(v) for v in row): i for i, row in enumerate(arr)}
    return arr, index
