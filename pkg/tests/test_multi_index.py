import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermite2d import multi_index as mi


def test_zero_shell():
    for sym in (True, False):
        shell = list(mi.enumerate_shell(2, 0, sym))
        assert len(shell) == 1 and shell[0].total_degree == 0


def test_degree_one():
    assert len(list(mi.enumerate_shell(2, 1, True))) == 3
    assert len(list(mi.enumerate_shell(2, 1, False))) == 4


@pytest.mark.parametrize("N", [1, 2, 3, 4])
@pytest.mark.parametrize("sym", [True, False])
def test_shell_counts_and_uniqueness(N, sym):
    F = len(mi.free_cells(N, sym))
    for d in range(9):
        shell = list(mi.enumerate_shell(N, d, sym))
        assert len(shell) == math.comb(d + F - 1, F - 1) == mi.shell_size(N, d, sym)
        assert len({K.entries for K in shell}) == len(shell)
        assert all(K.total_degree == d for K in shell)


@given(st.integers(1, 3), st.integers(0, 6), st.booleans())
def test_deterministic_and_matches_array(N, d, sym):
    a = [K.entries for K in mi.enumerate_shell(N, d, sym)]
    b = [K.entries for K in mi.enumerate_shell(N, d, sym)]
    assert a == b
    arr = mi.shell_array(N, d, sym)
    rebuilt = [mi.MultiIndexMatrix.from_cells(N, row, sym).entries for row in arr]
    assert rebuilt == a


@given(st.integers(1, 4), st.integers(0, 6))
def test_hermite_degrees_sum_to_twice_total(N, d):
    for K in mi.enumerate_shell(N, d, True):
        assert sum(mi.derived_sums(K).k_ell) == 2 * d


@given(st.integers(1, 3), st.integers(0, 5))
def test_row_and_column_sums(N, d):
    for K in mi.enumerate_shell(N, d, False):
        s = mi.derived_sums(K)
        assert sum(s.row_sums) == sum(s.col_sums) == d
        assert s.trace == int(np.trace(K.array))


def test_derived_sums_examples():
    z = mi.derived_sums(mi.MultiIndexMatrix(((0, 0), (0, 0))))
    assert z.row_sums == (0, 0) and z.col_sums == (0, 0) and z.trace == 0
    k12 = mi.derived_sums(mi.MultiIndexMatrix(((0, 1), (0, 0))))
    assert k12.row_sums == (1, 0) and k12.col_sums == (0, 1)
    diag = mi.derived_sums(mi.MultiIndexMatrix(((1,),), symmetric=True))
    assert diag.k_ell == (2,)


def test_validation():
    with pytest.raises(ValueError):
        mi.MultiIndexMatrix(((0, 1), (0, 0)), symmetric=True)
    with pytest.raises(ValueError):
        mi.MultiIndexMatrix(((0, -1), (0, 0)))
    with pytest.raises(ValueError):
        list(mi.enumerate_shell(2, -1, False))


def test_composition_table_index():
    arr, index = mi.composition_table(4, 3)
    assert len(arr) == math.comb(6, 2)
    for i, row in enumerate(arr):
        assert index[tuple(row)] == i
