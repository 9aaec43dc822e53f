import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hadpoly import gf2
from hadpoly.errors import DomainError
from hadpoly.hadamard import (
    LatticePoint,
    dilate_membership,
    fwht,
    fwht_array,
    hadamard_column,
    hadamard_entry,
    projected_membership,
    projected_membership_batch,
    unit_vector,
)


def naive_matrix(m):
    n = 1 << m
    return np.array([[hadamard_entry(gf2.GF2Vector(a, m), gf2.GF2Vector(b, m)) for b in range(n)] for a in range(n)])


def test_entries():
    assert all(hadamard_entry(0, b) == 1 for b in range(16))
    v = gf2.GF2Vector.parse
    assert hadamard_entry(v("01"), v("01")) == -1
    assert hadamard_entry(v("11"), v("11")) == 1


def test_columns():
    assert hadamard_column(3, 0).key() == (1,) * 8
    assert hadamard_column(2, 0b10).key() == (1, 1, -1, -1)
    assert hadamard_column(2, 0b11).key() == (1, -1, -1, 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_matrix_is_symmetric_and_orthogonal(m):
    H = naive_matrix(m)
    assert (H == H.T).all()
    assert (H @ H == (1 << m) * np.eye(1 << m, dtype=int)).all()


def test_fwht_examples():
    assert fwht(unit_vector(3)).scaled.tolist() == [1] * 8
    assert fwht(LatticePoint(2, [1, 1, 0, 0])).scaled.tolist() == [2, 0, 2, 0]
    for b in range(8):
        expected = np.zeros(8, dtype=int)
        expected[b] = 8
        assert (fwht(hadamard_column(3, b)).scaled == expected).all()


@pytest.mark.parametrize("m", range(1, 7))
def test_fwht_matches_naive_product(m):
    rng = np.random.default_rng(m)
    H = naive_matrix(m)
    for _ in range(20):
        v = rng.integers(-1000, 1000, size=1 << m)
        assert (fwht(LatticePoint(m, v)).scaled == H @ v).all()


@pytest.mark.parametrize("m", [1, 4, 8, 12])
def test_fwht_involution(m):
    v = np.random.default_rng(100 + m).integers(-50, 50, size=1 << m)
    assert (fwht_array(fwht_array(v)) == (1 << m) * v).all()


def test_fwht_batch_matches_rows():
    xs = np.random.default_rng(7).integers(-5, 5, size=(9, 16))
    batch = fwht_array(xs)
    for row, out in zip(xs, batch):
        assert (fwht_array(row) == out).all()


def test_fwht_overflow_guard():
    with pytest.raises(OverflowError):
        fwht_array(np.full(4, 1 << 61, dtype=np.int64))


def test_fwht_does_not_mutate_input():
    v = LatticePoint(2, [1, 2, 3, 4])
    fwht(v)
    assert v.key() == (1, 2, 3, 4)


def test_membership_examples():
    for b in range(4):
        assert dilate_membership(hadamard_column(2, b), 1)
    assert dilate_membership(unit_vector(2), 1)
    assert fwht(LatticePoint(2, [1, 1, 1, 0])).scaled.tolist() == [3, 1, 1, -1]
    assert not dilate_membership(LatticePoint(2, [1, 1, 1, 0]), 1)
    assert dilate_membership(LatticePoint(2, [2, 0, 0, 0]), 2)
    assert not dilate_membership(LatticePoint(2, [2, 0, 0, 0]), 1)
    assert not dilate_membership(hadamard_column(2, 1), -1)


def test_projected_membership_examples():
    for d in range(5):
        assert projected_membership([0, 0, 0], d)
    # (1, 1, 0) lifts to (1, 1, 1, 0), whose transform has a negative entry
    assert not projected_membership([1, 1, 0], 1)
    # (1, 1, 1) lifts to the vertex h_0
    assert projected_membership([1, 1, 1], 1)
    assert fwht(LatticePoint(2, [1, 0, 1, 0])).scaled.tolist() == [2, 2, 0, 0]
    assert projected_membership([0, 1, 0], 1)


def test_projected_batch_agrees():
    xs = np.random.default_rng(3).integers(-2, 3, size=(200, 7))
    got = projected_membership_batch(xs, 2)
    assert got.tolist() == [projected_membership(x, 2) for x in xs]


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5])
def test_vertex_recovery(m):
    n = 1 << m
    for b in range(n):
        h = hadamard_column(m, b)
        assert dilate_membership(h, 1)
        assert fwht(h).nonzero() == [b]
        assert int(fwht(h).scaled[b]) == n


def random_member(m, d, rng):
    """sum_b w_b h_b with random nonnegative integer weights summing to d."""
    n = 1 << m
    w = rng.multinomial(d, np.ones(n) / n)
    return LatticePoint(m, sum(int(w[b]) * hadamard_column(m, b).coords for b in range(n)), d)


@settings(max_examples=60)
@given(st.integers(1, 5), st.integers(0, 6), st.integers(0, 6), st.integers(0, 2**32 - 1))
def test_minkowski_additivity_and_translation(m, d1, d2, seed):
    rng = np.random.default_rng(seed)
    u, w = random_member(m, d1, rng), random_member(m, d2, rng)
    assert dilate_membership(u, d1) and dilate_membership(w, d2)
    assert dilate_membership(u + w, d1 + d2)
    assert dilate_membership(u + unit_vector(m), d1 + 1)


def test_lattice_point_validation():
    with pytest.raises(DomainError):
        LatticePoint(2, [1, 2, 3])
    p = LatticePoint(2, [1, 0, 0, 0], level=1)
    assert p == LatticePoint(2, [1, 0, 0, 0], level=5)
    assert len({p, LatticePoint(2, [1, 0, 0, 0])}) == 1
    with pytest.raises(ValueError):
        p.coords[0] = 3
