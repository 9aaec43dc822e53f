"""Sylvester Hadamard matrix, fast Walsh-Hadamard transform, exact membership in d*Had."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError
from .gf2 import GF2Vector, check_m, dot

_LIMIT = 1 << 62


@dataclass(frozen=True, eq=False)
class LatticePoint:
    """Integer vector of length 2^m; coordinate ``a`` is indexed by a in F_2^m.

    ``level`` records the dilation the point is meant for. It is metadata only:
    equality and hashing look at ``m`` and the coordinates.
    """

    m: int
    coords: np.ndarray
    level: int = 0

    def __post_init__(self) -> None:
        check_m(self.m)
        arr = np.array(self.coords, dtype=np.int64)
        if arr.shape != (1 << self.m,):
            raise DomainError(f"expected {1 << self.m} coordinates, got shape {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "coords", arr)

    @property
    def n(self) -> int:
        return 1 << self.m

    def support(self) -> list[int]:
        return np.flatnonzero(self.coords).tolist()

    def key(self) -> tuple[int, ...]:
        return tuple(self.coords.tolist())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LatticePoint):
            return NotImplemented
        return self.m == other.m and np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((self.m, self.coords.tobytes()))

    def __add__(self, other: "LatticePoint") -> "LatticePoint":
        if other.m != self.m:
            raise DomainError("cannot add points of different dimension")
        return LatticePoint(self.m, self.coords + other.coords, self.level + other.level)

    def __repr__(self) -> str:
        return f"LatticePoint(m={self.m}, level={self.level}, coords={self.key()})"


@dataclass(frozen=True)
class BarycentricProfile:
    """``scaled[b] = n * t_b``: the barycentric coordinates of v times n (integers)."""

    m: int
    scaled: np.ndarray = field(repr=False)

    def nonzero(self) -> list[int]:
        return np.flatnonzero(self.scaled).tolist()


def hadamard_entry(a: int, b: int) -> int:
    return -1 if dot(a, b) else 1


def hadamard_column(m: int, b: int) -> LatticePoint:
    """The vertex h_b of Had."""
    check_m(m)
    b = GF2Vector(int(b), m)
    idx = np.arange(1 << m, dtype=np.int64)
    signs = 1 - 2 * (np.bitwise_count(idx & int(b)).astype(np.int64) & 1)
    return LatticePoint(m, signs, level=1)


def unit_vector(m: int, a: int = 0, scale: int = 1) -> LatticePoint:
    coords = np.zeros(1 << check_m(m), dtype=np.int64)
    coords[a] = scale
    return LatticePoint(m, coords, level=scale if a == 0 else 0)


def fwht_array(x: np.ndarray) -> np.ndarray:
    """Unnormalised Walsh-Hadamard transform along the last axis (natural order).

    Works on a copy; batches along leading axes are transformed independently.
    """
    out = np.array(x, dtype=np.int64, copy=True)
    n = out.shape[-1]
    if n & (n - 1):
        raise DomainError(f"transform length {n} is not a power of two")
    if out.size and int(np.abs(out).max()) >= _LIMIT // n:
        raise OverflowError(f"n*max|v| would exceed 2^62 (n={n})")
    lead = out.shape[:-1]
    h = 1
    while h < n:
        view = out.reshape(*lead, n // (2 * h), 2, h)
        lo = view[..., 0, :]
        hi = view[..., 1, :]
        tmp = lo.copy()
        lo += hi
        np.subtract(tmp, hi, out=hi)
        h *= 2
    return out


def fwht(v: LatticePoint) -> BarycentricProfile:
    """H v via butterflies; exact in int64."""
    scaled = fwht_array(v.coords)
    scaled.setflags(write=False)
    return BarycentricProfile(v.m, scaled)


def dilate_membership(v: LatticePoint, d: int) -> bool:
    """True iff v lies in d*Had.

    The barycentric coordinates are H v / n and they sum to v(0), so membership
    is v(0) == d plus nonnegativity of the transform.
    """
    if d < 0:
        return False
    if int(v.coords[0]) != d:
        return False
    return bool((fwht_array(v.coords) >= 0).all())


def lift(x, d: int) -> np.ndarray:
    """Prepend coordinate 0 = d to a point of the projected space (length n - 1)."""
    x = np.asarray(x, dtype=np.int64)
    n = x.shape[-1] + 1
    if n & (n - 1) or n < 2:
        raise DomainError(f"projected points need length 2^m - 1, got {n - 1}")
    out = np.empty(x.shape[:-1] + (n,), dtype=np.int64)
    out[..., 0] = d
    out[..., 1:] = x
    return out


def projected_membership(x, d: int) -> bool:
    """Membership of ``x`` in d*P0, where P0 drops coordinate 0 of Had."""
    full = lift(x, d)
    return dilate_membership(LatticePoint(full.size.bit_length() - 1, full, d), d)


def projected_membership_batch(xs: np.ndarray, d: int) -> np.ndarray:
    """Vectorised ``projected_membership`` over the rows of ``xs``."""
    if d < 0:
        return np.zeros(len(xs), dtype=bool)
    return (fwht_array(lift(xs, d)) >= 0).all(axis=-1)
