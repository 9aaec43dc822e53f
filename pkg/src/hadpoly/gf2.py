"""Bit-packed linear algebra over F_2^m.

Vectors are Python ints whose bit ``i`` is the coefficient of the i-th standard
basis vector. The integer value doubles as the coordinate index in R^n, n = 2^m.
Subspaces are kept in reduced row-echelon form with the highest set bit of each
basis word as its pivot and words sorted by decreasing pivot, which makes the
representation unique and lets coset representatives be found greedily.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import DimensionError, DomainError

MAX_M = 24


def check_m(m: int) -> int:
    if not isinstance(m, int) or not 1 <= m <= MAX_M:
        raise DomainError(f"ambient dimension m must be an integer in [1, {MAX_M}], got {m!r}")
    return m


class GF2Vector(int):
    """An element of F_2^m: an int that also remembers its ambient dimension."""

    m: int

    def __new__(cls, bits: int, m: int) -> "GF2Vector":
        check_m(m)
        if bits < 0 or bits >> m:
            raise DomainError(f"bits {bits:#x} do not fit in F_2^{m}")
        obj = super().__new__(cls, bits)
        obj.m = m
        return obj

    @classmethod
    def parse(cls, text: str) -> "GF2Vector":
        """Build from a bit string written most significant bit first, e.g. ``'011'``."""
        return cls(int(text, 2), len(text))

    @property
    def bits(self) -> int:
        return int(self)

    def __repr__(self) -> str:
        return f"GF2Vector({int(self):0{self.m}b})"

    def __add__(self, other: int) -> "GF2Vector":  # addition in F_2^m is xor
        _same_space(self, other)
        return GF2Vector(int(self) ^ int(other), self.m)

    __xor__ = __add__


def _same_space(a: int, b: int) -> None:
    ma = getattr(a, "m", None)
    mb = getattr(b, "m", None)
    if ma is not None and mb is not None and ma != mb:
        raise DimensionError(f"vectors live in F_2^{ma} and F_2^{mb}")


def parity(x: int) -> int:
    return x.bit_count() & 1


def dot(a: int, b: int) -> int:
    """Standard dot product on F_2^m: parity of ``a & b``."""
    _same_space(a, b)
    return parity(int(a) & int(b))


def _reduce_into(basis: list[int], w: int) -> None:
    """Insert ``w`` into a fully reduced basis kept sorted by decreasing pivot."""
    for b in basis:
        if w & (1 << (b.bit_length() - 1)):
            w ^= b
    if not w:
        return
    p = 1 << (w.bit_length() - 1)
    for i, b in enumerate(basis):
        if b & p:
            basis[i] = b ^ w
    basis.append(w)
    basis.sort(reverse=True)


@dataclass(frozen=True)
class GF2Subspace:
    """A linear subspace of F_2^m given by its unique RREF basis."""

    basis: tuple[int, ...]
    m: int

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(w.bit_length() - 1 for w in self.basis)

    def __len__(self) -> int:
        return 1 << self.dim

    def __iter__(self) -> Iterator[int]:
        return iter(span(self.basis))

    def __contains__(self, x: int) -> bool:
        return reduce_vector(self, x) == 0

    def __repr__(self) -> str:
        words = ", ".join(f"{w:0{self.m}b}" for w in self.basis)
        return f"GF2Subspace(m={self.m}, basis=[{words}])"


@dataclass(frozen=True)
class GF2AffineSubspace:
    """The coset ``direction + rep`` with ``rep`` the minimal element."""

    direction: GF2Subspace
    rep: int

    @property
    def m(self) -> int:
        return self.direction.m

    @property
    def dim(self) -> int:
        return self.direction.dim

    def __len__(self) -> int:
        return 1 << self.direction.dim

    def __iter__(self) -> Iterator[int]:
        return (self.rep ^ w for w in self.direction)

    def __contains__(self, x: int) -> bool:
        return (int(x) ^ self.rep) in self.direction

    def __repr__(self) -> str:
        return f"GF2AffineSubspace({self.direction!r} + {self.rep:0{self.m}b})"


def span(gens: Iterable[int]) -> list[int]:
    """All elements of the span of ``gens`` (assumed independent), 0 first."""
    out = [0]
    for g in gens:
        out += [x ^ g for x in out]
    return out


def rref_basis(m: int, gens: Iterable[int]) -> GF2Subspace:
    """Canonical subspace spanned by ``gens``."""
    check_m(m)
    basis: list[int] = []
    for g in gens:
        _same_space(g, GF2Vector(0, m))
        g = int(g)
        if g < 0 or g >> m:
            raise DimensionError(f"generator {g:#x} does not fit in F_2^{m}")
        _reduce_into(basis, g)
    return GF2Subspace(tuple(basis), m)


def zero_subspace(m: int) -> GF2Subspace:
    return GF2Subspace((), check_m(m))


def full_space(m: int) -> GF2Subspace:
    return GF2Subspace(tuple(1 << i for i in reversed(range(check_m(m)))), m)


def reduce_vector(W: GF2Subspace, x: int) -> int:
    x = int(x)
    for w in W.basis:
        if x & (1 << (w.bit_length() - 1)):
            x ^= w
    return x


def coset_canonical_rep(W: GF2Subspace, b: int) -> int:
    """Minimal integer element of ``W + b``.

    Greedy reduction by the pivots is enough: every other coset element has
    a pivot bit set above which it agrees with the reduced word.
    """
    _same_space(b, GF2Vector(0, W.m))
    if int(b) >> W.m:
        raise DimensionError(f"{int(b):#x} does not fit in F_2^{W.m}")
    return reduce_vector(W, b)


def affine_subspace(W: GF2Subspace, b: int) -> GF2AffineSubspace:
    return GF2AffineSubspace(W, coset_canonical_rep(W, b))


def orthogonal_complement(W: GF2Subspace) -> GF2Subspace:
    """W^perp, built from the free (non-pivot) columns of the RREF basis."""
    pivots = W.pivots
    pivot_set = set(pivots)
    gens = []
    for f in range(W.m):
        if f in pivot_set:
            continue
        c = 1 << f
        for w, p in zip(W.basis, pivots):
            if w >> f & 1:
                c |= 1 << p
        gens.append(c)
    return rref_basis(W.m, gens)


def gaussian_binomial(m: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^m."""
    if m < 0 or k < 0:
        raise DomainError(f"gaussian_binomial needs m, k >= 0, got ({m}, {k})")
    if k > m:
        raise DomainError(f"k={k} exceeds m={m}")
    num = den = 1
    for i in range(k):
        num *= (1 << (m - i)) - 1
        den *= (1 << (k - i)) - 1
    return num // den


def affine_subspace_count(m: int) -> int:
    """Total number of affine subspaces of F_2^m."""
    return sum((1 << (m - k)) * gaussian_binomial(m, k) for k in range(m + 1))


def enumerate_subspaces(m: int, k: int) -> Iterator[GF2Subspace]:
    """Every k-dimensional subspace once, lexicographic on the basis words."""
    check_m(m)
    if k < 0 or k > m:
        raise DomainError(f"k={k} outside [0, {m}]")

    def rec(rows: tuple[int, ...], used: int, bound: int, left: int) -> Iterator[tuple[int, ...]]:
        # used: union of bits set in earlier rows; a new pivot must avoid it
        if left == 0:
            yield rows
            return
        for p in range(left - 1, bound):
            if used >> p & 1:
                continue
            top = 1 << p
            for low in range(top):
                w = top | low
                u = used | w
                if left > 1:
                    free = p - (u & (top - 1)).bit_count()
                    if free < left - 1:
                        continue
                yield from rec(rows + (w,), u, p, left - 1)

    for rows in rec((), 0, m, k):
        yield GF2Subspace(rows, m)


def enumerate_affine_subspaces(m: int) -> Iterator[GF2AffineSubspace]:
    """Every affine subspace of F_2^m once: by dimension, direction, then rep."""
    check_m(m)
    for k in range(m + 1):
        for W in enumerate_subspaces(m, k):
            pivot_mask = sum(1 << p for p in W.pivots)
            for b in range(1 << m):
                if not b & pivot_mask:
                    yield GF2AffineSubspace(W, b)
