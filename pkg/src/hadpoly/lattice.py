"""Integer points of Had and its dilates.

Two independent routes are provided: the correspondence between unit points
and affine subspaces of F_2^m, and a pruned depth-first search over the
coordinates that knows nothing about subspaces.
"""

from __future__ import annotations

import itertools
import json
import math
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import gf2
from .errors import ConsistencyError, DomainError, PreconditionError, ResourceError, UnsupportedMethodError
from .hadamard import LatticePoint, dilate_membership, fwht

DEFAULT_BUDGET = 1 << 40


def point_from_affine_subspace(m: int, A: gf2.GF2AffineSubspace) -> LatticePoint:
    """Uniform average of the vertices h_c, c in A.

    Coordinates are (-1)^<a, rep> on the orthogonal complement of the
    direction and zero elsewhere.
    """
    if A.m != m:
        raise DomainError(f"affine subspace lives in F_2^{A.m}, not F_2^{m}")
    perp = gf2.orthogonal_complement(A.direction)
    coords = np.zeros(1 << m, dtype=np.int64)
    for a in perp:
        coords[a] = -1 if gf2.parity(a & A.rep) else 1
    return LatticePoint(m, coords, level=1)


def affine_subspace_from_point(v: LatticePoint) -> gf2.GF2AffineSubspace:
    """T(v): the vertices carrying nonzero barycentric weight, as a canonical coset."""
    if not dilate_membership(v, 1):
        raise PreconditionError("point is not an integer point of Had")
    T = fwht(v).nonzero()
    size = len(T)
    if size & (size - 1):
        raise ConsistencyError(f"vertex support of size {size} is not a coset")
    base = T[0]
    W = gf2.rref_basis(v.m, (t ^ base for t in T))
    if len(W) != size:
        raise ConsistencyError("vertex support is not closed under the coset structure")
    weights = {int(fwht(v).scaled[t]) for t in T}
    if weights != {v.n // size}:
        raise ConsistencyError(f"non-uniform barycentric weights {sorted(weights)}")
    return gf2.affine_subspace(W, base)


def enumerate_unit_points(m: int) -> Iterator[LatticePoint]:
    """All integer points of Had, one per affine subspace of F_2^m."""
    for A in gf2.enumerate_affine_subspaces(m):
        yield point_from_affine_subspace(m, A)


def cor1_count_formula(m: int) -> int:
    """|Had ∩ Z^n| = sum_k 2^(m-k) [m k]_2."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    return gf2.affine_subspace_count(m)


def dfs_cost_estimate(m: int, d: int) -> int:
    """Unpruned node bound: (2d+1) choices for each of the n-1 free coordinates."""
    return (2 * d + 1) ** ((1 << m) - 1)


def _sign_rows(m: int) -> np.ndarray:
    n = 1 << m
    idx = np.arange(n, dtype=np.int64)
    return 1 - 2 * (np.bitwise_count(idx[:, None] & idx[None, :]).astype(np.int64) & 1)


def enumerate_dilate_points(m: int, d: int, budget: int = DEFAULT_BUDGET) -> Iterator[LatticePoint]:
    """Every integer point of d*Had by depth-first search over coordinates 1..n-1.

    The partial Walsh sums are tracked incrementally; a branch dies as soon as
    some row cannot recover to a nonnegative value even if every remaining
    coordinate contributes +d to it.
    """
    gf2.check_m(m)
    if d < 0:
        raise DomainError(f"dilation must be >= 0, got {d}")
    cost = dfs_cost_estimate(m, d)
    if cost > budget:
        raise ResourceError(
            f"enumeration of {d}*Had for m={m} needs up to {cost} nodes, budget is {budget}",
            estimate=cost,
            budget=budget,
        )
    n = 1 << m
    rows = _sign_rows(m)
    values = np.arange(-d, d + 1, dtype=np.int64)
    # contribution[a][i] is values[i] * H[a, :]
    contribution = [values[:, None] * rows[a][None, :] for a in range(n)]
    coords = np.zeros(n, dtype=np.int64)
    coords[0] = d

    def rec(a: int, partial: np.ndarray) -> Iterator[LatticePoint]:
        if a == n:
            yield LatticePoint(m, coords.copy(), level=d)
            return
        slack = (n - 1 - a) * d
        cand = partial[None, :] + contribution[a]
        ok = (cand + slack >= 0).all(axis=1)
        for i in np.flatnonzero(ok):
            coords[a] = values[i]
            yield from rec(a + 1, cand[i])
        coords[a] = 0

    yield from rec(1, d * rows[0].copy())


def exhaustive_dilate_points(m: int, d: int) -> Iterator[LatticePoint]:
    """Unpruned scan of [-d, d]^(n-1) with v(0) = d; a check on the pruned search."""
    n = 1 << m
    for tail in itertools.product(range(-d, d + 1), repeat=n - 1):
        v = LatticePoint(m, (d,) + tail, level=d)
        if dilate_membership(v, d):
            yield v


def count_dilate(m: int, d: int, method: str = "oracle", budget: int = DEFAULT_BUDGET) -> int:
    if method == "bijection":
        if d != 1:
            raise UnsupportedMethodError("the closed-form count only covers d = 1")
        return cor1_count_formula(m)
    if method == "oracle":
        return sum(1 for _ in enumerate_dilate_points(m, d, budget))
    raise UnsupportedMethodError(f"unknown method {method!r}")


def ehrhart_interpolate(m: int, counts: Iterable[tuple[int, int]]) -> list[Fraction]:
    """Coefficients (constant term first) of the degree n-1 polynomial through ``counts``."""
    pts = list(counts)
    ds = [d for d, _ in pts]
    if len(set(ds)) != len(ds):
        raise DomainError(f"duplicate dilation values in {sorted(ds)}")
    n = 1 << m
    if len(pts) != n:
        raise DomainError(f"need exactly {n} dilation values, got {len(pts)}")
    if 0 not in ds:
        raise DomainError("counts must include d = 0")
    coeffs = [Fraction(0)] * n
    for j, (dj, cj) in enumerate(pts):
        # Lagrange basis polynomial for node j, built up by multiplying linear factors
        basis = [Fraction(1)]
        denom = 1
        for i, (di, _) in enumerate(pts):
            if i == j:
                continue
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= di * basis[k + 1]
            denom *= dj - di
        for k, b in enumerate(basis):
            coeffs[k] += b * cj / denom
    return coeffs


def evaluate_polynomial(coeffs: Sequence[Fraction], x: int) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def ehrhart_from_oracle(m: int, budget: int = DEFAULT_BUDGET) -> tuple[list[tuple[int, int]], list[Fraction]]:
    """Oracle counts at d = 0..n-1 and the polynomial through them."""
    counts = [(d, count_dilate(m, d, "oracle", budget)) for d in range(1 << m)]
    return counts, ehrhart_interpolate(m, counts)


def points_to_csv(points: Iterable[LatticePoint]) -> Iterator[str]:
    for p in points:
        yield ",".join(str(x) for x in p.coords.tolist())


def points_to_json(points: Iterable[LatticePoint]) -> str:
    return json.dumps([p.coords.tolist() for p in points])


def points_from_csv(lines: Iterable[str], level: int = 0) -> list[LatticePoint]:
    out = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        coords = [int(t) for t in line.split(",")]
        out.append(LatticePoint(int(math.log2(len(coords))), coords, level))
    return out


def points_from_json(text: str, level: int = 0) -> list[LatticePoint]:
    return [LatticePoint(int(math.log2(len(c))), c, level) for c in json.loads(text)]
