"""Certified lower bounds on |d*Had ∩ Z^n|.

Small dilates: sums of unit points whose vertex supports are linear subspaces
of pairwise distinct dimensions; distinct families give distinct sums.
Large dilates: sign hypercubes supported on c coordinates of the projected
simplex, of which at least half land inside d*P0 once the Hoeffding
condition holds. Sampling here estimates that fraction.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

import numpy as np

from . import gf2
from .errors import ConsistencyError, DomainError, InfeasibleError, OutOfRangeError, PreconditionError, ResourceError
from .hadamard import LatticePoint, dilate_membership, projected_membership_batch
from .lattice import point_from_affine_subspace

DEFAULT_FAMILY_BUDGET = 1_000_000
SAMPLE_BATCH = 4096


# --- small dilates -----------------------------------------------------------


def admissible_dims(m: int, d: int, include_trivial: bool = False) -> list[int]:
    """Integer k with m/2 - d < k < m/2 + d.

    By default k is also kept in [1, m-1]: inside the small-dilate regime the
    open interval never reaches 0 or m, and excluding the two trivial
    subspaces keeps counts stable when the construction is run past it.
    """
    lo, hi = (0, m) if include_trivial else (1, m - 1)
    # 2k compared against m -+ 2d keeps the strict bounds exact
    return [k for k in range(lo, hi + 1) if m - 2 * d < 2 * k < m + 2 * d]


def _feasible_dims(m: int, d: int, include_trivial: bool) -> list[int]:
    gf2.check_m(m)
    if d < 1:
        raise DomainError(f"family size d must be >= 1, got {d}")
    dims = admissible_dims(m, d, include_trivial)
    if len(dims) < d:
        raise InfeasibleError(
            f"only {len(dims)} admissible dimensions {dims} in ({m}/2 - {d}, {m}/2 + {d}); need {d}"
        )
    return dims


@dataclass(frozen=True)
class Case1Family:
    m: int
    d: int
    subspaces: tuple[gf2.GF2Subspace, ...]
    points: tuple[LatticePoint, ...]
    sum: LatticePoint

    @property
    def exponents(self) -> tuple[int, ...]:
        return tuple(W.dim for W in self.subspaces)


def case1_enumerate_families(
    m: int, d: int, cap: int | None = None, include_trivial: bool = False
) -> Iterator[Case1Family]:
    """Families of d linear vertex supports with distinct dimensions, and their sums.

    Dimension tuples are taken in increasing lexicographic order, subspaces of
    each dimension in ``enumerate_subspaces`` order. Every sum is checked for
    membership in d*Had before it is yielded.
    """
    dims = _feasible_dims(m, d, include_trivial)
    if cap is not None and cap <= 0:
        return
    cache: dict[gf2.GF2Subspace, LatticePoint] = {}

    def point(W: gf2.GF2Subspace) -> LatticePoint:
        if W not in cache:
            cache[W] = point_from_affine_subspace(m, gf2.GF2AffineSubspace(W, 0))
        return cache[W]

    emitted = 0
    for ks in itertools.combinations(dims, d):
        pools = [list(gf2.enumerate_subspaces(m, k)) for k in ks]
        for subs in itertools.product(*pools):
            pts = tuple(point(W) for W in subs)
            total = LatticePoint(m, sum(p.coords for p in pts), level=d)
            if not dilate_membership(total, d):
                raise ConsistencyError(f"family sum {total} escaped {d}*Had")
            yield Case1Family(m, d, subs, pts, total)
            emitted += 1
            if cap is not None and emitted >= cap:
                return


def _elementary_symmetric(values: list[int], r: int) -> int:
    e = [1] + [0] * r
    for x in values:
        for j in range(r, 0, -1):
            e[j] += e[j - 1] * x
    return e[r]


@dataclass(frozen=True)
class Case1Count:
    exact: int
    dims: tuple[int, ...]
    central_dims: tuple[int, ...]
    crude: int

    @property
    def crude_log2(self) -> int:
        return self.crude.bit_length() - 1


def case1_count_lower_bound(m: int, d: int, include_trivial: bool = False) -> Case1Count:
    """Exact number of Case-1 families, plus the product bound prod 2^(k(m-k)).

    The crude bound uses the d admissible dimensions closest to m/2, ties to
    the smaller dimension.
    """
    dims = _feasible_dims(m, d, include_trivial)
    exact = _elementary_symmetric([gf2.gaussian_binomial(m, k) for k in dims], d)
    central = tuple(sorted(sorted(dims, key=lambda k: (abs(2 * k - m), k))[:d]))
    crude = 1 << sum(k * (m - k) for k in central)
    return Case1Count(exact, tuple(dims), central, crude)


@dataclass(frozen=True)
class InjectivityResult:
    injective: bool
    families: int
    witness: tuple[Case1Family, Case1Family] | None = None

    def __bool__(self) -> bool:
        return self.injective


def case1_verify_injectivity(
    m: int,
    d: int,
    budget: int = DEFAULT_FAMILY_BUDGET,
    cap: int | None = None,
    include_trivial: bool = False,
) -> InjectivityResult:
    """Check that all enumerated families have pairwise distinct sums."""
    total = case1_count_lower_bound(m, d, include_trivial).exact
    work = total if cap is None else min(total, cap)
    if work > budget:
        raise ResourceError(f"{work} families exceed the budget of {budget}", estimate=work, budget=budget)
    seen: dict[bytes, Case1Family] = {}
    count = 0
    for fam in case1_enumerate_families(m, d, cap, include_trivial):
        key = fam.sum.coords.tobytes()
        if key in seen:
            return InjectivityResult(False, count + 1, (seen[key], fam))
        seen[key] = fam
        count += 1
    return InjectivityResult(True, count)


# --- large dilates -----------------------------------------------------------


@dataclass(frozen=True)
class HypercubeSpec:
    """Points with support exactly ``support`` and entries in [-D, D] minus 0."""

    m: int
    support: tuple[int, ...]
    D: int

    def __post_init__(self) -> None:
        n = 1 << self.m
        if self.D < 1:
            raise DomainError(f"D must be >= 1, got {self.D}")
        if len(set(self.support)) != len(self.support):
            raise DomainError("support has repeated coordinates")
        if any(not 1 <= s < n for s in self.support):
            raise DomainError(f"support must lie in [1, {n})")

    @property
    def c(self) -> int:
        return len(self.support)

    @property
    def cells(self) -> int:
        return (2 * self.D) ** self.c


def hoeffding_condition(n: int, d: int, c: int, D: int) -> bool:
    """2cD <= d^2 / (2 log2 n), checked without rounding."""
    return 4 * c * D * (n.bit_length() - 1) <= d * d


def hoeffding_failure_bound(n: int, d: int, c: int, D: int) -> float:
    """Union bound 2n exp(-d^2 / (2cD)) on the chance a uniform cell point leaves d*P0."""
    return 2 * n * math.exp(-(d * d) / (2 * c * D))


@dataclass(frozen=True)
class DensityEstimate:
    spec: HypercubeSpec
    d: int
    samples: int
    inside: int
    seed: int
    condition_holds: bool
    hoeffding_bound: float | None = field(default=None)

    @property
    def n(self) -> int:
        return 1 << self.spec.m

    @property
    def fraction(self) -> float:
        return self.inside / self.samples

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "d": self.d,
            "c": self.spec.c,
            "D": self.spec.D,
            "samples": self.samples,
            "inside": self.inside,
            "fraction": self.fraction,
            "hoeffding_bound": self.hoeffding_bound,
            "condition_holds": self.condition_holds,
            "seed": self.seed,
        }


def _draw_support(rng: np.random.Generator, n: int, c: int) -> tuple[int, ...]:
    # partial Fisher-Yates over coordinates 1..n-1
    pool = list(range(1, n))
    for i in range(c):
        j = i + int(rng.integers(len(pool) - i))
        pool[i], pool[j] = pool[j], pool[i]
    return tuple(sorted(pool[:c]))


def sample_hypercube(spec: HypercubeSpec, count: int, rng: np.random.Generator) -> np.ndarray:
    """``count`` uniform points of H_S[D] in the projected coordinates (length n-1)."""
    n = 1 << spec.m
    u = rng.integers(0, 2 * spec.D, size=(count, spec.c), dtype=np.int64)
    vals = np.where(u < spec.D, u - spec.D, u - spec.D + 1)
    out = np.zeros((count, n - 1), dtype=np.int64)
    out[:, np.asarray(spec.support, dtype=np.int64) - 1] = vals
    return out


def case3_sample_density(
    m: int, d: int, c: int, D: int, samples: int, seed: int, threads: int | None = None
) -> DensityEstimate:
    """Monte-Carlo fraction of a random hypercube H_S[D] that lies in d*P0.

    The seed is split into one stream for the support and one per fixed-size
    batch, so the result does not depend on ``threads``.
    """
    gf2.check_m(m)
    n = 1 << m
    if not 1 <= c:
        raise DomainError(f"c must be >= 1, got {c}")
    if c >= n:
        raise DomainError(f"c={c} must be below n={n}")
    if D < 1 or samples < 1:
        raise DomainError("D and samples must be >= 1")
    if d < 0:
        raise DomainError(f"dilation must be >= 0, got {d}")
    if not 0 <= seed < 1 << 64:
        raise DomainError("seed must be a 64-bit unsigned integer")

    nbatches = -(-samples // SAMPLE_BATCH)
    root = np.random.SeedSequence(seed)
    support_seq, *batch_seqs = root.spawn(1 + nbatches)
    spec = HypercubeSpec(m, _draw_support(np.random.Generator(np.random.PCG64(support_seq)), n, c), D)

    def run(i: int) -> int:
        size = min(SAMPLE_BATCH, samples - i * SAMPLE_BATCH)
        rng = np.random.Generator(np.random.PCG64(batch_seqs[i]))
        return int(projected_membership_batch(sample_hypercube(spec, size, rng), d).sum())

    workers = max(1, min(threads or os.cpu_count() or 1, nbatches))
    if workers == 1:
        inside = sum(map(run, range(nbatches)))
    else:
        with ThreadPoolExecutor(workers) as pool:
            inside = sum(pool.map(run, range(nbatches)))

    holds = hoeffding_condition(n, d, c, D)
    bound = hoeffding_failure_bound(n, d, c, D) if holds else None
    return DensityEstimate(spec, d, samples, inside, seed, holds, bound)


@dataclass(frozen=True)
class Case3Bound:
    exact: int
    log2: float


def _log2_int(x: int) -> float:
    return round(math.log2(x), 6)


def case3_lower_bound_value(n: int, d: int, c: int, D: int) -> Case3Bound:
    """(1/2) C(n, c) (2D)^c as an exact integer and its log2."""
    if n < 2 or n & (n - 1):
        raise DomainError(f"n must be a power of two >= 2, got {n}")
    if c < 1 or c >= n:
        raise DomainError(f"c must lie in [1, n), got {c}")
    if D < 1:
        raise DomainError(f"D must be >= 1, got {D}")
    if not hoeffding_condition(n, d, c, D):
        raise PreconditionError(
            f"2cD <= d^2/(2 log2 n) fails: 2*{c}*{D} = {2 * c * D} > {d * d / (2 * (n.bit_length() - 1)):.6g}"
        )
    exact = math.comb(n, c) * (2 * D) ** c // 2
    return Case3Bound(exact, _log2_int(exact))


# --- regime selector ---------------------------------------------------------

REGIMES = ("case1", "case2", "case3a", "case3b", "gap", "out-of-range")


@dataclass(frozen=True)
class BoundReport:
    n: int
    d: int
    epsilon: float
    regime: str
    bound_log2: float
    exact_bound: int | None = None
    notes: str = ""

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "d": self.d,
            "epsilon": self.epsilon,
            "regime": self.regime,
            "bound_log2": self.bound_log2,
        }
        if self.exact_bound is not None:
            out["exact_bound"] = str(self.exact_bound)
        out["notes"] = self.notes
        return out


def _log_n(n: int) -> int:
    if n < 2 or n & (n - 1):
        raise DomainError(f"n must be a power of two >= 2, got {n}")
    return n.bit_length() - 1


def classify(n: int, d: int, eps: float) -> str:
    """Regime of d; on shared endpoints the lower case wins."""
    L = _log_n(n)
    if not 0 < eps < 0.5:
        raise DomainError(f"epsilon must lie in (0, 1/2), got {eps}")
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if d >= n * L:
        return "out-of-range"
    if 4 * d <= L:
        return "case1"
    if d * d <= L**3:
        return "case2"
    if d <= (n * L) ** (0.5 - eps):
        return "case3a"
    if d >= (n * L) ** (0.5 + eps):
        return "case3b"
    return "gap"


def _largest_covered_below(n: int, d: int, eps: float) -> int:
    L = _log_n(n)
    top3a = math.floor((n * L) ** (0.5 - eps))
    cand = min(d, top3a) if top3a * top3a > L**3 else math.isqrt(L**3)
    while cand >= 1 and classify(n, cand, eps) == "gap":
        cand -= 1
    return cand


def theorem1_bound(n: int, d: int, eps: float) -> BoundReport:
    """Certified lower bound on |d*Had ∩ Z^n| for the regime containing d."""
    L = _log_n(n)
    regime = classify(n, d, eps)
    if regime == "out-of-range":
        raise OutOfRangeError(f"d={d} is not below n*log2(n)={n * L}")
    if regime == "gap":
        d2 = _largest_covered_below(n, d, eps)
        inner = theorem1_bound(n, d2, eps)
        return BoundReport(
            n, d, eps, "gap", inner.bound_log2, inner.exact_bound,
            f"d lies between (n log n)^(1/2-eps) and (n log n)^(1/2+eps); "
            f"monotone fallback to d'={d2} ({inner.regime})",
        )
    if regime == "case1":
        cnt = case1_count_lower_bound(L, d)
        return BoundReport(
            n, d, eps, regime, _log2_int(cnt.exact), cnt.exact,
            f"exact family count over dims {list(cnt.dims)}",
        )
    if regime == "case2":
        d1 = L // 4
        if d1 == 0:
            return BoundReport(n, d, eps, regime, 0.0, 1, "floor(log2 n / 4) = 0; only the trivial bound 1")
        cnt = case1_count_lower_bound(L, d1)
        return BoundReport(
            n, d, eps, regime, _log2_int(cnt.exact), cnt.exact,
            f"monotone reuse of the exact family count at d'={d1}",
        )
    if regime == "case3a":
        value = eps * d * d / 2
        return BoundReport(
            n, d, eps, regime, round(value, 6), None,
            "n^(eps d^2 / (2 log2 n)) with D = 1, c = d^2/(4 log2 n)",
        )
    value = n * (2 * eps * math.log2(d) - 2)
    note = "(d^(2 eps)/4)^n with D = d^(2 eps)/4, c = n"
    if value <= 0:
        note += "; vacuous (below 1) at this d"
    return BoundReport(n, d, eps, regime, round(value, 6), None, note)


def case3_parameters(n: int, d: int, eps: float) -> tuple[int, int]:
    """Integer (c, D) the large-dilate argument prescribes, floored and clamped to >= 1."""
    L = _log_n(n)
    regime = classify(n, d, eps)
    if regime == "case3a":
        return max(1, min(n - 1, d * d // (4 * L))), 1
    if regime == "case3b":
        return n - 1, max(1, math.floor(d ** (2 * eps) / 4))
    raise InfeasibleError(f"d={d} is in regime {regime}, not a large-dilate case")
