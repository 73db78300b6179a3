"""
V-represented lattice polytopes: exact membership with certificates, lattice
points of dilates, and the integer decomposition property (IDP).

Membership is exact LP feasibility in barycentric form,

    exists w >= 0 with sum(w) = 1 and sum_j w_j g_j = x,

solved by the phase-1 simplex in `simplex.py`. Every answer carries a
certificate (convex weights, or a separating integer functional) that is
re-checked by plain arithmetic before it is returned.

Partition polytopes P_{a,b} carry structural hints (fixed coordinate sum,
weakly decreasing coordinates, prefix-sum floors) that make dilate
enumeration cheap; other polytopes fall back to a bounding-box scan, which is
only practical in dimension <= 4.
"""
from __future__ import annotations

import functools
import itertools
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

from .errors import DimensionMismatchError, InconsistentComputationError
from .simplex import OPTIMAL, ExactSimplex

logger = logging.getLogger(__name__)

LatticePoint = Tuple[int, ...]

INSIDE = "inside"
OUTSIDE = "outside"

GENERIC_BOX_DIMENSION_LIMIT = 4


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True)
class VPolytope:
    """Convex hull of integer generators (not necessarily vertices).

    Optional hints, valid for every generator and hence for the hull:
      fixed_sum     all generators have this coordinate sum
      decreasing    generators are weakly decreasing and non-negative
      prefix_floor  prefix_floor[j] <= x_1 + ... + x_{j+1}
    """

    dimension: int
    generators: Tuple[LatticePoint, ...]
    fixed_sum: Optional[int] = None
    decreasing: bool = False
    prefix_floor: Optional[Tuple[int, ...]] = None

    def __post_init__(self):
        if not self.generators:
            raise ValueError("a polytope needs at least one generator")
        for g in self.generators:
            if len(g) != self.dimension:
                raise DimensionMismatchError(
                    f"generator {g} does not have dimension {self.dimension}"
                )


@dataclass(frozen=True)
class MembershipCertificate:
    verdict: str
    weights: Optional[Tuple[Fraction, ...]] = None
    functional: Optional[Tuple[int, ...]] = None
    offset: Optional[Fraction] = None

    @property
    def inside(self) -> bool:
        return self.verdict == INSIDE


@dataclass(frozen=True)
class Decomposition:
    parts: Optional[Tuple[LatticePoint, ...]]
    examined: int

    @property
    def found(self) -> bool:
        return self.parts is not None


@dataclass(frozen=True)
class IdpViolation:
    dilate: int
    point: LatticePoint
    examined: int


# =============================================================================
# Partition polytopes
# =============================================================================

def _partitions(total: int, parts: int, cap: int, floors: Sequence[int] = (), prefix: int = 0) -> Iterator[List[int]]:
    """Weakly decreasing non-negative sequences of length `parts` summing to `total`.

    Entries never exceed `cap`; floors[j] bounds the running prefix sum from
    below (relative to the prefix accumulated so far). Largest first.
    """
    if parts == 0:
        if total == 0:
            yield []
        return
    hi = min(cap, total)
    lo = -(-total // parts)
    depth = len(floors) - parts if floors else -1
    if floors and depth >= 0:
        lo = max(lo, floors[depth] - prefix)
    for first in range(hi, lo - 1, -1):
        for rest in _partitions(total - first, parts - 1, first, floors, prefix + first):
            yield [first] + rest


def count_partitions(a: int, b: int) -> int:
    """Partitions of a into at most b parts (independent recursion)."""

    @functools.lru_cache(maxsize=None)
    def p(n: int, k: int) -> int:
        if n == 0:
            return 1
        if k == 0 or n < 0:
            return 0
        return p(n, k - 1) + p(n - k, k)

    return p(a, b)


def partition_polytope(a: int, b: int) -> VPolytope:
    """P_{a,b}: convex hull of the partitions of a with at most b parts, zero padded."""
    if a < 1 or b < 1:
        raise ValueError(f"a and b must be positive, got a={a}, b={b}")
    generators = tuple(tuple(p) for p in _partitions(a, b, a))
    # Prefix averages of a decreasing vector dominate the overall average.
    floors = tuple(-(-(j * a) // b) for j in range(1, b + 1))
    return VPolytope(b, generators, fixed_sum=a, decreasing=True, prefix_floor=floors)


# =============================================================================
# Membership
# =============================================================================

def _dot(u: Sequence, v: Sequence):
    return sum(x * y for x, y in zip(u, v))


def validate_certificate(poly: VPolytope, point: Sequence[Fraction], cert: MembershipCertificate) -> bool:
    """Check a certificate with plain exact arithmetic."""
    point = [Fraction(x) for x in point]
    if cert.inside:
        w = cert.weights
        if w is None or len(w) != len(poly.generators):
            return False
        if any(x < 0 for x in w) or sum(w) != 1:
            return False
        for r in range(poly.dimension):
            if sum(wj * g[r] for wj, g in zip(w, poly.generators)) != point[r]:
                return False
        return True
    c = cert.functional
    if c is None or cert.offset is None or len(c) != poly.dimension:
        return False
    top = max(_dot(c, g) for g in poly.generators)
    return top <= cert.offset < _dot(c, point)


def contains(poly: VPolytope, point: Sequence[Fraction]) -> MembershipCertificate:
    """Exact membership test with a re-validated certificate."""
    if len(point) != poly.dimension:
        raise DimensionMismatchError(
            f"point has dimension {len(point)}, polytope has dimension {poly.dimension}"
        )
    point = tuple(Fraction(x) for x in point)
    gens = poly.generators
    a = [[Fraction(g[r]) for g in gens] for r in range(poly.dimension)]
    a.append([Fraction(1)] * len(gens))
    b = list(point) + [Fraction(1)]
    solution = ExactSimplex(a, b).find_feasible()

    if solution.status == OPTIMAL:
        cert = MembershipCertificate(INSIDE, weights=solution.x)
    else:
        y = solution.farkas
        u = y[:poly.dimension]
        scale = 1
        for v in u:
            scale = scale * v.denominator // math.gcd(scale, v.denominator)
        functional = tuple(int(v * scale) for v in u)
        offset = Fraction(max(_dot(functional, g) for g in gens))
        cert = MembershipCertificate(OUTSIDE, functional=functional, offset=offset)

    if not validate_certificate(poly, point, cert):
        raise InconsistentComputationError(f"membership certificate failed re-validation at {point}")
    logger.debug(f"membership of {point}: {cert.verdict} after {solution.pivots} pivots")
    return cert


# =============================================================================
# Dilates and decompositions
# =============================================================================

def _dilate_candidates(poly: VPolytope, k: int) -> Iterator[LatticePoint]:
    """Integer vectors satisfying cheap necessary conditions for k*P."""
    if poly.decreasing and poly.fixed_sum is not None:
        floors = tuple(k * f for f in poly.prefix_floor) if poly.prefix_floor else ()
        cap = k * max(g[0] for g in poly.generators)
        for p in _partitions(k * poly.fixed_sum, poly.dimension, cap, floors):
            yield tuple(p)
        return
    if poly.dimension > GENERIC_BOX_DIMENSION_LIMIT:
        logger.warning(
            f"bounding-box enumeration in dimension {poly.dimension} will be very slow"
        )
    ranges = [
        range(k * min(g[r] for g in poly.generators), k * max(g[r] for g in poly.generators) + 1)
        for r in range(poly.dimension)
    ]
    for x in itertools.product(*ranges):
        if poly.fixed_sum is None or sum(x) == k * poly.fixed_sum:
            yield tuple(x)


def _is_decreasing_nonneg(x: Sequence[int]) -> bool:
    return all(v >= 0 for v in x) and all(p >= q for p, q in zip(x, x[1:]))


class _Splitter:
    """Searches for k-term decompositions into a fixed set of lattice points."""

    def __init__(self, poly: VPolytope, points: Sequence[LatticePoint]):
        self.decreasing = poly.decreasing
        self.points = sorted(points)
        self.point_set: Set[LatticePoint] = set(self.points)
        self.failed: Dict[Tuple[LatticePoint, int], int] = {}
        self.examined = 0

    def split(self, x: LatticePoint, k: int) -> Optional[Tuple[LatticePoint, ...]]:
        if k == 1:
            self.examined += 1
            return (x,) if x in self.point_set else None
        if (x, k) in self.failed:
            return None
        for v in self.points:
            self.examined += 1
            rest = tuple(p - q for p, q in zip(x, v))
            if self.decreasing and not _is_decreasing_nonneg(rest):
                continue
            if k == 2:
                if rest in self.point_set:
                    return (v, rest)
                continue
            tail = self.split(rest, k - 1)
            if tail is not None:
                return (v,) + tail
        self.failed[(x, k)] = 1
        return None


def decompose_as_sum(point: LatticePoint, poly: VPolytope, k: int,
                     lattice_points: Optional[Sequence[LatticePoint]] = None) -> Decomposition:
    """k lattice points of P summing to `point`, or the size of a failed exhaustive search."""
    if len(point) != poly.dimension:
        raise DimensionMismatchError(
            f"point has dimension {len(point)}, polytope has dimension {poly.dimension}"
        )
    if lattice_points is None:
        lattice_points = lattice_points_of_dilate(poly, 1)
    splitter = _Splitter(poly, lattice_points)
    parts = splitter.split(tuple(point), k)
    return Decomposition(parts, splitter.examined)


def lattice_points_of_dilate(poly: VPolytope, k: int) -> List[LatticePoint]:
    """All integer points of k*P, sorted lexicographically."""
    if k < 1:
        raise ValueError(f"dilation factor must be positive, got {k}")
    generator_sums = _Splitter(poly, poly.generators)
    found = []
    for x in _dilate_candidates(poly, k):
        # A sum of k generators is in k*P without solving an LP.
        if generator_sums.split(x, k) is not None or contains(poly, [Fraction(v, k) for v in x]).inside:
            found.append(x)
    logger.info(f"{len(found)} lattice points in the {k}-th dilate")
    return sorted(found)


def _check_candidates(poly: VPolytope, k: int, lattice: Sequence[LatticePoint],
                      candidates: Sequence[LatticePoint]) -> List[IdpViolation]:
    violations = []
    for x in candidates:
        # A fresh memo per point keeps `examined` independent of chunking.
        splitter = _Splitter(poly, lattice)
        if splitter.split(x, k) is not None:
            continue
        if contains(poly, [Fraction(v, k) for v in x]).inside:
            violations.append(IdpViolation(k, x, splitter.examined))
    return violations


def idp_check(poly: VPolytope, k: int, jobs: int = 1) -> List[IdpViolation]:
    """Points of k*P with no k-term decomposition; empty means IDP holds at level k.

    Decomposition is tried first; the exact membership LP only runs for
    candidates that do not split.
    """
    if k < 1:
        raise ValueError(f"dilation factor must be positive, got {k}")
    lattice = lattice_points_of_dilate(poly, 1)
    candidates = list(_dilate_candidates(poly, k))
    logger.info(f"IDP check at level {k}: {len(candidates)} candidates, {len(lattice)} lattice points")
    if jobs <= 1 or len(candidates) < 2 * jobs:
        violations = _check_candidates(poly, k, lattice, candidates)
    else:
        chunks = [candidates[i::jobs] for i in range(jobs)]
        worker = functools.partial(_check_candidates, poly, k, lattice)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            violations = [v for part in pool.map(worker, chunks) for v in part]
    return sorted(violations, key=lambda v: v.point)
