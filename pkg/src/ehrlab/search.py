"""
Exhaustive searches: posets up to isomorphism and the two batch scans built
on them (negative Ehrhart coefficients of order polytopes, IDP failures of
partition polytopes).

Posets of size n are grown from posets of size n - 1 by adding a new maximal
element above each order ideal; duplicates are rejected by a canonical form.
Scans split their work into fixed index ranges, so one worker and many
workers produce the same report.
"""
from __future__ import annotations

import functools
import hashlib
import itertools
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, TypeVar

from .errors import EnumerationLimitError
from .exactcore import format_rational
from .hull import idp_check, partition_polytope
from .poset import Poset, ehrhart_order_polytope, ideal_lattice
from .reports import ScanReport, ScanViolation
from .telemetry import get_tracer

logger = logging.getLogger(__name__)

MAX_POSET_SIZE = 7
MAX_IDP_A = 18
MAX_IDP_B = 9

T = TypeVar("T")
R = TypeVar("R")


# =============================================================================
# Canonical forms
# =============================================================================

@dataclass(frozen=True)
class CanonicalPoset:
    """Relation matrix (row-major, a <= b bits) minimized over invariant-respecting relabelings."""

    size: int
    encoding: bytes

    @property
    def hex(self) -> str:
        return self.encoding.hex()

    def to_poset(self) -> Poset:
        n = self.size
        bits = int.from_bytes(self.encoding, "big")
        matrix = [[bool(bits >> (n * n - 1 - (a * n + b)) & 1) for b in range(n)] for a in range(n)]
        return Poset.from_relation_matrix(matrix)


def _refined_invariants(p: Poset) -> List[tuple]:
    """Per-element labels preserved by every isomorphism, refined through neighbours."""
    down = [bin(p.strict_down(v)).count("1") for v in range(p.size)]
    up = [bin(p.strict_up(v)).count("1") for v in range(p.size)]
    labels: List[tuple] = [(d, u) for d, u in zip(down, up)]
    for _ in range(p.size):
        refined = []
        for v in range(p.size):
            below = sorted(labels[u] for u in range(p.size) if u != v and p.leq(u, v))
            above = sorted(labels[u] for u in range(p.size) if u != v and p.leq(v, u))
            refined.append((labels[v], tuple(below), tuple(above)))
        if len(set(refined)) == len(set(labels)):
            break
        labels = refined
    return labels


def _encode(p: Poset, order: Sequence[int]) -> int:
    bits = 0
    for a in order:
        for b in order:
            bits = (bits << 1) | p.leq(a, b)
    return bits


def canonical_form(p: Poset) -> CanonicalPoset:
    n = p.size
    labels = _refined_invariants(p)
    classes: Dict[tuple, List[int]] = {}
    for v in range(n):
        classes.setdefault(labels[v], []).append(v)
    blocks = [classes[key] for key in sorted(classes)]
    best = None
    for arrangement in itertools.product(*(itertools.permutations(block) for block in blocks)):
        order = [v for block in arrangement for v in block]
        code = _encode(p, order)
        if best is None or code < best:
            best = code
    return CanonicalPoset(n, best.to_bytes((n * n + 7) // 8, "big"))


def is_isomorphic(p: Poset, q: Poset) -> bool:
    """Brute force over all n! relabelings."""
    if p.size != q.size:
        return False
    target = q.relation_matrix()
    for perm in itertools.permutations(range(p.size)):
        if all(p.leq(perm[a], perm[b]) == target[a][b] for a in range(p.size) for b in range(p.size)):
            return True
    return False


# =============================================================================
# Generation
# =============================================================================

@functools.lru_cache(maxsize=None)
def _posets_of_size(n: int) -> Tuple[CanonicalPoset, ...]:
    if n == 1:
        return (canonical_form(Poset(1, (1,))),)
    found: Dict[bytes, CanonicalPoset] = {}
    for smaller in _posets_of_size(n - 1):
        base = smaller.to_poset()
        new = n - 1
        for ideal in ideal_lattice(base).ideals:
            grown = Poset(n, base.down + (ideal | 1 << new,))
            canon = canonical_form(grown)
            found.setdefault(canon.encoding, canon)
    result = tuple(found[key] for key in sorted(found))
    logger.info(f"{len(result)} posets on {n} elements")
    return result


def enumerate_posets(n: int) -> List[CanonicalPoset]:
    """All posets on n elements up to isomorphism, sorted by canonical encoding."""
    if n < 1:
        raise EnumerationLimitError(f"poset size must be positive, got {n}")
    if n > MAX_POSET_SIZE:
        raise EnumerationLimitError(
            f"refusing to enumerate posets on {n} > {MAX_POSET_SIZE} elements: "
            f"the count grows super-exponentially (2045 already at 7)"
        )
    return list(_posets_of_size(n))


# =============================================================================
# Scans
# =============================================================================

def _checksum(keys: Iterable[str]) -> str:
    digest = hashlib.sha256()
    for key in sorted(keys):
        digest.update(key.encode("utf-8"))
        digest.update(b"\n")
    return digest.hexdigest()


def _run_units(worker: Callable[[T], List[R]], units: List[T], jobs: int) -> List[R]:
    """Map `worker` over units, serially or in a process pool; results keep unit order."""
    if jobs <= 1 or len(units) < 2:
        return [r for unit in units for r in worker(unit)]
    chunk = max(1, len(units) // (jobs * 4))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return [r for part in pool.map(worker, units, chunksize=chunk) for r in part]


def _negative_coefficients(poset: CanonicalPoset) -> List[ScanViolation]:
    poly = ehrhart_order_polytope(poset.to_poset())
    if not poly.has_negative_coefficient():
        return []
    value, degree = poly.min_coefficient()
    return [ScanViolation(
        subject=f"n={poset.size} {poset.hex}",
        values=poly.to_json(),
        note=f"coefficient {format_rational(value)} at degree {degree}",
    )]


def scan_negative_coefficients(max_n: int, jobs: int = 1) -> ScanReport:
    """Ehrhart polynomials of every order polytope of dimension <= max_n."""
    if max_n > MAX_POSET_SIZE:
        raise EnumerationLimitError(f"poset scan is capped at size {MAX_POSET_SIZE}, got {max_n}")
    tracer = get_tracer(__name__)
    with tracer.start_as_current_span("search.scan_negative_coefficients") as span:
        span.set_attribute("scan.max_size", max_n)
        span.set_attribute("scan.jobs", jobs)
        start = time.perf_counter()
        posets = [p for n in range(1, max_n + 1) for p in enumerate_posets(n)]
        violations = _run_units(_negative_coefficients, posets, jobs)
        violations.sort(key=lambda v: v.subject)
        elapsed = int((time.perf_counter() - start) * 1000)
        span.set_attribute("scan.examined", len(posets))
        span.set_attribute("scan.violations", len(violations))
    logger.info(f"poset scan up to size {max_n}: {len(posets)} posets, {len(violations)} violations")
    return ScanReport(
        scope={"kind": "posets", "max_size": str(max_n)},
        examined=len(posets),
        violations=violations,
        checksum=_checksum(f"{p.size}:{p.hex}" for p in posets),
        wall_time_ms=elapsed,
    )


def _idp_cell(cell: Tuple[int, int, int]) -> List[ScanViolation]:
    a, b, k = cell
    return [
        ScanViolation(
            subject=f"P_{{{a},{b}}}",
            values=[str(x) for x in v.point],
            note=f"dilate {k}, {v.examined} candidate decompositions examined",
        )
        for v in idp_check(partition_polytope(a, b), k)
    ]


def scan_idp_partition_polytopes(max_a: int, max_b: int, k: int = 2, jobs: int = 1) -> ScanReport:
    """IDP at level k for every P_{a,b} with a <= max_a, b <= max_b."""
    if max_a > MAX_IDP_A or max_b > MAX_IDP_B:
        raise EnumerationLimitError(
            f"IDP scan is capped at a <= {MAX_IDP_A}, b <= {MAX_IDP_B}; got a <= {max_a}, b <= {max_b}"
        )
    tracer = get_tracer(__name__)
    with tracer.start_as_current_span("search.scan_idp_partition_polytopes") as span:
        span.set_attribute("scan.max_a", max_a)
        span.set_attribute("scan.max_b", max_b)
        span.set_attribute("scan.dilate", k)
        start = time.perf_counter()
        cells = [(a, b, k) for a in range(1, max_a + 1) for b in range(1, max_b + 1)]
        violations = _run_units(_idp_cell, cells, jobs)
        violations.sort(key=lambda v: (v.subject, [int(x) for x in v.values]))
        elapsed = int((time.perf_counter() - start) * 1000)
        span.set_attribute("scan.violations", len(violations))
    logger.info(f"IDP scan a<={max_a}, b<={max_b}, k={k}: {len(violations)} violations")
    return ScanReport(
        scope={"kind": "idp", "max_a": str(max_a), "max_b": str(max_b), "dilate": str(k)},
        examined=len(cells),
        violations=violations,
        checksum=_checksum(f"{a},{b},{k}" for a, b, k in cells),
        wall_time_ms=elapsed,
    )
