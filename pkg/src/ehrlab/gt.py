"""
Gelfand-Tsetlin patterns and polytopes.

Patterns are stored in parallelogram form: R rows of equal width n, listed
bottom to top, so rows[0] is the bottom boundary mu and rows[-1] the top
boundary lambda. Adjacent rows interlace,

    upper[j] >= lower[j] >= upper[j + 1],

which makes every row weakly decreasing. The triangular pattern of a
straight shape is the case mu = 0 with its forced zeros written out.

Integer patterns with boundary (lambda, mu) and m = R - 1 steps are the
semistandard skew tableaux of shape lambda/mu with entries <= m, so they are
counted three ways here: row-by-row enumeration, the Jacobi-Trudi
determinant at x = 1^m, and (for straight shapes) the Weyl dimension
product.

Row sums w carry one entry per stored row, boundary rows included, so
w[0] = |mu| and w[-1] = |lambda|.
"""
from __future__ import annotations

import functools
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple, Union

from .errors import BoundaryError, FixtureError, InconsistentComputationError, NonPolynomialFitError
from .exactcore import IntMatrix, UniPolynomial, binomial, determinant, interpolate_polynomial
from .hull import contains, decompose_as_sum, partition_polytope
from .reports import CheckOutcome, VerificationReport
from .telemetry import get_tracer

logger = logging.getLogger(__name__)


# =============================================================================
# Types
# =============================================================================

@dataclass(frozen=True)
class Partition:
    """Weakly decreasing non-negative integers, zero padded to a fixed width."""

    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
            raise BoundaryError(f"{parts} is not a partition (weakly decreasing, non-negative)")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def of(cls, value: Union["Partition", Sequence[int]]) -> "Partition":
        return value if isinstance(value, Partition) else cls(tuple(value))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Comma-separated parts, e.g. "4,4,3,0"."""
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError as e:
            if isinstance(e, BoundaryError):
                raise
            raise BoundaryError(f"malformed partition {text!r}") from e

    @classmethod
    def zeros(cls, width: int) -> "Partition":
        return cls((0,) * width)

    @property
    def width(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        """Number of nonzero parts."""
        return sum(1 for p in self.parts if p)

    def scaled(self, k: int) -> "Partition":
        return Partition(tuple(k * p for p in self.parts))

    def contains(self, other: "Partition") -> bool:
        return self.width == other.width and all(a >= b for a, b in zip(self.parts, other.parts))


@dataclass(frozen=True)
class RowSums:
    values: Tuple[int, ...]

    @classmethod
    def parse(cls, text: str) -> "RowSums":
        try:
            return cls(tuple(int(x) for x in text.split(",") if x.strip()))
        except ValueError as e:
            raise BoundaryError(f"malformed row sums {text!r}") from e

    def scaled(self, k: int) -> "RowSums":
        return RowSums(tuple(k * v for v in self.values))

    def check_boundary(self, lam: Partition, mu: Partition) -> None:
        if len(self.values) < 2:
            raise BoundaryError("row sums need at least the two boundary rows")
        if self.values[0] != mu.size or self.values[-1] != lam.size:
            raise BoundaryError(
                f"row sums must start at |mu|={mu.size} and end at |lambda|={lam.size}, "
                f"got {self.values[0]} and {self.values[-1]}"
            )


@dataclass(frozen=True)
class GTPattern:
    rows: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        if not rows:
            raise BoundaryError("a pattern needs at least one row")
        if len({len(r) for r in rows}) != 1:
            raise BoundaryError("pattern rows have different widths")
        object.__setattr__(self, "rows", rows)

    @property
    def row_count(self) -> int:
        return len(self.rows)

    @property
    def width(self) -> int:
        return len(self.rows[0])

    @property
    def bottom(self) -> Tuple[int, ...]:
        return self.rows[0]

    @property
    def top(self) -> Tuple[int, ...]:
        return self.rows[-1]

    def row_sums(self) -> RowSums:
        return RowSums(tuple(sum(r) for r in self.rows))

    def __add__(self, other: "GTPattern") -> "GTPattern":
        if (self.row_count, self.width) != (other.row_count, other.width):
            raise BoundaryError("cannot add patterns of different shapes")
        return GTPattern(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def scaled(self, k: int) -> "GTPattern":
        return GTPattern(tuple(tuple(k * v for v in r) for r in self.rows))

    def with_row(self, index: int, row: Sequence[int]) -> "GTPattern":
        rows = list(self.rows)
        rows[index] = tuple(row)
        return GTPattern(tuple(rows))

    def dump(self, comment: Optional[str] = None) -> str:
        lines = [f"# {comment}"] if comment else []
        lines.append(f"{self.row_count} {self.width}")
        lines.extend(" ".join(str(v) for v in r) for r in self.rows)
        return "\n".join(lines) + "\n"


PartitionLike = Union[Partition, Sequence[int]]


# =============================================================================
# Validity
# =============================================================================

def interlacing_violations(pattern: GTPattern) -> List[str]:
    """Every failed interlacing inequality, rows and columns 1-indexed from the bottom."""
    failures = []
    for i in range(pattern.row_count - 1):
        lower, upper = pattern.rows[i], pattern.rows[i + 1]
        for j in range(pattern.width):
            if upper[j] < lower[j]:
                failures.append(
                    f"rows {i + 1}/{i + 2} column {j + 1}: upper {upper[j]} < lower {lower[j]}"
                )
            if j + 1 < pattern.width and lower[j] < upper[j + 1]:
                failures.append(
                    f"rows {i + 1}/{i + 2} column {j + 1}: lower {lower[j]} < upper-right {upper[j + 1]}"
                )
    return failures


def _check_boundary(lam: Partition, mu: Partition) -> None:
    if lam.width != mu.width:
        raise BoundaryError(f"lambda has width {lam.width} but mu has width {mu.width}")
    if not lam.contains(mu):
        raise BoundaryError(f"mu={mu.parts} is not contained in lambda={lam.parts}")


def validate_gt(pattern: GTPattern, lam: PartitionLike, mu: PartitionLike) -> bool:
    lam, mu = Partition.of(lam), Partition.of(mu)
    if pattern.width != lam.width or pattern.width != mu.width:
        raise BoundaryError(
            f"pattern width {pattern.width} does not match boundary widths {lam.width}, {mu.width}"
        )
    return (
        pattern.top == lam.parts
        and pattern.bottom == mu.parts
        and not interlacing_violations(pattern)
    )


# =============================================================================
# Enumeration
# =============================================================================

def _row_bounds(prev: Sequence[int], top: Sequence[int], remaining: int) -> List[Tuple[int, int]]:
    """Interval of each entry of the row above `prev`, with `remaining` rows still to go below the top.

    Entries are independent once prev and the top are fixed: the lower end
    comes from prev and from top[j + remaining], the upper end from top[j]
    and prev[j - 1].
    """
    n = len(prev)
    bounds = []
    for j in range(n):
        lo = prev[j]
        if j + remaining < n:
            lo = max(lo, top[j + remaining])
        hi = top[j]
        if j > 0:
            hi = min(hi, prev[j - 1])
        bounds.append((lo, hi))
    return bounds


def _rows_within(bounds: Sequence[Tuple[int, int]], target: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """Rows inside the bounds (left to right), optionally with a fixed sum."""
    n = len(bounds)
    min_tail = [0] * (n + 1)
    max_tail = [0] * (n + 1)
    for j in range(n - 1, -1, -1):
        min_tail[j] = min_tail[j + 1] + bounds[j][0]
        max_tail[j] = max_tail[j + 1] + bounds[j][1]
    chosen: List[int] = []

    def walk(j: int, acc: int) -> Iterator[Tuple[int, ...]]:
        if j == n:
            yield tuple(chosen)
            return
        lo, hi = bounds[j]
        if target is not None:
            rest = target - acc
            lo = max(lo, rest - max_tail[j + 1])
            hi = min(hi, rest - min_tail[j + 1])
        for v in range(lo, hi + 1):
            chosen.append(v)
            yield from walk(j + 1, acc + v)
            chosen.pop()

    return walk(0, 0)


def enumerate_gt(lam: PartitionLike, mu: PartitionLike, rows: int) -> int:
    """Number of integer patterns with `rows` rows, bottom mu and top lambda."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    _check_boundary(lam, mu)
    if rows < 2:
        raise BoundaryError(f"a pattern with distinct boundary rows needs at least 2 rows, got {rows}")
    top = lam.parts

    @functools.lru_cache(maxsize=None)
    def count_from(index: int, prev: Tuple[int, ...]) -> int:
        if index == rows - 1:
            return 1
        bounds = _row_bounds(prev, top, rows - 2 - index)
        if any(lo > hi for lo, hi in bounds):
            return 0
        return sum(count_from(index + 1, r) for r in _rows_within(bounds))

    return count_from(0, mu.parts)


def _jacobi_trudi_h(k: int, m: int) -> int:
    """h_k(1^m) = C(m + k - 1, k); zero for negative k."""
    if k < 0:
        return 0
    return binomial(m + k - 1, k)


def skew_schur_ones(lam: PartitionLike, mu: PartitionLike, m: int) -> int:
    """s_{lambda/mu}(1^m) as det(h_{lambda_i - mu_j - i + j}(1^m))."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    _check_boundary(lam, mu)
    n = lam.width
    matrix = IntMatrix.from_rows([
        [_jacobi_trudi_h(lam.parts[i] - mu.parts[j] - i + j, m) for j in range(n)]
        for i in range(n)
    ])
    return determinant(matrix)


def weyl_dimension(lam: PartitionLike, m: int) -> int:
    """prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i) over m variables."""
    lam = Partition.of(lam)
    if lam.length > m:
        raise BoundaryError(f"{lam.parts} has more than {m} nonzero parts")
    parts = list(lam.parts[:m]) + [0] * max(0, m - lam.width)
    numerator = denominator = 1
    for i in range(m):
        for j in range(i + 1, m):
            numerator *= parts[i] - parts[j] + j - i
            denominator *= j - i
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InconsistentComputationError(f"Weyl dimension of {lam.parts} is not an integer")
    return quotient


def ehrhart_gt(lam: PartitionLike, mu: PartitionLike, m: int) -> UniPolynomial:
    """n -> s_{n lambda / n mu}(1^m), interpolated over the free-cell count plus one extra check."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    _check_boundary(lam, mu)
    degree_bound = max(0, (m - 1) * lam.width)
    values = [skew_schur_ones(lam.scaled(n), mu.scaled(n), m) for n in range(degree_bound + 2)]
    poly = interpolate_polynomial(list(enumerate(values[:-1])))
    if poly(degree_bound + 1) != values[-1]:
        raise InconsistentComputationError(
            f"GT count at n={degree_bound + 1} is {values[-1]}, interpolation predicts {poly(degree_bound + 1)}"
        )
    logger.debug(f"ehr_GT({lam.parts}/{mu.parts}, m={m}) = {poly.render()}")
    return poly


# =============================================================================
# Row-sum restricted polytopes
# =============================================================================

def enumerate_gt_with_rowsums(lam: PartitionLike, mu: PartitionLike, w: RowSums) -> List[GTPattern]:
    """All integer patterns with boundary (lambda, mu) and row sums w, in lexicographic row order."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    _check_boundary(lam, mu)
    w.check_boundary(lam, mu)
    rows = len(w.values)
    top = lam.parts
    found: List[GTPattern] = []
    stack: List[Tuple[int, ...]] = [mu.parts]

    def walk(index: int) -> None:
        if index == rows - 1:
            found.append(GTPattern(tuple(stack)))
            return
        bounds = _row_bounds(stack[-1], top, rows - 2 - index)
        if any(lo > hi for lo, hi in bounds):
            return
        for r in _rows_within(bounds, w.values[index + 1]):
            stack.append(r)
            walk(index + 1)
            stack.pop()

    walk(0)
    return found


def count_gt_with_rowsums(lam: PartitionLike, mu: PartitionLike, w: RowSums) -> int:
    """Kostka number K_{lambda/mu, content}: patterns counted without materializing them."""
    lam, mu = Partition.of(lam), Partition.of(mu)
    _check_boundary(lam, mu)
    w.check_boundary(lam, mu)
    rows = len(w.values)
    top = lam.parts

    @functools.lru_cache(maxsize=None)
    def count_from(index: int, prev: Tuple[int, ...]) -> int:
        if index == rows - 1:
            return 1
        bounds = _row_bounds(prev, top, rows - 2 - index)
        if any(lo > hi for lo, hi in bounds):
            return 0
        return sum(count_from(index + 1, r) for r in _rows_within(bounds, w.values[index + 1]))

    return count_from(0, mu.parts)


def stretched_kostka(lam: PartitionLike, mu: PartitionLike, w: RowSums,
                     samples: Optional[int] = None) -> UniPolynomial:
    """Interpolate n -> #(integer points of G_{n lambda / n mu, n w}) from n = 0..samples.

    The default sample bound is the dimension of the slice. One extra value
    at samples + 1 must agree with the interpolant, otherwise the fit is
    rejected instead of guessed.
    """
    lam, mu = Partition.of(lam), Partition.of(mu)
    w.check_boundary(lam, mu)
    interior = len(w.values) - 2
    if samples is None:
        samples = max(0, interior * (lam.width - 1))
    values = [count_gt_with_rowsums(lam.scaled(n), mu.scaled(n), w.scaled(n)) for n in range(samples + 2)]
    poly = interpolate_polynomial(list(enumerate(values[:-1])))
    predicted = poly(samples + 1)
    if predicted != values[-1]:
        raise NonPolynomialFitError(
            f"insufficient samples / non-polynomial fit: count at n={samples + 1} is {values[-1]}, "
            f"interpolant predicts {predicted}",
            expected=values[-1],
            predicted=str(predicted),
        )
    if poly.has_negative_coefficient():
        logger.warning(f"stretched Kostka polynomial has a negative coefficient: {poly.render()}")
    else:
        logger.info(f"stretched Kostka polynomial {poly.render()} has non-negative coefficients")
    return poly


# =============================================================================
# The power-sum face family
# =============================================================================

ONE = "one"
ZERO = "zero"
SHARED = "z"


@dataclass(frozen=True)
class GTFaceSpec:
    """Equality regions of a face of the triangular GT polytope with top row (1^ell, 0^...).

    regions[k][p] labels the triangle cell at depth k below the top row and
    position p: ONE and ZERO are pinned, SHARED and "x1".."x<ell>" are free.
    """

    ell: int
    width: int
    regions: Tuple[Tuple[str, ...], ...]

    @property
    def free_regions(self) -> Tuple[str, ...]:
        return (SHARED,) + tuple(f"x{i}" for i in range(1, self.ell + 1))

    @property
    def top_row(self) -> Partition:
        return Partition((1,) * self.ell + (0,) * (self.width - self.ell))

    def materialize(self, values: Mapping[str, int], dilate: int) -> GTPattern:
        """Parallelogram pattern (bottom row zero) at the given dilate."""
        pinned = {ONE: dilate, ZERO: 0}
        rows = []
        for h in range(self.width + 1):
            k = self.width - h
            row = [pinned[label] if label in pinned else values[label] for label in self.regions[k]] if h else []
            rows.append(tuple(row) + (0,) * (self.width - h))
        return GTPattern(tuple(rows))


def face_spec(ell: int) -> GTFaceSpec:
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    # Width 3 leaves no room for the shared region, so ell = 1 gets one more zero.
    width = 2 * ell + 1 if ell > 1 else 4
    regions = []
    for k in range(width):
        labels = []
        for p in range(width - k):
            if k + 2 * p < 2 * ell:
                labels.append(ONE)
            elif p >= ell:
                labels.append(ZERO)
            elif k == 2 * (ell - p):
                labels.append(f"x{ell - p}")
            else:
                labels.append(SHARED)
        regions.append(tuple(labels))
    return GTFaceSpec(ell, width, tuple(regions))


def face_example_count(ell: int, n: int) -> int:
    """Lattice points of the n-th dilate of the face, by direct enumeration of its free values."""
    if n < 0:
        raise ValueError(f"dilate must be non-negative, got {n}")
    spec = face_spec(ell)
    lam = spec.top_row.scaled(n)
    mu = Partition.zeros(spec.width)
    count = 0
    for combo in itertools.product(range(n + 1), repeat=len(spec.free_regions)):
        pattern = spec.materialize(dict(zip(spec.free_regions, combo)), n)
        if validate_gt(pattern, lam, mu):
            count += 1
    return count


# =============================================================================
# Fixtures
# =============================================================================

COUNTEREXAMPLE_LAMBDA = Partition((4, 4, 4, 4, 3, 3, 2, 2, 2))
COUNTEREXAMPLE_MU = Partition((2, 0, 0, 0, 0, 0, 0, 0, 0))
COUNTEREXAMPLE_ROW_SUMS = RowSums((2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 16, 18, 20, 22, 23, 25, 27, 28))
COUNTEREXAMPLE_BOLD_ROW = (6, 6, 6, 6, 4, 4, 2, 1, 1)
COUNTEREXAMPLE_FILES = ("G", "G1", "G2", "G3", "G4")


def parse_pattern_text(text: str) -> GTPattern:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FixtureError("pattern text is empty")
    try:
        row_count, width = (int(x) for x in lines[0].split())
        rows = [tuple(int(x) for x in line.split()) for line in lines[1:]]
    except ValueError as e:
        raise FixtureError(f"malformed pattern text: {e}") from e
    if len(rows) != row_count:
        raise FixtureError(f"header announces {row_count} rows, found {len(rows)}")
    bad = [i + 1 for i, r in enumerate(rows) if len(r) != width]
    if bad:
        raise FixtureError(f"rows {bad} do not have width {width}")
    return GTPattern(tuple(rows))


def load_pattern(path: Path) -> GTPattern:
    path = Path(path)
    if not path.is_file():
        raise FixtureError(f"fixture file not found: {path}")
    return parse_pattern_text(path.read_text(encoding="utf-8"))


def load_counterexample_fixtures(directory: Path) -> Dict[str, GTPattern]:
    """Load G and G1..G4 from `<directory>/<name>.txt`."""
    directory = Path(directory)
    patterns = {name: load_pattern(directory / f"{name}.txt") for name in COUNTEREXAMPLE_FILES}
    for name, pattern in patterns.items():
        failures = interlacing_violations(pattern)
        if failures:
            logger.warning(f"fixture {name} breaks interlacing: {failures[0]}")
    logger.info(f"loaded counterexample fixtures from {directory}")
    return patterns


# =============================================================================
# Counterexample verifier
# =============================================================================

def _pattern_problems(pattern: GTPattern, lam: Partition, mu: Partition, w: RowSums) -> List[str]:
    problems = []
    if (pattern.row_count, pattern.width) != (len(w.values), lam.width):
        return [f"shape {pattern.row_count}x{pattern.width}, expected {len(w.values)}x{lam.width}"]
    if pattern.top != lam.parts:
        problems.append(f"top row {pattern.top} != {lam.parts}")
    if pattern.bottom != mu.parts:
        problems.append(f"bottom row {pattern.bottom} != {mu.parts}")
    problems.extend(interlacing_violations(pattern))
    for i, (got, want) in enumerate(zip(pattern.row_sums().values, w.values)):
        if got != want:
            problems.append(f"row {i + 1} sums to {got}, expected {want}")
    return problems


def _check_fixture_validity(patterns: Mapping[str, GTPattern], lam: Partition, mu: Partition,
                            w: RowSums) -> CheckOutcome:
    evidence = []
    passed = True
    for name in COUNTEREXAMPLE_FILES[1:]:
        problems = _pattern_problems(patterns[name], lam, mu, w)
        passed = passed and not problems
        evidence.append(f"{name}: valid" if not problems else f"{name}: " + "; ".join(problems))
    problems = _pattern_problems(patterns["G"], lam.scaled(2), mu.scaled(2), w.scaled(2))
    passed = passed and not problems
    evidence.append("G: valid in the 2nd dilate" if not problems else "G: " + "; ".join(problems))
    return CheckOutcome(name="fixtures are integer points with boundary and row sums", passed=passed,
                        evidence=evidence)


def _check_half_sum(patterns: Mapping[str, GTPattern]) -> CheckOutcome:
    g = patterns["G"]
    parts = [patterns[name] for name in COUNTEREXAMPLE_FILES[1:]]
    shapes = {(p.row_count, p.width) for p in parts + [g]}
    if len(shapes) != 1:
        return CheckOutcome(name="G = (G1 + G2 + G3 + G4) / 2", passed=False,
                            evidence=[f"patterns have different shapes: {sorted(shapes)}"])
    total = functools.reduce(lambda a, b: a + b, parts)
    doubled = g.scaled(2)
    evidence = []
    for i, (row, want) in enumerate(zip(doubled.rows, total.rows)):
        for j, (a, b) in enumerate(zip(row, want)):
            if a != b:
                evidence.append(f"row {i + 1} column {j + 1}: 2G has {a}, the sum has {b}")
    passed = not evidence
    if passed:
        evidence.append("2G equals G1 + G2 + G3 + G4 entry by entry")
    return CheckOutcome(name="G = (G1 + G2 + G3 + G4) / 2", passed=passed, evidence=evidence)


def _check_bold_row(g: GTPattern, bold_row: Tuple[int, ...]) -> CheckOutcome:
    name = "distinguished row of G does not split in the partition polytope"
    hits = [i for i, r in enumerate(g.rows) if r == tuple(bold_row)]
    if len(hits) != 1:
        return CheckOutcome(name=name, passed=False,
                            evidence=[f"row {bold_row} occurs {len(hits)} times in G, expected once"])
    total = sum(bold_row)
    if total % 2:
        return CheckOutcome(name=name, passed=False, evidence=[f"row {bold_row} has odd sum {total}"])
    a, b = total // 2, len(bold_row)
    poly = partition_polytope(a, b)
    cert = contains(poly, [Fraction(v, 2) for v in bold_row])
    evidence = [f"row {hits[0] + 1} of G (from the bottom) is {bold_row}, sum {total} = 2*{a}",
                f"half of it lies {cert.verdict} P_{{{a},{b}}}"]
    # Lattice points of a partition polytope are exactly its generators.
    decomposition = decompose_as_sum(tuple(bold_row), poly, 2, lattice_points=poly.generators)
    if decomposition.found:
        first, second = decomposition.parts
        evidence.append(f"splits as {first} + {second}")
    else:
        evidence.append(
            f"no split into two partitions of {a} with at most {b} parts "
            f"({decomposition.examined} candidates examined), so G has no two-term integer decomposition"
        )
    return CheckOutcome(name=name, passed=cert.inside and not decomposition.found, evidence=evidence)


def verify_counterexample_36(patterns: Mapping[str, GTPattern],
                             lam: Partition = COUNTEREXAMPLE_LAMBDA,
                             mu: Partition = COUNTEREXAMPLE_MU,
                             w: RowSums = COUNTEREXAMPLE_ROW_SUMS,
                             bold_row: Tuple[int, ...] = COUNTEREXAMPLE_BOLD_ROW) -> VerificationReport:
    """Machine-check that G is an integer point of the 2nd dilate of G_{lambda/mu,w} with no split."""
    missing = [name for name in COUNTEREXAMPLE_FILES if name not in patterns]
    if missing:
        raise FixtureError(f"missing counterexample patterns: {', '.join(missing)}")
    tracer = get_tracer(__name__)
    with tracer.start_as_current_span("gt.verify_counterexample") as span:
        checks = [
            _check_fixture_validity(patterns, lam, mu, w),
            _check_half_sum(patterns),
            _check_bold_row(patterns["G"], tuple(bold_row)),
        ]
        passed = all(c.passed for c in checks)
        span.set_attribute("verify.passed", passed)
        for c in checks:
            logger.info(f"{'PASS' if c.passed else 'FAIL'}: {c.name}")
    return VerificationReport(
        subject=f"G*_{{lambda/mu,w}} with lambda={lam.parts}, mu={mu.parts} lacks the IDP",
        passed=passed,
        checks=checks,
    )
