"""
Finite posets and their order polytopes.

Lattice points of the t-th dilate of the order polytope O(P) are the
order-preserving maps P -> {0..t}. Every counting routine here works on the
lattice of order ideals (down-sets): a map f corresponds to the multichain of
ideals D_s = {v : f(v) <= s}, so counts become path counts in that lattice.

Young shapes and rooted trees are turned into posets with their minimum at
the corner cell (1,1) and at the root respectively; hooks are computed for
both.

Text formats (1-indexed):
  poset file: first line n, then cover relations "a < b"
  tree file:  first line n, then "child parent" lines, root omitted
"""
from __future__ import annotations

import functools
import logging
from array import array
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import InconsistentComputationError, InvalidPosetError
from .exactcore import UniPolynomial, factorial, interpolate_polynomial

logger = logging.getLogger(__name__)


def _bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


# =============================================================================
# Poset
# =============================================================================

@dataclass(frozen=True)
class Poset:
    """Partial order on {0..size-1}.

    down[i] is the bitset of all elements <= i (i included), i.e. row i of
    the transitively closed, reflexive relation matrix.
    """

    size: int
    down: Tuple[int, ...]

    # ---- Constructors ----
    @classmethod
    def from_covers(cls, size: int, covers: Sequence[Tuple[int, int]]) -> "Poset":
        """Build from relations (a, b) meaning a < b; transitive closure is taken."""
        below: List[List[int]] = [[] for _ in range(size)]
        indegree = [0] * size
        above: List[List[int]] = [[] for _ in range(size)]
        for a, b in covers:
            if not (0 <= a < size and 0 <= b < size):
                raise InvalidPosetError(f"relation {a} < {b} refers to an element outside 0..{size - 1}")
            if a == b:
                raise InvalidPosetError(f"relation {a} < {a} is a cycle")
            below[b].append(a)
            above[a].append(b)
            indegree[b] += 1

        # Kahn order from the minimal elements up.
        order = [v for v in range(size) if indegree[v] == 0]
        for v in order:
            for w in above[v]:
                indegree[w] -= 1
                if indegree[w] == 0:
                    order.append(w)
        if len(order) != size:
            raise InvalidPosetError("cover relations contain a cycle")

        down = [0] * size
        for v in order:
            mask = 1 << v
            for u in below[v]:
                mask |= down[u]
            down[v] = mask
        return cls(size, tuple(down))

    @classmethod
    def from_relation_matrix(cls, matrix: Sequence[Sequence[bool]]) -> "Poset":
        """matrix[a][b] is True iff a <= b. Validated for a partial order."""
        size = len(matrix)
        down = [0] * size
        for a in range(size):
            if len(matrix[a]) != size:
                raise InvalidPosetError("relation matrix is not square")
            for b in range(size):
                if matrix[a][b]:
                    down[b] |= 1 << a
        poset = cls(size, tuple(down))
        poset.validate()
        return poset

    def validate(self) -> None:
        for v in range(self.size):
            if not self.down[v] >> v & 1:
                raise InvalidPosetError(f"relation is not reflexive at {v}")
            for u in _bits(self.down[v]):
                if u != v and self.down[u] >> v & 1:
                    raise InvalidPosetError(f"relation is not antisymmetric at ({u}, {v})")
                if self.down[u] & ~self.down[v]:
                    raise InvalidPosetError(f"relation is not transitive below {v}")

    # ---- Queries ----
    def leq(self, a: int, b: int) -> bool:
        return bool(self.down[b] >> a & 1)

    @functools.cached_property
    def up(self) -> Tuple[int, ...]:
        up = [0] * self.size
        for v in range(self.size):
            for u in _bits(self.down[v]):
                up[u] |= 1 << v
        return tuple(up)

    def strict_down(self, v: int) -> int:
        return self.down[v] & ~(1 << v)

    def strict_up(self, v: int) -> int:
        return self.up[v] & ~(1 << v)

    @functools.cached_property
    def covers(self) -> Tuple[Tuple[int, int], ...]:
        """Covering pairs (a, b) with a < b and nothing strictly between."""
        pairs = []
        for b in range(self.size):
            below = self.strict_down(b)
            indirect = 0
            for u in _bits(below):
                indirect |= self.strict_down(u)
            for a in _bits(below & ~indirect):
                pairs.append((a, b))
        return tuple(sorted(pairs))

    def relation_matrix(self) -> Tuple[Tuple[bool, ...], ...]:
        return tuple(tuple(self.leq(a, b) for b in range(self.size)) for a in range(self.size))

    def minimal_elements(self) -> List[int]:
        return [v for v in range(self.size) if self.strict_down(v) == 0]

    def maximal_elements(self) -> List[int]:
        return [v for v in range(self.size) if self.strict_up(v) == 0]

    def dual(self) -> "Poset":
        return Poset(self.size, self.up)


def chain(k: int) -> Poset:
    return Poset.from_covers(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> Poset:
    return Poset.from_covers(k, [])


def poset_from_example21(ell: int) -> Poset:
    """0 <= z <= x_i <= 1: element 0 is z, elements 1..ell are the x_i."""
    if ell < 1:
        raise InvalidPosetError(f"ell must be positive, got {ell}")
    return Poset.from_covers(ell + 1, [(0, i) for i in range(1, ell + 1)])


# =============================================================================
# Ideal lattice
# =============================================================================

class IdealLattice:
    """All order ideals of a poset, sorted by (size, bitset).

    Index 0 is the empty ideal and the last index is the full poset.
    """

    def __init__(self, poset: Poset):
        self.poset = poset
        seen = {0}
        frontier = [0]
        while frontier:
            nxt = []
            for ideal in frontier:
                for v in range(poset.size):
                    if ideal >> v & 1 or poset.strict_down(v) & ~ideal:
                        continue
                    grown = ideal | (1 << v)
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
            frontier = nxt
        self.ideals: Tuple[int, ...] = tuple(sorted(seen, key=lambda m: (bin(m).count("1"), m)))
        self.index: Dict[int, int] = {m: i for i, m in enumerate(self.ideals)}
        self.sizes: Tuple[int, ...] = tuple(bin(m).count("1") for m in self.ideals)
        logger.debug(f"ideal lattice of a {poset.size}-element poset has {len(self.ideals)} ideals")

    def __len__(self) -> int:
        return len(self.ideals)

    @property
    def full(self) -> int:
        return len(self.ideals) - 1

    @functools.cached_property
    def removals(self) -> Tuple[Tuple[array, array], ...]:
        """Per element, bottom elements first: index pairs (i, j) with ideal j
        equal to ideal i minus that element, which is maximal in ideal i."""
        poset = self.poset
        order = sorted(range(poset.size), key=lambda v: bin(poset.strict_down(v)).count("1"))
        out = []
        for v in order:
            bit, above = 1 << v, poset.strict_up(v)
            src, dst = array("q"), array("q")
            for i, ideal in enumerate(self.ideals):
                if ideal & bit and not ideal & above:
                    src.append(i)
                    dst.append(self.index[ideal ^ bit])
            out.append((src, dst))
        return tuple(out)

    def sum_over_subideals(self, values: Sequence[int]) -> List[int]:
        """out[i] = sum of values[j] over every ideal j contained in ideal i."""
        out = list(values)
        for src, dst in self.removals:
            for i, j in zip(src, dst):
                out[i] += out[j]
        return out

    def sum_over_maximal_removals(self, values: Sequence[int]) -> List[int]:
        """out[i] = sum of values[j] over ideals j = ideal i minus a set of its maximal elements."""
        out = list(values)
        for src, dst in reversed(self.removals):
            for i, j in zip(src, dst):
                out[i] += out[j]
        return out


@functools.lru_cache(maxsize=512)
def ideal_lattice(poset: Poset) -> IdealLattice:
    return IdealLattice(poset)


# =============================================================================
# Counting on the ideal lattice
# =============================================================================

def order_polynomial_values(p: Poset, t_max: int) -> List[int]:
    """Order-preserving map counts P -> {0..t} for t = 0..t_max."""
    lattice = ideal_lattice(p)
    chains = [1] * len(lattice)
    values = [1]
    for _ in range(t_max):
        chains = lattice.sum_over_subideals(chains)
        values.append(chains[lattice.full])
    return values


def order_polynomial_value(p: Poset, t: int) -> int:
    if t < 0:
        raise ValueError(f"t must be non-negative, got {t}")
    return order_polynomial_values(p, t)[t]


def ehrhart_order_polytope(p: Poset) -> UniPolynomial:
    """Ehrhart polynomial of O(P), interpolated at t = 0..|P|."""
    values = order_polynomial_values(p, p.size)
    return interpolate_polynomial(list(enumerate(values)))


def strict_order_polynomial_value(p: Poset, t: int) -> int:
    """Strictly order-preserving map counts P -> {1..t}.

    Level sets form a chain of ideals whose successive differences are
    antichains, i.e. sets of maximal elements of the larger ideal.
    """
    lattice = ideal_lattice(p)
    chains = [0] * len(lattice)
    chains[0] = 1
    for _ in range(t):
        chains = lattice.sum_over_maximal_removals(chains)
    return chains[lattice.full]


def linear_extensions(p: Poset) -> int:
    """Paths from the empty ideal to the full ideal, one element at a time."""
    lattice = ideal_lattice(p)
    counts = [0] * len(lattice)
    counts[0] = 1
    for i in range(1, len(lattice)):
        ideal = lattice.ideals[i]
        total = 0
        for v in _bits(ideal):
            if p.strict_up(v) & ideal == 0:
                total += counts[lattice.index[ideal & ~(1 << v)]]
        counts[i] = total
    return counts[lattice.full]


def slice_count(p: Poset, k: int) -> int:
    """Order-preserving maps P -> {0..k} whose values sum to k.

    The map is read off a multichain D_0 <= ... <= D_{k-1} of ideals with
    f(v) = #{s : v not in D_s}, so the sum is sum_s (|P| - |D_s|). Ideals
    missing more than k elements can never take part.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return 1
    n = p.size
    lattice = ideal_lattice(p)
    gaps = [n - size for size in lattice.sizes]
    # columns[s][i]: multichains ending at ideal i whose gaps so far sum to s
    columns = [[int(gap == s) for gap in gaps] for s in range(k + 1)]
    for _ in range(k - 1):
        summed = [lattice.sum_over_subideals(column) for column in columns]
        columns = [
            [summed[s - gap][i] if gap <= s else 0 for i, gap in enumerate(gaps)]
            for s in range(k + 1)
        ]
    return sum(columns[k])


# =============================================================================
# Hooks: Young shapes and rooted trees
# =============================================================================

@dataclass(frozen=True)
class HookMultiset:
    values: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(sorted(self.values, reverse=True)))

    def __len__(self) -> int:
        return len(self.values)

    def product(self) -> int:
        out = 1
        for h in self.values:
            out *= h
        return out


@dataclass(frozen=True)
class YoungShape:
    parts: Tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise InvalidPosetError(f"shape parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPosetError(f"shape parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> "YoungShape":
        text = text.strip()
        try:
            return cls(tuple(int(x) for x in text.split(",")) if text else ())
        except ValueError as e:
            if isinstance(e, InvalidPosetError):
                raise
            raise InvalidPosetError(f"malformed shape {text!r}") from e

    @property
    def size(self) -> int:
        return sum(self.parts)

    @property
    def conjugate(self) -> Tuple[int, ...]:
        if not self.parts:
            return ()
        return tuple(sum(1 for x in self.parts if x > j) for j in range(self.parts[0]))

    def cells(self) -> List[Tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]


def poset_from_shape(shape: YoungShape) -> Poset:
    """Cell (i, j) lies below (i+1, j) and (i, j+1); the corner cell is the minimum."""
    cells = shape.cells()
    index = {cell: k for k, cell in enumerate(cells)}
    covers = []
    for (i, j), k in index.items():
        for nxt in ((i + 1, j), (i, j + 1)):
            if nxt in index:
                covers.append((k, index[nxt]))
    return Poset.from_covers(len(cells), covers)


def hook_multiset_shape(shape: YoungShape) -> HookMultiset:
    conj = shape.conjugate
    return HookMultiset(tuple(
        shape.parts[i] + conj[j] - i - j - 1 for i, j in shape.cells()
    ))


def _exact_hook_quotient(n: int, hooks: HookMultiset, what: str) -> int:
    quotient, remainder = divmod(factorial(n), hooks.product())
    if remainder:
        raise InconsistentComputationError(f"hook product does not divide {n}! for {what}")
    return quotient


def hook_formula_count(shape: YoungShape) -> int:
    """n! / prod(hooks): number of standard Young tableaux of the shape."""
    return _exact_hook_quotient(shape.size, hook_multiset_shape(shape), f"shape {shape.parts}")


@dataclass(frozen=True)
class RootedTree:
    """Rooted tree on {0..size-1}; parents[v] is None exactly for the root."""

    size: int
    parents: Tuple[Optional[int], ...]

    def __post_init__(self):
        if len(self.parents) != self.size:
            raise InvalidPosetError("parent map length differs from node count")
        roots = [v for v, p in enumerate(self.parents) if p is None]
        if self.size and len(roots) != 1:
            raise InvalidPosetError(f"a rooted tree needs exactly one root, found {len(roots)}")
        for v, p in enumerate(self.parents):
            if p is not None and not 0 <= p < self.size:
                raise InvalidPosetError(f"node {v} has parent {p} outside the tree")
        for v in range(self.size):
            steps, node = 0, v
            while self.parents[node] is not None:
                node = self.parents[node]
                steps += 1
                if steps > self.size:
                    raise InvalidPosetError(f"parent map has a cycle through node {v}")

    @property
    def root(self) -> int:
        return self.parents.index(None)

    def children(self) -> List[List[int]]:
        out: List[List[int]] = [[] for _ in range(self.size)]
        for v, p in enumerate(self.parents):
            if p is not None:
                out[p].append(v)
        return out

    def subtree_sizes(self) -> Tuple[int, ...]:
        sizes = [1] * self.size
        depth = [0] * self.size
        for v in range(self.size):
            node = v
            while self.parents[node] is not None:
                node = self.parents[node]
                depth[v] += 1
        for v in sorted(range(self.size), key=lambda u: -depth[u]):
            p = self.parents[v]
            if p is not None:
                sizes[p] += sizes[v]
        return tuple(sizes)

    def to_poset(self) -> Poset:
        """Root is the minimum: each parent lies below its children."""
        return Poset.from_covers(
            self.size, [(p, v) for v, p in enumerate(self.parents) if p is not None]
        )


def hook_multiset_tree(t: RootedTree) -> HookMultiset:
    return HookMultiset(t.subtree_sizes())


def tree_hook_count(t: RootedTree) -> int:
    """n! / prod(subtree sizes): linear extensions of a rooted tree."""
    return _exact_hook_quotient(t.size, hook_multiset_tree(t), "tree")


def hook_slice_counts(hooks: HookMultiset, k_max: int) -> List[int]:
    """Coefficients of prod_h 1/(1 - q^h) up to q^k_max."""
    coeffs = [1] + [0] * k_max
    for h in hooks.values:
        for k in range(h, k_max + 1):
            coeffs[k] += coeffs[k - h]
    return coeffs


# =============================================================================
# Text formats
# =============================================================================

def _content_lines(text: str) -> List[str]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    return lines


def parse_poset_text(text: str) -> Poset:
    lines = _content_lines(text)
    if not lines:
        raise InvalidPosetError("poset text is empty")
    try:
        size = int(lines[0])
        covers = []
        for line in lines[1:]:
            a, b = (int(x) for x in line.split("<"))
            covers.append((a - 1, b - 1))
    except ValueError as e:
        raise InvalidPosetError(f"malformed poset text: {e}") from e
    return Poset.from_covers(size, covers)


def parse_tree_text(text: str) -> RootedTree:
    lines = _content_lines(text)
    if not lines:
        raise InvalidPosetError("tree text is empty")
    try:
        size = int(lines[0])
        parents: List[Optional[int]] = [None] * size
        for line in lines[1:]:
            child, parent = (int(x) for x in line.split())
            if not 1 <= child <= size:
                raise InvalidPosetError(f"node {child} outside 1..{size}")
            if parents[child - 1] is not None:
                raise InvalidPosetError(f"node {child} has two parents")
            parents[child - 1] = parent - 1
    except ValueError as e:
        if isinstance(e, InvalidPosetError):
            raise
        raise InvalidPosetError(f"malformed tree text: {e}") from e
    return RootedTree(size, tuple(parents))


def load_poset(path: Path) -> Poset:
    return parse_poset_text(Path(path).read_text(encoding="utf-8"))


def load_tree(path: Path) -> RootedTree:
    return parse_tree_text(Path(path).read_text(encoding="utf-8"))
