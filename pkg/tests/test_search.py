import pytest
from hypothesis import given, settings, strategies as st

from ehrlab.errors import EnumerationLimitError, InvalidPosetError
from ehrlab.poset import Poset, YoungShape, chain, poset_from_shape
from ehrlab.search import (
    canonical_form,
    enumerate_posets,
    is_isomorphic,
    scan_idp_partition_polytopes,
    scan_negative_coefficients,
)


@st.composite
def poset_strategy(draw, max_n=5):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Poset.from_covers(n, chosen)


def relabel(p, perm):
    matrix = [[False] * p.size for _ in range(p.size)]
    for a in range(p.size):
        for b in range(p.size):
            matrix[perm[a]][perm[b]] = p.leq(a, b)
    return Poset.from_relation_matrix(matrix)


def labeled_posets(n):
    """Every partial order on {0..n-1}, by trying all strict relations."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    for mask in range(1 << len(pairs)):
        matrix = [[a == b for b in range(n)] for a in range(n)]
        for i, (a, b) in enumerate(pairs):
            if mask >> i & 1:
                matrix[a][b] = True
        try:
            yield Poset.from_relation_matrix(matrix)
        except InvalidPosetError:
            continue


# ---- Enumeration ----

@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 16), (5, 63), (6, 318)])
def test_poset_counts(n, count):
    posets = enumerate_posets(n)
    assert len(posets) == count
    assert len({p.encoding for p in posets}) == count


@pytest.mark.long
def test_poset_count_seven():
    assert len(enumerate_posets(7)) == 2045


@pytest.mark.parametrize("n, labeled, classes", [(3, 19, 5), (4, 219, 16)])
def test_labeled_enumeration_oracle(n, labeled, classes):
    posets = list(labeled_posets(n))
    assert len(posets) == labeled
    canon = {canonical_form(p).encoding for p in posets}
    assert len(canon) == classes
    assert canon == {p.encoding for p in enumerate_posets(n)}


def test_enumeration_caps():
    with pytest.raises(EnumerationLimitError):
        enumerate_posets(0)
    with pytest.raises(EnumerationLimitError):
        enumerate_posets(8)


# ---- Canonical forms ----

def test_canonical_form_round_trips():
    p = poset_from_shape(YoungShape((2, 1)))
    canon = canonical_form(p)
    assert is_isomorphic(canon.to_poset(), p)
    assert canonical_form(canon.to_poset()) == canon


@settings(max_examples=100, deadline=None)
@given(poset_strategy(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_labels(p, rnd):
    perm = list(range(p.size))
    rnd.shuffle(perm)
    q = relabel(p, perm)
    assert is_isomorphic(p, q)
    assert canonical_form(p) == canonical_form(q)


@settings(max_examples=100, deadline=None)
@given(poset_strategy(max_n=4), poset_strategy(max_n=4))
def test_canonical_form_decides_isomorphism(p, q):
    assert (canonical_form(p) == canonical_form(q)) == is_isomorphic(p, q)


def test_chain_and_antichain_differ():
    assert not is_isomorphic(chain(3), Poset.from_covers(3, []))
    assert not is_isomorphic(chain(2), chain(3))


# ---- Scans ----

def test_small_poset_scan():
    report = scan_negative_coefficients(4)
    assert report.examined == 1 + 2 + 5 + 16
    assert report.violations == []
    assert report.passed
    assert report.scope == {"kind": "posets", "max_size": "4"}


def test_poset_scan_to_six_has_no_negative_coefficients():
    report = scan_negative_coefficients(6)
    assert report.examined == 1 + 2 + 5 + 16 + 63 + 318
    assert report.passed


@pytest.mark.long
def test_poset_scan_to_seven_has_no_negative_coefficients():
    report = scan_negative_coefficients(7, jobs=2)
    assert report.examined == 2450
    assert report.passed


def test_scans_are_deterministic():
    first = scan_negative_coefficients(5)
    second = scan_negative_coefficients(5, jobs=2)
    assert first.checksum == second.checksum
    assert first.violations == second.violations
    assert first.examined == second.examined


def test_idp_scan():
    report = scan_idp_partition_polytopes(8, 4)
    assert report.examined == 32
    assert report.passed
    assert report.scope == {"kind": "idp", "max_a": "8", "max_b": "4", "dilate": "2"}
    parallel = scan_idp_partition_polytopes(8, 4, jobs=2)
    assert parallel.checksum == report.checksum
    assert parallel.violations == report.violations


def test_scan_caps():
    with pytest.raises(EnumerationLimitError):
        scan_negative_coefficients(8)
    with pytest.raises(EnumerationLimitError):
        scan_idp_partition_polytopes(19, 9)
    with pytest.raises(EnumerationLimitError):
        scan_idp_partition_polytopes(18, 10)


@pytest.mark.long
def test_full_idp_scan_finds_the_known_failure():
    report = scan_idp_partition_polytopes(18, 9, jobs=4)
    assert {v.subject for v in report.violations} == {"P_{18,9}"}
    points = {tuple(int(x) for x in v.values) for v in report.violations}
    assert (6, 6, 6, 6, 4, 4, 2, 1, 1) in points
    assert (6, 6, 5, 5, 5, 4, 2, 2, 1) in points
