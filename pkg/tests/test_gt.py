import itertools

import pytest

from ehrlab.errors import BoundaryError, FixtureError, NonPolynomialFitError
from ehrlab.exactcore import power_sum_polynomial
from ehrlab.gt import (
    COUNTEREXAMPLE_BOLD_ROW,
    GTPattern,
    Partition,
    RowSums,
    count_gt_with_rowsums,
    ehrhart_gt,
    enumerate_gt,
    enumerate_gt_with_rowsums,
    face_example_count,
    face_spec,
    interlacing_violations,
    load_counterexample_fixtures,
    parse_pattern_text,
    skew_schur_ones,
    stretched_kostka,
    validate_gt,
    verify_counterexample_36,
    weyl_dimension,
)


def partitions_in_box(width, largest):
    for parts in itertools.product(range(largest + 1), repeat=width):
        if list(parts) == sorted(parts, reverse=True):
            yield parts


@pytest.fixture
def patterns(fixtures_dir):
    return load_counterexample_fixtures(fixtures_dir / "gt_counterexample")


# ---- Types and validity ----

def test_partition_validation():
    assert Partition.parse("4,4,3,0").size == 11
    assert Partition((3, 1, 0)).length == 2
    with pytest.raises(BoundaryError):
        Partition((1, 2))
    with pytest.raises(BoundaryError):
        Partition.parse("2,a")
    with pytest.raises(BoundaryError):
        GTPattern(((1, 0), (1,)))


def test_validate_small_pattern():
    good = GTPattern(((0, 0), (1, 0), (2, 0)))
    assert validate_gt(good, (2, 0), (0, 0))
    bad = GTPattern(((0, 0), (1, 1), (2, 0)))
    assert not validate_gt(bad, (2, 0), (0, 0))
    assert interlacing_violations(bad) == [
        "rows 1/2 column 1: lower 0 < upper-right 1",
        "rows 2/3 column 2: upper 0 < lower 1",
    ]
    with pytest.raises(BoundaryError):
        validate_gt(good, (2, 0, 0), (0, 0, 0))


def test_enumerate_small_shapes():
    assert enumerate_gt((2, 0), (0, 0), 3) == 3
    assert enumerate_gt((2, 1, 0), (0, 0, 0), 4) == 8
    assert enumerate_gt((1, 1), (0, 0), 2) == 0
    with pytest.raises(BoundaryError):
        enumerate_gt((1, 0), (2, 0), 3)
    with pytest.raises(BoundaryError):
        enumerate_gt((1, 0), (0, 0), 1)


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_three_counts_agree(m):
    for lam in partitions_in_box(3, 4):
        count = enumerate_gt(lam, (0, 0, 0), m + 1)
        assert count == skew_schur_ones(lam, (0, 0, 0), m)
        if Partition(lam).length <= m:
            assert count == weyl_dimension(lam, m)
        else:
            assert count == 0


@pytest.mark.parametrize("m", [1, 2, 3])
def test_skew_counts_agree(m):
    for lam in partitions_in_box(3, 3):
        for mu in partitions_in_box(3, 3):
            if Partition(lam).contains(Partition(mu)):
                assert enumerate_gt(lam, mu, m + 1) == skew_schur_ones(lam, mu, m)


def test_weyl_dimension_needs_enough_variables():
    assert weyl_dimension((2, 1, 0), 3) == 8
    with pytest.raises(BoundaryError):
        weyl_dimension((1, 1, 1), 2)


# ---- Ehrhart polynomials ----

def test_ehrhart_of_the_adjoint_polytope():
    poly = ehrhart_gt((2, 1, 0), (0, 0, 0), 3)
    assert poly.degree == 3
    assert poly(1) == 8
    assert all(poly(n) == (n + 1) ** 3 for n in range(6))


@pytest.mark.parametrize("lam, mu, m", [
    ((2, 1), (1, 0), 2),
    ((3, 1, 0), (1, 0, 0), 3),
    ((2, 2, 1), (0, 0, 0), 3),
])
def test_ehrhart_gt_matches_enumeration(lam, mu, m):
    poly = ehrhart_gt(lam, mu, m)
    for n in range(4):
        scaled_lam = Partition(lam).scaled(n)
        scaled_mu = Partition(mu).scaled(n)
        assert poly(n) == enumerate_gt(scaled_lam, scaled_mu, m + 1)
    assert poly(0) == 1


# ---- Row sums ----

def test_single_pattern_with_row_sums():
    found = enumerate_gt_with_rowsums((2, 0), (0, 0), RowSums((0, 1, 2)))
    assert found == [GTPattern(((0, 0), (1, 0), (2, 0)))]


def test_kostka_number():
    assert count_gt_with_rowsums((2, 1, 0), (0, 0, 0), RowSums((0, 1, 2, 3))) == 2
    assert len(enumerate_gt_with_rowsums((2, 1, 0), (0, 0, 0), RowSums((0, 1, 2, 3)))) == 2


def test_row_sum_boundaries_are_checked():
    with pytest.raises(BoundaryError):
        count_gt_with_rowsums((2, 0), (0, 0), RowSums((1, 1, 2)))
    with pytest.raises(BoundaryError):
        count_gt_with_rowsums((2, 0), (0, 0), RowSums((2,)))


@pytest.mark.parametrize("lam, w", [
    ((2, 1, 0), (0, 1, 2, 3)),
    ((3, 1, 0), (0, 2, 3, 4)),
    ((2, 2, 0), (0, 1, 3, 4)),
])
def test_enumerated_patterns_carry_their_row_sums(lam, w):
    mu = (0,) * len(lam)
    found = enumerate_gt_with_rowsums(lam, mu, RowSums(w))
    assert len(found) == count_gt_with_rowsums(lam, mu, RowSums(w))
    for pattern in found:
        assert validate_gt(pattern, lam, mu)
        assert pattern.row_sums() == RowSums(w)


def test_stretched_kostka():
    poly = stretched_kostka((2, 1, 0), (0, 0, 0), RowSums((0, 1, 2, 3)))
    assert poly.to_json() == ["1/1", "1/1"]


def test_stretched_kostka_rejects_short_samples():
    with pytest.raises(NonPolynomialFitError) as info:
        stretched_kostka((2, 1, 0), (0, 0, 0), RowSums((0, 1, 2, 3)), samples=0)
    assert info.value.expected == 2
    assert info.value.predicted == "1"
    assert "insufficient samples" in str(info.value)


# ---- Face family ----

def test_face_spec_shape():
    spec = face_spec(2)
    assert spec.width == 5
    assert spec.top_row == Partition((1, 1, 0, 0, 0))
    assert spec.free_regions == ("z", "x1", "x2")
    assert face_spec(1).width == 4
    with pytest.raises(ValueError):
        face_spec(0)


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_face_counts_are_power_sums(ell):
    poly = power_sum_polynomial(ell)
    for n in range(4):
        assert face_example_count(ell, n) == poly(n)


# ---- Counterexample ----

def test_counterexample_verifies(patterns):
    report = verify_counterexample_36(patterns)
    assert report.passed
    assert [c.passed for c in report.checks] == [True, True, True]
    assert any("(318 candidates examined)" in line for line in report.checks[2].evidence)


def test_fixture_shapes(patterns):
    for pattern in patterns.values():
        assert (pattern.row_count, pattern.width) == (19, 9)
    assert patterns["G"].rows[12] == COUNTEREXAMPLE_BOLD_ROW


def test_perturbed_pattern_breaks_the_half_sum(patterns):
    g = patterns["G"]
    row = list(g.rows[3])
    row[1] += 1
    tampered = dict(patterns, G=g.with_row(3, row))
    report = verify_counterexample_36(tampered)
    assert not report.passed
    assert not report.checks[1].passed
    assert any("row 4 column 2" in line for line in report.checks[1].evidence)


def test_splittable_row_fails_the_row_check(patterns):
    splittable = (6, 6, 6, 6, 4, 4, 2, 2, 0)
    tampered = dict(patterns, G=patterns["G"].with_row(12, splittable))
    report = verify_counterexample_36(tampered, bold_row=splittable)
    assert not report.passed
    assert not report.checks[2].passed
    assert any(line.startswith("splits as") for line in report.checks[2].evidence)


def test_absent_row_fails_the_row_check(patterns):
    report = verify_counterexample_36(patterns, bold_row=(9, 9, 0, 0, 0, 0, 0, 0, 0))
    assert not report.checks[2].passed


def test_missing_fixture_is_an_error(patterns):
    partial = {name: p for name, p in patterns.items() if name != "G3"}
    with pytest.raises(FixtureError):
        verify_counterexample_36(partial)


def test_pattern_text_errors():
    assert parse_pattern_text("# c\n2 2\n0 0\n1 0\n") == GTPattern(((0, 0), (1, 0)))
    with pytest.raises(FixtureError):
        parse_pattern_text("")
    with pytest.raises(FixtureError):
        parse_pattern_text("2 2\n1 0\n")
    with pytest.raises(FixtureError):
        parse_pattern_text("1 2\n1 0 0\n")
    with pytest.raises(FixtureError):
        parse_pattern_text("1 x\n1 0\n")


def test_missing_fixture_directory(tmp_path):
    with pytest.raises(FixtureError):
        load_counterexample_fixtures(tmp_path)
