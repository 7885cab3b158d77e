import itertools
import random
from math import comb

import pytest

from uplab.errors import EmptyConfiguration, InconsistentInput
from uplab.fields import make_extension
from uplab.geometry import PointConfiguration, ProjPoint
from uplab.hilbert import (
    CASE_ALL_IRREDUCIBLE,
    CASE_GENERIC_IRREDUCIBLE,
    classify_minimal_system,
    h0_ideal,
    h1_ideal,
    hilbert_value,
    is_decreasing_type,
    point_count_split,
    profile,
    profile_from_values,
    ternary_monomials,
    truncation_predict,
)


def points_of(spec, coord_rows, label=""):
    return PointConfiguration(
        spec, [ProjPoint(spec, row) for row in coord_rows], label=label
    )


def random_points(spec, n, rng):
    pts = []
    while len(pts) < n:
        coords = [spec.random_element(rng) for _ in range(3)]
        if all(c.is_zero for c in coords):
            continue
        pt = ProjPoint(spec, coords)
        if pt not in pts:
            pts.append(pt)
    return PointConfiguration(spec, pts)


def values_from_deltas(deltas):
    acc, out = 0, []
    for d in deltas:
        acc += d
        out.append(acc)
    return out


def test_monomial_order_is_graded_lex():
    assert ternary_monomials(2) == (
        (2, 0, 0),
        (1, 1, 0),
        (1, 0, 1),
        (0, 2, 0),
        (0, 1, 1),
        (0, 0, 2),
    )


def test_single_point_has_constant_hilbert_function(F101):
    config = points_of(F101, [[1, 2, 3]])
    for i in range(5):
        assert hilbert_value(config, i) == 1


def test_three_noncollinear_points_independent_in_degree_one(F101):
    config = points_of(F101, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert hilbert_value(config, 1) == 3


def test_h0_h1_on_empty_configuration(F101):
    empty = PointConfiguration(F101, [])
    for i in range(4):
        assert h0_ideal(empty, i) == comb(i + 2, 2)
        assert h1_ideal(empty, i) == 0


def test_six_general_points_impose_independent_conic_conditions(F101):
    rng = random.Random(2024)
    config = random_points(F101, 6, rng)
    assert h0_ideal(config, 2) == 0
    assert h1_ideal(config, 2) == 0


def test_profile_of_four_points_no_three_collinear(F101):
    config = points_of(F101, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    prof = profile(config)
    assert prof.deltas == (1, 2, 1)
    assert (prof.a1, prof.a2, prof.t) == (2, 2, 2)
    assert prof.warnings == ()


def test_profile_of_collinear_points(F101):
    n = 5
    config = points_of(F101, [[1, 0, a] for a in range(n)])
    prof = profile(config)
    assert prof.deltas == (1,) * n
    assert prof.a1 == 1
    assert prof.t == n - 1
    assert prof.a2 == n  # tail never drops below a1 before dying
    assert is_decreasing_type(prof)


def test_profile_rejects_empty(F101):
    with pytest.raises(EmptyConfiguration):
        profile(PointConfiguration(F101, []))


def test_truncation_predictions(F101):
    config = points_of(F101, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    prof = profile(config)
    n = len(config)
    for i in range(4):
        assert truncation_predict(prof, n, i) == prof.value_at(i)
        assert truncation_predict(prof, 1, i) == 1


def test_truncation_on_five_subsets_of_six_general_points(F101):
    rng = random.Random(77)
    config = random_points(F101, 6, rng)
    prof = profile(config)
    assert prof.value_at(2) == 6
    for subset in itertools.combinations(range(6), 5):
        sub = config.subset(subset)
        assert hilbert_value(sub, 2) == 5 == truncation_predict(prof, 5, 2)


@pytest.mark.parametrize(
    "deltas,expected",
    [
        ((1, 2, 3, 4, 3, 2, 1), True),
        ((1, 2, 2, 1, 1), False),
        ((1, 1), True),
        ((1, 2, 1, 1, 1), False),
        ((1, 2), True),
    ],
)
def test_decreasing_type_on_difference_sequences(deltas, expected):
    prof = profile_from_values(values_from_deltas(deltas))
    assert is_decreasing_type(prof) is expected


def test_point_count_split_examples():
    assert point_count_split(6) == (2, 0)
    assert point_count_split(16) == (4, 1)
    assert point_count_split(1) == (0, 0)


def test_classifier_examples():
    assert classify_minimal_system(6, 2).case == CASE_ALL_IRREDUCIBLE
    v = classify_minimal_system(6, 3)
    assert v.case == CASE_GENERIC_IRREDUCIBLE
    assert (v.d, v.h) == (2, 0)
    assert v.requires_upp
    assert classify_minimal_system(16, 4).case == CASE_ALL_IRREDUCIBLE


def test_classifier_rejects_impossible_minimal_degree():
    with pytest.raises(InconsistentInput):
        classify_minimal_system(6, 4)
    with pytest.raises(InconsistentInput):
        classify_minimal_system(5, 0)


def test_split_is_unique_over_the_first_hundred_counts():
    for n in range(1, 101):
        d, h = point_count_split(n)
        assert n == comb(d + 2, 2) + h
        assert 0 <= h <= d + 1
        # uniqueness: neighboring d values cannot also satisfy the bounds
        for d2 in (d - 1, d + 1):
            if d2 < 0:
                continue
            h2 = n - comb(d2 + 2, 2)
            assert not (0 <= h2 <= d2 + 1)


def test_hilbert_invariant_under_projective_change(F101):
    rng = random.Random(31)
    config = random_points(F101, 7, rng)
    base = [hilbert_value(config, i) for i in range(5)]
    for _ in range(5):
        while True:
            matrix = [
                [F101.random_element(rng) for _ in range(3)] for _ in range(3)
            ]
            a, b, c = matrix
            det = (
                a[0] * (b[1] * c[2] - b[2] * c[1])
                - a[1] * (b[0] * c[2] - b[2] * c[0])
                + a[2] * (b[0] * c[1] - b[1] * c[0])
            )
            if not det.is_zero:
                break
        moved = PointConfiguration(
            F101,
            [
                ProjPoint(
                    F101,
                    [
                        sum((row[k] * pt.coords[k] for k in range(3)), F101.zero)
                        for row in matrix
                    ],
                )
                for pt in config
            ],
        )
        assert [hilbert_value(moved, i) for i in range(5)] == base


def test_hilbert_values_monotone_and_stabilize(F101):
    rng = random.Random(17)
    config = random_points(F101, 6, rng)
    prev = 0
    for i in range(6):
        v = hilbert_value(config, i)
        assert prev <= v <= 6
        prev = v
    assert hilbert_value(config, 5) == 6


def test_adding_a_point_increments_by_zero_or_one(F101):
    rng = random.Random(53)
    config = random_points(F101, 7, rng)
    smaller = config.subset(range(6))
    for i in range(6):
        diff = hilbert_value(config, i) - hilbert_value(smaller, i)
        assert diff in (0, 1)


@pytest.mark.parametrize("p", [2, 3])
def test_vanishing_form_count_matches_h0(p):
    # exhaustive count of degree-i forms through X, up to scalar
    spec = make_extension(p, 1)
    rng = random.Random(4 + p)
    config = random_points(spec, 3, rng)
    for i in (1, 2, 3):
        monos = ternary_monomials(i)
        vanishing = 0
        for coeffs in itertools.product(range(p), repeat=len(monos)):
            if not any(coeffs):
                continue
            if next(c for c in coeffs if c) != 1:
                continue  # scalar-normalized representatives only
            values = []
            for pt in config:
                x, y, z = pt.coords
                acc = spec.zero
                for (a, b, c), coef in zip(monos, coeffs):
                    if coef:
                        acc = acc + spec.element(coef) * x**a * y**b * z**c
                values.append(acc)
            if all(v.is_zero for v in values):
                vanishing += 1
        h0 = h0_ideal(config, i)
        assert vanishing == (p**h0 - 1) // (p - 1)
