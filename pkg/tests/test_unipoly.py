import random
from math import prod

import pytest

from uplab.errors import RationalField, ZeroPolynomial
from uplab.fields import FieldSpec, make_extension
from uplab.unipoly import (
    UniPoly,
    factor_univariate,
    is_irreducible,
    poly_gcd,
    poly_xgcd,
    roots_in_extension,
    roots_in_field,
    squarefree_decomposition,
)


def random_poly(spec, degree, rng):
    return UniPoly(spec, [spec.random_element(rng) for _ in range(degree + 1)])


def test_divmod_identity(rng, F101):
    for _ in range(50):
        f = random_poly(F101, rng.randrange(0, 9), rng)
        g = random_poly(F101, rng.randrange(0, 5), rng)
        if g.is_zero:
            continue
        q, r = divmod(f, g)
        assert q * g + r == f
        assert r.is_zero or r.degree < g.degree


def test_shift_matches_evaluation(rng, F101):
    for _ in range(30):
        f = random_poly(F101, 6, rng)
        c = F101.random_element(rng)
        shifted = f.shift(c)
        for _ in range(5):
            x = F101.random_element(rng)
            assert shifted.evaluate(x) == f.evaluate(x + c)


def test_derivative_product_rule(rng, F5):
    for _ in range(30):
        f = random_poly(F5, 4, rng)
        g = random_poly(F5, 4, rng)
        lhs = (f * g).derivative()
        rhs = f.derivative() * g + f * g.derivative()
        assert lhs == rhs


def test_xgcd_bezout(rng, F101):
    for _ in range(30):
        f = random_poly(F101, 6, rng)
        g = random_poly(F101, 4, rng)
        if f.is_zero or g.is_zero:
            continue
        d, s, t = poly_xgcd(f, g)
        assert s * f + t * g == d
        assert (f % d).is_zero and (g % d).is_zero


def test_squarefree_decomposition_multiplies_back(rng, F3):
    for trial in range(20):
        f = random_poly(F3, rng.randrange(1, 10), rng)
        if f.degree < 1:
            continue
        parts = squarefree_decomposition(f)
        back = UniPoly.constant(f.leading)
        for g, mult in parts:
            for _ in range(mult):
                back = back * g
        assert back == f
        for i, (g, _) in enumerate(parts):
            for h, _ in parts[i + 1 :]:
                assert poly_gcd(g, h).degree == 0


def test_squarefree_handles_pth_powers(F2):
    # (t + 1)^4 has vanishing derivative twice over
    t = UniPoly.x(F2)
    f = (t + UniPoly.one(F2)) * (t + UniPoly.one(F2))
    f = f * f
    parts = squarefree_decomposition(f)
    assert parts == [(t + UniPoly.one(F2), 4)]


def test_factor_t4_minus_t_over_f4(F4):
    # roots of the fixed-field condition are exactly the base field
    t = UniPoly.x(F4)
    f = t * t * t * t - t
    factors = factor_univariate(f)
    assert len(factors) == 4
    assert all(g.degree == 1 and mult == 1 for g, mult in factors)
    roots = {-g.coefficient(0) for g, _ in factors}
    assert roots == set(F4.elements())


def test_factor_frobenius_square_over_f2(F2):
    f = UniPoly.from_ints(F2, [1, 0, 1])  # t^2 + 1
    factors = factor_univariate(f)
    assert len(factors) == 1
    g, mult = factors[0]
    assert mult == 2
    assert g == UniPoly.from_ints(F2, [1, 1])


def test_factor_random_degree8_over_f3_multiplies_back(F3):
    rng = random.Random(77)
    for trial in range(15):
        f = random_poly(F3, 8, rng)
        if f.degree < 1:
            continue
        back = UniPoly.constant(f.leading)
        for g, mult in factor_univariate(f, seed=trial):
            assert is_irreducible(g)
            for _ in range(mult):
                back = back * g
        assert back == f


def test_factor_output_independent_of_seed(F5):
    rng = random.Random(3)
    f = random_poly(F5, 9, rng)
    assert factor_univariate(f, seed=1) == factor_univariate(f, seed=9999)


def test_factor_rejects_zero_and_rationals(F5):
    with pytest.raises(ZeroPolynomial):
        factor_univariate(UniPoly.zero(F5))
    QQ = FieldSpec.rationals()
    with pytest.raises(RationalField):
        factor_univariate(UniPoly.from_ints(QQ, [1, 2, 1]))


def _trial_division_irreducible(f):
    """Independent irreducibility oracle: divide by every smaller monic."""
    spec = f.spec
    if f.degree < 1:
        return False
    for d in range(1, f.degree // 2 + 1):
        # enumerate monic polynomials of degree d
        def candidates(idx, coeffs):
            if idx == d:
                yield UniPoly(spec, coeffs + [spec.one])
                return
            for c in spec.elements():
                yield from candidates(idx + 1, coeffs + [c])

        for g in candidates(0, []):
            if (f % g).is_zero:
                return False
    return True


def _moebius(n):
    out, d, m = 1, 2, n
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            out = -out
        d += 1
    if m > 1:
        out = -out
    return out


@pytest.mark.parametrize("q_spec", [(2, 1), (3, 1), (2, 2)])
@pytest.mark.parametrize("degree", [1, 2, 3, 4])
def test_irreducible_count_matches_necklace_formula(q_spec, degree):
    spec = make_extension(*q_spec)
    q = spec.order
    count = 0

    def enumerate_monic(idx, coeffs):
        nonlocal count
        if idx == degree:
            f = UniPoly(spec, coeffs + [spec.one])
            trial = _trial_division_irreducible(f)
            assert trial == is_irreducible(f)
            if trial:
                count += 1
            return
        for c in spec.elements():
            enumerate_monic(idx + 1, coeffs + [c])

    enumerate_monic(0, [])
    divisors = [e for e in range(1, degree + 1) if degree % e == 0]
    expected = sum(_moebius(e) * q ** (degree // e) for e in divisors) // degree
    assert count == expected


def test_roots_of_t2_minus_1_over_f5(F5):
    f = UniPoly.from_ints(F5, [-1, 0, 1])
    roots = roots_in_extension(f, 1)
    assert [(r.coeffs[0], m, d) for r, m, d in roots] == [(1, 1, 1), (4, 1, 1)]


def test_roots_of_irreducible_quadratic_need_the_extension(F5):
    f = UniPoly.from_ints(F5, [2, 0, 1])  # t^2 + 2 has no root mod 5
    assert is_irreducible(f)
    assert roots_in_extension(f, 1) == []
    roots = roots_in_extension(f, 2)
    assert len(roots) == 2
    F25 = make_extension(5, 2)
    lifted = f.map_spec(F25)
    for r, mult, d in roots:
        assert d == 2 and mult == 1 and r.spec == F25
        assert lifted.evaluate(r).is_zero


def test_roots_of_field_equation_over_f4(F4):
    # t^16 - t over GF(4): the sixteen elements of GF(16)
    F16 = make_extension(2, 4)
    coeffs = [F4.zero, -F4.one] + [F4.zero] * 14 + [F4.one]
    f = UniPoly(F4, coeffs)
    roots = roots_in_extension(f, 2)
    assert len(roots) == 16
    lifted = f.map_spec(F16)
    by_exhaustion = [x for x in F16.elements() if lifted.evaluate(x).is_zero]
    assert len(by_exhaustion) == 16
    in_smallest = {r for r, _, d in roots if d == 1}
    assert len(in_smallest) == 4  # the copy of GF(4) itself


def test_roots_in_field_collects_multiplicity(F3):
    t = UniPoly.x(F3)
    f = (t - UniPoly.one(F3)) * (t - UniPoly.one(F3)) * t
    roots = dict(
        (r.coeffs[0], m) for r, m in roots_in_field(f, F3)
    )
    assert roots == {0: 1, 1: 2}
