import itertools
import random
from fractions import Fraction

import pytest

from uplab.errors import (
    CompositeCharacteristic,
    DegreeZero,
    FieldMismatch,
    NoEmbedding,
    RationalField,
)
from uplab.fields import FieldSpec, embed, frobenius, is_prime, make_extension
from uplab.unipoly import UniPoly


def test_make_extension_prime_field_modulus():
    assert make_extension(2, 1).modulus == (0, 1)


def test_f4_modulus_is_the_unique_irreducible_quadratic():
    # oracle: check all four monic quadratics over GF(2) by root enumeration
    irreducible = []
    for c0, c1 in itertools.product((0, 1), repeat=2):
        has_root = any((x * x + c1 * x + c0) % 2 == 0 for x in (0, 1))
        if not has_root:
            irreducible.append((c0, c1, 1))
    assert irreducible == [(1, 1, 1)]
    assert make_extension(2, 2).modulus == (1, 1, 1)


def test_f25_modulus_has_no_root_in_f5():
    mod = make_extension(5, 2).modulus
    assert len(mod) == 3 and mod[2] == 1
    for x in range(5):
        assert (mod[0] + mod[1] * x + x * x) % 5 != 0


def test_make_extension_rejects_bad_parameters():
    with pytest.raises(CompositeCharacteristic):
        make_extension(6, 2)
    with pytest.raises(DegreeZero):
        make_extension(5, 0)


def test_spec_equality_is_structural():
    a = make_extension(2, 2)
    b = FieldSpec.extension(2, 2, (1, 1, 1))
    assert a == b and hash(a) == hash(b)
    assert a != make_extension(2, 1)
    assert FieldSpec.rationals() == FieldSpec.rationals()
    assert a != FieldSpec.rationals()


def test_custom_modulus_must_be_monic_irreducible():
    with pytest.raises(ValueError):
        FieldSpec.extension(2, 2, (1, 0, 1))  # (t+1)^2
    with pytest.raises(ValueError):
        FieldSpec.extension(2, 2, (1, 1, 0))


def test_is_prime_small_values():
    primes = {2, 3, 5, 7, 11, 101, 65537}
    for n in range(2, 120):
        assert is_prime(n) == all(n % d for d in range(2, n)), n
    assert all(is_prime(p) for p in primes)


@pytest.mark.parametrize(
    "spec_args",
    [(2, 1), (2, 4), (3, 1), (3, 2), (5, 2), (101, 1), None],
)
def test_field_axioms_on_random_samples(spec_args):
    spec = FieldSpec.rationals() if spec_args is None else make_extension(*spec_args)
    rng = random.Random(1234)
    one = spec.one
    for _ in range(1000):
        a = spec.random_element(rng)
        b = spec.random_element(rng)
        c = spec.random_element(rng)
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a - a == spec.zero
        if not a.is_zero:
            assert a * a.inverse() == one


def test_mixing_fields_raises():
    a = make_extension(5, 1).element(2)
    b = make_extension(7, 1).element(2)
    with pytest.raises(FieldMismatch):
        _ = a + b


def test_rational_elements_are_reduced_fractions():
    QQ = FieldSpec.rationals()
    x = QQ.element(Fraction(6, -4))
    assert x.raw == Fraction(-3, 2)
    assert x.raw.denominator > 0


def test_frobenius_fixes_prime_field():
    F2 = make_extension(2, 1)
    for x in F2.elements():
        assert frobenius(x, 1) == x


def test_frobenius_squared_fixed_points_in_f16():
    F16 = make_extension(2, 4)
    fixed = [x for x in F16.elements() if frobenius(x, 2) == x]
    assert len(fixed) == 4  # exactly the copy of GF(4)


def test_frobenius_full_round_is_identity():
    for p, m in [(2, 3), (3, 2), (5, 2)]:
        spec = make_extension(p, m)
        for x in spec.elements():
            assert frobenius(x, m) == x


def test_frobenius_is_additive():
    rng = random.Random(5)
    for p, m in [(2, 4), (3, 3), (5, 2)]:
        spec = make_extension(p, m)
        for _ in range(200):
            x = spec.random_element(rng)
            y = spec.random_element(rng)
            assert (x + y) ** p == x**p + y**p


def test_frobenius_rejects_rationals():
    with pytest.raises(RationalField):
        frobenius(FieldSpec.rationals().element(2), 1)


def test_embed_constants_coefficientwise():
    F5 = make_extension(5, 1)
    F25 = make_extension(5, 2)
    img = embed(F5.element(3), F25)
    assert img.coeffs == (3, 0)


def test_embed_generator_respects_modulus():
    F4 = make_extension(2, 2)
    F16 = make_extension(2, 4)
    g = F4.element([0, 1])
    img = embed(g, F16)
    mod = UniPoly(F16, [F16.element(c) for c in F4.modulus])
    assert mod.evaluate(img).is_zero
    assert frobenius(img, 2) == img


def test_embed_is_a_field_homomorphism():
    rng = random.Random(9)
    F9 = make_extension(3, 2)
    F81 = make_extension(3, 4)
    for _ in range(100):
        x = F9.random_element(rng)
        y = F9.random_element(rng)
        assert embed(x + y, F81) == embed(x, F81) + embed(y, F81)
        assert embed(x * y, F81) == embed(x, F81) * embed(y, F81)


def test_embed_incompatible_degrees_or_characteristics():
    F4 = make_extension(2, 2)
    F8 = make_extension(2, 3)
    F9 = make_extension(3, 2)
    with pytest.raises(NoEmbedding):
        embed(F4.element([0, 1]), F8)
    with pytest.raises(NoEmbedding):
        embed(F4.element([0, 1]), F9)
    with pytest.raises(NoEmbedding):
        embed(F4.one, FieldSpec.rationals())


def test_element_enumeration_is_complete_and_deterministic():
    spec = make_extension(3, 2)
    first = list(spec.elements())
    second = list(spec.elements())
    assert first == second
    assert len(set(first)) == 9


def test_element_power_and_negative_exponent():
    F7 = make_extension(7, 1)
    x = F7.element(3)
    assert x**6 == F7.one
    assert x**-1 == x.inverse()
    assert x**0 == F7.one
