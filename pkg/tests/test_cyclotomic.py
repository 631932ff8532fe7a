import random
from fractions import Fraction

import pytest

from hopfkit.cyclotomic import (
    CycNumber,
    cyc_from_json,
    cyc_to_json,
    cyclotomic_polynomial,
    embed,
    euler_phi,
    root_of_unity,
)


def test_cyclotomic_polynomial_base_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)          # t - 1
    assert cyclotomic_polynomial(2) == (1, 1)           # t + 1
    assert cyclotomic_polynomial(4) == (1, 0, 1)        # t^2 + 1
    assert cyclotomic_polynomial(3) == (1, 1, 1)


def test_cyclotomic_polynomial_12():
    # recursive-division oracle: divide t^12 - 1 by all proper Phi_d by hand
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)  # t^4 - t^2 + 1


def test_degree_matches_phi():
    for n in [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 20, 24, 60]:
        assert len(cyclotomic_polynomial(n)) == euler_phi(n) + 1


def test_root_of_unity_basics():
    assert root_of_unity(4, 2) == CycNumber.from_rational(4, -1)
    for n in [1, 2, 3, 4, 7, 12]:
        assert root_of_unity(n, 0) == CycNumber.one(n)
    z3 = root_of_unity(3, 1)
    z32 = root_of_unity(3, 2)
    assert z3 + z32 == CycNumber.from_rational(3, -1)


def test_root_power_identity():
    for n in [1, 2, 3, 4, 8, 12, 20]:
        z = root_of_unity(n, 1)
        assert z ** n == CycNumber.one(n)
        # Phi_n(zeta_n) = 0
        poly = cyclotomic_polynomial(n)
        acc = CycNumber.zero(n)
        for k, c in enumerate(poly):
            acc = acc + root_of_unity(n, k) * c
        assert acc.is_zero()


def test_field_ops():
    z = root_of_unity(4, 1)
    assert z * z == -1
    assert root_of_unity(5, 3).inverse() == root_of_unity(5, 2)
    x = CycNumber.one(5) + root_of_unity(5, 1)
    assert x * x.inverse() == CycNumber.one(5)


def test_inverse_random():
    rng = random.Random(12345)
    for n in [1, 2, 3, 4, 8, 12, 20, 60]:
        phi = euler_phi(n)
        count = 0
        while count < 100:
            x = CycNumber(n, [Fraction(rng.randint(-3, 3), rng.randint(1, 4)) for _ in range(phi)])
            if x.is_zero():
                continue
            count += 1
            assert x * x.inverse() == CycNumber.one(n)


def test_conductor_mismatch_raises():
    with pytest.raises(ValueError):
        root_of_unity(3, 1) + root_of_unity(4, 1)


def test_divide_by_zero():
    with pytest.raises(ZeroDivisionError):
        CycNumber.one(4) / CycNumber.zero(4)


def test_embed_basics():
    z4 = root_of_unity(4, 1)
    assert embed(z4, 12) == root_of_unity(12, 3)
    for m in [1, 2, 6, 12]:
        assert embed(CycNumber.one(1), m) == CycNumber.one(m)
    v = root_of_unity(3, 1) + root_of_unity(3, 2)
    assert embed(v, 12) == CycNumber.from_rational(12, -1)


def test_embed_is_field_hom():
    rng = random.Random(999)
    for n, m in [(2, 4), (3, 12), (4, 12), (4, 20), (12, 60), (20, 60)]:
        phi = euler_phi(n)
        for _ in range(100):
            a = CycNumber(n, [Fraction(rng.randint(-2, 2)) for _ in range(phi)])
            b = CycNumber(n, [Fraction(rng.randint(-2, 2)) for _ in range(phi)])
            assert embed(a * b, m) == embed(a, m) * embed(b, m)
            assert embed(a + b, m) == embed(a, m) + embed(b, m)


def test_canonical_idempotent():
    z = root_of_unity(12, 7)
    again = CycNumber(12, z.coeffs)
    assert again == z and again.coeffs == z.coeffs


def test_json_round_trip():
    x = root_of_unity(20, 7) * Fraction(3, 7) - 2
    assert cyc_from_json(cyc_to_json(x)) == x
