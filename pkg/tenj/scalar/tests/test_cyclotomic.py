from fractions import Fraction

import numpy as np
import pytest

from tenj.errors import ParseError, SingularPairing
from tenj.scalar import (
    ONE,
    ZERO,
    Cyclotomic,
    cyc_div,
    cyc_inv,
    cyc_neg,
    cyc_pow,
    cyc_sub,
    encode_scalar,
    format_approx,
    format_exact,
    invert_matrix,
    parse_scalar,
)
from tenj.scalar.cyclotomic import cyclotomic_polynomial, euler_phi
from tenj.scalar.linalg import as_matrix, identity, matmul, tensors_equal


def z(n, k=1):
    return Cyclotomic.zeta(n, k)


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert [euler_phi(n) for n in (1, 2, 3, 5, 8, 9, 15)] == [1, 1, 2, 4, 4, 6, 8]


def test_add():
    assert z(3) + z(3, 2) + 1 == 0
    x = z(8, 3) + Fraction(1, 7)
    assert ZERO + x == x
    assert Cyclotomic.from_rational(Fraction(1, 2)) + Fraction(1, 3) == Fraction(5, 6)


def test_mul():
    assert z(4) * z(4) == -1
    assert z(8) * z(8) == z(4)
    x = z(5, 2) - 3
    assert x * 1 == x
    assert x * ONE is x


def test_inverse():
    assert cyc_inv(2) == Fraction(1, 2)
    for n, k in [(4, 1), (5, 3), (12, 7)]:
        assert cyc_inv(z(n, k)) == z(n, n - k)
    assert cyc_inv(1 + z(4)) == (1 - z(4)) / 2
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_functional_operations():
    a = 1 + z(4)
    assert cyc_sub(a, z(4)) == ONE
    assert cyc_neg(a) + a == ZERO
    assert cyc_div(a, 2) == Fraction(1, 2) + Fraction(1, 2) * z(4)
    assert cyc_pow(a, 2) == 2 * z(4)
    assert cyc_pow(a, -2) == cyc_inv(2 * z(4))
    assert cyc_pow(z(6), 6) == ONE
    with pytest.raises(ZeroDivisionError):
        cyc_div(1, ZERO)


def test_to_complex():
    assert np.allclose(z(4).to_complex(), (0, 1))
    assert np.allclose((-ONE).to_complex(), (-1, 0))
    re_part, im_part = (Fraction(1, 2) + z(3)).to_complex()
    assert abs(re_part) < 1e-12
    assert abs(im_part - np.sqrt(3) / 2) < 1e-12


def test_field_axioms_on_samples():
    rng = np.random.Generator(np.random.PCG64(3))
    samples = []
    for _ in range(12):
        n = int(rng.choice([3, 4, 5, 8, 12]))
        coeffs = [Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4))) for _ in range(n)]
        samples.append(Cyclotomic(n, coeffs))
    for a, b, c in zip(samples, samples[1:], samples[2:]):
        assert (a * b) * c == a * (b * c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * a.inverse() == 1


def test_conductor_reduction():
    # zeta_6 lives in Q(zeta_3)
    assert z(6).conductor == 3
    assert z(12, 4) == z(3)
    assert z(12, 3) == z(4)
    assert z(4, 2).conductor == 1
    assert Cyclotomic(8, [0, 0, 1, 0]) == z(4)
    # sqrt(2) = z8 + z8^7 has conductor 8
    assert (z(8) + z(8, 7)).conductor == 8


def test_root_of_unity_order():
    for n in (3, 4, 5, 7, 8, 12):
        assert z(n) ** n == 1
        for k in range(1, n):
            assert z(n) ** k != 1


def test_pow_negative():
    assert z(5) ** -2 == z(5, 3)
    assert Cyclotomic.from_rational(3) ** -1 == Fraction(1, 3)


def test_conjugate():
    assert z(4).conjugate() == -z(4)
    assert (2 + 2 * z(4)).conjugate() == 2 - 2 * z(4)


def test_hash_consistent_with_equality():
    assert hash(Cyclotomic.from_rational(Fraction(1, 2))) == hash(Fraction(1, 2))
    assert len({z(12, 4), z(3), z(6, 2)}) == 1


def test_format_exact():
    assert format_exact(Fraction(1, 2) + Fraction(1, 2) * z(4)) == "1/2 + 1/2*z4"
    assert format_exact(ONE) == "1"
    assert format_exact(ZERO) == "0"
    assert format_exact(2 - 2 * z(4)) == "2 - 2*z4"
    assert format_exact(z(3, 2)) == "-1 - z3"
    assert str(Cyclotomic.from_rational(Fraction(1, 2))) == "1/2"


def test_format_approx():
    assert format_approx(Fraction(1, 2)) == "0.5"
    assert format_approx(z(4)) == "0 + 1i"
    assert format_approx(Fraction(1, 3)) == "0.333333333333333"


def test_parse_scalar():
    assert parse_scalar("1/2") == Fraction(1, 2)
    assert parse_scalar(3) == 3
    assert parse_scalar({"zeta": [4, 1]}) == z(4)
    assert parse_scalar("zeta(4,1)") == z(4)
    assert parse_scalar("-zeta(4, 1)") == -z(4)
    assert parse_scalar({"conductor": 4, "coeffs": [["1", "2"], ["1", "2"]]}) == (1 + z(4)) / 2
    with pytest.raises(ParseError):
        parse_scalar("one half", "dim_obj.a")
    with pytest.raises(ParseError):
        parse_scalar({"conductor": 4, "coeffs": [["1", "0"]]})


def test_encode_scalar():
    assert encode_scalar(Fraction(-3, 4)) == "-3/4"
    value = (1 + z(4)) / 2
    assert parse_scalar(encode_scalar(value)) == value


def test_invert_matrix():
    assert tensors_equal(invert_matrix(as_matrix([[1]])), as_matrix([[1]]))
    d = as_matrix([[2, 0], [0, z(4)]])
    assert tensors_equal(invert_matrix(d), as_matrix([[Fraction(1, 2), 0], [0, -z(4)]]))
    p = as_matrix([[1 + z(4), 2], [z(4), Fraction(1, 3)]])
    assert tensors_equal(matmul(p, invert_matrix(p)), identity(2))
    with pytest.raises(SingularPairing):
        invert_matrix(as_matrix([[1, 2], [2, 4]]))
