"""Field axioms and exact linear algebra for the scalar layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from diracembed import (ExactMatrix, ExactScalar, HALF, I, INV_SQRT2, ONE,
                        SQRT2, ZERO, coerce, parse_scalar, real_sqrt)

fractions = st.fractions(min_value=-30, max_value=30, max_denominator=12)
scalars = st.builds(ExactScalar, fractions, fractions, fractions, fractions)
small_fractions = st.fractions(min_value=-6, max_value=6, max_denominator=4)
small_scalars = st.builds(ExactScalar, small_fractions, small_fractions,
                          small_fractions, small_fractions)
real_scalars = st.builds(ExactScalar, fractions, fractions)


# -- ring structure ------------------------------------------------------------

@given(scalars, scalars, scalars)
def test_addition_is_associative_and_commutative(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x


@given(small_scalars, small_scalars, small_scalars)
def test_multiplication_is_associative(x, y, z):
    assert (x * y) * z == x * (y * z)


@given(scalars, scalars)
def test_multiplication_is_commutative(x, y):
    assert x * y == y * x


@given(small_scalars, small_scalars, small_scalars)
def test_multiplication_distributes_over_addition(x, y, z):
    assert x * (y + z) == x * y + x * z


@given(scalars)
def test_additive_and_multiplicative_identities(x):
    assert x + ZERO == x
    assert x * ONE == x
    assert x + (-x) == ZERO
    assert x - x == ZERO


@given(scalars)
def test_nonzero_elements_invert(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x.inverse()
    else:
        assert x * x.inverse() == ONE
        assert x / x == ONE


@given(scalars, scalars)
def test_product_is_zero_only_when_a_factor_is(x, y):
    assert (x * y).is_zero() == (x.is_zero() or y.is_zero())


def test_defining_relations_of_the_adjoined_elements():
    assert I * I == -ONE
    assert SQRT2 * SQRT2 == coerce(2)
    assert SQRT2 * INV_SQRT2 == ONE
    assert HALF + HALF == ONE
    assert (ONE + SQRT2) * (ONE - SQRT2) == -ONE
    assert (ONE + I) * (ONE - I) == coerce(2)


@given(scalars)
def test_int_and_fraction_operands_mix_in(x):
    assert x * 2 == x + x
    assert 2 * x == x + x
    assert x + Fraction(1, 2) == x + HALF
    assert 1 - x == ONE - x
    if not x.is_zero():
        assert 1 / x == x.inverse()


# -- conjugations --------------------------------------------------------------

@given(scalars, scalars)
def test_conjugations_are_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()
    assert (x * y).sqrt2_conjugate() == x.sqrt2_conjugate() * y.sqrt2_conjugate()
    assert (x + y).conjugate() == x.conjugate() + y.conjugate()


@given(scalars)
def test_conjugations_are_involutions(x):
    assert x.conjugate().conjugate() == x
    assert x.sqrt2_conjugate().sqrt2_conjugate() == x
    assert (x * x.conjugate()).is_real()


# -- powers --------------------------------------------------------------------

@given(small_scalars)
def test_powers_repeat_multiplication(x):
    assert x ** 0 == ONE
    assert x ** 1 == x
    assert x ** 4 == x * x * x * x


@given(scalars)
def test_negative_powers_invert(x):
    if x.is_zero():
        with pytest.raises(ZeroDivisionError):
            x ** -1
    else:
        assert x ** -2 == (x * x).inverse()


# -- ordering of real elements -------------------------------------------------

def test_real_sign_handles_mixed_sign_coefficients():
    assert ExactScalar(3, -2).real_sign() == 1
    assert ExactScalar(-3, 2).real_sign() == -1
    assert ExactScalar(10, -7).real_sign() == 1
    assert ExactScalar(-10, 7).real_sign() == -1
    assert ExactScalar(0, 0).real_sign() == 0
    assert SQRT2 > ExactScalar(Fraction(7, 5))
    assert SQRT2 < ExactScalar(Fraction(3, 2))
    assert ExactScalar(Fraction(99, 70)) > SQRT2
    assert ExactScalar(Fraction(140, 99)) < SQRT2


@given(real_scalars, real_scalars)
def test_ordering_is_total_and_respects_addition(x, y):
    assert (x < y) + (x == y) + (y < x) == 1
    if x < y:
        assert x + ONE < y + ONE
        assert -y < -x


def test_comparisons_reject_nonreal_elements():
    with pytest.raises(ValueError):
        I.real_sign()
    with pytest.raises(ValueError):
        _ = I < ONE


# -- rendering and parsing -----------------------------------------------------

def test_canonical_form_is_fixed_width():
    assert ZERO.canonical() == "0 + 0*r2 + i*(0 + 0*r2)"
    assert ExactScalar(1, 2, 3, 4).canonical() == "1 + 2*r2 + i*(3 + 4*r2)"
    x = ExactScalar(Fraction(-1, 3), 0, Fraction(5, 2))
    assert x.canonical() == "-1/3 + 0*r2 + i*(5/2 + 0*r2)"


def test_compact_rendering():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(INV_SQRT2) == "1/2*r2"
    assert str(I) == "i*1"
    assert str(ONE + I) == "1 + i*1"
    assert str(ExactScalar(1, 2, 3, 4)) == "1 + 2*r2 + i*(3 + 4*r2)"


@given(scalars)
def test_parse_inverts_canonical(x):
    assert parse_scalar(x.canonical()) == x


def test_parse_accepts_bare_rationals():
    assert parse_scalar("7") == coerce(7)
    assert parse_scalar("-3/4") == coerce(Fraction(-3, 4))
    with pytest.raises(ValueError):
        parse_scalar("1 + r2")
    with pytest.raises(ValueError):
        parse_scalar("")


def test_coerce_rejects_foreign_types():
    with pytest.raises(TypeError):
        coerce(1.5)
    with pytest.raises(TypeError):
        coerce("1")
    assert coerce(ONE) is ONE


# -- exact square roots --------------------------------------------------------

def test_real_sqrt_on_known_values():
    assert real_sqrt(coerce(2)) == SQRT2
    assert real_sqrt(coerce(Fraction(9, 4))) == coerce(Fraction(3, 2))
    assert real_sqrt(coerce(Fraction(1, 2))) == INV_SQRT2
    assert real_sqrt(ExactScalar(3, 2)) == ONE + SQRT2
    assert real_sqrt(ZERO) == ZERO


def test_real_sqrt_returns_none_outside_the_field():
    assert real_sqrt(coerce(3)) is None
    assert real_sqrt(coerce(-1)) is None
    assert real_sqrt(ExactScalar(0, -1)) is None
    with pytest.raises(ValueError):
        real_sqrt(I)


@given(real_scalars)
def test_real_sqrt_inverts_squaring(x):
    root = real_sqrt(x * x)
    assert root is not None
    assert root * root == x * x
    assert root.real_sign() >= 0


# -- fast paths agree with the definition --------------------------------------

@given(scalars, scalars)
def test_multiplication_fast_paths_match_componentwise_formula(x, y):
    a1, b1, c1, d1 = x.a, x.b, x.c, x.d
    a2, b2, c2, d2 = y.a, y.b, y.c, y.d
    re1, im1 = (a1, b1), (c1, d1)
    re2, im2 = (a2, b2), (c2, d2)

    def times(p, q):
        return (p[0] * q[0] + 2 * p[1] * q[1], p[0] * q[1] + p[1] * q[0])

    def plus(p, q):
        return (p[0] + q[0], p[1] + q[1])

    def minus(p, q):
        return (p[0] - q[0], p[1] - q[1])

    re = minus(times(re1, re2), times(im1, im2))
    im = plus(times(re1, im2), times(im1, re2))
    assert x * y == ExactScalar(re[0], re[1], im[0], im[1])


# -- exact matrices ------------------------------------------------------------

matrix_entries = st.fractions(min_value=-5, max_value=5, max_denominator=3)


def matrices(n, m):
    return st.lists(
        st.lists(st.builds(ExactScalar, matrix_entries), min_size=m,
                 max_size=m),
        min_size=n, max_size=n).map(ExactMatrix)


@given(matrices(3, 3), matrices(3, 3), matrices(3, 2))
@settings(max_examples=25)
def test_matrix_product_is_associative_and_distributive(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert (a + b) @ c == a @ c + b @ c


@given(matrices(3, 4))
@settings(max_examples=50)
def test_rank_nullity(m):
    assert m.rank() + len(m.nullspace()) == m.ncols


@given(matrices(3, 4))
@settings(max_examples=50)
def test_nullspace_vectors_are_annihilated(m):
    for v in m.nullspace():
        assert (m @ v).is_zero()


@given(matrices(3, 3))
@settings(max_examples=50)
def test_inverse_roundtrip(m):
    if m.rank() < 3:
        with pytest.raises(ValueError):
            m.inverse()
    else:
        assert m @ m.inverse() == ExactMatrix.identity(3)
        assert m.inverse() @ m == ExactMatrix.identity(3)


@given(matrices(3, 3), matrices(3, 1))
@settings(max_examples=25)
def test_solve_produces_exact_solutions(a, b):
    if a.rank() == 3:
        x = a.solve(b)
        assert a @ x == b


@given(matrices(2, 2), matrices(2, 2), matrices(2, 2), matrices(2, 2))
@settings(max_examples=25)
def test_kron_is_multiplicative(a, b, c, d):
    assert (a @ c).kron(b @ d) == a.kron(b) @ c.kron(d)


def test_kron_with_sqrt2_entries_stays_exact():
    a = ExactMatrix([[INV_SQRT2, ZERO], [ZERO, SQRT2]])
    k = a.kron(ExactMatrix.identity(2))
    assert k[0, 0] * k[2, 2] == ONE
    assert k.trace() == INV_SQRT2 + INV_SQRT2 + SQRT2 + SQRT2


def test_char_poly_on_a_known_matrix():
    m = ExactMatrix([[coerce(2), ONE], [ONE, coerce(2)]])
    # x^2 - 4x + 3, lowest degree first
    assert m.char_poly() == [coerce(3), coerce(-4), ONE]


@given(matrices(3, 3))
@settings(max_examples=25)
def test_char_poly_annihilates_the_matrix(m):
    coeffs = m.char_poly()
    acc = ExactMatrix.zeros(3, 3)
    power = ExactMatrix.identity(3)
    for c in coeffs:
        acc = acc + power * c
        power = power @ m
    assert acc.is_zero()
