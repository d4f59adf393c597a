"""Clifford algebras over the exact scalar field and the quantization map."""

from itertools import combinations, product

import pytest

from diracembed import (CliffordElement, HALF, I, INV_SQRT2, ONE,
                        QuadraticSpace, ReductivePair, SQRT2, ZERO,
                        chevalley_j, clifford_commutator, coerce,
                        inject_element, sl2, unit_vector, vec_scale)


def space_of(signs):
    return QuadraticSpace(tuple(f"g{k + 1}" for k in range(len(signs))),
                          tuple(signs))


def all_monomials(space):
    out = []
    for r in range(space.dim + 1):
        out.extend(combinations(range(space.dim), r))
    return out


SIGN_PATTERNS = {
    1: (-1,),
    2: (1, 1),
    3: (1, -1, 1),
    4: (-1, -1, 1, 1),
    5: (1, 1, 1, -1, -1),
    6: (1, -1, 1, -1, 1, -1),
}


@pytest.mark.parametrize("dim", sorted(SIGN_PATTERNS))
def test_generator_relations(dim):
    space = space_of(SIGN_PATTERNS[dim])
    gens = [CliffordElement.generator(space, i) for i in range(dim)]
    for i in range(dim):
        for j in range(dim):
            want = (CliffordElement.unit(space, coerce(space.signs[i]))
                    if i == j else CliffordElement.zero(space))
            assert gens[i] * gens[j] + gens[j] * gens[i] == want


@pytest.mark.parametrize("dim", [1, 2, 3, 4])
def test_multiplication_is_associative_on_all_monomials(dim):
    space = space_of(SIGN_PATTERNS[dim])
    basis = [CliffordElement.monomial(space, m) for m in all_monomials(space)]
    for a, b, c in product(basis, repeat=3):
        assert (a * b) * c == a * (b * c)


def test_generator_squares_are_half_the_sign():
    space = space_of((1, -1))
    g1 = CliffordElement.generator(space, 0)
    g2 = CliffordElement.generator(space, 1)
    assert g1 * g1 == CliffordElement.unit(space, HALF)
    assert g2 * g2 == CliffordElement.unit(space, -HALF)
    # orthogonal product squares to minus the product of the half-signs
    assert (g1 * g2) * (g1 * g2) == CliffordElement.unit(
        space, coerce(1) * HALF * HALF)


def test_quadratic_form_values():
    space = space_of((1, -1, 1))
    e1 = (ONE, ZERO, ZERO)
    e2 = (ZERO, ONE, ZERO)
    mixed = (SQRT2, I, ZERO)
    assert space.form(e1, e1) == ONE
    assert space.form(e2, e2) == -ONE
    assert space.form(e1, e2) == ZERO
    assert space.form(mixed, mixed) == coerce(2) - I * I


def test_vector_and_coefficient_accessors():
    space = space_of((1, 1, -1))
    coords = (SQRT2, ZERO, I)
    v = CliffordElement.vector(space, coords)
    assert v.vector_coords() == coords
    assert v.coefficient((0,)) == SQRT2
    assert v.coefficient((2,)) == I
    assert v.coefficient(()) == ZERO
    u = CliffordElement.unit(space, INV_SQRT2)
    assert u.scalar_part() == INV_SQRT2
    with pytest.raises(ValueError):
        (u + v).vector_coords()


def test_parity_and_degree_parts():
    space = space_of((1, 1))
    x = (CliffordElement.unit(space)
         + CliffordElement.generator(space, 0)
         + CliffordElement.monomial(space, (0, 1), SQRT2))
    assert x.even_part() + x.odd_part() == x
    assert x.degree_part(1) == CliffordElement.generator(space, 0)
    assert not x.is_homogeneous()
    assert x.odd_part().parity() == 1


def test_vector_anticommutator_reproduces_the_form():
    space = space_of((1, -1, 1, -1))
    u = CliffordElement.vector(space, (ONE, SQRT2, ZERO, I))
    v = CliffordElement.vector(space, (HALF, ZERO, I, ONE))
    pairing = space.form(u.vector_coords(), v.vector_coords())
    assert u * v + v * u == CliffordElement.unit(space, pairing)


def test_chevalley_transpose_of_degree_two():
    space = space_of((1, 1, -1))
    x = CliffordElement.vector(space, (ONE, SQRT2, ZERO))
    y = CliffordElement.vector(space, (ZERO, I, ONE))
    j = chevalley_j(x, y)
    # degree-2 part of xy with the scalar trace removed
    assert j == (x * y - y * x).scaled(HALF)
    assert j.degree_part(0).is_zero()
    with pytest.raises(ValueError):
        chevalley_j(x * y, y)


def test_commutator_with_degree_two_preserves_degree_one():
    space = space_of((1, 1, 1))
    x = CliffordElement.vector(space, (ONE, ZERO, SQRT2))
    y = CliffordElement.vector(space, (I, ONE, ZERO))
    v = CliffordElement.vector(space, (HALF, I, ONE))
    out = clifford_commutator(chevalley_j(x, y), v)
    assert out.is_homogeneous()
    assert out.degree_part(1) == out


def test_inject_element_is_multiplicative():
    small = QuadraticSpace(("A", "C"), (1, -1))
    big = QuadraticSpace(("A", "B", "C"), (1, 1, -1))
    a = CliffordElement.generator(small, 0)
    c = CliffordElement.generator(small, 1)
    x = a * c + CliffordElement.unit(small, SQRT2)
    y = c.scaled(I) + a
    assert inject_element(x * y, big) == \
        inject_element(x, big) * inject_element(y, big)
    assert inject_element(a, big) == CliffordElement.generator(big, 0)
    assert inject_element(c, big) == CliffordElement.generator(big, 2)


def test_inject_element_requires_matching_signs():
    small = QuadraticSpace(("A",), (1,))
    flipped = QuadraticSpace(("A", "B"), (-1, 1))
    with pytest.raises(ValueError):
        inject_element(CliffordElement.generator(small, 0), flipped)


def test_reductive_pair_alpha_satisfies_the_bracket_identity():
    g = sl2()
    h = unit_vector(g.dim, 0)
    x1 = vec_scale(INV_SQRT2, (ZERO, ONE, ONE))
    x2 = vec_scale(I * INV_SQRT2, (ZERO, ONE, -ONE))
    pair = ReductivePair(g, [h], [x1, x2], ("P1", "P2"))
    for x in (h,):
        ax = pair.alpha(x)
        assert ax.even_part() == ax
        for y in (x1, x2):
            got = clifford_commutator(ax, pair.vector_element(y))
            assert got == pair.vector_element(g.bracket(x, y))


def test_symmetric_pair_has_vanishing_cubic_element():
    g = sl2()
    h = unit_vector(g.dim, 0)
    x1 = vec_scale(INV_SQRT2, (ZERO, ONE, ONE))
    x2 = vec_scale(I * INV_SQRT2, (ZERO, ONE, -ONE))
    pair = ReductivePair(g, [h], [x1, x2], ("P1", "P2"))
    assert pair.cubic_element().is_zero()


def test_expand_recovers_exact_coordinates():
    g = sl2()
    h = unit_vector(g.dim, 0)
    x1 = vec_scale(INV_SQRT2, (ZERO, ONE, ONE))
    x2 = vec_scale(I * INV_SQRT2, (ZERO, ONE, -ONE))
    pair = ReductivePair(g, [h], [x1, x2], ("P1", "P2"))
    coords = pair.expand(vec_scale(SQRT2, x1))
    assert coords == (SQRT2, ZERO)
    with pytest.raises(ValueError):
        pair.expand(h)
