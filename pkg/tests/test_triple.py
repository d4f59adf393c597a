"""The rank-one transitive triple: eigenstructure, slice maps, invariants."""

import pytest

from diracembed import (ONE, SQRT2, TransitiveTriple, TripleStructureError,
                        ZERO, build_sl2_triple, clifford_commutator,
                        dump_triple_description, omega_rescaling_cases,
                        omega_value, parse_triple_description, solve_in_span,
                        unit_vector, vec_is_zero, vec_scale, vec_sub)


@pytest.fixture(scope="module")
def triple():
    return build_sl2_triple()


# -- structure ------------------------------------------------------------------

def test_subspace_dimensions(triple):
    assert triple.algebra.dim == 6
    assert len(triple.h_basis) == 3
    assert len(triple.l_basis) == 4
    assert len(triple.zq_basis) == 1
    assert len(triple.t_basis) == 2
    assert len(triple.l_h_basis) == 1
    assert len(triple.h_k_basis) == 1
    assert triple.ql_labels == ("Z", "T1", "T2")


def test_slice_complement_signature(triple):
    g = triple.algebra
    z = triple.zq_basis[0]
    t1, t2 = triple.t_basis
    assert g.form_value(z, z) == -ONE
    assert g.form_value(t1, t1) == ONE
    assert g.form_value(t2, t2) == ONE
    assert g.form_value(t1, t2) == ZERO
    assert g.form_value(z, t1) == ZERO
    assert triple.space_ql.signs == (-1, 1, 1)
    assert triple.space_ls.signs == (1, 1)
    assert triple.space_qlp.signs == (-1,)


def test_eigenvalue_decomposition(triple):
    mults = sorted((str(nu), len(basis)) for nu, basis in triple.nu_spaces)
    assert mults == [("-1", 1), ("0", 2), ("1", 1)]
    assert triple.nu_of(triple.zq_basis[0]) == -ONE
    assert triple.nu_of(triple.t_basis[0]) == ZERO
    assert triple.nu_of(triple.l_h_basis[0]) == ONE


def test_weight_factors(triple):
    assert triple.d[ZERO] == SQRT2
    assert triple.d[-ONE] == ONE


def test_rho_minus_fixes_z_and_rho_plus_kills_it(triple):
    z = triple.zq_basis[0]
    assert vec_is_zero(vec_sub(triple.rho(-1, z), z))
    assert vec_is_zero(triple.rho(1, z))


def test_rho_split_identity_on_the_noncompact_part(triple):
    for t in triple.t_basis:
        split = vec_sub(vec_scale(SQRT2, t), triple.rho(1, t))
        assert vec_is_zero(vec_sub(triple.rho(-1, t), split))


def test_rho_plus_lands_isometrically_in_h(triple):
    g = triple.algebra
    for t in triple.t_basis:
        img = triple.rho(1, t)
        assert solve_in_span(triple.h_basis, img) is not None
        assert g.form_value(img, img) == g.form_value(t, t)


def test_rho_minus_is_an_isometry_onto_the_complement(triple):
    g = triple.algebra
    basis = triple.zq_basis + triple.t_basis
    for x in basis:
        for y in basis:
            assert g.form_value(triple.rho(-1, x), triple.rho(-1, y)) == \
                g.form_value(x, y)


def test_slice_vectors_commute_with_their_sigma_image(triple):
    g = triple.algebra
    for v in triple.zq_basis + triple.t_basis:
        sigma_v = tuple(
            sum((triple.sigma[i, j] * c for j, c in enumerate(v)),
                start=ZERO) for i in range(g.dim))
        assert vec_is_zero(g.bracket(v, sigma_v))


# -- the quantization maps across all five pairs ---------------------------------

def test_alpha_commutators_reproduce_brackets(triple):
    g = triple.algebra
    pairs = [triple.pair_g_h, triple.pair_l_lh, triple.pair_l_lk,
             triple.pair_lk_lh, triple.pair_h_hk]
    for pair in pairs:
        for x in pair.acting_basis:
            ax = pair.alpha(x)
            for y in pair.complement_basis:
                got = clifford_commutator(ax, pair.vector_element(y))
                assert got == pair.vector_element(g.bracket(x, y))


def test_alpha_is_a_lie_homomorphism(triple):
    g = triple.algebra
    for pair in (triple.pair_g_h, triple.pair_l_lh):
        for x in pair.acting_basis:
            for y in pair.acting_basis:
                lhs = clifford_commutator(pair.alpha(x), pair.alpha(y))
                assert lhs == pair.alpha(g.bracket(x, y))


def test_cubic_element_of_the_slice_pair(triple):
    cubic = triple.pair_l_lh.cubic_element()
    assert str(cubic) == "-1*Z*T1*T2"
    assert cubic.coefficient((0, 1, 2)) == -ONE
    assert triple.pair_g_h.cubic_element().is_zero()


def test_omega_rescaling_with_slice_weights(triple):
    cases = omega_rescaling_cases(triple)
    assert len(cases) == 27
    for lhs, rhs in cases:
        assert lhs == rhs
    nonzero = [lhs for lhs, _ in cases if not lhs.is_zero()]
    assert len(nonzero) == 4


def test_omega_is_alternating(triple):
    z = triple.zq_basis[0]
    t1, t2 = triple.t_basis
    assert omega_value(triple, t1, z, t2) == \
        -omega_value(triple, z, t1, t2)
    assert omega_value(triple, t1, t1, t2) == ZERO
    # [Z, T1] = T2, so the one essential value on the preferred basis is 1
    assert omega_value(triple, z, t1, t2) == ONE


# -- constructor validation -------------------------------------------------------

def test_triple_rejects_non_involutive_sigma(triple):
    g = triple.algebra
    bad = triple.sigma * SQRT2
    with pytest.raises(TripleStructureError):
        TransitiveTriple(g, bad, triple.theta, triple.h_basis, triple.l_basis)


def test_triple_rejects_wrong_h(triple):
    g = triple.algebra
    short = triple.h_basis[:2]
    with pytest.raises(TripleStructureError):
        TransitiveTriple(g, triple.sigma, triple.theta, short, triple.l_basis)


def test_triple_rejects_non_subalgebra_l(triple):
    g = triple.algebra
    bad_l = [unit_vector(6, 1), unit_vector(6, 2), unit_vector(6, 3),
             unit_vector(6, 4)]
    with pytest.raises(TripleStructureError):
        TransitiveTriple(g, triple.sigma, triple.theta, triple.h_basis, bad_l)


def test_generic_construction_without_preferred_bases(triple):
    auto = TransitiveTriple(triple.algebra, triple.sigma, triple.theta,
                            triple.h_basis, triple.l_basis,
                            h_module_map=triple.h_module_map)
    assert len(auto.zq_basis) == 1
    assert len(auto.t_basis) == 2
    g = auto.algebra
    # the computed bases are orthonormalized to unit norms (either sign)
    z_norm = g.form_value(auto.zq_basis[0], auto.zq_basis[0])
    assert z_norm in (ONE, -ONE)
    for t in auto.t_basis:
        assert g.form_value(t, t) in (ONE, -ONE)
    # and all five pairs still satisfy the bracket identity
    for pair in (auto.pair_l_lh, auto.pair_h_hk):
        for x in pair.acting_basis:
            ax = pair.alpha(x)
            for y in pair.complement_basis:
                assert clifford_commutator(ax, pair.vector_element(y)) == \
                    pair.vector_element(g.bracket(x, y))


# -- serialization ------------------------------------------------------------------

def test_description_roundtrip(triple, tmp_path):
    text = dump_triple_description(triple)
    back = parse_triple_description(text)
    assert back.algebra == triple.algebra
    assert back.sigma == triple.sigma
    assert back.theta == triple.theta
    assert back.h_basis == triple.h_basis
    assert back.zq_basis == triple.zq_basis
    assert back.t_basis == triple.t_basis
    assert back.h_module_map == triple.h_module_map
    # a rebuilt triple carries the same spin spaces
    assert back.space_ql == triple.space_ql


def test_description_file_roundtrip(triple, tmp_path):
    from diracembed import load_triple
    path = tmp_path / "triple.txt"
    path.write_text(dump_triple_description(triple), encoding="utf-8")
    back = load_triple(str(path))
    assert back.algebra == triple.algebra


def test_parse_rejects_malformed_text():
    with pytest.raises(ValueError):
        parse_triple_description("dim: x\n")
    with pytest.raises(ValueError):
        parse_triple_description("labels: a, b\n")
