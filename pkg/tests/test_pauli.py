"""Monomial-matrix algebra, tensor reductions, and the invariant-family
solver for the non-diagonalizable case table."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicsym import pauli, smoothcert
from cubicsym.cubicdomain import MONOMIALS


P6, W6 = pauli.pauli_generators(6)
P3, W3 = pauli.pauli_generators(3)
P2, W2 = pauli.pauli_generators(2)


def random_word(draw_a, draw_b):
    return pauli.compose(pauli.matrix_power(P6, draw_a),
                         pauli.matrix_power(W6, draw_b))


words = st.builds(random_word, st.integers(0, 5), st.integers(0, 5))


# ---------------------------------------------------------------------------
# the algebra


def test_constructor_validation():
    with pytest.raises(ValueError):
        pauli.MonomialMatrix(2, (0, 0), (0, 0), 1)
    with pytest.raises(ValueError):
        pauli.MonomialMatrix(2, (0, 1), (0, 0), 0)
    with pytest.raises(ValueError):
        pauli.pauli_generators(1)


def test_shift_weight_commutator():
    # W*P = zeta_n * P*W for every n
    for n in (2, 3, 6):
        P, W = pauli.pauli_generators(n)
        lhs = pauli.compose(W, P)
        rhs = pauli.compose(P, W)
        assert pauli.proportional(lhs, rhs)
        assert pauli.commute_projectively(P, W)
        assert not lhs == rhs  # the commutator scalar is nontrivial
        assert pauli.projective_order(P) == n
        assert pauli.projective_order(W) == n
        assert pauli.scalar_exponent(pauli.matrix_power(P, n)) == 0
        assert pauli.scalar_exponent(pauli.matrix_power(W, n)) == 0


@given(words, words)
def test_pauli_words_commute_projectively(a, b):
    assert pauli.commute_projectively(a, b)


@given(words, words, st.sampled_from(MONOMIALS))
def test_action_is_multiplicative(a, b, m):
    m1, ph1 = pauli.act_on_monomial(b, m)
    m2, ph2 = pauli.act_on_monomial(a, m1)
    m3, ph3 = pauli.act_on_monomial(pauli.compose(a, b), m)
    assert m3 == m2
    assert ph3 == (ph1 + ph2) % 6


def test_action_example():
    # W6 scales z_i by zeta^i: z0^2 z5 picks up zeta^5
    m, phase = pauli.act_on_monomial(W6, (2, 0, 0, 0, 0, 1))
    assert m == (2, 0, 0, 0, 0, 1) and phase == 5
    # P6 shifts indices: z0^2 z5 -> z1^2 z0, no phase
    m, phase = pauli.act_on_monomial(P6, (2, 0, 0, 0, 0, 1))
    assert m == (1, 2, 0, 0, 0, 0) and phase == 0


@given(words)
def test_element_grammar_roundtrip(g):
    assert pauli.proportional(pauli.parse_element(pauli.format_element(g)), g)


def test_parse_element():
    g = pauli.parse_element("P6*W6^2")
    assert g.perm == (1, 2, 3, 4, 5, 0)
    assert pauli.shift_exponent(g) == 1
    with pytest.raises(ValueError):
        pauli.parse_element("P6*W3")
    with pytest.raises(ValueError):
        pauli.parse_element("Q6")


def test_reduction_case():
    assert pauli.reduction_case([W6]) == "Diagonalizable"
    assert pauli.reduction_case([pauli.matrix_power(P6, 2)]) == "TensorD2P3"
    assert pauli.reduction_case([pauli.matrix_power(P6, 3), W6]) \
        == "TensorD3P2"
    assert pauli.reduction_case([P6]) == "PauliCore"
    assert pauli.reduction_case([pauli.matrix_power(P6, 2),
                                 pauli.matrix_power(P6, 3)]) == "PauliCore"


# ---------------------------------------------------------------------------
# tensor identities


def test_tensor_identities_2x3():
    # P6^2 acts as the pure y-shift, W6 as (1, w) x W3, under z = x_i y_j
    assert pauli.proportional(
        pauli.matrix_power(P6, 2),
        pauli.tensor_embed(pauli.identity_matrix(2), P3, pauli.CONV_2x3))
    assert pauli.proportional(
        W6,
        pauli.tensor_embed(pauli.diagonal_matrix(6, (0, 1)),
                           pauli.rescale(W3, 6), pauli.CONV_2x3))


def test_tensor_identities_3x2():
    assert pauli.proportional(
        pauli.matrix_power(P6, 3),
        pauli.tensor_embed(pauli.identity_matrix(3), P2, pauli.CONV_3x2))
    assert pauli.proportional(
        W6,
        pauli.tensor_embed(pauli.diagonal_matrix(6, (0, 1, 2)),
                           pauli.rescale(W2, 6), pauli.CONV_3x2))


def test_tensor_embed_is_a_homomorphism():
    for a1, a2 in [(P2, W2), (W2, W2)]:
        for b1, b2 in [(P3, W3), (W3, P3)]:
            lhs = pauli.compose(
                pauli.tensor_embed(a1, b1, pauli.CONV_2x3),
                pauli.tensor_embed(a2, b2, pauli.CONV_2x3))
            rhs = pauli.tensor_embed(pauli.compose(a1, a2),
                                     pauli.compose(b1, b2), pauli.CONV_2x3)
            assert lhs == rhs


# ---------------------------------------------------------------------------
# abstract structure


def test_abstract_group():
    assert pauli.abstract_group([P6, W6]).invariant_factors == (6, 6)
    assert pauli.abstract_group([P3, W3]).invariant_factors == (3, 3)
    assert pauli.abstract_group([W6]).invariant_factors == (6,)
    assert pauli.abstract_group([W6, pauli.matrix_power(W6, 2)]) \
        .invariant_factors == (6,)
    with pytest.raises(ValueError):
        pauli.abstract_group([pauli.shift_matrix(3),
                              pauli.diagonal_matrix(3, (0, 1, 1))])


# ---------------------------------------------------------------------------
# invariant families


def semi_invariance_violations(family, p=None):
    """Check every orbit member transforms with the family character over
    a prime field containing the needed root of unity."""
    p = p or pauli.member_prime(family.root_order)
    zeta = pauli.root_of_unity(p, family.root_order)
    F = pauli.family_member(family, p, seed=1)
    bad = 0
    for g, t in zip(family.generators, family.characters):
        # transformed F: coefficient of g(m) is zeta^{phase} * F[m]
        Fg = {}
        scale = family.root_order // g.root_order
        for m, c in F.items():
            m2, phase = pauli.act_on_monomial(g, m)
            Fg[m2] = (c * pow(zeta, phase * scale, p)) % p
        want = {m: (c * pow(zeta, t, p)) % p for m, c in F.items()}
        bad += Fg != want
    return bad


def test_full_pair_has_no_invariant_cubic():
    assert pauli.invariant_cubics([P6, W6]) == []


def test_weight_family_matches_eigenspaces():
    fams = pauli.invariant_cubics([W6])
    # one family per nonempty weight class of monomials mod 6
    assert len(fams) == 6
    total = sum(f.dimension for f in fams)
    assert total == len(MONOMIALS)
    for fam in fams:
        assert all(len(orb) == 1 for orb in fam.orbits)
        assert semi_invariance_violations(fam) == 0


def test_shift_family_semi_invariance():
    gens = [pauli.compose(P6, W6), pauli.matrix_power(W6, 2)]
    fams = pauli.invariant_cubics(gens)
    assert fams
    for fam in fams:
        assert semi_invariance_violations(fam) == 0


def test_families_are_presentation_invariant():
    g1 = pauli.compose(P6, W6)
    g2 = pauli.matrix_power(W6, 2)
    dims1 = sorted(f.dimension for f in pauli.invariant_cubics([g1, g2]))
    # replace the first generator by g1 * g2^2: the same projective group
    g1b = pauli.compose(g1, pauli.matrix_power(g2, 2))
    dims2 = sorted(f.dimension for f in pauli.invariant_cubics([g1b, g2]))
    assert dims1 == dims2


def test_restrict_family():
    fams = pauli.invariant_cubics([W6])
    fam = max(fams, key=lambda f: f.dimension)
    sub = pauli.restrict_family(fam, lambda m: max(m) == 3)
    assert sub.characters == fam.characters
    assert all(max(m) == 3 for m in sub.monomials())
    assert sub.dimension <= fam.dimension


def test_member_prime():
    assert pauli.member_prime(1) == 5
    assert pauli.member_prime(6) == 7
    assert pauli.member_prime(9) == 19
    assert pauli.member_prime(18) == 19
    assert pauli.member_prime(36) == 37


def test_root_of_unity():
    for order in (2, 3, 6, 9):
        p = pauli.member_prime(order)
        z = pauli.root_of_unity(p, order)
        assert pow(z, order, p) == 1
        assert all(pow(z, k, p) != 1 for k in range(1, order))
    with pytest.raises(ValueError):
        pauli.root_of_unity(7, 4)


def test_certified_member_on_weight_family():
    fams = pauli.invariant_cubics([pauli.diagonal_matrix(3, (0,) * 6)])
    assert len(fams) == 1 and fams[0].dimension == len(MONOMIALS)
    verdict, F = pauli.certified_member(fams[0])
    assert verdict and smoothcert.is_smooth_mod_p(F, 7)


# ---------------------------------------------------------------------------
# case table spot checks (the full table runs in the acceptance suite)


def test_case_table_spot_checks():
    by_label = {row[0]: row for row in pauli.TENSOR23_CASES}
    for label in ("A1.1", "B1.1"):
        _, omega, j, kernel, expected = by_label[label]
        for i in (0, 1):
            want = expected[i] if isinstance(expected, dict) else expected
            gens = pauli._tensor23_generators(omega, i, j, kernel)
            report = pauli._check_case(f"{label}[i={i}]", gens, want,
                                       pauli._case_selector(label))
            assert report.ok, report


def test_negative_reports():
    assert pauli._full_pair_negative().ok
    assert pauli._surjective_split_negative(seeds=2).ok
