"""Skeleton enumeration, defect resolution and the theorem comparison
plumbing (the full classification run lives in the acceptance suite)."""

from importlib import resources

import pytest

from cubicsym import diaggroup, enumerator, lattice
from cubicsym import cubicdomain as cd


def data_path(name):
    return resources.files("cubicsym").joinpath("data", name)


def test_coverage_skeletons():
    skels = enumerator.coverage_skeletons()
    assert len(skels) == 130  # functions 6 -> 6 up to conjugation by S_6
    for A in skels:
        assert len(A) == 6
        assert cd.covers(A) == (True, [])
    # canonical representatives are pairwise non-isomorphic
    canon = {cd.canonical_under_permutation(A)[0] for A in skels}
    assert len(canon) == 130


def test_coverage_skeletons_small():
    # functions 2 -> 2 up to conjugation: identity, swap, both-to-one
    assert len(enumerator.coverage_skeletons(2)) == 3
    assert len(enumerator.coverage_skeletons(3)) == 7


def test_complete_to_admissible_fermat_like():
    # the cyclic skeleton is already defect-free
    A = cd.parse_set("x0^2*x1, x1^2*x2, x2^2*x3, x3^2*x4, x4^2*x5, x5^2*x0")
    assert enumerator.complete_to_admissible(A) == [A]
    with pytest.raises(ValueError):
        enumerator.complete_to_admissible(cd.parse_set("x0^3"))


def test_complete_to_admissible_adds_menu_monomials():
    # all squares pointing at x0 leaves many singular pairs to resolve
    A = cd.monomial_set([cd._sq(i, 0) for i in range(6)])
    done = enumerator.complete_to_admissible(A, max_added=4)
    assert done
    for B in done:
        assert set(A) <= set(B)
        assert len(B) <= len(A) + 4
        assert cd.defects(B) == []


def test_maximal_groups_antichain():
    def entry(factors):
        g = lattice.canonical_group(factors)
        return enumerator.ClassificationEntry((), (), g, None, factors)

    entries = [entry(f) for f in [(3, 3), (9,), (3, 9), (27,), (2, 4), (8,)]]
    maximal = enumerator.maximal_groups(entries)
    assert [g.invariant_factors for g in maximal] \
        == [(2, 4), (8,), (3, 9), (27,)]


def test_check_theorem_directions():
    g = lattice.canonical_group
    reference = [g((3, 3)), g((8,))]
    ok, missing, extra = enumerator.check_theorem([g((8,)), g((3, 3))],
                                                  reference)
    assert ok and not missing and not extra
    ok, missing, extra = enumerator.check_theorem([g((8,))], reference)
    assert not ok and missing == [g((3, 3))] and not extra
    ok, missing, extra = enumerator.check_theorem(
        [g((8,)), g((3, 3)), g((64,))], reference)
    assert not ok and extra == [g((64,))]


def test_reference_list_is_an_antichain():
    reference = enumerator.load_reference_groups(
        data_path("theorem_groups.txt"))
    assert len(reference) == 18
    for g in reference:
        assert not any(lattice.embeds(g, h) for h in reference
                       if not lattice.isomorphic(g, h))


def test_fixture_table_loads():
    fixtures = enumerator.load_fixtures(data_path("section2_fixtures.txt"))
    assert len(fixtures) >= 25
    for A, factors, closure in fixtures:
        assert set(A) <= set(closure)
        assert all(f >= 1 for f in factors)


def test_subsumed_by_closure_refinement():
    # the Fermat entry subsumes nothing and is not subsumed by itself
    A = cd.parse_set("x0^3, x1^3, x2^3, x3^3, x4^3, x5^3")
    G = diaggroup.symmetry_group(A)
    e = enumerator.ClassificationEntry(
        A, diaggroup.closure(A, G=G), G.structure, None, ("fermat",))
    assert not enumerator.subsumed(e, e)
    # a strictly larger group with a refining partition subsumes a smaller
    B = cd.parse_set("x0^3, x1^3, x2^3, x3^3, x4^3, x5^3, x0*x1*x2")
    H = diaggroup.symmetry_group(B)
    e2 = enumerator.ClassificationEntry(
        B, diaggroup.closure(B, G=H), H.structure, None, ("sub",))
    assert lattice.embeds(H.structure, G.structure)
    assert enumerator.subsumed(e2, e)
    assert not enumerator.subsumed(e, e2)
    assert enumerator.compact_table([e, e2]) == [e]


def test_classify_single_skeleton_pipeline():
    A = cd.parse_set("x0^2*x1, x1^2*x2, x2^2*x3, x3^2*x4, x4^2*x5, x5^2*x0")
    out = enumerator._classify_skeleton((A, 0))
    assert len(out) == 1
    key, (rep, clo, structure) = out[0]
    assert rep == A and key[1] == (21,)
    assert lattice.canonical_group(structure.invariant_factors) \
        .invariant_factors == (21,)


def test_certify_generic_retries_seeds():
    A = cd.parse_set("x0^3, x1^3, x2^3, x3^3, x4^3, x5^3")
    verdict = enumerator._certify_generic(A, (101,), seeds=4, seed_base=0)
    assert verdict


def test_entries_to_json_is_deterministic():
    g = lattice.canonical_group((3, 3))
    from cubicsym import smoothcert
    v = smoothcert.SmoothnessVerdict("CertifiedSmooth", (101,))
    A = cd.parse_set("x0^3, x1^3, x2^3, x3^3, x4^3, x5^3")
    e = enumerator.ClassificationEntry(A, A, g, v, None)
    doc1 = enumerator.entries_to_json([e], [g])
    doc2 = enumerator.entries_to_json([e], [g])
    assert doc1 == doc2
    assert '"maximal_groups"' in doc1
