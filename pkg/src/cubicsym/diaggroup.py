"""Diagonal projective symmetry groups of monomial sets.

G_A is the group of diagonal projective automorphisms assigning equal
weight to all monomials of A.  With the normalization c_0 = 0 it is the
character dual of Z^6 / (difference lattice + Z*e_0): the e_0 row kills
the scalar ambiguity of signatures exactly once, whereas quotienting by
the all-ones vector would leave a spurious Z/6 of scalar characters.
"""

from dataclasses import dataclass

from . import lattice
from .cubicdomain import (MONOMIALS, Signature, all_monomials, weight)


@dataclass(frozen=True)
class DiagonalSymmetryGroup:
    structure: lattice.AbelianGroup
    generator_signatures: tuple
    base_monomial: tuple
    difference_lattice: tuple  # rows m - m_0 plus the normalization row

    @property
    def invariant_factors(self):
        return self.structure.invariant_factors

    @property
    def free_rank(self):
        return self.structure.free_rank

    @property
    def continuous(self):
        """A positive-dimensional stabilizer: the generic member of any
        closure of A is singular."""
        return self.structure.free_rank > 0


def symmetry_group(A):
    """Compute G_A with explicit generator signatures."""
    if not A:
        raise ValueError("empty monomial set")
    n = len(A[0])
    m0 = A[0]
    e0 = tuple(1 if i == 0 else 0 for i in range(n))
    rows = [tuple(a - b for a, b in zip(m, m0)) for m in A[1:]]
    rows.append(e0)
    group = lattice.cokernel_structure([list(r) for r in rows], n)
    sigs = tuple(Signature(d, gen)
                 for d, gen in zip(group.invariant_factors, group.generators))
    # sanity: every generator gives equal weight to all monomials of A
    for sig in sigs:
        w0 = weight(sig, m0)
        assert all(weight(sig, m) == w0 for m in A)
    return DiagonalSymmetryGroup(group, sigs, m0, tuple(rows))


def closure(A, universe=None, G=None):
    """All monomials whose weight under every element of G_A equals the
    common weight of A (the support of the full invariant family)."""
    if G is None:
        G = symmetry_group(A)
    if universe is None:
        universe = MONOMIALS if len(A[0]) == 6 else all_monomials(len(A[0]))
    H = lattice.hermite_normal_form([list(r) for r in G.difference_lattice])
    m0 = G.base_monomial
    return tuple(m for m in universe
                 if lattice.hermite_reduces_to_zero(
                     H, [a - b for a, b in zip(m, m0)]))


def generator_matrices(G):
    """Render generators as (root order d, exponent tuple) pairs, one per
    invariant factor; each represents diag(w^c_0, ..., w^c_5), w = d-th
    root of unity, c_0 = 0."""
    if G.free_rank:
        raise ValueError("continuous symmetry group has no finite "
                         "generator list")
    return [(sig.modulus, sig.exponents) for sig in G.generator_signatures]


def eigencharacter_partition(G, universe=None):
    """Partition the monomial universe by joint weight vector under the
    generators of G.  The class of the base monomial equals closure(A)."""
    if G.free_rank:
        raise ValueError("finite group required")
    if universe is None:
        n = len(G.base_monomial)
        universe = MONOMIALS if n == 6 else all_monomials(n)
    classes = {}
    for m in universe:
        key = tuple(weight(sig, m) for sig in G.generator_signatures)
        classes.setdefault(key, []).append(m)
    return {key: tuple(ms) for key, ms in classes.items()}


def group_json(G, closure_set=None):
    """JSON-ready dict for a computed symmetry group."""
    from .cubicdomain import format_monomial
    out = {
        "invariant_factors": list(G.invariant_factors),
        "free_rank": G.free_rank,
        "generators": [{"modulus": sig.modulus,
                        "exponents": list(sig.exponents)}
                       for sig in G.generator_signatures],
    }
    if closure_set is not None:
        out["closure"] = [format_monomial(m) for m in closure_set]
    return out
