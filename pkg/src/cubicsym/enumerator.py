"""Algorithmic enumeration of admissible monomial sets and assembly of
the maximal-group list.

Pipeline: coverage skeletons (one x_i^2 x_j(i) per variable, up to
variable permutation) -> defect resolution (singular pairs/triples) ->
symmetry group + closure -> generic-member smoothness certification ->
dedup by canonical closure -> maximal groups under embedding.
"""

import json
from dataclasses import dataclass, field
from itertools import permutations

from . import diaggroup, lattice, smoothcert
from .cubicdomain import (MONOMIALS, apply_permutation,
                          canonical_under_permutation, covers, defects,
                          format_set, monomial_set, parse_set,
                          resolution_menu, _sq)


DEFAULT_PRIMES = (5, 7, 11, 101, 1009)
RETRY_PRIMES = (101, 1009)
RETRY_SEEDS = 8


@dataclass
class ClassificationEntry:
    representative: tuple
    closure: tuple
    group: lattice.AbelianGroup
    certification: smoothcert.SmoothnessVerdict
    key: tuple = field(default=None)

    def to_json(self):
        return {
            "set": format_set(self.representative),
            "closure": format_set(self.closure),
            "invariant_factors": list(
                lattice.canonical_group(
                    self.group.invariant_factors).invariant_factors),
            "certified": bool(self.certification),
            "prime": list(self.certification.primes),
        }


def coverage_skeletons(n=6):
    """Canonical representatives of the sets {x_i^2 x_j(i) : i} over all
    functions j, one per S_n-orbit, in deterministic order."""
    seen = set()
    out = []
    perms = list(permutations(range(n)))
    for code in _functions(n):
        if code in seen:
            continue
        # mark the whole orbit: relabeled function sigma.j.sigma^{-1}
        for sigma in perms:
            inv = [0] * n
            for i, s in enumerate(sigma):
                inv[s] = i
            seen.add(tuple(sigma[code[inv[i]]] for i in range(n)))
        out.append(monomial_set(_sq(i, j, n) for i, j in enumerate(code)))
    return out


def _functions(n):
    code = [0] * n
    while True:
        yield tuple(code)
        i = n - 1
        while i >= 0 and code[i] == n - 1:
            code[i] = 0
            i -= 1
        if i < 0:
            return
        code[i] += 1


def complete_to_admissible(skeleton, max_added=4):
    """All defect-free completions of a coverage skeleton reachable by
    adding at most max_added monomials, each drawn from the resolution
    menu of a then-present defect."""
    ok, uncovered = covers(skeleton)
    if not ok:
        raise ValueError(f"skeleton leaves variables uncovered: {uncovered}")
    emitted = []
    visited = set()

    def rec(A, budget):
        if A in visited:
            return
        visited.add(A)
        ds = defects(A)
        if not ds:
            emitted.append(A)
            return
        if budget == 0:
            return
        for m in resolution_menu(A, ds[0]):
            rec(monomial_set(A + (m,)), budget - 1)

    rec(skeleton, max_added)
    return emitted


def classify(max_added=4, primes=RETRY_PRIMES, seeds=RETRY_SEEDS,
             seed_base=0, progress=None, jobs=1):
    """Full enumeration: returns certified ClassificationEntry list,
    deduplicated by (canonical closure, invariant factors)."""
    skeletons = coverage_skeletons()
    raw = {}  # (closure, factors) -> (A, closure, structure), pre-canonical
    if jobs > 1:
        import multiprocessing
        with multiprocessing.Pool(jobs) as pool:
            for part in pool.imap_unordered(
                    _classify_skeleton, [(s, max_added) for s in skeletons]):
                for key, val in part:
                    raw.setdefault(key, val)
    else:
        for idx, skel in enumerate(skeletons):
            if progress:
                progress(idx, len(skeletons))
            for key, val in _classify_skeleton((skel, max_added)):
                raw.setdefault(key, val)
    # second-stage dedup across variable relabelings
    candidates = {}
    for A, clo, structure in raw.values():
        canon, _ = canonical_under_permutation(clo)
        factors = lattice.canonical_group(
            structure.invariant_factors).invariant_factors
        key = (canon, factors)
        if key not in candidates or A < candidates[key].representative:
            candidates[key] = ClassificationEntry(A, clo, structure,
                                                  None, key)
    entries = []
    for key in sorted(candidates):
        entry = candidates[key]
        entry.certification = _certify_generic(entry.closure, primes,
                                               seeds, seed_base)
        if entry.certification:
            entries.append(entry)
    return entries


def _classify_skeleton(args):
    skel, max_added = args
    out = []
    for A in complete_to_admissible(skel, max_added):
        G = diaggroup.symmetry_group(A)
        if G.continuous:
            continue  # generic member singular under a torus action
        clo = diaggroup.closure(A, G=G)
        key = (clo, lattice.canonical_group(
            G.structure.invariant_factors).invariant_factors)
        out.append((key, (A, clo, G.structure)))
    return out


def _certify_generic(S, primes, seeds, seed_base):
    last = None
    for p in primes:
        for s in range(seeds):
            F = smoothcert.generic_member(S, p, (seed_base, p, s))
            last = smoothcert.is_smooth_mod_p(F, p)
            if last:
                return last
    return last


def subsumed(e1, e2):
    """Corollary-1 style table compaction: e1 is subsumed by e2 when its
    group embeds into e2's and, under some coordinate permutation, e2's
    eigenclass partition refines e1's with matching base classes."""
    if e1.key == e2.key:
        return False
    if not lattice.embeds(e1.group, e2.group):
        return False
    G1 = diaggroup.symmetry_group(e1.representative)
    G2 = diaggroup.symmetry_group(e2.representative)
    P1 = list(diaggroup.eigencharacter_partition(G1).values())
    P2 = list(diaggroup.eigencharacter_partition(G2).values())
    cls1 = {m: i for i, cl in enumerate(P1) for m in cl}
    for sigma in permutations(range(6)):
        img_closure = apply_permutation(sigma, e2.closure)
        if not set(img_closure) <= set(e1.closure):
            continue
        if all(len({cls1[m] for m in apply_permutation(sigma, cl)}) == 1
               for cl in P2):
            return True
    return False


def compact_table(entries):
    """Remove subsumed entries (compaction only; the theorem check uses
    maximal_groups on the full list)."""
    keep = []
    for e1 in entries:
        if not any(subsumed(e1, e2) for e2 in entries if e2 is not e1):
            keep.append(e1)
    return keep


def maximal_groups(entries):
    """Antichain of maximal groups under the embedding criterion; every
    entry's group embeds into some returned group."""
    groups = []
    for e in entries:
        g = lattice.canonical_group(e.group.invariant_factors)
        if all(not lattice.isomorphic(g, h) for h in groups):
            groups.append(g)
    maximal = [g for g in groups
               if not any(lattice.embeds(g, h) and not lattice.isomorphic(g, h)
                          for h in groups)]
    assert all(any(lattice.embeds(g, h) for h in maximal) for g in groups)
    return sorted(maximal, key=lambda g: (g.order, g.invariant_factors))


# ---------------------------------------------------------------------------
# fixture table


def load_fixtures(path):
    """Parse fixture lines `SET | GROUP | CLOSURE` (monomial grammar,
    invariant factors as a comma list)."""
    fixtures = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#")[0].strip()
            if not line:
                continue
            set_txt, grp_txt, clo_txt = [p.strip() for p in line.split("|")]
            fixtures.append((
                parse_set(set_txt),
                tuple(int(d) for d in grp_txt.split(",")),
                parse_set(clo_txt),
            ))
    return fixtures


def verify_fixture_table(path):
    """Recompute every fixture triple; returns (ok, mismatch list)."""
    mismatches = []
    for A, factors, closure in load_fixtures(path):
        G = diaggroup.symmetry_group(A)
        got = lattice.canonical_group(G.invariant_factors).invariant_factors
        want = lattice.canonical_group(factors).invariant_factors
        got_closure = diaggroup.closure(A)
        if got != want or got_closure != closure:
            mismatches.append({
                "set": format_set(A),
                "expected_group": list(want),
                "computed_group": list(got),
                "closure_matches": got_closure == closure,
            })
    return not mismatches, mismatches


def load_reference_groups(path):
    """One group per line as a comma list of invariant factors."""
    groups = []
    with open(path) as fh:
        for line in fh:
            line = line.split("#")[0].strip()
            if line:
                groups.append(lattice.canonical_group(
                    tuple(int(d) for d in line.split(","))))
    return groups


def check_theorem(maximal, reference):
    """Both directions of the classification statement: the computed
    maximal antichain must coincide with the reference list."""
    missing = [g for g in reference
               if not any(lattice.isomorphic(g, h) for h in maximal)]
    extra = [g for g in maximal
             if not any(lattice.isomorphic(g, h) for h in reference)]
    return not missing and not extra, missing, extra


def entries_to_json(entries, maximal):
    return json.dumps({
        "entries": [e.to_json() for e in entries],
        "maximal_groups": [list(g.invariant_factors) for g in maximal],
    }, indent=2, sort_keys=True)
