"""Degree-3 monomials in 6 variables, diagonal-automorphism signatures,
and the combinatorial smoothness necessary conditions.

Monomials are exponent tuples; a monomial set is a sorted tuple of
monomials; a signature is (modulus d, exponent tuple mod d) describing
the diagonal map diag(w^c_0, ..., w^c_5) with w a primitive d-th root
of unity, normalized so c_0 = 0.
"""

import re
from dataclasses import dataclass
from itertools import combinations, permutations


NVARS = 6
DEGREE = 3


def all_monomials(nvars=NVARS, degree=DEGREE):
    """All exponent tuples of total degree `degree`, canonically ordered."""
    if nvars < 1 or degree < 1:
        raise ValueError("need nvars >= 1 and degree >= 1")
    out = []

    def rec(prefix, remaining):
        if len(prefix) == nvars - 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e)

    rec([], degree)
    return tuple(sorted(out))


MONOMIALS = all_monomials()


def monomial_set(monos):
    """Canonical (sorted, duplicate-free) monomial set."""
    return tuple(sorted(set(map(tuple, monos))))


@dataclass(frozen=True)
class Signature:
    """Exponents (c_0,...,c_{n-1}) mod d of a diagonal automorphism."""
    modulus: int
    exponents: tuple

    def __post_init__(self):
        c0 = self.exponents[0]
        exps = tuple((c - c0) % self.modulus for c in self.exponents)
        object.__setattr__(self, "exponents", exps)


def weight(sig, m):
    """f-weight of a monomial: sum of i_j * c_j mod d."""
    return sum(i * c for i, c in zip(m, sig.exponents)) % sig.modulus


# ---------------------------------------------------------------------------
# text grammar: x<i>^<e> factors joined by '*'


def format_monomial(m):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i}")
        elif e > 1:
            parts.append(f"x{i}^{e}")
    return "*".join(parts)


def parse_monomial(text, nvars=NVARS, degree=DEGREE):
    exps = [0] * nvars
    for factor in text.strip().split("*"):
        m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor.strip())
        if not m:
            raise ValueError(f"bad monomial factor: {factor!r}")
        i = int(m.group(1))
        if i >= nvars:
            raise ValueError(f"variable index out of range: x{i}")
        exps[i] += int(m.group(2) or 1)
    if sum(exps) != degree:
        raise ValueError(f"monomial {text!r} has degree {sum(exps)}, "
                         f"expected {degree}")
    return tuple(exps)


def parse_set(text, nvars=NVARS, degree=DEGREE):
    return monomial_set(parse_monomial(t, nvars, degree)
                        for t in text.split(",") if t.strip())


def format_set(A):
    return ", ".join(format_monomial(m) for m in A)


# ---------------------------------------------------------------------------
# combinatorial structure


def cube_variables(A):
    """Variables i with x_i^3 in A."""
    return {m.index(DEGREE) for m in A if max(m) == DEGREE}


_cubes = cube_variables


def covers(A):
    """Does A contain some x_i^2*x_j for every variable i?

    Returns (bool, list of uncovered variable indices).
    """
    n = len(A[0]) if A else NVARS
    covered = set()
    for m in A:
        for i, e in enumerate(m):
            if e >= 2:
                covered.add(i)
    uncovered = [i for i in range(n) if i not in covered]
    return not uncovered, uncovered


def _sq(i, j, n=NVARS):
    e = [0] * n
    e[i] += 2
    e[j] += 1
    return tuple(e)


def _tri(i, j, l, n=NVARS):
    e = [0] * n
    e[i] += 1
    e[j] += 1
    e[l] += 1
    return tuple(e)


def singular_pairs(A):
    """Pairs (i, j) of non-cube variables forcing a singular point:
    x_i^2x_j and x_j^2x_i are absent and {x_i^2x_p, x_j^2x_p, x_ix_jx_p}
    meets A for at most one p."""
    n = len(A[0]) if A else NVARS
    S = set(A)
    cubes = _cubes(A)
    noncube = [i for i in range(n) if i not in cubes]
    return [(i, j) for i, j in combinations(noncube, 2)
            if _is_singular_pair(S, cubes, i, j, n)]


def singular_triples(A):
    """Triples (i, j, l) of non-cube variables forcing a singular point:
    all seven exclusion monomials absent and the six-monomial menu meets A
    for at most two values of p."""
    n = len(A[0]) if A else NVARS
    S = set(A)
    cubes = _cubes(A)
    noncube = [i for i in range(n) if i not in cubes]
    return [(i, j, l) for i, j, l in combinations(noncube, 3)
            if _is_singular_triple(S, cubes, i, j, l, n)]


def singular_pairs_naive(A):
    """Literal set-intersection transcription of the pair definition
    (independent implementation used as a test oracle)."""
    n = len(A[0]) if A else NVARS
    S = set(A)
    cubes = {i for i in range(n) if tuple(DEGREE if k == i else 0
                                          for k in range(n)) in S}
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            if i in cubes or j in cubes:
                continue
            if {_sq(i, j, n), _sq(j, i, n)} & S:
                continue
            values_of_p = [p for p in range(n)
                           if {_sq(i, p, n), _sq(j, p, n),
                               _tri(i, j, p, n)} & S]
            if len(values_of_p) <= 1:
                out.append((i, j))
    return out


def singular_triples_naive(A):
    """Literal set-intersection transcription of the triple definition."""
    n = len(A[0]) if A else NVARS
    S = set(A)
    cubes = {i for i in range(n) if tuple(DEGREE if k == i else 0
                                          for k in range(n)) in S}
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for l in range(j + 1, n):
                if {i, j, l} & cubes:
                    continue
                if {_tri(i, j, l, n), _sq(i, j, n), _sq(j, i, n),
                        _sq(i, l, n), _sq(l, i, n), _sq(j, l, n),
                        _sq(l, j, n)} & S:
                    continue
                values_of_p = [p for p in range(n)
                               if {_sq(i, p, n), _sq(j, p, n), _sq(l, p, n),
                                   _tri(i, j, p, n), _tri(i, l, p, n),
                                   _tri(j, l, p, n)} & S]
                if len(values_of_p) <= 2:
                    out.append((i, j, l))
    return out


def defects(A):
    """All singular pairs and triples of A, pairs first."""
    return [("pair", d) for d in singular_pairs(A)] + \
           [("triple", d) for d in singular_triples(A)]


def _is_singular_pair(S, cubes, i, j, n=NVARS):
    if i in cubes or j in cubes:
        return False
    if _sq(i, j, n) in S or _sq(j, i, n) in S:
        return False
    hits = sum(1 for p in range(n)
               if _sq(i, p, n) in S or _sq(j, p, n) in S
               or _tri(i, j, p, n) in S)
    return hits <= 1


def _is_singular_triple(S, cubes, i, j, l, n=NVARS):
    if i in cubes or j in cubes or l in cubes:
        return False
    if (_tri(i, j, l, n) in S or _sq(i, j, n) in S or _sq(j, i, n) in S
            or _sq(i, l, n) in S or _sq(l, i, n) in S
            or _sq(j, l, n) in S or _sq(l, j, n) in S):
        return False
    hits = sum(1 for p in range(n)
               if _sq(i, p, n) in S or _sq(j, p, n) in S or _sq(l, p, n) in S
               or _tri(i, j, p, n) in S or _tri(i, l, p, n) in S
               or _tri(j, l, p, n) in S)
    return hits <= 2


def resolution_menu(A, defect):
    """Every monomial of M whose addition alone removes the given defect
    (exhaustive falsification over the monomial universe)."""
    kind, idx = defect
    if defect not in defects(A):
        raise ValueError(f"defect {defect} not present")
    n = len(A[0]) if A else NVARS
    test = _is_singular_pair if kind == "pair" else _is_singular_triple
    menu = []
    S = set(A)
    cubes = cube_variables(A)
    for m in (MONOMIALS if n == NVARS else all_monomials(n)):
        if m in S:
            continue
        S.add(m)
        new_cubes = cubes | ({m.index(DEGREE)} if max(m) == DEGREE
                             else set())
        if not test(S, new_cubes, *idx, n):
            menu.append(m)
        S.remove(m)
    return menu


@dataclass(frozen=True)
class StructureProfile:
    cube_count: int
    longest_cycle: int
    cycle_support: frozenset


def structure_profile(A):
    """Cube count and longest cycle x_{i1}^2x_{i2}, ..., x_{il}^2x_{i1}
    among non-cube variables."""
    n = len(A[0]) if A else NVARS
    S = set(A)
    cubes = _cubes(A)
    noncube = [i for i in range(n) if i not in cubes]
    edges = {i: [j for j in noncube if j != i and _sq(i, j, n) in S]
             for i in noncube}
    best, support = 0, frozenset()

    def extend(path):
        nonlocal best, support
        for j in edges[path[-1]]:
            if j == path[0] and len(path) > best:
                best, support = len(path), frozenset(path)
            if j not in path:
                extend(path + [j])

    for start in noncube:
        extend([start])
    return StructureProfile(len(cubes), best, support)


def apply_permutation(sigma, A):
    """Relabel variables: sigma[i] is the new index of variable i."""
    out = []
    for m in A:
        e = [0] * len(m)
        for i, v in enumerate(m):
            e[sigma[i]] = v
        out.append(tuple(e))
    return monomial_set(out)


def canonical_under_permutation(A):
    """Lexicographically least relabeling of A over all variable
    permutations; returns (canonical set, permutation achieving it)."""
    n = len(A[0]) if A else NVARS
    best, best_sigma = None, None
    for sigma in permutations(range(n)):
        img = apply_permutation(sigma, A)
        if best is None or img < best:
            best, best_sigma = img, sigma
    return best, best_sigma
