"""Exact integer-matrix algebra and finite abelian group structure.

Smith/Hermite normal forms over Z with arbitrary-precision arithmetic,
cokernel computation, lattice membership, canonical invariant-factor
forms and the subgroup-embedding criterion for finite abelian groups.
"""

from dataclasses import dataclass, field
from math import gcd, prod


# ---------------------------------------------------------------------------
# matrices are lists of lists of Python ints (arbitrary precision)


def _copy(M):
    return [row[:] for row in M]


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _matmul(A, B):
    n, k = len(A), len(B)
    m = len(B[0]) if B else 0
    return [[sum(A[i][t] * B[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def smith_normal_form(M):
    """Return (U, S, V) with U*M*V = S, S diagonal with d_1 | d_2 | ...

    U and V are unimodular.  Pivoting always selects the entry of minimal
    absolute value in the remaining block, which keeps intermediate entries
    small on the matrices arising here.
    """
    S = _copy(M)
    rows = len(S)
    cols = len(S[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in S:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):  # row dst += c * row src
        S[dst] = [a + c * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a + c * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, c):  # col dst += c * col src
        for r in S:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]

    def negate_row(i):
        S[i] = [-a for a in S[i]]
        U[i] = [-a for a in U[i]]

    t = 0
    while t < min(rows, cols):
        # find pivot of minimal absolute value in the block [t:, t:]
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if S[i][j] != 0 and (piv is None
                                     or abs(S[i][j]) < abs(S[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        # clear row and column t
        dirty = True
        while dirty:
            dirty = False
            for i in range(t + 1, rows):
                if S[i][t] != 0:
                    q = S[i][t] // S[t][t]
                    add_row(t, i, -q)
                    if S[i][t] != 0:  # remainder smaller than pivot
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, cols):
                if S[t][j] != 0:
                    q = S[t][j] // S[t][t]
                    add_col(t, j, -q)
                    if S[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
        # enforce divisibility of the remaining block by the pivot
        if S[t][t] < 0:
            negate_row(t)
        bad = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if S[i][j] % S[t][t] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            add_row(bad, t, 1)
            continue  # redo elimination at the same t
        t += 1
    for i in range(min(rows, cols)):
        if S[i][i] < 0:
            negate_row(i)
    return U, S, V


def hermite_normal_form(M):
    """Row-style Hermite normal form (no column operations)."""
    H = [row[:] for row in M if any(row)]
    if not H:
        return []
    cols = len(H[0])
    out = []
    col = 0
    while H and col < cols:
        # reduce column `col` by gcd of its entries
        while True:
            nz = [r for r in H if r[col] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(r[col]))
            if piv[col] < 0:
                piv[:] = [-a for a in piv]
            done = True
            for r in H:
                if r is not piv and r[col] != 0:
                    q = r[col] // piv[col]
                    r[:] = [a - q * b for a, b in zip(r, piv)]
                    done = False
            if done:
                H.remove(piv)
                for prev in out:
                    q = prev[col] // piv[col]
                    prev[:] = [a - q * b for a, b in zip(prev, piv)]
                out.append(piv)
                break
        H = [r for r in H if any(r)]
        col += 1
    return out


def hermite_reduces_to_zero(H, v):
    """Reduce v against a precomputed Hermite form; True iff v reduces
    to the zero vector (i.e. lies in the lattice)."""
    w = list(v)
    for row in H:
        col = next(i for i, a in enumerate(row) if a)
        if w[col] % row[col] == 0:
            q = w[col] // row[col]
            if q:
                w = [a - q * b for a, b in zip(w, row)]
    return not any(w)


def lattice_contains(L, v):
    """True iff integer vector v lies in the integer row span of L."""
    if L and any(len(row) != len(v) for row in L):
        raise ValueError("dimension mismatch")
    return hermite_reduces_to_zero(hermite_normal_form(L), v)


# ---------------------------------------------------------------------------
# finite(ly generated) abelian groups


@dataclass(frozen=True)
class AbelianGroup:
    """Invariant-factor presentation of a finitely generated abelian group.

    invariant_factors is the chain d_1 | d_2 | ... with every d_i >= 2;
    generators, when present, are integer vectors whose images generate
    the corresponding cyclic factors.
    """
    invariant_factors: tuple
    free_rank: int = 0
    generators: tuple = field(default=(), compare=False)

    @property
    def order(self):
        if self.free_rank:
            raise ValueError("infinite group has no order")
        return prod(self.invariant_factors, start=1)

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1

    def __str__(self):
        parts = [f"Z/{d}" for d in self.invariant_factors]
        parts += ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "1"


def cokernel_structure(M, ambient_rank):
    """Structure of Z^ambient_rank / (integer row span of M).

    Returns an AbelianGroup whose generators are lifts in Z^ambient_rank:
    for each invariant factor d_i the corresponding dual-basis vector is
    column i of the SNF transform V.
    """
    if not M:
        return AbelianGroup((), ambient_rank)
    if any(len(row) != ambient_rank for row in M):
        raise ValueError("ambient rank mismatch")
    _, S, V = smith_normal_form(M)
    diag = [S[i][i] for i in range(min(len(S), ambient_rank))]
    rank = sum(1 for d in diag if d != 0)
    factors, gens = [], []
    for i, d in enumerate(diag):
        if d > 1:
            factors.append(d)
            gens.append(tuple(V[r][i] for r in range(ambient_rank)))
    return AbelianGroup(tuple(factors), ambient_rank - rank, tuple(gens))


def primary_parts(group):
    """Map prime -> descending exponent list (partition) of the p-part."""
    parts = {}
    for d in group.invariant_factors:
        for p in _prime_factors(d):
            e = 0
            while d % p == 0:
                d //= p
                e += 1
            parts.setdefault(p, []).append(e)
    for p in parts:
        parts[p].sort(reverse=True)
    return parts


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def canonical_group(factors):
    """Canonical invariant-factor chain of ⊕ Z/f over the given multiset."""
    factors = [f for f in factors if f > 1]
    if any(f < 1 for f in factors):
        raise ValueError("factors must be >= 1")
    primary = {}
    for f in factors:
        for p in _prime_factors(f):
            e = 0
            while f % p == 0:
                f //= p
                e += 1
            primary.setdefault(p, []).append(e)
    width = max((len(v) for v in primary.values()), default=0)
    chain = []
    for k in range(width):
        d = 1
        for p, exps in primary.items():
            exps = sorted(exps, reverse=True)
            if k < len(exps):
                d *= p ** exps[k]
        chain.append(d)
    return AbelianGroup(tuple(reversed(chain)))


def embeds(G, H):
    """True iff an injective homomorphism G -> H exists (both finite).

    Criterion: for every prime p, the sorted p-exponent sequence of G is
    dominated componentwise by that of H (Young-diagram containment).
    """
    if G.free_rank or H.free_rank:
        raise ValueError("embedding test requires finite groups")
    gp, hp = primary_parts(G), primary_parts(H)
    for p, gexps in gp.items():
        hexps = hp.get(p, [])
        if len(gexps) > len(hexps):
            return False
        if any(g > h for g, h in zip(gexps, hexps)):
            return False
    return True


def isomorphic(G, H):
    return (canonical_group(G.invariant_factors)
            == canonical_group(H.invariant_factors)
            and G.free_rank == H.free_rank)


# ---------------------------------------------------------------------------
# brute-force embedding oracle (test instrument for small groups)


def _elements(factors):
    els = [()]
    for d in factors:
        els = [e + (r,) for e in els for r in range(d)]
    return els


def embeds_bruteforce(G, H):
    """Search for an injective homomorphism by backtracking over generator
    images, memoizing failed partial subgroups.  Intended for groups of
    order <= 64 only (test oracle for embeds)."""
    gf = list(G.invariant_factors)
    hf = list(H.invariant_factors)
    if not gf:
        return True
    if not hf:
        return False
    zero = tuple([0] * len(hf))
    helems = _elements(hf)

    def order_of(e):
        k = 1
        for d, r in zip(hf, e):
            if r:
                o = d // gcd(d, r)
                k = k * o // gcd(k, o)
        return k

    by_order = {}
    for e in helems:
        by_order.setdefault(order_of(e), []).append(e)

    def extend_span(span, img):
        # span is a subgroup, img an element of order o: the join is the
        # union of the cosets span + k*img, k = 0..o-1
        o = order_of(img)
        out = set(span)
        mult = zero
        for _ in range(o):
            mult = tuple((a + b) % d for a, b, d in zip(mult, img, hf))
            for s in span:
                out.add(tuple((a + b) % d for a, b, d in zip(s, mult, hf)))
        return frozenset(out)

    failed = set()

    def rec(i, span):
        if i == len(gf):
            return True
        key = (i, span)
        if key in failed:
            return False
        target = prod(gf[:i + 1], start=1)
        for cand in by_order.get(gf[i], ()):
            new_span = extend_span(span, cand)
            if len(new_span) == target and rec(i + 1, new_span):
                return True
        failed.add(key)
        return False

    # generators of G listed largest factor first finds failures sooner
    gf.sort(reverse=True)
    return rec(0, frozenset([zero]))
