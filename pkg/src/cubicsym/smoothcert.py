"""Exact sparse polynomials, Buchberger Groebner bases over prime fields,
and Jacobian-criterion smoothness certificates.

A polynomial is a dict {exponent tuple: coefficient} with no zero
coefficients; coefficients live in F_p (p > 0) or in Z/Q (p == 0).
Term order is graded reverse lexicographic throughout.
"""

import random
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product


# ---------------------------------------------------------------------------
# term order


def grevlex_key(e):
    """Sort key realizing graded reverse lexicographic order."""
    return (sum(e),) + tuple(-e[i] for i in range(len(e) - 1, -1, -1))


def leading_monomial(f):
    return max(f, key=grevlex_key)


# ---------------------------------------------------------------------------
# arithmetic


def _inv(c, p):
    return pow(c, p - 2, p) if p else Fraction(1, 1) / c


def poly_add(f, g, p):
    out = dict(f)
    for m, c in g.items():
        v = out.get(m, 0) + c
        if p:
            v %= p
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def poly_scale(f, c, p):
    if not c:
        return {}
    if p:
        return {m: (a * c) % p for m, a in f.items()}
    return {m: a * c for m, a in f.items()}


def term_mul(f, mono, c, p):
    """Multiply f by c * x^mono."""
    out = {}
    for m, a in f.items():
        v = a * c
        if p:
            v %= p
        if v:
            out[tuple(x + y for x, y in zip(m, mono))] = v
    return out


def poly_mul(f, g, p):
    out = {}
    for m, c in g.items():
        out = poly_add(out, term_mul(f, m, c, p), p)
    return out


def reduce_mod_p(f, p):
    out = {m: c % p for m, c in f.items()}
    return {m: c for m, c in out.items() if c}


def partials(F, nvars=None):
    """Formal partial derivatives of F."""
    n = nvars or len(next(iter(F), ()))
    outs = []
    for i in range(n):
        d = {}
        for m, c in F.items():
            if m[i]:
                e = list(m)
                e[i] -= 1
                d[tuple(e)] = c * m[i]
        outs.append(d)
    return outs


# ---------------------------------------------------------------------------
# Buchberger


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def normal_form(f, basis, p):
    """Remainder of f on division by basis (full reduction)."""
    f = dict(f)
    out = {}
    lms = [(leading_monomial(g), g) for g in basis if g]
    while f:
        m = leading_monomial(f)
        c = f[m]
        for lm, g in lms:
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                factor = c * _inv(g[lm], p)
                if p:
                    factor %= p
                f = poly_add(f, term_mul(g, q, -factor if not p else
                                         (p - factor) % p, p), p)
                break
        else:
            out[m] = c
            del f[m]
    return out


def s_polynomial(f, g, p):
    lf, lg = leading_monomial(f), leading_monomial(g)
    lcm = tuple(max(a, b) for a, b in zip(lf, lg))
    cf = _inv(f[lf], p)
    cg = _inv(g[lg], p)
    if p:
        cf, cg = cf % p, cg % p
    a = term_mul(f, tuple(x - y for x, y in zip(lcm, lf)), cf, p)
    b = term_mul(g, tuple(x - y for x, y in zip(lcm, lg)), cg, p)
    return poly_add(a, poly_scale(b, (p - 1) if p else -1, p), p)


def groebner(gens, p):
    """Reduced Groebner basis (grevlex) of the ideal generated by gens."""
    G = [dict(g) for g in gens if g]
    pairs = [(i, j) for i in range(len(G)) for j in range(i)]
    while pairs:
        # normal selection: smallest lcm degree first
        def lcm_deg(pr):
            a = leading_monomial(G[pr[0]])
            b = leading_monomial(G[pr[1]])
            return sum(max(x, y) for x, y in zip(a, b))
        pairs.sort(key=lcm_deg, reverse=True)
        i, j = pairs.pop()
        la, lb = leading_monomial(G[i]), leading_monomial(G[j])
        if all(x == 0 or y == 0 for x, y in zip(la, lb)):
            continue  # coprime leading terms: S-poly reduces to zero
        r = normal_form(s_polynomial(G[i], G[j], p), G, p)
        if r:
            G.append(r)
            pairs.extend((len(G) - 1, k) for k in range(len(G) - 1))
    # minimalize: drop generators whose lead is divisible by another lead
    G.sort(key=lambda g: grevlex_key(leading_monomial(g)))
    minimal = []
    for g in G:
        lm = leading_monomial(g)
        if not any(_divides(leading_monomial(h), lm) for h in minimal):
            minimal.append(g)
    # auto-reduce and make monic
    reduced = []
    for k, g in enumerate(minimal):
        others = minimal[:k] + minimal[k + 1:]
        r = normal_form(g, others, p)
        c = _inv(r[leading_monomial(r)], p)
        reduced.append(poly_scale(r, c % p if p else c, p))
    reduced.sort(key=lambda g: grevlex_key(leading_monomial(g)))
    return reduced


def affine_dimension(basis, nvars):
    """Krull dimension of the affine zero set of a reduced basis: the
    largest variable subset meeting no leading monomial's support.
    Returns -1 for the unit ideal."""
    if any(sum(leading_monomial(g)) == 0 for g in basis):
        return -1
    supports = [frozenset(i for i, e in enumerate(leading_monomial(g)) if e)
                for g in basis]
    best = -1
    for bits in product((False, True), repeat=nvars):
        S = {i for i, b in enumerate(bits) if b}
        if len(S) <= best:
            continue
        if all(not sup <= S for sup in supports):
            best = len(S)
    return best


# ---------------------------------------------------------------------------
# smoothness certificates


@dataclass(frozen=True)
class SmoothnessVerdict:
    status: str  # "CertifiedSmooth" | "SingularModulo" | "Inconclusive"
    primes: tuple = ()
    witness: tuple = None

    def __bool__(self):
        return self.status == "CertifiedSmooth"


def is_smooth_mod_p(F, p):
    """Jacobian criterion over F_p: smooth iff the ideal of F and its
    partials has affine dimension 0 (the cone origin only)."""
    if p in (2, 3) or p < 2:
        raise ValueError(f"invalid certification prime {p}")
    F = reduce_mod_p(F, p)
    if not F:
        raise ValueError("zero polynomial mod p")
    n = len(next(iter(F)))
    gens = [F] + [g for g in partials(F, n) if g]
    dim = affine_dimension(groebner(gens, p), n)
    if dim == 0:
        return SmoothnessVerdict("CertifiedSmooth", (p,))
    witness = None
    if p <= 7:
        pts = singular_points_bruteforce(F, p)
        witness = pts[0] if pts else None
    return SmoothnessVerdict("SingularModulo", (p,), witness)


def certify_over_Q(F, primes):
    """Certify smoothness over Q through prime reductions.

    One certifying prime is sound (smooth mod p implies nonvanishing
    discriminant).  Singularity is only asserted when a witness point
    lifts to an exact rational singular point; otherwise Inconclusive.
    """
    if not primes:
        raise ValueError("no primes given")
    tried = []
    witness = None
    for p in primes:
        v = is_smooth_mod_p(F, p)
        if v:
            return v
        tried.append(p)
        if v.witness and witness is None and _witness_lifts(F, v.witness):
            witness = v.witness
    if witness:
        return SmoothnessVerdict("SingularModulo", tuple(tried), witness)
    return SmoothnessVerdict("Inconclusive", tuple(tried))


def _witness_lifts(F, point):
    """Check a mod-p singular point by exact integer substitution (entries
    of the point are lifted as given)."""
    n = len(point)
    for g in [F] + partials(F, n):
        val = sum(c * _eval_mono(m, point) for m, c in g.items())
        if val != 0:
            return False
    return True


def _eval_mono(m, point):
    v = 1
    for e, x in zip(m, point):
        v *= x ** e
    return v


def singular_points_bruteforce(F, p):
    """All projective F_p-points where F and its partials vanish, by
    exhaustive scan; independent oracle for is_smooth_mod_p (p <= 7)."""
    if p > 7:
        raise ValueError("brute force restricted to p <= 7")
    F = reduce_mod_p(F, p)
    if not F:
        raise ValueError("zero polynomial mod p")
    n = len(next(iter(F)))
    gens = [F] + partials(F, n)
    gens = [reduce_mod_p(g, p) for g in gens]
    found = []
    for lead in range(n):
        # representatives: zeros before position `lead`, 1 at it
        for tail in product(range(p), repeat=n - lead - 1):
            pt = (0,) * lead + (1,) + tail
            if all(sum(c * _eval_mono(m, pt) for m, c in g.items()) % p == 0
                   for g in gens):
                found.append(pt)
    return found


def generic_member(S, p, seed):
    """F = sum of a_m * m with a_m uniform in F_p \\ {0}; deterministic
    under the seed."""
    if not S:
        raise ValueError("empty monomial set")
    rng = random.Random(repr(seed))
    return {m: rng.randrange(1, p) for m in S}


# ---------------------------------------------------------------------------
# text grammar (appendix-style): integer coefficients, + - * ^, x0..x5


def parse_polynomial(text, nvars=6):
    text = text.split("#")[0].strip()
    if not text:
        return {}
    text = text.replace("-", "+-")
    poly = {}
    for term in text.split("+"):
        term = term.strip()
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:].strip()
        coeff = 1
        exps = [0] * nvars
        for factor in term.split("*"):
            factor = factor.strip()
            m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if m:
                i = int(m.group(1))
                if i >= nvars:
                    raise ValueError(f"variable index out of range: x{i}")
                exps[i] += int(m.group(2) or 1)
            elif re.fullmatch(r"\d+", factor):
                coeff *= int(factor)
            else:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
        key = tuple(exps)
        poly[key] = poly.get(key, 0) + sign * coeff
    return {m: c for m, c in poly.items() if c}


def format_polynomial(poly):
    from .cubicdomain import format_monomial
    if not poly:
        return "0"
    terms = []
    for m in sorted(poly, key=grevlex_key, reverse=True):
        c = poly[m]
        body = format_monomial(m) if any(m) else "1"
        mag = body if abs(c) == 1 and any(m) else f"{abs(c)}*{body}"
        terms.append(("- " if c < 0 else "+ ") + mag)
    s = " ".join(terms)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]
