"""Rank-generating function of the regions of an ideal-type arrangement.

Regions are counted through the sets N(w) ∩ complement for w in W, graded
by size; the base region (the one containing the dominant chamber) is the
empty set.  Two independent oracles are provided: direct enumeration of
the subsets of the complement that are closed with closed complement, and
a walk over the W-orbit of an interior point of the dominant chamber.
"""
from collections import namedtuple
from itertools import combinations

from .arrangement import region_count
from .idealtype import arrangement_of_ideal_type
from .ideals import ideal_exponents
from .rootsys import DEFAULT_WEYL_CAP

FactorizationCheck = namedtuple("FactorizationCheck", "holds lhs rhs_exponents")
FiberCheck = namedtuple("FiberCheck", "zeta0 fiber_degree product_matches fiber_is_chain")


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def t_integer(m):
    """1 + t + ... + t^(m-1)."""
    return [1] * m


def trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def divides(d, p):
    """Exact synthetic division test of p by the monic-leading polynomial d."""
    p, d = trim(p), trim(d)
    if len(d) > len(p):
        return not any(p)
    rem = list(p)
    lead = d[-1]
    for k in range(len(p) - len(d), -1, -1):
        q, r = divmod(rem[k + len(d) - 1], lead)
        if r:
            return False
        for i, c in enumerate(d):
            rem[k + i] -= q * c
    return not any(rem)


def _by_size(sets):
    sizes = [bin(s).count("1") for s in sets]
    out = [0] * (max(sizes) + 1)
    for k in sizes:
        out[k] += 1
    return out


def weyl_type_sets(rs, ideal, cap=DEFAULT_WEYL_CAP):
    comp = ideal.complement
    return {inv & comp for inv in rs.weyl_elements(cap)}


def poincare_poly(rs, ideal, cap=DEFAULT_WEYL_CAP):
    """Coefficients (lowest degree first) of the region rank-generating function."""
    return _by_size(weyl_type_sets(rs, ideal, cap))


def _sum_triples(rs, mask):
    members = rs.members(mask)
    out = []
    for a, b in combinations(members, 2):
        c = rs.add(a, b)
        if c is not None and (mask >> c) & 1:
            out.append((1 << a | 1 << b, 1 << c))
    return out


def brute_force_poincare(rs, ideal, max_size=20):
    """Enumerate subsets S of the complement with S and its complement both closed
    under sums that stay in the complement."""
    comp = ideal.complement
    members = rs.members(comp)
    if len(members) > max_size:
        raise ValueError(f"{len(members)} roots is too many for brute force")
    triples = _sum_triples(rs, comp)
    counts = [0] * (len(members) + 1)
    for sub in range(1 << len(members)):
        S = 0
        for i, k in enumerate(members):
            if (sub >> i) & 1:
                S |= 1 << k
        T = comp & ~S
        ok = True
        for ab, c in triples:
            if (S & ab) == ab and not S & c:
                ok = False
                break
            if (T & ab) == ab and not T & c:
                ok = False
                break
        if ok:
            counts[bin(S).count("1")] += 1
    return trim(counts)


def geometric_poincare(rs, ideal, cap=DEFAULT_WEYL_CAP):
    """Regions as distinct sign vectors of the W-orbit of twice the Weyl vector,
    graded by the number of separating hyperplanes from the base region."""
    comp = rs.members(ideal.complement)
    coords = [r.coords for r in rs.positive_roots]
    simple = rs.simple_vectors
    norms = [sum(x * x for x in a) for a in simple]

    def ip(u, v):
        return sum(x * y for x, y in zip(u, v))

    rho2 = tuple(sum(c[i] for c in coords) for i in range(rs.dim))
    seen = {rho2}
    layer = [rho2]
    signs = set()
    while layer:
        for v in layer:
            signs.add(tuple(ip(coords[k], v) < 0 for k in comp))
        nxt = []
        for v in layer:
            for a, nn in zip(simple, norms):
                q, r = divmod(2 * ip(v, a), nn)
                assert r == 0
                w = tuple(x - q * y for x, y in zip(v, a))
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        if len(seen) > cap:
            raise RuntimeError("orbit exceeds the cap")
        layer = nxt
    counts = [0] * (len(comp) + 1)
    for s in signs:
        counts[sum(s)] += 1
    return trim(counts)


def exponent_product(values):
    p = [1]
    for m in values:
        p = poly_mul(p, t_integer(m + 1))
    return p


def factorization_check(rs, ideal, cap=DEFAULT_WEYL_CAP):
    lhs = poincare_poly(rs, ideal, cap)
    ex = ideal_exponents(ideal)
    return FactorizationCheck(trim(lhs) == trim(exponent_product(ex.values)), lhs, ex)


def zaslavsky_crosscheck(rs, ideal, cap=DEFAULT_WEYL_CAP):
    return sum(poincare_poly(rs, ideal, cap)) == region_count(arrangement_of_ideal_type(rs, ideal))


def modular_fiber_factorization(rs, ideal, witness, cap=DEFAULT_WEYL_CAP):
    """Compare the polynomial with (polynomial of the localization) x [e+1]_t.

    The localization is the ideal-type arrangement of the parabolic
    subsystem, so its polynomial comes from the parabolic subgroup.  Also
    checks that the regions lying over the base region of the localization
    form a chain of e+1 regions under inclusion of separating sets.
    """
    comp = ideal.complement
    sub = witness.phi0.positive_roots_mask
    comp0 = comp & sub
    zeta0 = _by_size({inv & comp0 for inv in
                      rs.weyl_elements(cap, simple_subset=witness.phi0.simple_subset)})
    e = bin(comp).count("1") - bin(comp0).count("1")
    sets = weyl_type_sets(rs, ideal, cap)
    full = _by_size(sets)
    matches = trim(full) == trim(poly_mul(zeta0, t_integer(e + 1)))
    fiber = sorted((S for S in sets if not S & comp0), key=lambda s: bin(s).count("1"))
    chain = len(fiber) == e + 1 and all(a & ~b == 0 for a, b in zip(fiber, fiber[1:]))
    return FiberCheck(zeta0, e, matches, chain)
