"""Arrangements of ideal type and the reduction to a maximal parabolic subsystem.

The classification assigns each ideal one tag, checked in this order:

* ``reducible``: the arrangement splits as a product,
* ``condition_met``: some maximal standard parabolic subsystem has a boundary
  (its complement inside the ideal complement) that is a chain, and every
  pair of boundary roots is dependent with a root of the subsystem,
* ``penultimate_theta`` / ``empty_ideal``: the ideal is {theta} or empty,
* ``unresolved`` otherwise.
"""
from collections import namedtuple

from .arrangement import from_roots, is_modular_coatom, popcount
from .ideals import Ideal, enumerate_ideals, ideal_exponents, height_ideal
from .linalg import primitive

ConditionWitness = namedtuple("ConditionWitness", "phi0 boundary_roots dependence_triples")
Classification = namedtuple("Classification", "tag witness")
Reduction = namedtuple("Reduction", "localized modular_flat new_exponent")

TAGS = ("reducible", "condition_met", "penultimate_theta", "empty_ideal", "unresolved")


def arrangement_of_ideal_type(rs, ideal):
    return from_roots(rs, ideal.complement)


def _plane_key(u, v):
    n = len(u)
    return primitive(tuple(u[i] * v[j] - u[j] * v[i] for i in range(n) for j in range(i + 1, n)))


class _Planes:
    """For each pair of positive roots, the set of roots in their plane."""

    def __init__(self, rs):
        coeffs = [r.simple_coeffs for r in rs.positive_roots]
        members = {}
        pair_key = {}
        for a in range(rs.N):
            for b in range(a + 1, rs.N):
                k = _plane_key(coeffs[a], coeffs[b])
                pair_key[(a, b)] = k
                members[k] = members.get(k, 0) | (1 << a) | (1 << b)
        self.pair_key = pair_key
        self.members = members

    def plane(self, a, b):
        if a > b:
            a, b = b, a
        return self.members[self.pair_key[(a, b)]]


_PLANES = {}


def planes(rs):
    if rs.name not in _PLANES:
        _PLANES[rs.name] = _Planes(rs)
    return _PLANES[rs.name]


def check_condition(rs, ideal, phi0):
    """Witness for the chain-and-dependence condition, or None."""
    comp = ideal.complement
    sub = phi0.positive_roots_mask
    bnd = comp & ~sub
    if not bnd:
        return None
    boundary = sorted(rs.members(bnd), key=lambda k: rs.heights[k])
    for a, b in zip(boundary, boundary[1:]):
        if rs.heights[a] == rs.heights[b] or not rs.precedes(a, b):
            return None
    pl = planes(rs)
    triples = {}
    for i, a in enumerate(boundary):
        for b in boundary[i + 1:]:
            cands = pl.plane(a, b) & sub
            if not cands:
                return None
            inside = cands & comp
            pick = inside if inside else cands
            triples[(a, b)] = (pick & -pick).bit_length() - 1
    return ConditionWitness(phi0, boundary, triples)


def condition_subsystems(rs, ideal):
    """All maximal standard parabolics for which the condition holds."""
    out = []
    for phi0 in rs.maximal_parabolics():
        w = check_condition(rs, ideal, phi0)
        if w is not None:
            out.append(w)
    return out


def find_condition_subsystem(rs, ideal):
    for phi0 in rs.maximal_parabolics():
        w = check_condition(rs, ideal, phi0)
        if w is not None:
            return w
    return None


def reduce_via_condition(rs, ideal, witness):
    """Localize at the subsystem; checks the coatom is modular of corank one."""
    arr = arrangement_of_ideal_type(rs, ideal)
    sub = witness.phi0.positive_roots_mask
    flat = 0
    for h, k in enumerate(arr.labels):
        if (sub >> k) & 1:
            flat |= 1 << h
    if arr.closure(flat) != flat:
        raise AssertionError("subsystem roots do not form a flat of the arrangement")
    r0 = arr.rank_of(flat)
    if r0 != arr.rank - 1:
        raise AssertionError(f"localization has rank {r0}, expected {arr.rank - 1}")
    if not is_modular_coatom(arr, flat):
        raise AssertionError("localization is not at a modular coatom")
    for (a, b), g in witness.dependence_triples.items():
        if not ideal.complement >> g & 1:
            raise AssertionError("dependence root outside the ideal complement")
    new = len(arr) - popcount(flat)
    top = witness.boundary_roots[-1]
    if new != len(witness.boundary_roots) or new != rs.heights[top]:
        raise AssertionError("boundary size, height and new exponent disagree")
    return Reduction(arr.subarrangement(flat), flat, new)


def parabolic_ideal(rs, ideal, phi0):
    """The ideal of the subsystem's root poset cut out by the ideal.

    Returned as a mask on the parent's roots (members of the subsystem only).
    """
    return ideal.members & phi0.positive_roots_mask


def ideal_reducible(rs, ideal):
    """Product test specialised to ideal type.

    The simple roots in the complement form a basis, and the expansion of any
    other complement root in that basis is its simple-root support, so the
    irreducible factors are the classes of simple roots linked by supports.
    """
    comp = ideal.complement
    simples = [i for i, k in enumerate(rs.simple_indices) if (comp >> k) & 1]
    empty = rs.rank - len(simples)
    if not simples:
        return empty > 1
    parent = {i: i for i in simples}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for k in rs.members(comp):
        sup = [i for i, c in enumerate(rs.positive_roots[k].simple_coeffs) if c]
        r0 = find(sup[0])
        for i in sup[1:]:
            ri = find(i)
            if ri != r0:
                parent[ri] = r0
    ncomp = len({find(i) for i in simples})
    return ncomp + empty > 1


def classify_ideal(rs, ideal):
    if ideal_reducible(rs, ideal):
        return Classification("reducible", None)
    w = find_condition_subsystem(rs, ideal)
    if w is not None:
        return Classification("condition_met", w)
    if ideal.members == 1 << rs.highest:
        return Classification("penultimate_theta", None)
    if ideal.members == 0:
        return Classification("empty_ideal", None)
    return Classification("unresolved", None)


def classification_counts(rs):
    counts = dict.fromkeys(TAGS, 0)
    for I in enumerate_ideals(rs):
        counts[classify_ideal(rs, I).tag] += 1
    total = sum(counts.values())
    return {"all": total, "classified": total - counts["unresolved"], "tags": counts}


def witness_record(rs, w):
    if w is None:
        return None
    return {"phi0": w.phi0.name,
            "boundary": [rs.format_root(k) for k in w.boundary_roots]}


def classification_record(rs, ideal):
    c = classify_ideal(rs, ideal)
    rec = {"type": rs.dynkin_type, "rank": rs.rank,
           "ideal": ideal.generator_strings(), "tag": c.tag,
           "phi0": None, "boundary": None,
           "exponents": ideal_exponents(ideal).values}
    if c.witness is not None:
        rec.update(witness_record(rs, c.witness))
    return rec


def height_table(rs, t):
    """Rows for the principal ideals generated by roots of height t.

    Each row is (generator, list of (phi0 name, boundary strings)) listing
    every maximal standard parabolic that works; an empty list means none.
    """
    rows = []
    for k in rs.members(rs.height_masks.get(t, 0)):
        I = Ideal(rs, rs.up[k])
        ws = condition_subsystems(rs, I)
        rows.append((rs.format_root(k),
                     [(w.phi0.name, [rs.format_root(b) for b in w.boundary_roots]) for w in ws]))
    return rows


def table_counts_by_height(rs, tmax=None):
    """Number of ideals contained in the height ideal I_t for t = 1, 2, ..."""
    from .ideals import count_ideals
    top = rs.coxeter_number - 1 if tmax is None else tmax
    return {t: count_ideals(rs, "contained_in_It", t) for t in range(1, top + 1)}
