"""Upper order ideals in the positive roots, their complements and exponents."""
from fractions import Fraction
from math import comb, prod
from collections import namedtuple

from .rootsys import dual_partition

IdealExponents = namedtuple("IdealExponents", "values s")


class Ideal:
    """An upward-closed set of positive roots stored as a bitset."""

    __slots__ = ("rs", "members")

    def __init__(self, rs, members):
        self.rs = rs
        self.members = members

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.rs is other.rs and self.members == other.members

    def __hash__(self):
        return hash((self.rs.name, self.members))

    def __repr__(self):
        return f"Ideal({self.serialize()})"

    @property
    def complement(self):
        return self.rs.full & ~self.members

    def __len__(self):
        return bin(self.members).count("1")

    def is_upward_closed(self):
        rs = self.rs
        return all(rs.up[k] & ~self.members == 0 for k in rs.members(self.members))

    def generators(self):
        """Minimal elements, in root order."""
        rs = self.rs
        out = []
        for k in rs.members(self.members):
            if not any(j != k and (self.members >> j) & 1 for j in rs.down_covers[k]):
                out.append(k)
        return out

    def generator_strings(self):
        return [self.rs.format_root(k) for k in self.generators()]

    def serialize(self):
        return f"{self.rs.name}:[{','.join(self.generator_strings())}]"

    def contains(self, k):
        return bool((self.members >> k) & 1)


def ideal_closure(rs, generators):
    m = 0
    for g in generators:
        m |= rs.up[g]
    return Ideal(rs, m)


def height_ideal(rs, t):
    """All roots of height at least t."""
    m = 0
    for h, mask in rs.height_masks.items():
        if h >= t:
            m |= mask
    return Ideal(rs, m)


def parse_ideal(rs, text):
    """Parse '[g1,g2,...]', 'I3' (height ideal) or 'empty'/'all'."""
    s = text.strip()
    if s.upper().startswith(rs.name + ":"):
        s = s[len(rs.name) + 1:]
    if len(s) > 1 and s[0] in "Ii" and s[1:].isdigit():
        return height_ideal(rs, int(s[1:]))
    if s.lower() in ("theta", "{theta}"):
        return ideal_closure(rs, [rs.highest])
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"ideal spec must look like [g1,g2,...], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return Ideal(rs, 0)
    gens = []
    depth = 0
    token = ""
    for ch in body:
        if ch == "," and depth == 0:
            gens.append(token)
            token = ""
            continue
        depth += ch == "("
        depth -= ch == ")"
        token += ch
    gens.append(token)
    idx = []
    for g in gens:
        if not g.strip():
            raise ValueError(f"empty generator in {text!r}")
        idx.append(rs.parse_root(g.strip()))
    return ideal_closure(rs, idx)


def _antichain_ideals(rs):
    N = rs.N
    up = rs.up
    out = []

    def rec(start, m):
        out.append(m)
        for k in range(start, N):
            if not (m >> k) & 1:
                # roots are sorted by height, so a later root can only sit
                # above an earlier one; being outside m means incomparable
                rec(k + 1, m | up[k])

    rec(0, 0)
    return out


_IDEAL_CACHE = {}


def all_ideal_masks(rs):
    key = rs.name
    if key not in _IDEAL_CACHE:
        _IDEAL_CACHE[key] = sorted(_antichain_ideals(rs))
    return _IDEAL_CACHE[key]


def enumerate_ideals(rs, filter="all", t=None):
    """Yield ideals in increasing order of their membership bitset.

    filter is 'all', 'strictly_positive' or 'contained_in_It' (with t).
    """
    simples = rs.mask(rs.simple_indices)
    if filter == "contained_in_It":
        if t is None:
            raise ValueError("contained_in_It needs t")
        allowed = height_ideal(rs, t).members
    for m in all_ideal_masks(rs):
        if filter == "strictly_positive" and m & simples:
            continue
        if filter == "contained_in_It" and m & ~allowed:
            continue
        if filter not in ("all", "strictly_positive", "contained_in_It"):
            raise ValueError(f"unknown filter {filter!r}")
        yield Ideal(rs, m)


def count_ideals(rs, filter="all", t=None):
    return sum(1 for _ in enumerate_ideals(rs, filter, t))


def height_partition(ideal):
    return ideal.rs.height_counts(ideal.complement)


def ideal_exponents(ideal):
    lam = height_partition(ideal)
    return IdealExponents(dual_partition(lam), lam[0] if lam else 0)


def predicted_counts(rs):
    """Product formulas for the number of ideals and of strictly positive ones."""
    e = rs.weyl_exponents()
    h = rs.coxeter_number
    w = prod(x + 1 for x in e)
    allc = Fraction(prod(h + x + 1 for x in e), w)
    pos = Fraction(prod(h + x - 1 for x in e), w)
    assert allc.denominator == 1 and pos.denominator == 1
    out = {"all": int(allc), "strictly_positive": int(pos)}
    closed = classical_closed_forms(rs.dynkin_type, rs.rank)
    if closed is not None:
        if closed != out:
            raise AssertionError(f"closed forms {closed} disagree with product formula {out}")
    return out


def classical_closed_forms(t, n):
    if t == "A":
        return {"all": comb(2 * n + 2, n + 1) // (n + 2),
                "strictly_positive": comb(2 * n, n) // (n + 1)}
    if t in "BC":
        return {"all": comb(2 * n, n), "strictly_positive": comb(2 * n - 1, n - 1)}
    if t == "D":
        return {"all": comb(2 * n - 1, n) + comb(2 * n - 2, n),
                "strictly_positive": comb(2 * n - 2, n) + comb(2 * n - 3, n)}
    return None
