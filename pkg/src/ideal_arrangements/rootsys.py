"""Irreducible reduced root systems in Bourbaki coordinates.

Roots are stored twice: as ambient integer coordinates (E and F types are
scaled by 2 so that everything is integral) and as coefficient vectors over
the simple roots.  Positive roots are indexed by their position in the
(height, ambient coordinates) order, and sets of roots are Python ints used
as bitsets over that index.
"""
from collections import namedtuple
from math import prod

from .linalg import primitive

Root = namedtuple("Root", "coords simple_coeffs height")

WeylElement = namedtuple("WeylElement", "inversion_set length")

DEFAULT_WEYL_CAP = 10 ** 6


class WeylBudgetError(RuntimeError):
    def __init__(self, order, cap):
        super().__init__(f"Weyl group has {order} elements, above the traversal cap of {cap}")
        self.order = order
        self.cap = cap


def _e(dim, *terms):
    v = [0] * dim
    for i, c in terms:
        v[i - 1] += c
    return v


def _simple_roots(t, n):
    """Simple roots as integer vectors together with the coordinate scale."""
    if t == "A":
        if n < 1:
            raise ValueError("A_n needs n >= 1")
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(1, n + 1)], 1
    if t in "BC":
        if n < 2:
            raise ValueError(f"{t}_n needs n >= 2")
        s = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        s.append(_e(n, (n, 1 if t == "B" else 2)))
        return s, 1
    if t == "D":
        if n < 4:
            raise ValueError("D_n needs n >= 4")
        s = [_e(n, (i, 1), (i + 1, -1)) for i in range(1, n)]
        s.append(_e(n, (n - 1, 1), (n, 1)))
        return s, 1
    if t == "E":
        if n not in (6, 7, 8):
            raise ValueError("E_n needs n in {6, 7, 8}")
        s = [[1, -1, -1, -1, -1, -1, -1, 1], _e(8, (1, 2), (2, 2))]
        s += [_e(8, (i, 2), (i - 1, -2)) for i in range(2, 8)]
        return s[:n], 2
    if t == "F":
        if n != 4:
            raise ValueError("F_n only exists for n = 4")
        return [[0, 2, -2, 0], [0, 0, 2, -2], [0, 0, 0, 2], [1, -1, -1, -1]], 2
    if t == "G":
        if n != 2:
            raise ValueError("G_n only exists for n = 2")
        return [[1, -1, 0], [-2, 1, 1]], 1
    raise ValueError(f"unknown Dynkin type {t!r}")


def _ip(u, v):
    return sum(a * b for a, b in zip(u, v))


def parse_type(name):
    """'E8' -> ('E', 8)."""
    name = name.strip()
    if len(name) < 2 or not name[1:].isdigit():
        raise ValueError(f"cannot parse root system type {name!r}")
    return name[0].upper(), int(name[1:])


class RootSystem:
    """Positive roots, heights, the root order and Weyl-group helpers."""

    def __init__(self, dynkin_type, rank):
        t = dynkin_type.upper()
        n = int(rank)
        simple, scale = _simple_roots(t, n)
        self.dynkin_type = t
        self.rank = n
        self.scale = scale
        self.dim = len(simple[0])
        self.simple_vectors = [tuple(v) for v in simple]
        self.cartan = [[2 * _ip(simple[i], simple[j]) // _ip(simple[j], simple[j])
                        for j in range(n)] for i in range(n)]
        self._generate()

    @property
    def name(self):
        return f"{self.dynkin_type}{self.rank}"

    def __repr__(self):
        return f"RootSystem({self.name})"

    def _generate(self):
        n = self.rank
        A = self.cartan
        unit = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        found = set(unit)
        layer = list(unit)
        while layer:
            nxt = []
            for c in layer:
                for i in range(n):
                    # string through c in direction i: p steps down, pairing q
                    p = 0
                    d = list(c)
                    while True:
                        d[i] -= 1
                        if tuple(d) in found:
                            p += 1
                        else:
                            break
                    pairing = sum(c[j] * A[j][i] for j in range(n))
                    if p - pairing > 0:
                        up = list(c)
                        up[i] += 1
                        up = tuple(up)
                        if up not in found:
                            found.add(up)
                            nxt.append(up)
            layer = nxt
        roots = []
        for c in found:
            coords = tuple(sum(c[j] * self.simple_vectors[j][k] for j in range(n))
                           for k in range(self.dim))
            roots.append(Root(coords, c, sum(c)))
        roots.sort(key=lambda r: (r.height, r.coords))
        self.positive_roots = roots
        self.N = len(roots)
        self.full = (1 << self.N) - 1
        self.index = {r.simple_coeffs: k for k, r in enumerate(roots)}
        self.coord_index = {r.coords: k for k, r in enumerate(roots)}
        self.simple_indices = [self.index[u] for u in unit]
        self.heights = [r.height for r in roots]
        self.highest = max(range(self.N), key=lambda k: self.heights[k])
        self.coxeter_number = self.heights[self.highest] + 1

        # cover relation: k -> k + alpha_i
        self.up_covers = [[] for _ in range(self.N)]
        self.down_covers = [[] for _ in range(self.N)]
        for k, r in enumerate(roots):
            for i in range(n):
                c = list(r.simple_coeffs)
                c[i] += 1
                j = self.index.get(tuple(c))
                if j is not None:
                    self.up_covers[k].append(j)
                    self.down_covers[j].append(k)
        up = [0] * self.N
        for k in range(self.N - 1, -1, -1):
            m = 1 << k
            for j in self.up_covers[k]:
                m |= up[j]
            up[k] = m
        down = [0] * self.N
        for k in range(self.N):
            m = 1 << k
            for j in self.down_covers[k]:
                m |= down[j]
            down[k] = m
        self.up = up
        self.down = down
        self.height_masks = {}
        for k, h in enumerate(self.heights):
            self.height_masks[h] = self.height_masks.get(h, 0) | (1 << k)
        self._weyl = None

    # order and bookkeeping
    def precedes(self, a, b):
        """a ≼ b for root indices a, b."""
        return bool((self.up[a] >> b) & 1)

    def mask(self, indices):
        m = 0
        for k in indices:
            m |= 1 << k
        return m

    def members(self, mask):
        out = []
        k = 0
        while mask:
            if mask & 1:
                out.append(k)
            mask >>= 1
            k += 1
        return out

    def height_counts(self, mask=None):
        """Number of roots of each height 1, 2, ... inside mask."""
        if mask is None:
            mask = self.full
        counts = []
        for k in self.members(mask):
            h = self.heights[k]
            while len(counts) < h:
                counts.append(0)
            counts[h - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return counts

    def root_vector(self, k):
        """Primitive integer normal of the hyperplane of root k."""
        return primitive(self.positive_roots[k].coords)

    def weyl_exponents(self):
        return dual_partition(self.height_counts())

    def weyl_order(self):
        return prod(e + 1 for e in self.weyl_exponents())

    def pairing(self, k, i):
        """<beta_k, alpha_i^vee> for root index k and simple index i."""
        c = self.positive_roots[k].simple_coeffs
        return sum(c[j] * self.cartan[j][i] for j in range(self.rank))

    def add(self, a, b):
        """Index of root a + b if it is a positive root, else None."""
        ca = self.positive_roots[a].simple_coeffs
        cb = self.positive_roots[b].simple_coeffs
        return self.index.get(tuple(x + y for x, y in zip(ca, cb)))

    # Weyl group
    def _reflection_tables(self):
        if self._weyl is not None:
            return self._weyl
        n, N = self.rank, self.N
        perms = []
        for i in range(n):
            p = list(range(N))
            for k in range(N):
                if k == self.simple_indices[i]:
                    continue
                c = list(self.positive_roots[k].simple_coeffs)
                c[i] -= self.pairing(k, i)
                p[k] = self.index[tuple(c)]
            perms.append(p)
        nbytes = (N + 7) // 8
        tables = []
        for i in range(n):
            p = perms[i]
            per_byte = []
            for b in range(nbytes):
                images = [0] * 256
                for v in range(1, 256):
                    low = v & -v
                    bit = low.bit_length() - 1 + 8 * b
                    img = (1 << p[bit]) if bit < N else 0
                    images[v] = images[v ^ low] | img
                per_byte.append(images)
            tables.append(per_byte)
        self._weyl = (perms, tables, nbytes)
        return self._weyl

    def reflect_set(self, i, mask):
        """Image of a root set under the simple reflection s_i.

        The simple root alpha_i must not be in mask (it would leave Phi+).
        """
        _, tables, nbytes = self._reflection_tables()
        t = tables[i]
        out = 0
        b = 0
        while mask:
            v = mask & 0xFF
            if v:
                out |= t[b][v]
            mask >>= 8
            b += 1
        return out

    def weyl_elements(self, cap=DEFAULT_WEYL_CAP, simple_subset=None):
        """Inversion sets N(w) of all w in W, breadth first on the weak order.

        With simple_subset, only the parabolic subgroup generated by those
        simple reflections is traversed.
        """
        gens = range(self.rank) if simple_subset is None else sorted(simple_subset)
        if simple_subset is None and self.weyl_order() > cap:
            raise WeylBudgetError(self.weyl_order(), cap)
        simples = [(i, 1 << self.simple_indices[i]) for i in gens]
        seen = {0}
        layer = [0]
        while layer:
            yield from layer
            if len(seen) > cap:
                raise WeylBudgetError(len(seen), cap)
            nxt = []
            for inv in layer:
                for i, a in simples:
                    if inv & a:
                        continue
                    new = self.reflect_set(i, inv) | a
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
            layer = nxt

    def traverse_weyl(self, visitor, cap=DEFAULT_WEYL_CAP):
        for inv in self.weyl_elements(cap):
            visitor(WeylElement(inv, bin(inv).count("1")))

    # parabolic subsystems
    def parabolic(self, simple_subset):
        return ParabolicSubsystem(self, simple_subset)

    def maximal_parabolics(self):
        """The n maximal standard parabolics, dropping alpha_n first."""
        return [self.parabolic([j for j in range(self.rank) if j != i])
                for i in range(self.rank - 1, -1, -1)]

    # formatting
    def format_root(self, k):
        c = self.positive_roots[k].simple_coeffs
        if self.dynkin_type == "E":
            top = [c[0]] + list(c[2:])
            return "".join(map(str, top)) + f"({c[1]})"
        return "".join(map(str, c))

    def format_e(self, k):
        """Ambient notation such as e1+e2 (classical types only)."""
        v = [x // self.scale for x in self.positive_roots[k].coords]
        parts = []
        for i, x in enumerate(v):
            if x == 0:
                continue
            sign = "+" if x > 0 else "-"
            mag = "" if abs(x) == 1 else str(abs(x))
            parts.append(f"{sign}{mag}e{i + 1}")
        s = "".join(parts)
        return s[1:] if s.startswith("+") else s

    def parse_root(self, text):
        """Root index from a coefficient string, E-style string or e-notation."""
        s = text.replace(" ", "")
        if "e" in s:
            return self._parse_e(s)
        digits = s.replace("(", "").replace(")", "")
        if not digits.isdigit() or len(digits) != self.rank:
            raise ValueError(f"cannot parse root {text!r} for {self.name}")
        c = [int(ch) for ch in digits]
        if self.dynkin_type == "E":
            if "(" not in s:
                raise ValueError(f"E-type roots are written top(bottom), got {text!r}")
            c = [c[0], c[-1]] + c[1:-1]
        k = self.index.get(tuple(c))
        if k is None:
            raise ValueError(f"{text!r} is not a positive root of {self.name}")
        return k

    def _parse_e(self, s):
        import re
        v = [0] * self.dim
        pos = 0
        for m in re.finditer(r"([+-]?)(\d*)e(\d+)", s):
            if m.start() != pos:
                raise ValueError(f"cannot parse root {s!r}")
            pos = m.end()
            i = int(m.group(3))
            if not 1 <= i <= self.dim:
                raise ValueError(f"coordinate e{i} out of range in {s!r}")
            mag = int(m.group(2)) if m.group(2) else 1
            v[i - 1] += -mag if m.group(1) == "-" else mag
        if pos != len(s):
            raise ValueError(f"cannot parse root {s!r}")
        k = self.coord_index.get(tuple(x * self.scale for x in v))
        if k is None:
            raise ValueError(f"{s!r} is not a positive root of {self.name}")
        return k

    def dump(self):
        lines = []
        for k, r in enumerate(self.positive_roots):
            lines.append(f"{self.format_root(k)} | {' '.join(map(str, r.coords))} | ht={r.height}")
        return "\n".join(lines)


def dual_partition(parts):
    """Transpose of a partition given as a list of part sizes (any order)."""
    parts = [p for p in parts if p > 0]
    if not parts:
        return []
    top = max(parts)
    return sorted(sum(1 for p in parts if p >= j) for j in range(1, top + 1))


class ParabolicSubsystem:
    """Standard parabolic subsystem generated by a subset of the simple roots."""

    def __init__(self, parent, simple_subset):
        self.parent = parent
        self.simple_subset = tuple(sorted(set(simple_subset)))
        allowed = set(self.simple_subset)
        m = 0
        for k, r in enumerate(parent.positive_roots):
            if all(c == 0 or i in allowed for i, c in enumerate(r.simple_coeffs)):
                m |= 1 << k
        self.positive_roots_mask = m

    @property
    def dropped(self):
        return tuple(i for i in range(self.parent.rank) if i not in self.simple_subset)

    @property
    def is_maximal(self):
        return len(self.simple_subset) == self.parent.rank - 1

    @property
    def name(self):
        return subsystem_name(self.parent, self.simple_subset)

    def __repr__(self):
        return f"ParabolicSubsystem({self.parent.name}, {self.name})"


def _component_name(rs, comp):
    r = len(comp)
    cs = set(comp)
    roots = [k for k in range(rs.N)
             if all(c == 0 or i in cs for i, c in enumerate(rs.positive_roots[k].simple_coeffs))]
    count = len(roots)
    lengths = [_ip(rs.positive_roots[k].coords, rs.positive_roots[k].coords) for k in roots]
    longest = max(lengths)
    short = sum(1 for x in lengths if x < longest)
    if short == 0:
        if count == r * (r + 1) // 2:
            return f"A{r}"
        if count == r * (r - 1):
            return f"D{r}"
        return f"E{r}"
    if r == 2 and count == 6:
        return "G2"
    if r == 4 and count == 24 and short == 12:
        return "F4"
    if r == 2:
        return "B2"
    return f"B{r}" if short == r else f"C{r}"


def subsystem_name(rs, simple_subset):
    """Dynkin label such as 'C3', 'D5', 'A1xA2' for a standard parabolic."""
    sub = sorted(set(simple_subset))
    if not sub:
        return "empty"
    left = set(sub)
    comps = []
    while left:
        stack = [min(left)]
        comp = set()
        while stack:
            i = stack.pop()
            if i in comp:
                continue
            comp.add(i)
            stack.extend(j for j in left if j not in comp and rs.cartan[i][j] != 0)
        left -= comp
        comps.append(sorted(comp))
    names = [_component_name(rs, c) for c in comps]
    if rs.name == "E6" and names == ["D5"] and 5 not in sub:
        names = ["D5'"]
    return "x".join(names)


_CACHE = {}


def build_root_system(dynkin_type, rank=None):
    """Cached constructor; accepts ('F', 4) or 'F4'."""
    if rank is None:
        dynkin_type, rank = parse_type(dynkin_type)
    key = (dynkin_type.upper(), int(rank))
    if key not in _CACHE:
        _CACHE[key] = RootSystem(*key)
    return _CACHE[key]
