"""Central hyperplane arrangements over Q with exact intersection lattices.

A hyperplane is stored by a primitive integer normal.  Flats are ints used as
bitsets over the hyperplanes (the full set of hyperplanes containing the
subspace), so lattice membership is a dict lookup.
"""
from .linalg import primitive, rank as _rank, pivot_columns, nullspace, dot, adjugate

DEFAULT_FLAT_BUDGET = 10 ** 6


class LatticeBudgetError(RuntimeError):
    def __init__(self, reached, budget):
        super().__init__(f"intersection lattice reached {reached} flats, budget is {budget}")
        self.reached = reached
        self.budget = budget


def bits(mask):
    out = []
    k = 0
    while mask:
        if mask & 1:
            out.append(k)
        mask >>= 1
        k += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


class Arrangement:
    """Hyperplanes given by primitive normals in Q^dim; parallel copies dropped."""

    def __init__(self, dim, normals, labels=None):
        self.dim = dim
        seen = {}
        ns, ls = [], []
        for i, v in enumerate(normals):
            v = primitive(v)
            if len(v) != dim:
                raise ValueError(f"normal {v} does not live in dimension {dim}")
            if not any(v):
                raise ValueError("zero normal")
            if v in seen:
                continue
            seen[v] = len(ns)
            ns.append(v)
            ls.append(labels[i] if labels is not None else i)
        self.normals = ns
        self.labels = ls
        self._rank = None
        self._lattice = None

    def __len__(self):
        return len(self.normals)

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, {len(self.normals)} hyperplanes)"

    @property
    def full(self):
        return (1 << len(self.normals)) - 1

    @property
    def rank(self):
        if self._rank is None:
            self._rank = _rank(self.normals)
        return self._rank

    def rank_of(self, mask):
        return _rank([self.normals[i] for i in bits(mask)])

    def closure(self, mask):
        """All hyperplanes whose normal is in the span of the selected ones."""
        rows = [self.normals[i] for i in bits(mask)]
        if not rows:
            return 0
        r = _rank(rows)
        out = mask
        for h in range(len(self.normals)):
            if not (mask >> h) & 1 and _rank(rows + [self.normals[h]]) == r:
                out |= 1 << h
        return out

    def subarrangement(self, mask):
        idx = bits(mask)
        return Arrangement(self.dim, [self.normals[i] for i in idx],
                           [self.labels[i] for i in idx])

    def delete(self, h):
        return self.subarrangement(self.full & ~(1 << h))

    def lattice(self, budget=DEFAULT_FLAT_BUDGET):
        if self._lattice is None:
            self._lattice = Lattice(self, budget)
        return self._lattice

    def dump(self):
        lines = [f"dim={self.dim}"]
        lines += [" ".join(map(str, v)) for v in self.normals]
        return "\n".join(lines)


def from_roots(rs, root_mask):
    """One hyperplane per selected positive root.

    Normals are written in coordinates of the span of the roots, so the
    ambient dimension equals the rank of the root system (this only changes
    anything for A_n, E_6, E_7 and G_2, whose standard models sit in a
    larger space).
    """
    cols = pivot_columns(list(rs.simple_vectors))
    idx = rs.members(root_mask)
    normals = [tuple(rs.positive_roots[k].coords[c] for c in cols) for k in idx]
    return Arrangement(rs.rank, normals, idx)


def localization(arr, mask):
    """Hyperplanes containing the intersection of the selected ones."""
    return arr.subarrangement(arr.closure(mask))


def _subspace_basis(arr, mask):
    rows = [arr.normals[i] for i in bits(mask)]
    return nullspace(rows, arr.dim)


def restriction(arr, mask):
    """Restrict to the flat spanned by mask (an int bitset or one index via 1<<h)."""
    flat = arr.closure(mask)
    X = _subspace_basis(arr, flat)
    normals, labels = [], []
    for h, v in enumerate(arr.normals):
        if (flat >> h) & 1:
            continue
        normals.append(tuple(dot(v, x) for x in X))
        labels.append(arr.labels[h])
    return Arrangement(len(X), normals, labels)


def restriction_map(arr, h):
    """For each hyperplane k != h, the index of its image in arr^H."""
    X = _subspace_basis(arr, 1 << h)
    images = {}
    out = {}
    for k, v in enumerate(arr.normals):
        if k == h:
            continue
        w = primitive(tuple(dot(v, x) for x in X))
        out[k] = images.setdefault(w, len(images))
    return out


def essentialize(arr):
    """Same arrangement in coordinates of the span of its normals."""
    cols = pivot_columns(arr.normals)
    return Arrangement(len(cols), [tuple(v[c] for c in cols) for v in arr.normals], arr.labels)


def canonical_key(arr):
    e = essentialize(arr)
    return (e.dim, tuple(sorted(e.normals)))


class Lattice:
    """Intersection lattice, built one rank at a time from upper covers."""

    def __init__(self, arr, budget=DEFAULT_FLAT_BUDGET):
        self.arr = arr
        N = arr.normals
        m = len(N)
        ell = arr.dim
        ident = [tuple(int(i == j) for j in range(ell)) for i in range(ell)]
        self.rank = {0: 0}
        self.levels = [[0]]
        self.lower = {0: []}
        self.upper = {0: []}
        sub = {0: ident}
        total = 1
        for k in range(ell):
            nxt = []
            for F in self.levels[k]:
                X = sub[F]
                groups = {}
                order = []
                for h in range(m):
                    if (F >> h) & 1:
                        continue
                    key = primitive(tuple(dot(N[h], x) for x in X))
                    if key not in groups:
                        groups[key] = 0
                        order.append(key)
                    groups[key] |= 1 << h
                for key in order:
                    G = F | groups[key]
                    self.upper[F].append(G)
                    if G in self.rank:
                        self.lower[G].append(F)
                        continue
                    self.rank[G] = k + 1
                    self.lower[G] = [F]
                    self.upper[G] = []
                    ys = nullspace([key], len(X))
                    sub[G] = [primitive(tuple(sum(y[j] * X[j][c] for j in range(len(X)))
                                              for c in range(ell))) for y in ys]
                    nxt.append(G)
                    total += 1
                    if total > budget:
                        raise LatticeBudgetError(total, budget)
            if not nxt:
                break
            self.levels.append(sorted(nxt))
        self._subspaces = sub
        self.top = self.levels[-1][0] if len(self.levels[-1]) == 1 else None
        self._mobius()

    def _mobius(self):
        mu = {0: 1}
        for level in self.levels[1:]:
            for G in level:
                a = G & -G
                mu[G] = -sum(mu[Y] for Y in self.lower[G] if not Y & a)
        self.mu = mu

    def __len__(self):
        return len(self.rank)

    def flats(self):
        for level in self.levels:
            yield from level

    def subspace(self, flat):
        return self._subspaces[flat]

    def counts(self):
        return [len(level) for level in self.levels]

    def char_poly(self):
        ell = self.arr.dim
        c = [0] * (ell + 1)
        for F, r in self.rank.items():
            c[ell - r] += self.mu[F]
        return c

    def pair_flats(self):
        """Rank-2 flat containing each pair of distinct hyperplanes."""
        out = {}
        if len(self.levels) > 2:
            for F in self.levels[2]:
                hs = bits(F)
                for i, a in enumerate(hs):
                    for b in hs[i + 1:]:
                        out[(a, b)] = F
        return out

    def is_modular(self, flat):
        """General test: r(X) + r(Y) = r(X v Y) + r(X ^ Y) for every flat Y."""
        arr = self.arr
        rx = self.rank[flat]
        for Y in self.rank:
            ry = self.rank[Y]
            meet = arr.rank_of(flat & Y)
            join = arr.rank_of(flat | Y)
            if rx + ry != join + meet:
                return False
        return True


def char_poly(arr, budget=DEFAULT_FLAT_BUDGET):
    """Coefficients of chi(t), lowest degree first."""
    return arr.lattice(budget).char_poly()


def poly_eval(c, t):
    return sum(a * t ** i for i, a in enumerate(c))


def region_count(arr, budget=DEFAULT_FLAT_BUDGET):
    return (-1) ** arr.dim * poly_eval(char_poly(arr, budget), -1)


def poly_from_roots(roots):
    c = [1]
    for e in roots:
        nxt = [0] * (len(c) + 1)
        for i, a in enumerate(c):
            nxt[i + 1] += a
            nxt[i] -= e * a
        c = nxt
    return c


def integer_roots(c):
    """Nonnegative integer roots of a monic polynomial if it splits over them, else None."""
    c = list(c)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    roots = []
    e = 0
    bound = sum(abs(a) for a in c)
    while len(c) > 1:
        if e > bound:
            return None
        # synthetic division by (t - e)
        q = [0] * (len(c) - 1)
        acc = 0
        for i in range(len(c) - 1, 0, -1):
            acc = acc * e + c[i]
            q[i - 1] = acc
        if acc * e + c[0] == 0:
            roots.append(e)
            c = q
        else:
            e += 1
    return roots if c == [1] else None


def is_modular_coatom(arr, flat, pair_flats=None):
    """Modularity of a rank r-1 flat: every pair outside meets it in a rank-2 flat."""
    if pair_flats is None:
        pair_flats = arr.lattice().pair_flats()
    outside = [h for h in range(len(arr)) if not (flat >> h) & 1]
    for i, a in enumerate(outside):
        for b in outside[i + 1:]:
            if not pair_flats[(a, b)] & flat:
                return False
    return True


def is_modular(arr, flat):
    lat = arr.lattice()
    if lat.rank[flat] == arr.rank - 1:
        return is_modular_coatom(arr, flat, lat.pair_flats())
    return lat.is_modular(flat)


def components(arr):
    """Hyperplane masks of the irreducible factors (matroid connected components).

    Uses fundamental circuits with respect to a greedily chosen basis: the
    circuit of a non-basis hyperplane is itself plus the basis elements with
    a nonzero coefficient in its expansion.
    """
    n = len(arr.normals)
    if n == 0:
        return []
    basis = []
    rows = []
    for h, v in enumerate(arr.normals):
        if _rank(rows + [v]) > len(rows):
            rows.append(v)
            basis.append(h)
    cols = pivot_columns(rows)
    B = [[v[c] for c in cols] for v in rows]
    adj, _ = adjugate(B)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    bset = set(basis)
    r = len(basis)
    for h, v in enumerate(arr.normals):
        if h in bset:
            continue
        e = [v[c] for c in cols]
        for i in range(r):
            if sum(e[j] * adj[j][i] for j in range(r)):
                parent[find(basis[i])] = find(h)
    groups = {}
    for h in range(n):
        groups.setdefault(find(h), 0)
        groups[find(h)] |= 1 << h
    return sorted(groups.values(), key=lambda m: m & -m)


def decompose_product(arr):
    """Irreducible factors (as subarrangements) and the number of empty dimensions."""
    comps = components(arr)
    return [arr.subarrangement(m) for m in comps], arr.dim - arr.rank


def is_reducible(arr):
    """A product of at least two nonempty factors, counting each empty direction as one."""
    factors, empty = decompose_product(arr)
    return len(factors) + empty > 1
