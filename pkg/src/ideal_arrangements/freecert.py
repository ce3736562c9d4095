"""Certificates for inductive freeness, supersolvability and (inductive) factorizations.

Every search here returns a Verdict whose certificate is a plain JSON-able
dict.  The ``verify_*`` functions replay a certificate from scratch using
only the arrangement it names, so a certificate can be checked without
trusting the search that produced it.

Searches work on canonical forms: normals are written in coordinates of
their own span and made primitive, then sorted.  Nested certificates for
restrictions are stated in the canonical coordinates of the restriction.
"""
from collections import namedtuple, Counter
from itertools import product

from .arrangement import (Arrangement, LatticeBudgetError, bits, popcount,
                          restriction, integer_roots, is_modular)
from .linalg import primitive, pivot_columns, nullspace, dot, rank as _rank

Verdict = namedtuple("Verdict", "status certificate exponents")

DEFAULT_NODE_BUDGET = 10 ** 7


class SearchBudgetExceeded(RuntimeError):
    pass


class CertificateError(ValueError):
    pass


# canonical coordinates

def canonical_normals(arr):
    cols = pivot_columns(arr.normals)
    return len(cols), [primitive(tuple(v[c] for c in cols)) for v in arr.normals]


def canonical(arr):
    dim, ns = canonical_normals(arr)
    return Arrangement(dim, sorted(ns))


def canonical_key(arr):
    dim, ns = canonical_normals(arr)
    return dim, tuple(sorted(ns))


def restriction_images(arr, h):
    """Canonical restriction to hyperplane h and the image normal of every k != h."""
    X = nullspace([arr.normals[h]], arr.dim)
    raw = {k: tuple(dot(v, x) for x in X) for k, v in enumerate(arr.normals) if k != h}
    if not raw:
        return Arrangement(0, []), {}
    cols = pivot_columns(list(raw.values()))
    img = {k: primitive(tuple(v[c] for c in cols)) for k, v in raw.items()}
    return Arrangement(len(cols), sorted(set(img.values()))), img


def pad(exps, n):
    exps = list(exps)
    return sorted([0] * (n - len(exps)) + exps)


def arrangement_json(arr):
    return {"dim": arr.dim, "normals": [list(v) for v in arr.normals]}


def arrangement_from_json(d):
    normals = [tuple(v) for v in d["normals"]]
    arr = Arrangement(d["dim"], normals)
    if len(arr) != len(normals):
        raise CertificateError("arrangement lists a hyperplane twice")
    return arr


_CHI = {}


def chi_roots(arr):
    """Exponents read off chi of the canonical form (length = rank), or None."""
    key = canonical_key(arr)
    if key not in _CHI:
        c = Arrangement(key[0], list(key[1]))
        roots = integer_roots(c.lattice().char_poly())
        _CHI[key] = None if roots is None else tuple(sorted(roots))
    return _CHI[key]


def _remove_one(ms, x):
    ms = list(ms)
    ms.remove(x)
    return ms


# inductive freeness

class FreenessSearch:
    """Memoized deletion search over canonical forms.

    The node budget counts distinct subproblems that are expanded.
    """

    def __init__(self, budget=DEFAULT_NODE_BUDGET):
        self.budget = budget
        self.nodes = 0
        self.memo = {}

    def solve(self, arr):
        """Exponents (length = rank) if inductively free, else None."""
        c = canonical(arr)
        key = (c.dim, tuple(c.normals))
        if key in self.memo:
            hit = self.memo[key]
            return None if hit is None else hit[0]
        if not c.normals:
            self.memo[key] = ((0,) * c.dim, None)
            return self.memo[key][0]
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"free-ness search exceeded {self.budget} nodes")
        E = chi_roots(c)
        if E is None:
            # free arrangements have a chi that splits over the nonnegative integers
            self.memo[key] = None
            return None
        cands = []
        for h in range(len(c)):
            rest, _ = restriction_images(c, h)
            b = len(c) - len(rest)
            if b not in E:
                continue
            want = sorted(_remove_one(E, b))
            got = chi_roots(rest)
            if got is None or pad(got, c.dim - 1) != want:
                continue
            cands.append((b, h, rest))
        # smallest restriction first
        cands.sort(key=lambda x: -x[0])
        for b, h, rest in cands:
            if self.solve(rest) is None:
                continue
            if self.solve(c.delete(h)) is None:
                continue
            self.memo[key] = (E, c.normals[h])
            return E
        self.memo[key] = None
        return None

    def table(self, arr):
        """Induction table for an arrangement already solved positively."""
        c = canonical(arr)
        r = c.dim
        top = self.solve(c)
        if top is None:
            raise ValueError("arrangement is not inductively free")
        rows = []
        cur = c
        while len(cur):
            E, hn = self.memo[canonical_key(cur)]
            _, cn = canonical_normals(cur)
            h = cn.index(hn)
            rest, _ = restriction_images(cur, h)
            prev = cur.delete(h)
            before = pad(self.solve(prev), r)
            rows.append({
                "hyperplane": list(cur.normals[h]),
                "exponents_before": before,
                "exponents_after": pad(E, r),
                "restriction_exponents": pad(self.solve(rest), r - 1),
                "restriction": self.table(rest),
            })
            cur = prev
        rows.reverse()
        return {"kind": "induction_table", "arrangement": arrangement_json(c), "rank": r,
                "base": {"dim": r, "normals": []}, "rows": rows, "exponents": pad(top, r)}


def inductively_free(arr, budget=DEFAULT_NODE_BUDGET, search=None):
    search = search or FreenessSearch(budget)
    try:
        E = search.solve(arr)
    except (SearchBudgetExceeded, LatticeBudgetError):
        return Verdict("unknown", None, None)
    if E is None:
        return Verdict("certified_no", None, None)
    return Verdict("certified_yes", search.table(arr), pad(E, arr.dim))


def verify_induction_table(cert):
    """Replay an induction table; raises CertificateError on the first bad step."""
    if cert.get("kind") != "induction_table":
        raise CertificateError("not an induction table")
    A = arrangement_from_json(cert["arrangement"])
    r = cert["rank"]
    if A.dim != r or A.rank != r:
        raise CertificateError("arrangement is not essential of the stated rank")
    if cert["base"]["normals"] or cert["base"]["dim"] != r:
        raise CertificateError("base must be the empty arrangement")
    rows = cert["rows"]
    added = [tuple(row["hyperplane"]) for row in rows]
    if sorted(added) != sorted(A.normals) or len(set(added)) != len(added):
        raise CertificateError("rows do not add each hyperplane exactly once")
    exps = [0] * r
    cur = []
    for i, row in enumerate(rows):
        if sorted(row["exponents_before"]) != exps:
            raise CertificateError(f"row {i}: exponents before do not match the previous row")
        cur.append(tuple(row["hyperplane"]))
        Ai = Arrangement(r, cur)
        rest, _ = restriction_images(Ai, len(cur) - 1)
        b = len(Ai) - len(rest)
        if b - 1 not in exps:
            raise CertificateError(f"row {i}: {b - 1} is not an exponent of the deletion")
        after = sorted(_remove_one(exps, b - 1) + [b])
        if sorted(row["exponents_after"]) != after:
            raise CertificateError(f"row {i}: exponents after should be {after}")
        rexp = _remove_one(after, b)
        if sorted(row["restriction_exponents"]) != rexp:
            raise CertificateError(f"row {i}: restriction exponents should be {rexp}")
        nested = row["restriction"]
        if arrangement_from_json(nested["arrangement"]).normals != rest.normals \
                or nested["arrangement"]["dim"] != rest.dim:
            raise CertificateError(f"row {i}: nested certificate is for a different restriction")
        verify_induction_table(nested)
        if pad(nested["exponents"], r - 1) != rexp:
            raise CertificateError(f"row {i}: nested certificate has exponents {nested['exponents']}")
        exps = after
    if sorted(cert["exponents"]) != exps:
        raise CertificateError("final exponents do not match the table")
    return True


# supersolvability

def supersolvable(arr, budget=None):
    """Top-down search for a maximal chain of modular flats."""
    try:
        lat = arr.lattice() if budget is None else arr.lattice(budget)
    except LatticeBudgetError:
        return Verdict("unknown", None, None)
    pf = lat.pair_flats()
    memo = {}

    def ss(S):
        if S in memo:
            return memo[S]
        r = lat.rank[S]
        if r == 0:
            out = [0]
        elif r == 1:
            out = [0, S]
        elif r == 2:
            out = [0, S & -S, S]
        else:
            out = None
            for F in sorted(lat.lower[S]):
                outside = bits(S & ~F)
                if all(pf[(a, b)] & F for i, a in enumerate(outside) for b in outside[i + 1:]):
                    sub = ss(F)
                    if sub is not None:
                        out = sub + [S]
                        break
        memo[S] = out
        return out

    chain = ss(arr.full)
    if chain is None:
        return Verdict("certified_no", None, None)
    exps = chain_exponents(arr, chain)
    cert = {"kind": "modular_chain", "arrangement": arrangement_json(arr),
            "flats": [bits(F) for F in chain], "exponents": exps}
    return Verdict("certified_yes", cert, exps)


def chain_exponents(arr, chain):
    return pad([popcount(b & ~a) for a, b in zip(chain, chain[1:])], arr.dim)


def verify_modular_chain(cert):
    """Each flat of the chain must be modular in the full lattice (rank test)."""
    if cert.get("kind") != "modular_chain":
        raise CertificateError("not a modular chain")
    A = arrangement_from_json(cert["arrangement"])
    lat = A.lattice()
    chain = []
    for idx in cert["flats"]:
        m = 0
        for i in idx:
            if not 0 <= i < len(A):
                raise CertificateError(f"hyperplane index {i} out of range")
            m |= 1 << i
        chain.append(m)
    if not chain or chain[0] != 0 or chain[-1] != A.full:
        raise CertificateError("chain must run from the ambient space to the center")
    for k, F in enumerate(chain):
        if F not in lat.rank or lat.rank[F] != k:
            raise CertificateError(f"element {k} is not a flat of rank {k}")
        if k and chain[k - 1] & ~F:
            raise CertificateError(f"element {k} does not contain its predecessor")
        if not lat.is_modular(F):
            raise CertificateError(f"flat {k} is not modular")
    if len(chain) != A.rank + 1:
        raise CertificateError("chain is not maximal")
    if sorted(cert.get("exponents", [])) != chain_exponents(A, chain):
        raise CertificateError("exponents do not match the block sizes of the chain")
    return True


# nice partitions

def _as_masks(arr, partition):
    """Accept blocks as index lists/sets or as int masks."""
    out = []
    for b in partition:
        if isinstance(b, int):
            out.append(b)
        else:
            m = 0
            for i in b:
                m |= 1 << i
            out.append(m)
    return out


def is_independent(arr, blocks):
    blocks = [bits(b) for b in _as_masks(arr, blocks) if b]
    for choice in product(*blocks):
        if _rank([arr.normals[i] for i in choice]) != len(choice):
            return False
    return True


def nice_partition(arr, partition):
    """Independent, and every flat other than the ambient space sees a singleton block."""
    blocks = [b for b in _as_masks(arr, partition) if b]
    seen = 0
    for b in blocks:
        if seen & b:
            return False
        seen |= b
    if seen != arr.full:
        return False
    if not is_independent(arr, blocks):
        return False
    for X in arr.lattice().flats():
        if X == 0:
            continue
        if not any(popcount(X & b) == 1 for b in blocks):
            return False
    return True


def nice_partitions(arr, budget=DEFAULT_NODE_BUDGET, counter=None):
    """Generate the nice partitions of arr (as sorted tuples of masks).

    Block sizes are forced to the roots of chi, and the number of blocks to
    the rank; rank-two flats are checked as hyperplanes get placed.
    """
    counter = counter if counter is not None else [0]
    m = len(arr)
    if m == 0:
        yield ()
        return
    E = chi_roots(arr)
    if E is None:
        return
    sizes = sorted(e for e in E if e)
    r = arr.rank
    lat = arr.lattice()
    rank2 = lat.levels[2] if len(lat.levels) > 2 else []
    flats_of = [[] for _ in range(m)]
    for X in rank2:
        for h in bits(X):
            flats_of[h].append(X)
    normals = arr.normals
    blocks = []
    caps = []
    remaining = Counter(sizes)

    def rank2_ok(h):
        for X in flats_of[h]:
            counts = [popcount(X & b) for b in blocks]
            used = [c for c in counts if c]
            if len(used) > 2:
                return False
            if len(used) == 2 and min(used) >= 2:
                return False
            if popcount(X) > 1 and sum(used) == popcount(X) and 1 not in used:
                return False
        return True

    def transversals_ok(j, h):
        others = [bits(b) for i, b in enumerate(blocks) if i != j and b]
        for choice in product(*others):
            rows = [normals[i] for i in choice] + [normals[h]]
            if _rank(rows) != len(rows):
                return False
        return True

    def rec(h):
        counter[0] += 1
        if counter[0] > budget:
            raise SearchBudgetExceeded(f"partition search exceeded {budget} nodes")
        if h == m:
            part = tuple(sorted(blocks))
            if nice_partition(arr, part):
                yield part
            return
        for j in range(len(blocks)):
            if popcount(blocks[j]) < caps[j]:
                blocks[j] |= 1 << h
                if rank2_ok(h) and transversals_ok(j, h):
                    yield from rec(h + 1)
                blocks[j] &= ~(1 << h)
        if len(blocks) < r:
            for s in sorted(remaining):
                if remaining[s] == 0:
                    continue
                remaining[s] -= 1
                blocks.append(1 << h)
                caps.append(s)
                if rank2_ok(h) and transversals_ok(len(blocks) - 1, h):
                    yield from rec(h + 1)
                blocks.pop()
                caps.pop()
                remaining[s] += 1

    yield from rec(0)


# inductive factorizations

class FactorizationSearch:
    """Memoized search for (arrangement, partition) pairs built by addition."""

    def __init__(self, budget=DEFAULT_NODE_BUDGET):
        self.budget = budget
        self.nodes = 0
        self.memo = {}

    def _key(self, arr, blocks):
        dim, cn = canonical_normals(arr)
        part = frozenset(frozenset(cn[i] for i in bits(b)) for b in blocks if b)
        return (dim, tuple(sorted(cn))), part, cn

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExceeded(f"factorization search exceeded {self.budget} nodes")

    def pair(self, arr, blocks):
        """True iff (arr, blocks) is an inductive factorization."""
        blocks = [b for b in blocks if b]
        akey, pkey, cn = self._key(arr, blocks)
        key = (akey, pkey)
        if key in self.memo:
            return self.memo[key] is not None
        if not blocks:
            self.memo[key] = ()
            return True
        self._tick()
        E = chi_roots(arr)
        if E is None or sorted(e for e in E if e) != sorted(popcount(b) for b in blocks):
            self.memo[key] = None
            return False
        order = sorted(range(len(blocks)), key=lambda j: -popcount(blocks[j]))
        for j in order:
            for h in bits(blocks[j]):
                step = _factor_step(arr, blocks, j, h)
                if step is None:
                    continue
                dele, dblocks, rest, rblocks = step
                if self.pair(rest, rblocks) and self.pair(dele, dblocks):
                    self.memo[key] = (cn[h],)
                    return True
        self.memo[key] = None
        return False

    def table(self, arr, blocks):
        blocks = [b for b in blocks if b]
        dim, cn = canonical_normals(arr)
        c = Arrangement(dim, cn)
        if len(c) != len(cn):
            raise ValueError("parallel hyperplanes")
        # keep block identity while deleting
        part = [[cn[i] for i in bits(b)] for b in blocks]
        part = sorted(sorted(b) for b in part)
        order = sorted(range(len(c)), key=lambda i: c.normals[i])
        c = Arrangement(dim, [c.normals[i] for i in order])
        index = {v: i for i, v in enumerate(c.normals)}
        final = [sorted(index[v] for v in b) for b in part]
        if not self.pair(c, _as_masks(c, final)):
            raise ValueError("not an inductive factorization")
        rows = []
        cur = c
        labels = list(range(len(c)))
        cur_blocks = [list(b) for b in final]
        while len(cur):
            masks = [sum(1 << labels.index(i) for i in b) for b in cur_blocks]
            akey, pkey, ccn = self._key(cur, masks)
            hn = self.memo[(akey, pkey)][0]
            h = ccn.index(hn)
            j = next(k for k, b in enumerate(masks) if (b >> h) & 1)
            dele, dblocks, rest, rblocks = _factor_step(cur, masks, j, h)
            prev_blocks = [[i for i in b if i != labels[h]] for b in cur_blocks]
            rdim, rcn = canonical_normals(rest)
            rows.append({
                "hyperplane": list(cur.normals[h]),
                "block": j,
                "partition_before": [[list(c.normals[i]) for i in b] for b in prev_blocks],
                "restriction_partition": sorted(sorted(list(rcn[i]) for i in bits(b)) for b in rblocks if b),
                "bijective": True,
                "restriction": self.table(rest, rblocks),
            })
            cur = dele
            labels = labels[:h] + labels[h + 1:]
            cur_blocks = prev_blocks
        rows.reverse()
        return {"kind": "factorization_table", "arrangement": arrangement_json(c), "rank": dim,
                "partition": [[list(c.normals[i]) for i in b] for b in final],
                "rows": rows, "exponents": pad([len(b) for b in final], dim)}


def _factor_step(arr, blocks, j, h):
    """Deletion and restriction pair for removing h from block j, or None if the
    restriction map from the other blocks is not a bijection."""
    rest, img = restriction_images(arr, h)
    dom = [k for k in range(len(arr)) if not (blocks[j] >> k) & 1]
    images = [img[k] for k in dom]
    if len(set(images)) != len(images) or set(images) != set(rest.normals):
        return None
    pos = {v: i for i, v in enumerate(rest.normals)}
    rblocks = []
    for i, b in enumerate(blocks):
        if i == j:
            continue
        m = 0
        for k in bits(b):
            m |= 1 << pos[img[k]]
        rblocks.append(m)
    keep = [k for k in range(len(arr)) if k != h]
    dele = arr.subarrangement(arr.full & ~(1 << h))
    where = {k: i for i, k in enumerate(keep)}
    dblocks = []
    for b in blocks:
        m = 0
        for k in bits(b):
            if k != h:
                m |= 1 << where[k]
        dblocks.append(m)
    return dele, dblocks, rest, rblocks


def inductively_factored(arr, budget=DEFAULT_NODE_BUDGET, search=None):
    """Search nice partitions (supersolvable chains first) for an inductive one."""
    search = search or FactorizationSearch(budget)
    if len(arr) == 0:
        cert = search.table(arr, [])
        return Verdict("certified_yes", cert, [0] * arr.dim)
    tried = set()
    try:
        ss = supersolvable(arr)
        cands = []
        if ss.status == "certified_yes":
            chain = [sum(1 << i for i in f) for f in ss.certificate["flats"]]
            cands.append(tuple(sorted(b & ~a for a, b in zip(chain, chain[1:]))))
        counter = [0]
        for part in _chain(cands, nice_partitions(arr, budget, counter)):
            if part in tried:
                continue
            tried.add(part)
            if search.pair(arr, list(part)):
                cert = search.table(arr, list(part))
                return Verdict("certified_yes", cert, pad([popcount(b) for b in part], arr.dim))
    except (SearchBudgetExceeded, LatticeBudgetError):
        return Verdict("unknown", None, None)
    return Verdict("certified_no", None, None)


def _chain(*its):
    for it in its:
        yield from it


def verify_factorization_table(cert):
    if cert.get("kind") != "factorization_table":
        raise CertificateError("not a factorization table")
    A = arrangement_from_json(cert["arrangement"])
    r = cert["rank"]
    if A.dim != r or (len(A) and A.rank != r):
        raise CertificateError("arrangement is not essential of the stated rank")
    P = [[tuple(v) for v in b] for b in cert["partition"]]
    flat = [v for b in P for v in b]
    if sorted(flat) != sorted(A.normals) or len(set(flat)) != len(flat):
        raise CertificateError("partition does not cover the arrangement exactly once")
    if any(not b for b in P):
        raise CertificateError("empty block")
    if len(cert["rows"]) != len(A):
        raise CertificateError("wrong number of rows")
    cur = []
    blocks = [[] for _ in P]
    for i, row in enumerate(cert["rows"]):
        H = tuple(row["hyperplane"])
        j = row["block"]
        if not 0 <= j < len(P) or H not in P[j]:
            raise CertificateError(f"row {i}: hyperplane not in the named block")
        if [sorted(tuple(v) for v in b) for b in row["partition_before"]] != [sorted(b) for b in blocks]:
            raise CertificateError(f"row {i}: partition before does not match the replay")
        cur.append(H)
        blocks[j].append(H)
        Ai = Arrangement(r, cur)
        h = len(cur) - 1
        rest, img = restriction_images(Ai, h)
        idx = {v: k for k, v in enumerate(Ai.normals)}
        dom = [idx[v] for jj, b in enumerate(blocks) if jj != j for v in b]
        images = [img[k] for k in dom]
        bij = len(set(images)) == len(images) and set(images) == set(rest.normals)
        if not bij or not row["bijective"]:
            raise CertificateError(f"row {i}: restriction map is not bijective")
        rpart = sorted(sorted(img[idx[v]] for v in b) for jj, b in enumerate(blocks) if jj != j and b)
        claimed = sorted(sorted(tuple(v) for v in b) for b in row["restriction_partition"])
        if rpart != claimed:
            raise CertificateError(f"row {i}: restriction partition does not match")
        nested = row["restriction"]
        na = arrangement_from_json(nested["arrangement"])
        if na.dim != rest.dim or sorted(na.normals) != rest.normals:
            raise CertificateError(f"row {i}: nested certificate is for a different restriction")
        if sorted(sorted(tuple(v) for v in b) for b in nested["partition"]) != rpart:
            raise CertificateError(f"row {i}: nested certificate uses a different partition")
        verify_factorization_table(nested)
    if [sorted(b) for b in blocks] != [sorted(b) for b in P]:
        raise CertificateError("replay does not end at the stated partition")
    if sorted(cert["exponents"]) != pad([len(b) for b in P], r):
        raise CertificateError("exponents are not the block sizes")
    return True


def verify_certificate(cert):
    kind = cert.get("kind")
    if kind == "induction_table":
        return verify_induction_table(cert)
    if kind == "modular_chain":
        return verify_modular_chain(cert)
    if kind == "factorization_table":
        return verify_factorization_table(cert)
    raise CertificateError(f"unknown certificate kind {kind!r}")


# lifting along a modular coatom

def induction_table_from_order(arr, order, search=None):
    """Induction table that adds the hyperplanes of arr in the given order."""
    search = search or FreenessSearch()
    dim, cn = canonical_normals(arr)
    c = Arrangement(dim, [cn[i] for i in order])
    r = dim
    rows = []
    exps = [0] * r
    for i in range(len(c)):
        Ai = c.subarrangement((1 << (i + 1)) - 1)
        E = search.solve(Ai)
        rest, _ = restriction_images(Ai, i)
        R = search.solve(rest)
        if E is None or R is None:
            raise ValueError(f"step {i} of the order leaves the inductively free class")
        after = pad(E, r)
        rows.append({"hyperplane": list(c.normals[i]), "exponents_before": exps,
                     "exponents_after": after, "restriction_exponents": pad(R, r - 1),
                     "restriction": search.table(rest)})
        exps = after
    cert = {"kind": "induction_table",
            "arrangement": {"dim": r, "normals": [list(v) for v in sorted(c.normals)]},
            "rank": r, "base": {"dim": r, "normals": []}, "rows": rows, "exponents": exps}
    verify_induction_table(cert)
    return cert


def factorization_table_from_order(arr, order, blocks, search=None):
    """Factorization table adding hyperplanes in order; blocks are index sets of arr."""
    search = search or FactorizationSearch()
    dim, cn = canonical_normals(arr)
    c = Arrangement(dim, cn)
    block_of = {}
    for j, b in enumerate(blocks):
        for i in b:
            block_of[i] = j
    P = [sorted(cn[i] for i in b) for b in blocks]
    rows = []
    cur = []
    cur_blocks = [[] for _ in blocks]
    for i in order:
        j = block_of[i]
        before = [[list(v) for v in sorted(b)] for b in cur_blocks]
        cur.append(cn[i])
        cur_blocks[j].append(cn[i])
        Ai = Arrangement(dim, cur)
        pos = {v: k for k, v in enumerate(Ai.normals)}
        masks = [sum(1 << pos[v] for v in b) for b in cur_blocks]
        step = _factor_step(Ai, masks, j, len(cur) - 1)
        if step is None:
            raise ValueError(f"adding hyperplane {i}: restriction map is not bijective")
        _, _, rest, rblocks = step
        if not search.pair(rest, rblocks):
            raise ValueError(f"adding hyperplane {i}: restriction is not inductively factored")
        _, rcn = canonical_normals(rest)
        rows.append({"hyperplane": list(cn[i]), "block": j, "partition_before": before,
                     "restriction_partition": sorted(sorted(list(rcn[k]) for k in bits(b))
                                                     for b in rblocks if b),
                     "bijective": True, "restriction": search.table(rest, rblocks)})
    cert = {"kind": "factorization_table", "arrangement": arrangement_json(c), "rank": dim,
            "partition": [[list(v) for v in b] for b in P], "rows": rows,
            "exponents": pad([len(b) for b in blocks], dim)}
    verify_factorization_table(cert)
    return cert


def lift_by_modular_coatom(arr, flat, cert):
    """Extend a certificate for the localization at a modular coatom to arr.

    The hyperplanes outside the flat are appended last, forming one new
    block (factorization tables) or the last rows (induction tables); the new
    exponent is their number.
    """
    if arr.rank_of(flat) != arr.rank - 1 or arr.closure(flat) != flat:
        raise ValueError("flat is not a coatom of the lattice")
    if not is_modular(arr, flat):
        raise ValueError("flat is not modular")
    inside = bits(flat)
    outside = [h for h in range(len(arr)) if not (flat >> h) & 1]
    sub = arr.subarrangement(flat)
    _, scn = canonical_normals(sub)
    where = {v: inside[k] for k, v in enumerate(scn)}
    first = [where[tuple(row["hyperplane"])] for row in cert["rows"]]
    order = first + outside
    if cert["kind"] == "induction_table":
        return induction_table_from_order(arr, order)
    if cert["kind"] == "factorization_table":
        blocks = [[where[tuple(v)] for v in b] for b in cert["partition"]] + [outside]
        return factorization_table_from_order(arr, order, blocks)
    raise ValueError(f"cannot lift a {cert['kind']}")
