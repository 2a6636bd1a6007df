"""Matroids as independence oracles over an ordered ground set.

A :class:`Matroid` wraps a predicate on subset bitmasks (bit ``j`` is the
``j``-th ground element).  Class constructors attach a ``class_tag`` and the
parameters the width and pathwidth results depend on.  Minors, duals and
direct sums are evaluated lazily through their parents; the full 2^n
independence table is only built on request and then derived with the table
kernels instead of per-subset oracle calls.
"""

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from . import kernels
from .dd import ElementOrder
from .family import SetFamily, bits_of, check_basis_axioms, check_independence_axioms, downward_closure

CLASS_TAGS = (
    "free",
    "uniform",
    "partition",
    "nested",
    "transversal",
    "laminar",
    "graphic",
    "gf2",
    "explicit",
    "derived",
)

# tags whose class carries a blocks list ((r_j, n_j), ...) usable by direct_sum
_BLOCK_CLASSES = ("free", "uniform", "partition")


class MatroidError(ValueError):
    pass


def _popcount(m):
    return bin(m).count("1")


def _deposit(m, positions):
    out = 0
    i = 0
    while m:
        if m & 1:
            out |= 1 << positions[i]
        m >>= 1
        i += 1
    return out


def _deposit_array(k, positions):
    idx = np.arange(1 << k, dtype=np.int64)
    out = np.zeros_like(idx)
    for i, p in enumerate(positions):
        out |= ((idx >> i) & 1) << p
    return out


class Matroid:
    """Independence oracle on ``ground`` with a class tag and parameters."""

    def __init__(self, ground, oracle, class_tag="explicit", params=None, table_fn=None):
        if class_tag not in CLASS_TAGS:
            raise MatroidError(f"unknown class tag {class_tag!r}")
        self.ground = ground if isinstance(ground, ElementOrder) else ElementOrder(ground)
        self._oracle = oracle
        self.class_tag = class_tag
        self.params = dict(params or {})
        self._table_fn = table_fn
        self._table = None
        self._rank_table = None
        self._rank = None

    def __repr__(self):
        return f"Matroid({self.class_tag}, n={self.n}, rank={self.rank()})"

    @property
    def n(self):
        return len(self.ground)

    @property
    def full(self):
        return (1 << self.n) - 1

    def mask(self, X):
        """Bitmask for ``X`` given as a mask or as an iterable of element names."""
        if isinstance(X, (int, np.integer)):
            X = int(X)
            if X < 0 or X >> self.n:
                raise MatroidError(f"subset mask {X} outside a ground set of {self.n}")
            return X
        try:
            return self.ground.mask(X)
        except KeyError as exc:
            raise MatroidError(str(exc.args[0])) from None

    def is_independent(self, X):
        X = self.mask(X)
        if self._table is not None:
            return bool(self._table[X])
        return bool(self._oracle(X))

    # -- tables -----------------------------------------------------------

    def independence_table(self):
        """Read-only boolean table over all 2^n subsets."""
        if self._table is None:
            if self._table_fn is not None:
                t = np.asarray(self._table_fn(), dtype=np.bool_)
            else:
                t = np.fromiter((self._oracle(m) for m in range(1 << self.n)), dtype=np.bool_, count=1 << self.n)
            t.setflags(write=False)
            self._table = t
        return self._table

    def rank_table(self):
        if self._rank_table is None:
            rt = kernels.rank_table(self.independence_table())
            rt.setflags(write=False)
            self._rank_table = rt
        return self._rank_table

    def level_table(self, order):
        """Independence table re-indexed so that bit ``i`` is ``order[i]``."""
        src = self.order_positions(order)
        if src == list(range(self.n)):
            return self.independence_table()
        return kernels.permute_table(self.independence_table(), src)

    def order_positions(self, order):
        """Ground index of each element of ``order``, by level."""
        order = order if isinstance(order, ElementOrder) else ElementOrder(order)
        if not order.is_permutation_of(self.ground):
            raise MatroidError("order is not a permutation of the ground set")
        return [self.ground.index_of[e] for e in order]

    # -- rank and friends ----------------------------------------------------

    def greedy_basis(self, X=None):
        """Greedy basis of X, adding elements in ground order."""
        X = self.full if X is None else self.mask(X)
        B = 0
        for b in bits_of(X):
            if self.is_independent(B | (1 << b)):
                B |= 1 << b
        return B

    def rank(self, X=None):
        if X is None:
            if self._rank is None:
                self._rank = _popcount(self.greedy_basis())
            return self._rank
        return _popcount(self.greedy_basis(X))

    def connectivity(self, X):
        X = self.mask(X)
        return self.rank(X) + self.rank(self.full ^ X) - self.rank()

    def is_loop(self, e):
        return not self.is_independent([e])

    def is_coloop(self, e):
        X = self.mask([e])
        return self.rank(self.full ^ X) == self.rank() - 1

    def independent_sets(self, order=None):
        """I(M) as a SetFamily, indexed by ``order`` levels (ground order by default)."""
        t = self.independence_table() if order is None else self.level_table(order)
        return SetFamily.from_table(t)

    def bases(self, order=None):
        F = self.independent_sets(order)
        r = self.rank()
        return SetFamily(F.ground_size, F.members[F.sizes() == r])

    def validate(self):
        """Exhaustive axiom verdicts for I(M) and B(M)."""
        return check_independence_axioms(self.independent_sets()), check_basis_axioms(self.bases())


# -- class constructors -----------------------------------------------------


def _names(n, names, prefix="e"):
    if names is None:
        return ElementOrder.numbered(n, prefix)
    order = ElementOrder(names)
    if len(order) != n:
        raise MatroidError(f"expected {n} element names, got {len(order)}")
    return order


def _capacity_matroid(ground, masks, caps, class_tag, params):
    masks = [int(m) for m in masks]
    caps = [int(c) for c in caps]

    def oracle(X):
        return all(_popcount(X & m) <= c for m, c in zip(masks, caps))

    def table():
        return kernels.constraint_table(len(ground), masks, caps)

    return Matroid(ground, oracle, class_tag, params, table_fn=table)


def free(n, names=None):
    ground = _names(n, names)
    return _capacity_matroid(ground, [], [], "free", {"r": n, "n": n, "blocks": [(n, n)]})


def uniform(r, n, names=None):
    if not 0 <= r <= n:
        raise MatroidError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    ground = _names(n, names)
    return _capacity_matroid(ground, [(1 << n) - 1], [r], "uniform", {"r": r, "n": n, "blocks": [(r, n)]})


def partition(blocks, names=None):
    """Direct sum of uniform matroids ``U_{r_j, n_j}``, blocks laid out contiguously."""
    blocks = [(int(r), int(k)) for r, k in blocks]
    for r, k in blocks:
        if not 0 <= r <= k:
            raise MatroidError(f"partition block needs 0 <= r <= n, got ({r}, {k})")
    n = sum(k for _, k in blocks)
    if names is None:
        names = [f"e{j + 1}_{i + 1}" for j, (_, k) in enumerate(blocks) for i in range(k)]
    ground = _names(n, names)
    masks, start = [], 0
    for _, k in blocks:
        masks.append(((1 << k) - 1) << start)
        start += k
    return _capacity_matroid(ground, masks, [r for r, _ in blocks], "partition", {"blocks": blocks})


def gale_leq(A, B):
    """Gale order on equal-size masks over a common index order."""
    a, b = bits_of(A), bits_of(B)
    return len(a) == len(b) and all(x <= y for x, y in zip(a, b))


def nested_from_gale(n, gale, names=None):
    """Nested matroid whose bases are the sets Gale-below ``gale`` (1-based positions)."""
    g = sorted(int(x) - 1 for x in gale)
    if len(set(g)) != len(g) or any(not 0 <= x < n for x in g):
        raise MatroidError(f"gale set {list(gale)} is not a subset of 1..{n}")
    ground = _names(n, names)
    r = len(g)

    def oracle(X):
        s = bits_of(X)
        k = len(s)
        if k > r:
            return False
        return all(s[j] <= g[r - k + j] for j in range(k))

    return Matroid(ground, oracle, "nested", {"n": n, "gale": [x + 1 for x in g], "left_justified": ground})


def _augment(x, adj, match_of_set, seen):
    for j in adj[x]:
        if j in seen:
            continue
        seen.add(j)
        if match_of_set[j] < 0 or _augment(match_of_set[j], adj, match_of_set, seen):
            match_of_set[j] = x
            return True
    return False


def transversal_independent(presentation, X):
    """Whether X (mask) has a system of distinct representatives in ``presentation``.

    ``presentation`` is a sequence of masks; augmenting-path bipartite matching.
    """
    elems = bits_of(X)
    adj = [[j for j, A in enumerate(presentation) if (A >> e) & 1] for e in elems]
    match_of_set = [-1] * len(presentation)
    for x in range(len(elems)):
        if not _augment(x, adj, match_of_set, set()):
            return False
    return True


def transversal(presentation, elements):
    ground = ElementOrder(elements)
    pres = [ground.mask(A) for A in presentation]
    params = {"presentation": [list(A) for A in presentation]}
    return Matroid(ground, lambda X: transversal_independent(pres, X), "transversal", params)


def nested(presentation, elements):
    """Nested matroid from a chain presentation ``A_1 ⊆ ... ⊆ A_m``.

    The ground set is re-ordered A_1, A_2 minus A_1, ..., then elements outside
    A_m; that order is recorded as ``params['left_justified']``.
    """
    given = ElementOrder(elements)
    sets = [given.mask(A) for A in presentation]
    for a, b in zip(sets, sets[1:]):
        if a & ~b:
            raise MatroidError("nested presentation must be a chain A_1 ⊆ ... ⊆ A_m")
    layout, seen = [], 0
    for A in sets + [given.mask(given.elements)]:
        for i in bits_of(A & ~seen):
            layout.append(given[i])
        seen |= A
    ground = ElementOrder(layout)
    pres = [ground.mask(given.names(A)) for A in sets]
    params = {"presentation": [list(A) for A in presentation], "left_justified": ground}
    return Matroid(ground, lambda X: transversal_independent(pres, X), "nested", params)


def is_laminar(masks):
    for a, b in combinations(set(masks), 2):
        if a & b and (a & ~b) and (b & ~a):
            return False
    return True


def laminar(sets, capacities, elements):
    ground = ElementOrder(elements)
    masks = [ground.mask(A) for A in sets]
    caps = [int(c) for c in capacities]
    if len(masks) != len(caps):
        raise MatroidError("laminar matroid needs one capacity per set")
    if any(c < 0 for c in caps):
        raise MatroidError("laminar capacities must be non-negative")
    if not is_laminar(masks):
        raise MatroidError("constraint sets are not laminar")
    params = {"sets": [list(A) for A in sets], "capacities": caps}
    return _capacity_matroid(ground, masks, caps, "laminar", params)


def graphic(num_vertices, edges, names=None):
    """Cycle matroid: a set of edges is independent iff it is a forest."""
    edges = [(int(u), int(v)) for u, v in edges]
    for u, v in edges:
        if not (0 <= u < num_vertices and 0 <= v < num_vertices):
            raise MatroidError(f"edge ({u}, {v}) outside {num_vertices} vertices")
    ground = _names(len(edges), names)

    def oracle(X):
        parent = list(range(num_vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        for i in bits_of(X):
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    return Matroid(ground, oracle, "graphic", {"vertices": num_vertices, "edges": edges})


def gf2_rank(vectors):
    """Rank over GF(2) of int bit-vectors, by reduction against a pivot basis."""
    pivots = {}
    for v in vectors:
        while v:
            top = v.bit_length() - 1
            if top not in pivots:
                pivots[top] = v
                break
            v ^= pivots[top]
    return len(pivots)


def gf2(matrix, names=None):
    """Vector matroid of a 0/1 matrix (rows of column entries) over GF(2)."""
    rows = [list(map(int, row)) for row in matrix]
    ncols = len(rows[0]) if rows else 0
    if any(len(row) != ncols for row in rows):
        raise MatroidError("gf2 matrix rows have different lengths")
    if any(x not in (0, 1) for row in rows for x in row):
        raise MatroidError("gf2 matrix entries must be 0 or 1")
    cols = [sum(row[j] << i for i, row in enumerate(rows)) for j in range(ncols)]
    ground = _names(ncols, names)

    def oracle(X):
        sel = [cols[j] for j in bits_of(X)]
        return gf2_rank(sel) == len(sel)

    return Matroid(ground, oracle, "gf2", {"matrix": rows})


def explicit(elements, bases=None, independent=None):
    """Matroid from a listed family of bases or of independent sets (not validated)."""
    ground = ElementOrder(elements)
    if (bases is None) == (independent is None):
        raise MatroidError("give exactly one of bases= or independent=")
    F = SetFamily(len(ground), [ground.mask(S) for S in (bases if bases is not None else independent)])
    if bases is not None:
        F = downward_closure(F)
    table = F.table()
    table.setflags(write=False)
    m = Matroid(ground, lambda X: bool(table[X]), "explicit", {"family": F})
    m._table = table
    return m


# -- derived matroids -------------------------------------------------------


def dual(M):
    r = M.rank()
    full = M.full

    def oracle(X):
        return M.rank(full ^ X) == r

    def table():
        idx = np.arange(1 << M.n, dtype=np.int64)
        return M.rank_table()[full ^ idx] == r

    tag, params = "derived", {"op": "dual", "of": M}
    if M.class_tag in ("free", "uniform"):
        tag, params = "uniform", {"r": M.n - r, "n": M.n, "blocks": [(M.n - r, M.n)]}
    elif M.class_tag == "partition":
        tag, params = "partition", {"blocks": [(k - q, k) for q, k in M.params["blocks"]]}
    return Matroid(M.ground, oracle, tag, params, table_fn=table)


def _split(M, X):
    X = M.mask(X)
    keep = [i for i in range(M.n) if not (X >> i) & 1]
    return X, keep


def delete(M, X):
    X, keep = _split(M, X)
    if X == 0:
        return M
    ground = ElementOrder(M.ground[i] for i in keep)
    return Matroid(
        ground,
        lambda Y: M.is_independent(_deposit(Y, keep)),
        "derived",
        {"op": "delete", "of": M, "removed": M.ground.names(X)},
        table_fn=lambda: M.independence_table()[_deposit_array(len(keep), keep)],
    )


def contract(M, X):
    X, keep = _split(M, X)
    if X == 0:
        return M
    B = M.greedy_basis(X)
    ground = ElementOrder(M.ground[i] for i in keep)
    return Matroid(
        ground,
        lambda Y: M.is_independent(_deposit(Y, keep) | B),
        "derived",
        {"op": "contract", "of": M, "removed": M.ground.names(X), "basis": M.ground.names(B)},
        table_fn=lambda: M.independence_table()[_deposit_array(len(keep), keep) | B],
    )


def minor(M, delete_set=(), contract_set=()):
    """``M \\ delete_set / contract_set`` by element names."""
    clash = set(delete_set) & set(contract_set)
    if clash:
        raise MatroidError(f"elements both deleted and contracted: {sorted(clash)}")
    return contract(delete(M, list(delete_set)), list(contract_set))


def direct_sum(M1, M2):
    clash = set(M1.ground) & set(M2.ground)
    if clash:
        raise MatroidError(f"direct sum needs disjoint ground sets; shared: {sorted(clash)}")
    n1 = M1.n
    low = M1.full
    ground = ElementOrder(list(M1.ground) + list(M2.ground))

    def table():
        t1, t2 = M1.independence_table(), M2.independence_table()
        return (t2[:, None] & t1[None, :]).reshape(-1)

    if M1.class_tag in _BLOCK_CLASSES and M2.class_tag in _BLOCK_CLASSES:
        tag = "partition"
        params = {"blocks": list(M1.params["blocks"]) + list(M2.params["blocks"])}
    else:
        tag, params = "derived", {"op": "direct_sum", "of": (M1, M2)}
    return Matroid(
        ground,
        lambda X: M1.is_independent(X & low) and M2.is_independent(X >> n1),
        tag,
        params,
        table_fn=table,
    )


# -- Gale bases -------------------------------------------------------------


@dataclass(frozen=True)
class GaleBasis:
    basis: int
    order: ElementOrder

    @property
    def names(self):
        return self.order.names(self.basis)


def gale_basis(M, order=None):
    """The Gale-maximal basis under ``order``; ``basis`` is a level-indexed mask."""
    order = M.ground if order is None else (order if isinstance(order, ElementOrder) else ElementOrder(order))
    pos = M.order_positions(order)
    B, Bm = 0, 0
    for lvl in range(M.n - 1, -1, -1):
        cand = Bm | (1 << pos[lvl])
        if M.is_independent(cand):
            Bm = cand
            B |= 1 << lvl
    return GaleBasis(B, order)
