"""Reduced ordered BDDs and ZDDs over a hash-consed node store.

Nodes live in a :class:`NodeStore`; a node is the triple ``(label, lo, hi)``
where ``label`` is a 0-based level and ``lo``/``hi`` are the heads of the 0-
and 1-arc.  Node ids 0 and 1 are the terminals :data:`BOT` and :data:`TOP`,
whose label is the sentinel ``n``.  Every node enters the store through
:func:`make_node`, which applies the node-deletion rule of the diagram kind
and shares equal triples, so equal ids mean equal sub-diagrams.
"""

import enum
from dataclasses import dataclass

import numpy as np

from .family import SetFamily, bits_of

BOT = 0
TOP = 1


class DiagramError(ValueError):
    pass


class Kind(str, enum.Enum):
    BDD = "bdd"
    ZDD = "zdd"

    def __str__(self):
        return self.value.upper()


class ElementOrder:
    """Element names in level order; level ``i`` carries ``elements[i]``."""

    __slots__ = ("elements", "index_of")

    def __init__(self, elements):
        elements = tuple(str(e) for e in elements)
        index_of = {e: i for i, e in enumerate(elements)}
        if len(index_of) != len(elements):
            raise ValueError("duplicate element names in order")
        self.elements = elements
        self.index_of = index_of

    @classmethod
    def numbered(cls, n, prefix="e"):
        return cls(f"{prefix}{i + 1}" for i in range(n))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __eq__(self, other):
        return isinstance(other, ElementOrder) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return f"ElementOrder({list(self.elements)})"

    def mask(self, names):
        try:
            m = 0
            for e in names:
                m |= 1 << self.index_of[str(e)]
            return m
        except KeyError as exc:
            raise KeyError(f"unknown element {exc.args[0]!r}") from None

    def names(self, mask):
        return [self.elements[i] for i in bits_of(mask)]

    def is_permutation_of(self, other):
        return sorted(self.elements) == sorted(other.elements)


class NodeStore:
    """Unique table for diagrams over ``n`` levels."""

    def __init__(self, n):
        self.n = n
        self.label = [n, n]
        self.lo = [-1, -1]
        self.hi = [-1, -1]
        self._unique = {}

    def __len__(self):
        return len(self.label)

    def is_terminal(self, v):
        return v <= TOP

    def find(self, label, lo, hi):
        """The stored node for ``(label, lo, hi)``, or None."""
        return self._unique.get((label, lo, hi))

    def insert(self, label, lo, hi):
        """Return the node for ``(label, lo, hi)``, creating it if absent.

        Only node sharing happens here; deletion rules are the caller's job.
        """
        key = (label, lo, hi)
        v = self._unique.get(key)
        if v is None:
            la, lb = self.label[lo], self.label[hi]
            if not (label < la and label < lb):
                raise DiagramError(
                    f"ordering violation: node label {label} must be below child labels {la} and {lb}"
                )
            v = len(self.label)
            self.label.append(label)
            self.lo.append(lo)
            self.hi.append(hi)
            self._unique[key] = v
        return v


def make_node(store, kind, label, lo, hi):
    """Reduced node constructor.

    A BDD node with equal children and a ZDD node whose 1-arc points to BOT
    are skipped; anything else is shared through the store.
    """
    if kind is Kind.BDD:
        if lo == hi:
            return lo
    elif hi == BOT:
        return lo
    return store.insert(label, lo, hi)


@dataclass(frozen=True, eq=False)
class Diagram:
    kind: Kind
    order: ElementOrder
    root: int
    store: NodeStore

    @property
    def n(self):
        return len(self.order)

    def label(self, v):
        return self.store.label[v]

    def children(self, v):
        return self.store.lo[v], self.store.hi[v]

    def same_as(self, other):
        """Root identity in a shared store (the canonicity check)."""
        if self.store is not other.store:
            raise DiagramError("diagrams from different stores cannot be compared by root")
        return self.kind is other.kind and self.order == other.order and self.root == other.root

    def nodes(self):
        """Reachable non-terminal nodes, depth-first with 0-arcs first."""
        seen = set()
        out = []
        stack = [self.root]
        lo, hi = self.store.lo, self.store.hi
        while stack:
            v = stack.pop()
            if v <= TOP or v in seen:
                continue
            seen.add(v)
            out.append(v)
            stack.append(hi[v])
            stack.append(lo[v])
        return out

    def __repr__(self):
        return f"Diagram({self.kind}, n={self.n}, root={self.root}, size={size(self)})"


def from_family(kind, order, F, store=None):
    """The reduced diagram of ``F`` (members indexed by level)."""
    kind = Kind(kind)
    n = len(order)
    if F.ground_size != n:
        raise DiagramError(f"family over {F.ground_size} elements, order has {n}")
    if store is None:
        store = NodeStore(n)
    elif store.n != n:
        raise DiagramError(f"store has {store.n} levels, order has {n}")
    memo = {}
    zdd = kind is Kind.ZDD

    def rec(level, arr):
        if arr.shape[0] == 0:
            return BOT
        if level == n or (zdd and arr.shape[0] == 1 and arr[0] == 0):
            return TOP
        key = (level, arr.tobytes())
        v = memo.get(key)
        if v is None:
            bit = np.int64(1) << level
            has = (arr & bit) != 0
            lo = rec(level + 1, arr[~has])
            hi = rec(level + 1, arr[has] ^ bit)
            v = memo[key] = make_node(store, kind, level, lo, hi)
        return v

    return Diagram(kind, order, rec(0, np.asarray(F.members, dtype=np.int64)), store)


def import_diagram(D, store):
    """Copy ``D`` into ``store``; the copy is node-for-node identical."""
    if store.n != D.store.n:
        raise DiagramError("stores differ in level count")
    memo = {BOT: BOT, TOP: TOP}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        memo[v] = make_node(store, D.kind, D.label(v), memo[lo], memo[hi])
    return Diagram(D.kind, D.order, memo[D.root], store)


def _topological(D):
    """Reachable non-terminals, parents before children (labels ascending)."""
    return sorted(D.nodes(), key=lambda v: (D.label(v), v))


def contains(D, X):
    """Membership of the level-indexed subset mask ``X`` in the family of ``D``."""
    v = D.root
    lo, hi, label = D.store.lo, D.store.hi, D.store.label
    cur = 0
    zdd = D.kind is Kind.ZDD
    while v > TOP:
        lv = label[v]
        if zdd and (X >> cur) & ((1 << (lv - cur)) - 1):
            return False
        v = hi[v] if (X >> lv) & 1 else lo[v]
        cur = lv + 1
    if v != TOP:
        return False
    return not (zdd and X >> cur)


def count(D):
    """Number of member sets (exact integer)."""
    n = D.n
    label = D.store.label
    bdd = D.kind is Kind.BDD
    memo = {BOT: 0, TOP: 1}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        if bdd:
            lv = label[v]
            memo[v] = (memo[lo] << (label[lo] - lv - 1)) + (memo[hi] << (label[hi] - lv - 1))
        else:
            memo[v] = memo[lo] + memo[hi]
    c = memo[D.root]
    if bdd:
        c <<= label[D.root] if D.root > TOP else n
    return c


def _expand(arr, start, stop):
    for lvl in range(start, stop):
        arr = np.concatenate([arr, arr | (np.int64(1) << lvl)])
    return arr


def enumerate_family(D):
    """The represented family as a :class:`SetFamily` (don't-cares expanded)."""
    n = D.n
    label = D.store.label
    bdd = D.kind is Kind.BDD
    empty = np.zeros(0, dtype=np.int64)
    memo = {BOT: empty, TOP: np.zeros(1, dtype=np.int64)}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        lv = label[v]
        a, b = memo[lo], memo[hi]
        if bdd:
            a = _expand(a, lv + 1, label[lo])
            b = _expand(b, lv + 1, label[hi])
        memo[v] = np.concatenate([a, b | (np.int64(1) << lv)])
    out = memo[D.root]
    if bdd:
        out = _expand(out, 0, label[D.root] if D.root > TOP else n)
    return SetFamily(n, out)


def level_widths(D):
    widths = [0] * D.n
    for v in D.nodes():
        widths[D.label(v)] += 1
    return widths


def size(D):
    return len(D.nodes())


def width(D):
    return max(level_widths(D), default=0)


def one_path_lengths(D):
    """Set of non-terminal counts over all root-to-TOP paths."""
    memo = {BOT: frozenset(), TOP: frozenset({0})}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        memo[v] = frozenset(k + 1 for k in memo[lo] | memo[hi])
    return set(memo[D.root])


def audit(D):
    """Structural problems of ``D`` as strings; empty when the diagram is reduced."""
    problems = []
    seen = {}
    reach = {BOT: False, TOP: True}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        lv = D.label(v)
        if not (lv < D.label(lo) and lv < D.label(hi)):
            problems.append(f"node {v}: label {lv} not below children")
        if D.kind is Kind.BDD and lo == hi:
            problems.append(f"node {v}: redundant BDD node (lo == hi)")
        if D.kind is Kind.ZDD and hi == BOT:
            problems.append(f"node {v}: redundant ZDD node (hi == BOT)")
        key = (lv, lo, hi)
        if key in seen:
            problems.append(f"nodes {seen[key]} and {v} share label and children")
        seen[key] = v
        reach[v] = reach[lo] or reach[hi]
        if not reach[v]:
            problems.append(f"node {v}: cannot reach TOP")
    return problems


def to_dot(D, name="DD"):
    """Graphviz text; node names follow a canonical depth-first numbering."""
    ids = {}
    for v in D.nodes():
        ids[v] = f"n{len(ids)}"
    terms = []
    if D.root <= TOP:
        terms.append(D.root)
    for v in ids:
        for c in D.children(v):
            if c <= TOP and c not in terms:
                terms.append(c)
    lines = [f"digraph {name} {{", f'  label="{D.kind}";', "  node [shape=circle];"]
    for v, nid in ids.items():
        lines.append(f'  {nid} [label="{D.order[D.label(v)]}"];')
    for t in sorted(terms):
        lines.append(f'  t{t} [shape=box, label="{"⊤" if t == TOP else "⊥"}"];')

    def ref(c):
        return f"t{c}" if c <= TOP else ids[c]

    for v, nid in ids.items():
        lo, hi = D.children(v)
        lines.append(f"  {nid} -> {ref(lo)} [style=dashed];")
        lines.append(f"  {nid} -> {ref(hi)};")
    by_level = {}
    for v, nid in ids.items():
        by_level.setdefault(D.label(v), []).append(nid)
    for lvl in sorted(by_level):
        lines.append("  { rank=same; " + " ".join(f"{x};" for x in by_level[lvl]) + " }")
    if terms:
        lines.append("  { rank=sink; " + " ".join(f"t{t};" for t in sorted(terms)) + " }")
    lines.append("}")
    return "\n".join(lines) + "\n"
