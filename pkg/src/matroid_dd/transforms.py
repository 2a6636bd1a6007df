"""Arc-rewiring transformations between diagram variants, and the size report.

Each transform walks its input bottom-up and rebuilds into a fresh
:class:`~matroid_dd.dd.NodeStore`; the input store is never touched.
"""

from dataclasses import dataclass, field

from .build import Target, build_all
from .dd import BOT, Diagram, Kind, NodeStore, _topological, audit, enumerate_family, import_diagram, make_node, size
from .family import containing_pair
from .matroid import dual


class TransformError(ValueError):
    pass


def _rebuild(D, kind, step, store=None):
    """Bottom-up rebuild; ``step(store, label, lo, hi)`` returns the new node."""
    store = NodeStore(D.store.n) if store is None else store
    memo = {0: 0, 1: 1}
    for v in reversed(_topological(D)):
        lo, hi = D.children(v)
        memo[v] = step(store, D.label(v), memo[lo], memo[hi])
    return Diagram(kind, D.order, memo[D.root], store)


def _require_clutter(D):
    pair = containing_pair(enumerate_family(D))
    if pair is not None:
        a, b = D.order.names(pair[0]), D.order.names(pair[1])
        raise TransformError(f"family is not a clutter: {a} is contained in {b}")


def clutter_bdd_to_zdd(D):
    """ZDD of the clutter represented by BDD ``D``, never larger than ``D``."""
    if D.kind is not Kind.BDD:
        raise TransformError("clutter_bdd_to_zdd expects a BDD")
    _require_clutter(D)
    return _rebuild(D, Kind.ZDD, lambda s, l, lo, hi: make_node(s, Kind.ZDD, l, lo, hi))


def swap_arcs(D):
    """Exchange the 0- and 1-arc of every node; the result is a BDD.

    For a BDD of a clutter this gives the BDD of the complemented clutter.
    For the ZDD of a basis family it gives the BDD of the dual's independent
    sets.  The rewired diagram is audited against the BDD reduction rules.
    """
    if D.kind is Kind.BDD:
        _require_clutter(D)
    out = _rebuild(D, Kind.BDD, lambda s, l, lo, hi: s.insert(l, hi, lo))
    problems = audit(out)
    if problems:
        raise TransformError("swapped diagram is not a reduced BDD: " + "; ".join(problems[:3]))
    return out


def bases_to_independents(D, strict=True):
    """Redirect every 0-arc into BOT onto the node's 1-child.

    Applied to a diagram of B(M) this yields the diagram of I(M).  For BDDs
    the reduction rules are re-applied.  For ZDDs the rewired diagram should
    already be reduced; with ``strict`` a needed reduction raises.
    """
    merged = []

    def step(s, label, lo, hi):
        if lo == BOT:
            lo = hi
        if D.kind is Kind.BDD:
            return make_node(s, Kind.BDD, label, lo, hi)
        if hi == BOT or s.find(label, lo, hi) is not None:
            merged.append(label)
        return make_node(s, Kind.ZDD, label, lo, hi)

    out = _rebuild(D, D.kind, step)
    if merged and strict:
        raise TransformError(f"ZDD needed reduction after rewiring at levels {sorted(set(merged))}")
    return out


def same_diagram(D1, D2):
    """Whether two diagrams represent the same family (root identity after import)."""
    if D1.kind is not D2.kind or D1.order != D2.order:
        return False
    return import_diagram(D1, D2.store).root == D2.root


def _key(t, star):
    return f"{'B' if t.kind is Kind.BDD else 'Z'}({'I' if t.target is Target.INDEPENDENT else 'B'}{'*' if star else ''})"


# (left, op, right); keys as produced by _key
RELATIONS = (
    ("Z(I)", "=", "Z(B)"),
    ("Z(B)", "<=", "B(B)"),
    ("B(I)", "<=", "B(B)"),
    ("Z(B)", "=", "B(I*)"),
    ("B(B)", "=", "B(B*)"),
    ("B(I)", "=", "Z(B*)"),
    ("B(I*)", "<=", "B(B*)"),
    ("Z(B*)", "<=", "B(B*)"),
    ("Z(I*)", "=", "Z(B*)"),
)


@dataclass
class SizeRelationsReport:
    sizes: dict
    relations: list = field(default_factory=list)
    transforms: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r[-1] for r in self.relations) and all(t[-1] for t in self.transforms)

    def rows(self):
        """``(check, lhs, op, rhs, lhs_size, rhs_size, verdict)`` per size relation."""
        return [(f"{a} {op} {b}", a, op, b, la, lb, "PASS" if ok else "FAIL") for a, op, b, la, lb, ok in self.relations]


def size_relations_report(M, order=None):
    """Sizes of the eight diagrams of M and M*, the nine relations among them,
    and root-identity checks of every transform against its direct target."""
    order = M.ground if order is None else order
    Md = dual(M)
    built = {}
    for star, m in ((False, M), (True, Md)):
        for t, D in build_all(m, order).items():
            built[_key(t, star)] = D
    sizes = {k: size(D) for k, D in built.items()}

    relations = []
    for a, op, b in RELATIONS:
        la, lb = sizes[a], sizes[b]
        relations.append((a, op, b, la, lb, la == lb if op == "=" else la <= lb))

    transforms = []
    for star in (False, True):
        s = "*" if star else ""
        o = "" if star else "*"
        checks = (
            (f"clutter_bdd_to_zdd(B(B{s})) == Z(B{s})", clutter_bdd_to_zdd, f"B(B{s})", f"Z(B{s})"),
            (f"swap_arcs(B(B{s})) == B(B{o})", swap_arcs, f"B(B{s})", f"B(B{o})"),
            (f"swap_arcs(Z(B{s})) == B(I{o})", swap_arcs, f"Z(B{s})", f"B(I{o})"),
            (f"bases_to_independents(Z(B{s})) == Z(I{s})", bases_to_independents, f"Z(B{s})", f"Z(I{s})"),
            (f"bases_to_independents(B(B{s})) == B(I{s})", bases_to_independents, f"B(B{s})", f"B(I{s})"),
        )
        for name, fn, src, dst in checks:
            try:
                ok = same_diagram(fn(built[src]), built[dst])
            except TransformError:
                ok = False
            transforms.append((name, ok))
    return SizeRelationsReport(sizes, relations, transforms)

