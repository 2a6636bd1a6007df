import random

import pytest
from hypothesis import given, settings, strategies as st

from matroid_dd.dd import (
    BOT,
    TOP,
    DiagramError,
    ElementOrder,
    Kind,
    NodeStore,
    audit,
    contains,
    count,
    enumerate_family,
    from_family,
    import_diagram,
    level_widths,
    make_node,
    one_path_lengths,
    size,
    to_dot,
    width,
)
from matroid_dd.family import SetFamily

ORDER5 = ElementOrder([str(i) for i in range(1, 6)])
FIG = SetFamily.from_sets(5, [(0, 1, 4), (3, 4), (4,)])

families = st.integers(0, 8).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(0, (1 << n) - 1), max_size=24))
)


def test_small_family_widths():
    Z = from_family(Kind.ZDD, ORDER5, FIG)
    B = from_family(Kind.BDD, ORDER5, FIG)
    assert size(Z) == 4 and level_widths(Z) == [1, 1, 0, 1, 1]
    assert size(B) == 7 and level_widths(B) == [1, 2, 2, 1, 1]
    assert sorted(B.label(v) for v in B.nodes()) == [0, 1, 1, 2, 2, 3, 4]
    assert count(Z) == count(B) == 3


def test_membership():
    Z = from_family("zdd", ORDER5, FIG)
    assert contains(Z, ORDER5.mask(["4", "5"]))
    assert not contains(Z, ORDER5.mask(["2", "5"]))
    assert not contains(Z, 0)


def test_make_node_rules():
    s = NodeStore(3)
    x = s.insert(2, BOT, TOP)
    assert make_node(s, Kind.ZDD, 1, x, BOT) == x
    assert make_node(s, Kind.BDD, 1, x, x) == x
    assert make_node(s, Kind.BDD, 0, x, TOP) == make_node(s, Kind.BDD, 0, x, TOP)
    with pytest.raises(DiagramError, match="ordering"):
        make_node(s, Kind.ZDD, 2, x, TOP)


def test_terminal_cases():
    o = ElementOrder.numbered(4)
    assert from_family("zdd", o, SetFamily(4)).root == BOT
    assert from_family("zdd", o, SetFamily(4, [0])).root == TOP
    full = from_family("bdd", o, SetFamily(4, range(16)))
    assert full.root == TOP and size(full) == 0 and count(full) == 16
    assert level_widths(full) == [0, 0, 0, 0] and width(full) == 0
    with pytest.raises(DiagramError):
        from_family("zdd", o, SetFamily(3))


@settings(max_examples=60, deadline=None)
@given(families, st.sampled_from(["bdd", "zdd"]))
def test_round_trip_and_semantics(nf, kind):
    n, ms = nf
    F = SetFamily(n, ms)
    D = from_family(kind, ElementOrder.numbered(n), F)
    assert enumerate_family(D) == F
    assert count(D) == len(F)
    assert audit(D) == []
    for X in range(1 << n):
        assert contains(D, X) == (X in F)


@settings(max_examples=40, deadline=None)
@given(families, st.lists(st.integers(0, 255), max_size=24), st.sampled_from(["bdd", "zdd"]))
def test_canonicity(nf, other, kind):
    n, ms = nf
    F1 = SetFamily(n, ms)
    F2 = SetFamily(n, [m & ((1 << n) - 1) for m in other])
    o = ElementOrder.numbered(n)
    store = NodeStore(n)
    D1 = from_family(kind, o, F1, store)
    D2 = from_family(kind, o, F2, store)
    assert (D1.root == D2.root) == (F1 == F2)


def test_import_and_cross_store():
    o = ElementOrder.numbered(5)
    D = from_family("zdd", ORDER5, FIG)
    s = NodeStore(5)
    C = import_diagram(D, s)
    assert size(C) == size(D)
    assert enumerate_family(C) == FIG
    with pytest.raises(DiagramError):
        C.same_as(D)
    assert o != ORDER5


def test_one_path_lengths_and_audit_detects_problems():
    B = from_family("bdd", ORDER5, FIG)
    assert one_path_lengths(B) == {4, 5}
    s = NodeStore(2)
    bad = s.insert(0, TOP, TOP)
    from matroid_dd.dd import Diagram

    assert any("redundant BDD" in p for p in audit(Diagram(Kind.BDD, ElementOrder.numbered(2), bad, s)))
    dead = s.insert(1, BOT, BOT)
    assert any("cannot reach TOP" in p for p in audit(Diagram(Kind.ZDD, ElementOrder.numbered(2), dead, s)))


def test_dot_output():
    Z = from_family("zdd", ORDER5, FIG)
    text = to_dot(Z)
    assert text.count("shape=box") == 2
    assert text.count("->") == 8
    assert text.count("style=dashed") == 4
    circles = [ln for ln in text.splitlines() if ln.strip().startswith("n") and "label=" in ln]
    assert len(circles) == 4
    assert to_dot(from_family("zdd", ORDER5, FIG)) == text
    top = to_dot(from_family("zdd", ORDER5, SetFamily(5, [0])))
    assert top.count("shape=box") == 1 and "->" not in top


def test_random_families_bdd_never_counts_terminals():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(0, 7)
        F = SetFamily(n, [rng.randrange(1 << n) for _ in range(rng.randint(0, 10))])
        for kind in Kind:
            D = from_family(kind, ElementOrder.numbered(n), F)
            assert sum(level_widths(D)) == size(D)
