import random

import pytest
from hypothesis import given, settings, strategies as st

from matroid_dd import matroid as mt
from matroid_dd.build import ALL_TARGETS, BuildTarget, ResourceLimitError, build_all, build_dd, target_family
from matroid_dd.dd import TOP, BOT, NodeStore, count, enumerate_family, one_path_lengths, size
from matroid_dd.family import SetFamily
from matroid_dd.generators import GENERATORS, example_gf2, random_matroid, random_order


def brute_family(M, order, target):
    pos = M.order_positions(order)
    r = M.rank()
    out = []
    for X in range(1 << M.n):
        Xm = sum(1 << pos[i] for i in range(M.n) if (X >> i) & 1)
        if M.is_independent(Xm) and (target == "independent" or bin(X).count("1") == r):
            out.append(X)
    return SetFamily(M.n, out)


def test_uniform_bases_zdd():
    D = build_dd(mt.uniform(2, 4), None, ("zdd", "bases"))
    assert count(D) == 6
    assert all(bin(X).count("1") == 2 for X in enumerate_family(D))


def test_bdd_bases_paths_have_full_length():
    D = build_dd(example_gf2(), None, BuildTarget("bdd", "bases"))
    assert one_path_lengths(D) == {4}


def test_free_matroid_sizes():
    F = mt.free(5)
    assert size(build_dd(F, None, ("zdd", "independent"))) == 5
    D = build_dd(F, None, ("bdd", "independent"))
    assert D.root == TOP and size(D) == 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(sorted(GENERATORS)), st.integers(1, 9), st.integers(0, 10**6))
def test_builds_match_brute_force_and_strategies_agree(kind, n, seed):
    M = random_matroid(kind, n, seed)
    order = random_order(M, seed)
    store = NodeStore(n)
    for t in ALL_TARGETS:
        a = build_dd(M, order, t, store=store)
        b = build_dd(M, order, t, strategy="minors", store=store)
        assert a.root == b.root
        assert enumerate_family(a) == brute_family(M, order, t.target.value)


def test_bases_paths_full_length_and_children_distinct(fixtures):
    for _, M in fixtures:
        B = build_dd(M, None, ("bdd", "bases"))
        assert one_path_lengths(B) <= {M.n}
        Z = build_dd(M, None, ("zdd", "bases"))
        assert all(Z.children(v)[0] != Z.children(v)[1] for v in Z.nodes())


def test_size_limit(monkeypatch):
    monkeypatch.setenv("MATROID_DD_MAX_N", "3")
    with pytest.raises(ResourceLimitError, match="limit is 3"):
        build_dd(mt.uniform(1, 4))
    monkeypatch.setenv("MATROID_DD_MAX_N", "x")
    with pytest.raises(ValueError):
        build_dd(mt.uniform(1, 4))


def test_build_all_shares_store_and_rejects_bad_strategy():
    out = build_all(mt.uniform(1, 3))
    assert len({id(D.store) for D in out.values()}) == 1
    assert str(BuildTarget("zdd", "bases")) == "ZDD(B)"
    with pytest.raises(ValueError):
        build_dd(mt.uniform(1, 3), strategy="magic")
    assert target_family(mt.uniform(0, 2), None, "bases") == SetFamily(2, [0])
    assert build_dd(mt.uniform(0, 2), None, ("zdd", "independent")).root == TOP
    assert BOT == 0
