import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from matroid_dd import matroid as mt
from matroid_dd.family import check_basis_axioms, check_independence_axioms
from matroid_dd.generators import GENERATORS, example_gf2, example_graph, random_matroid

kinds = st.sampled_from(sorted(GENERATORS))


def same_predicate(A, B):
    assert list(A.ground) == list(B.ground)
    return all(A.is_independent(X) == B.is_independent(X) for X in range(1 << A.n))


def brute_rank(M, X):
    return max(bin(I).count("1") for I in range(1 << M.n) if I & ~X == 0 and M.is_independent(I))


def test_examples_rank_and_loops():
    G = example_graph()
    assert G.rank(["e1", "e2"]) == 1
    assert G.rank(0) == 0
    assert len(G.bases()) == 12
    V = example_gf2()
    assert V.rank() == 2
    assert V.bases().to_sets() == [(0, 1), (0, 3), (1, 3)]
    assert V.is_loop("e3") and not V.is_coloop("e3")
    assert all(mt.free(3).is_coloop(e) for e in ("e1", "e2", "e3"))
    U = mt.uniform(2, 4)
    assert not any(U.is_loop(e) or U.is_coloop(e) for e in U.ground)


def test_connectivity():
    U = mt.uniform(2, 4)
    assert U.connectivity(0) == 0 and U.connectivity(U.full) == 0
    for X in itertools.combinations(U.ground, 2):
        assert U.connectivity(list(X)) == 2


@settings(max_examples=30, deadline=None)
@given(kinds, st.integers(1, 7), st.integers(0, 10**6))
def test_greedy_rank_and_connectivity(kind, n, seed):
    M = random_matroid(kind, n, seed)
    rng = random.Random(seed)
    for _ in range(6):
        X = rng.randrange(1 << n)
        assert M.rank(X) == brute_rank(M, X) == M.rank_table()[X]
        lam = M.connectivity(X)
        assert 0 <= lam <= min(M.rank(X), M.rank(M.full ^ X))


@settings(max_examples=30, deadline=None)
@given(kinds, st.integers(1, 8), st.integers(0, 10**6))
def test_constructor_axioms(kind, n, seed):
    M = random_matroid(kind, n, seed)
    assert check_independence_axioms(M.independent_sets()).ok
    assert check_basis_axioms(M.bases()).ok


def test_dual():
    U = mt.uniform(2, 4)
    assert mt.dual(U).bases() == U.bases()
    D = mt.dual(mt.free(4))
    assert D.rank() == 0 and len(D.independent_sets()) == 1
    Vd = mt.dual(example_gf2())
    got = {tuple(Vd.ground.names(b)) for b in Vd.bases()}
    assert got == {("e3", "e4"), ("e2", "e3"), ("e1", "e3")}


@settings(max_examples=30, deadline=None)
@given(kinds, st.integers(1, 8), st.integers(0, 10**6))
def test_double_dual(kind, n, seed):
    M = random_matroid(kind, n, seed)
    DD = mt.dual(mt.dual(M))
    assert same_predicate(M, DD)
    # the table path and the oracle path agree
    assert DD.independence_table().tolist() == [M.is_independent(X) for X in range(1 << n)]


def test_delete_contract_examples():
    C = mt.contract(mt.uniform(2, 4), ["e1"])
    assert same_predicate(C, mt.uniform(1, 3, ["e2", "e3", "e4"]))
    U = mt.uniform(2, 4)
    assert mt.delete(U, []) is U
    G = mt.contract(example_graph(), ["e1"])
    assert G.is_loop("e2")
    with pytest.raises(mt.MatroidError):
        mt.delete(U, ["zz"])


@settings(max_examples=40, deadline=None)
@given(kinds, st.integers(2, 8), st.integers(0, 10**6))
def test_minor_commutation_and_basis_choice(kind, n, seed):
    M = random_matroid(kind, n, seed)
    rng = random.Random(seed)
    names = list(M.ground)
    rng.shuffle(names)
    a, b = sorted(rng.sample(range(n + 1), 2))
    X, Y = names[:a], names[a:b]
    A = mt.contract(mt.delete(M, X), Y)
    B = mt.delete(mt.contract(M, Y), X)
    assert same_predicate(A, B)
    # contracting through any other basis of Y gives the same minor
    Ym = M.mask(Y)
    keep = [i for i in range(n) if not (Ym >> i) & 1]
    for basis in range(1 << n):
        if basis & ~Ym == 0 and M.is_independent(basis) and bin(basis).count("1") == M.rank(Ym):
            C = mt.contract(M, Y)
            for Z in range(1 << len(keep)):
                assert C.is_independent(Z) == M.is_independent(mt._deposit(Z, keep) | basis)
            break


def test_direct_sum():
    S = mt.direct_sum(mt.uniform(1, 2), mt.uniform(1, 2, ["a", "b"]))
    assert S.class_tag == "partition" and S.params["blocks"] == [(1, 2), (1, 2)]
    assert list(S.ground) == ["e1", "e2", "a", "b"]
    assert S.connectivity(["e1", "e2"]) == 0
    with pytest.raises(mt.MatroidError):
        mt.direct_sum(mt.uniform(1, 2), mt.uniform(1, 2))
    G = mt.direct_sum(example_graph(), mt.free(1, ["f"]))
    assert G.class_tag == "derived" and G.rank() == example_graph().rank() + 1


@settings(max_examples=25, deadline=None)
@given(kinds, kinds, st.integers(1, 4), st.integers(1, 4), st.integers(0, 10**6))
def test_direct_sum_rank(k1, k2, n1, n2, seed):
    M1 = random_matroid(k1, n1, seed)
    M2 = random_matroid(k2, n2, seed + 1)
    M2 = mt.Matroid([f"x{e}" for e in M2.ground], M2.is_independent, M2.class_tag, M2.params)
    S = mt.direct_sum(M1, M2)
    assert S.rank() == M1.rank() + M2.rank()
    assert S.connectivity(list(M1.ground)) == 0
    assert same_predicate(S, mt.Matroid(S.ground, S.is_independent))


def test_gale_basis_examples():
    assert mt.gale_basis(example_gf2()).names == ["e2", "e4"]
    assert mt.gale_basis(mt.free(3)).names == ["e1", "e2", "e3"]
    assert mt.gale_basis(mt.uniform(2, 4)).names == ["e3", "e4"]


@settings(max_examples=40, deadline=None)
@given(kinds, st.integers(1, 8), st.integers(0, 10**6))
def test_gale_basis_dominates(kind, n, seed):
    M = random_matroid(kind, n, seed)
    order = mt.ElementOrder(random.Random(seed).sample(list(M.ground), n))
    G = mt.gale_basis(M, order)
    bases = M.bases(order)
    assert G.basis in bases
    assert all(mt.gale_leq(B, G.basis) for B in bases)


def test_nested_from_gale():
    N = mt.nested_from_gale(4, [2, 4])
    assert N.class_tag == "nested"
    assert N.bases().to_sets() == sorted([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)], key=lambda s: sum(1 << i for i in s))
    assert same_predicate(mt.nested_from_gale(5, [3, 4, 5]), mt.uniform(3, 5))
    with pytest.raises(mt.MatroidError):
        mt.nested_from_gale(3, [4])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.data())
def test_nested_from_gale_brute(n, data):
    G = data.draw(st.sets(st.integers(1, n)))
    N = mt.nested_from_gale(n, G)
    g = sorted(x - 1 for x in G)
    want = {X for X in range(1 << n) if bin(X).count("1") == len(g) and mt.gale_leq(X, sum(1 << x for x in g))}
    assert set(N.bases()) == want
    assert check_basis_axioms(N.bases()).ok


def test_transversal_matching():
    names = [f"e{i}" for i in range(1, 7)]
    pres = [["e1", "e2", "e3"], ["e4", "e5", "e6"], names]
    T = mt.transversal(pres, names)
    assert T.is_independent(["e1", "e2", "e4"])
    assert T.is_independent([])
    assert not T.is_independent(["e1", "e2", "e3", "e4"])


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 10**6))
def test_transversal_vs_brute_matching(n, m, seed):
    rng = random.Random(seed)
    pres = [rng.randrange(1 << n) for _ in range(m)]
    for X in range(1 << n):
        elems = [i for i in range(n) if (X >> i) & 1]
        brute = any(
            all((pres[p] >> e) & 1 for e, p in zip(elems, perm))
            for perm in itertools.permutations(range(m), len(elems))
        ) if len(elems) <= m else False
        assert mt.transversal_independent(pres, X) == brute


def test_nested_presentation_order_and_gale():
    N = mt.nested([["c"], ["c", "a"]], ["a", "b", "c"])
    assert list(N.ground) == ["c", "a", "b"]
    assert N.params["left_justified"] == N.ground
    with pytest.raises(mt.MatroidError, match="chain"):
        mt.nested([["a"], ["b"]], ["a", "b"])


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 8), st.integers(0, 10**6))
def test_nested_presentation_is_left_justified(n, seed):
    M = random_matroid("nested_presentation", n, seed)
    order = M.params["left_justified"]
    G = mt.gale_basis(M, order)
    bases = M.bases(order)
    r = M.rank()
    gale_down = {X for X in range(1 << n) if bin(X).count("1") == r and mt.gale_leq(X, G.basis)}
    assert set(bases) == gale_down


def test_laminar_validation():
    L = mt.laminar([["a", "b"], ["a", "b", "c"]], [1, 2], ["a", "b", "c"])
    assert L.rank() == 2 and not L.is_independent(["a", "b"])
    with pytest.raises(mt.MatroidError, match="laminar"):
        mt.laminar([["a", "b"], ["b", "c"]], [1, 1], ["a", "b", "c"])
    with pytest.raises(mt.MatroidError):
        mt.laminar([["a"]], [-1], ["a"])


def test_gf2_and_graphic_validation():
    with pytest.raises(mt.MatroidError):
        mt.gf2([[1, 2]])
    with pytest.raises(mt.MatroidError):
        mt.gf2([[1, 0], [1]])
    with pytest.raises(mt.MatroidError):
        mt.graphic(2, [(0, 3)])
    loop = mt.graphic(1, [(0, 0)])
    assert loop.is_loop("e1")
    assert mt.gf2_rank([0b011, 0b101, 0b110]) == 2


def test_explicit_and_partition():
    E = mt.explicit(["a", "b"], independent=[[], ["a"]])
    assert E.is_loop("b") and E.rank() == 1
    with pytest.raises(mt.MatroidError):
        mt.explicit(["a"])
    P = mt.partition([(1, 2), (2, 3)])
    assert list(P.ground)[:3] == ["e1_1", "e1_2", "e2_1"] and P.rank() == 3
    assert mt.dual(P).params["blocks"] == [(1, 2), (1, 3)]
    with pytest.raises(mt.MatroidError):
        mt.uniform(5, 3)


def test_masks_and_errors():
    U = mt.uniform(1, 3)
    assert U.mask(["e1", "e3"]) == 0b101
    with pytest.raises(mt.MatroidError):
        U.mask(8)
    with pytest.raises(mt.MatroidError):
        U.mask(["nope"])
    with pytest.raises(mt.MatroidError):
        U.level_table(["e1", "e2"])
    with pytest.raises(mt.MatroidError):
        mt.minor(U, ["e1"], ["e1"])
    assert "uniform" in repr(U)
