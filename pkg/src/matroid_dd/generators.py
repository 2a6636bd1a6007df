"""Seeded random matroids of every constructor class, for tests and benchmarks."""

import random

from . import matroid as mt
from .dd import ElementOrder


def _rng(seed):
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_uniform(rng, n):
    return mt.uniform(rng.randint(0, n), n)


def random_partition(rng, n):
    blocks, left = [], n
    while left:
        k = rng.randint(1, min(left, 4))
        blocks.append((rng.randint(0, k), k))
        left -= k
    return mt.partition(blocks)


def random_nested_gale(rng, n):
    r = rng.randint(0, n)
    return mt.nested_from_gale(n, sorted(rng.sample(range(1, n + 1), r)))


def random_nested_presentation(rng, n):
    names = [f"e{i + 1}" for i in range(n)]
    shuffled = rng.sample(names, n)
    cuts = sorted(rng.randint(1, n) for _ in range(rng.randint(1, 4)))
    return mt.nested([shuffled[:c] for c in cuts], names)


def random_transversal(rng, n):
    names = [f"e{i + 1}" for i in range(n)]
    m = rng.randint(1, max(1, n // 2 + 1))
    pres = [rng.sample(names, rng.randint(1, n)) for _ in range(m)]
    return mt.transversal(pres, names)


def random_laminar(rng, n):
    names = [f"e{i + 1}" for i in range(n)]
    sets = []

    def split(block):
        if len(block) > 1 and rng.random() < 0.8:
            cut = rng.randint(1, len(block) - 1)
            for part in (block[:cut], block[cut:]):
                if rng.random() < 0.7:
                    sets.append(part)
                split(part)

    split(rng.sample(names, n))
    sets.append(names)
    caps = [rng.randint(0, len(A)) for A in sets]
    return mt.laminar(sets, caps, names)


def random_graphic(rng, n):
    v = rng.randint(2, max(2, min(6, n)))
    return mt.graphic(v, [(rng.randrange(v), rng.randrange(v)) for _ in range(n)])


def random_gf2(rng, n):
    rows = rng.randint(1, 4)
    return mt.gf2([[rng.randint(0, 1) for _ in range(n)] for _ in range(rows)])


def random_explicit(rng, n):
    M = random_graphic(rng, n)
    return mt.explicit(list(M.ground), bases=[M.ground.names(b) for b in M.bases()])


def random_free(rng, n):
    return mt.free(n)


GENERATORS = {
    "free": random_free,
    "uniform": random_uniform,
    "partition": random_partition,
    "nested": random_nested_gale,
    "nested_presentation": random_nested_presentation,
    "transversal": random_transversal,
    "laminar": random_laminar,
    "graphic": random_graphic,
    "gf2": random_gf2,
    "explicit": random_explicit,
}


def random_matroid(kind, n, seed=None):
    return GENERATORS[kind](_rng(seed), n)


def random_order(M, seed=None):
    rng = _rng(seed)
    return ElementOrder(rng.sample(list(M.ground), M.n))


def example_gf2():
    """Rank-2 vector matroid on four columns; the third column is zero."""
    return mt.gf2([[1, 0, 0, 1], [0, 1, 0, 1]])


def example_graph():
    """A triangle with every edge doubled: e1,e2 on ab, e3,e4 on ac, e5,e6 on bc."""
    return mt.graphic(3, [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)])


def fixture_set(seed=0, per_class=5, n_range=(1, 9)):
    """``(label, matroid)`` pairs: each class ``per_class`` times, plus hand-made ones."""
    rng = _rng(seed)
    out = []
    for kind, gen in GENERATORS.items():
        for j in range(per_class):
            n = rng.randint(*n_range)
            out.append((f"{kind}-{j}-n{n}", gen(rng, n)))
    out.append(("uniform-2-4", mt.uniform(2, 4)))
    out.append(("gf2-example", example_gf2()))
    out.append(("doubled-triangle", example_graph()))
    out.append(("sum-u12-u12", mt.direct_sum(mt.uniform(1, 2), mt.uniform(1, 2, ["a", "b"]))))
    out.append(("dual-graphic", mt.dual(random_graphic(rng, 6))))
    out.append(("minor-gf2", mt.contract(mt.delete(random_gf2(rng, 8), ["e1"]), ["e2"])))
    return out
