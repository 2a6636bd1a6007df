"""Explicit set families over a ground set ``{0, ..., n-1}``.

A subset is an int bitmask.  :class:`SetFamily` keeps its members sorted by
numeric value with duplicates removed, so two families are equal exactly when
their member arrays are.  The axiom checkers here are exhaustive and serve as
ground truth for everything built on top.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels


def bits_of(mask):
    """Indices of the set bits of ``mask``, ascending."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


class SetFamily:
    """Immutable, canonically ordered family of subsets of ``range(ground_size)``."""

    __slots__ = ("ground_size", "members")

    def __init__(self, ground_size, members=()):
        if ground_size < 0:
            raise ValueError("ground_size must be non-negative")
        arr = np.unique(np.asarray(list(members) if not isinstance(members, np.ndarray) else members,
                                   dtype=np.int64))
        if arr.size and (arr[0] < 0 or int(arr[-1]) >> ground_size):
            raise ValueError(f"member outside the ground set of size {ground_size}")
        arr.setflags(write=False)
        object.__setattr__(self, "ground_size", ground_size)
        object.__setattr__(self, "members", arr)

    def __setattr__(self, name, value):
        raise AttributeError("SetFamily is immutable")

    @classmethod
    def from_sets(cls, ground_size, sets):
        return cls(ground_size, [mask_of(s) for s in sets])

    @classmethod
    def from_table(cls, table):
        table = np.asarray(table, dtype=np.bool_)
        n = table.shape[0].bit_length() - 1
        return cls(n, np.flatnonzero(table).astype(np.int64))

    def __len__(self):
        return int(self.members.shape[0])

    def __iter__(self):
        return iter(self.members.tolist())

    def __contains__(self, mask):
        i = np.searchsorted(self.members, mask)
        return bool(i < len(self) and self.members[i] == mask)

    def __eq__(self, other):
        if not isinstance(other, SetFamily):
            return NotImplemented
        return self.ground_size == other.ground_size and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash((self.ground_size, self.members.tobytes()))

    def __repr__(self):
        shown = ", ".join("{" + ",".join(str(i + 1) for i in bits_of(m)) + "}" for m in self.members[:8].tolist())
        more = ", ..." if len(self) > 8 else ""
        return f"SetFamily(n={self.ground_size}, [{shown}{more}])"

    def to_sets(self):
        """Members as tuples of 0-based indices."""
        return [tuple(bits_of(m)) for m in self]

    def table(self):
        """Membership table indexed by bitmask."""
        t = np.zeros(1 << self.ground_size, dtype=np.bool_)
        t[self.members] = True
        return t

    def sizes(self):
        return kernels.popcount(self.members)


def containing_pair(F):
    """A pair ``(A, B)`` of distinct members with A a subset of B, or None."""
    m = F.members
    for a in m.tolist():
        hit = ((m & a) == a) & (m != a)
        if hit.any():
            return a, int(m[np.argmax(hit)])
    return None


def is_clutter(F):
    return containing_pair(F) is None


def downward_closure(F):
    t = F.table()
    idx = np.arange(t.shape[0], dtype=np.int64)
    for b in range(F.ground_size):
        bit = 1 << b
        lower = idx[(idx & bit) == 0]
        t[lower] |= t[lower | bit]
    return SetFamily.from_table(t)


def complement_family(F):
    full = (1 << F.ground_size) - 1
    return SetFamily(F.ground_size, F.members ^ full)


@dataclass(frozen=True)
class AxiomResult:
    name: str
    passed: bool
    witness: tuple = ()
    message: str = ""


@dataclass(frozen=True)
class AxiomVerdict:
    results: dict = field(default_factory=dict)

    @property
    def ok(self):
        return all(r.passed for r in self.results.values())

    def __getitem__(self, name):
        return self.results[name]

    def failures(self):
        return [r for r in self.results.values() if not r.passed]


def _fmt(mask):
    return "{" + ",".join(str(i + 1) for i in bits_of(mask)) + "}"


def check_independence_axioms(F):
    """Exhaustive check of (I1) empty set, (I2) hereditary, (I3) augmentation."""
    n = F.ground_size
    table = F.table()
    res = {}

    res["I1"] = AxiomResult("I1", 0 in F, () if 0 in F else (0,), "" if 0 in F else "empty set is not a member")

    witness = ()
    for s in F:
        for b in bits_of(s):
            if not table[s ^ (1 << b)]:
                witness = (s, s ^ (1 << b))
                break
        if witness:
            break
    res["I2"] = AxiomResult(
        "I2", not witness, witness,
        f"{_fmt(witness[1])} is a subset of {_fmt(witness[0])} but not a member" if witness else "",
    )

    s1, s2, _ = kernels.exchange_violation(F.members, table, n, kernels.I3)
    ok = s1 < 0
    res["I3"] = AxiomResult(
        "I3", ok, () if ok else (s1, s2),
        "" if ok else f"no element of {_fmt(s2)} minus {_fmt(s1)} augments {_fmt(s1)}",
    )
    return AxiomVerdict(res)


def check_basis_axioms(F):
    """Exhaustive check of (B1) non-empty and the exchange axioms (B2), (B2*)."""
    n = F.ground_size
    table = F.table()
    res = {"B1": AxiomResult("B1", len(F) > 0, (), "" if len(F) else "family is empty")}
    for name, mode in (("B2", kernels.B2), ("B2*", kernels.B2_STAR)):
        s1, s2, x = kernels.exchange_violation(F.members, table, n, mode)
        ok = s1 < 0
        msg = ""
        if not ok:
            msg = f"B1={_fmt(s1)}, B2={_fmt(s2)}, x={x + 1}: no exchange partner"
        res[name] = AxiomResult(name, ok, () if ok else (s1, s2, x), msg)
    return AxiomVerdict(res)
