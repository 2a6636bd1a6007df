"""Compile a matroid under an element order into one of the four diagrams."""

import enum
import os
from dataclasses import dataclass

import numpy as np

from .dd import BOT, TOP, Diagram, ElementOrder, Kind, NodeStore, from_family, make_node
from .family import SetFamily
from .kernels import popcount

MAX_N_ENV = "MATROID_DD_MAX_N"
DEFAULT_MAX_N = 24


class ResourceLimitError(RuntimeError):
    """A computation was refused because it exceeds a configured size limit."""


class Target(str, enum.Enum):
    INDEPENDENT = "independent"
    BASES = "bases"


@dataclass(frozen=True)
class BuildTarget:
    kind: Kind
    target: Target

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        object.__setattr__(self, "target", Target(self.target))

    def __str__(self):
        return f"{self.kind}({'I' if self.target is Target.INDEPENDENT else 'B'})"


ALL_TARGETS = tuple(BuildTarget(k, t) for k in Kind for t in Target)


def max_n():
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def check_size(n, limit=None, what="ground set"):
    limit = max_n() if limit is None else limit
    if n > limit:
        raise ResourceLimitError(f"{what} has {n} elements; the limit is {limit} (set {MAX_N_ENV} to raise it)")


def _as_order(M, order):
    if order is None:
        return M.ground
    return order if isinstance(order, ElementOrder) else ElementOrder(order)


def family_table(M, order=None, target=Target.INDEPENDENT):
    """Membership table of I(M) or B(M) with bit ``i`` meaning ``order[i]``."""
    order = _as_order(M, order)
    check_size(M.n)
    t = M.level_table(order)
    if Target(target) is Target.BASES:
        t = t & (popcount(np.arange(t.shape[0], dtype=np.int64)) == M.rank())
    return t


def target_family(M, order=None, target=Target.INDEPENDENT):
    return SetFamily.from_table(family_table(M, order, target))


def _build_by_minors(kind, order, table, store):
    """Top-down split of a subset table, memoized on the sub-table itself.

    At level ``i`` each distinct sub-table is the independence (or basis)
    table of one minor on the suffix, so the memo key is its signature.
    """
    n = len(order)
    memo = {}
    zdd = kind is Kind.ZDD

    def rec(level, t):
        if not t.any():
            return BOT
        if level == n or (zdd and t[0] and not t[1:].any()):
            return TOP
        key = (level, t.tobytes())
        v = memo.get(key)
        if v is None:
            v = memo[key] = make_node(store, kind, level, rec(level + 1, t[0::2]), rec(level + 1, t[1::2]))
        return v

    return Diagram(kind, order, rec(0, np.ascontiguousarray(table)), store)


def build_dd(M, order=None, target=BuildTarget(Kind.ZDD, Target.INDEPENDENT), strategy="enumerate", store=None):
    """The reduced diagram of I(M) or B(M) under ``order``.

    ``strategy`` is ``"enumerate"`` (list the family, then compile it) or
    ``"minors"`` (split the subset table level by level).  Both give the same
    diagram; in a shared store they give the same root.
    """
    if not isinstance(target, BuildTarget):
        target = BuildTarget(*target)
    order = _as_order(M, order)
    if store is None:
        store = NodeStore(len(order))
    table = family_table(M, order, target.target)
    if strategy == "enumerate":
        return from_family(target.kind, order, SetFamily.from_table(table), store)
    if strategy == "minors":
        return _build_by_minors(target.kind, order, table, store)
    raise ValueError(f"unknown build strategy {strategy!r}")


def build_all(M, order=None, store=None):
    """All four diagrams of ``M`` keyed by ``BuildTarget``, sharing one store."""
    order = _as_order(M, order)
    store = NodeStore(len(order)) if store is None else store
    return {t: build_dd(M, order, t, store=store) for t in ALL_TARGETS}
