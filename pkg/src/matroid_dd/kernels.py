"""Dense 2^n table kernels.

Every kernel works on tables indexed by subset bitmasks (bit ``i`` set means
element ``i`` is in the subset) and comes in two flavours: a numba loop and a
vectorized numpy version.  The public functions dispatch on the backend chosen
in :mod:`matroid_dd._backend`; both flavours return identical arrays.
"""

import numpy as np

from ._backend import njit, get_backend, set_backend

__all__ = [
    "get_backend",
    "set_backend",
    "popcount",
    "constraint_table",
    "rank_table",
    "greedy_basis_table",
    "minor_rows",
    "count_distinct_rows",
    "exchange_violation",
    "pathwidth_table",
    "permute_table",
    "I3",
    "B2",
    "B2_STAR",
]

# exchange_violation modes
I3, B2, B2_STAR = 0, 1, 2

MAX_TABLE_BITS = 26


def _check_bits(n):
    if n < 0 or n > MAX_TABLE_BITS:
        raise ValueError(f"table over {n} elements is out of range (max {MAX_TABLE_BITS})")


if hasattr(np, "bitwise_count"):

    def popcount(a):
        return np.bitwise_count(np.asarray(a, dtype=np.int64)).astype(np.int64)

else:  # pragma: no cover - numpy < 2.0

    def popcount(a):
        a = np.asarray(a, dtype=np.int64)
        out = np.zeros(a.shape, dtype=np.int64)
        for b in range(63):
            out += (a >> b) & 1
        return out


@njit
def _pc(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


# -- independence tables from capacity constraints -------------------------


@njit
def _constraint_table_nb(n, masks, caps):
    size = 1 << n
    out = np.ones(size, dtype=np.bool_)
    for s in range(size):
        for j in range(masks.shape[0]):
            if _pc(s & masks[j]) > caps[j]:
                out[s] = False
                break
    return out


def _constraint_table_np(n, masks, caps):
    idx = np.arange(1 << n, dtype=np.int64)
    out = np.ones(1 << n, dtype=np.bool_)
    for m, c in zip(masks.tolist(), caps.tolist()):
        out &= popcount(idx & m) <= c
    return out


def constraint_table(n, masks, caps):
    """Table of ``all(|S & masks[j]| <= caps[j])`` over every subset S."""
    _check_bits(n)
    masks = np.asarray(masks, dtype=np.int64).reshape(-1)
    caps = np.asarray(caps, dtype=np.int64).reshape(-1)
    if get_backend() == "numba":
        return _constraint_table_nb(n, masks, caps)
    return _constraint_table_np(n, masks, caps)


# -- rank of every subset --------------------------------------------------


@njit
def _rank_table_nb(ind):
    size = ind.shape[0]
    r = np.zeros(size, dtype=np.int8)
    for s in range(1, size):
        if ind[s]:
            r[s] = _pc(s)
        else:
            best = 0
            t = s
            while t:
                b = t & -t
                v = r[s ^ b]
                if v > best:
                    best = v
                t ^= b
            r[s] = best
    return r


def _rank_table_np(ind):
    size = ind.shape[0]
    n = size.bit_length() - 1
    idx = np.arange(size, dtype=np.int64)
    pc = popcount(idx)
    r = np.zeros(size, dtype=np.int8)
    for k in range(1, n + 1):
        layer = idx[pc == k]
        best = np.zeros(layer.shape[0], dtype=np.int8)
        for b in range(n):
            bit = np.int64(1) << b
            has = (layer & bit) != 0
            np.maximum(best, np.where(has, r[layer ^ bit], 0).astype(np.int8), out=best)
        r[layer] = np.where(ind[layer], k, best)
    return r


def rank_table(ind):
    """Rank of every subset, given the independence table of a matroid."""
    ind = np.ascontiguousarray(ind, dtype=np.bool_)
    _check_bits(ind.shape[0].bit_length() - 1)
    if get_backend() == "numba":
        return _rank_table_nb(ind)
    return _rank_table_np(ind)


# -- greedy bases of every prefix subset -----------------------------------


@njit
def _greedy_basis_table_nb(ind, k):
    out = np.zeros(1 << k, dtype=np.int64)
    for b in range(k):
        lo = 1 << b
        for x in range(lo, lo << 1):
            prev = out[x - lo]
            cand = prev | lo
            out[x] = cand if ind[cand] else prev
    return out


def _greedy_basis_table_np(ind, k):
    out = np.zeros(1 << k, dtype=np.int64)
    for b in range(k):
        lo = 1 << b
        prev = out[:lo]
        cand = prev | lo
        out[lo : lo << 1] = np.where(ind[cand], cand, prev)
    return out


def greedy_basis_table(ind, k):
    """For each X over the first ``k`` bits, the greedy basis of X.

    Elements are tried in ascending bit order, so entry X is the basis a
    contraction by X fixes.
    """
    ind = np.ascontiguousarray(ind, dtype=np.bool_)
    if k < 0 or (1 << k) > ind.shape[0]:
        raise ValueError(f"prefix length {k} exceeds table size")
    if get_backend() == "numba":
        return _greedy_basis_table_nb(ind, k)
    return _greedy_basis_table_np(ind, k)


# -- minor signatures -------------------------------------------------------


@njit
def _minor_rows_nb(ind, basis, shift, width):
    rows = np.empty((basis.shape[0], width), dtype=np.bool_)
    for x in range(basis.shape[0]):
        b = basis[x]
        for y in range(width):
            rows[x, y] = ind[b | (y << shift)]
    return rows


def _minor_rows_np(ind, basis, shift, width):
    ys = np.arange(width, dtype=np.int64) << shift
    return ind[basis[:, None] | ys[None, :]]


def minor_rows(ind, basis, shift):
    """Row X holds ``ind[basis[X] | (Y << shift)]`` for every suffix subset Y.

    With ``basis`` from :func:`greedy_basis_table` this is the independence
    table of the minor that contracts X and deletes the rest of the prefix.
    """
    ind = np.ascontiguousarray(ind, dtype=np.bool_)
    basis = np.ascontiguousarray(basis, dtype=np.int64)
    n = ind.shape[0].bit_length() - 1
    width = 1 << (n - shift)
    if get_backend() == "numba":
        return _minor_rows_nb(ind, basis, shift, width)
    return _minor_rows_np(ind, basis, shift, width)


def count_distinct_rows(rows):
    if rows.shape[0] == 0:
        return 0
    packed = np.packbits(rows, axis=1)
    return int(np.unique(packed, axis=0).shape[0])


# -- exhaustive exchange-axiom scans ---------------------------------------


@njit
def _exchange_violation_nb(members, table, n, mode):
    m = members.shape[0]
    for a in range(m):
        s1 = members[a]
        if mode == 0:
            ext = 0
            for b in range(n):
                bit = 1 << b
                if not (s1 & bit) and table[s1 | bit]:
                    ext |= bit
            k1 = _pc(s1)
            for c in range(m):
                s2 = members[c]
                if _pc(s2) > k1 and ((s2 & ~s1) & ext) == 0:
                    return s1, s2, -1
        else:
            for b in range(n):
                x = 1 << b
                if mode == 1:
                    if not (s1 & x):
                        continue
                    ext = 0
                    for yb in range(n):
                        y = 1 << yb
                        if not (s1 & y) and table[(s1 ^ x) | y]:
                            ext |= y
                    for c in range(m):
                        s2 = members[c]
                        if not (s2 & x) and ((s2 & ~s1) & ext) == 0:
                            return s1, s2, b
                else:
                    if s1 & x:
                        continue
                    ext = 0
                    for yb in range(n):
                        y = 1 << yb
                        if (s1 & y) and table[(s1 ^ y) | x]:
                            ext |= y
                    for c in range(m):
                        s2 = members[c]
                        if (s2 & x) and ((s1 & ~s2) & ext) == 0:
                            return s1, s2, b
    return -1, -1, -1


def _exchange_violation_np(members, table, n, mode):
    pcs = popcount(members)
    bits = [1 << b for b in range(n)]
    for s1, k1 in zip(members.tolist(), pcs.tolist()):
        if mode == I3:
            ext = sum(bit for bit in bits if not s1 & bit and table[s1 | bit])
            bad = (pcs > k1) & (((members & ~s1) & ext) == 0)
            if bad.any():
                return s1, int(members[np.argmax(bad)]), -1
            continue
        for b, x in enumerate(bits):
            if mode == B2:
                if not s1 & x:
                    continue
                ext = sum(y for y in bits if not s1 & y and table[(s1 ^ x) | y])
                bad = ((members & x) == 0) & (((members & ~s1) & ext) == 0)
            else:
                if s1 & x:
                    continue
                ext = sum(y for y in bits if s1 & y and table[(s1 ^ y) | x])
                bad = ((members & x) != 0) & (((s1 & ~members) & ext) == 0)
            if bad.any():
                return s1, int(members[np.argmax(bad)]), b
    return -1, -1, -1


def exchange_violation(members, table, n, mode):
    """First violation of an exchange axiom, or ``(-1, -1, -1)``.

    ``mode`` is one of :data:`I3` (augmentation), :data:`B2` or
    :data:`B2_STAR` (basis exchange).  ``table`` is the membership table of
    ``members``.  Returns ``(S1, S2, x)``; ``x`` is the exchanged element's
    bit index for the basis modes and -1 for I3.
    """
    members = np.ascontiguousarray(members, dtype=np.int64)
    table = np.ascontiguousarray(table, dtype=np.bool_)
    if get_backend() == "numba":
        s1, s2, x = _exchange_violation_nb(members, table, n, mode)
    else:
        s1, s2, x = _exchange_violation_np(members, table, n, mode)
    return int(s1), int(s2), int(x)


# -- pathwidth over prefix sets --------------------------------------------


@njit
def _pathwidth_table_nb(lam):
    size = lam.shape[0]
    full = size - 1
    g = np.zeros(size, dtype=np.int64)
    g[full] = lam[full]
    for s in range(full - 1, -1, -1):
        best = 1 << 30
        rest = full & ~s
        while rest:
            b = rest & -rest
            v = g[s | b]
            if v < best:
                best = v
            rest ^= b
        g[s] = lam[s] if lam[s] > best else best
    return g


def _pathwidth_table_np(lam):
    size = lam.shape[0]
    n = size.bit_length() - 1
    full = size - 1
    idx = np.arange(size, dtype=np.int64)
    pc = popcount(idx)
    g = np.zeros(size, dtype=np.int64)
    g[full] = lam[full]
    big = np.int64(1) << 30
    for k in range(n - 1, -1, -1):
        layer = idx[pc == k]
        best = np.full(layer.shape[0], big, dtype=np.int64)
        for b in range(n):
            bit = np.int64(1) << b
            free = (layer & bit) == 0
            np.minimum(best, np.where(free, g[layer | bit], big), out=best)
        g[layer] = np.maximum(lam[layer], best)
    return g


def pathwidth_table(lam):
    """Best achievable max-connectivity for completing each prefix set.

    Entry S is the minimum, over orders that start with S (in any order)
    and continue through E, of the largest connectivity value seen from S
    onward.  Entry 0 is the pathwidth.
    """
    lam = np.ascontiguousarray(lam, dtype=np.int64)
    if get_backend() == "numba":
        return _pathwidth_table_nb(lam)
    return _pathwidth_table_np(lam)


# -- relabelling -------------------------------------------------------------


@njit
def _permute_table_nb(table, src):
    size = table.shape[0]
    out = np.empty(size, dtype=table.dtype)
    n = src.shape[0]
    for m in range(size):
        s = 0
        for lvl in range(n):
            if (m >> lvl) & 1:
                s |= 1 << src[lvl]
        out[m] = table[s]
    return out


def _permute_table_np(table, src):
    idx = np.arange(table.shape[0], dtype=np.int64)
    s = np.zeros_like(idx)
    for lvl, j in enumerate(src.tolist()):
        s |= ((idx >> lvl) & 1) << j
    return table[s]


def permute_table(table, src):
    """Re-index a subset table: bit ``l`` of the new index is bit ``src[l]`` of the old."""
    table = np.ascontiguousarray(table)
    src = np.ascontiguousarray(src, dtype=np.int64)
    if table.shape[0] != 1 << src.shape[0]:
        raise ValueError("permutation length does not match table size")
    if get_backend() == "numba":
        return _permute_table_nb(table, src)
    return _permute_table_np(table, src)
