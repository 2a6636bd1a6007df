"""Minor counting, width bounds, exact pathwidth and good orders.

Minors on a suffix are fingerprinted by their independence tables: for a
prefix ``E_i`` of the order and ``X`` inside it, the signature of
``M \\ (E_i - X) / X`` is the row ``Y -> ind(B_X | Y)`` over all suffix
subsets ``Y``, where ``B_X`` is a basis of ``X``.  Counting minors is then
counting distinct rows.
"""

from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .build import ALL_TARGETS, ResourceLimitError, build_all, check_size
from .dd import ElementOrder, level_widths
from .matroid import MatroidError, direct_sum, laminar

MAX_SUFFIX = 22
PATHWIDTH_LIMIT = 9
BOUNDED_CLASSES = ("free", "uniform", "partition", "nested")
CSV_COLUMNS = (
    "level",
    "lambda",
    "minor_count",
    "nonloop_minor_count",
    "w_bdd_I",
    "w_bdd_B",
    "w_zdd_I",
    "w_zdd_B",
    "bound",
    "verdict",
)


@dataclass(frozen=True)
class MinorSignature:
    suffix_size: int
    independence_bits: bytes

    @classmethod
    def from_row(cls, row):
        row = np.asarray(row, dtype=np.bool_)
        return cls(row.shape[0].bit_length() - 1, np.packbits(row).tobytes())

    def bits(self):
        return np.unpackbits(np.frombuffer(self.independence_bits, dtype=np.uint8))[: 1 << self.suffix_size].astype(bool)


def _order(M, order):
    if order is None:
        return M.ground
    return order if isinstance(order, ElementOrder) else ElementOrder(order)


def _check_level(M, i, top):
    if not 0 <= i <= top:
        raise ValueError(f"level {i} outside 0..{top}")
    if M.n - i > MAX_SUFFIX:
        raise ResourceLimitError(f"suffix of {M.n - i} elements exceeds the signature limit {MAX_SUFFIX}")


def minor_rows(M, order, i):
    """Signature rows for all ``X`` within the first ``i`` elements of ``order``."""
    order = _order(M, order)
    _check_level(M, i, M.n)
    check_size(M.n)
    t = M.level_table(order)
    return kernels.minor_rows(t, kernels.greedy_basis_table(t, i), i)


def minor_signatures(M, order, i):
    return {MinorSignature.from_row(r) for r in minor_rows(M, order, i)}


def count_minors_on_suffix(M, order, i):
    return kernels.count_distinct_rows(minor_rows(M, order, i))


def count_nonloop_minors(M, order, i):
    """Distinct suffix minors in which the first suffix element is not a loop."""
    _check_level(M, i, M.n - 1)
    rows = minor_rows(M, order, i)
    return kernels.count_distinct_rows(rows[rows[:, 1]])


def minor_counts(M, order=None):
    """``(minor_count, nonloop_minor_count)`` lists for levels ``0..n``.

    The non-loop count at the terminal level ``n`` is 0.
    """
    order = _order(M, order)
    check_size(M.n)
    t = M.level_table(order)
    counts, nonloop = [], []
    for i in range(M.n + 1):
        _check_level(M, i, M.n)
        rows = kernels.minor_rows(t, kernels.greedy_basis_table(t, i), i)
        counts.append(kernels.count_distinct_rows(rows))
        nonloop.append(kernels.count_distinct_rows(rows[rows[:, 1]]) if i < M.n else 0)
    return counts, nonloop


def quotient_classes(M, S):
    """Number of classes of subsets of S under equal extension behaviour outside S."""
    S = M.mask(S)
    inside = [M.ground[j] for j in range(M.n) if (S >> j) & 1]
    outside = [M.ground[j] for j in range(M.n) if not (S >> j) & 1]
    k = len(inside)
    _check_level(M, k, M.n)
    t = M.level_table(inside + outside)
    return kernels.count_distinct_rows(kernels.minor_rows(t, np.arange(1 << k, dtype=np.int64), k))


def connectivity_profile(M, order=None):
    """``lambda(E_i)`` for ``i = 0..n``."""
    order = _order(M, order)
    r = M.rank_table()
    full = M.full
    pos = M.order_positions(order)
    out, prefix = [], 0
    for i in range(M.n + 1):
        out.append(int(r[prefix]) + int(r[full ^ prefix]) - int(r[full]))
        if i < M.n:
            prefix |= 1 << pos[i]
    return out


@dataclass(frozen=True)
class WidthRow:
    level: int
    lam: int
    minor_count: int
    nonloop_minor_count: int
    w_bdd_I: int
    w_bdd_B: int
    w_zdd_I: int
    w_zdd_B: int
    bound: object
    verdict: str

    def widths(self):
        return (self.w_bdd_I, self.w_bdd_B, self.w_zdd_I, self.w_zdd_B)

    def as_tuple(self):
        return (self.level, self.lam, self.minor_count, self.nonloop_minor_count, *self.widths(),
                "" if self.bound is None else self.bound, self.verdict)


@dataclass
class WidthReport:
    class_tag: str
    order: ElementOrder
    rows: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.verdict == "PASS" for r in self.rows)

    def failures(self):
        return [r for r in self.rows if r.verdict != "PASS"]

    def csv_lines(self):
        lines = [",".join(CSV_COLUMNS)]
        lines += [",".join(str(x) for x in r.as_tuple()) for r in self.rows]
        return lines


def _class_bound(tag, lam):
    if tag == "free":
        return 1
    if tag == "uniform":
        return lam + 1
    if tag in ("partition", "nested"):
        return 2**lam
    return None


def _verdict(tag, lam, mc, widths, bound):
    if max(widths) > mc:
        return False
    if tag == "free":
        return mc == 1 and max(widths) <= 1
    if tag == "uniform":
        return mc == lam + 1
    if bound is not None:
        return mc <= bound
    return True


def width_report(M, order=None):
    """Per-level widths of the four diagrams against minor counts and class bounds.

    Levels run ``0..n``; level ``n`` is the terminal level, where every
    width is 0 and the single minor is the empty matroid.  Every row checks
    that each width is at most the minor count; classes with a known bound
    also check it (uniform: the count is exactly ``lambda + 1``).
    """
    order = _order(M, order)
    diagrams = build_all(M, order)
    widths = {t: level_widths(D) + [0] for t, D in diagrams.items()}
    lam = connectivity_profile(M, order)
    tag = M.class_tag
    report = WidthReport(tag, order)
    counts, nonloop = minor_counts(M, order)
    for i in range(M.n + 1):
        mc, nl = counts[i], nonloop[i]
        w = tuple(widths[t][i] for t in ALL_TARGETS)
        bound = _class_bound(tag, lam[i])
        ok = _verdict(tag, lam[i], mc, w, bound)
        report.rows.append(WidthRow(i, lam[i], mc, nl, *w, bound, "PASS" if ok else "FAIL"))
    return report


def check_width_bounds(M, order=None):
    if M.class_tag not in BOUNDED_CLASSES:
        raise MatroidError(f"no width bound is known for class {M.class_tag!r}")
    return width_report(M, order)


@dataclass
class ProductCheck:
    rows: list

    @property
    def ok(self):
        return all(r[-1] for r in self.rows)


def direct_sum_minor_product_check(M1, M2, order=None):
    """Compare suffix minor counts of ``M1 + M2`` with the product of the parts.

    ``order`` defaults to M1's elements followed by M2's.  Rows are
    ``(level, count_sum, count_1, count_2, holds)``.
    """
    M = direct_sum(M1, M2)
    order = _order(M, order)
    names1 = set(M1.ground)
    o1 = [e for e in order if e in names1]
    o2 = [e for e in order if e not in names1]
    rows, i1, i2 = [], 0, 0
    for i in range(M.n + 1):
        c = count_minors_on_suffix(M, order, i)
        c1 = count_minors_on_suffix(M1, o1, i1)
        c2 = count_minors_on_suffix(M2, o2, i2)
        rows.append((i, c, c1, c2, c == c1 * c2))
        if i < M.n:
            if order[i] in names1:
                i1 += 1
            else:
                i2 += 1
    return ProductCheck(rows)


def connectivity_table(M):
    r = M.rank_table().astype(np.int64)
    full = M.full
    idx = np.arange(1 << M.n, dtype=np.int64)
    return (r + r[full ^ idx] - r[full]).astype(np.int8)


def pathwidth_exact(M, limit=PATHWIDTH_LIMIT):
    """Exact pathwidth and a witness order (lexicographically first optimum).

    Dynamic programming over prefix sets: ``g(S)`` is the least possible
    maximum connectivity over orders that begin with ``S``.
    """
    if M.n > limit:
        raise ResourceLimitError(f"exact pathwidth is limited to {limit} elements, got {M.n}")
    g = kernels.pathwidth_table(connectivity_table(M))
    pw = int(g[0])
    S, seq = 0, []
    for _ in range(M.n):
        e = next(j for j in range(M.n) if not (S >> j) & 1 and g[S | (1 << j)] <= pw)
        S |= 1 << e
        seq.append(M.ground[e])
    return pw, ElementOrder(seq)


def max_connectivity(M, order=None):
    return max(connectivity_profile(M, order))


def good_order(M):
    """An order under which every diagram of M has width at most pw(M) + 1."""
    tag = M.class_tag
    if tag in ("free", "uniform", "partition"):
        # partition grounds are laid out block by block
        return M.ground
    if tag == "nested":
        return M.params["left_justified"]
    raise MatroidError(f"no good order is known for class {tag!r}")


def laminar_counterexample(k):
    """Laminar matroid on ``2(k+2)`` elements whose ZDD width at level ``k+2``
    is at least ``k+1`` while the connectivity there is 2, with its order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    m = k + 2
    names = [f"e{j}" for j in range(1, 2 * m + 1)]
    sets, caps = [], []
    for j in range(1, m + 1):
        sets.append([f"e{2 * j - 1}", f"e{2 * j}"])
        caps.append(1)
        sets.append(names[: 2 * j])
        caps.append(2)
    M = laminar(sets, caps, names)
    order = ElementOrder([f"e{j}" for j in range(1, 2 * m, 2)] + [f"e{j}" for j in range(2, 2 * m + 1, 2)])
    return M, order

