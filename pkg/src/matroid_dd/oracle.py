"""Independence and rank queries answered from ZDD(I(M)) in O(n) steps."""

from .dd import TOP, DiagramError, Kind


class ZddOracle:
    """Query front end over a ZDD of a matroid's independent sets.

    ``last_visits`` holds the number of traversal steps of the most recent
    query; tests assert it against the linear bounds.
    """

    def __init__(self, D):
        if D.kind is not Kind.ZDD:
            raise DiagramError("the oracle needs a ZDD")
        self.D = D
        self.last_visits = 0

    @property
    def n(self):
        return self.D.n

    def _mask(self, X):
        if isinstance(X, int):
            return X
        return self.D.order.mask(X)

    def is_independent(self, X):
        """Membership of X by a single root-to-terminal walk."""
        X = self._mask(X)
        lo, hi, label = self.D.store.lo, self.D.store.hi, self.D.store.label
        v, cur, steps = self.D.root, 0, 0
        ok = True
        while v > TOP:
            steps += 1
            lv = label[v]
            if (X >> cur) & ((1 << (lv - cur)) - 1):
                ok = False
                break
            v = hi[v] if (X >> lv) & 1 else lo[v]
            cur = lv + 1
        self.last_visits = steps
        return ok and v == TOP and not X >> cur

    def rank(self, X):
        """Rank of X by walking deletion, loop and contraction steps down the ZDD."""
        X = self._mask(X)
        store = self.D.store
        lo, hi, label = store.lo, store.hi, store.label
        v, r, steps = self.D.root, 0, 0
        prev = -1
        while v != TOP and X:
            steps += 1
            if v == 0:
                # only reachable from a malformed family: nothing more is independent
                break
            e = label[v]
            if e <= prev:
                raise DiagramError(f"label order violated at node {v}: {e} after {prev}")
            m = (X & -X).bit_length() - 1
            if e < m:
                prev = e
                v = lo[v]
            elif e > m:
                X &= X - 1
            else:
                r += 1
                X &= X - 1
                prev = e
                v = hi[v]
        self.last_visits = steps
        return r


def zdd_independence(D, X):
    return ZddOracle(D).is_independent(X)


def zdd_rank(D, X):
    return ZddOracle(D).rank(X)
