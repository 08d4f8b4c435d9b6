"""The lattice of saturated column sets of a code, with counting polynomials.

Saturated sets are exactly the flats of the column matroid of the
generator matrix.  Enumeration walks cover edges upward from the closure
of the empty set; for a flat F the closures cl(F + {i}) over i outside F
partition the complement of F (matroid exchange), so each cover is
computed once.

Flats are stored in a canonical order (cardinality, then the index tuple),
so results are identical regardless of construction schedule.  The
classical intersection-lattice convention orders these sets by reversed
inclusion; storage here uses plain inclusion and callers flip the order if
they need the other convention.
"""

from __future__ import annotations

from collections import deque

from .codes import Code, indices_from_mask
from .errors import BudgetExceeded, NotAFlat, NotComparable
from .qpoly import QPoly

DEFAULT_FLAT_BUDGET = 5_000_000


class FlatLattice:
    """Immutable container for the saturated sets of one code."""

    __slots__ = ("code", "flats", "dims", "covers", "index", "_zetas", "_mobius")

    def __init__(self, code: Code, flats, dims, covers):
        self.code = code
        self.flats = tuple(flats)   # masks, canonical order
        self.dims = tuple(dims)
        self.covers = tuple(covers)  # per flat: indices of covering flats
        self.index = {mask: i for i, mask in enumerate(self.flats)}
        self._zetas = None
        self._mobius = {}

    def __len__(self):
        return len(self.flats)

    def __contains__(self, mask):
        return mask in self.index

    @property
    def bottom(self) -> int:
        """The closure of the empty set (all loop columns)."""
        return self.flats[0]

    @property
    def top(self) -> int:
        return self.flats[-1]

    def flat_index(self, mask: int) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise NotAFlat(
                f"{list(indices_from_mask(mask))} is not a saturated set") from None

    def dim_of(self, mask: int) -> int:
        return self.dims[self.flat_index(mask)]

    # -- counting polynomials -------------------------------------------------

    def zetas(self):
        """Counting polynomials for all flats, aligned with self.flats.

        zeta(S) = q^dim(S) - sum of zeta(T) over flats T strictly above S,
        evaluated in descending cardinality order so every needed value is
        already present.
        """
        if self._zetas is None:
            flats, dims = self.flats, self.dims
            order = sorted(range(len(flats)),
                           key=lambda i: flats[i].bit_count(), reverse=True)
            zetas = [None] * len(flats)
            above = []  # (mask, index) of flats with strictly larger cardinality
            group = []
            group_card = None
            for i in order:
                card = flats[i].bit_count()
                if card != group_card:
                    above.extend(group)
                    group = []
                    group_card = card
                s = flats[i]
                acc = QPoly.q_power(dims[i])
                for mask, j in above:
                    if mask & s == s:
                        acc = acc - zetas[j]
                zetas[i] = acc
                group.append((s, i))
            self._zetas = tuple(zetas)
        return self._zetas

    def zeta(self, mask: int) -> QPoly:
        return self.zetas()[self.flat_index(mask)]

    def mobius(self, smask: int, tmask: int) -> int:
        """Moebius function of the interval [S, T] under inclusion."""
        si = self.flat_index(smask)
        ti = self.flat_index(tmask)
        if smask & tmask != smask:
            raise NotComparable(
                f"{list(indices_from_mask(smask))} is not contained in "
                f"{list(indices_from_mask(tmask))}")
        return self._mobius_rec(si, ti)

    def _mobius_rec(self, si: int, ti: int) -> int:
        if si == ti:
            return 1
        key = (si, ti)
        cached = self._mobius.get(key)
        if cached is not None:
            return cached
        smask = self.flats[si]
        tmask = self.flats[ti]
        total = 0
        for ui, umask in enumerate(self.flats):
            if umask != tmask and umask & smask == smask and umask & tmask == umask:
                total += self._mobius_rec(si, ui)
        value = -total
        self._mobius[key] = value
        return value

    def zeta_by_mobius(self, mask: int) -> QPoly:
        """Independent route: zeta(S) = sum mu(S,T) q^dim(T) over T above S."""
        si = self.flat_index(mask)
        smask = self.flats[si]
        acc = QPoly()
        for ti, tmask in enumerate(self.flats):
            if tmask & smask == smask:
                acc = acc + self._mobius_rec(si, ti) * QPoly.q_power(self.dims[ti])
        return acc

    def to_json_obj(self):
        zetas = self.zetas()
        return {
            "flat_count": len(self.flats),
            "flats": [
                {
                    "indices": list(indices_from_mask(mask)),
                    "dim": self.dims[i],
                    "zeta_q": list(zetas[i].coeffs),
                }
                for i, mask in enumerate(self.flats)
            ],
        }


def enumerate_flats(code: Code, budget: int | None = None) -> FlatLattice:
    """Breadth-first cover expansion of all saturated sets of the code."""
    limit = DEFAULT_FLAT_BUDGET if budget is None else budget
    n, k = code.n, code.k
    columns = code._columns
    bottom = code.closure(0)
    dims = {bottom: k}
    cover_sets = {}
    queue = deque([bottom])
    while queue:
        fmask = queue.popleft()
        basis = code.column_basis(fmask)
        rank = basis.rank
        seen = fmask
        found = []
        for i in range(n):
            if (seen >> i) & 1:
                continue
            grown = basis.copy()
            grown.insert(columns[i])
            tmask = fmask | (1 << i)
            for j in range(n):
                if not (tmask >> j) & 1 and grown.contains(columns[j]):
                    tmask |= 1 << j
            seen |= tmask
            found.append(tmask)
            if tmask not in dims:
                dims[tmask] = k - (rank + 1)
                if len(dims) > limit:
                    raise BudgetExceeded(limit)
                queue.append(tmask)
        cover_sets[fmask] = found
    order = sorted(dims, key=lambda m: (m.bit_count(), indices_from_mask(m)))
    position = {mask: i for i, mask in enumerate(order)}
    covers = [tuple(sorted(position[t] for t in cover_sets.get(mask, ())))
              for mask in order]
    return FlatLattice(code, order, [dims[m] for m in order], covers)
