"""Independent brute-force verifier.

The idea is degree-bounded linear algebra: collect every shift of the input
equations up to a bound, Gaussian-eliminate the resulting rows over the
coefficient field with columns in ranking order, and read a normal form off
the echelon rows.  Nothing here shares logic with the completion engine, so
agreement between the two is meaningful evidence of correctness.
"""

from __future__ import annotations

import itertools
from typing import Callable, Iterable, Sequence

from .difference import DiffPoly, DiffTerm, Ranking
from .rational import RatFun

# the distinguished constant column sorts below every term column
_CONST = None


def default_bound(system: Sequence[DiffPoly], probe: DiffPoly | None = None) -> int:
    """Maximum shift degree present in the system and probe, plus two."""
    degs = [t.total_degree() for f in system for t in f.terms]
    if probe is not None:
        degs.extend(t.total_degree() for t in probe.terms)
    return (max(degs) if degs else 0) + 2


class ProlongationMatrix:
    """Echelonized matrix of all shifts of the system up to a degree bound.

    Rows are the shifted equations; columns are the terms they touch, sorted
    descending under the ranking (every row stays within exponent degree
    bound + max input degree by construction), with the constant part as the
    final column.  drop removes matching term columns from every row, which
    models working modulo the span of those terms.
    """

    def __init__(self, system: Sequence[DiffPoly], ranking: Ranking,
                 bound: int, drop: Callable[[DiffTerm], bool] | None = None):
        if not system:
            raise ValueError("empty system")
        self.table = system[0].table
        self.ranking = ranking
        self.bound = bound
        self.drop = drop
        nvars = self.table.nvars
        rows = []
        for f in system:
            for alpha in itertools.product(range(bound + 1), repeat=nvars):
                if sum(alpha) <= bound:
                    rows.append(self._to_row(f.apply_shift(alpha)))
        rows = [r for r in rows if r]
        rows.sort(key=self._row_order)
        self.pivots: dict[object, dict[object, RatFun]] = {}
        for row in rows:
            self._install(row)

    def _to_row(self, p: DiffPoly) -> dict:
        row = {}
        for t, c in p.terms.items():
            if self.drop is not None and self.drop(t):
                continue
            row[t] = c
        if not p.constant.is_zero():
            row[_CONST] = p.constant
        return row

    def _col_key(self, col):
        # smaller key = earlier column; the constant column comes last
        if col is _CONST:
            return (1,)
        a, b, ex = self.ranking.key(col)
        return (0, -a, -b, tuple(-x for x in ex))

    def _row_order(self, row):
        size = sum(c.size() for c in row.values())
        lead = min(row, key=self._col_key)
        return (self._col_key(lead), size)

    def _leading(self, row):
        return min(row, key=self._col_key)

    def _install(self, row: dict):
        row = self._reduce_row(row)
        if not row:
            return
        lead = self._leading(row)
        inv = row[lead].inverse()
        self.pivots[lead] = {c: v * inv for c, v in row.items()}

    def _reduce_row(self, row: dict) -> dict:
        """Clear every pivot column from the row.  A pivot row only touches
        columns at or after its own lead, so the earliest remaining pivot
        column advances strictly and the loop terminates."""
        row = dict(row)
        while row:
            hit = None
            for c in sorted(row, key=self._col_key):
                if c in self.pivots:
                    hit = c
                    break
            if hit is None:
                break
            piv = self.pivots[hit]
            factor = row[hit]
            for c, v in piv.items():
                cur = row.get(c)
                nxt = (cur - v * factor) if cur is not None else -(v * factor)
                if nxt.is_zero():
                    row.pop(c, None)
                else:
                    row[c] = nxt
            row.pop(hit, None)
        return row

    def normal_form(self, h: DiffPoly) -> DiffPoly:
        """h minus its projection onto the row space; the result is unique
        whatever the elimination order was."""
        residue = self._reduce_row(self._to_row(h))
        terms = {c: v for c, v in residue.items() if c is not _CONST}
        constant = residue.get(_CONST, RatFun.from_int(self.table, 0))
        return DiffPoly(self.table, terms, constant)

    def contains(self, h: DiffPoly) -> bool:
        return self.normal_form(h).is_zero()


def oracle_normal_form(h: DiffPoly, system: Iterable[DiffPoly], ranking: Ranking,
                       bound: int | None = None,
                       drop: Callable[[DiffTerm], bool] | None = None) -> DiffPoly:
    """Normal form of h modulo all shifts of the system up to the bound.

    For a large enough bound this equals the Groebner normal form modulo the
    completed basis; a too-small bound shows up as a mismatch against the
    engine, never as a wrong claim of membership.
    """
    system = list(system)
    if bound is None:
        bound = default_bound(system, h)
    return ProlongationMatrix(system, ranking, bound, drop=drop).normal_form(h)
