"""Boundary vanishing patterns, enumeration of master terms, and reduction of
a target term to a combination of masters.

A vanishing pattern declares that every term of one function whose shift
exponents take fixed values at the constrained positions is zero; reduction
deletes such terms as soon as they appear.  Master terms are the staircase
complement surviving the patterns.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .difference import DiffPoly, DiffTerm
from .errors import InfiniteResidueBasis
from .factor import Factored, factor_output
from .janet import MarkedBasis, j_normal_form
from .rational import RatFun


@dataclass(frozen=True)
class VanishingPattern:
    """Terms of one function vanish when the constrained shift positions
    carry exactly the given values; unconstrained positions are wildcards."""

    func: int
    constraints: tuple[tuple[int, int], ...]

    def __post_init__(self):
        cons = tuple(sorted(dict(self.constraints).items()))
        if not cons:
            raise ValueError("a vanishing pattern needs at least one "
                             "constrained position")
        if any(v < 0 for _, v in cons):
            raise ValueError("constraint values must be nonnegative")
        object.__setattr__(self, "constraints", cons)

    @classmethod
    def make(cls, func: int, constraints: Mapping[int, int]) -> "VanishingPattern":
        return cls(func, tuple(constraints.items()))

    def matches(self, term: DiffTerm) -> bool:
        return term.func == self.func and all(
            term.exps[p] == v for p, v in self.constraints)

    def constrains(self, pos: int) -> bool:
        return any(p == pos for p, _ in self.constraints)


@dataclass(frozen=True)
class ReductionReport:
    """Result of expressing one target term through the master terms."""

    target: DiffTerm
    combination: tuple[tuple[DiffTerm, RatFun], ...]
    masters: tuple[DiffTerm, ...]
    factored: tuple[tuple[DiffTerm, Factored], ...] | None = None

    def coefficient(self, term: DiffTerm) -> RatFun | None:
        for t, c in self.combination:
            if t == term:
                return c
        return None


def apply_patterns(p: DiffPoly, patterns: Sequence[VanishingPattern]) -> DiffPoly:
    """Delete every term matching some pattern; other coefficients and the
    constant part are untouched."""
    if not patterns:
        return p
    terms = {t: c for t, c in p.terms.items()
             if not any(pat.matches(t) for pat in patterns)}
    if len(terms) == len(p.terms):
        return p
    return DiffPoly(p.table, terms, p.constant)


def _vanishes(term: DiffTerm, patterns: Sequence[VanishingPattern]) -> bool:
    return any(pat.matches(term) for pat in patterns)


def _standard(term: DiffTerm, lts: Sequence[DiffTerm]) -> bool:
    return not any(lt.divides(term) for lt in lts)


def residue_class_basis(basis: MarkedBasis,
                        patterns: Sequence[VanishingPattern] = (),
                        nfuncs: int | None = None) -> list[DiffTerm]:
    """All terms with no divisor among the basis leading terms and not matching
    any pattern, sorted ascending; raises InfiniteResidueBasis when that set
    is infinite.

    Enumeration runs over the box bounded per coordinate by the staircase;
    an escape along coordinate i from a box face is detected by stepping past
    the finitely many pattern-constrained values of that coordinate.
    """
    ranking = basis.ranking
    if not len(basis.elements):
        raise ValueError("empty basis")
    table = basis.elements[0].poly.table
    nvars = table.nvars
    if nfuncs is None:
        seen = {t.func for e in basis.elements for t in e.poly.terms}
        seen.update(p.func for p in patterns)
        nfuncs = max(seen) + 1
    out: list[DiffTerm] = []
    for func in range(nfuncs):
        lts = [e.lt for e in basis.per_function(func)]
        pats = [p for p in patterns if p.func == func]
        box = [max((t.exps[i] for t in lts), default=0) for i in range(nvars)]
        for exps in itertools.product(*(range(b + 1) for b in box)):
            term = DiffTerm(func, exps)
            if not _standard(term, lts):
                continue
            vanish = _vanishes(term, pats)
            if not vanish:
                out.append(term)
            # face escape test along every coordinate at its box bound
            for i in range(nvars):
                if exps[i] != box[i]:
                    continue
                step = list(exps)
                step[i] += 1
                stepped = DiffTerm(func, tuple(step))
                if not _standard(stepped, lts):
                    continue
                # beyond the box the whole ray is standard; patterns that
                # constrain coordinate i kill at most one point each, so the
                # ray is finite only when a pattern free in i kills all of it
                ray_killed = any(not p.constrains(i) and p.matches(stepped)
                                 for p in pats)
                if not ray_killed:
                    raise InfiniteResidueBasis(
                        f"standard terms escape along coordinate {i} "
                        f"of function {func}")
    out.sort(key=ranking.key)
    return out


def reduce_to_masters(target: DiffTerm, basis: MarkedBasis,
                      patterns: Sequence[VanishingPattern] = (),
                      factor: bool = False,
                      enumerate_masters: bool = True) -> ReductionReport:
    """Express the target as a combination of master terms: the restricted
    normal form of the bare target, with the vanishing patterns applied to
    the result.

    Patterns must not be applied during the rewriting itself: a matching
    term can still be reducible, and erasing it early would silently drop
    its contribution to the surviving masters.
    """
    ranking = basis.ranking
    table = basis.elements[0].poly.table
    work = j_normal_form(DiffPoly.single(table, target), basis)
    work = apply_patterns(work, patterns)
    combination = tuple(work.sorted_terms(ranking))
    if enumerate_masters:
        masters = tuple(residue_class_basis(basis, patterns))
    else:
        masters = tuple(t for t, _ in sorted(combination,
                                             key=lambda kv: ranking.key(kv[0])))
    factored = None
    if factor:
        factored = tuple((t, factor_output(c)) for t, c in combination)
    return ReductionReport(target=target, combination=combination,
                           masters=masters, factored=factored)
