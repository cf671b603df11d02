"""Linear difference polynomials over the rational-function field.

A term is a power product of right-shift operators applied to one unknown
function; a difference polynomial is a finite coefficient map over such terms
plus a distinguished inhomogeneous constant.  Applying a shift to a
polynomial shifts both the term exponents and every coefficient, which is the
noncommutative twist that makes the shift action well defined over
coefficients depending on the variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import NoLeadingTerm
from .rational import RatFun, SymbolTable


@dataclass(frozen=True, slots=True)
class DiffTerm:
    """One shift power product applied to one function index."""

    func: int
    exps: tuple[int, ...]

    def shifted(self, beta: tuple[int, ...]) -> "DiffTerm":
        return DiffTerm(self.func, tuple(a + b for a, b in zip(self.exps, beta)))

    def total_degree(self) -> int:
        return sum(self.exps)

    def divides(self, other: "DiffTerm") -> bool:
        """Plain divisibility: same function and component-wise dominance."""
        return self.func == other.func and all(
            a <= b for a, b in zip(self.exps, other.exps))


@dataclass(frozen=True)
class Ranking:
    """Total order on terms compatible with the shift action.

    kind "orderly" compares total shift degree first; kind "elimination"
    compares function priority first.  Both priorities list the heaviest
    entry first; variable_priority holds variable positions.
    """

    kind: str
    function_priority: tuple[int, ...]
    variable_priority: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in ("orderly", "elimination"):
            raise ValueError(f"unknown ranking kind {self.kind!r}")
        object.__setattr__(self, "function_priority", tuple(self.function_priority))
        object.__setattr__(self, "variable_priority", tuple(self.variable_priority))
        rank = {}
        for r, f in enumerate(self.function_priority):
            rank[f] = r
        object.__setattr__(self, "_func_rank", rank)

    @classmethod
    def orderly(cls, nfuncs: int, nvars: int) -> "Ranking":
        return cls("orderly", tuple(range(nfuncs)), tuple(range(nvars)))

    @classmethod
    def elimination(cls, function_priority: Iterable[int], nvars: int) -> "Ranking":
        return cls("elimination", tuple(function_priority), tuple(range(nvars)))

    def key(self, t: DiffTerm):
        """Sort key: greater key means greater term."""
        fr = -self._func_rank[t.func]
        ex = tuple(t.exps[p] for p in self.variable_priority)
        if self.kind == "orderly":
            return (sum(t.exps), fr, ex)
        return (fr, sum(t.exps), ex)

    def compare(self, u: DiffTerm, v: DiffTerm) -> int:
        ku, kv = self.key(u), self.key(v)
        if ku < kv:
            return -1
        if ku > kv:
            return 1
        return 0


def compare_terms(u: DiffTerm, v: DiffTerm, ranking: Ranking) -> int:
    """-1, 0, or 1 as u is below, equal to, or above v."""
    if len(u.exps) != len(v.exps):
        raise ValueError("terms of different arity are not comparable")
    return ranking.compare(u, v)


class DiffPoly:
    """Finite map from DiffTerm to nonzero RatFun plus a constant part."""

    __slots__ = ("table", "terms", "constant")

    def __init__(self, table: SymbolTable, terms: dict[DiffTerm, RatFun],
                 constant: RatFun):
        self.table = table
        self.terms = terms
        self.constant = constant

    @classmethod
    def from_terms(cls, table: SymbolTable,
                   items: Iterable[tuple[DiffTerm, RatFun]],
                   constant: RatFun | None = None) -> "DiffPoly":
        acc: dict[DiffTerm, RatFun] = {}
        nv = table.nvars
        for term, coeff in items:
            if len(term.exps) != nv:
                raise ValueError("term arity does not match the symbol table")
            if any(e < 0 for e in term.exps):
                raise ValueError("negative shift exponent")
            c = acc.get(term)
            c = coeff if c is None else c + coeff
            if c.is_zero():
                acc.pop(term, None)
            else:
                acc[term] = c
        if constant is None:
            constant = RatFun.from_int(table, 0)
        return cls(table, acc, constant)

    @classmethod
    def zero(cls, table: SymbolTable) -> "DiffPoly":
        return cls(table, {}, RatFun.from_int(table, 0))

    @classmethod
    def single(cls, table: SymbolTable, term: DiffTerm,
               coeff: RatFun | None = None) -> "DiffPoly":
        if coeff is None:
            coeff = RatFun.from_int(table, 1)
        return cls.from_terms(table, [(term, coeff)])

    def is_zero(self) -> bool:
        return not self.terms and self.constant.is_zero()

    def constant_only(self) -> bool:
        return not self.terms

    def sorted_terms(self, ranking: Ranking) -> list[tuple[DiffTerm, RatFun]]:
        return sorted(self.terms.items(), key=lambda kv: ranking.key(kv[0]),
                      reverse=True)

    def leading_term(self, ranking: Ranking) -> tuple[DiffTerm, RatFun]:
        if not self.terms:
            raise NoLeadingTerm("polynomial has no non-constant term")
        lt = max(self.terms, key=ranking.key)
        return lt, self.terms[lt]

    def apply_shift(self, beta: tuple[int, ...]) -> "DiffPoly":
        """Shift action: exponents increase by beta and every coefficient,
        including the constant, is shifted along."""
        beta = tuple(beta)
        if len(beta) != self.table.nvars:
            raise ValueError("shift arity must equal the number of variables")
        if any(b < 0 for b in beta):
            raise ValueError("shift exponents must be nonnegative")
        if not any(beta):
            return self
        terms = {t.shifted(beta): c.shift(beta) for t, c in self.terms.items()}
        return DiffPoly(self.table, terms, self.constant.shift(beta))

    def scale(self, c: RatFun) -> "DiffPoly":
        if c.is_zero():
            return DiffPoly.zero(self.table)
        if c.is_one():
            return self
        return DiffPoly(self.table, {t: v * c for t, v in self.terms.items()},
                        self.constant * c)

    def __add__(self, other: "DiffPoly") -> "DiffPoly":
        acc = dict(self.terms)
        for t, c in other.terms.items():
            prev = acc.get(t)
            s = c if prev is None else prev + c
            if s.is_zero():
                acc.pop(t, None)
            else:
                acc[t] = s
        return DiffPoly(self.table, acc, self.constant + other.constant)

    def __sub__(self, other: "DiffPoly") -> "DiffPoly":
        return self + other.scale(RatFun.from_int(self.table, -1))

    def __neg__(self) -> "DiffPoly":
        return self.scale(RatFun.from_int(self.table, -1))

    def make_monic(self, ranking: Ranking) -> "DiffPoly":
        _, lc = self.leading_term(ranking)
        if lc.is_one():
            return self
        return self.scale(lc.inverse())

    def specialize(self, bindings: Mapping[str, RatFun]) -> "DiffPoly":
        terms = {}
        for t, c in self.terms.items():
            c2 = c.specialize(bindings)
            if not c2.is_zero():
                terms[t] = c2
        return DiffPoly(self.table, terms, self.constant.specialize(bindings))

    def key(self, ranking: Ranking):
        """Canonical hashable identity used for queue dedup and sorting."""
        items = tuple((t.func, t.exps, c.key())
                      for t, c in self.sorted_terms(ranking))
        return (items, self.constant.key())

    def __eq__(self, other) -> bool:
        return (isinstance(other, DiffPoly) and self.table == other.table
                and self.terms == other.terms and self.constant == other.constant)

    def __repr__(self):
        from .render import diffpoly_str
        names = [f"y{j}" for j in range(max((t.func for t in self.terms),
                                            default=0) + 1)]
        return f"DiffPoly({diffpoly_str(self, Ranking.orderly(len(names), self.table.nvars), names)})"


def linear_combine(c1: RatFun, p1: DiffPoly, c2: RatFun, p2: DiffPoly) -> DiffPoly:
    """Coefficient-wise c1*p1 + c2*p2 with zero coefficients dropped."""
    return p1.scale(c1) + p2.scale(c2)


def proportional(p: DiffPoly, q: DiffPoly) -> bool:
    """True when p = c*q for one nonzero rational function c."""
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if set(p.terms) != set(q.terms):
        return False
    ratio = None
    for t, c in p.terms.items():
        r = c / q.terms[t]
        if ratio is None:
            ratio = r
        elif r != ratio:
            return False
    if ratio is None:
        ratio = RatFun.from_int(p.table, 1)
    return p.constant == q.constant * ratio
