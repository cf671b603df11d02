"""Partial factorization of rational functions for display.

The decomposition extracts integer content and sign, monomial content, per
symbol polynomial content, a square-free split, and every factor that is
linear in at least one symbol.  Irreducible pieces of higher degree in all
their symbols (for example x^2 + y^2) are returned unfactored.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .rational import MultiPoly, RatFun, canonical_sign, content_wrt, exact_div, poly_gcd

_CANDIDATE_CAP = 4096


@dataclass(frozen=True)
class Factored:
    """unit * product(num_factors) / product(den_factors); every factor is
    primitive with a positive leading coefficient."""

    unit: Fraction
    num_factors: tuple[tuple[MultiPoly, int], ...]
    den_factors: tuple[tuple[MultiPoly, int], ...]

    def expand(self) -> RatFun:
        table = None
        for p, _ in self.num_factors + self.den_factors:
            table = p.table
            break
        if table is None:
            raise ValueError("cannot expand a purely numeric factorization "
                             "without a symbol table")
        num = MultiPoly.const(table, self.unit.numerator)
        for p, e in self.num_factors:
            num = num * p ** e
        den = MultiPoly.const(table, self.unit.denominator)
        for p, e in self.den_factors:
            den = den * p ** e
        return RatFun(num, den)

    def expand_with(self, table) -> RatFun:
        if not self.num_factors and not self.den_factors:
            return RatFun.from_fraction(table, self.unit)
        return self.expand()

    def __str__(self):
        from .render import factored_str
        return factored_str(self)


def factor_output(r: RatFun) -> Factored:
    """Factor numerator and denominator for display; multiplying the factors
    back reproduces the canonical input exactly."""
    nunit, nfac = _factor_poly(r.num)
    dunit, dfac = _factor_poly(r.den)
    return Factored(nunit / dunit, tuple(nfac), tuple(dfac))


def _factor_key(item: tuple[MultiPoly, int]):
    p, e = item
    return (p.total_degree(), sorted(p.terms.items()), e)


def _factor_poly(p: MultiPoly) -> tuple[Fraction, list[tuple[MultiPoly, int]]]:
    if p.is_zero():
        return Fraction(0), []
    p, sign = canonical_sign(p)
    content = p.int_content()
    unit = Fraction(sign * content)
    if content != 1:
        p = exact_div(p, MultiPoly.const(p.table, content))
    if p.is_const():
        return unit, []
    collected: dict[tuple, tuple[MultiPoly, int]] = {}

    def emit(q: MultiPoly, mult: int):
        k = q.key()
        if k in collected:
            prev, e = collected[k]
            collected[k] = (prev, e + mult)
        else:
            collected[k] = (q, mult)

    # monomial content
    mono = None
    for m in p.terms:
        mono = m if mono is None else tuple(min(a, b) for a, b in zip(mono, m))
    if any(mono):
        for i, e in enumerate(mono):
            if e:
                emit(MultiPoly.symbol(p.table, p.table.symbols[i]), e)
        p = exact_div(p, MultiPoly(p.table, {mono: 1}))

    work = [(p, 1)]
    while work:
        q, mult = work.pop()
        q, s = canonical_sign(q)
        c = q.int_content()
        if c != 1:
            q = exact_div(q, MultiPoly.const(q.table, c))
        unit *= Fraction(s * c) ** mult
        if q.is_const():
            continue
        # symbol content split first so every factor of q involves the
        # splitting symbol afterwards
        split = False
        for pos in q.positions():
            cont = content_wrt(q, pos)
            if not cont.is_const():
                work.append((cont, mult))
                work.append((exact_div(q, cont), mult))
                split = True
                break
        if split:
            continue
        pos = q.positions()[0]
        pieces = _yun(q, pos)
        if len(pieces) > 1 or pieces[0][1] > 1:
            for piece, k in pieces:
                if not piece.is_const():
                    work.append((piece, mult * k))
            continue
        # q is square-free and content-free in every symbol: a factor of
        # degree one in any single symbol is irreducible
        if any(q.degree_in(pos2) == 1 for pos2 in q.positions()):
            emit(q, mult)
            continue
        lin = None
        for pos2 in q.positions():
            lin = _find_linear_factor(q, pos2)
            if lin is not None:
                break
        if lin is None:
            emit(q, mult)
        else:
            work.append((lin, mult))
            work.append((exact_div(q, lin), mult))
    factors = sorted(collected.values(), key=_factor_key)
    return unit, factors


def _yun(p: MultiPoly, pos: int) -> list[tuple[MultiPoly, int]]:
    """Square-free decomposition with respect to one symbol; p must be
    content-free in that symbol, which holds for all its factors here."""
    dp = p.derivative(pos)
    g = poly_gcd(p, dp)
    if g.is_const():
        return [(p, 1)]
    out: list[tuple[MultiPoly, int]] = []
    c = exact_div(p, g)
    d = exact_div(dp, g) - c.derivative(pos)
    i = 1
    while not c.is_const():
        gi = poly_gcd(c, d)
        if not gi.is_const():
            out.append((gi, i))
        c = exact_div(c, gi)
        d = exact_div(d, gi) - c.derivative(pos)
        i += 1
    return out if out else [(p, 1)]


def _find_linear_factor(q: MultiPoly, pos: int) -> MultiPoly | None:
    """Search for a factor A*s + B of q, where s is the symbol at pos;
    candidates for A and B come from factoring the top and bottom
    coefficients of the univariate view."""
    deg = q.degree_in(pos)
    if deg < 2:
        return None
    from .rational import _uview
    view = _uview(q, pos)
    lead = view.get(deg)
    low = view.get(0)
    if lead is None or low is None or low.is_zero():
        return None
    svar = MultiPoly.symbol(q.table, q.table.symbols[pos])
    for A in _divisor_candidates(lead):
        for B in _divisor_candidates(low):
            for sgn in (1, -1):
                cand = A * svar + B.mul_int(sgn)
                quot = exact_div(q, cand)
                if quot is not None:
                    return canonical_sign(cand)[0]
    return None


def _divisor_candidates(p: MultiPoly) -> list[MultiPoly]:
    """Divisors of p assembled from its (recursive) factorization, capped."""
    unit, factors = _factor_poly(p)
    content = abs(unit.numerator)
    int_divs = [d for d in range(1, content + 1) if content % d == 0] if content else [1]
    out: list[MultiPoly] = []
    choices = [range(e + 1) for _, e in factors]
    for exps in itertools.product(*choices):
        base = MultiPoly.const(p.table, 1)
        for (fac, _), e in zip(factors, exps):
            if e:
                base = base * fac ** e
        for d in int_divs:
            out.append(base.mul_int(d))
            if len(out) >= _CANDIDATE_CAP:
                return out
    return out
