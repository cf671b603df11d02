"""Exact arithmetic in the coefficient field: sparse multivariate polynomials
over arbitrary-precision integers and their quotients.

Monomials are exponent tuples over the fixed symbol order of a SymbolTable
(shiftable variables first, then inert parameters).  The internal monomial
order is graded lexicographic over that symbol order.  A canonical RatFun has
coprime numerator and denominator and a positive-leading denominator, so two
equal values are structurally identical and compare equal component-wise.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import DivisionByZero

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class SymbolTable:
    """Fixed, ordered symbol universe shared by all values of a computation."""

    __slots__ = ("variables", "parameters", "_index")

    def __init__(self, variables: Iterable[str], parameters: Iterable[str] = ()):
        self.variables = tuple(variables)
        self.parameters = tuple(parameters)
        names = self.variables + self.parameters
        for name in names:
            if not _IDENT.match(name):
                raise ValueError(f"invalid symbol name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError("symbol names must be pairwise distinct")
        self._index = {s: i for i, s in enumerate(names)}

    @property
    def symbols(self) -> tuple[str, ...]:
        return self.variables + self.parameters

    @property
    def arity(self) -> int:
        return len(self._index)

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        return self._index[name]

    def is_variable(self, name: str) -> bool:
        return name in self._index and self._index[name] < len(self.variables)

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymbolTable)
                and self.variables == other.variables
                and self.parameters == other.parameters)

    def __hash__(self):
        return hash((self.variables, self.parameters))

    def __repr__(self):
        return f"SymbolTable(variables={self.variables}, parameters={self.parameters})"


def _grlex(mono: tuple[int, ...]):
    return (sum(mono), mono)


class MultiPoly:
    """Sparse polynomial with integer coefficients; immutable once built."""

    __slots__ = ("table", "terms", "_key")

    def __init__(self, table: SymbolTable, terms: dict[tuple[int, ...], int]):
        # trusted constructor: terms must already be merged with no zeros
        self.table = table
        self.terms = terms
        self._key = None

    @classmethod
    def from_terms(cls, table: SymbolTable,
                   items: Iterable[tuple[tuple[int, ...], int]]) -> "MultiPoly":
        """Merge like terms and drop zero coefficients (idempotent)."""
        acc: dict[tuple[int, ...], int] = {}
        arity = table.arity
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != arity:
                raise ValueError("exponent vector arity mismatch")
            if any(e < 0 for e in mono):
                raise ValueError("negative exponent in monomial")
            c = acc.get(mono, 0) + coeff
            if c:
                acc[mono] = c
            else:
                acc.pop(mono, None)
        return cls(table, acc)

    @classmethod
    def zero(cls, table: SymbolTable) -> "MultiPoly":
        return cls(table, {})

    @classmethod
    def const(cls, table: SymbolTable, value: int) -> "MultiPoly":
        if value == 0:
            return cls(table, {})
        return cls(table, {(0,) * table.arity: value})

    @classmethod
    def symbol(cls, table: SymbolTable, name: str) -> "MultiPoly":
        i = table.index(name)
        mono = tuple(1 if j == i else 0 for j in range(table.arity))
        return cls(table, {mono: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def is_const(self) -> bool:
        return all(not any(m) for m in self.terms)

    def const_value(self) -> int:
        if self.is_zero():
            return 0
        if not self.is_const():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def leading_monomial(self) -> tuple[int, ...]:
        return max(self.terms, key=_grlex)

    def leading_coeff(self) -> int:
        return self.terms[self.leading_monomial()]

    def total_degree(self) -> int:
        return max((sum(m) for m in self.terms), default=0)

    def degree_in(self, pos: int) -> int:
        return max((m[pos] for m in self.terms), default=0)

    def positions(self) -> list[int]:
        """Symbol positions that actually occur."""
        present = set()
        for m in self.terms:
            for i, e in enumerate(m):
                if e:
                    present.add(i)
        return sorted(present)

    def int_content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = math.gcd(g, c)
            if g == 1:
                break
        return g

    def key(self):
        if self._key is None:
            self._key = tuple(sorted(self.terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self.terms == other.terms \
            and self.table == other.table

    def __hash__(self):
        return hash(self.key())

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.table, {m: -c for m, c in self.terms.items()})

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return MultiPoly(self.table, acc)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            s = acc.get(m, 0) - c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return MultiPoly(self.table, acc)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        if not self.terms or not other.terms:
            return MultiPoly(self.table, {})
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        acc: dict[tuple[int, ...], int] = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = tuple(x + y for x, y in zip(m1, m2))
                s = acc.get(m, 0) + c1 * c2
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return MultiPoly(self.table, acc)

    def mul_int(self, k: int) -> "MultiPoly":
        if k == 0:
            return MultiPoly(self.table, {})
        if k == 1:
            return self
        return MultiPoly(self.table, {m: c * k for m, c in self.terms.items()})

    def __pow__(self, n: int) -> "MultiPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = MultiPoly.const(self.table, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def derivative(self, pos: int) -> "MultiPoly":
        acc: dict[tuple[int, ...], int] = {}
        for m, c in self.terms.items():
            e = m[pos]
            if e:
                m2 = m[:pos] + (e - 1,) + m[pos + 1:]
                s = acc.get(m2, 0) + c * e
                if s:
                    acc[m2] = s
                else:
                    acc.pop(m2, None)
        return MultiPoly(self.table, acc)

    def eval_at(self, pos: int, value: int) -> "MultiPoly":
        """Substitute one symbol by an integer."""
        acc: dict[tuple[int, ...], int] = {}
        for m, c in self.terms.items():
            e = m[pos]
            if e:
                c = c * value ** e
                m = m[:pos] + (0,) + m[pos + 1:]
            s = acc.get(m, 0) + c
            if s:
                acc[m] = s
            else:
                acc.pop(m, None)
        return MultiPoly(self.table, acc)

    def max_norm(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    def shift(self, offsets: tuple[int, ...]) -> "MultiPoly":
        """Substitute x_i -> x_i + offsets[i] for every variable; parameters
        are untouched."""
        nv = self.table.nvars
        if len(offsets) != nv:
            raise ValueError("offset arity must equal the number of variables")
        if not any(offsets):
            return self
        acc: dict[tuple[int, ...], int] = {}
        for mono, coeff in self.terms.items():
            # expand prod (x_i + o_i)^{e_i} one variable at a time
            partial: dict[tuple[int, ...], int] = {mono: coeff}
            for i, off in enumerate(offsets):
                if not off:
                    continue
                nxt: dict[tuple[int, ...], int] = {}
                for m, c in partial.items():
                    e = m[i]
                    if e == 0:
                        nxt[m] = nxt.get(m, 0) + c
                        continue
                    binom = 1
                    power = 1
                    # t runs from e down to 0; binom = C(e, t) * off^(e-t)
                    for t in range(e, -1, -1):
                        m2 = m[:i] + (t,) + m[i + 1:]
                        nxt[m2] = nxt.get(m2, 0) + c * binom * power
                        if t:
                            binom = binom * t // (e - t + 1)
                            power *= off
                for m, c in list(nxt.items()):
                    if not c:
                        del nxt[m]
                partial = nxt
            for m, c in partial.items():
                s = acc.get(m, 0) + c
                if s:
                    acc[m] = s
                else:
                    acc.pop(m, None)
        return MultiPoly(self.table, acc)

    def __repr__(self):
        from .render import poly_str
        return f"MultiPoly({poly_str(self)})"


def poly_normalize(table: SymbolTable,
                   items: Iterable[tuple[tuple[int, ...], int]]) -> tuple[MultiPoly, int]:
    """Merge a raw term list into canonical form; returns (abs-poly, sign)
    where the polynomial has a positive leading coefficient and sign is the
    extracted unit (+1, -1, or +1 for zero)."""
    p = MultiPoly.from_terms(table, items)
    return canonical_sign(p)


def canonical_sign(p: MultiPoly) -> tuple[MultiPoly, int]:
    if p.is_zero():
        return p, 1
    if p.leading_coeff() < 0:
        return -p, -1
    return p, 1


def exact_div(p: MultiPoly, q: MultiPoly) -> MultiPoly | None:
    """Exact polynomial quotient p / q, or None when q does not divide p."""
    if q.is_zero():
        raise DivisionByZero("polynomial division by zero")
    if p.is_zero():
        return p
    if q.is_const():
        d = q.const_value()
        acc = {}
        for m, c in p.terms.items():
            qt, r = divmod(c, d)
            if r:
                return None
            acc[m] = qt
        return MultiPoly(p.table, acc)
    rem = dict(p.terms)
    out: dict[tuple[int, ...], int] = {}
    qlm = q.leading_monomial()
    qlc = q.terms[qlm]
    while rem:
        lm = max(rem, key=_grlex)
        delta = tuple(a - b for a, b in zip(lm, qlm))
        if any(e < 0 for e in delta):
            return None
        qt, r = divmod(rem[lm], qlc)
        if r:
            return None
        out[delta] = qt
        for m, c in q.terms.items():
            m2 = tuple(a + b for a, b in zip(m, delta))
            s = rem.get(m2, 0) - c * qt
            if s:
                rem[m2] = s
            else:
                rem.pop(m2, None)
    return MultiPoly(p.table, out)


def _uview(p: MultiPoly, pos: int) -> dict[int, MultiPoly]:
    """Univariate view in the symbol at pos: degree -> coefficient polynomial
    (with that exponent zeroed)."""
    out: dict[int, dict] = {}
    for m, c in p.terms.items():
        e = m[pos]
        m2 = m[:pos] + (0,) + m[pos + 1:]
        out.setdefault(e, {})[m2] = c
    return {e: MultiPoly(p.table, d) for e, d in out.items()}


def _from_uview(table: SymbolTable, pos: int, view: Mapping[int, MultiPoly]) -> MultiPoly:
    acc: dict[tuple[int, ...], int] = {}
    for e, cp in view.items():
        for m, c in cp.terms.items():
            m2 = m[:pos] + (m[pos] + e,) + m[pos + 1:]
            acc[m2] = acc.get(m2, 0) + c
    return MultiPoly(table, {m: c for m, c in acc.items() if c})


def content_wrt(p: MultiPoly, pos: int) -> MultiPoly:
    """Content with respect to one symbol: gcd of the coefficient
    polynomials of its powers (sign-canonical)."""
    view = _uview(p, pos)
    g = MultiPoly.zero(p.table)
    for cp in view.values():
        g = poly_gcd(g, cp)
        if g.is_const() and g.const_value() == 1:
            break
    return g


def pseudo_rem(a: MultiPoly, b: MultiPoly, pos: int) -> MultiPoly:
    """Pseudo-remainder of a by b viewed univariately in the symbol at pos."""
    db = b.degree_in(pos)
    bv = _uview(b, pos)
    lb = bv[db]
    xunit = tuple(1 if i == pos else 0 for i in range(a.table.arity))
    xpoly = MultiPoly(a.table, {xunit: 1})
    r = a
    while not r.is_zero() and r.degree_in(pos) >= db:
        dr = r.degree_in(pos)
        la = _uview(r, pos)[dr]
        # r := lb*r - la*x^(dr-db)*b  lowers deg_pos by at least one
        r = lb * r - la * (xpoly ** (dr - db)) * b
    return r


def _interpolate(h: MultiPoly, xi: int, pos: int) -> MultiPoly:
    """Recover a polynomial in the symbol at pos from its value at xi via
    xi-adic expansion with symmetric remainders."""
    table = h.table
    acc: dict[tuple[int, ...], int] = {}
    cur = h.terms
    i = 0
    half = xi // 2
    while cur:
        nxt: dict[tuple[int, ...], int] = {}
        for m, c in cur.items():
            r = c % xi
            if r > half:
                r -= xi
            if r:
                m2 = m[:pos] + (i,) + m[pos + 1:]
                acc[m2] = r
            rest = (c - r) // xi
            if rest:
                nxt[m] = rest
        cur = nxt
        i += 1
    return MultiPoly(table, acc)


def _heugcd(p: MultiPoly, q: MultiPoly, tries: int = 6) -> MultiPoly | None:
    """Heuristic gcd by evaluation at a large integer and xi-adic lifting;
    a returned value is verified by exact division, failure returns None."""
    common = sorted(set(p.positions()) & set(q.positions()))
    if not common:
        return MultiPoly.const(p.table, math.gcd(p.int_content(), q.int_content()))
    cp, cq = p.int_content(), q.int_content()
    ground = math.gcd(cp, cq)
    p = exact_div(p, MultiPoly.const(p.table, cp))
    q = exact_div(q, MultiPoly.const(q.table, cq))
    pos = common[0]
    fn, gn = p.max_norm(), q.max_norm()
    bound = 2 * min(fn, gn) + 29
    xi = max(min(bound, 99 * math.isqrt(bound)),
             2 * min(fn // abs(p.leading_coeff()),
                     gn // abs(q.leading_coeff())) + 4)
    for _ in range(tries):
        pe = p.eval_at(pos, xi)
        qe = q.eval_at(pos, xi)
        if not pe.is_zero() and not qe.is_zero():
            if pe.is_const() and qe.is_const():
                h0 = MultiPoly.const(p.table,
                                     math.gcd(pe.const_value(), qe.const_value()))
            else:
                h0 = _heugcd(pe, qe, tries)
            if h0 is not None and not h0.is_zero():
                cand = _interpolate(h0, xi, pos)
                cc = cand.int_content()
                if cc not in (0, 1):
                    cand = exact_div(cand, MultiPoly.const(p.table, cc))
                if not cand.is_zero():
                    cand = canonical_sign(cand)[0]
                    if exact_div(p, cand) is not None \
                            and exact_div(q, cand) is not None:
                        return cand.mul_int(ground)
                # second chance through the cofactor of p
                cof0 = exact_div(pe, h0)
                if cof0 is not None and not cof0.is_zero():
                    cof = _interpolate(cof0, xi, pos)
                    if not cof.is_zero():
                        h = exact_div(p, cof)
                        if h is not None and not h.is_zero() \
                                and exact_div(q, h) is not None:
                            return canonical_sign(h)[0].mul_int(ground)
        xi = 73794 * xi * math.isqrt(math.isqrt(xi)) // 27011
    return None


def poly_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Greatest common divisor in canonical form (positive leading
    coefficient).  The heuristic evaluation gcd runs first; on the rare
    failure the primitive remainder sequence over a recursive univariate
    view in the lexicographically last symbol decides exactly."""
    if p.is_zero():
        return canonical_sign(q)[0]
    if q.is_zero():
        return canonical_sign(p)[0]
    if p.is_const() or q.is_const():
        return MultiPoly.const(p.table, math.gcd(p.int_content(), q.int_content()))
    if len(p.terms) == 1 or len(q.terms) == 1:
        # common monomial times integer content
        c = math.gcd(p.int_content(), q.int_content())
        mono = None
        for m in list(p.terms) + list(q.terms):
            mono = m if mono is None else tuple(min(a, b) for a, b in zip(mono, m))
        return MultiPoly(p.table, {mono: c})
    if p.terms == q.terms:
        return canonical_sign(p)[0]
    heuristic = _heugcd(p, q)
    if heuristic is not None:
        return canonical_sign(heuristic)[0]
    return _prs_gcd(p, q)


def _prs_gcd(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    pos = max(p.positions()[-1], q.positions()[-1])
    dp, dq = p.degree_in(pos), q.degree_in(pos)
    if dp == 0:
        return poly_gcd(p, content_wrt(q, pos))
    if dq == 0:
        return poly_gcd(content_wrt(p, pos), q)
    cp = content_wrt(p, pos)
    cq = content_wrt(q, pos)
    pp = exact_div(p, cp)
    qq = exact_div(q, cq)
    c = poly_gcd(cp, cq)
    a, b = (pp, qq) if dp >= dq else (qq, pp)
    while not b.is_zero():
        r = pseudo_rem(a, b, pos)
        if r.is_zero():
            a = b
            break
        cb = content_wrt(r, pos)
        a, b = b, exact_div(r, cb)
    return canonical_sign(c * a)[0]


def _eval_poly(p: MultiPoly, bound: Mapping[int, "RatFun"]) -> "RatFun":
    """Evaluate a polynomial with some symbol positions bound to RatFun
    values; unbound symbols stay symbolic."""
    total = RatFun.from_int(p.table, 0)
    for mono, coeff in p.terms.items():
        residual = list(mono)
        acc = RatFun.from_int(p.table, coeff)
        for i, val in bound.items():
            e = mono[i]
            if e:
                acc = acc * val ** e
                residual[i] = 0
        acc = acc * RatFun._raw(MultiPoly(p.table, {tuple(residual): 1}),
                                MultiPoly.const(p.table, 1))
        total = total + acc
    return total


class RatFun:
    """Quotient of two MultiPoly values in canonical form: coprime, with a
    positive-leading denominator; zero is 0/1."""

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | None = None):
        if den is None:
            den = MultiPoly.const(num.table, 1)
        if den.is_zero():
            raise DivisionByZero("zero denominator")
        if num.is_zero():
            self.num = num
            self.den = MultiPoly.const(num.table, 1)
            return
        g = poly_gcd(num, den)
        if not (g.is_const() and g.const_value() == 1):
            num = exact_div(num, g)
            den = exact_div(den, g)
        if den.leading_coeff() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @classmethod
    def _raw(cls, num: MultiPoly, den: MultiPoly) -> "RatFun":
        """Trusted constructor for inputs already in canonical form."""
        self = object.__new__(cls)
        self.num = num
        self.den = den
        return self

    @classmethod
    def from_int(cls, table: SymbolTable, value: int) -> "RatFun":
        return cls._raw(MultiPoly.const(table, value), MultiPoly.const(table, 1))

    @classmethod
    def from_fraction(cls, table: SymbolTable, value: Fraction) -> "RatFun":
        return cls(MultiPoly.const(table, value.numerator),
                   MultiPoly.const(table, value.denominator))

    @classmethod
    def symbol(cls, table: SymbolTable, name: str) -> "RatFun":
        return cls._raw(MultiPoly.symbol(table, name), MultiPoly.const(table, 1))

    @property
    def table(self) -> SymbolTable:
        return self.num.table

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.num.is_const() and self.den.is_const() \
            and self.num.const_value() == self.den.const_value()

    def is_const(self) -> bool:
        return self.num.is_const() and self.den.is_const()

    def const_value(self) -> Fraction:
        return Fraction(self.num.const_value(), self.den.const_value())

    def size(self) -> int:
        return len(self.num.terms) + len(self.den.terms)

    def key(self):
        return (self.num.key(), self.den.key())

    def __eq__(self, other) -> bool:
        return (isinstance(other, RatFun) and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash(self.key())

    def __neg__(self) -> "RatFun":
        return RatFun._raw(-self.num, self.den)

    def __add__(self, other: "RatFun") -> "RatFun":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if d1.is_const() and d2.is_const():
            a, b = d1.const_value(), d2.const_value()
            if a == b == 1:
                return RatFun._raw(n1 + n2, d1)
            return RatFun(n1.mul_int(b) + n2.mul_int(a),
                          MultiPoly.const(n1.table, a * b))
        if d1 == d2:
            return RatFun(n1 + n2, d1)
        # Henrici: confine the gcd work to the common denominator part
        g1 = poly_gcd(d1, d2)
        if g1.is_const() and g1.const_value() == 1:
            return RatFun._raw(n1 * d2 + n2 * d1, d1 * d2)
        q1 = exact_div(d1, g1)
        q2 = exact_div(d2, g1)
        t = n1 * q2 + n2 * q1
        if t.is_zero():
            return RatFun.from_int(n1.table, 0)
        g2 = poly_gcd(t, g1)
        if not (g2.is_const() and g2.const_value() == 1):
            t = exact_div(t, g2)
            d2_part = exact_div(d2, g2)
        else:
            d2_part = d2
        return RatFun._raw(t, q1 * d2_part)

    def __sub__(self, other: "RatFun") -> "RatFun":
        return self + (-other)

    def __mul__(self, other: "RatFun") -> "RatFun":
        if self.is_zero() or other.is_zero():
            return RatFun.from_int(self.table, 0)
        # cross-cancel before multiplying to keep the gcd inputs small
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1 = self.num if g1.is_const() and g1.const_value() == 1 else exact_div(self.num, g1)
        d2 = other.den if g1.is_const() and g1.const_value() == 1 else exact_div(other.den, g1)
        n2 = other.num if g2.is_const() and g2.const_value() == 1 else exact_div(other.num, g2)
        d1 = self.den if g2.is_const() and g2.const_value() == 1 else exact_div(self.den, g2)
        num = n1 * n2
        den = d1 * d2
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatFun._raw(num, den)

    def __truediv__(self, other: "RatFun") -> "RatFun":
        if other.is_zero():
            raise DivisionByZero("division by zero rational function")
        return self * other.inverse()

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        num, den = self.den, self.num
        if den.leading_coeff() < 0:
            num, den = -num, -den
        return RatFun._raw(num, den)

    def __pow__(self, n: int) -> "RatFun":
        if n < 0:
            return self.inverse() ** (-n)
        return RatFun._raw(self.num ** n, self.den ** n)

    def shift(self, offsets: tuple[int, ...]) -> "RatFun":
        """Substitute x_i -> x_i + offsets[i] simultaneously for all
        variables.  Shifting is a ring automorphism that preserves the
        graded-lex leading coefficient, so canonical form is preserved."""
        if not any(offsets):
            return self
        return RatFun._raw(self.num.shift(offsets), self.den.shift(offsets))

    def specialize(self, bindings: Mapping[str, "RatFun"]) -> "RatFun":
        """Substitute parameters by rational functions and re-canonicalize."""
        table = self.table
        bound: dict[int, RatFun] = {}
        for name, val in bindings.items():
            i = table.index(name)
            if i < table.nvars:
                raise ValueError(f"{name!r} is a variable; only parameters "
                                 "may be specialized")
            bound[i] = val
        if not bound:
            return self
        den_val = _eval_poly(self.den, bound)
        if den_val.is_zero():
            raise DivisionByZero("denominator vanishes under the binding")
        return _eval_poly(self.num, bound) / den_val

    def __repr__(self):
        from .render import ratfun_str
        return f"RatFun({ratfun_str(self)})"


def ratfun_binop(a: RatFun, b: RatFun, op: str) -> RatFun:
    """Field operation by name; op is one of add, sub, mul, div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")
