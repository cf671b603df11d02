"""Expression parsing for equations, coefficients, boundary patterns, and
flux forms.

The grammar covers integers, declared symbols, + - * / ^ with the usual
precedence, parentheses, and function applications whose i-th argument must
be the i-th variable plus a nonnegative integer shift.  Products are kept
linear in the unknown functions; coefficients use exact field arithmetic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Sequence

from .difference import DiffPoly, DiffTerm
from .errors import (ArityError, LinearityError, NegativeShiftError, ParseError,
                     UnknownSymbolError)
from .rational import RatFun, SymbolTable
from .reduction import VanishingPattern

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*/^(),=]))")


@dataclass(frozen=True)
class _Tok:
    kind: str  # int | name | op | end
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out = []
    i = 0
    while i < len(text):
        m = _TOKEN.match(text, i)
        if not m:
            stripped = text[i:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}",
                             position=len(text) - len(stripped))
        if m.group("int") is not None:
            out.append(_Tok("int", m.group("int"), m.start("int")))
        elif m.group("name") is not None:
            out.append(_Tok("name", m.group("name"), m.start("name")))
        else:
            out.append(_Tok("op", m.group("op"), m.start("op")))
        i = m.end()
    out.append(_Tok("end", "", len(text)))
    return out


class _Lin:
    """Linear combination of function terms over the field, plus a constant;
    scalar values are the special case with no terms."""

    __slots__ = ("terms", "constant")

    def __init__(self, terms: dict[DiffTerm, RatFun], constant: RatFun):
        self.terms = terms
        self.constant = constant

    @classmethod
    def scalar(cls, c: RatFun) -> "_Lin":
        return cls({}, c)

    def is_scalar(self) -> bool:
        return not self.terms

    def __add__(self, other: "_Lin") -> "_Lin":
        terms = dict(self.terms)
        for t, c in other.terms.items():
            s = terms.get(t)
            s = c if s is None else s + c
            if s.is_zero():
                terms.pop(t, None)
            else:
                terms[t] = s
        return _Lin(terms, self.constant + other.constant)

    def negate(self) -> "_Lin":
        return _Lin({t: -c for t, c in self.terms.items()}, -self.constant)

    def scale(self, c: RatFun) -> "_Lin":
        if c.is_zero():
            return _Lin({}, c)
        return _Lin({t: v * c for t, v in self.terms.items()}, self.constant * c)


class _Parser:
    """Precedence-climbing parser over the token list."""

    def __init__(self, text: str, table: SymbolTable, functions: Sequence[str],
                 boundary: bool = False):
        self.text = text
        self.table = table
        self.functions = list(functions)
        self.boundary = boundary
        self.wildcards: set[int] = set()
        self.func_index: int | None = None
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op: str):
        t = self.next()
        if t.kind != "op" or t.text != op:
            raise ParseError(f"expected {op!r}, found {t.text or 'end of input'!r}",
                             position=t.pos)

    def parse(self) -> _Lin:
        value = self.expression(0)
        t = self.peek()
        if t.kind == "op" and t.text == "=":
            self.next()
            rhs = self.expression(0)
            value = value + rhs.negate()
            t = self.peek()
        if t.kind != "end":
            raise ParseError(f"unexpected {t.text!r}", position=t.pos)
        return value

    def expression(self, min_bp: int) -> _Lin:
        value = self.prefix()
        while True:
            t = self.peek()
            if t.kind != "op" or t.text not in ("+", "-", "*", "/", "^"):
                return value
            bp = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}[t.text]
            if bp < min_bp:
                return value
            self.next()
            if t.text == "^":
                value = self.power(value, t)
                continue
            rhs = self.expression(bp + 1)
            value = self.combine(value, t, rhs)

    def power(self, base: _Lin, tok: _Tok) -> _Lin:
        t = self.next()
        neg = False
        if t.kind == "op" and t.text == "-":
            neg = True
            t = self.next()
        if t.kind != "int":
            raise ParseError("exponent must be an integer literal",
                             position=t.pos)
        n = int(t.text)
        if not base.is_scalar():
            if n == 1 and not neg:
                return base
            raise LinearityError("cannot raise a function term to a power")
        if neg:
            return _Lin.scalar(base.constant ** (-n))
        return _Lin.scalar(base.constant ** n)

    def combine(self, lhs: _Lin, tok: _Tok, rhs: _Lin) -> _Lin:
        if tok.text == "+":
            return lhs + rhs
        if tok.text == "-":
            return lhs + rhs.negate()
        if tok.text == "*":
            if lhs.is_scalar():
                return rhs.scale(lhs.constant)
            if rhs.is_scalar():
                return lhs.scale(rhs.constant)
            raise LinearityError("product of two function terms is not linear")
        # division
        if not rhs.is_scalar():
            raise LinearityError("cannot divide by a function term")
        if rhs.constant.is_zero():
            raise ParseError("division by zero", position=tok.pos)
        return lhs.scale(rhs.constant.inverse())

    def prefix(self) -> _Lin:
        t = self.next()
        if t.kind == "int":
            return _Lin.scalar(RatFun.from_int(self.table, int(t.text)))
        if t.kind == "op" and t.text == "(":
            value = self.expression(0)
            self.expect_op(")")
            return value
        if t.kind == "op" and t.text == "-":
            return self.expression(25).negate()
        if t.kind == "op" and t.text == "+":
            return self.expression(25)
        if t.kind == "name":
            nxt = self.peek()
            if nxt.kind == "op" and nxt.text == "(":
                return self.application(t)
            if t.text in self.table:
                return _Lin.scalar(RatFun.symbol(self.table, t.text))
            if t.text in self.functions:
                raise ParseError(f"function {t.text!r} needs arguments",
                                 position=t.pos)
            raise UnknownSymbolError(f"unknown symbol {t.text!r}", position=t.pos)
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", position=t.pos)

    def application(self, name: _Tok) -> _Lin:
        if name.text not in self.functions:
            raise UnknownSymbolError(f"unknown function {name.text!r}",
                                     position=name.pos)
        func = self.functions.index(name.text)
        self.expect_op("(")
        shifts: list[int | None] = []  # None marks a wildcard position
        variables = self.table.variables
        pos = 0
        while True:
            if pos >= len(variables):
                raise ArityError(
                    f"{name.text!r} takes {len(variables)} arguments",
                    position=self.peek().pos)
            shifts.append(self.argument(name.text, pos))
            t = self.next()
            if t.kind == "op" and t.text == ",":
                pos += 1
                continue
            if t.kind == "op" and t.text == ")":
                break
            raise ParseError(f"expected ',' or ')', found {t.text!r}",
                             position=t.pos)
        if len(shifts) != len(variables):
            raise ArityError(
                f"{name.text!r} takes {len(variables)} arguments, "
                f"got {len(shifts)}", position=name.pos)
        if self.func_index is None:
            self.func_index = func
        for i, s in enumerate(shifts):
            if s is None:
                self.wildcards.add(i)
        term = DiffTerm(func, tuple(0 if s is None else s for s in shifts))
        return _Lin({term: RatFun.from_int(self.table, 1)},
                    RatFun.from_int(self.table, 0))

    def argument(self, fname: str, pos: int) -> int | None:
        """One argument: the matching variable, optionally plus a shift or,
        in boundary mode, plus a wildcard identifier."""
        t = self.next()
        expected = self.table.variables[pos]
        if t.kind != "name" or t.text != expected:
            raise ArityError(
                f"argument {pos + 1} of {fname!r} must be the variable "
                f"{expected!r} plus a nonnegative shift", position=t.pos)
        nxt = self.peek()
        if nxt.kind == "op" and nxt.text in ("+", "-"):
            sign = 1 if nxt.text == "+" else -1
            self.next()
            v = self.next()
            if v.kind == "int":
                shift = sign * int(v.text)
                if shift < 0:
                    raise NegativeShiftError(
                        f"negative shift in {fname!r}; re-offset the function "
                        "arguments so every shift is nonnegative",
                        position=v.pos)
                return shift
            if v.kind == "name" and self.boundary and sign > 0 \
                    and not self.table.is_variable(v.text) \
                    and v.text not in self.functions:
                return None  # wildcard
            raise ParseError("shift must be a nonnegative integer"
                             + (" or a wildcard identifier" if self.boundary
                                else ""), position=v.pos)
        return 0


def parse_expression(text: str, table: SymbolTable,
                     functions: Sequence[str]) -> DiffPoly:
    """Parse an equation (optionally with '= rhs') into a difference
    polynomial in canonical form."""
    lin = _Parser(text, table, functions).parse()
    return DiffPoly.from_terms(table, lin.terms.items(), lin.constant)


def parse_coefficient(text: str, table: SymbolTable) -> RatFun:
    """Parse a pure coefficient expression (no function applications)."""
    lin = _Parser(text, table, []).parse()
    return lin.constant


def parse_boundary(text: str, table: SymbolTable,
                   functions: Sequence[str]) -> VanishingPattern:
    """Parse a boundary declaration like "f(k+j, n) = 0" into a pattern;
    identifiers that are not declared variables act as wildcards."""
    parser = _Parser(text, table, functions, boundary=True)
    lin = parser.parse()
    if parser.func_index is None or len(lin.terms) != 1 or not lin.constant.is_zero():
        raise ParseError("boundary must be a single function term equated to zero")
    (term, coeff), = lin.terms.items()
    if not coeff.is_one():
        raise ParseError("boundary term must have coefficient one")
    constraints = {i: e for i, e in enumerate(term.exps)
                   if i not in parser.wildcards}
    if not constraints:
        raise ParseError("boundary needs at least one constrained position")
    return VanishingPattern.make(term.func, constraints)


def parse_target(text: str, table: SymbolTable,
                 functions: Sequence[str]) -> DiffTerm:
    """Parse a single function term with unit coefficient."""
    poly = parse_expression(text, table, functions)
    if len(poly.terms) != 1 or not poly.constant.is_zero():
        raise ParseError("target must be a single function term")
    (term, coeff), = poly.terms.items()
    if not coeff.is_one():
        raise ParseError("target must have coefficient one")
    return term


def parse_linear_form(text: str, table: SymbolTable,
                      names: Sequence[str]) -> dict[str, RatFun]:
    """Parse a flux expression linear in the given bare names (no argument
    lists); returns name -> coefficient."""
    lin = _FormParser(text, table, names).parse()
    if not lin.constant.is_zero():
        raise LinearityError("flux expressions cannot carry a free constant")
    out: dict[str, RatFun] = {}
    for t, c in lin.terms.items():
        out[names[t.func]] = c
    return out


class _FormParser(_Parser):
    """Variant where unknowns are bare identifiers instead of applications."""

    def prefix(self) -> _Lin:
        t = self.peek()
        if t.kind == "name" and t.text in self.functions \
                and not (self.toks[self.i + 1].kind == "op"
                         and self.toks[self.i + 1].text == "("):
            self.next()
            term = DiffTerm(self.functions.index(t.text),
                            (0,) * self.table.nvars)
            return _Lin({term: RatFun.from_int(self.table, 1)},
                        RatFun.from_int(self.table, 0))
        return super().prefix()
