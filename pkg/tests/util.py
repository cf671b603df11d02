"""Shared builders and randomized generators for the test suite."""

from __future__ import annotations

import random

from lda import (DiffPoly, DiffTerm, RatFun, Ranking, SymbolTable, MultiPoly,
                 parse_expression)


def mk_table(variables=("k", "n"), parameters=("d", "q2", "m2")) -> SymbolTable:
    return SymbolTable(variables, parameters)


def term_poly(table, items, constant=0) -> DiffPoly:
    """items: iterable of (func, exps, coeff) with integer or RatFun coeffs."""
    pairs = []
    for func, exps, coeff in items:
        if isinstance(coeff, int):
            coeff = RatFun.from_int(table, coeff)
        pairs.append((DiffTerm(func, tuple(exps)), coeff))
    const = RatFun.from_int(table, constant) if isinstance(constant, int) else constant
    return DiffPoly.from_terms(table, pairs, const)


def random_multipoly(rng: random.Random, table: SymbolTable, max_terms=3,
                     max_deg=2, coeff_bound=6, allow_zero=True) -> MultiPoly:
    nterms = rng.randint(0 if allow_zero else 1, max_terms)
    items = []
    for _ in range(nterms):
        mono = tuple(rng.randint(0, max_deg) if rng.random() < 0.6 else 0
                     for _ in range(table.arity))
        coeff = rng.randint(-coeff_bound, coeff_bound)
        if coeff:
            items.append((mono, coeff))
    return MultiPoly.from_terms(table, items)


def random_ratfun(rng: random.Random, table: SymbolTable, max_terms=3,
                  max_deg=2, coeff_bound=6, nonzero=False) -> RatFun:
    num = random_multipoly(rng, table, max_terms, max_deg, coeff_bound,
                           allow_zero=not nonzero)
    while nonzero and num.is_zero():
        num = random_multipoly(rng, table, max_terms, max_deg, coeff_bound,
                               allow_zero=False)
    den = random_multipoly(rng, table, max_terms=2, max_deg=1,
                           coeff_bound=4, allow_zero=False)
    while den.is_zero():
        den = random_multipoly(rng, table, max_terms=2, max_deg=1,
                               coeff_bound=4, allow_zero=False)
    return RatFun(num, den)


def random_linear_coeff(rng: random.Random, table: SymbolTable) -> RatFun:
    """Nonzero polynomial coefficient of degree at most one with small
    integer entries, like the recurrence systems this models."""
    items = [((0,) * table.arity, rng.randint(-3, 3))]
    for i in range(table.arity):
        if rng.random() < 0.4:
            mono = tuple(1 if j == i else 0 for j in range(table.arity))
            items.append((mono, rng.randint(-3, 3)))
    num = MultiPoly.from_terms(table, items)
    if num.is_zero():
        num = MultiPoly.const(table, 1)
    return RatFun(num)


def random_diffpoly(rng: random.Random, table: SymbolTable, nfuncs=2,
                    max_terms=4, max_deg=3, parametric=0.3,
                    with_constant=False) -> DiffPoly:
    items = []
    for _ in range(rng.randint(1, max_terms)):
        func = rng.randrange(nfuncs)
        exps = tuple(rng.randint(0, max_deg) for _ in range(table.nvars))
        if sum(exps) > max_deg:
            exps = tuple(e if i == 0 else 0 for i, e in enumerate(exps))
        if rng.random() < parametric:
            coeff = random_linear_coeff(rng, table)
        else:
            coeff = RatFun.from_int(table, rng.choice(
                [c for c in range(-5, 6) if c]))
        items.append((DiffTerm(func, exps), coeff))
    constant = RatFun.from_int(
        table, rng.randint(-3, 3)) if with_constant else None
    return DiffPoly.from_terms(table, items, constant)


def random_system(rng: random.Random):
    """A small random difference system within the acceptance-suite bounds:
    up to 3 variables, 2 functions, 4 equations, shift degree 3."""
    nvars = rng.randint(1, 3)
    nfuncs = rng.randint(1, 2)
    npars = rng.randint(0, 2)
    table = SymbolTable(tuple(f"x{i}" for i in range(nvars)),
                        tuple(f"c{i}" for i in range(npars)))
    parametric = 0.3 if npars else 0.0
    eqs = []
    for _ in range(rng.randint(1, 4)):
        p = random_diffpoly(rng, table, nfuncs=nfuncs, max_terms=4, max_deg=3,
                            parametric=parametric)
        if not p.is_zero():
            eqs.append(p)
    if not eqs:
        eqs.append(random_diffpoly(rng, table, nfuncs=nfuncs, max_terms=2,
                                   max_deg=2, parametric=0.0))
    kind = rng.choice(["orderly", "elimination"])
    fprio = list(range(nfuncs))
    rng.shuffle(fprio)
    vprio = list(range(nvars))
    rng.shuffle(vprio)
    ranking = Ranking(kind, tuple(fprio), tuple(vprio))
    return table, eqs, ranking, nfuncs


# canonical section-4 fixtures --------------------------------------------

EQ1_TEXT = ("(d-k-2*n)*f(k+1,n+1) - k*f(k+2,n) + k*(q2-m2)*f(k+2,n+1)"
            " - 2*m2*n*f(k+1,n+2)")
EQ2_TEXT = ("(k-n)*f(k+1,n+1) + k*(q2-m2)*f(k+2,n+1) - k*f(k+2,n)"
            " + n*f(k,n+2) - n*(q2+m2)*f(k+1,n+2)")

PINNED_MASTER_COEFF = ("-(d-2-2*k-2*n)*(d-4-2*k-2*n)*(d-2-k-n)*(d-3-k-n)"
                       "*(d-n-2*k)/(q2^3*(k+1)*(d-2*k-4)*k*(d-2*k-2)*n)")

DERIVED_21_COEFF = "-(d-2*k-n)*(d-2*n-2)/(k*q2*(d-2*k-2))"


def loop_system(massless=False):
    table = mk_table()
    fns = ["f"]
    eq1 = parse_expression(EQ1_TEXT, table, fns)
    eq2 = parse_expression(EQ2_TEXT, table, fns)
    if massless:
        bind = {"m2": RatFun.from_int(table, 0)}
        eq1, eq2 = eq1.specialize(bind), eq2.specialize(bind)
    return table, fns, [eq1, eq2], Ranking.orderly(1, 2)


# heat-equation fixtures ----------------------------------------------------

HEAT_E1 = ("a*t/2*(ux(j,k)+ux(j+1,k)-ux(j,k+2)-ux(j+1,k+2))"
           "-2*h*(u(j+1,k+1)-u(j,k+1))")
HEAT_E2 = "h/2*(ux(j,k+1)+ux(j,k)) - (u(j,k+1)-u(j,k))"
HEAT_E2_MISTYPED = "h/2*(ux(j,k+1)+u(j,k))-u(j,k+1)+u(j,k)"
CRANK_NICOLSON = ("a*t*(u(j,k) - 2*u(j,k+1) + u(j,k+2) + u(j+1,k)"
                  " - 2*u(j+1,k+1) + u(j+1,k+2))"
                  " + 2*h^2*(u(j+1,k+1) - u(j,k+1))")
MAPLE_14_TERMS = ("-2*a*t*u(j,k+1)+h*a*t*u(j,k)+2*a*t*u(j,k)+2*a*t*u(j,k+3)"
                  "-h*a*t*u(j,k+2)-2*a*t*u(j,k+2)+2*a*t*u(j+1,k+3)"
                  "-h*a*t*u(j+1,k+2)-2*a*t*u(j+1,k+2)+4*h^2*u(j+1,k+2)"
                  "-4*h^2*u(j,k+2)-2*a*t*u(j+1,k+1)+h*a*t*u(j+1,k)"
                  "+2*a*t*u(j+1,k)")


def heat_table() -> SymbolTable:
    return SymbolTable(("j", "k"), ("a", "t", "h"))


def heat_system(relation_text=HEAT_E2):
    table = heat_table()
    fns = ["ux", "u"]
    e1 = parse_expression(HEAT_E1, table, fns)
    e2 = parse_expression(relation_text, table, fns)
    ranking = Ranking.elimination((0, 1), 2)
    return table, fns, [e1, e2], ranking
