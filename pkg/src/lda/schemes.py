"""Contour-integral discretization of two-variable scalar conservation-law
equations and difference-scheme generation by elimination.

The flux pair (V, W) satisfies d(V)/dv1 + d(W)/dv2 = 0; the equivalent
contour integral of (-W dv1 + V dv2) over a grid rectangle is discretized
with midpoint or trapezoid quadrature per edge direction, together with one
discretized integral relation per proper derivative chained down to the
unknown.  Eliminating the derivative unknowns through an elimination-ranking
basis leaves the difference scheme for the unknown alone.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .difference import DiffPoly, DiffTerm, Ranking
from .errors import ParityError
from .janet import janet_basis, reduced_groebner_basis
from .rational import RatFun, SymbolTable

Orders = tuple[int, int]

MIDPOINT = "midpoint"
TRAPEZOID = "trapezoid"
_RULES = (MIDPOINT, TRAPEZOID)


@dataclass(frozen=True)
class ConservationPDE:
    """Fluxes as linear forms: derivative orders (d/dv1, d/dv2) mapped to
    rational-function coefficients over the grid table."""

    table: SymbolTable
    v_flux: Mapping[Orders, RatFun]
    w_flux: Mapping[Orders, RatFun]

    def derivatives(self) -> set[Orders]:
        return {d for d in (*self.v_flux, *self.w_flux)}


@dataclass(frozen=True)
class GridSpec:
    """Uniform orthogonal grid: index variable names and mesh-step parameter
    names, one pair per direction."""

    indices: tuple[str, str]
    steps: tuple[str, str]


@dataclass(frozen=True)
class ContourSpec:
    """Rectangular integration contour extents in grid cells."""

    extents: tuple[int, int]

    def __post_init__(self):
        if any(s < 1 for s in self.extents):
            raise ValueError("contour extents must be at least one cell")


@dataclass(frozen=True)
class QuadraturePlan:
    """Rules for the two contour edge directions and for the integral
    relations."""

    contour_x: str = MIDPOINT
    contour_y: str = MIDPOINT
    relation: str = MIDPOINT

    def __post_init__(self):
        for r in (self.contour_x, self.contour_y, self.relation):
            if r not in _RULES:
                raise ValueError(f"unknown quadrature rule {r!r}")


@dataclass(frozen=True)
class IntegralRelation:
    """Exact relation: the integral of deriv along the axis equals the
    difference of lower at the endpoints."""

    axis: int
    deriv: Orders
    lower: Orders


@dataclass
class DiscreteSystem:
    """Discretized equations over grid unknowns, one function per derivative."""

    table: SymbolTable
    function_names: list[str]
    orders: dict[str, Orders]
    equations: list[DiffPoly] = field(default_factory=list)

    def function_index(self, name: str) -> int:
        return self.function_names.index(name)


def derivative_closure(pde: ConservationPDE) -> list[Orders]:
    """Every proper derivative reachable by chaining the flux derivatives
    down to the unknown, sorted ascending."""
    seen: set[Orders] = set()
    work = [d for d in pde.derivatives() if d != (0, 0)]
    while work:
        d = work.pop()
        if d in seen or d == (0, 0):
            continue
        seen.add(d)
        a, b = d
        lower = (a, b - 1) if b >= 1 else (a - 1, b)
        if lower != (0, 0):
            work.append(lower)
    return sorted(seen)


def build_integral_relations(pde: ConservationPDE,
                             contour: ContourSpec | None = None
                             ) -> list[IntegralRelation]:
    """One relation per proper derivative, stepping down along the second
    direction when possible, else along the first."""
    out = []
    for a, b in derivative_closure(pde):
        if b >= 1:
            out.append(IntegralRelation(axis=1, deriv=(a, b), lower=(a, b - 1)))
        else:
            out.append(IntegralRelation(axis=0, deriv=(a, b), lower=(a - 1, b)))
    return out


def _quad_points(rule: str, extent: int, axis_name: str) -> list[tuple[int, int]]:
    """Quadrature as (offset, numerator-weight) pairs; weights are halves
    scaled by two to stay integral, so the caller divides by two."""
    if rule == MIDPOINT:
        if extent % 2:
            raise ParityError(
                f"midpoint rule needs an even number of cells along "
                f"{axis_name}, got {extent}")
        return [(2 * i + 1, 4) for i in range(extent // 2)]
    # composite trapezoid: endpoint halves
    return [(i, 1 if i in (0, extent) else 2) for i in range(extent + 1)]


def _deriv_name(orders: Orders, unknown: str) -> str:
    a, b = orders
    if orders == (0, 0):
        return unknown
    return unknown + "x" * a + "y" * b


def discretize(pde: ConservationPDE, grid: GridSpec, contour: ContourSpec,
               plan: QuadraturePlan,
               names: Mapping[Orders, str] | None = None,
               unknown: str = "u") -> DiscreteSystem:
    """Contour equation plus one discretized equation per integral relation.

    Every equation is defined up to an overall nonzero constant; the emitted
    scaling keeps integer weights (halves are cleared by a factor of two).
    """
    table = pde.table
    derivs = derivative_closure(pde)
    all_orders: list[Orders] = [(0, 0)] + derivs
    if names is None:
        names = {}
    fnames = [names.get(d, _deriv_name(d, unknown)) for d in all_orders]
    index_of = {d: i for i, d in enumerate(all_orders)}
    system = DiscreteSystem(table=table, function_names=fnames,
                            orders={fnames[i]: d for i, d in enumerate(all_orders)})

    s1, s2 = contour.extents
    h1 = RatFun.symbol(table, grid.steps[0])
    h2 = RatFun.symbol(table, grid.steps[1])
    two = RatFun.from_int(table, 2)

    def flux_terms(flux: Mapping[Orders, RatFun], offset: tuple[int, int],
                   weight: RatFun) -> list[tuple[DiffTerm, RatFun]]:
        out = []
        for d, coeff in flux.items():
            c = coeff.shift(offset) * weight
            if not c.is_zero():
                out.append((DiffTerm(index_of[d], offset), c))
        return out

    # contour equation: quadrature of [W(q, s2) - W(q, 0)] along direction 1
    # plus [V(s1, q) - V(0, q)] along direction 2, counterclockwise
    items: list[tuple[DiffTerm, RatFun]] = []
    for off, wnum in _quad_points(plan.contour_x, s1, grid.indices[0]):
        w = h1 * RatFun.from_int(table, wnum) / two
        items += flux_terms(pde.w_flux, (off, s2), w)
        items += flux_terms(pde.w_flux, (off, 0), -w)
    for off, wnum in _quad_points(plan.contour_y, s2, grid.indices[1]):
        w = h2 * RatFun.from_int(table, wnum) / two
        items += flux_terms(pde.v_flux, (s1, off), w)
        items += flux_terms(pde.v_flux, (0, off), -w)
    contour_eq = DiffPoly.from_terms(table, items)
    if not contour_eq.is_zero():
        system.equations.append(contour_eq)

    for rel in build_integral_relations(pde):
        step = h1 if rel.axis == 0 else h2
        e_ax = (1, 0) if rel.axis == 0 else (0, 1)
        d_idx = index_of[rel.deriv]
        l_idx = index_of[rel.lower]
        items = []
        if plan.relation == TRAPEZOID:
            half = step / two
            items.append((DiffTerm(d_idx, (0, 0)), half))
            items.append((DiffTerm(d_idx, e_ax), half))
            items.append((DiffTerm(l_idx, e_ax), RatFun.from_int(table, -1)))
            items.append((DiffTerm(l_idx, (0, 0)), RatFun.from_int(table, 1)))
        else:
            two_e = tuple(2 * x for x in e_ax)
            items.append((DiffTerm(d_idx, e_ax), step * two))
            items.append((DiffTerm(l_idx, two_e), RatFun.from_int(table, -1)))
            items.append((DiffTerm(l_idx, (0, 0)), RatFun.from_int(table, 1)))
        eq = DiffPoly.from_terms(table, items)
        if not eq.is_zero():
            system.equations.append(eq)
    return system


def elimination_ranking(system: DiscreteSystem, keep: str) -> Ranking:
    """Derivative unknowns above the kept function, heavier derivatives
    first."""
    keep_idx = system.function_index(keep)
    others = [i for i in range(len(system.function_names)) if i != keep_idx]
    others.sort(key=lambda i: (sum(system.orders[system.function_names[i]]),
                               system.orders[system.function_names[i]]),
                reverse=True)
    return Ranking("elimination", tuple(others) + (keep_idx,),
                   tuple(range(system.table.nvars)))


def generate_scheme(equations: Sequence[DiffPoly], keep: int,
                    ranking: Ranking) -> list[DiffPoly]:
    """Members of the reduced basis supported on the kept function only.

    The ranking must place every other function above the kept one, so the
    elimination is achieved by the completion itself.
    """
    prio = ranking.function_priority
    if prio[-1] != keep:
        raise ValueError("the ranking must place the kept function last")
    basis = janet_basis(equations, ranking)
    reduced = reduced_groebner_basis(basis)
    return [p for p in reduced
            if all(t.func == keep for t in p.terms)]
