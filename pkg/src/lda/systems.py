"""System and scheme description files.

Both formats are JSON.  A difference-system file declares symbols, unknown
functions, equations as expression strings, an optional ranking, boundary
patterns, and parameter specializations applied before any computation.  A
scheme file declares the grid, the flux pair, the contour extents, and the
quadrature plan.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Mapping

from .difference import DiffPoly, Ranking
from .errors import ParseError, ValidationError
from .parsing import (parse_boundary, parse_coefficient, parse_expression,
                      parse_linear_form)
from .rational import RatFun, SymbolTable
from .reduction import VanishingPattern
from .schemes import (ConservationPDE, ContourSpec, GridSpec, QuadraturePlan)

_RANKING_KINDS = ("orderly", "elimination")


@dataclass
class SystemSpec:
    """A validated difference system ready for completion."""

    table: SymbolTable
    functions: list[str]
    equations: list[DiffPoly]
    ranking: Ranking
    patterns: list[VanishingPattern] = field(default_factory=list)
    specializations: dict[str, RatFun] = field(default_factory=dict)


@dataclass
class SchemeSpec:
    """A validated discretization problem."""

    table: SymbolTable
    pde: ConservationPDE
    grid: GridSpec
    contour: ContourSpec
    plan: QuadraturePlan
    unknown: str
    derivative_names: dict[tuple[int, int], str]


def _require(data: Mapping, key: str, kind, path: str, default=None,
             required: bool = True):
    if key not in data:
        if required:
            raise ValidationError(f"{path}{key}: missing required field")
        return default
    value = data[key]
    if kind is not None and not isinstance(value, kind):
        raise ValidationError(
            f"{path}{key}: expected {getattr(kind, '__name__', kind)}, "
            f"got {type(value).__name__}")
    return value


def _name_list(data: Mapping, key: str, path: str, required: bool = True,
               nonempty: bool = False) -> list[str]:
    raw = _require(data, key, list, path, default=[], required=required)
    if nonempty and not raw:
        raise ValidationError(f"{path}{key}: must not be empty")
    out = []
    for i, item in enumerate(raw):
        if not isinstance(item, str):
            raise ValidationError(f"{path}{key}[{i}]: expected a string")
        out.append(item)
    return out


def _load_json(source) -> Any:
    if isinstance(source, Mapping):
        return source
    text = Path(source).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"not valid JSON: {exc}") from exc


def _build_ranking(raw, table: SymbolTable, functions: list[str],
                   path: str) -> Ranking:
    if raw is None:
        raw = {}
    if not isinstance(raw, Mapping):
        raise ValidationError(f"{path}: expected an object")
    kind = _require(raw, "type", str, path + ".", default="orderly",
                    required=False)
    if kind not in _RANKING_KINDS:
        raise ValidationError(
            f"{path}.type: must be one of {', '.join(_RANKING_KINDS)}")
    vorder = _name_list(raw, "variable_order", path + ".", required=False)
    forder = _name_list(raw, "function_order", path + ".", required=False)
    if vorder:
        if sorted(vorder) != sorted(table.variables):
            raise ValidationError(
                f"{path}.variable_order: must be a permutation of the "
                "declared variables")
        vpos = tuple(table.variables.index(v) for v in vorder)
    else:
        vpos = tuple(range(table.nvars))
    if forder:
        if sorted(forder) != sorted(functions):
            raise ValidationError(
                f"{path}.function_order: must be a permutation of the "
                "declared functions")
        fprio = tuple(functions.index(f) for f in forder)
    else:
        fprio = tuple(range(len(functions)))
    return Ranking(kind, fprio, vpos)


def load_system(source) -> SystemSpec:
    """Load and validate a system file (path or already-parsed mapping);
    specializations are applied to the equations before anything else
    happens."""
    data = _load_json(source)
    if not isinstance(data, Mapping):
        raise ValidationError("top level: expected an object")
    variables = _name_list(data, "variables", "", nonempty=True)
    parameters = _name_list(data, "parameters", "", required=False)
    functions = _name_list(data, "functions", "", nonempty=True)
    try:
        table = SymbolTable(variables, parameters)
    except ValueError as exc:
        raise ValidationError(f"variables/parameters: {exc}") from exc
    for i, f in enumerate(functions):
        if f in table:
            raise ValidationError(
                f"functions[{i}]: name {f!r} collides with a symbol")
    eq_raw = _require(data, "equations", list, "")
    if not eq_raw:
        raise ValidationError("equations: must not be empty")

    specializations: dict[str, RatFun] = {}
    spec_raw = _require(data, "specialize", dict, "", default={}, required=False)
    for name, value in spec_raw.items():
        if name not in table or table.is_variable(name):
            raise ValidationError(
                f"specialize.{name}: not a declared parameter")
        try:
            if isinstance(value, int):
                specializations[name] = RatFun.from_int(table, value)
            elif isinstance(value, str):
                specializations[name] = parse_coefficient(value, table)
            else:
                raise ValidationError(
                    f"specialize.{name}: expected a string or an integer")
        except ParseError as exc:
            raise ValidationError(f"specialize.{name}: {exc}") from exc

    equations = []
    for i, text in enumerate(eq_raw):
        if not isinstance(text, str):
            raise ValidationError(f"equations[{i}]: expected a string")
        try:
            poly = parse_expression(text, table, functions)
        except ParseError as exc:
            raise ValidationError(f"equations[{i}]: {exc}") from exc
        if specializations:
            poly = poly.specialize(specializations)
        equations.append(poly)

    patterns = []
    for i, text in enumerate(_name_list(data, "boundary", "", required=False)):
        try:
            patterns.append(parse_boundary(text, table, functions))
        except ParseError as exc:
            raise ValidationError(f"boundary[{i}]: {exc}") from exc

    ranking = _build_ranking(data.get("ranking"), table, functions, "ranking")
    return SystemSpec(table=table, functions=functions, equations=equations,
                      ranking=ranking, patterns=patterns,
                      specializations=specializations)


def load_scheme(source) -> SchemeSpec:
    """Load and validate a scheme description file."""
    data = _load_json(source)
    if not isinstance(data, Mapping):
        raise ValidationError("top level: expected an object")
    indices = _name_list(data, "indices", "", nonempty=True)
    steps = _name_list(data, "steps", "", nonempty=True)
    if len(indices) != 2 or len(steps) != 2:
        raise ValidationError("indices/steps: exactly two directions required")
    parameters = _name_list(data, "parameters", "", required=False)
    unknown = _require(data, "unknown", str, "", default="u", required=False)
    try:
        table = SymbolTable(indices, tuple(dict.fromkeys(steps + parameters)))
    except ValueError as exc:
        raise ValidationError(f"indices/steps/parameters: {exc}") from exc

    derivs_raw = _require(data, "derivatives", dict, "", default={},
                          required=False)
    names: dict[tuple[int, int], str] = {(0, 0): unknown}
    for name, orders in derivs_raw.items():
        if (not isinstance(orders, list) or len(orders) != 2
                or not all(isinstance(o, int) and o >= 0 for o in orders)):
            raise ValidationError(
                f"derivatives.{name}: expected two nonnegative orders")
        if tuple(orders) == (0, 0):
            raise ValidationError(
                f"derivatives.{name}: (0, 0) is the unknown itself")
        names[(orders[0], orders[1])] = name

    flux_names = list(names.values())
    fluxes = {}
    for key in ("V", "W"):
        text = _require(data, key, str, "")
        try:
            form = parse_linear_form(text, table, flux_names)
        except ParseError as exc:
            raise ValidationError(f"{key}: {exc}") from exc
        by_orders = {}
        rev = {v: k for k, v in names.items()}
        for fname, coeff in form.items():
            by_orders[rev[fname]] = coeff
        fluxes[key] = by_orders

    contour_raw = _require(data, "contour", list, "", default=[2, 2],
                           required=False)
    if len(contour_raw) != 2 or not all(isinstance(s, int) and s >= 1
                                        for s in contour_raw):
        raise ValidationError("contour: expected two positive cell counts")
    plan_raw = _require(data, "plan", dict, "", default={}, required=False)
    try:
        plan = QuadraturePlan(
            contour_x=plan_raw.get("contour_x", "midpoint"),
            contour_y=plan_raw.get("contour_y", "midpoint"),
            relation=plan_raw.get("relation", "midpoint"))
    except ValueError as exc:
        raise ValidationError(f"plan: {exc}") from exc

    pde = ConservationPDE(table=table, v_flux=fluxes["V"], w_flux=fluxes["W"])
    return SchemeSpec(table=table, pde=pde,
                      grid=GridSpec(indices=(indices[0], indices[1]),
                                    steps=(steps[0], steps[1])),
                      contour=ContourSpec((contour_raw[0], contour_raw[1])),
                      plan=plan, unknown=unknown, derivative_names=names)
