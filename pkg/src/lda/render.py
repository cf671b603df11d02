"""Deterministic text, LaTeX, and JSON rendering.

Text and LaTeX list terms in ranking-descending order; JSON output carries
coefficients as expression strings, so parsing it back yields a value equal
to the original (round-trip identity).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .difference import DiffPoly, DiffTerm, Ranking
from .factor import Factored
from .rational import MultiPoly, RatFun, SymbolTable
from .reduction import ReductionReport


def mono_str(mono: tuple[int, ...], names: Sequence[str], latex: bool = False) -> str:
    parts = []
    for name, e in zip(names, mono):
        if e == 0:
            continue
        if e == 1:
            parts.append(name)
        elif latex:
            parts.append(f"{name}^{{{e}}}")
        else:
            parts.append(f"{name}^{e}")
    joiner = " " if latex else "*"
    return joiner.join(parts)


def poly_str(p: MultiPoly, latex: bool = False) -> str:
    if p.is_zero():
        return "0"
    names = p.table.symbols
    from .rational import _grlex
    out = []
    for mono in sorted(p.terms, key=_grlex, reverse=True):
        c = p.terms[mono]
        m = mono_str(mono, names, latex)
        if not m:
            body = str(abs(c))
        elif abs(c) == 1:
            body = m
        else:
            body = f"{abs(c)}{' ' if latex else '*'}{m}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(out)


def _needs_parens_as_denominator(p: MultiPoly) -> bool:
    if len(p.terms) != 1:
        return True
    mono, c = next(iter(p.terms.items()))
    nsyms = sum(1 for e in mono if e)
    if c != 1:
        return nsyms > 0  # bare integers are fine
    return nsyms > 1  # single symbol powers bind through '^'


def ratfun_str(r: RatFun, latex: bool = False) -> str:
    if latex:
        num = poly_str(r.num, latex=True)
        if r.den.is_const() and r.den.const_value() == 1:
            return num
        return f"\\frac{{{num}}}{{{poly_str(r.den, latex=True)}}}"
    num = poly_str(r.num)
    if r.den.is_const() and r.den.const_value() == 1:
        return num
    if len(r.num.terms) > 1:
        num = f"({num})"
    den = poly_str(r.den)
    if _needs_parens_as_denominator(r.den):
        den = f"({den})"
    return f"{num}/{den}"


def term_str(t: DiffTerm, varnames: Sequence[str], funcnames: Sequence[str],
             latex: bool = False) -> str:
    args = []
    for name, e in zip(varnames, t.exps):
        args.append(name if e == 0 else f"{name}+{e}")
    name = funcnames[t.func]
    if latex:
        return f"\\mathrm{{{name}}}({', '.join(args)})"
    return f"{name}({','.join(args)})"


def _coeff_sign_split(c: RatFun) -> tuple[int, RatFun]:
    # canonical denominators are positive-leading, so the sign sits on num
    if not c.num.is_zero() and c.num.leading_coeff() < 0:
        return -1, -c
    return 1, c


def diffpoly_str(p: DiffPoly, ranking: Ranking, funcnames: Sequence[str],
                 latex: bool = False) -> str:
    table = p.table
    varnames = table.variables
    chunks: list[tuple[int, str]] = []
    for t, c in p.sorted_terms(ranking):
        sign, mag = _coeff_sign_split(c)
        ts = term_str(t, varnames, funcnames, latex)
        if mag.is_one():
            body = ts
        elif mag.den.is_const() and mag.den.const_value() == 1 \
                and len(mag.num.terms) == 1:
            body = f"{poly_str(mag.num, latex)}{' ' if latex else '*'}{ts}"
        else:
            cs = ratfun_str(mag, latex)
            body = f"{cs}\\, {ts}" if latex else f"({cs})*{ts}"
        chunks.append((sign, body))
    if not p.constant.is_zero():
        sign, mag = _coeff_sign_split(p.constant)
        chunks.append((sign, ratfun_str(mag, latex)))
    if not chunks:
        return "0"
    out = []
    for i, (sign, body) in enumerate(chunks):
        if i == 0:
            out.append(body if sign > 0 else f"-{body}")
        else:
            out.append(f"+ {body}" if sign > 0 else f"- {body}")
    return " ".join(out)


def factored_str(f: Factored, latex: bool = False) -> str:
    def side(factors, unit_part: int) -> str:
        bits = []
        if unit_part != 1 or not factors:
            bits.append(str(unit_part))
        for poly, e in factors:
            s = poly_str(poly, latex)
            if len(poly.terms) > 1 or (e > 1 and "*" in s):
                s = f"({s})"
            if e > 1:
                s = f"{s}^{{{e}}}" if latex else f"{s}^{e}"
            bits.append(s)
        return ("*" if not latex else " ").join(bits)

    sign = "-" if f.unit < 0 else ""
    num = side(f.num_factors, abs(f.unit.numerator))
    if not f.den_factors and f.unit.denominator == 1:
        return sign + num
    den = side(f.den_factors, f.unit.denominator)
    if latex:
        return f"{sign}\\frac{{{num}}}{{{den}}}"
    if "*" in num or " " in num:
        num = f"({num})"
    return f"{sign}{num}/({den})"


def masters_str(terms: Sequence[DiffTerm], varnames: Sequence[str],
                funcnames: Sequence[str]) -> str:
    return "[" + ", ".join(term_str(t, varnames, funcnames) for t in terms) + "]"


def report_str(rep: ReductionReport, varnames: Sequence[str],
               funcnames: Sequence[str]) -> str:
    target = term_str(rep.target, varnames, funcnames)
    if not rep.combination:
        return f"{target} = 0"
    factored = dict(rep.factored) if rep.factored is not None else None
    parts = []
    for t, c in rep.combination:
        ts = term_str(t, varnames, funcnames)
        cs = factored_str(factored[t]) if factored is not None else ratfun_str(c)
        neg = cs.startswith("-")
        if neg:
            cs = cs[1:]
        body = f"({cs})*{ts}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return f"{target} = " + " ".join(parts)


# --- JSON forms -----------------------------------------------------------

def term_json(t: DiffTerm, funcnames: Sequence[str]) -> dict:
    return {"function": funcnames[t.func], "shifts": list(t.exps)}


def term_from_json(d: dict, funcnames: Sequence[str]) -> DiffTerm:
    return DiffTerm(list(funcnames).index(d["function"]), tuple(d["shifts"]))


def diffpoly_json(p: DiffPoly, ranking: Ranking,
                  funcnames: Sequence[str]) -> dict:
    terms = [dict(term_json(t, funcnames), coefficient=ratfun_str(c))
             for t, c in p.sorted_terms(ranking)]
    out = {"terms": terms}
    if not p.constant.is_zero():
        out["constant"] = ratfun_str(p.constant)
    return out


def diffpoly_from_json(d: dict, table: SymbolTable, ranking: Ranking,
                       funcnames: Sequence[str]) -> DiffPoly:
    from .parsing import parse_coefficient
    items = []
    for entry in d.get("terms", ()):
        items.append((term_from_json(entry, funcnames),
                      parse_coefficient(entry["coefficient"], table)))
    constant = parse_coefficient(d.get("constant", "0"), table)
    return DiffPoly.from_terms(table, items, constant)


def report_json(rep: ReductionReport, ranking: Ranking, varnames: Sequence[str],
                funcnames: Sequence[str]) -> dict:
    factored = dict(rep.factored) if rep.factored is not None else None
    combo = []
    for t, c in rep.combination:
        entry = dict(term_json(t, funcnames), coefficient=ratfun_str(c))
        if factored is not None:
            entry["factored"] = factored_str(factored[t])
        combo.append(entry)
    return {
        "target": term_json(rep.target, funcnames),
        "masters": [term_json(t, funcnames) for t in rep.masters],
        "combination": combo,
    }
