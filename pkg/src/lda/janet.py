"""Completion of linear difference systems to Janet involutive form.

The division assigns to every element of a marked set the shift operators
along which its leading-term cone may be extended; completion repeatedly
reduces queued prolongations and inserts nonzero normal forms until every
nonmultiplicative prolongation reduces to zero.  The resulting basis is the
unique minimal normalized one for the given ranking, and it is in particular
a Groebner basis, from which the reduced Groebner basis is extracted by
dropping dominated leading terms and tail-reducing.

Internally the completion works fraction-free: queue and basis elements are
kept as primitive integer-coefficient polynomials and every rewriting step
cross-multiplies by the divisor's leading coefficient, stripping the common
polynomial content afterwards.  This avoids the severe intermediate swell of
monic rational arithmetic; the monic normalized form is produced once at the
end.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .difference import DiffPoly, DiffTerm, Ranking, linear_combine
from .errors import CompletionLimitExceeded, InconsistentSystem
from .rational import MultiPoly, RatFun, exact_div, poly_gcd


@dataclass(frozen=True)
class MarkedElement:
    """A monic element together with its multiplicative shift directions."""

    poly: DiffPoly
    lt: DiffTerm
    mult: frozenset[int]
    nonmult: frozenset[int]


class MarkedBasis:
    """Sequence of marked elements, sorted ascending by leading term."""

    __slots__ = ("elements", "ranking", "_by_func")

    def __init__(self, elements: Sequence[MarkedElement], ranking: Ranking):
        self.elements = tuple(sorted(elements, key=lambda e: ranking.key(e.lt)))
        self.ranking = ranking
        by_func: dict[int, list[MarkedElement]] = {}
        for e in self.elements:
            by_func.setdefault(e.lt.func, []).append(e)
        self._by_func = by_func

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def polynomials(self) -> list[DiffPoly]:
        return [e.poly for e in self.elements]

    def leading_terms(self) -> list[DiffTerm]:
        return [e.lt for e in self.elements]

    def per_function(self, func: int) -> Sequence[MarkedElement]:
        return self._by_func.get(func, ())


def janet_partition(exponents: Sequence[tuple[int, ...]],
                    variable_order: Sequence[int]) -> list[set[int]]:
    """Multiplicative variable positions for each member of one leading-term
    group.  Positions are examined in the given order; within the current
    group a position is multiplicative exactly for the members of maximal
    degree there, and the group then splits by that degree."""
    mult: list[set[int]] = [set() for _ in exponents]
    groups: list[list[int]] = [list(range(len(exponents)))]
    for pos in variable_order:
        nxt: list[list[int]] = []
        for group in groups:
            top = max(exponents[i][pos] for i in group)
            buckets: dict[int, list[int]] = {}
            for i in group:
                d = exponents[i][pos]
                if d == top:
                    mult[i].add(pos)
                buckets.setdefault(d, []).append(i)
            nxt.extend(buckets[d] for d in sorted(buckets))
        groups = nxt
    return mult


def mark_basis(polys: Iterable[DiffPoly], ranking: Ranking) -> MarkedBasis:
    """Attach the division markings to a set of polynomials with pairwise
    distinct leading terms."""
    polys = list(polys)
    nvars = polys[0].table.nvars if polys else 0
    all_positions = frozenset(range(nvars))
    lts = [p.leading_term(ranking)[0] for p in polys]
    if len(set(lts)) != len(lts):
        raise ValueError("leading terms must be pairwise distinct")
    elements: list[MarkedElement] = []
    by_func: dict[int, list[int]] = {}
    for i, t in enumerate(lts):
        by_func.setdefault(t.func, []).append(i)
    marks: dict[int, set[int]] = {}
    for indices in by_func.values():
        group_marks = janet_partition([lts[i].exps for i in indices],
                                      ranking.variable_priority)
        for i, m in zip(indices, group_marks):
            marks[i] = m
    for i, p in enumerate(polys):
        m = frozenset(marks[i])
        elements.append(MarkedElement(p, lts[i], m, all_positions - m))
    return MarkedBasis(elements, ranking)


def find_j_divisor(u: DiffTerm, basis: MarkedBasis
                   ) -> tuple[MarkedElement, tuple[int, ...]] | None:
    """The unique element whose leading-term cone contains u, with the
    connecting shift, or None."""
    for e in basis.per_function(u.func):
        beta = tuple(a - b for a, b in zip(u.exps, e.lt.exps))
        if all(b >= 0 for b in beta) and all(
                i in e.mult for i, b in enumerate(beta) if b):
            return e, beta
    return None


def _find_divisor(u: DiffTerm, basis: MarkedBasis
                  ) -> tuple[MarkedElement, tuple[int, ...]] | None:
    """Unrestricted divisor search (any shift direction allowed)."""
    for e in basis.per_function(u.func):
        beta = tuple(a - b for a, b in zip(u.exps, e.lt.exps))
        if all(b >= 0 for b in beta):
            return e, beta
    return None


def _normal_form(h: DiffPoly, basis: MarkedBasis, finder) -> DiffPoly:
    """Full field reduction: repeatedly rewrite the highest reducible term.
    The constant part is never a reduction target; termination follows from
    the ranking descending on the rewritten positions."""
    ranking = basis.ranking
    work = h
    while True:
        hit = None
        for term, coeff in work.sorted_terms(ranking):
            found = finder(term, basis)
            if found is not None:
                hit = (term, coeff, found)
                break
        if hit is None:
            return work
        _, coeff, (element, beta) = hit
        shifted = element.poly.apply_shift(beta)
        lc = shifted.terms[element.lt.shifted(beta)]
        work = work - shifted.scale(coeff / lc)


def j_normal_form(h: DiffPoly, basis: MarkedBasis) -> DiffPoly:
    """Normal form under the restricted division."""
    return _normal_form(h, basis, find_j_divisor)


def groebner_normal_form(h: DiffPoly, basis: MarkedBasis) -> DiffPoly:
    """Normal form under unrestricted reduction; agrees with j_normal_form
    whenever the basis is complete."""
    return _normal_form(h, basis, _find_divisor)


# --- fraction-free internals ----------------------------------------------

_ONE = None  # placeholder; MultiPoly.const needs a table


def _primitive(p: DiffPoly, ranking: Ranking) -> DiffPoly:
    """Scale to integer coefficients, strip the common polynomial content,
    and normalize the sign of the leading coefficient."""
    table = p.table
    one = MultiPoly.const(table, 1)
    coeffs = list(p.terms.values())
    if not p.constant.is_zero():
        coeffs.append(p.constant)
    den_lcm = one
    for c in coeffs:
        if not (c.den.is_const() and c.den.const_value() == 1):
            g = poly_gcd(den_lcm, c.den)
            den_lcm = den_lcm * exact_div(c.den, g)
    nums = {}
    for t, c in p.terms.items():
        nums[t] = c.num * exact_div(den_lcm, c.den)
    const_num = p.constant.num * exact_div(den_lcm, p.constant.den) \
        if not p.constant.is_zero() else MultiPoly.zero(table)
    content = MultiPoly.zero(table)
    for c in nums.values():
        content = poly_gcd(content, c)
        if content.is_const() and content.const_value() == 1:
            break
    if not const_num.is_zero():
        content = poly_gcd(content, const_num)
    if not (content.is_const() and content.const_value() == 1):
        nums = {t: exact_div(c, content) for t, c in nums.items()}
        if not const_num.is_zero():
            const_num = exact_div(const_num, content)
    if nums:
        lt = max(nums, key=ranking.key)
        if nums[lt].leading_coeff() < 0:
            nums = {t: -c for t, c in nums.items()}
            const_num = -const_num
    elif not const_num.is_zero() and const_num.leading_coeff() < 0:
        const_num = -const_num
    terms = {t: RatFun._raw(c, one) for t, c in nums.items()}
    return DiffPoly(table, terms, RatFun._raw(const_num, one))


def _ff_normal_form(h: DiffPoly, basis: MarkedBasis,
                    skip_self: MarkedElement | None = None) -> DiffPoly:
    """Fraction-free full reduction: the result is the normal form times a
    nonzero polynomial, kept primitive, so zero-tests and leading terms are
    exact while all coefficient arithmetic stays integral."""
    ranking = basis.ranking
    work = _primitive(h, ranking)
    while True:
        hit = None
        for term, coeff in work.sorted_terms(ranking):
            found = find_j_divisor(term, basis)
            if found is not None:
                if skip_self is not None and found[0] is skip_self \
                        and not any(found[1]):
                    continue
                hit = (term, coeff, found)
                break
        if hit is None:
            return work
        _, coeff, (element, beta) = hit
        shifted = element.poly.apply_shift(beta)
        lead = shifted.terms[element.lt.shifted(beta)]
        work = linear_combine(lead, work, -coeff, shifted)
        work = _primitive(work, ranking)


def check_janet_basis(basis: MarkedBasis) -> bool:
    """Completeness test: every nonmultiplicative prolongation of every
    element reduces to zero."""
    if not len(basis):
        return True
    ranking = basis.ranking
    nvars = basis.elements[0].poly.table.nvars
    prim = mark_basis([_primitive(e.poly, ranking) for e in basis], ranking)
    for e in prim:
        for pos in e.nonmult:
            beta = _unit_shift(pos, nvars)
            if not _ff_normal_form(e.poly.apply_shift(beta), prim).is_zero():
                return False
    return True


def _unit_shift(pos: int, nvars: int) -> tuple[int, ...]:
    return tuple(1 if i == pos else 0 for i in range(nvars))


def janet_basis(system: Iterable[DiffPoly], ranking: Ranking,
                max_steps: int = 100_000) -> MarkedBasis:
    """Complete a system to its minimal normalized involutive basis.

    Raises InconsistentSystem when a relation reduces to a nonzero constant
    and CompletionLimitExceeded past the safety cap (the completion itself
    always terminates for linear difference systems; the cap turns a bug
    into a diagnostic instead of a hang).
    """
    table = None
    queue: list[DiffPoly] = []
    for f in system:
        table = f.table
        if f.is_zero():
            continue
        if f.constant_only():
            raise InconsistentSystem("input relation is a nonzero constant")
        queue.append(_primitive(f, ranking))
    if not queue:
        raise ValueError("the system has no nonzero equation")
    nvars = table.nvars

    basis_polys: list[DiffPoly] = []
    marked = mark_basis([], ranking)
    queued: set = set()  # prolongations already enqueued, by canonical key
    steps = 0

    def requeue_prolongations():
        for e in marked:
            for pos in e.nonmult:
                key = (e.poly.key(ranking), pos)
                if key not in queued:
                    queued.add(key)
                    queue.append(e.poly.apply_shift(_unit_shift(pos, nvars)))

    while True:
        while queue:
            steps += 1
            if steps > max_steps:
                raise CompletionLimitExceeded(
                    f"completion did not finish within {max_steps} steps")
            queue.sort(key=lambda p: (ranking.key(p.leading_term(ranking)[0]),
                                      p.key(ranking)))
            p = queue.pop(0)
            h = _ff_normal_form(p, marked)
            if h.is_zero():
                continue
            if h.constant_only():
                raise InconsistentSystem("a relation reduced to a nonzero constant")
            lt_h = h.leading_term(ranking)[0]
            kept: list[DiffPoly] = []
            for g in basis_polys:
                lt_g = g.leading_term(ranking)[0]
                if lt_h.divides(lt_g) and lt_g != lt_h:
                    queue.append(g)  # displaced: its leading term is now covered
                else:
                    kept.append(g)
            basis_polys = kept + [h]
            marked = mark_basis(basis_polys, ranking)
            requeue_prolongations()
        # queued prolongations were reduced against intermediate bases; verify
        # the final markings and reprocess anything that no longer vanishes
        stragglers = []
        for e in marked:
            for pos in e.nonmult:
                pr = e.poly.apply_shift(_unit_shift(pos, nvars))
                if not _ff_normal_form(pr, marked).is_zero():
                    stragglers.append(pr)
        if not stragglers:
            break
        queue.extend(stragglers)

    # canonical finish: tail-reduce every element modulo the whole basis
    # (its own cone cannot touch its tail), then normalize to monic form
    reduced: list[DiffPoly] = []
    for e in marked:
        flat = _ff_normal_form(e.poly, marked, skip_self=e)
        reduced.append(flat.make_monic(ranking))
    return mark_basis(reduced, ranking)


def reduced_groebner_basis(basis: MarkedBasis) -> list[DiffPoly]:
    """Extract the reduced Groebner basis: keep the elements with minimal
    leading terms, then tail-reduce each modulo the others."""
    ranking = basis.ranking
    elems = list(basis.elements)
    kept: list[MarkedElement] = []
    for e in elems:
        dominated = any(o.lt != e.lt and o.lt.divides(e.lt) for o in elems)
        if not dominated:
            kept.append(e)
    sub = mark_basis([e.poly for e in kept], ranking)
    out: list[DiffPoly] = []
    for e in sub:
        others = mark_basis([o.poly for o in sub if o.lt != e.lt], ranking) \
            if len(sub) > 1 else mark_basis([], ranking)
        lt_part = DiffPoly.single(e.poly.table, e.lt, e.poly.terms[e.lt])
        tail = e.poly - lt_part
        out.append(lt_part + groebner_normal_form(tail, others))
    out.sort(key=lambda p: ranking.key(p.leading_term(ranking)[0]))
    return out
