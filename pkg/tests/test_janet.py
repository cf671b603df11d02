"""Completion engine: division markings, normal forms, the basis algorithm,
completeness checking, and reduced basis extraction."""

import random

import pytest

from lda import (DiffPoly, DiffTerm, InconsistentSystem, RatFun, Ranking,
                 check_janet_basis, find_j_divisor, groebner_normal_form,
                 j_normal_form, janet_basis, janet_partition, linear_combine,
                 mark_basis, oracle_normal_form, parse_expression,
                 proportional, reduced_groebner_basis)
from lda.janet import MarkedBasis, MarkedElement

from util import (heat_system, loop_system, mk_table, random_diffpoly,
                  random_system, term_poly, CRANK_NICOLSON)


def fib_basis():
    t = mk_table(("m",), ())
    p = term_poly(t, [(0, (2,), 1), (0, (1,), -1), (0, (0,), -1)])
    r = Ranking.orderly(1, 1)
    return t, janet_basis([p], r), r


class TestPartition:
    def test_two_element_group(self):
        marks = janet_partition([(2, 1), (1, 2)], (0, 1))
        assert marks[0] == {0, 1}
        assert marks[1] == {1}

    def test_singleton_gets_everything(self):
        marks = janet_partition([(3, 0, 2)], (0, 1, 2))
        assert marks[0] == {0, 1, 2}

    def test_group_splitting(self):
        # same first degree puts both in one group for the second position
        marks = janet_partition([(1, 0), (1, 1)], (0, 1))
        assert marks[0] == {0}
        assert marks[1] == {0, 1}


class TestDivisor:
    def test_inside_cone(self):
        t = mk_table(("a", "b"), ())
        p = term_poly(t, [(0, (2, 1), 1)])
        basis = mark_basis([p], Ranking.orderly(1, 2))
        hit = find_j_divisor(DiffTerm(0, (3, 1)), basis)
        assert hit is not None
        element, beta = hit
        assert beta == (1, 0)

    def test_blocked_direction(self):
        # hand-marked element with only the second direction multiplicative
        t = mk_table(("a", "b"), ())
        p = term_poly(t, [(0, (1, 2), 1)])
        r = Ranking.orderly(1, 2)
        elem = MarkedElement(poly=p, lt=DiffTerm(0, (1, 2)),
                             mult=frozenset({1}), nonmult=frozenset({0}))
        basis = MarkedBasis([elem], r)
        assert find_j_divisor(DiffTerm(0, (2, 3)), basis) is None
        assert find_j_divisor(DiffTerm(0, (1, 3)), basis) is not None

    def test_uniqueness_over_random_bases(self):
        rng = random.Random(61)
        checked = 0
        for _ in range(40):
            table, eqs, ranking, nfuncs = random_system(rng)
            try:
                basis = janet_basis(eqs, ranking)
            except InconsistentSystem:
                continue
            for _ in range(20):
                u = DiffTerm(rng.randrange(nfuncs),
                             tuple(rng.randint(0, 5) for _ in range(table.nvars)))
                hits = []
                for e in basis.per_function(u.func):
                    beta = tuple(a - b for a, b in zip(u.exps, e.lt.exps))
                    if all(b >= 0 for b in beta) and all(
                            i in e.mult for i, b in enumerate(beta) if b):
                        hits.append(e)
                assert len(hits) <= 1
                checked += 1
        assert checked > 300


class TestNormalForm:
    def test_recurrence_unfolding(self):
        t, basis, r = fib_basis()
        h = term_poly(t, [(0, (4,), 1)])
        nf = j_normal_form(h, basis)
        assert nf == term_poly(t, [(0, (1,), 3), (0, (0,), 2)])

    def test_irreducible_unchanged(self):
        t, basis, r = fib_basis()
        h = term_poly(t, [(0, (1,), 5), (0, (0,), -1)], constant=2)
        assert j_normal_form(h, basis) == h

    def test_projection_and_linearity(self):
        rng = random.Random(67)
        t, basis, r = fib_basis()
        for _ in range(25):
            h1 = random_diffpoly(rng, t, nfuncs=1, max_deg=4)
            h2 = random_diffpoly(rng, t, nfuncs=1, max_deg=4)
            a = RatFun.from_int(t, rng.randint(1, 5))
            b = RatFun.from_int(t, rng.randint(-5, -1))
            nf = j_normal_form
            assert nf(nf(h1, basis), basis) == nf(h1, basis)
            combo = linear_combine(a, h1, b, h2)
            assert nf(combo, basis) == linear_combine(
                a, nf(h1, basis), b, nf(h2, basis))


class TestJanetBasis:
    def test_single_equation(self):
        t = mk_table(("a", "b"), ())
        p = term_poly(t, [(0, (1, 1), 1), (0, (0, 0), -1)])
        basis = janet_basis([p], Ranking.orderly(1, 2))
        assert len(basis) == 1
        assert basis.elements[0].mult == {0, 1}
        assert basis.elements[0].poly == p

    def test_two_relations_complete_to_pair(self):
        t = mk_table(("a", "b"), ())
        p1 = term_poly(t, [(0, (1, 0), 1), (0, (0, 1), -1)])
        p2 = term_poly(t, [(0, (1, 0), 1), (0, (0, 0), -1)])
        basis = janet_basis([p1, p2], Ranking.orderly(1, 2))
        expected = {
            term_poly(t, [(0, (1, 0), 1), (0, (0, 0), -1)]),
            term_poly(t, [(0, (0, 1), 1), (0, (0, 0), -1)]),
        }
        assert set(map(_freeze, basis.polynomials())) == set(map(_freeze, expected))
        # membership of both inputs, checked against the brute-force verifier
        r = Ranking.orderly(1, 2)
        for p in (p1, p2):
            assert j_normal_form(p, basis).is_zero()
            assert oracle_normal_form(p, [p1, p2], r, bound=2).is_zero()

    def test_inconsistent_inhomogeneous(self):
        t = mk_table(("a",), ())
        p1 = term_poly(t, [(0, (1,), 1)], constant=0)
        p2 = term_poly(t, [(0, (1,), 1)], constant=1)
        with pytest.raises(InconsistentSystem):
            janet_basis([p1, p2], Ranking.orderly(1, 1))

    def test_heat_elimination_contains_scheme(self):
        table, fns, eqs, ranking = heat_system()
        basis = janet_basis(eqs, ranking)
        assert check_janet_basis(basis)
        cn = parse_expression(CRANK_NICOLSON, table, fns)
        u_only = [e.poly for e in basis
                  if all(term.func == 1 for term in e.poly.terms)]
        assert len(u_only) == 1
        assert proportional(u_only[0], cn)


class TestCheck:
    def test_computed_bases_pass(self):
        rng = random.Random(71)
        done = 0
        while done < 15:
            table, eqs, ranking, _ = random_system(rng)
            try:
                basis = janet_basis(eqs, ranking)
            except InconsistentSystem:
                continue
            assert check_janet_basis(basis)
            done += 1

    def test_incomplete_pair_fails(self):
        t = mk_table(("a", "b"), ())
        p1 = term_poly(t, [(0, (1, 0), 1), (0, (0, 0), -1)])
        p2 = term_poly(t, [(0, (1, 1), 1), (0, (0, 0), -2)])
        basis = mark_basis([p1, p2], Ranking.orderly(1, 2))
        assert not check_janet_basis(basis)

    def test_corrupted_coefficient_fails(self):
        table, fns, eqs, ranking = loop_system()
        basis = janet_basis(eqs, ranking)
        assert check_janet_basis(basis)
        polys = basis.polynomials()
        # corrupt one tail coefficient of the first element
        victim = polys[0]
        tail_term = [t for t in victim.terms
                     if t != victim.leading_term(ranking)[0]][0]
        bumped = dict(victim.terms)
        bumped[tail_term] = bumped[tail_term] + RatFun.from_int(table, 1)
        polys[0] = DiffPoly(table, bumped, victim.constant)
        corrupted = mark_basis(polys, ranking)
        assert not check_janet_basis(corrupted)


class TestGroebnerNF:
    def test_shift_multiples_vanish(self):
        rng = random.Random(73)
        t, basis, r = fib_basis()
        g = basis.elements[0].poly
        for _ in range(10):
            beta = (rng.randint(0, 4),)
            assert groebner_normal_form(g.apply_shift(beta), basis).is_zero()

    def test_agrees_with_restricted(self):
        rng = random.Random(79)
        table, fns, eqs, ranking = loop_system()
        basis = janet_basis(eqs, ranking)
        for _ in range(10):
            h = random_diffpoly(rng, table, nfuncs=1, max_deg=4, parametric=0.2)
            assert groebner_normal_form(h, basis) == j_normal_form(h, basis)

    def test_zero(self):
        t, basis, r = fib_basis()
        assert groebner_normal_form(DiffPoly.zero(t), basis).is_zero()


class TestReducedBasis:
    def test_already_reduced(self):
        t = mk_table(("a", "b"), ())
        p1 = term_poly(t, [(0, (1, 0), 1), (0, (0, 0), -1)])
        p2 = term_poly(t, [(0, (0, 1), 1), (0, (0, 0), -1)])
        r = Ranking.orderly(1, 2)
        basis = janet_basis([p1, p2], r)
        assert set(map(_freeze, reduced_groebner_basis(basis))) \
            == set(map(_freeze, [p1, p2]))

    def test_heat_reduced_contains_scheme(self):
        table, fns, eqs, ranking = heat_system()
        basis = janet_basis(eqs, ranking)
        reduced = reduced_groebner_basis(basis)
        cn = parse_expression(CRANK_NICOLSON, table, fns)
        u_only = [p for p in reduced if all(t.func == 1 for t in p.terms)]
        assert len(u_only) == 1
        assert proportional(u_only[0], cn)

    def test_dominated_member_dropped(self):
        # a basis keeping a prolongation must lose it in the reduced form,
        # with the two generating sets equivalent both ways
        t = mk_table(("a", "b"), ())
        r = Ranking.orderly(1, 2)
        gen = term_poly(t, [(0, (0, 1), 1), (0, (0, 0), -1)])
        extra = gen.apply_shift((1, 0))
        basis = mark_basis([gen, extra], r)
        reduced = reduced_groebner_basis(basis)
        assert reduced == [gen]
        again = janet_basis([gen, extra], r)
        for p in (gen, extra):
            assert j_normal_form(p, again).is_zero()

    def test_tails_reduced(self):
        rng = random.Random(83)
        done = 0
        while done < 10:
            table, eqs, ranking, _ = random_system(rng)
            try:
                basis = janet_basis(eqs, ranking)
            except InconsistentSystem:
                continue
            reduced = reduced_groebner_basis(basis)
            for i, p in enumerate(reduced):
                others = [q for j, q in enumerate(reduced) if j != i]
                if not others:
                    continue
                sub = mark_basis(others, ranking)
                assert groebner_normal_form(p, sub) == p
            done += 1


class TestDeterminism:
    def test_permutation_invariance_sample(self):
        rng = random.Random(89)
        done = 0
        while done < 12:
            table, eqs, ranking, _ = random_system(rng)
            try:
                b1 = janet_basis(eqs, ranking)
            except InconsistentSystem:
                continue
            shuffled = list(eqs)
            rng.shuffle(shuffled)
            b2 = janet_basis(shuffled, ranking)
            assert [e.poly for e in b1.elements] == [e.poly for e in b2.elements]
            done += 1


def _freeze(p: DiffPoly):
    return (tuple(sorted(((t.func, t.exps, c.key()) for t, c in p.terms.items()))),
            p.constant.key())
