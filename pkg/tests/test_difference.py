"""Difference terms and polynomials: rankings, leading data, the shift
action, and linear combination."""

import random

import pytest

from lda import (DiffPoly, DiffTerm, NoLeadingTerm, RatFun, Ranking,
                 compare_terms, linear_combine, parse_expression)

from util import loop_system, mk_table, random_diffpoly, term_poly


class TestRankings:
    def test_orderly_lex_tiebreak(self):
        r = Ranking.orderly(1, 2)
        u = DiffTerm(0, (1, 1))
        v = DiffTerm(0, (0, 2))
        assert compare_terms(u, v, r) == 1

    def test_elimination_function_dominates(self):
        # function 0 (first priority) sits above function 1 regardless of degree
        r = Ranking.elimination((0, 1), 2)
        heavy = DiffTerm(0, (0, 0))
        light = DiffTerm(1, (5, 5))
        assert compare_terms(heavy, light, r) == 1

    def test_reflexive(self):
        r = Ranking.orderly(2, 2)
        u = DiffTerm(1, (2, 3))
        assert compare_terms(u, u, r) == 0

    def test_axioms_random(self):
        rng = random.Random(31)
        for _ in range(200):
            nvars = rng.randint(1, 3)
            kind = rng.choice(["orderly", "elimination"])
            fprio = [0, 1]
            rng.shuffle(fprio)
            vprio = list(range(nvars))
            rng.shuffle(vprio)
            r = Ranking(kind, tuple(fprio), tuple(vprio))
            u = DiffTerm(rng.randrange(2),
                         tuple(rng.randint(0, 3) for _ in range(nvars)))
            v = DiffTerm(rng.randrange(2),
                         tuple(rng.randint(0, 3) for _ in range(nvars)))
            for i in range(nvars):
                e = tuple(1 if j == i else 0 for j in range(nvars))
                # a shift strictly raises every term
                assert compare_terms(u.shifted(e), u, r) == 1
                # and preserves every comparison
                assert compare_terms(u, v, r) == compare_terms(
                    u.shifted(e), v.shifted(e), r)

    def test_orderly_degree_dominates(self):
        rng = random.Random(37)
        r = Ranking.orderly(2, 2)
        for _ in range(100):
            u = DiffTerm(rng.randrange(2), (rng.randint(0, 3), rng.randint(0, 3)))
            v = DiffTerm(rng.randrange(2), (rng.randint(0, 3), rng.randint(0, 3)))
            if u.total_degree() > v.total_degree():
                assert compare_terms(u, v, r) == 1

    def test_elimination_priority_dominates(self):
        rng = random.Random(41)
        r = Ranking("elimination", (1, 0), (0, 1))
        for _ in range(100):
            u = DiffTerm(1, (rng.randint(0, 3), rng.randint(0, 3)))
            v = DiffTerm(0, (rng.randint(0, 3), rng.randint(0, 3)))
            assert compare_terms(u, v, r) == 1


class TestLeadingTerm:
    def test_loop_equation_lead(self):
        table, fns, eqs, ranking = loop_system()
        lt, lc = eqs[0].leading_term(ranking)
        assert lt == DiffTerm(0, (2, 1))
        k = RatFun.symbol(table, "k")
        q2 = RatFun.symbol(table, "q2")
        m2 = RatFun.symbol(table, "m2")
        assert lc == k * (q2 - m2)

    def test_recurrence_lead(self):
        t = mk_table(("m",), ())
        p = term_poly(t, [(0, (2,), 1), (0, (1,), -1), (0, (0,), -1)])
        lt, lc = p.leading_term(Ranking.orderly(1, 1))
        assert lt.exps == (2,) and lc.is_one()

    def test_constant_only(self):
        t = mk_table(("m",), ())
        p = term_poly(t, [], constant=3)
        with pytest.raises(NoLeadingTerm):
            p.leading_term(Ranking.orderly(1, 1))


class TestShiftAction:
    def test_coefficient_shifts_along(self):
        t = mk_table(("k", "n"), ())
        k = RatFun.symbol(t, "k")
        p = term_poly(t, [(0, (2, 0), k)])
        q = p.apply_shift((1, 0))
        (term, coeff), = q.terms.items()
        assert term.exps == (3, 0)
        assert coeff == k + RatFun.from_int(t, 1)

    def test_zero_shift_identity(self):
        rng = random.Random(43)
        t = mk_table()
        for _ in range(20):
            p = random_diffpoly(rng, t)
            assert p.apply_shift((0, 0)) is p

    def test_monoid_action(self):
        rng = random.Random(47)
        t = mk_table()
        for _ in range(30):
            p = random_diffpoly(rng, t, parametric=0.5)
            assert p.apply_shift((1, 0)).apply_shift((0, 2)) == p.apply_shift((1, 2))

    def test_commutes_with_leading_term(self):
        rng = random.Random(53)
        t = mk_table()
        r = Ranking.orderly(2, 2)
        for _ in range(40):
            p = random_diffpoly(rng, t, parametric=0.5)
            beta = (rng.randint(0, 2), rng.randint(0, 2))
            lt, lc = p.leading_term(r)
            lt2, lc2 = p.apply_shift(beta).leading_term(r)
            assert lt2 == lt.shifted(beta)
            assert lc2 == lc.shift(beta)


class TestLinearCombine:
    def test_self_cancellation(self):
        rng = random.Random(59)
        t = mk_table()
        one = RatFun.from_int(t, 1)
        for _ in range(20):
            p = random_diffpoly(rng, t, with_constant=True)
            assert linear_combine(one, p, -one, p).is_zero()

    def test_term_cancellation(self):
        t = mk_table(("k", "n"), ())
        fns = ["y"]
        p1 = parse_expression("y(k+1,n) - y(k,n+1)", t, fns)
        p2 = parse_expression("y(k+1,n) - y(k,n)", t, fns)
        one = RatFun.from_int(t, 1)
        out = linear_combine(one, p1, -one, p2)
        assert out == parse_expression("y(k,n) - y(k,n+1)", t, fns)

    def test_scaling_to_monic(self):
        t = mk_table(("m",), ("k",))
        k = RatFun.symbol(t, "k")
        p = term_poly(t, [(0, (1,), 2), (0, (0,), k)])
        r = Ranking.orderly(1, 1)
        m = p.make_monic(r)
        _, lc = m.leading_term(r)
        assert lc.is_one()
        assert m.terms[DiffTerm(0, (0,))] == k / RatFun.from_int(t, 2)

    def test_already_monic(self):
        t = mk_table(("m",), ())
        p = term_poly(t, [(0, (1,), 1), (0, (0,), -1)])
        assert p.make_monic(Ranking.orderly(1, 1)) is p

    def test_loop_equation_monic(self):
        table, fns, eqs, ranking = loop_system()
        m = eqs[0].make_monic(ranking)
        _, lc = m.leading_term(ranking)
        assert lc.is_one()
        k = RatFun.symbol(table, "k")
        q2 = RatFun.symbol(table, "q2")
        m2 = RatFun.symbol(table, "m2")
        d = RatFun.symbol(table, "d")
        n = RatFun.symbol(table, "n")
        expected = (d - k - RatFun.from_int(table, 2) * n) / (k * (q2 - m2))
        assert m.terms[DiffTerm(0, (1, 1))] == expected
