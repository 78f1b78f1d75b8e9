from fractions import Fraction
from itertools import islice
from math import gcd

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import X, from_sympy, to_sympy
from galcovers import tables as ref
from galcovers.catalog import CASE_IDS, CATALOG
from galcovers.cover import build_curve
from galcovers.moebius import ProjPoint, orbit
from galcovers.numtheory import is_nth_power
from galcovers.poly import Polynomial, RatFunction
from galcovers.verify import special_minpoly_formula
from galcovers.selmer import (ConditionError, SelmerFunction, admissible_ys, base_congruence, case_conditions,
                              check_selmer_necessary, lemma_congruence, minimal_polynomial, norm_of_function,
                              pairwise_gcd_bound, recipe_functions, selmer_functions, verify_function_relation)

N_VALUES = {cid: [n for n in (5, 7) if case_conditions(cid).n_ok(n)] for cid in CASE_IDS}


@pytest.mark.parametrize("cid,want", [("C2", (2, [1])), ("C3", (2, [1])), ("C4", (6, [5]))])
def test_base_congruence_examples(cid, want):
    assert base_congruence(cid) == want


@pytest.mark.parametrize("cid", CASE_IDS)
def test_base_congruence_matches_brute_force(cid):
    m, res = base_congruence(cid)
    cf = build_curve(cid)
    for t in range(m):
        special = (cf.A + cf.B * t) * Fraction(1, m)
        assert special.is_integral() == (t in res)


@pytest.mark.parametrize("cid", CASE_IDS)
def test_table_implies_integrality(cid):
    m, res = base_congruence(cid)
    cf = build_curve(cid)
    for n in N_VALUES[cid]:
        for y in islice(admissible_ys(cid, n), 20):
            assert pow(y, n, m) in res
            assert cf.specialize(y**n).is_integral()


def test_lemma_congruence_sign_conflict_recorded():
    # the closed form gives 1 for C4 where the operational residue is 5
    assert lemma_congruence("C4") == 1
    assert base_congruence("C4") == (6, [5])
    assert lemma_congruence("C6") == (-37) % 120


def test_case_conditions_examples():
    d4 = case_conditions("D4")
    assert d4.n_coprime_to == 6 and d4.modulus == 144
    assert d4.y_residue(7) == 49 and d4.y_residue(5) == 97
    assert set(d4.coprime_set) == {5, 7}
    d6 = case_conditions("D6")
    assert d6.n_coprime_to == 6 and d6.modulus == 388800 and d6.power_residue == 117649
    assert set(d6.coprime_set) == {7, 11, 13}
    c2 = case_conditions("C2")
    assert c2.n_ok(4) and c2.n_ok(6)
    assert c2.admissible(7, 5) and not c2.admissible(9, 5) and not c2.admissible(8, 5)


@pytest.mark.parametrize("cid", CASE_IDS)
def test_condition_invariants(cid):
    cond = case_conditions(cid)
    for p in cond.coprime_set:
        assert sympy.isprime(p) and cond.modulus % p
    for n in N_VALUES[cid]:
        assert gcd(cond.t0(n), cond.modulus) == 1
        for r in cond.residues(n):
            assert gcd(r, cond.modulus) == 1


def test_d6_residues():
    cond = case_conditions("D6")
    for n in (5, 7, 11, 13):
        res = cond.residues(n)
        assert res
        assert all(pow(r, n, 388800) == 117649 for r in res)
        assert cond.y_residue(n) in res
    ys = list(islice(admissible_ys("D6", 7), 5))
    assert all(pow(y, 7, 388800) == 117649 for y in ys)


def test_condition_errors():
    with pytest.raises(ConditionError) as e:
        check_selmer_necessary("C4", 6, 3)
    assert "(ii)" in e.value.failed
    with pytest.raises(ConditionError):
        check_selmer_necessary("C6", 397, 3)
    with pytest.raises(ConditionError):
        list(admissible_ys("D4", 9))
    with pytest.raises(KeyError):
        case_conditions("C5")


def test_admissible_ys_ordered_and_filtered():
    ys = list(admissible_ys("C2", 5, stop=40))
    assert ys == [1, 5, 7, 11, 13, 17, 19, 23, 25, 29, 31, 35, 37]
    assert list(admissible_ys("C2", 5, start=36, stop=40)) == [37]


def test_pairwise_gcd_examples():
    assert pairwise_gcd_bound([2, Fraction(1, 2)]) == (3, {3})
    _, primes = pairwise_gcd_bound([2, 3, Fraction(-1, 2), Fraction(-1, 3)])
    assert primes == {2, 5, 7}
    assert pairwise_gcd_bound([5]) == (1, set())
    with pytest.raises(ValueError):
        pairwise_gcd_bound([2, 2])


@pytest.mark.parametrize("cid", CASE_IDS)
def test_pairwise_support_gives_coprime_set(cid):
    case = CATALOG[cid]
    _, primes = pairwise_gcd_bound([p.value() for p in orbit(case.group, case.a)])
    m = case_conditions(cid).modulus
    assert {p for p in primes if m % p} == set(case_conditions(cid).coprime_set)


def test_selmer_function_validation():
    with pytest.raises(ValueError):
        SelmerFunction(2, 4)
    with pytest.raises(ValueError):
        SelmerFunction(1, 1, eps=2)
    assert str(SelmerFunction(3, 1, 1, -1)) == "(3x-1)/(x+1)"
    assert str(SelmerFunction(special=True, scale=3)) == "(x+1)^2/3"


def test_selmer_lists():
    assert [str(f) for f in selmer_functions("C2")] == ["x", "x-2"]
    assert [str(f) for f in selmer_functions("C3")] == ["x", "x+1", "x-1", "x+2"]
    d6 = selmer_functions("D6")
    assert len(d6) == 16 and str(d6[-1]) == "(x+1)^2/3"
    c4 = [str(f) for f in selmer_functions("C4")]
    assert sorted(c4) == sorted(["x", "(x-1)/(x+1)", "(x+3)/(x+1)", "x-2", "2x+1", "(x+1)^2/2"])


@pytest.mark.parametrize("cid", CASE_IDS)
def test_selmer_list_length(cid):
    assert len(selmer_functions(cid)) == CATALOG[cid].s == ref.PICARD_RANK[cid]
    for f in selmer_functions(cid):
        if f.eps:
            assert (f.alpha * f.pole - f.beta) % CATALOG[cid].unit_scale == 0


@pytest.mark.parametrize("cid,eps_sum", [("C2", 0), ("C3", 0), ("C4", 2), ("C6", 3), ("D2", 2), ("D3", 0),
                                         ("D4", 4), ("D6", 6)])
def test_function_relation(cid, eps_sum):
    rep = verify_function_relation(cid)
    assert rep.ok
    assert rep.eps_sum == eps_sum
    assert len(rep.dropped) == 1


def test_function_relation_with_sympy():
    # prod psi_i = -Y prod phi_j on A + Y B = 0, for C4
    units, psis = recipe_functions("C4")
    cf = build_curve("C4")
    Y = -to_sympy(cf.A) / to_sympy(cf.B)
    lhs = sympy.Integer(1)
    for f in psis:
        r = f.to_ratfunc()
        lhs *= to_sympy(r.num) / to_sympy(r.den)
    rhs = -Y
    for f in units:
        r = f.to_ratfunc()
        rhs *= (to_sympy(r.num) / to_sympy(r.den)) ** cf.omega
    assert sympy.simplify(lhs - rhs) == 0


def test_norm_examples():
    P = Polynomial([1, 8401, 1])
    assert norm_of_function(P, SelmerFunction(1, 2)) == 7**5
    assert norm_of_function(P, SelmerFunction(1, 0)) == 1
    Q = Polynomial.from_roots([3, 4, 9])
    # prod (x_k - c) = (-1)^deg P(c)
    assert norm_of_function(Q, SelmerFunction(1, 5)) == -Q(5) == 8
    assert norm_of_function(P, SelmerFunction(1, 5)) == P(5)
    with pytest.raises(ZeroDivisionError):
        norm_of_function(Polynomial([1, 2, 1]), SelmerFunction(1, 0, 1, -1))
    with pytest.raises(ValueError):
        norm_of_function(Polynomial([1, 2]), SelmerFunction())


def test_norm_against_sympy_roots():
    P = build_curve("C3").specialize(5**5)
    P = Polynomial(int(c) for c in P.coeffs)
    f = SelmerFunction(1, -2)
    want = sympy.resultant(to_sympy(P), X + 2, X)
    assert norm_of_function(P, f) == want


monic = st.lists(st.integers(-9, 9), min_size=2, max_size=5).map(lambda c: Polynomial(c + [1]))
lin = st.tuples(st.integers(-7, 7), st.integers(-7, 7)).filter(lambda t: t != (0, 0))


@given(monic, lin, lin)
def test_norm_multiplicative(P, a, b):
    f = RatFunction(Polynomial([a[1], a[0]]))
    g = RatFunction(Polynomial([b[1], b[0]]), Polynomial([1, 1]))
    if P(-1) == 0:
        return
    assert norm_of_function(P, f * g) == Fraction(norm_of_function(P, f)) * norm_of_function(P, g)


def test_selmer_necessary_examples():
    rep = check_selmer_necessary("C2", 7, 5)
    assert rep.ok
    assert sorted(v for _, v, _ in rep.norms) == [1, 7**5]
    assert check_selmer_necessary("C4", 17, 1).ok


@pytest.mark.parametrize("cid", CASE_IDS)
def test_selmer_norm_property(cid):
    for n in N_VALUES[cid]:
        for y in islice(admissible_ys(cid, n, start=2), 20):
            rep = check_selmer_necessary(cid, y, n)
            for name, v, flag in rep.norms:
                assert flag, (cid, y, n, name, v)
                assert is_nth_power(v, n)
            if rep.special_minpoly is not None:
                assert rep.special_minpoly.is_integral and rep.special_minpoly.constant_is_unit


def test_minpoly_trivial():
    P = Polynomial([1, -3, 0, 1])
    assert minimal_polynomial(P, RatFunction(Polynomial([0, 1]))).poly == P


@given(monic, lin)
def test_minpoly_matches_sympy(P, a):
    g = RatFunction(Polynomial([a[1], a[0]]))
    cp = minimal_polynomial(P, g).poly
    t = sympy.Symbol("t")
    # charpoly of a*x + b: resultant in x, normalized monic
    want = sympy.resultant(to_sympy(P), t - (a[0] * X + a[1]), X)
    want = sympy.Poly(want, t).monic().as_expr()
    assert sympy.expand(to_sympy(cp, t) - want) == 0


def test_c4_special_minpoly_corrected():
    # y = 17, n = 1 gives q = 1; the true constant-free coefficient is -20
    P = build_curve("C4").specialize(17)
    cp = minimal_polynomial(P, SelmerFunction(special=True, scale=2))
    assert cp.poly == Polynomial([1, -20, 34, -12, 1])
    assert cp.poly == special_minpoly_formula("C4", 1, corrected=True)
    # the printed formula disagrees only in the T coefficient
    assert special_minpoly_formula("C4", 1) == Polynomial([1, -16, 34, -12, 1])


def test_c4_special_minpoly_sympy_oracle():
    P = build_curve("C4").specialize(17)
    t = sympy.Symbol("t")
    want = sympy.resultant(to_sympy(P), 2 * t - (X + 1) ** 2, X)
    assert from_sympy(sympy.Poly(want, t).monic().as_expr(), t) == Polynomial([1, -20, 34, -12, 1])


def test_c6_special_minpoly():
    cond = case_conditions("C6")
    for y in islice(admissible_ys("C6", 5), 3):
        q = Fraction(y**5 - 397, 1080)
        P = build_curve("C6").specialize(y**5)
        cp = minimal_polynomial(P, SelmerFunction(special=True, scale=3)).poly
        assert cp == special_minpoly_formula("C6", q)
        assert cond.admissible(y, 5)
