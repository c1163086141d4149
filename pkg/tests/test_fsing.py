import random

import pytest

from properties import random_poly

from charp import data
from charp.commutator import commutator, family_positions, indeterminate_matrices
from charp.dsl import parse_poly
from charp.fsing import (FAILS, HOLDS, INCONCLUSIVE, WitnessSpec, eval_product_expr, eval_qexpr,
                         fedder_ci_check, fedder_search, glassbrenner_ci_check, hsop_check,
                         linear_eliminate)
from charp.groebner import Ideal
from charp.ring import BudgetExceeded, ProductExpr, RingCtx


def T_ring(p):
    return RingCtx(p, tuple(data.W_VARS + data.Z_VARS))


def A_setup(n, p):
    ring, X, Y = indeterminate_matrices(n, p)
    C = commutator(X, Y)
    return ring, [C.entry(i, j) for i, j in family_positions(n, "trace-adjusted-cross")]


@pytest.mark.parametrize("expr,p,q,value", [
    ("p-1", 3, 3, 2), ("p^2-3", 3, 9, 6), ("q-1", 2, 4, 3), (5, 7, 7, 5), ("p^2", 2, 2, 4)])
def test_eval_qexpr(expr, p, q, value):
    assert eval_qexpr(expr, p, q) == value


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_fedder_principal(p):
    r = RingCtx(p, ("x", "y"))
    res = fedder_ci_check(Ideal(r, [r.var("x")]))
    assert res.status == HOLDS
    assert res.survivor == r.var("x") ** (p - 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_fedder_T_quotient(p):
    r = T_ring(p)
    res = fedder_ci_check([parse_poly(r, s) for s in data.T_FEDDER_QUOTIENT])
    assert res.holds
    assert res.survivor == parse_poly(r, data.T_FEDDER_TARGET) ** (p - 1)


def test_fedder_offdiag_n4_fails():
    ring, X, Y = indeterminate_matrices(4, 2)
    C = commutator(X, Y)
    gens = [C.entry(i, j) for i, j in family_positions(4, "off-diagonal")]
    res = fedder_ci_check(gens)
    assert res.status == FAILS
    assert res.survivor.is_zero()


def test_fedder_budget_is_inconclusive():
    ring, X, Y = indeterminate_matrices(4, 2)
    C = commutator(X, Y)
    gens = [C.entry(i, j) for i, j in family_positions(4, "off-diagonal")]
    res = fedder_ci_check(gens, max_terms=1000)
    assert res.status == INCONCLUSIVE
    assert "peak_terms" in res.stats or res.note


def test_zeroing_to_nothing_is_inconclusive():
    r = RingCtx(3, ("x", "y"))
    res = fedder_ci_check([r.var("x")], zeroed=["x"])
    assert res.status == INCONCLUSIVE


def test_fedder_search_finds_witness():
    ring, gens = A_setup(3, 3)
    res = fedder_search(gens)
    assert res.holds and res.zeroed
    assert res.survivor.is_monomial()


def test_zeroing_is_a_strengthening():
    rng = random.Random(7)
    checked = 0
    for _ in range(200):
        r = RingCtx(rng.choice([2, 3]), ("x", "y", "z", "u"))
        gens = [random_poly(rng, r, max_terms=3, max_deg=1) for _ in range(2)]
        if any(g.is_zero() or g.is_constant() for g in gens):
            continue
        zeroed = rng.sample(r.variables, rng.randint(1, 2))
        if fedder_ci_check(gens, zeroed).holds:
            checked += 1
            assert fedder_ci_check(gens).holds
    assert checked > 10


def test_glassbrenner_trivial():
    r = RingCtx(5, ("x", "y"))
    spec = WitnessSpec(r.one(), [r.var("x")])
    assert glassbrenner_ci_check(spec, [5]).status == HOLDS


@pytest.mark.parametrize("p", [2, 3, 5])
def test_glassbrenner_T(p):
    r = T_ring(p)
    F = [parse_poly(r, s) for s in data.T_GENERATORS]
    pre, k = data.T_WITNESS_PREFACTOR
    spec = WitnessSpec(parse_poly(r, data.T_TEST_ELEMENT), F, [(parse_poly(r, pre), k)],
                       data.T_WITNESS_ZEROED)
    res = glassbrenner_ci_check(spec, [p])
    target = parse_poly(r, data.T_WITNESS_TARGET) ** (p - 1)
    assert res.holds
    assert res.survivor in (target, -target)


@pytest.mark.parametrize("p", [2, 3])
def test_glassbrenner_A3(p):
    ring, gens = A_setup(3, p)
    spec = WitnessSpec(parse_poly(ring, data.A3_TEST_ELEMENT), gens,
                       [(parse_poly(ring, b), k) for b, k in data.A3_WITNESS_PREFACTORS],
                       data.A3_WITNESS_ZEROED)
    res = glassbrenner_ci_check(spec, [p * p])
    target = parse_poly(ring, data.A3_WITNESS_TARGET) ** (p * p - 1)
    assert res.holds and res.q == p * p
    assert res.survivor in (target, -target)


def test_A3_without_prefactors_does_not_hold():
    ring, gens = A_setup(3, 3)
    spec = WitnessSpec(parse_poly(ring, data.A3_TEST_ELEMENT), gens, (), data.A3_WITNESS_ZEROED)
    res = glassbrenner_ci_check(spec, [9])
    target = parse_poly(ring, data.A3_WITNESS_TARGET) ** 8
    assert not (res.holds and res.survivor in (target, -target))


def test_A4_wrong_zeroing_is_not_silent():
    ring, gens = A_setup(4, 2)
    f = parse_poly(ring, data.A4_TEST_ELEMENT)
    pre, k = data.A4_WITNESS_PREFACTOR
    wrong = ["x12", "x13"] + data.A4_WITNESS_ZEROED[2:]
    spec = WitnessSpec(f, gens, [(parse_poly(ring, pre), k)], wrong)
    res = glassbrenner_ci_check(spec, [2])
    assert res.status == INCONCLUSIVE
    assert res.note


def test_glassbrenner_permutation_invariance():
    r = T_ring(3)
    F = [parse_poly(r, s) for s in data.T_GENERATORS]
    c = parse_poly(r, data.T_TEST_ELEMENT)
    pre = [(parse_poly(r, "w23*z13"), "p-2"), (parse_poly(r, "w12"), 0)]
    a = glassbrenner_ci_check(WitnessSpec(c, F, pre, data.T_WITNESS_ZEROED), [3])
    b = glassbrenner_ci_check(WitnessSpec(c, F[::-1], pre[::-1], data.T_WITNESS_ZEROED), [3])
    assert a.survivor == b.survivor and a.status == b.status


def test_glassbrenner_rejects_foreign_q():
    r = RingCtx(3, ("x",))
    with pytest.raises(ValueError):
        glassbrenner_ci_check(WitnessSpec(r.one(), [r.var("x")]), [4])


def test_eval_product_expr_empty():
    r = RingCtx(3, ("x",))
    assert eval_product_expr(ProductExpr((), ring=r)) == r.one()


def test_eval_product_expr_single_factor():
    r = RingCtx(3, ("x", "y"))
    f = parse_poly(r, "x*y + y^2 + x")
    assert eval_product_expr(ProductExpr(((f, 1),), frozenset({"x"}))) == parse_poly(r, "y^2")


def test_eval_product_expr_A4_p2():
    ring, gens = A_setup(4, 2)
    factors = [(parse_poly(ring, data.A4_WITNESS_PREFACTOR[0]), 0),
               (parse_poly(ring, data.A4_TEST_ELEMENT), 1)] + [(g, 1) for g in gens]
    out = eval_product_expr(ProductExpr(tuple(factors), frozenset(data.A4_WITNESS_ZEROED), 2))
    assert out == parse_poly(ring, data.A4_WITNESS_TARGET)


def test_eval_product_expr_budget():
    r = RingCtx(5, ("x", "y", "z"))
    f = parse_poly(r, "x + y + z")
    with pytest.raises(BudgetExceeded):
        eval_product_expr(ProductExpr(((f, 4), (f, 4)), q=25), max_terms=5)


def test_hsop_variables():
    r = RingCtx(3, ("x", "y", "z"))
    assert hsop_check(r, r.gens())


def test_hsop_wrong_count():
    r = RingCtx(3, ("x", "y", "z"))
    with pytest.raises(ValueError):
        hsop_check(r, r.gens()[:2])
    assert not hsop_check(r, [r.var("x"), r.var("y"), parse_poly(r, "x*y")])


@pytest.mark.parametrize("p", [2, 3, 5])
def test_hsop_T(p):
    r = T_ring(p)
    F = [parse_poly(r, s) for s in data.T_GENERATORS]
    rep = hsop_check(r, [parse_poly(r, s) for s in data.T_HSOP] + F)
    assert rep
    res = rep.residual_ring
    assert res.variables == data.T_HSOP_RESIDUAL_VARS
    want = Ideal(res, [parse_poly(res, s) for s in data.T_HSOP_RESIDUAL])
    assert rep.ideal.groebner_basis() == want.groebner_basis()


def test_hsop_A3():
    ring, gens = A_setup(3, 2)
    f = parse_poly(ring, data.A3_TEST_ELEMENT)
    assert hsop_check(ring, [parse_poly(ring, s) for s in data.A3_HSOP] + gens + [f])


def test_hsop_invariance():
    r = T_ring(3)
    F = [parse_poly(r, s) for s in data.T_GENERATORS]
    elems = [parse_poly(r, s) for s in data.T_HSOP] + F
    rng = random.Random(3)
    for _ in range(5):
        shuffled = [e * rng.choice([1, 2]) for e in rng.sample(elems, len(elems))]
        assert hsop_check(r, shuffled)


def test_linear_eliminate_small():
    r = RingCtx(3, ("x", "y"))
    el = linear_eliminate(r, [r.var("x"), parse_poly(r, "x + y")])
    assert el.residual_ring.variables == ()
    el = linear_eliminate(r, [r.var("x")])
    assert el.residual_ring.variables == ("y",)


@pytest.mark.parametrize("p", [2, 3])
def test_linear_eliminate_T_regular_sequence(p):
    r = T_ring(p)
    elems = [parse_poly(r, s) for s in data.T_REGSEQ]
    elems += [parse_poly(r, data.T_TEST_ELEMENT)] + [parse_poly(r, s) for s in data.T_GENERATORS]
    el = linear_eliminate(r, elems)
    res = el.residual_ring
    assert res.variables == data.T_REGSEQ_RESIDUAL_VARS
    for img, name in zip(el.images, data.T_REGSEQ_IMAGE_NAMES):
        g = parse_poly(res, data.T_G[name])
        assert img in (g, -g)


def test_linear_eliminate_A4_residual():
    ring, gens = A_setup(4, 3)
    f = parse_poly(ring, data.A4_TEST_ELEMENT)
    el = linear_eliminate(ring, [parse_poly(ring, s) for s in data.A4_HSOP] + gens + [f])
    res = el.residual_ring
    assert res.variables == data.A4_HSOP_RESIDUAL_VARS
    assert el.images[-1] in (parse_poly(res, "x12^7"), -parse_poly(res, "x12^7"))
