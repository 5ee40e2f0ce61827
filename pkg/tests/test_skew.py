import random

import pytest

from carlitz.errors import ClosedFormMismatch
from carlitz.ffield import FieldContext
from carlitz.poly import APoly, RatK, enumerate_monics
from carlitz.powersums import (SemiChar, SeqCache, power_sum_closed,
                               power_sum_qn_closed)
from carlitz.skew import (SkewPoly, carlitz_action, eta, eta_inv, eval_at_omega,
                          frak_S, frak_S_bruteforce, frak_S_closed,
                          star_chain_check)
from carlitz.tpoly import TPoly


def one(ctx):
    return RatK.one(ctx)


def test_twist_rule(ctx3):
    th = APoly.theta(ctx3)
    tau = SkewPoly.tau(ctx3)
    assert tau * SkewPoly.constant(ctx3, th) == \
        SkewPoly(ctx3, (RatK.zero(ctx3), RatK.from_apoly(th ** 3)))
    X = SkewPoly(ctx3, (RatK.from_apoly(th), one(ctx3)))
    assert X * X == SkewPoly(ctx3, (RatK.from_apoly(th ** 2),
                                    RatK.from_apoly(th ** 3 + th), one(ctx3)))
    f = SkewPoly(ctx3, (RatK.from_apoly(th + 1), one(ctx3), RatK.from_apoly(th)))
    assert f * SkewPoly.one(ctx3) == f
    assert SkewPoly.one(ctx3) * f == f


def test_skew_associativity(ctx3, ctx4):
    rng = random.Random(8)
    for ctx in (ctx3, ctx4):
        def rand_skew():
            return SkewPoly(ctx, [RatK.from_apoly(
                APoly(ctx, [rng.randrange(ctx.q) for _ in range(3)]))
                for _ in range(rng.randint(1, 4))])
        for _ in range(6):
            a, b, c = rand_skew(), rand_skew(), rand_skew()
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c


def test_carlitz_action(cache3):
    ctx = cache3.ctx
    th = APoly.theta(ctx)
    X = SkewPoly(ctx, (RatK.from_apoly(th), one(ctx)))
    assert carlitz_action(cache3, th) == X
    assert carlitz_action(cache3, APoly.one(ctx)) == SkewPoly.one(ctx)
    assert carlitz_action(cache3, th ** 2) == X * X
    rng = random.Random(4)
    monics = list(enumerate_monics(ctx, 2)) + list(enumerate_monics(ctx, 3))
    for _ in range(8):
        a, b = rng.choice(monics), rng.choice(monics)
        assert carlitz_action(cache3, a * b) == \
            carlitz_action(cache3, a) * carlitz_action(cache3, b)


def test_eta_and_inverse(cache3):
    ctx = cache3.ctx
    th = APoly.theta(ctx)
    t = TPoly.variable(ctx, 1, 1)
    X = SkewPoly(ctx, (RatK.from_apoly(th), one(ctx)))
    assert eta(cache3, t) == X
    assert eta_inv(cache3, SkewPoly.tau(ctx)) == t - th
    a = th ** 2 + th + 1
    a_of_t = t ** 2 + t + 1
    assert eta(cache3, a_of_t) == carlitz_action(cache3, a)
    rng = random.Random(12)
    for _ in range(8):
        tp = TPoly(ctx, 1, {(k,): RatK.from_apoly(
            APoly(ctx, [rng.randrange(3) for _ in range(rng.randint(1, 4))]))
            for k in range(rng.randint(1, 9))})
        assert eta_inv(cache3, eta(cache3, tp)) == tp
        f = SkewPoly(ctx, [RatK.from_apoly(APoly(ctx, [rng.randrange(3)
                                                       for _ in range(3)]))
                           for _ in range(rng.randint(1, 9))])
        assert eta(cache3, eta_inv(cache3, f)) == f


def test_eval_at_omega(cache3):
    ctx = cache3.ctx
    th = APoly.theta(ctx)
    t = TPoly.variable(ctx, 1, 1)
    assert eval_at_omega(cache3, carlitz_action(cache3, th)) == t
    assert eval_at_omega(cache3, SkewPoly.one(ctx)) == TPoly.one(ctx, 1)
    assert eval_at_omega(cache3, SkewPoly.tau(ctx, 2)) == (t - th) * (t - th ** 3)
    # the action of a evaluates to a(t)
    rng = random.Random(6)
    for a in list(enumerate_monics(ctx, 2))[:4]:
        expected = TPoly(ctx, 1, {(k,): RatK.constant(ctx, c)
                                  for k, c in enumerate(a.coeffs) if c})
        assert eval_at_omega(cache3, carlitz_action(cache3, a)) == expected
    # eta composed with evaluation is the identity
    for _ in range(5):
        tp = TPoly(ctx, 1, {(k,): RatK.from_apoly(
            APoly(ctx, [rng.randrange(3) for _ in range(3)]))
            for k in range(rng.randint(1, 8))})
        assert eval_at_omega(cache3, eta(cache3, tp)) == tp


def test_eval_at_one(cache3):
    ctx = cache3.ctx
    th = APoly.theta(ctx)
    f = SkewPoly(ctx, (RatK.from_apoly(th), one(ctx)))
    assert f.eval_at_one() == RatK.from_apoly(th + 1)
    assert SkewPoly.zero(ctx).eval_at_one() == RatK.zero(ctx)
    l1 = th - th ** 3
    got = frak_S(cache3, 1, 1).eval_at_one()
    assert got == RatK(APoly.one(ctx) + l1, l1 ** 3)


def test_eta_of_weight_one_power_sum(cache3):
    ctx = cache3.ctx
    for d in range(7):
        sd = power_sum_closed(cache3, d, "e2")
        expected = SkewPoly(ctx, [RatK.zero(ctx)] * d
                            + [RatK(APoly.one(ctx), cache3.ell(d))])
        assert eta(cache3, sd) == expected


@pytest.mark.parametrize("q", [3, 4])
def test_frak_S_closed_vs_bruteforce(q):
    cache = SeqCache(FieldContext(q))
    for (d, n) in ((0, 1), (1, 1), (2, 1), (3, 1), (1, 2), (2, 2)):
        assert frak_S_closed(cache, d, n) == frak_S_bruteforce(cache, d, n), (d, n)
        frak_S(cache, d, n)  # must not raise


def test_frak_S_equivalence_with_commutative_form(cache3):
    for (d, n) in ((1, 1), (2, 1), (3, 1), (2, 2), (4, 2)):
        assert eta(cache3, power_sum_qn_closed(cache3, n, d)) == \
            frak_S_closed(cache3, d, n)


def test_star_chain(cache3, cache4):
    for cache in (cache3, cache4):
        for d in (1, 2, 3):
            rep = star_chain_check(cache, d)
            assert rep["skew_equals_star"]
            assert rep["star_equals_strict_plus_power"]
            assert rep["star_equals_product_minus_swap"]


def test_star_chain_tiny_values(cache3):
    # at truncation depth 1 every link is the constant 1
    rep = star_chain_check(cache3, 1)
    assert rep["skew_sum"] == RatK.one(cache3.ctx)
    assert rep["star"] == RatK.one(cache3.ctx)
