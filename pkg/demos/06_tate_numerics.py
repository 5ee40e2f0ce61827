# Truncated Tate series: the numerical side, with rigorous precision.
#
# Zeta values live in the completion at the infinite place; this module
# represents them as Laurent series in 1/θ with polynomial t-coefficients
# and an explicit precision.  The transcendental period factors are kept
# root-free, so every identity check happens inside F_q((1/θ))[t].

from carlitz import (FieldContext, MatrixData, SeqCache, TateSeries,
                     annals_check, family_qk_check, omega_factor, pi_factor,
                     strange_shuffle_check, thakur_weight_check, zeta_series)
from carlitz.poly import APoly, RatK

ctx = FieldContext(3)
cache = SeqCache(ctx)
theta = APoly.theta(ctx)

print("== embedding K into Laurent series ==")
x = RatK(APoly.one(ctx), theta - theta**3)
print(f"1/(θ-θ³) to precision 9: {TateSeries.from_ratk(x, 9)}")

print("\n== zeta values as series ==")
z1 = zeta_series(cache, MatrixData.untwisted(ctx, (1,)), 15)
print(f"weight-one zeta value: {z1}")
z12 = zeta_series(cache, MatrixData.untwisted(ctx, (1, 2)), 15)
print(f"depth-two (1,2) value: {z12}")

print("\n== the root-free period factors ==")
print(f"period factor:     {pi_factor(ctx, 10)}")
om = omega_factor(ctx, 6)
print(f"weight-one factor: {om}")

print("\n== the weight-one evaluation identity, root-free ==")
rep = annals_check(cache, 25)
print(f"ζ(1;χ)·(θ-t1)·Ω-factor = θ·period factor: passed={rep['passed']} "
      f"(difference valuation {rep['achieved']}, threshold {rep['threshold']})")
print(f"value 1 at t1 = θ: {rep['value_at_theta_is_one']}; "
      f"vanishing at t1 = θ^q: {rep['trivial_zero_vanishes']}")

print("\n== numeric identity family checks (threshold 25) ==")
for k in (1, 2):
    r = family_qk_check(cache, k, 25)
    print(f"ζ(q^{k})ζ(q^{k}-1) = ζ(2q^{k}-1) + ζ(q^{k}-1, q^{k}): {r['passed']}")
for m in (1, 2):
    r = thakur_weight_check(cache, m, 25)
    print(f"ζ({m},{m}(q-1)) = ζ({m}q)/(θ-θ^q)^{m}: {r['passed']}")
for (h, k) in ((0, 1), (1, 1)):
    r = strange_shuffle_check(cache, h, k, 25)
    print(f"two-parameter family at (h,k)=({h},{k}): {r['passed']}")
