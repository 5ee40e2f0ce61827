# Finite zeta sums at negative integers (Bernoulli-Goss polynomials).
#
# The zeta value at -n is the finite sum over all degrees of the
# order-(-n) power sums; it lies in A.  At n = q^d - 2 it has a closed
# double-sum expression, a universal degree formula, and a congruence
# modulo every irreducible of degree d - all verified here.

from carlitz import (FieldContext, SeqCache, bernoulli_goss, bg_block_values,
                     bg_congruence_survey, bg_degree_formula, bg_formula_rhs)

ctx = FieldContext(3)
cache = SeqCache(ctx)

print("== small values ==")
for n in (1, 5, 7, 25):
    bg = bernoulli_goss(cache, n)
    print(f"BG_{n:<3} = {bg.value}   (degrees summed: 0..{bg.k_stop}, "
          f"two vanishing tail terms checked)")

print("\n== the double-sum formula at n = q^d - 2 ==")
for d in (1, 2, 3):
    n = 3 ** d - 2
    direct = bernoulli_goss(cache, n).value
    closed = bg_formula_rhs(cache, d)
    print(f"d = {d} (n = {n:>3}): direct == double sum: {direct == closed}, "
          f"degree {direct.degree}")

print("\n== the degree formula (d-1)q^d - 2q(q^(d-1)-1)/(q-1) ==")
for d in (1, 2, 3, 4):
    pred = bg_degree_formula(3, d)
    actual = bernoulli_goss(cache, 3 ** d - 2).value.degree
    print(f"d = {d}: predicted {pred.degree:>4}, actual {actual:>4}")
print("block degrees at d = 3:", bg_degree_formula(3, 3))
dom, merged, tail = bg_block_values(cache, 3)
print(f"actual block degrees: dominant {-dom.valuation}, "
      f"merged {-merged.valuation}, tail {-tail.valuation}")

print("\n== congruences modulo irreducibles of degree d ==")
sv = bg_congruence_survey(cache, 2)
print(f"d = 2, n = {sv.n}:")
for row in sv.rows:
    print(f"  P = {row.modulus}:  BG ≡ {row.bg_residue},  truncated zeta ≡ "
          f"{row.partial_zeta_residue},  congruent: {row.congruent}")
print(f"vanishing count {sv.zero_count} <= bound {sv.zero_bound}; "
      f"{sv.irreducible_count} irreducibles = necklace value "
      f"{sv.necklace_value}")
