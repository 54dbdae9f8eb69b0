# coding: utf-8

# # How often are bounds attained?
#
# Random codes are drawn by filling the non-pivot blocks of a systematic
# generator uniformly.  Monte Carlo estimates are checked against exact
# closed forms, and tiny cases are enumerated completely.

from leebounds.density import (
    census_ell_zero,
    census_optimal_codes,
    monte_carlo_probability,
    prob_ell_zero_closed,
)

# ## All entries of the block are units
#
# The probability is (1 - 1/p)^{K(n-K)}, which vanishes as n grows.

for p, K, n in ((3, 3, 6), (5, 2, 5)):
    res = monte_carlo_probability("ell-zero", p=p, s=2, K=K, n=n, trials=100_000, seed=1)
    print((p, K, n), "exact", prob_ell_zero_closed(p, K, n),
          f"estimate {res.estimate:.5f} +- {res.stderr:.5f}")

print("census over Z/9, K=2, n=3:", census_ell_zero(3, 2, 2, 3))

# ## Codes attaining a bound
#
# Enumerating every systematic generator shows which isometry classes meet
# a bound with equality.

res = census_optimal_codes(5, 1, 2, (1,), "shiromoto")
print(res.attaining, "of", res.total, "codes attain; classes:", res.classes)

res = census_optimal_codes(3, 2, 4, (0, 3), "join")
print("join over Z/9:", res.fraction, "in", len(res.classes), "class(es)")
