# coding: utf-8

# # Upper bounds of Singleton type
#
# Every bound is computed from code statistics and compared with the exact
# minimum Lee distance obtained by enumeration.

from leebounds import LinearCode, Modulus
from leebounds.bounds import (
    TABLE_PARAMETERS,
    all_bounds,
    filtration_profile,
    table_block,
)


def show(code):
    for r in all_bounds(code):
        value = r.value if r.applicable else f"n/a ({r.reason})"
        print(f"  {r.name:<18} {value}")


# ## A free code over Z/9
#
# The filtration bound is attained here while the join bound is loose.

show(LinearCode.from_generators([[1, 0, 0, 2], [0, 1, 0, 6], [0, 0, 1, 4]], Modulus(3, 2)))

# ## A non-free code over Z/27

show(LinearCode.from_generators([[1, 10, 4, 20, 9], [0, 3, 9, 18, 9]], Modulus(3, 3)))

# ## The filtration profile
#
# Row maxima of the valuations in the non-pivot block drive the filtration
# bounds.  Every information set gives its own profile; the bounds use the
# best one.

code = LinearCode.from_generators([[1, 0, 0, 21, 6], [0, 1, 0, 10, 7], [0, 0, 1, 18, 8]],
                                  Modulus(3, 3))
prof = filtration_profile(code)
print("l per row", prof.ell_per_row, "n' per row", prof.nprime_per_row, "N'", prof.Nprime)

# ## Comparing parameter-level bounds
#
# For fixed (n, K, q, sigma) the filtration bound depends on the pair
# (l, n'), so the table lists one value per admissible pair.

for params in TABLE_PARAMETERS:
    block = table_block(*params)
    cells = ", ".join(f"({e},{m}):{v}" for e, m, v in block.filtration)
    print(params, "join", block.join, "Shiromoto", block.shiromoto_min)
    print("   ", cells)
