# coding: utf-8

# # Supports and generalized weights
#
# The join support records, per coordinate, the largest Lee weight seen in
# any codeword.  Generalized weights minimize a support size over subcodes
# of a given rank.

from leebounds import LinearCode, Modulus
from leebounds.weights import (
    column_hierarchy,
    column_lee_weight_code,
    filtration_hierarchy,
    generalized_meet_lee_weight,
    join_hierarchy,
    join_support,
    meet_support,
    min_lee_distance,
)

Z9 = Modulus(3, 2)
C = LinearCode.from_generators([[1, 0, 3, 2], [0, 1, 2, 0], [0, 0, 3, 3]], Z9)

print("d_L =", min_lee_distance(C))
print("join support", join_support(C).entries, "size", join_support(C).size)
print("meet support", meet_support(C).entries)

# ## Join hierarchy
#
# The join weights only depend on the socle, so they come from generalized
# Hamming weights over F_p scaled by M_{s-1}.  They strictly increase.

print("join hierarchy", join_hierarchy(C))

# ## Column hierarchy
#
# Column weights sum the largest entry of each column over a set of r
# codewords.  A branch and bound search finds the exact minimum.

print("column hierarchy", column_hierarchy(C))
print("column weight of the code", column_lee_weight_code(C))

# ## Filtration distances
#
# The r-th filtration distance is the minimum Lee distance of C_{r-1}.

print("filtration distances", filtration_hierarchy(C))

# ## The meet support does not bound d_L from above
#
# A single codeword can have meet support smaller than its Lee weight.

small = LinearCode.from_generators([[1, 2]], Z9)
print("meet weight", generalized_meet_lee_weight(small, 1), "vs d_L", min_lee_distance(small))
