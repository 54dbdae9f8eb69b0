# coding: utf-8

# # Codes over Z/p^sZ
#
# A linear code over Z/p^sZ is an additive subgroup closed under scalars.
# Every such code has a systematic generator matrix whose pivots are powers
# of p; the multiplicities of those powers form the subtype of the code.

import numpy as np

from leebounds import LinearCode, Modulus
from leebounds.code import (
    codeword_set,
    filtration_subcode,
    reduced_systematic_form,
    socle,
    torsion_code,
)
from leebounds.ring import lee_weight, lee_weight_vector

# ## Lee weights
#
# The Lee weight of a residue is its distance to zero on the cycle of length q.
# Inside the ideal generated by p^i the largest Lee weight is M_i.

Z9 = Modulus(3, 2)
print([lee_weight(a, Z9) for a in range(9)])
print("ladder M_0, M_1, M_2 =", Z9.ladder)
print("Lee weight of (1, 0, 0, 8):", lee_weight_vector([1, 0, 0, 8], Z9))

# ## Systematic form and subtype
#
# Row reduction brings any generator matrix to a block form.  The subtype
# counts pivots of each valuation; its weighted sum is the Z-dimension k.

C = LinearCode.from_generators([[1, 0, 3, 2], [0, 1, 2, 0], [0, 0, 3, 3]], Z9)
print(C.sys_matrix)
print("subtype", C.subtype, "rank", C.K, "k =", C.k, "size", C.size)
print("support subtype", C.support_subtype)

# The reduced form keeps entries above a p^j pivot small in Lee weight.

Z27 = Modulus(3, 3)
print(reduced_systematic_form([[1, 14, 11, 0], [0, 9, 18, 0], [0, 0, 9, 18]], Z27))

# ## Subcodes defined by divisibility
#
# The filtration subcode C_i keeps codewords divisible by p^i.  Its last
# member is the socle, which behaves like a code over F_p.

for i in range(Z9.s):
    print(f"|C_{i}| =", len(codeword_set(filtration_subcode(C, i))))
print("socle subtype", socle(C).subtype)

T = torsion_code(C, 1)
print("torsion code over", T.modulus, "with generator")
print(np.asarray(T.generator))
