"""
Regularity of an ideal and of its integral closure
==================================================

"""

from monoreg import MonomialIdeal
from monoreg.newton import integral_closure, np_membership
from monoreg.regularity import regularity, regularity_oracle_koszul

# edge ideal of the cyclic triangle with weights (6, 3, 5)
I = MonomialIdeal(3, ((1, 3, 0), (0, 1, 5), (6, 0, 1)))
closure = integral_closure(I)
print("I       =", I)
print("closure =", closure)

# x1^5 x2 x3 is integral over I but not in I; the LP hands back exact weights
res = np_membership(I, (5, 1, 1))
print("certificate:", {I.gens[k]: str(c) for k, c in res.certificate.coefficients.items()})

# a point outside gets a separating hyperplane instead
print("separator for (1,1,1):", [str(y) for y in np_membership(I, (1, 1, 1)).separator.weights])

report = regularity(I)
print("reg(I) =", report.reg_ideal, "witness", report.witness.to_json())
print("reg(closure) =", regularity(closure).reg_ideal)

# the Betti-number route agrees
print("oracle:", regularity_oracle_koszul(I).reg_ideal, regularity_oracle_koszul(closure).reg_ideal)
