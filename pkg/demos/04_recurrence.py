# # Peeling off the last letter
#
# For smooth w, both P_w and R_w pick up one q-number factor [m+1] when w is
# reduced to a permutation w' of one smaller size.  The rook diagram shows the
# sectors that decide which case applies.

# In[1]:

from bruhat_regions.arrangement import (recurrence_factors, recurrence_step, region_polynomial_w,
                                        rook_diagram, sector_decomposition)
from bruhat_regions.bruhat import poincare_polynomial
from bruhat_regions.perm import Permutation
from bruhat_regions.poly import format_q_numbers, q_number, q_number_product

w = Permutation.parse("5164732")
print(rook_diagram(w))
sd = sector_decomposition(w)
print("A", sd.sector_a, "B", sd.sector_b, "C", sd.sector_c, "D", sd.sector_d)

# One step.

# In[2]:

step = recurrence_step(w)
print(f"{w} -> {step.w_prime}, m = {step.m}, case {step.case}")
factor = q_number(step.m + 1)
assert poincare_polynomial(w) == factor * poincare_polynomial(step.w_prime)
assert region_polynomial_w(w) == factor * region_polynomial_w(step.w_prime)

# All the way down.

# In[3]:

ms = recurrence_factors(w)
print("m's", ms, "->", format_q_numbers(m + 1 for m in ms))
assert q_number_product(m + 1 for m in ms) == poincare_polynomial(w)

# 2413 needs the second case.

# In[4]:

print(recurrence_step(Permutation.parse("2413")))
