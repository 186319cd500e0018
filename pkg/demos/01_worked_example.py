# # One permutation, two polynomials
#
# For w = 5164732 we count the Bruhat interval [id, w] by rank and the regions
# of the inversion arrangement by descents, then read off the exponents.

# In[1]:

from bruhat_regions import Permutation
from bruhat_regions.arrangement import inversion_graph, region_polynomial_w, simple_peo
from bruhat_regions.bruhat import lower_interval, poincare_polynomial
from bruhat_regions.perm import exponents_by_records, is_smooth, record_positions
from bruhat_regions.poly import format_q_numbers, q_number_product

w = Permutation.parse("5164732")
print("w =", w, " smooth:", is_smooth(w))

# The interval below w, graded by length.

# In[2]:

iv = lower_interval(w)
print("size of [id, w]:", iv.size)
print("rank counts:    ", iv.rank_counts)
P = poincare_polynomial(w)
print("P_w =", P)

# The inversion graph has an edge i-j for every inversion; regions of its
# arrangement are acyclic orientations, counted by descents.

# In[3]:

G = inversion_graph(w).graph
print(G.to_text())
R = region_polynomial_w(w)
print("R_w =", R)
print("P_w == R_w:", P == R)

# Records (left-to-right maxima) determine one exponent per position.

# In[4]:

print("records at positions", record_positions(w))
e = exponents_by_records(w)
print("exponents", e, "->", format_q_numbers(x + 1 for x in e))
assert q_number_product(x + 1 for x in e) == R

# The same multiset comes from a perfect elimination ordering built from the
# record blocks.

# In[5]:

peo = simple_peo(w)
print("order", peo.order, "exponents", peo.exponents)
print("same multiset:", sorted(peo.exponents) == sorted(e))
