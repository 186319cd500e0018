# # Where the two counts part ways
#
# Region count R_w(1) never exceeds the interval size B_w, and the two
# polynomials agree exactly on permutations avoiding 3412 and 4231.

# In[1]:

from collections import Counter

from bruhat_regions.arrangement import region_polynomial_w
from bruhat_regions.bruhat import poincare_polynomial
from bruhat_regions.perm import Permutation, all_permutations, is_smooth, smoothness_witness
from bruhat_regions.poly import is_palindromic

# The two minimal non-smooth permutations.

# In[2]:

for text in ("3412", "4231"):
    w = Permutation.parse(text)
    P, R = poincare_polynomial(w), region_polynomial_w(w)
    print(f"{w}: P = {P}   (B = {P(1)})")
    print(f"{' ' * len(text)}  R = {R}   (regions = {R(1)})")
    print("   palindromic P:", is_palindromic(P), " palindromic R:", is_palindromic(R))

# A sweep over S_1..S_5.

# In[3]:

table = Counter()
for n in range(1, 6):
    for w in all_permutations(n):
        P, R = poincare_polynomial(w), region_polynomial_w(w)
        assert R(1) <= P(1)
        table[(n, is_smooth(w), P == R)] += 1

print(" n  smooth  P==R  count")
for key in sorted(table):
    print("{:2d}  {!s:6}  {!s:5} {:5d}".format(*key, table[key]))

# Why a permutation fails: the first pattern occurrence.

# In[4]:

w = Permutation.parse("52341")
print(w, "->", smoothness_witness(w))
