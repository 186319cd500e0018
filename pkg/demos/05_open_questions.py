# # Two open questions, explored
#
# 1. Is the region graph of a smooth w a level-preserving subgraph of the
#    Hasse diagram of [id, w]?
# 2. Does R_G factor into q-numbers exactly when G has a nice PEO?
#
# The explorers report what they find; they do not settle either question.

# In[1]:

from bruhat_regions.explore import (classify_graph, explore_factorization, explore_gamma,
                                    format_contingency)
from bruhat_regions.graph import SimpleGraph, find_peo, region_polynomial
from bruhat_regions.perm import Permutation, all_permutations, is_smooth
from bruhat_regions.poly import factor_into_q_numbers, format_q_numbers

for text in ("321", "4231", "3412"):
    print(explore_gamma(Permutation.parse(text)).summary(), end="\n\n")

# Smooth permutations in S_4: how many embed?

# In[2]:

found = sum(explore_gamma(w).embedding == "found" for w in all_permutations(4) if is_smooth(w))
print("smooth w in S_4 with an embedding:", found)

# Contingency table over every labelled graph on at most 5 vertices.

# In[3]:

print(format_contingency(explore_factorization(5)))

# At 6 vertices the table is no longer diagonal.  One such graph:

# In[4]:

G = SimpleGraph.parse("n: 6; edges: 1-2,1-3,1-4,1-5,1-6,2-3,2-4,2-6,3-4,4-6,5-6")
R = region_polynomial(G)
print("R_G =", R)
print("factors:", format_q_numbers(factor_into_q_numbers(R)))
print("(factors, nice PEO, #factorizations):", classify_graph(G))
print("PEO exponents:", find_peo(G).exponents)
