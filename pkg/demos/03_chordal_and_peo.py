# # Graphs, orientations and elimination orderings
#
# For any graph G, R_G(q) sums q^(descents) over acyclic orientations.  When G
# is chordal the chromatic polynomial is a product of linear factors, and a
# nice perfect elimination ordering makes R_G a product of q-numbers.

# In[1]:

from bruhat_regions.graph import (SimpleGraph, chromatic_polynomial, find_nice_peo, find_peo,
                                  region_polynomial, region_polynomial_geometric_oracle)
from bruhat_regions.poly import factor_into_q_numbers

# A triangle with a pendant vertex, and the 4-cycle.

# In[2]:

paw = SimpleGraph.parse("n: 4; edges: 1-2,1-3,2-3,3-4")
c4 = SimpleGraph.cycle(4)
for name, G in (("paw", paw), ("C4", c4)):
    R = region_polynomial(G)
    assert R == region_polynomial_geometric_oracle(G)
    print(f"{name}: R = {R}")
    print(f"    chromatic = {chromatic_polynomial(G).to_text('t')}")
    print(f"    q-number factors: {factor_into_q_numbers(R)}")

# Elimination orderings: MCS finds a PEO when one exists.

# In[3]:

peo = find_peo(paw)
print("PEO", peo.order, "exponents", peo.exponents, "nice:", peo.is_nice)
print("nice PEO", find_nice_peo(paw).order)
print("C4 has a PEO:", find_peo(c4) is not None)

# Graphviz output for the paw graph.

# In[4]:

print(paw.to_dot("paw"))
