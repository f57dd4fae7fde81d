# %% [markdown]
# # Weighted set cover through the hypergraph view
#
# Sets become vertices and elements become edges. The rank of the image
# is the largest number of sets that share one element, which is what
# the approximation factor depends on.

# %%
from fractions import Fraction

from pdcover import (
    SetCoverInstance,
    certify,
    cover_to_set_solution,
    from_set_cover,
    packing_to_element_solution,
    solve,
)

inst = SetCoverInstance(
    weights=[3, 2, 4, 1, 5],
    sets=[(0, 1, 2), (2, 3), (3, 4, 5), (5, 6), (0, 6, 7)],
    num_elements=8,
)
h = from_set_cover(inst)
print(h, "edges:", h.edges)

# %%
res = solve(h, eps=Fraction(1, 20))
print("chosen sets:", cover_to_set_solution(inst, res.cover), "weight", res.cover_weight)
print("element prices:", [str(x) for x in packing_to_element_solution(inst, res.packing)])

# %% [markdown]
# The element prices are a lower bound on any set cover; the report puts
# both solutions within `r / (1 - eps)` of optimal.

# %%
rep = certify(h, res.cover, res.packing, res.eps)
print("passed:", rep.passed)
print("w(C) =", rep.cover_weight, " p(E) =", rep.packing_weight, " bound r/(1-eps) =", rep.ratio_bound)
print("observed ratio <=", float(Fraction(rep.cover_weight) / rep.packing_weight))
