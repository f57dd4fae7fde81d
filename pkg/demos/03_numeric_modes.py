# %% [markdown]
# # Floats, rationals and scaled integers
#
# The same instance in the three arithmetic modes. Scaled-integer mode
# multiplies the weights until the smallest is at least `m / eps` and
# then uses floor division only.

# %%
from fractions import Fraction

from pdcover import NumericMode, generate_instance, scale_weights_integer, solve

h = generate_instance("random-hg", 3, n=200, m=800, r=3, wmax=100)
eps = Fraction(1, 10)

scaled, factor = scale_weights_integer(h, eps)
print(f"scale factor {factor}; smallest scaled weight {min(scaled.weights)} >= m/eps = {h.m / eps}")

# %%
for mode in NumericMode:
    res = solve(h, eps, mode)
    print(f"{mode.value:>8}: rounds={res.num_rounds:2d} cover_weight={res.cover_weight} "
          f"packing_weight={float(res.packing_weight):.4f}")

# %% [markdown]
# Float and rational runs pick the same cover unless some deletion test
# lands within rounding distance of equality; the integer run may differ
# slightly because floor division raises edges a little less each round.
