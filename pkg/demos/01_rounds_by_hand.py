# %% [markdown]
# # Watching the rounds
#
# Three tiny graphs, stepped one round at a time. Every live edge is
# raised by the smallest `w_p(v) / d_p(v)` among its vertices; a vertex
# whose residual weight drops to `eps * w(v)` joins the cover.

# %%
from pdcover import build_hypergraph, init_state, potential, run_round

path = build_hypergraph([1, 1, 1], [(0, 1), (1, 2)])
state = init_state(path, "0.25")
print("start  w_p =", state.w_p, " d_p =", state.d_p)
rep = run_round(state)
print("delta  =", {e: str(x) for e, x in rep.delta.items()})
print("after  w_p =", [str(x) for x in state.w_p], " cover so far:", state.deleted)

# %% [markdown]
# The star: the heavy centre limits every edge, so one round empties the
# graph and the leaves are left over with a third of their weight.

# %%
star = build_hypergraph([2, 1, 1, 1], [(0, 1), (0, 2), (0, 3)])
state = init_state(star, "0.25")
rep = run_round(state)
print("limiter:", rep.limiter, " L:", rep.L)
print("residuals:", [str(x) for x in state.w_p], " cover:", state.deleted)

# %% [markdown]
# The potential `sum_v d_p(v) ln(w_p(v) / (eps w(v)))` starts at
# `M ln(1/eps)` and falls by at least the number of surviving edges.

# %%
import math

tri = build_hypergraph([1, 1, 1], [(0, 1), (1, 2), (2, 0)])
state = init_state(tri, 0.1)
print(f"phi = {potential(state):.4f}  (6 ln 10 = {6 * math.log(10):.4f})")
rep = run_round(state)
print(f"after one round: phi = {rep.phi_after}, edges left = {rep.edges_at_end}")
print("good-edge fraction:", rep.good_edge_fraction)
