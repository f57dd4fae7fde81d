# %% [markdown]
# # Rounds and work against their bounds
#
# Rounds stay far below `(1 + r ln(1/eps)) (1 + ln m)` and the edges
# processed stay below `m + M ln(1/eps)`. The sequential baseline and the
# exact optimum give a feel for the cover quality on small instances.

# %%
import time

from pdcover import (
    bar_yehuda_even,
    brute_force_min_cover,
    generate_instance,
    round_bound,
    solve,
    work_bound,
)

print(f"{'m':>7} {'r':>3} {'eps':>5} {'rounds':>6} {'bound':>8} {'work':>8} {'bound':>10} {'sec':>6}")
for m, r in [(1_000, 2), (10_000, 3), (100_000, 5)]:
    h = generate_instance("random-hg", m, n=m // 5, m=m, r=r)
    for eps in ("0.1", "0.01"):
        t0 = time.perf_counter()
        res = solve(h, eps, "float")
        dt = time.perf_counter() - t0
        print(f"{h.m:>7} {h.r:>3} {eps:>5} {res.num_rounds:>6} {round_bound(h.r, h.m, eps):>8.1f} "
              f"{res.work:>8} {work_bound(h.m, h.M, eps):>10.1f} {dt:>6.2f}")

# %%
h = generate_instance("random-hg", 1, n=18, m=40, r=3, wmax=50)
opt = brute_force_min_cover(h)
res = solve(h, "0.05")
bye_cover, _ = bar_yehuda_even(h)
print("optimum", opt.opt_weight, "| parallel rounds", res.cover_weight, "| sequential baseline", h.total_weight(bye_cover))
