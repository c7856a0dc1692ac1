"""Print a text achievability map: which responsiveness class each
(users, APs) point can meet, for one platform and architecture.

Run with: python3 demos/achievability_map.py
"""

from edgecap import Architecture, SweepGrid, WirelessChannel, preset, run_sweep

grid = SweepGrid(
    architectures=(Architecture.DISTRIBUTED,),
    platforms=(preset("coral-dev"),),
    channels=(WirelessChannel(goodput=1e9),),
)
cells = run_sweep(grid)
label = {c.best: (c.best or "-") for c in cells}
by_point = {(c.users, c.aps): label[c.best] for c in cells}

print("distributed / coral-dev / 1 Gbps")
print()
header = "users\\APs " + "".join(f"{a:>5}" for a in grid.ap_counts)
print(header)
for users in grid.user_counts:
    row = "".join(f"{by_point[(users, aps)]:>5}" for aps in grid.ap_counts)
    print(f"{users:>9} {row}")
print()
print("HR/MR/LR = tightest satisfiable latency budget (16/100/500 ms), "
      "'-' = none; more APs shrink the per-AP load, more users grow it")
