"""Walk through the closed-form latency model for one AR deployment.

Run with: python3 demos/capacity_analysis.py
"""

from edgecap import (
    Architecture,
    DEFAULT_REQUIREMENTS,
    FrameSpec,
    Scenario,
    WirelessChannel,
    check_requirement,
    max_users,
    presets,
)

frame = FrameSpec(side=600, color_depth=8)
print(f"frame: {frame.side}x{frame.side} px at {frame.color_depth} bpp "
      f"= {frame.size_bits / 1e6:.2f} Mbit per upload")
print()

# How long does inference take on each candidate processing unit?
print("per-frame inference time at side 600:")
for platform in presets():
    print(f"  {platform.name:<15} {platform.predict(600) * 1e3:8.3f} ms")
print()

# How many users can one wireless channel carry under each budget?
print("wireless capacity per AP (users):")
print(f"  {'budget':<8} {'450 Mbps':>10} {'1 Gbps':>10}")
for req in DEFAULT_REQUIREMENTS:
    low = max_users(WirelessChannel(goodput=450e6), frame, req)
    high = max_users(WirelessChannel(goodput=1e9), frame, req)
    print(f"  {req.name:<8} {low:>10} {high:>10}")
print()

# The tightest budget is dominated by the channel: even the fast server
# platform only fits a single user at 450 Mbps.
print("16 ms budget, centralized server, 450 Mbps:")
for users in (1, 2, 3):
    scenario = Scenario(
        total_users=users,
        ap_count=1,
        architecture=Architecture.CENTRALIZED,
        channel=WirelessChannel(goodput=450e6),
        platform=presets()[0],
        frame=frame,
    )
    ok, bd = check_requirement(scenario, DEFAULT_REQUIREMENTS[0])
    verdict = "ok" if ok else "over budget"
    print(f"  {users} user(s): wireless {bd.wireless * 1e3:7.3f} ms + "
          f"processing {bd.processing * 1e3:6.3f} ms = {bd.total * 1e3:7.3f} ms  ({verdict})")
