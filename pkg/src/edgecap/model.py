"""Closed-form latency and capacity model for AR frame offloading.

A set of users uploads camera frames over a shared wireless channel to a
processing unit (a central server shared by all access points, or one
embedded device per access point). The end-to-end latency per frame is the
wireless transfer time plus the processing time, and the wireless channel
caps how many users can sustain the required framerate at all.

All times are stored in seconds, all frame sizes in bits. Conversions to
milliseconds happen only at I/O boundaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple


class Architecture(Enum):
    CENTRALIZED = "centralized"
    DISTRIBUTED = "distributed"


@dataclass(frozen=True)
class FrameSpec:
    """A square video frame: side length in pixels, color depth in bits/pixel."""

    side: int = 600
    color_depth: int = 8

    def __post_init__(self) -> None:
        if self.side < 1:
            raise ValueError(f"frame side must be >= 1, got {self.side}")
        if self.color_depth < 1:
            raise ValueError(f"color depth must be >= 1, got {self.color_depth}")

    @property
    def size_bits(self) -> int:
        return self.color_depth * self.side * self.side


@dataclass(frozen=True)
class PlatformProfile:
    """Fitted per-frame inference latency of a processing unit.

    Predicted latency for a frame of side ``s`` is ``a + b * s**3`` seconds,
    with ``a`` the constant term (seconds) and ``b`` the cubic term
    (seconds per cubic pixel). Both are nonnegative, so the curve is
    nondecreasing in the side length.
    """

    name: str
    a: float
    b: float

    def __post_init__(self) -> None:
        if self.a < 0 or self.b < 0:
            raise ValueError(f"profile coefficients must be >= 0, got a={self.a}, b={self.b}")

    @classmethod
    def from_ms(cls, name: str, a_ms: float, b_ms_per_px3: float) -> "PlatformProfile":
        return cls(name=name, a=a_ms * 1e-3, b=b_ms_per_px3 * 1e-3)

    def predict(self, side: int) -> float:
        """Per-frame inference latency in seconds for a frame of this side."""
        if side < 1:
            raise ValueError(f"frame side must be >= 1, got {side}")
        return self.a + self.b * side ** 3


@dataclass(frozen=True)
class WirelessChannel:
    """One access point's channel: aggregate goodput shared equally by its users."""

    goodput: float  # bits per second
    backhaul_latency: float = 0.0  # AP -> PU transfer, seconds

    def __post_init__(self) -> None:
        if not self.goodput > 0:
            raise ValueError(f"goodput must be > 0, got {self.goodput}")
        if self.backhaul_latency < 0:
            raise ValueError(f"backhaul latency must be >= 0, got {self.backhaul_latency}")


@dataclass(frozen=True)
class Requirement:
    """A responsiveness class: the latency budget one frame must meet."""

    name: str
    l_required: float  # seconds

    def __post_init__(self) -> None:
        if not self.l_required > 0:
            raise ValueError(f"latency budget must be > 0, got {self.l_required}")

    @property
    def min_framerate(self) -> float:
        """Minimum upload framerate implied by the budget, frames per second."""
        return 1.0 / self.l_required


HIGH_RESPONSIVENESS = Requirement("HR", 0.016)
MID_RESPONSIVENESS = Requirement("MR", 0.100)
LOW_RESPONSIVENESS = Requirement("LR", 0.500)

#: Most stringent first, as expected by :func:`best_requirement`.
DEFAULT_REQUIREMENTS: Tuple[Requirement, ...] = (
    HIGH_RESPONSIVENESS,
    MID_RESPONSIVENESS,
    LOW_RESPONSIVENESS,
)


@dataclass(frozen=True)
class Scenario:
    """One deployment point: user population, APs, architecture, and hardware."""

    total_users: int
    ap_count: int
    architecture: Architecture
    channel: WirelessChannel
    platform: PlatformProfile
    frame: FrameSpec

    def __post_init__(self) -> None:
        if self.total_users < 1:
            raise ValueError(f"total users must be >= 1, got {self.total_users}")
        if self.ap_count < 1:
            raise ValueError(f"AP count must be >= 1, got {self.ap_count}")

    @property
    def users_per_ap(self) -> int:
        """Users sharing one AP's channel, ceiling of total/APs."""
        return -(-self.total_users // self.ap_count)


@dataclass(frozen=True)
class LatencyBreakdown:
    wireless: float
    processing: float
    backhaul: float
    total: float


def frame_size_bits(frame: FrameSpec) -> int:
    """Size of one encoded frame in bits (color_depth * side^2), exact."""
    return frame.size_bits


def wireless_latency(frame: FrameSpec, n_sharers: int, channel: WirelessChannel) -> float:
    """Seconds to upload one frame when ``n_sharers`` users split the goodput."""
    if n_sharers < 1:
        raise ValueError(f"sharer count must be >= 1, got {n_sharers}")
    return frame.size_bits * n_sharers / channel.goodput


def inference_latency(platform: PlatformProfile, side: int) -> float:
    """Per-frame inference time of the platform, seconds."""
    return platform.predict(side)


def processing_latency(platform: PlatformProfile, frame: FrameSpec, sharers: int) -> float:
    """Per-frame processing latency when ``sharers`` users share the PU, seconds."""
    if sharers < 1:
        raise ValueError(f"sharer count must be >= 1, got {sharers}")
    return platform.predict(frame.side) * sharers


def system_latency(scenario: Scenario) -> LatencyBreakdown:
    """End-to-end latency breakdown for one frame in the given scenario.

    The wireless component always sees the per-AP user count. The processing
    component sees every user in the centralized architecture (one shared
    server) but only the per-AP users in the distributed one (one device
    per AP).
    """
    n = scenario.users_per_ap
    lw = wireless_latency(scenario.frame, n, scenario.channel)
    if scenario.architecture is Architecture.CENTRALIZED:
        pu_sharers = scenario.total_users
    else:
        pu_sharers = n
    lp = processing_latency(scenario.platform, scenario.frame, pu_sharers)
    bh = scenario.channel.backhaul_latency
    return LatencyBreakdown(wireless=lw, processing=lp, backhaul=bh, total=lw + lp + bh)


def max_users(channel: WirelessChannel, frame: FrameSpec, req: Requirement) -> int:
    """Largest user count one AP's channel supports within the latency budget.

    This is the wireless-only cap: the largest integer N with
    N * frame_bits <= goodput * budget. Processing capacity is not part of it.
    """
    d = frame.size_bits
    budget_bits = channel.goodput * req.l_required
    n = math.floor(budget_bits / d)
    # Guard the floor against float rounding at exact multiples.
    while (n + 1) * d <= budget_bits:
        n += 1
    while n > 0 and n * d > budget_bits:
        n -= 1
    return n


def check_requirement(scenario: Scenario, req: Requirement) -> Tuple[bool, LatencyBreakdown]:
    """Whether the scenario meets the requirement; both tests are non-strict.

    Satisfied iff the per-AP user count fits the wireless cap and the
    end-to-end latency fits the budget.
    """
    breakdown = system_latency(scenario)
    n = scenario.users_per_ap
    ok = n <= max_users(scenario.channel, scenario.frame, req) and breakdown.total <= req.l_required
    return ok, breakdown


def best_requirement(
    scenario: Scenario, reqs: Sequence[Requirement]
) -> Optional[Requirement]:
    """Most stringent satisfied requirement, or None.

    ``reqs`` must be sorted ascending by latency budget (most stringent first).
    """
    for req in reqs:
        ok, _ = check_requirement(scenario, req)
        if ok:
            return req
    return None
