"""Deterministic discrete-event simulation of the closed-loop frame pipeline.

Each user keeps exactly one frame in flight: it uploads the frame over its
AP's channel, the frame waits in the processing unit's FIFO queue, is served
for a constant inference time, and the user immediately starts the next
upload (the response itself is free). The channel is a processor-sharing
resource: with n uploads in progress each advances at goodput/n bits per
second.

Everything is deterministic: events are ordered by (time, insertion
sequence), and simultaneous channel completions are handled in ascending
user order. Two runs with the same config produce identical results.
"""

from __future__ import annotations

import heapq
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from .model import (
    Architecture,
    FrameSpec,
    PlatformProfile,
    Scenario,
    WirelessChannel,
    system_latency,
)

# A transfer counts as finished once this few bits remain (absorbs float
# rounding in the remaining-bits bookkeeping). The effective threshold also
# covers residuals worth less than _TIME_TOL seconds of transfer time, which
# keeps completion events advancing even when the goodput is enormous.
_REMAINING_BITS_TOL = 1e-6
_TIME_TOL = 1e-12  # seconds

_DEFAULT_DURATION = 1020.0  # seconds of simulated time
_DEFAULT_WARMUP = 102.0


class SimMode(Enum):
    WIRELESS_ONLY = "wireless-only"  # zero service time, channel contention only
    COMPUTE_ONLY = "compute-only"  # instantaneous uploads, queueing only
    COMBINED = "combined"


@dataclass(frozen=True)
class SimConfig:
    ap_count: int
    users_per_ap: int
    architecture: Architecture
    frame: FrameSpec
    channel: WirelessChannel  # per AP
    platform: PlatformProfile
    mode: SimMode = SimMode.COMBINED
    duration: float = _DEFAULT_DURATION
    warmup: float = _DEFAULT_WARMUP
    start_stagger: float = 0.0  # first-transmission offset per user index

    def __post_init__(self) -> None:
        if self.ap_count < 1 or self.users_per_ap < 1:
            raise ValueError("ap_count and users_per_ap must be >= 1")
        if not (self.duration > self.warmup >= 0):
            raise ValueError("need duration > warmup >= 0")
        if self.start_stagger < 0:
            raise ValueError("start stagger must be >= 0")

    @property
    def total_users(self) -> int:
        return self.ap_count * self.users_per_ap


@dataclass(frozen=True)
class SimResult:
    frames_completed: int
    mean_latency: float
    p50_latency: float
    p95_latency: float
    max_latency: float
    min_latency: float
    mean_transmit: float
    mean_queue_wait: float
    mean_service: float
    per_user_throughput: float  # frames per second per user
    no_samples: bool = False  # nothing completed inside the measurement window

    def to_json(self) -> str:
        """Interchange JSON with latency fields in milliseconds."""
        return json.dumps(
            {
                "frames_completed": self.frames_completed,
                "mean_ms": self.mean_latency * 1e3,
                "p50_ms": self.p50_latency * 1e3,
                "p95_ms": self.p95_latency * 1e3,
                "max_ms": self.max_latency * 1e3,
                "transmit_ms": self.mean_transmit * 1e3,
                "queue_wait_ms": self.mean_queue_wait * 1e3,
                "service_ms": self.mean_service * 1e3,
                "throughput_fps": self.per_user_throughput,
            },
            indent=2,
        ) + "\n"


# Event kinds on the heap; payload layout is (time, seq, kind, arg).
_EV_START_TX = 0  # arg: user id
_EV_CH_DONE = 1  # arg: (ap id, epoch)
_EV_PU_ARRIVE = 2  # arg: user id (only used when backhaul > 0)
_EV_SVC_DONE = 3  # arg: pu id


class FrameBoundViolation(AssertionError):
    """A frame exceeded the closed-loop worst-case latency bound."""


def run(config: SimConfig, check_frame_bound: bool = False) -> SimResult:
    """Run the simulation until ``config.duration`` and report statistics.

    Statistics cover frames whose service completes inside
    ``[warmup, duration]``. With ``check_frame_bound`` every completed frame
    is asserted against the closed-loop worst case
    (transmit at the full per-AP share + one full queue round at its PU).
    """
    n_aps = config.ap_count
    upa = config.users_per_ap
    total = config.total_users
    rate = config.channel.goodput
    bits_tol = max(_REMAINING_BITS_TOL, rate * _TIME_TOL)
    backhaul = config.channel.backhaul_latency
    frame_bits = float(config.frame.size_bits)
    duration = config.duration
    warmup = config.warmup
    mode = config.mode
    service = 0.0 if mode is SimMode.WIRELESS_ONLY else config.platform.predict(config.frame.side)

    if mode is SimMode.COMPUTE_ONLY and service == 0.0:
        raise ValueError("compute-only with a zero-latency platform has a zero-length cycle")

    centralized = config.architecture is Architecture.CENTRALIZED
    n_pus = 1 if centralized else n_aps
    pu_sharers = total if centralized else upa
    # Closed loop: at most upa concurrent uploads per channel and at most
    # pu_sharers frames at a PU, which bounds every frame's latency.
    latency_bound = frame_bits * upa / rate + pu_sharers * service + backhaul

    ap_of = [u // upa for u in range(total)]
    pu_of = [0 if centralized else ap for ap in ap_of]

    # Per-user timestamps of the frame currently in flight.
    tx_start = [0.0] * total
    tx_end = [0.0] * total
    q_arrival = [0.0] * total
    svc_start = [0.0] * total

    # Channel state per AP: active transfers, last bookkeeping update, epoch
    # used to invalidate superseded completion events.
    ch_active: List[dict] = [dict() for _ in range(n_aps)]
    ch_last = [0.0] * n_aps
    ch_epoch = [0] * n_aps

    # PU state: FIFO of waiting users, user currently in service (or -1).
    pu_queue: List[List[int]] = [[] for _ in range(n_pus)]
    pu_head = [0] * n_pus  # pop index; avoids O(n) pops from list front
    pu_current = [-1] * n_pus

    heap: list = []
    seq = 0
    lat: List[float] = []
    tr: List[float] = []
    wt: List[float] = []

    def push(time: float, kind: int, arg) -> None:
        nonlocal seq
        seq += 1
        heapq.heappush(heap, (time, seq, kind, arg))

    def ch_advance(ap: int, now: float) -> None:
        active = ch_active[ap]
        if active:
            elapsed = now - ch_last[ap]
            if elapsed > 0.0:
                dec = elapsed * rate / len(active)
                for ue in active:
                    active[ue] -= dec
        ch_last[ap] = now

    def ch_reschedule(ap: int, now: float) -> None:
        ch_epoch[ap] += 1
        active = ch_active[ap]
        if active:
            push(now + min(active.values()) * len(active) / rate, _EV_CH_DONE, (ap, ch_epoch[ap]))

    def start_transmission(ue: int, now: float) -> None:
        tx_start[ue] = now
        if mode is SimMode.COMPUTE_ONLY:
            tx_end[ue] = now
            deliver(ue, now)
        else:
            ap = ap_of[ue]
            ch_advance(ap, now)
            ch_active[ap][ue] = frame_bits
            ch_reschedule(ap, now)

    def deliver(ue: int, now: float) -> None:
        if backhaul > 0.0:
            push(now + backhaul, _EV_PU_ARRIVE, ue)
        else:
            pu_enqueue(ue, now)

    def pu_enqueue(ue: int, now: float) -> None:
        q_arrival[ue] = now
        if service == 0.0:
            svc_start[ue] = now
            complete(ue, now)
            return
        pu = pu_of[ue]
        if pu_current[pu] < 0:
            pu_current[pu] = ue
            svc_start[ue] = now
            push(now + service, _EV_SVC_DONE, pu)
        else:
            pu_queue[pu].append(ue)

    def complete(ue: int, now: float) -> None:
        if warmup <= now <= duration:
            latency = now - tx_start[ue]
            lat.append(latency)
            tr.append(tx_end[ue] - tx_start[ue])
            wt.append(svc_start[ue] - q_arrival[ue])
            if check_frame_bound and latency > latency_bound * (1.0 + 1e-9):
                raise FrameBoundViolation(
                    f"frame latency {latency:.9f}s exceeds bound {latency_bound:.9f}s"
                )
        start_transmission(ue, now)

    # Initial transmissions, in user order.
    if config.start_stagger == 0.0:
        for ue in range(total):
            start_transmission(ue, 0.0)
    else:
        for ue in range(total):
            push(ue * config.start_stagger, _EV_START_TX, ue)

    while heap:
        now, _, kind, arg = heapq.heappop(heap)
        if now > duration:
            break
        if kind == _EV_CH_DONE:
            ap, epoch = arg
            if epoch != ch_epoch[ap]:
                continue  # superseded by a later membership change
            ch_advance(ap, now)
            active = ch_active[ap]
            done = sorted(ue for ue, rem in active.items() if rem <= bits_tol)
            for ue in done:
                del active[ue]
                tx_end[ue] = now
            for ue in done:
                deliver(ue, now)
            ch_reschedule(ap, now)
        elif kind == _EV_SVC_DONE:
            pu = arg
            ue = pu_current[pu]
            queue = pu_queue[pu]
            if pu_head[pu] < len(queue):
                nxt = queue[pu_head[pu]]
                pu_head[pu] += 1
                if pu_head[pu] > 4096:  # reclaim the consumed prefix
                    del queue[: pu_head[pu]]
                    pu_head[pu] = 0
                pu_current[pu] = nxt
                svc_start[nxt] = now
                push(now + service, _EV_SVC_DONE, pu)
            else:
                pu_current[pu] = -1
            complete(ue, now)
        elif kind == _EV_PU_ARRIVE:
            pu_enqueue(arg, now)
        else:  # _EV_START_TX
            start_transmission(arg, now)

    count = len(lat)
    if count == 0:
        return SimResult(0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, no_samples=True)

    ordered = sorted(lat)

    def nearest_rank(q: float) -> float:
        return ordered[max(0, math.ceil(q * count) - 1)]

    return SimResult(
        frames_completed=count,
        mean_latency=sum(lat) / count,
        p50_latency=nearest_rank(0.50),
        p95_latency=nearest_rank(0.95),
        max_latency=ordered[-1],
        min_latency=ordered[0],
        mean_transmit=sum(tr) / count,
        mean_queue_wait=sum(wt) / count,
        mean_service=service,
        per_user_throughput=count / ((duration - warmup) * total),
    )


@dataclass(frozen=True)
class ValidationRecord:
    """One simulation-vs-model comparison point."""

    mode: SimMode
    users_per_ap: int
    analytical: float  # seconds, model prediction for this mode
    simulated_mean: float
    simulated_min: float
    simulated_max: float
    abs_gap: float
    rel_gap: float
    passed: bool
    frames_completed: int


#: Steady-state agreement tolerance for the single-resource modes.
EXACT_REL_TOL = 1e-9


def analytical_prediction(config: SimConfig) -> float:
    """The closed-form latency the simulation is validated against."""
    scenario = Scenario(
        total_users=config.total_users,
        ap_count=config.ap_count,
        architecture=config.architecture,
        channel=config.channel,
        platform=config.platform,
        frame=config.frame,
    )
    breakdown = system_latency(scenario)
    if config.mode is SimMode.WIRELESS_ONLY:
        return breakdown.wireless + breakdown.backhaul
    if config.mode is SimMode.COMPUTE_ONLY:
        return breakdown.processing + breakdown.backhaul
    return breakdown.total


def validate_against_model(config: SimConfig) -> ValidationRecord:
    """Run the simulation and compare its steady state with the model.

    Pass rules: in the single-resource modes (wireless-only, compute-only)
    every post-warmup frame must match the closed form within
    ``EXACT_REL_TOL`` relative. In combined mode the simulated mean must not
    exceed the analytical total and every frame must respect the closed-loop
    worst-case bound (checked during the run).
    """
    result = run(config, check_frame_bound=config.mode is SimMode.COMBINED)
    expected = analytical_prediction(config)
    abs_gap = abs(result.mean_latency - expected)
    rel_gap = abs_gap / expected if expected > 0 else abs_gap
    if result.no_samples:
        passed = False
    elif config.mode is SimMode.COMBINED:
        passed = result.mean_latency <= expected * (1.0 + EXACT_REL_TOL)
    else:
        spread = max(
            abs(result.min_latency - expected), abs(result.max_latency - expected)
        )
        passed = rel_gap <= EXACT_REL_TOL and spread <= expected * EXACT_REL_TOL
    return ValidationRecord(
        mode=config.mode,
        users_per_ap=config.users_per_ap,
        analytical=expected,
        simulated_mean=result.mean_latency,
        simulated_min=result.min_latency,
        simulated_max=result.max_latency,
        abs_gap=abs_gap,
        rel_gap=rel_gap,
        passed=passed,
        frames_completed=result.frames_completed,
    )
