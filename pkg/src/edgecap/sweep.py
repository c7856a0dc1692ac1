"""Achievability sweeps: which responsiveness class each deployment point meets.

Evaluates a Cartesian grid of (channel, architecture, platform, user count,
AP count) points with the closed-form model and labels every cell with the
most stringent satisfiable requirement. Selected cells can be spot-checked
with the simulator.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from . import desim
from .model import (
    Architecture,
    DEFAULT_REQUIREMENTS,
    FrameSpec,
    LatencyBreakdown,
    PlatformProfile,
    Requirement,
    Scenario,
    WirelessChannel,
    best_requirement,
    system_latency,
)

DEFAULT_USER_COUNTS = (2, 10, 25, 50, 100, 200, 400, 700, 1000, 1400)
DEFAULT_AP_COUNTS = (1, 3, 5, 10, 21, 35, 53, 70, 88, 105)
DEFAULT_GOODPUTS = (450e6, 1e9)

CSV_HEADER = (
    "users,aps,architecture,platform,goodput_mbps,n_per_ap,"
    "l_wireless_ms,l_processing_ms,l_backhaul_ms,l_total_ms,best_requirement"
)


@dataclass(frozen=True)
class SweepGrid:
    user_counts: Sequence[int] = DEFAULT_USER_COUNTS
    ap_counts: Sequence[int] = DEFAULT_AP_COUNTS
    architectures: Sequence[Architecture] = (
        Architecture.CENTRALIZED,
        Architecture.DISTRIBUTED,
    )
    platforms: Sequence[PlatformProfile] = ()
    channels: Sequence[WirelessChannel] = tuple(
        WirelessChannel(goodput=r) for r in DEFAULT_GOODPUTS
    )
    frame: FrameSpec = FrameSpec()
    requirements: Sequence[Requirement] = DEFAULT_REQUIREMENTS

    def __post_init__(self) -> None:
        for name in ("user_counts", "ap_counts", "architectures", "platforms", "channels", "requirements"):
            if not getattr(self, name):
                raise ValueError(f"sweep grid field {name} must be nonempty")
        budgets = [r.l_required for r in self.requirements]
        if budgets != sorted(budgets):
            raise ValueError("requirements must be sorted ascending by latency budget")


@dataclass(frozen=True)
class AchievabilityCell:
    users: int
    aps: int
    architecture: Architecture
    platform: str
    goodput: float  # bits per second
    n_per_ap: int
    breakdown: LatencyBreakdown
    best: Optional[str]  # requirement name, or None


def run_sweep(grid: SweepGrid) -> List[AchievabilityCell]:
    """Evaluate every grid point analytically, row-major over
    (channel, architecture, platform, users, aps)."""
    cells = []
    for channel in grid.channels:
        for arch in grid.architectures:
            for platform in grid.platforms:
                for users in grid.user_counts:
                    for aps in grid.ap_counts:
                        scenario = Scenario(
                            total_users=users,
                            ap_count=aps,
                            architecture=arch,
                            channel=channel,
                            platform=platform,
                            frame=grid.frame,
                        )
                        best = best_requirement(scenario, grid.requirements)
                        cells.append(
                            AchievabilityCell(
                                users=users,
                                aps=aps,
                                architecture=arch,
                                platform=platform.name,
                                goodput=channel.goodput,
                                n_per_ap=scenario.users_per_ap,
                                breakdown=system_latency(scenario),
                                best=best.name if best else None,
                            )
                        )
    return cells


def _cell_row(cell: AchievabilityCell) -> List[str]:
    bd = cell.breakdown
    return [
        str(cell.users),
        str(cell.aps),
        cell.architecture.value,
        cell.platform,
        repr(cell.goodput / 1e6),
        str(cell.n_per_ap),
        repr(bd.wireless * 1e3),
        repr(bd.processing * 1e3),
        repr(bd.backhaul * 1e3),
        repr(bd.total * 1e3),
        cell.best if cell.best else "none",
    ]


def cells_to_csv(cells: Sequence[AchievabilityCell]) -> str:
    """Render cells as the interchange CSV (deterministic byte-for-byte)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_HEADER.split(","))
    for cell in cells:
        writer.writerow(_cell_row(cell))
    return out.getvalue()


def cells_from_csv(text: str) -> List[AchievabilityCell]:
    """Parse the interchange CSV back into cells."""
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header != CSV_HEADER.split(","):
        raise ValueError(f"unexpected sweep CSV header: {header}")
    cells = []
    for row in reader:
        if not row:
            continue
        (users, aps, arch, platform, mbps, n, lw, lp, lb, lt, best) = row
        cells.append(
            AchievabilityCell(
                users=int(users),
                aps=int(aps),
                architecture=Architecture(arch),
                platform=platform,
                goodput=float(mbps) * 1e6,
                n_per_ap=int(n),
                breakdown=LatencyBreakdown(
                    wireless=float(lw) * 1e-3,
                    processing=float(lp) * 1e-3,
                    backhaul=float(lb) * 1e-3,
                    total=float(lt) * 1e-3,
                ),
                best=None if best == "none" else best,
            )
        )
    return cells


def cells_to_json(cells: Sequence[AchievabilityCell]) -> str:
    """JSON mirror of the CSV, same field names."""
    keys = CSV_HEADER.split(",")
    rows = []
    for cell in cells:
        raw = _cell_row(cell)
        rows.append(
            {
                key: (value if key in ("architecture", "platform", "best_requirement") else float(value))
                for key, value in zip(keys, raw)
            }
        )
    return json.dumps(rows, indent=2) + "\n"


@dataclass(frozen=True)
class SpotCheck:
    """Simulation cross-check of one sweep cell."""

    cell: AchievabilityCell
    mode: desim.SimMode
    simulated_mean: float
    consistent: bool
    note: str


def _spot_check_one(
    args: Tuple[AchievabilityCell, PlatformProfile, Sequence[Requirement], float, float]
) -> SpotCheck:
    cell, platform, requirements, duration, warmup = args
    by_name = {r.name: r for r in requirements}
    channel = WirelessChannel(goodput=cell.goodput, backhaul_latency=cell.breakdown.backhaul)
    lr = requirements[-1]

    if cell.best is None and cell.breakdown.processing > lr.l_required:
        # Processing alone blows the loosest budget; the compute-only steady
        # state equals the closed form, so the simulation must also exceed it.
        mode = desim.SimMode.COMPUTE_ONLY
    else:
        mode = desim.SimMode.COMBINED

    config = desim.SimConfig(
        ap_count=cell.aps,
        users_per_ap=cell.n_per_ap,
        architecture=cell.architecture,
        frame=FrameSpec(),
        channel=channel,
        platform=platform,
        mode=mode,
        duration=duration,
        warmup=warmup,
    )
    result = desim.run(config)

    if cell.best is not None:
        budget = by_name[cell.best].l_required
        consistent = result.mean_latency <= budget * (1 + 1e-9)
        note = f"simulated mean within the {cell.best} budget"
    elif mode is desim.SimMode.COMPUTE_ONLY:
        consistent = result.mean_latency > lr.l_required
        note = "compute-only simulation also exceeds the loosest budget"
    else:
        # Wireless-capacity-limited cell: the latency can fit even though the
        # channel cannot sustain the required framerate, so only the
        # analytical framerate test applies.
        consistent = True
        note = "unsatisfiable due to wireless capacity; latency test not applicable"
    return SpotCheck(
        cell=cell, mode=mode, simulated_mean=result.mean_latency, consistent=consistent, note=note
    )


def spot_validate(
    cells: Sequence[AchievabilityCell],
    platforms: Sequence[PlatformProfile],
    requirements: Sequence[Requirement] = DEFAULT_REQUIREMENTS,
    duration: float = 60.0,
    warmup: float = 6.0,
    workers: int = 1,
) -> List[SpotCheck]:
    """Simulate selected cells and check they classify like the model.

    Note: the simulator places ``n_per_ap`` users on every AP, so a cell whose
    user total is not an exact multiple of its AP count is checked at the
    (slightly pessimistic) ceiling population.
    """
    by_name = {p.name: p for p in platforms}
    jobs = []
    for cell in cells:
        if cell.platform not in by_name:
            raise KeyError(f"no profile supplied for platform {cell.platform!r}")
        jobs.append((cell, by_name[cell.platform], tuple(requirements), duration, warmup))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_spot_check_one, jobs))
    return [_spot_check_one(job) for job in jobs]
