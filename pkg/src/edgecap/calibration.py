"""Calibration of the per-platform inference-latency curve.

Ingests measured inference times, fits the two-parameter curve
``t(s) = a + b * s**3`` by ordinary least squares, and ships the three
measured platform presets (a GPU server and two embedded boards).

File formats
------------
Measurement CSV:  header ``platform,side_pixels,inference_ms``; ``#`` comments.
Accuracy CSV:     header ``side_pixels,mean_accuracy``.
Profile JSON:     ``{"name": str, "a_ms": number, "b_ms_per_px3": number}``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from typing import List, Optional, Sequence

import numpy as np

from .model import PlatformProfile


class CalibrationError(ValueError):
    """Malformed calibration input (bad file row, degenerate design, ...)."""


@dataclass(frozen=True)
class MeasurementSample:
    platform: str
    side: int
    inference_time: float  # seconds

    def __post_init__(self) -> None:
        if self.side < 1:
            raise ValueError(f"side must be >= 1, got {self.side}")
        if not self.inference_time > 0:
            raise ValueError(f"inference time must be > 0, got {self.inference_time}")


@dataclass(frozen=True)
class AccuracyPoint:
    side: int
    mean_accuracy: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.mean_accuracy <= 1.0:
            raise ValueError(f"accuracy must be in [0, 1], got {self.mean_accuracy}")


@dataclass(frozen=True)
class FitReport:
    profile: PlatformProfile
    rmse: float  # seconds
    max_abs_residual: float  # seconds
    sample_count: int
    clamped: bool = False  # a negative OLS coefficient was clamped to 0


MEASUREMENT_HEADER = ("platform", "side_pixels", "inference_ms")
ACCURACY_HEADER = ("side_pixels", "mean_accuracy")

# Fitted (a, b) per platform, in ms and ms per cubic pixel.
_PRESETS_MS = (
    ("central-server", 3.23, 9.56e-10),
    ("coral-dev", 20.98, 3.37e-9),
    ("jetson-nano", 41.10, 7.15e-9),
)


def presets() -> List[PlatformProfile]:
    """The three measured platform profiles, converted to internal seconds."""
    return [PlatformProfile.from_ms(name, a, b) for name, a, b in _PRESETS_MS]


def preset(name: str) -> PlatformProfile:
    for p in presets():
        if p.name == name:
            return p
    known = ", ".join(n for n, _, _ in _PRESETS_MS)
    raise KeyError(f"unknown platform preset {name!r} (known: {known})")


def _data_rows(text: str, header: Sequence[str]):
    """Yield (line_number, row) for CSV data rows, validating the header."""
    reader = csv.reader(io.StringIO(text))
    header_seen = False
    for lineno, row in enumerate(reader, start=1):
        if not row or (row[0].lstrip().startswith("#")):
            continue
        cells = [c.strip() for c in row]
        if not header_seen:
            if cells != list(header):
                raise CalibrationError(
                    f"line {lineno}: expected header {','.join(header)!r}, got {','.join(cells)!r}"
                )
            header_seen = True
            continue
        if len(cells) != len(header):
            raise CalibrationError(
                f"line {lineno}: expected {len(header)} columns, got {len(cells)}"
            )
        yield lineno, cells
    if not header_seen:
        raise CalibrationError(f"missing header row {','.join(header)!r}")


def parse_measurements(text: str) -> List[MeasurementSample]:
    """Parse a measurement CSV into samples, in file order."""
    samples = []
    for lineno, (platform, side_s, ms_s) in _data_rows(text, MEASUREMENT_HEADER):
        try:
            side = int(side_s)
            ms = float(ms_s)
            samples.append(MeasurementSample(platform, side, ms * 1e-3))
        except ValueError as exc:
            raise CalibrationError(f"line {lineno}: {exc}") from exc
    return samples


def parse_accuracy(text: str) -> List[AccuracyPoint]:
    """Parse an accuracy CSV into points, in file order."""
    points = []
    for lineno, (side_s, acc_s) in _data_rows(text, ACCURACY_HEADER):
        try:
            points.append(AccuracyPoint(int(side_s), float(acc_s)))
        except ValueError as exc:
            raise CalibrationError(f"line {lineno}: {exc}") from exc
    return points


def fit_platform(samples: Sequence[MeasurementSample]) -> FitReport:
    """Least-squares fit of ``t = a + b * side**3`` over one platform's samples.

    Requires at least two samples with at least two distinct side values, all
    from the same platform. A negative optimum for ``a`` or ``b`` is clamped
    to zero (flagged in the report) so the profile invariants always hold;
    residual statistics are computed against the reported, clamped curve.
    """
    if len(samples) < 2:
        raise CalibrationError(f"need at least 2 samples, got {len(samples)}")
    names = {s.platform for s in samples}
    if len(names) != 1:
        raise CalibrationError(f"samples mix platforms: {sorted(names)}")
    sides = np.array([s.side for s in samples], dtype=float)
    if len(set(s.side for s in samples)) < 2:
        raise CalibrationError("degenerate design: need at least 2 distinct side values")
    times = np.array([s.inference_time for s in samples], dtype=float)

    design = np.column_stack([np.ones_like(sides), sides ** 3])
    (a, b), *_ = np.linalg.lstsq(design, times, rcond=None)

    clamped = a < 0 or b < 0
    a = max(a, 0.0)
    b = max(b, 0.0)
    profile = PlatformProfile(name=samples[0].platform, a=float(a), b=float(b))

    residuals = times - design @ np.array([a, b])
    rmse = float(math.sqrt(np.mean(residuals ** 2)))
    max_abs = float(np.max(np.abs(residuals)))
    return FitReport(
        profile=profile,
        rmse=rmse,
        max_abs_residual=max_abs,
        sample_count=len(samples),
        clamped=clamped,
    )


def generate_samples(
    profile: PlatformProfile, sides: Sequence[int]
) -> List[MeasurementSample]:
    """Noise-free synthetic samples lying exactly on a profile's curve."""
    return [
        MeasurementSample(profile.name, side, profile.predict(side)) for side in sides
    ]


def select_resolution(
    points: Sequence[AccuracyPoint], threshold: float
) -> Optional[int]:
    """Smallest side whose mean accuracy reaches the threshold, or None."""
    if not points:
        raise CalibrationError("accuracy table is empty")
    sides = [p.side for p in points]
    if len(set(sides)) != len(sides):
        raise CalibrationError("accuracy table has duplicate side values")
    qualifying = [p.side for p in points if p.mean_accuracy >= threshold]
    return min(qualifying) if qualifying else None


def profile_to_json(profile: PlatformProfile) -> str:
    """Serialize a profile to the interchange JSON (coefficients in ms)."""
    return json.dumps(
        {
            "name": profile.name,
            "a_ms": profile.a * 1e3,
            "b_ms_per_px3": profile.b * 1e3,
        },
        indent=2,
    ) + "\n"


def profile_from_json(text: str) -> PlatformProfile:
    """Parse the interchange profile JSON into a profile (internal seconds)."""
    try:
        obj = json.loads(text)
        return PlatformProfile.from_ms(
            str(obj["name"]), float(obj["a_ms"]), float(obj["b_ms_per_px3"])
        )
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise CalibrationError(f"invalid profile JSON: {exc}") from exc
