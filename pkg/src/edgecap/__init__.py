"""edgecap: capacity planning for edge-deployed AR pipelines."""

from .model import (
    Architecture,
    DEFAULT_REQUIREMENTS,
    FrameSpec,
    HIGH_RESPONSIVENESS,
    LatencyBreakdown,
    LOW_RESPONSIVENESS,
    MID_RESPONSIVENESS,
    PlatformProfile,
    Requirement,
    Scenario,
    WirelessChannel,
    best_requirement,
    check_requirement,
    frame_size_bits,
    inference_latency,
    max_users,
    processing_latency,
    system_latency,
    wireless_latency,
)
from .calibration import (
    AccuracyPoint,
    CalibrationError,
    FitReport,
    MeasurementSample,
    fit_platform,
    generate_samples,
    parse_accuracy,
    parse_measurements,
    preset,
    presets,
    select_resolution,
)
from .desim import SimConfig, SimMode, SimResult, ValidationRecord, run, validate_against_model
from .sweep import AchievabilityCell, SweepGrid, run_sweep, spot_validate

__version__ = "0.1.0"
