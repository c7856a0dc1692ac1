"use strict";
/**
 * Parsers for the edgecap output file formats consumed by the renderer:
 * the achievability sweep CSV, the simulator validation JSON, and the
 * measurement / accuracy calibration CSVs.
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.SWEEP_COLUMNS = exports.FormatError = void 0;
exports.parseSweepCsv = parseSweepCsv;
exports.parseValidationJson = parseValidationJson;
exports.parseMeasurementsCsv = parseMeasurementsCsv;
exports.parseAccuracyCsv = parseAccuracyCsv;
exports.sniffCalibrationKind = sniffCalibrationKind;
/** Raised when an input file does not match its documented schema. */
class FormatError extends Error {
}
exports.FormatError = FormatError;
exports.SWEEP_COLUMNS = [
    "users",
    "aps",
    "architecture",
    "platform",
    "goodput_mbps",
    "n_per_ap",
    "l_wireless_ms",
    "l_processing_ms",
    "l_backhaul_ms",
    "l_total_ms",
    "best_requirement",
];
// ---------------------------------------------------------------------------
// CSV plumbing
// ---------------------------------------------------------------------------
/** Split a CSV into trimmed non-empty lines, skipping # comment lines. */
function csvLines(text) {
    return text
        .split(/\r?\n/)
        .map((line) => line.trim())
        .filter((line) => line.length > 0 && !line.startsWith("#"));
}
/** Validate a header against expected column names; name what is missing. */
function checkHeader(found, expected) {
    for (const column of expected) {
        if (!found.includes(column)) {
            throw new FormatError(`missing column: ${column}`);
        }
    }
    for (const column of found) {
        if (!expected.includes(column)) {
            throw new FormatError(`unexpected column: ${column}`);
        }
    }
}
function toNumber(raw, column, line) {
    const value = Number(raw);
    if (raw === "" || !Number.isFinite(value)) {
        throw new FormatError(`line ${line}: column ${column} is not a number: ${raw}`);
    }
    return value;
}
// ---------------------------------------------------------------------------
// Sweep CSV
// ---------------------------------------------------------------------------
function parseSweepCsv(text) {
    const lines = csvLines(text);
    if (lines.length === 0) {
        throw new FormatError("missing column: users (empty file)");
    }
    const header = lines[0].split(",");
    checkHeader(header, exports.SWEEP_COLUMNS);
    const index = new Map(header.map((name, i) => [name, i]));
    const cells = [];
    for (let i = 1; i < lines.length; i++) {
        const parts = lines[i].split(",");
        if (parts.length !== header.length) {
            throw new FormatError(`line ${i + 1}: expected ${header.length} fields, got ${parts.length}`);
        }
        const field = (name) => parts[index.get(name)];
        const best = field("best_requirement");
        if (!["HR", "MR", "LR", "none"].includes(best)) {
            throw new FormatError(`line ${i + 1}: unknown best_requirement: ${best}`);
        }
        cells.push({
            users: toNumber(field("users"), "users", i + 1),
            aps: toNumber(field("aps"), "aps", i + 1),
            architecture: field("architecture"),
            platform: field("platform"),
            goodputMbps: toNumber(field("goodput_mbps"), "goodput_mbps", i + 1),
            nPerAp: toNumber(field("n_per_ap"), "n_per_ap", i + 1),
            totalMs: toNumber(field("l_total_ms"), "l_total_ms", i + 1),
            best: best,
        });
    }
    return cells;
}
// ---------------------------------------------------------------------------
// Validation JSON
// ---------------------------------------------------------------------------
function parseValidationJson(text) {
    let raw;
    try {
        raw = JSON.parse(text);
    }
    catch {
        throw new FormatError("input is not valid JSON");
    }
    for (const key of ["platform", "goodput_mbps", "n_max", "records"]) {
        if (!(key in raw)) {
            throw new FormatError(`missing column: ${key}`);
        }
    }
    const records = [];
    for (const [i, rec] of raw.records.entries()) {
        for (const key of ["mode", "n", "analytical_ms", "simulated_mean_ms", "passed"]) {
            if (!(key in rec)) {
                throw new FormatError(`record ${i}: missing column: ${key}`);
            }
        }
        records.push({
            mode: rec.mode,
            n: rec.n,
            analyticalMs: rec.analytical_ms,
            simulatedMeanMs: rec.simulated_mean_ms,
            passed: rec.passed,
        });
    }
    return {
        platform: raw.platform,
        goodputMbps: raw.goodput_mbps,
        nMax: raw.n_max,
        records,
    };
}
// ---------------------------------------------------------------------------
// Calibration CSVs
// ---------------------------------------------------------------------------
function parseMeasurementsCsv(text) {
    const lines = csvLines(text);
    if (lines.length === 0) {
        throw new FormatError("missing column: platform (empty file)");
    }
    checkHeader(lines[0].split(","), ["platform", "side_pixels", "inference_ms"]);
    return lines.slice(1).map((line, i) => {
        const parts = line.split(",");
        if (parts.length !== 3) {
            throw new FormatError(`line ${i + 2}: expected 3 fields, got ${parts.length}`);
        }
        return {
            platform: parts[0],
            side: toNumber(parts[1], "side_pixels", i + 2),
            inferenceMs: toNumber(parts[2], "inference_ms", i + 2),
        };
    });
}
function parseAccuracyCsv(text) {
    const lines = csvLines(text);
    if (lines.length === 0) {
        throw new FormatError("missing column: side_pixels (empty file)");
    }
    checkHeader(lines[0].split(","), ["side_pixels", "mean_accuracy"]);
    return lines.slice(1).map((line, i) => {
        const parts = line.split(",");
        if (parts.length !== 2) {
            throw new FormatError(`line ${i + 2}: expected 2 fields, got ${parts.length}`);
        }
        return {
            side: toNumber(parts[0], "side_pixels", i + 2),
            accuracy: toNumber(parts[1], "mean_accuracy", i + 2),
        };
    });
}
/** Sniff which calibration format a CSV is, by header. */
function sniffCalibrationKind(text) {
    const lines = csvLines(text);
    const header = lines.length > 0 ? lines[0] : "";
    if (header.startsWith("platform,"))
        return "measurements";
    if (header.startsWith("side_pixels,"))
        return "accuracy";
    throw new FormatError("missing column: platform (or side_pixels); unrecognized header");
}
