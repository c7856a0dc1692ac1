/**
 * Parsers for the edgecap output file formats consumed by the renderer:
 * the achievability sweep CSV, the simulator validation JSON, and the
 * measurement / accuracy calibration CSVs.
 */

/** Raised when an input file does not match its documented schema. */
export class FormatError extends Error {}

export const SWEEP_COLUMNS = [
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
] as const;

export interface SweepCell {
  users: number;
  aps: number;
  architecture: string;
  platform: string;
  goodputMbps: number;
  nPerAp: number;
  totalMs: number;
  best: "HR" | "MR" | "LR" | "none";
}

export interface ValidationRecord {
  mode: string;
  n: number;
  analyticalMs: number;
  simulatedMeanMs: number;
  passed: boolean;
}

export interface ValidationReport {
  platform: string;
  goodputMbps: number;
  nMax: Record<string, number>;
  records: ValidationRecord[];
}

export interface MeasurementRow {
  platform: string;
  side: number;
  inferenceMs: number;
}

export interface AccuracyRow {
  side: number;
  accuracy: number;
}

// ---------------------------------------------------------------------------
// CSV plumbing
// ---------------------------------------------------------------------------

/** Split a CSV into trimmed non-empty lines, skipping # comment lines. */
function csvLines(text: string): string[] {
  return text
    .split(/\r?\n/)
    .map((line) => line.trim())
    .filter((line) => line.length > 0 && !line.startsWith("#"));
}

/** Validate a header against expected column names; name what is missing. */
function checkHeader(found: string[], expected: readonly string[]): void {
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

function toNumber(raw: string, column: string, line: number): number {
  const value = Number(raw);
  if (raw === "" || !Number.isFinite(value)) {
    throw new FormatError(`line ${line}: column ${column} is not a number: ${raw}`);
  }
  return value;
}

// ---------------------------------------------------------------------------
// Sweep CSV
// ---------------------------------------------------------------------------

export function parseSweepCsv(text: string): SweepCell[] {
  const lines = csvLines(text);
  if (lines.length === 0) {
    throw new FormatError("missing column: users (empty file)");
  }
  const header = lines[0].split(",");
  checkHeader(header, SWEEP_COLUMNS);
  const index = new Map(header.map((name, i) => [name, i]));
  const cells: SweepCell[] = [];
  for (let i = 1; i < lines.length; i++) {
    const parts = lines[i].split(",");
    if (parts.length !== header.length) {
      throw new FormatError(`line ${i + 1}: expected ${header.length} fields, got ${parts.length}`);
    }
    const field = (name: string) => parts[index.get(name)!];
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
      best: best as SweepCell["best"],
    });
  }
  return cells;
}

// ---------------------------------------------------------------------------
// Validation JSON
// ---------------------------------------------------------------------------

export function parseValidationJson(text: string): ValidationReport {
  let raw: any;
  try {
    raw = JSON.parse(text);
  } catch {
    throw new FormatError("input is not valid JSON");
  }
  for (const key of ["platform", "goodput_mbps", "n_max", "records"]) {
    if (!(key in raw)) {
      throw new FormatError(`missing column: ${key}`);
    }
  }
  const records: ValidationRecord[] = [];
  for (const [i, rec] of (raw.records as any[]).entries()) {
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

export function parseMeasurementsCsv(text: string): MeasurementRow[] {
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

export function parseAccuracyCsv(text: string): AccuracyRow[] {
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
export function sniffCalibrationKind(text: string): "measurements" | "accuracy" {
  const lines = csvLines(text);
  const header = lines.length > 0 ? lines[0] : "";
  if (header.startsWith("platform,")) return "measurements";
  if (header.startsWith("side_pixels,")) return "accuracy";
  throw new FormatError("missing column: platform (or side_pixels); unrecognized header");
}
