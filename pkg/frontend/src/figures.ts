/**
 * Figure renderers. Each takes the text of an edgecap output file and
 * returns a complete SVG document string. Rendering is a pure function of
 * the input: identical text yields identical bytes.
 */

import {
  AccuracyRow,
  FormatError,
  MeasurementRow,
  SweepCell,
  ValidationReport,
  parseAccuracyCsv,
  parseMeasurementsCsv,
  parseSweepCsv,
  parseValidationJson,
  sniffCalibrationKind,
} from "./formats";
import { circle, document as svgDocument, fmt, line, polyline, rect, text } from "./svg";

/** Fixed class-to-color scale: tightest budget darkest, none lightest. */
export const REQUIREMENT_COLORS: Record<string, string> = {
  HR: "#08306b",
  MR: "#4292c6",
  LR: "#c6dbef",
  none: "#f7fbff",
};

const MODE_COLORS: Record<string, string> = {
  "wireless-only": "#1b7837",
  "compute-only": "#762a83",
  combined: "#d95f02",
};

const PLATFORM_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b"];

function emptyFigure(width: number, height: number, title: string): string {
  return svgDocument(width, height, [
    rect(0, 0, width, height, { fill: "#ffffff" }),
    text(width / 2, 24, title, { "text-anchor": "middle", "font-size": 14 }),
    text(width / 2, height / 2, "warning: no data rows in input", {
      "text-anchor": "middle",
      "font-size": 13,
      fill: "#b30000",
      class: "warning",
    }),
  ]);
}

// ---------------------------------------------------------------------------
// Achievability map
// ---------------------------------------------------------------------------

interface Panel {
  key: string;
  cells: SweepCell[];
}

/** One heatmap panel per (goodput, architecture, platform) combination. */
function groupPanels(cells: SweepCell[]): Panel[] {
  const panels = new Map<string, SweepCell[]>();
  for (const cell of cells) {
    const key = `${cell.goodputMbps} Mbps / ${cell.architecture} / ${cell.platform}`;
    if (!panels.has(key)) panels.set(key, []);
    panels.get(key)!.push(cell);
  }
  return [...panels.keys()].sort().map((key) => ({ key, cells: panels.get(key)! }));
}

export function renderAchievabilityMap(csvText: string): string {
  const cells = parseSweepCsv(csvText);
  if (cells.length === 0) {
    return emptyFigure(640, 360, "achievability map");
  }

  const userAxis = [...new Set(cells.map((c) => c.users))].sort((a, b) => a - b);
  const apAxis = [...new Set(cells.map((c) => c.aps))].sort((a, b) => a - b);
  const panels = groupPanels(cells);

  const cellSize = 16;
  const panelLeft = 64;
  const panelTop = 34;
  const panelWidth = panelLeft + apAxis.length * cellSize + 16;
  const panelHeight = panelTop + userAxis.length * cellSize + 30;
  const columns = Math.min(panels.length, 3);
  const rows = Math.ceil(panels.length / columns);
  const legendHeight = 40;
  const width = columns * panelWidth + 20;
  const height = rows * panelHeight + legendHeight + 20;

  const body: string[] = [rect(0, 0, width, height, { fill: "#ffffff" })];

  panels.forEach((panel, index) => {
    const originX = 10 + (index % columns) * panelWidth;
    const originY = 10 + Math.floor(index / columns) * panelHeight;
    body.push(
      text(originX + panelLeft, originY + 16, panel.key, { "font-size": 12 }),
    );
    // axis tick labels
    apAxis.forEach((aps, xi) => {
      body.push(
        text(originX + panelLeft + (xi + 0.5) * cellSize, originY + panelTop + userAxis.length * cellSize + 14, String(aps), {
          "text-anchor": "middle",
          "font-size": 8,
        }),
      );
    });
    userAxis.forEach((users, yi) => {
      body.push(
        text(originX + panelLeft - 6, originY + panelTop + (yi + 0.72) * cellSize, String(users), {
          "text-anchor": "end",
          "font-size": 8,
        }),
      );
    });
    for (const cell of panel.cells) {
      const xi = apAxis.indexOf(cell.aps);
      const yi = userAxis.indexOf(cell.users);
      body.push(
        rect(
          originX + panelLeft + xi * cellSize,
          originY + panelTop + yi * cellSize,
          cellSize - 1,
          cellSize - 1,
          {
            class: "cell",
            fill: REQUIREMENT_COLORS[cell.best],
            "data-users": cell.users,
            "data-aps": cell.aps,
            "data-architecture": cell.architecture,
            "data-platform": cell.platform,
            "data-goodput-mbps": cell.goodputMbps,
            "data-best": cell.best,
          },
        ),
      );
    }
  });

  // fixed legend, tightest budget first
  const legendY = height - legendHeight + 8;
  (["HR", "MR", "LR", "none"] as const).forEach((name, i) => {
    const x = 20 + i * 110;
    body.push(rect(x, legendY, 14, 14, {
      class: "legend-swatch",
      fill: REQUIREMENT_COLORS[name],
      stroke: "#888888",
      "data-best": name,
    }));
    body.push(text(x + 20, legendY + 11, name, { "font-size": 11 }));
  });
  body.push(text(20, legendY + 28, "best satisfiable requirement per (users, APs) point", { "font-size": 10, fill: "#555555" }));

  return svgDocument(width, height, body);
}

// ---------------------------------------------------------------------------
// Latency curve
// ---------------------------------------------------------------------------

export function renderLatencyCurve(jsonText: string): string {
  const report: ValidationReport = parseValidationJson(jsonText);
  const width = 640;
  const height = 420;
  if (report.records.length === 0) {
    return emptyFigure(width, height, "latency vs users");
  }

  const left = 64;
  const right = width - 20;
  const top = 40;
  const bottom = height - 50;

  const ns = report.records.map((r) => r.n);
  const nMin = Math.min(...ns);
  const nMax = Math.max(...ns);
  const msValues = report.records.flatMap((r) => [r.analyticalMs, r.simulatedMeanMs]);
  const msMax = Math.max(...msValues) * 1.08;

  const xAt = (n: number) => left + ((n - nMin) / Math.max(nMax - nMin, 1)) * (right - left);
  const yAt = (ms: number) => bottom - (ms / msMax) * (bottom - top);

  const body: string[] = [
    rect(0, 0, width, height, { fill: "#ffffff" }),
    text(width / 2, 20, `latency vs users per AP (${report.platform}, ${report.goodputMbps} Mbps)`, {
      "text-anchor": "middle",
      "font-size": 13,
    }),
    line(left, bottom, right, bottom, { stroke: "#000000" }),
    line(left, top, left, bottom, { stroke: "#000000" }),
    text((left + right) / 2, height - 14, "users per AP", { "text-anchor": "middle", "font-size": 11 }),
    text(16, (top + bottom) / 2, "latency (ms)", {
      "font-size": 11,
      transform: `rotate(-90 16 ${fmt((top + bottom) / 2)})`,
      "text-anchor": "middle",
    }),
  ];

  // x ticks at each user count
  for (const n of [...new Set(ns)].sort((a, b) => a - b)) {
    body.push(line(xAt(n), bottom, xAt(n), bottom + 4, { stroke: "#000000" }));
    body.push(text(xAt(n), bottom + 16, String(n), { "text-anchor": "middle", "font-size": 9 }));
  }
  // y ticks, 5 round intervals
  for (let i = 0; i <= 5; i++) {
    const ms = (msMax / 5) * i;
    body.push(line(left - 4, yAt(ms), left, yAt(ms), { stroke: "#000000" }));
    body.push(text(left - 8, yAt(ms) + 3, ms.toFixed(1), { "text-anchor": "end", "font-size": 9 }));
  }

  // capacity markers that fall inside the plotted range
  for (const [name, capacity] of Object.entries(report.nMax).sort()) {
    if (capacity >= nMin && capacity <= nMax) {
      body.push(line(xAt(capacity), top, xAt(capacity), bottom, {
        class: "capacity-marker",
        stroke: "#999999",
        "stroke-dasharray": "4 3",
        "data-requirement": name,
        "data-n": capacity,
      }));
      body.push(text(xAt(capacity) + 3, top + 12, `N_max ${name}`, { "font-size": 9, fill: "#666666" }));
    }
  }

  const modes = [...new Set(report.records.map((r) => r.mode))].sort();
  modes.forEach((mode, i) => {
    const records = report.records.filter((r) => r.mode === mode).sort((a, b) => a.n - b.n);
    const color = MODE_COLORS[mode] ?? "#333333";
    body.push(polyline(
      records.map((r) => [xAt(r.n), yAt(r.analyticalMs)] as [number, number]),
      { class: "analytical", stroke: color, "stroke-width": 1.5, "data-mode": mode },
    ));
    for (const r of records) {
      body.push(circle(xAt(r.n), yAt(r.simulatedMeanMs), 3, {
        class: "sim-point",
        fill: color,
        "data-mode": mode,
        "data-n": r.n,
        "data-analytical-ms": r.analyticalMs,
        "data-simulated-mean-ms": r.simulatedMeanMs,
        "data-passed": String(r.passed),
      }));
    }
    body.push(text(left + 8, top + 14 + i * 14, `${mode} (line: model, dots: simulated)`, {
      "font-size": 10,
      fill: color,
    }));
  });

  return svgDocument(width, height, body);
}

// ---------------------------------------------------------------------------
// Calibration curves
// ---------------------------------------------------------------------------

function renderXyCurves(
  title: string,
  yLabel: string,
  series: Array<{ label: string; color: string; points: Array<[number, number]>; cls: string; data: (p: [number, number]) => Record<string, string | number> }>,
): string {
  const width = 640;
  const height = 420;
  const left = 64;
  const right = width - 20;
  const top = 40;
  const bottom = height - 50;

  const xs = series.flatMap((s) => s.points.map((p) => p[0]));
  const ys = series.flatMap((s) => s.points.map((p) => p[1]));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  const yMax = Math.max(...ys) * 1.08;

  const xAt = (x: number) => left + ((x - xMin) / Math.max(xMax - xMin, 1)) * (right - left);
  const yAt = (y: number) => bottom - (y / yMax) * (bottom - top);

  const body: string[] = [
    rect(0, 0, width, height, { fill: "#ffffff" }),
    text(width / 2, 20, title, { "text-anchor": "middle", "font-size": 13 }),
    line(left, bottom, right, bottom, { stroke: "#000000" }),
    line(left, top, left, bottom, { stroke: "#000000" }),
    text((left + right) / 2, height - 14, "frame side (pixels)", { "text-anchor": "middle", "font-size": 11 }),
    text(16, (top + bottom) / 2, yLabel, {
      "font-size": 11,
      transform: `rotate(-90 16 ${fmt((top + bottom) / 2)})`,
      "text-anchor": "middle",
    }),
  ];
  for (let i = 0; i <= 5; i++) {
    const x = xMin + ((xMax - xMin) / 5) * i;
    const y = (yMax / 5) * i;
    body.push(line(xAt(x), bottom, xAt(x), bottom + 4, { stroke: "#000000" }));
    body.push(text(xAt(x), bottom + 16, x.toFixed(0), { "text-anchor": "middle", "font-size": 9 }));
    body.push(line(left - 4, yAt(y), left, yAt(y), { stroke: "#000000" }));
    body.push(text(left - 8, yAt(y) + 3, y.toFixed(2), { "text-anchor": "end", "font-size": 9 }));
  }

  series.forEach((s, i) => {
    const sorted = [...s.points].sort((a, b) => a[0] - b[0]);
    body.push(polyline(sorted.map((p) => [xAt(p[0]), yAt(p[1])] as [number, number]), {
      stroke: s.color,
      "stroke-width": 1.5,
    }));
    for (const p of sorted) {
      body.push(circle(xAt(p[0]), yAt(p[1]), 3, { class: s.cls, fill: s.color, ...s.data(p) }));
    }
    body.push(text(left + 8, top + 14 + i * 14, s.label, { "font-size": 10, fill: s.color }));
  });

  return svgDocument(width, height, body);
}

export function renderFitCurve(csvText: string): string {
  const kind = sniffCalibrationKind(csvText);
  if (kind === "measurements") {
    const rows: MeasurementRow[] = parseMeasurementsCsv(csvText);
    if (rows.length === 0) return emptyFigure(640, 420, "inference time vs resolution");
    const platforms = [...new Set(rows.map((r) => r.platform))].sort();
    return renderXyCurves(
      "inference time vs frame resolution",
      "inference time (ms)",
      platforms.map((platform, i) => ({
        label: platform,
        color: PLATFORM_COLORS[i % PLATFORM_COLORS.length],
        cls: "measurement-point",
        points: rows.filter((r) => r.platform === platform).map((r) => [r.side, r.inferenceMs] as [number, number]),
        data: (p) => ({ "data-platform": platform, "data-side": p[0], "data-inference-ms": p[1] }),
      })),
    );
  }
  const rows: AccuracyRow[] = parseAccuracyCsv(csvText);
  if (rows.length === 0) return emptyFigure(640, 420, "accuracy vs resolution");
  return renderXyCurves(
    "mean detection accuracy vs frame resolution",
    "mean accuracy",
    [
      {
        label: "mean accuracy",
        color: PLATFORM_COLORS[0],
        cls: "accuracy-point",
        points: rows.map((r) => [r.side, r.accuracy] as [number, number]),
        data: (p) => ({ "data-side": p[0], "data-accuracy": p[1] }),
      },
    ],
  );
}

// ---------------------------------------------------------------------------
// Dispatch
// ---------------------------------------------------------------------------

export type FigureKind = "achievability-map" | "latency-curve" | "fit-curve";

export function render(kind: FigureKind, inputText: string): string {
  switch (kind) {
    case "achievability-map":
      return renderAchievabilityMap(inputText);
    case "latency-curve":
      return renderLatencyCurve(inputText);
    case "fit-curve":
      return renderFitCurve(inputText);
    default:
      throw new FormatError(`unknown figure kind: ${kind}`);
  }
}
