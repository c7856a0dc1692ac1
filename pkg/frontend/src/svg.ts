/** Minimal deterministic SVG string builder. */

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

/** Fixed-precision coordinates keep output byte-stable across runs. */
export function fmt(value: number): string {
  return value.toFixed(2);
}

export type Attrs = Record<string, string | number>;

export function tag(name: string, attrs: Attrs, body?: string): string {
  const parts = Object.entries(attrs)
    .map(([key, value]) => `${key}="${escapeXml(String(value))}"`)
    .join(" ");
  if (body === undefined) return `<${name} ${parts}/>`;
  return `<${name} ${parts}>${body}</${name}>`;
}

export function rect(x: number, y: number, w: number, h: number, attrs: Attrs): string {
  return tag("rect", { x: fmt(x), y: fmt(y), width: fmt(w), height: fmt(h), ...attrs });
}

export function text(x: number, y: number, content: string, attrs: Attrs = {}): string {
  return tag(
    "text",
    { x: fmt(x), y: fmt(y), "font-family": "sans-serif", ...attrs },
    escapeXml(content),
  );
}

export function line(x1: number, y1: number, x2: number, y2: number, attrs: Attrs): string {
  return tag("line", { x1: fmt(x1), y1: fmt(y1), x2: fmt(x2), y2: fmt(y2), ...attrs });
}

export function circle(cx: number, cy: number, r: number, attrs: Attrs): string {
  return tag("circle", { cx: fmt(cx), cy: fmt(cy), r: fmt(r), ...attrs });
}

export function polyline(points: Array<[number, number]>, attrs: Attrs): string {
  const joined = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
  return tag("polyline", { points: joined, fill: "none", ...attrs });
}

export function document(width: number, height: number, body: string[]): string {
  return [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
    ...body,
    "</svg>",
    "",
  ].join("\n");
}
