"use strict";
/** Minimal deterministic SVG string builder. */
Object.defineProperty(exports, "__esModule", { value: true });
exports.escapeXml = escapeXml;
exports.fmt = fmt;
exports.tag = tag;
exports.rect = rect;
exports.text = text;
exports.line = line;
exports.circle = circle;
exports.polyline = polyline;
exports.document = document;
function escapeXml(text) {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}
/** Fixed-precision coordinates keep output byte-stable across runs. */
function fmt(value) {
    return value.toFixed(2);
}
function tag(name, attrs, body) {
    const parts = Object.entries(attrs)
        .map(([key, value]) => `${key}="${escapeXml(String(value))}"`)
        .join(" ");
    if (body === undefined)
        return `<${name} ${parts}/>`;
    return `<${name} ${parts}>${body}</${name}>`;
}
function rect(x, y, w, h, attrs) {
    return tag("rect", { x: fmt(x), y: fmt(y), width: fmt(w), height: fmt(h), ...attrs });
}
function text(x, y, content, attrs = {}) {
    return tag("text", { x: fmt(x), y: fmt(y), "font-family": "sans-serif", ...attrs }, escapeXml(content));
}
function line(x1, y1, x2, y2, attrs) {
    return tag("line", { x1: fmt(x1), y1: fmt(y1), x2: fmt(x2), y2: fmt(y2), ...attrs });
}
function circle(cx, cy, r, attrs) {
    return tag("circle", { cx: fmt(cx), cy: fmt(cy), r: fmt(r), ...attrs });
}
function polyline(points, attrs) {
    const joined = points.map(([x, y]) => `${fmt(x)},${fmt(y)}`).join(" ");
    return tag("polyline", { points: joined, fill: "none", ...attrs });
}
function document(width, height, body) {
    return [
        `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
        ...body,
        "</svg>",
        "",
    ].join("\n");
}
