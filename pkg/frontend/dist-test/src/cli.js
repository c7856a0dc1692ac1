#!/usr/bin/env node
"use strict";
/**
 * Renders an SVG figure from an edgecap output file.
 *
 * Usage:
 *   render --kind achievability-map --input map.csv --out fig.svg
 *   render --kind latency-curve --input validation.json --out fig.svg
 *   render --kind fit-curve --input measurements.csv --out fig.svg
 */
Object.defineProperty(exports, "__esModule", { value: true });
exports.main = main;
const fs_1 = require("fs");
const commander_1 = require("commander");
const formats_1 = require("./formats");
const figures_1 = require("./figures");
const KINDS = ["achievability-map", "latency-curve", "fit-curve"];
function main(argv) {
    const program = new commander_1.Command();
    program
        .name("render")
        .description("Render an SVG figure from an edgecap output file")
        .requiredOption("--kind <kind>", `figure kind: ${KINDS.join(", ")}`)
        .requiredOption("--input <path>", "sweep CSV, validation JSON, or calibration CSV")
        .requiredOption("--out <path>", "SVG file to write")
        .exitOverride();
    let opts;
    try {
        program.parse(argv, { from: "user" });
        opts = program.opts();
    }
    catch {
        return 2;
    }
    if (!KINDS.includes(opts.kind)) {
        process.stderr.write(`error: unknown figure kind: ${opts.kind}\n`);
        return 2;
    }
    let inputText;
    try {
        inputText = (0, fs_1.readFileSync)(opts.input, "utf8");
    }
    catch (err) {
        process.stderr.write(`error: cannot read ${opts.input}: ${err.message}\n`);
        return 1;
    }
    let svg;
    try {
        svg = (0, figures_1.render)(opts.kind, inputText);
    }
    catch (err) {
        if (err instanceof formats_1.FormatError) {
            process.stderr.write(`error: ${opts.input}: ${err.message}\n`);
            return 1;
        }
        throw err;
    }
    try {
        (0, fs_1.writeFileSync)(opts.out, svg);
    }
    catch (err) {
        process.stderr.write(`error: cannot write ${opts.out}: ${err.message}\n`);
        return 1;
    }
    process.stdout.write(`wrote ${opts.out}\n`);
    return 0;
}
if (require.main === module) {
    process.exit(main(process.argv.slice(2)));
}
