#!/usr/bin/env node
/**
 * Renders an SVG figure from an edgecap output file.
 *
 * Usage:
 *   render --kind achievability-map --input map.csv --out fig.svg
 *   render --kind latency-curve --input validation.json --out fig.svg
 *   render --kind fit-curve --input measurements.csv --out fig.svg
 */

import { readFileSync, writeFileSync } from "fs";
import { Command } from "commander";
import { FormatError } from "./formats";
import { FigureKind, render } from "./figures";

const KINDS: FigureKind[] = ["achievability-map", "latency-curve", "fit-curve"];

export function main(argv: string[]): number {
  const program = new Command();
  program
    .name("render")
    .description("Render an SVG figure from an edgecap output file")
    .requiredOption("--kind <kind>", `figure kind: ${KINDS.join(", ")}`)
    .requiredOption("--input <path>", "sweep CSV, validation JSON, or calibration CSV")
    .requiredOption("--out <path>", "SVG file to write")
    .exitOverride();

  let opts: { kind: string; input: string; out: string };
  try {
    program.parse(argv, { from: "user" });
    opts = program.opts();
  } catch {
    return 2;
  }

  if (!KINDS.includes(opts.kind as FigureKind)) {
    process.stderr.write(`error: unknown figure kind: ${opts.kind}\n`);
    return 2;
  }

  let inputText: string;
  try {
    inputText = readFileSync(opts.input, "utf8");
  } catch (err) {
    process.stderr.write(`error: cannot read ${opts.input}: ${(err as Error).message}\n`);
    return 1;
  }

  let svg: string;
  try {
    svg = render(opts.kind as FigureKind, inputText);
  } catch (err) {
    if (err instanceof FormatError) {
      process.stderr.write(`error: ${opts.input}: ${err.message}\n`);
      return 1;
    }
    throw err;
  }

  try {
    writeFileSync(opts.out, svg);
  } catch (err) {
    process.stderr.write(`error: cannot write ${opts.out}: ${(err as Error).message}\n`);
    return 1;
  }
  process.stdout.write(`wrote ${opts.out}\n`);
  return 0;
}

if (require.main === module) {
  process.exit(main(process.argv.slice(2)));
}
