import assert from "node:assert/strict";
import { execFileSync } from "node:child_process";
import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, it } from "node:test";

const CLI = join(__dirname, "..", "..", "dist", "cli.js");
const FIXTURES = join(__dirname, "..", "..", "test", "fixtures");

function run(args: string[]): { code: number; stdout: string; stderr: string } {
  try {
    const stdout = execFileSync("node", [CLI, ...args], { encoding: "utf8" });
    return { code: 0, stdout, stderr: "" };
  } catch (err: any) {
    return { code: err.status, stdout: err.stdout ?? "", stderr: err.stderr ?? "" };
  }
}

// requires `npm run build` first
describe("render CLI", { skip: !existsSync(CLI) }, () => {
  it("writes an achievability map SVG", () => {
    const out = join(mkdtempSync(join(tmpdir(), "figs-")), "map.svg");
    const result = run([
      "--kind", "achievability-map",
      "--input", join(FIXTURES, "map_450.csv"),
      "--out", out,
    ]);
    assert.equal(result.code, 0);
    assert.ok(readFileSync(out, "utf8").includes("<svg"));
  });

  it("repeated runs write byte-identical files", () => {
    const dir = mkdtempSync(join(tmpdir(), "figs-"));
    const argsFor = (name: string) => [
      "--kind", "latency-curve",
      "--input", join(FIXTURES, "validation.json"),
      "--out", join(dir, name),
    ];
    assert.equal(run(argsFor("a.svg")).code, 0);
    assert.equal(run(argsFor("b.svg")).code, 0);
    assert.deepEqual(readFileSync(join(dir, "a.svg")), readFileSync(join(dir, "b.svg")));
  });

  it("exits 1 naming the missing column on schema mismatch", () => {
    const out = join(mkdtempSync(join(tmpdir(), "figs-")), "bad.svg");
    const result = run([
      "--kind", "achievability-map",
      "--input", join(FIXTURES, "validation.json"),
      "--out", out,
    ]);
    assert.equal(result.code, 1);
    assert.ok(result.stderr.includes("missing column: users"));
  });

  it("exits 2 on an unknown kind", () => {
    const result = run(["--kind", "pie-chart", "--input", "x", "--out", "y"]);
    assert.equal(result.code, 2);
  });

  it("exits 1 on a missing input file", () => {
    const result = run([
      "--kind", "fit-curve",
      "--input", join(FIXTURES, "absent.csv"),
      "--out", join(tmpdir(), "z.svg"),
    ]);
    assert.equal(result.code, 1);
    assert.ok(result.stderr.includes("cannot read"));
  });
});
