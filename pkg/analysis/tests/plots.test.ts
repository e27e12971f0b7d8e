import { describe, expect, it } from "vitest";
import fs from "node:fs";
import path from "node:path";
import { fileURLToPath } from "node:url";

import { makeFixtureCsv } from "../scripts/make_fixture.js";
import { cactusCsv, cactusData } from "../src/cactus.js";
import { BenchRow, parseResultsCsv } from "../src/csv.js";
import { levelRatio, levelsCsv } from "../src/levels.js";
import { scatterCsv, scatterData } from "../src/scatter.js";
import { svgCactus, svgScatter } from "../src/svg.js";

const here = path.dirname(fileURLToPath(import.meta.url));
const FIXTURE = path.join(here, "fixtures", "bench_full.csv");

const row = (
  instance: string,
  mode: string,
  verdict: string,
  time: number,
  level = 5,
): BenchRow => ({
  instance,
  mode,
  verdict,
  time,
  level,
  clauses: 10,
  genCalls: 3,
  seed: 0,
});

describe("fixture provenance", () => {
  it("the committed fixture is exactly what the generator emits", () => {
    expect(fs.readFileSync(FIXTURE, "utf8")).toBe(makeFixtureCsv());
  });
});

describe("cactus data", () => {
  const rows = parseResultsCsv(fs.readFileSync(FIXTURE, "utf8"));
  const series = cactusData(rows);

  it("one point per solved instance", () => {
    expect(series.get("standard")!.length).toBe(603);
    expect(series.get("mab")!.length).toBe(653);
  });

  it("series are sorted ascending", () => {
    for (const times of series.values()) {
      for (let i = 1; i < times.length; i += 1) {
        expect(times[i]! >= times[i - 1]!).toBe(true);
      }
    }
  });

  it("csv emission is deterministic with rank column", () => {
    const a = cactusCsv(series.get("mab")!);
    expect(a).toBe(cactusCsv(series.get("mab")!));
    expect(a.split("\n")[0]).toBe("rank,time");
    expect(a.split("\n")[1]).toMatch(/^1,/);
  });
});

describe("scatter data", () => {
  const rows = [
    row("a", "x", "safe", 2),
    row("b", "x", "timeout", 3600),
    row("only_x", "x", "safe", 1),
    row("a", "y", "unsafe", 8),
    row("b", "y", "safe", 30),
  ];

  it("pairs common instances and maps unsolved to the ceiling", () => {
    const pts = scatterData(rows, "x", "y", 3600);
    expect(pts).toEqual([
      { instance: "a", timeA: 2, timeB: 8 },
      { instance: "b", timeA: 3600, timeB: 30 },
    ]);
  });

  it("identical modes land on the diagonal", () => {
    for (const p of scatterData(rows, "x", "x", 3600)) {
      expect(p.timeA).toBe(p.timeB);
    }
  });

  it("csv emission is stable", () => {
    const pts = scatterData(rows, "x", "y", 3600);
    expect(scatterCsv(pts)).toBe(scatterCsv(pts));
    expect(scatterCsv(pts).split("\n")[0]).toBe("instance,time_a,time_b");
  });
});

describe("termination-level ratios", () => {
  const rows = [
    row("a", "x", "safe", 1, 3),
    row("b", "x", "safe", 1, 7),
    row("c", "x", "unsafe", 1, 2),
    row("d", "x", "safe", 1, 9),
    row("a", "y", "safe", 1, 4),
    row("b", "y", "timeout", 3600, 0),
    row("c", "y", "unsafe", 1, 0),
    row("d", "y", "safe", 1, 6),
  ];

  it("pairs levels for instances solved by both and divides", () => {
    const pairs = levelRatio(rows, "x", "y");
    expect(pairs).toEqual([
      { instance: "a", levelA: 3, levelB: 4, ratio: 0.75 },
      { instance: "d", levelA: 9, levelB: 6, ratio: 1.5 },
    ]);
    expect(pairs[0]!.ratio).toBeLessThan(1); // below break-even
  });

  it("drops unsolved partners and zero reference levels", () => {
    const names = levelRatio(rows, "x", "y").map((p) => p.instance);
    expect(names).not.toContain("b");
    expect(names).not.toContain("c");
  });

  it("csv emission is stable", () => {
    const pairs = levelRatio(rows, "x", "y");
    expect(levelsCsv(pairs)).toBe(levelsCsv(pairs));
  });
});

describe("svg figures", () => {
  const rows = parseResultsCsv(fs.readFileSync(FIXTURE, "utf8"));

  it("cactus svg is well-formed and deterministic", () => {
    const series = cactusData(rows);
    const svg = svgCactus(series, 3600);
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    expect(svg).toContain("standard (603)");
    expect(svg).toContain("mab (653)");
    expect(svg).toBe(svgCactus(series, 3600));
  });

  it("scatter svg is well-formed and deterministic", () => {
    const pts = scatterData(rows, "standard", "mab", 3600);
    const svg = svgScatter(pts, 3600, "standard", "mab");
    expect(svg.startsWith("<svg ")).toBe(true);
    expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    expect(svg).toBe(svgScatter(pts, 3600, "standard", "mab"));
  });
});
