// Cactus plot data: for each mode, the solved-instance times sorted
// ascending. Plotting rank (1..k) against time gives the usual
// instances-solved-within-budget curve; a mode solving k instances
// yields a series of length k.

import { BenchRow, byMode, isSolved } from "./csv.js";

export function cactusData(rows: BenchRow[]): Map<string, number[]> {
  const out = new Map<string, number[]>();
  for (const [mode, rs] of byMode(rows)) {
    const times = rs.filter(isSolved).map((r) => r.time);
    times.sort((a, b) => a - b);
    out.set(mode, times);
  }
  return out;
}

export function cactusCsv(series: number[]): string {
  const lines = series.map((t, i) => `${i + 1},${t}`);
  return ["rank,time", ...lines].join("\n") + "\n";
}
