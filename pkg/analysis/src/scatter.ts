// Scatter comparison: paired per-instance times for two modes. Unsolved
// runs are mapped to the timeout ceiling so every paired instance yields
// a point; identical modes land on the diagonal by construction.

import { BenchRow, byMode, isSolved } from "./csv.js";

export interface ScatterPoint {
  instance: string;
  timeA: number;
  timeB: number;
}

export function scatterData(
  rows: BenchRow[],
  modeA: string,
  modeB: string,
  ceiling: number,
): ScatterPoint[] {
  const groups = byMode(rows);
  const a = groups.get(modeA);
  const b = groups.get(modeB);
  if (!a || !b) {
    throw new Error(`scatter modes not in CSV: ${modeA}, ${modeB}`);
  }
  const clock = (r: BenchRow): number => (isSolved(r) ? r.time : ceiling);
  const bByInstance = new Map(b.map((r) => [r.instance, r]));
  const points: ScatterPoint[] = [];
  for (const ra of a) {
    const rb = bByInstance.get(ra.instance);
    if (rb) {
      points.push({ instance: ra.instance, timeA: clock(ra), timeB: clock(rb) });
    }
  }
  points.sort((p, q) => (p.instance < q.instance ? -1 : p.instance > q.instance ? 1 : 0));
  return points;
}

export function scatterCsv(points: ScatterPoint[]): string {
  const lines = points.map((p) => `${p.instance},${p.timeA},${p.timeB}`);
  return ["instance,time_a,time_b", ...lines].join("\n") + "\n";
}
