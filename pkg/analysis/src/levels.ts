// Termination-level comparison: for instances solved by both modes, the
// pair of final frame levels and their ratio level_a / level_b. A pair
// (3, 4) gives 0.75, below the break-even line at 1. Pairs where the
// reference level is zero (counterexample at the initial state) have no
// finite ratio and are dropped.

import { BenchRow, byMode, isSolved } from "./csv.js";

export interface LevelPair {
  instance: string;
  levelA: number;
  levelB: number;
  ratio: number;
}

export function levelRatio(
  rows: BenchRow[],
  modeA: string,
  modeB: string,
): LevelPair[] {
  const groups = byMode(rows);
  const a = groups.get(modeA);
  const b = groups.get(modeB);
  if (!a || !b) {
    throw new Error(`level modes not in CSV: ${modeA}, ${modeB}`);
  }
  const bByInstance = new Map(
    b.filter(isSolved).map((r) => [r.instance, r]),
  );
  const pairs: LevelPair[] = [];
  for (const ra of a) {
    if (!isSolved(ra)) continue;
    const rb = bByInstance.get(ra.instance);
    if (!rb || rb.level === 0) continue;
    pairs.push({
      instance: ra.instance,
      levelA: ra.level,
      levelB: rb.level,
      ratio: ra.level / rb.level,
    });
  }
  pairs.sort((p, q) => (p.instance < q.instance ? -1 : p.instance > q.instance ? 1 : 0));
  return pairs;
}

export function levelsCsv(pairs: LevelPair[]): string {
  const lines = pairs.map((p) => `${p.instance},${p.levelA},${p.levelB},${p.ratio}`);
  return ["instance,level_a,level_b,ratio", ...lines].join("\n") + "\n";
}
