// Summary table in the shape of the benchmark report: per mode the solved
// counts (split safe/unsafe), deltas against a baseline mode, PAR-2, and
// PAR-2 plus average runtime restricted to the non-trivial subset.
//
// Non-trivial subset: instances the row's own mode did not solve within
// `hardCutoff` seconds (unsolved, or solved slower than the cutoff).
// Membership is per mode, not a shared filter; captions on emitted
// figures repeat this. avgHard counts unsolved instances once at the
// time limit, where PAR-2 counts them twice.

import { BenchRow, byMode, isSolved } from "./csv.js";
import { par2ByMode } from "./par2.js";

export const HARD_CUTOFF = 100.0;

export interface SummaryRow {
  mode: string;
  solved: number;
  safe: number;
  unsafe: number;
  delta: number;
  deltaSafe: number;
  deltaUnsafe: number;
  par2: number;
  par2Hard: number;
  avgHard: number;
  hardCount: number;
}

export function summarize(
  rows: BenchRow[],
  baselineMode: string,
  limit: number,
  hardCutoff: number = HARD_CUTOFF,
): SummaryRow[] {
  const groups = byMode(rows);
  if (!groups.has(baselineMode)) {
    throw new Error(`baseline mode not in CSV: ${baselineMode}`);
  }
  const par2 = par2ByMode(rows, limit);

  const bare = new Map<string, Omit<SummaryRow, "delta" | "deltaSafe" | "deltaUnsafe">>();
  for (const [mode, rs] of groups) {
    let safe = 0;
    let unsafe = 0;
    let hardTotal = 0;
    let hardAvg = 0;
    let hardCount = 0;
    for (const r of rs) {
      if (r.verdict === "safe") safe += 1;
      if (r.verdict === "unsafe") unsafe += 1;
      if (!(isSolved(r) && r.time <= hardCutoff)) {
        hardCount += 1;
        hardTotal += isSolved(r) ? r.time : 2.0 * limit;
        hardAvg += isSolved(r) ? r.time : limit;
      }
    }
    bare.set(mode, {
      mode,
      solved: safe + unsafe,
      safe,
      unsafe,
      par2: (par2.get(mode) as { par2: number }).par2,
      par2Hard: hardCount > 0 ? hardTotal / hardCount : NaN,
      avgHard: hardCount > 0 ? hardAvg / hardCount : NaN,
      hardCount,
    });
  }

  const base = bare.get(baselineMode)!;
  const order = [baselineMode, ...[...groups.keys()].filter((m) => m !== baselineMode)];
  return order.map((mode) => {
    const b = bare.get(mode)!;
    return {
      ...b,
      delta: b.solved - base.solved,
      deltaSafe: b.safe - base.safe,
      deltaUnsafe: b.unsafe - base.unsafe,
    };
  });
}

const f2 = (x: number): string => (Number.isNaN(x) ? "n/a" : x.toFixed(2));

export function summaryToCsv(rows: SummaryRow[]): string {
  const header =
    "mode,solved,safe,unsafe,delta,delta_safe,delta_unsafe,par2,par2_hard,avg_hard,hard_count";
  const lines = rows.map((r) =>
    [
      r.mode, r.solved, r.safe, r.unsafe,
      r.delta, r.deltaSafe, r.deltaUnsafe,
      f2(r.par2), f2(r.par2Hard), f2(r.avgHard), r.hardCount,
    ].join(","),
  );
  return [header, ...lines].join("\n") + "\n";
}
