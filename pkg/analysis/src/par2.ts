// PAR-2 scoring: mean over instances of (time if solved else 2 * limit).
//
// The accumulation below deliberately mirrors the checker harness: group
// rows by mode in file order, sum contributions left to right, divide
// once. Both sides run IEEE 754 doubles through the same operation
// sequence, so recomputing PAR-2 from the same CSV gives bit-identical
// results across the two implementations.

import { BenchRow, byMode, isSolved } from "./csv.js";

export interface Par2Summary {
  par2: number;
  solved: number;
  total: number;
}

export function par2ByMode(
  rows: BenchRow[],
  limit: number,
): Map<string, Par2Summary> {
  const out = new Map<string, Par2Summary>();
  for (const [mode, rs] of byMode(rows)) {
    let total = 0;
    let solved = 0;
    for (const r of rs) {
      total += isSolved(r) ? r.time : 2.0 * limit;
      if (isSolved(r)) {
        solved += 1;
      }
    }
    out.set(mode, { par2: total / rs.length, solved, total: rs.length });
  }
  return out;
}
