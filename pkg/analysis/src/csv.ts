// Reader for the checker harness results CSV. The harness writes plain
// unquoted fields, full-precision times via shortest round-trip floats.

import fs from "node:fs";

export interface BenchRow {
  instance: string;
  mode: string;
  verdict: string; // safe | unsafe | timeout | budget
  time: number;
  level: number;
  clauses: number;
  genCalls: number;
  seed: number;
}

export const CSV_COLUMNS = [
  "instance",
  "mode",
  "verdict",
  "time",
  "level",
  "clauses",
  "gen_calls",
  "seed",
] as const;

export const SOLVED = new Set(["safe", "unsafe"]);

export function isSolved(row: BenchRow): boolean {
  return SOLVED.has(row.verdict);
}

export function parseResultsCsv(text: string): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length === 0) {
    throw new Error("empty results CSV");
  }
  const header = (lines[0] as string).split(",");
  const idx = new Map(header.map((h, i) => [h, i]));
  const missing = CSV_COLUMNS.filter((c) => !idx.has(c));
  if (missing.length > 0) {
    throw new Error(`results CSV missing columns: ${missing.join(", ")}`);
  }
  const col = (fields: string[], name: string): string =>
    fields[idx.get(name) as number] ?? "";
  const rows: BenchRow[] = [];
  for (const line of lines.slice(1)) {
    const f = line.split(",");
    rows.push({
      instance: col(f, "instance"),
      mode: col(f, "mode"),
      verdict: col(f, "verdict"),
      time: Number(col(f, "time")),
      level: Number(col(f, "level")),
      clauses: Number(col(f, "clauses")),
      genCalls: Number(col(f, "gen_calls")),
      seed: Number(col(f, "seed")),
    });
  }
  return rows;
}

export function readResultsCsv(path: string): BenchRow[] {
  return parseResultsCsv(fs.readFileSync(path, "utf8"));
}

/** Rows grouped by mode, preserving file order within each group. */
export function byMode(rows: BenchRow[]): Map<string, BenchRow[]> {
  const groups = new Map<string, BenchRow[]>();
  for (const r of rows) {
    const g = groups.get(r.mode);
    if (g) {
      g.push(r);
    } else {
      groups.set(r.mode, [r]);
    }
  }
  return groups;
}
