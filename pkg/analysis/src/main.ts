// Batch entry point: read a harness results CSV, write the report files.
//
//   node dist/src/main.js results.csv --baseline standard --limit 3600 \
//       --out-dir out [--svg]
//
// Emits summary.csv, cactus_<mode>.csv per mode, and for every non-
// baseline mode a scatter_<baseline>_<mode>.csv plus
// levels_<baseline>_<mode>.csv; --svg adds static figures. All outputs
// are pure functions of the input CSV.

import fs from "node:fs";
import path from "node:path";

import { readResultsCsv } from "./csv.js";
import { cactusCsv, cactusData } from "./cactus.js";
import { levelRatio, levelsCsv } from "./levels.js";
import { scatterCsv, scatterData } from "./scatter.js";
import { summarize, summaryToCsv, HARD_CUTOFF } from "./summarize.js";
import { svgCactus, svgScatter } from "./svg.js";

interface Args {
  csv: string;
  baseline: string;
  limit: number;
  outDir: string;
  svg: boolean;
}

function parseArgs(argv: string[]): Args {
  const args: Args = {
    csv: "",
    baseline: "standard",
    limit: 3600,
    outDir: "out",
    svg: false,
  };
  for (let i = 0; i < argv.length; i += 1) {
    const a = argv[i] as string;
    if (a === "--baseline") args.baseline = argv[++i] ?? args.baseline;
    else if (a === "--limit") args.limit = Number(argv[++i]);
    else if (a === "--out-dir") args.outDir = argv[++i] ?? args.outDir;
    else if (a === "--svg") args.svg = true;
    else if (!a.startsWith("--") && args.csv === "") args.csv = a;
    else throw new Error(`unknown argument: ${a}`);
  }
  if (args.csv === "" || !Number.isFinite(args.limit) || args.limit <= 0) {
    throw new Error(
      "usage: main.js <results.csv> [--baseline MODE] [--limit S] [--out-dir DIR] [--svg]",
    );
  }
  return args;
}

export function run(argv: string[]): number {
  const args = parseArgs(argv);
  const rows = readResultsCsv(args.csv);
  fs.mkdirSync(args.outDir, { recursive: true });
  const write = (name: string, text: string): void => {
    fs.writeFileSync(path.join(args.outDir, name), text);
    console.log(`wrote ${path.join(args.outDir, name)}`);
  };

  const table = summarize(rows, args.baseline, args.limit);
  write("summary.csv", summaryToCsv(table));
  console.log(
    `note: hard columns cover instances the row's own mode did not solve within ${HARD_CUTOFF} s`,
  );

  const series = cactusData(rows);
  for (const [mode, times] of series) {
    write(`cactus_${mode}.csv`, cactusCsv(times));
  }
  for (const row of table) {
    if (row.mode === args.baseline) continue;
    const points = scatterData(rows, args.baseline, row.mode, args.limit);
    write(`scatter_${args.baseline}_${row.mode}.csv`, scatterCsv(points));
    write(
      `levels_${args.baseline}_${row.mode}.csv`,
      levelsCsv(levelRatio(rows, args.baseline, row.mode)),
    );
    if (args.svg) {
      write(
        `scatter_${args.baseline}_${row.mode}.svg`,
        svgScatter(points, args.limit, args.baseline, row.mode),
      );
    }
  }
  if (args.svg) {
    write("cactus.svg", svgCactus(series, args.limit));
  }
  return 0;
}

if (process.argv[1] && path.basename(process.argv[1]).startsWith("main")) {
  try {
    process.exit(run(process.argv.slice(2)));
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
}
