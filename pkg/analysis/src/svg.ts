// Static SVG figures (no plotting library): a cactus plot of solved
// instances against time, and a log-log scatter of paired times with the
// break-even diagonal. Pure functions of their inputs so reruns emit
// byte-identical files.

import { ScatterPoint } from "./scatter.js";

const W = 640;
const H = 420;
const M = { left: 60, right: 16, top: 28, bottom: 44 };
const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#8c564b", "#e377c2"];

const esc = (s: string): string =>
  s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");

function open(title: string): string {
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${W}" height="${H}" ` +
    `viewBox="0 0 ${W} ${H}" font-family="sans-serif" font-size="12">\n` +
    `<rect width="${W}" height="${H}" fill="white"/>\n` +
    `<text x="${W / 2}" y="18" text-anchor="middle" font-size="14">${esc(title)}</text>\n`
  );
}

export function svgCactus(series: Map<string, number[]>, limit: number): string {
  const maxRank = Math.max(1, ...[...series.values()].map((s) => s.length));
  const logMin = Math.log10(0.01);
  const logMax = Math.log10(limit);
  const x = (rank: number): number =>
    M.left + ((W - M.left - M.right) * rank) / maxRank;
  const y = (t: number): number => {
    const l = Math.min(Math.max(Math.log10(Math.max(t, 0.01)), logMin), logMax);
    return H - M.bottom - ((H - M.bottom - M.top) * (l - logMin)) / (logMax - logMin);
  };
  let out = open("Instances solved within time budget");
  out += `<line x1="${M.left}" y1="${H - M.bottom}" x2="${W - M.right}" y2="${H - M.bottom}" stroke="black"/>\n`;
  out += `<line x1="${M.left}" y1="${M.top}" x2="${M.left}" y2="${H - M.bottom}" stroke="black"/>\n`;
  out += `<text x="${(M.left + W - M.right) / 2}" y="${H - 10}" text-anchor="middle">solved instances</text>\n`;
  out += `<text x="14" y="${(M.top + H - M.bottom) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(M.top + H - M.bottom) / 2})">time, s (log)</text>\n`;
  let i = 0;
  for (const [mode, times] of series) {
    const color = PALETTE[i % PALETTE.length];
    const pts = times.map((t, r) => `${x(r + 1).toFixed(1)},${y(t).toFixed(1)}`);
    if (pts.length > 0) {
      out += `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}" stroke-width="1.5"/>\n`;
    }
    out += `<text x="${W - M.right - 8}" y="${M.top + 14 + 16 * i}" text-anchor="end" fill="${color}">${esc(mode)} (${times.length})</text>\n`;
    i += 1;
  }
  return out + "</svg>\n";
}

export function svgScatter(
  points: ScatterPoint[],
  ceiling: number,
  modeA: string,
  modeB: string,
): string {
  const logMin = Math.log10(0.01);
  const logMax = Math.log10(ceiling);
  const span = logMax - logMin;
  const sx = (t: number): number => {
    const l = Math.min(Math.max(Math.log10(Math.max(t, 0.01)), logMin), logMax);
    return M.left + ((W - M.left - M.right) * (l - logMin)) / span;
  };
  const sy = (t: number): number => {
    const l = Math.min(Math.max(Math.log10(Math.max(t, 0.01)), logMin), logMax);
    return H - M.bottom - ((H - M.bottom - M.top) * (l - logMin)) / span;
  };
  let out = open(`Per-instance time: ${modeA} vs ${modeB} (unsolved at ceiling)`);
  out += `<line x1="${sx(0.01)}" y1="${sy(0.01)}" x2="${sx(ceiling)}" y2="${sy(ceiling)}" stroke="#999" stroke-dasharray="4 3"/>\n`;
  for (const p of points) {
    out += `<circle cx="${sx(p.timeA).toFixed(1)}" cy="${sy(p.timeB).toFixed(1)}" r="2.5" fill="#1f77b4" fill-opacity="0.55"/>\n`;
  }
  out += `<text x="${(M.left + W - M.right) / 2}" y="${H - 10}" text-anchor="middle">${esc(modeA)} time, s (log)</text>\n`;
  out += `<text x="14" y="${(M.top + H - M.bottom) / 2}" text-anchor="middle" transform="rotate(-90 14 ${(M.top + H - M.bottom) / 2})">${esc(modeB)} time, s (log)</text>\n`;
  return out + "</svg>\n";
}
