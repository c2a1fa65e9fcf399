/** Figure rendering: ratio histograms per (problem, k), ratio-vs-k curves,
 * depth distributions. One PNG per figure kind per problem kind present. */

import * as fs from 'node:fs';
import * as path from 'node:path';

import { encodePng } from './png';
import { BLACK, BLUE, GREY, ORANGE, Raster, textWidth } from './raster';
import { BenchRow, problemKinds } from './schema';

export const FIGURE_KINDS = ['ratio_hist', 'ratio_vs_k', 'depth_hist'] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

export interface PlotSpec {
  rows: BenchRow[];
  outDir: string;
  kinds: FigureKind[];
}

const PANEL_W = 520;
const PANEL_H = 170;
const MARGIN = 48;

function fmt(v: number): string {
  return Number.isInteger(v) ? String(v) : v.toFixed(3);
}

interface Bin { count: number; lo: number; hi: number }

function histogram(values: number[], nbins: number): Bin[] {
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  if (lo === hi) {
    return [{ count: values.length, lo, hi }];
  }
  const bins: Bin[] = Array.from({ length: nbins }, (_, i) => ({
    count: 0,
    lo: lo + ((hi - lo) * i) / nbins,
    hi: lo + ((hi - lo) * (i + 1)) / nbins,
  }));
  for (const v of values) {
    const i = Math.min(nbins - 1, Math.floor(((v - lo) / (hi - lo)) * nbins));
    bins[i].count += 1;
  }
  return bins;
}

function drawHistPanel(r: Raster, top: number, title: string,
                       values: number[]): void {
  const x0 = MARGIN;
  const y0 = top + PANEL_H - 28;
  const plotW = PANEL_W - 2 * MARGIN;
  const plotH = PANEL_H - 62;
  r.text(x0, top + 6, title);
  r.hline(x0, x0 + plotW, y0, BLACK);
  r.vline(x0, y0 - plotH, y0, BLACK);
  const bins = histogram(values, 20);
  const peak = Math.max(...bins.map((b) => b.count));
  const barW = Math.max(2, Math.floor(plotW / bins.length) - 2);
  bins.forEach((bin, i) => {
    const h = Math.round((bin.count / peak) * (plotH - 6));
    const bx = x0 + 2 + Math.floor((plotW / bins.length) * i);
    if (bin.count > 0) r.fillRect(bx, y0 - h, barW, h, BLUE);
  });
  r.text(x0, y0 + 6, fmt(bins[0].lo));
  const hiLabel = fmt(bins[bins.length - 1].hi);
  r.text(x0 + plotW - textWidth(hiLabel), y0 + 6, hiLabel);
  const peakLabel = String(peak);
  r.text(x0 - textWidth(peakLabel) - 6, y0 - plotH, peakLabel, GREY);
}

function renderRatioHist(rows: BenchRow[], problem: string): Raster | null {
  const ks = [...new Set(rows.map((r) => r.k))].sort((a, b) => a - b);
  const panels = ks
    .map((k) => ({
      k,
      values: rows.filter((r) => r.k === k && r.ratio !== null)
        .map((r) => r.ratio as number),
    }))
    .filter((p) => p.values.length > 0);
  if (panels.length === 0) return null;
  const img = new Raster(PANEL_W, panels.length * PANEL_H + 10);
  panels.forEach((p, i) => {
    drawHistPanel(img, 10 + i * PANEL_H,
      `${problem} ratio histogram (k=${p.k})`, p.values);
  });
  return img;
}

function renderRatioVsK(rows: BenchRow[], problem: string): Raster | null {
  const ks = [...new Set(rows.map((r) => r.k))].sort((a, b) => a - b);
  const pts = ks
    .map((k) => {
      const vals = rows.filter((r) => r.k === k && r.ratio !== null)
        .map((r) => r.ratio as number);
      return vals.length
        ? { k, mean: vals.reduce((a, b) => a + b, 0) / vals.length }
        : null;
    })
    .filter((p): p is { k: number; mean: number } => p !== null);
  if (pts.length === 0) return null;
  const img = new Raster(PANEL_W, PANEL_H + 20);
  const x0 = MARGIN;
  const y0 = PANEL_H - 18;
  const plotW = PANEL_W - 2 * MARGIN;
  const plotH = PANEL_H - 62;
  img.text(x0, 8, `${problem} mean ratio vs k`);
  img.hline(x0, x0 + plotW, y0, BLACK);
  img.vline(x0, y0 - plotH, y0, BLACK);
  const lo = Math.min(1.0, ...pts.map((p) => p.mean));
  const hi = Math.max(1.0 + 1e-9, ...pts.map((p) => p.mean));
  const kLo = pts[0].k;
  const kHi = Math.max(pts[pts.length - 1].k, kLo + 1);
  const px = (k: number) => x0 + Math.round(((k - kLo) / (kHi - kLo)) * plotW);
  const py = (m: number) =>
    y0 - Math.round(((m - lo) / (hi - lo)) * (plotH - 8)) - 4;
  for (let i = 1; i < pts.length; i++) {
    img.line(px(pts[i - 1].k), py(pts[i - 1].mean),
             px(pts[i].k), py(pts[i].mean), ORANGE);
  }
  for (const p of pts) {
    img.marker(px(p.k), py(p.mean), ORANGE);
    img.text(px(p.k) - 5, y0 + 6, `k=${p.k}`);
  }
  img.text(x0 - textWidth(fmt(hi)) - 6, y0 - plotH, fmt(hi), GREY);
  img.text(x0 - textWidth(fmt(lo)) - 6, y0 - 8, fmt(lo), GREY);
  return img;
}

function renderDepthHist(rows: BenchRow[], problem: string): Raster | null {
  const values = rows.filter((r) => r.depth !== null)
    .map((r) => r.depth as number);
  if (values.length === 0) return null;
  const img = new Raster(PANEL_W, PANEL_H + 20);
  const x0 = MARGIN;
  const y0 = PANEL_H - 18;
  const plotW = PANEL_W - 2 * MARGIN;
  const plotH = PANEL_H - 62;
  img.text(x0, 8, `${problem} depth distribution`);
  img.hline(x0, x0 + plotW, y0, BLACK);
  img.vline(x0, y0 - plotH, y0, BLACK);
  const lo = Math.min(...values);
  const hi = Math.max(...values);
  const counts = new Map<number, number>();
  for (const v of values) counts.set(v, (counts.get(v) ?? 0) + 1);
  const peak = Math.max(...counts.values());
  const span = hi - lo + 1;
  const barW = Math.max(3, Math.floor(plotW / span) - 4);
  for (const [v, count] of [...counts.entries()].sort((a, b) => a[0] - b[0])) {
    const bx = x0 + 4 + Math.floor((plotW / span) * (v - lo));
    const h = Math.round((count / peak) * (plotH - 6));
    img.fillRect(bx, y0 - h, barW, h, BLUE);
    img.text(bx, y0 + 6, String(v));
  }
  const peakLabel = String(peak);
  img.text(x0 - textWidth(peakLabel) - 6, y0 - plotH, peakLabel, GREY);
  return img;
}

const RENDERERS: Record<FigureKind, (rows: BenchRow[], problem: string) => Raster | null> = {
  ratio_hist: renderRatioHist,
  ratio_vs_k: renderRatioVsK,
  depth_hist: renderDepthHist,
};

/** Renders every requested figure kind for every problem kind present;
 * returns the written file paths. Reruns overwrite idempotently. */
export function render(spec: PlotSpec): string[] {
  const written: string[] = [];
  if (spec.rows.length === 0) return written;
  fs.mkdirSync(spec.outDir, { recursive: true });
  for (const problem of problemKinds(spec.rows)) {
    const sub = spec.rows.filter((r) => r.problem === problem);
    for (const kind of spec.kinds) {
      const img = RENDERERS[kind](sub, problem);
      if (img === null) continue;
      const file = path.join(spec.outDir, `${problem}_${kind}.png`);
      fs.writeFileSync(file, encodePng(img.width, img.height, img.pixels));
      written.push(file);
    }
  }
  return written;
}
