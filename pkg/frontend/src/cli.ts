#!/usr/bin/env node
/** plots <csv> --out <dir> [--kinds ratio_hist ratio_vs_k depth_hist]
 *
 * Exit codes: 0 ok (including header-only input), 2 input/schema error.
 */

import * as fs from 'node:fs';

import { FIGURE_KINDS, FigureKind, render } from './figures';
import { SchemaMismatchError, parseBenchCsv } from './schema';

export interface CliArgs {
  csv: string;
  outDir: string;
  kinds: FigureKind[];
}

export function parseArgs(argv: string[]): CliArgs {
  let csv: string | null = null;
  let outDir: string | null = null;
  const kinds: FigureKind[] = [];
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === '--out') {
      outDir = argv[++i];
    } else if (a === '--kinds') {
      while (i + 1 < argv.length && !argv[i + 1].startsWith('--')) {
        for (const piece of argv[++i].split(',')) {
          if (!piece) continue;
          if (!(FIGURE_KINDS as readonly string[]).includes(piece)) {
            throw new Error(`unknown figure kind: ${piece}`);
          }
          kinds.push(piece as FigureKind);
        }
      }
    } else if (a.startsWith('--')) {
      throw new Error(`unknown flag: ${a}`);
    } else if (csv === null) {
      csv = a;
    } else {
      throw new Error(`unexpected argument: ${a}`);
    }
  }
  if (csv === null) throw new Error('usage: plots <csv> --out <dir> [--kinds ...]');
  if (outDir === null) throw new Error('--out <dir> is required');
  return { csv, outDir, kinds: kinds.length ? kinds : [...FIGURE_KINDS] };
}

export function run(argv: string[]): number {
  let args: CliArgs;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`plots: ${(err as Error).message}`);
    return 2;
  }
  let rows;
  try {
    rows = parseBenchCsv(fs.readFileSync(args.csv, 'utf8'));
  } catch (err) {
    if (err instanceof SchemaMismatchError) {
      console.error(`plots: schema mismatch: ${err.message}`);
    } else {
      console.error(`plots: ${(err as Error).message}`);
    }
    return 2;
  }
  if (rows.length === 0) {
    console.error('plots: warning: header-only CSV, nothing to render');
    return 0;
  }
  const files = render({ rows, outDir: args.outDir, kinds: args.kinds });
  for (const f of files) console.log(f);
  return 0;
}

if (require.main === module) {
  process.exit(run(process.argv.slice(2)));
}
