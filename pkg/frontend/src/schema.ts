/** Bench CSV parsing: first line `# schema=1`, then a fixed header row. */

export const SCHEMA_LINE = '# schema=1';

export const COLUMNS = [
  'problem', 'instance', 'n', 'k', 'local_value', 'oracle_value', 'ratio',
  'iterations', 'depth', 'wall_ms', 'status', 'flags',
] as const;

export interface BenchRow {
  problem: string;
  instance: string;
  n: number;
  k: number;
  localValue: number | null;
  oracleValue: number | null;
  ratio: number | null;
  iterations: number | null;
  depth: number | null;
  status: string;
  flags: string;
}

export class SchemaMismatchError extends Error {}

function num(cell: string): number | null {
  if (cell === '') return null;
  const v = Number(cell);
  if (Number.isNaN(v)) throw new SchemaMismatchError(`not a number: ${cell}`);
  return v;
}

export function parseBenchCsv(text: string): BenchRow[] {
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  if (lines.length < 2) {
    throw new SchemaMismatchError('missing schema line or header row');
  }
  if (lines[0].trim() !== SCHEMA_LINE) {
    throw new SchemaMismatchError(
      `expected first line "${SCHEMA_LINE}", got "${lines[0]}"`);
  }
  const header = lines[1].split(',');
  if (header.length !== COLUMNS.length ||
      header.some((h, i) => h !== COLUMNS[i])) {
    throw new SchemaMismatchError(`unknown header: ${lines[1]}`);
  }
  const rows: BenchRow[] = [];
  for (const line of lines.slice(2)) {
    const cells = line.split(',');
    if (cells.length !== COLUMNS.length) {
      throw new SchemaMismatchError(`bad row width: ${line}`);
    }
    rows.push({
      problem: cells[0],
      instance: cells[1],
      n: num(cells[2]) ?? 0,
      k: num(cells[3]) ?? 0,
      localValue: num(cells[4]),
      oracleValue: num(cells[5]),
      ratio: num(cells[6]),
      iterations: num(cells[7]),
      depth: num(cells[8]),
      status: cells[10],
      flags: cells[11],
    });
  }
  return rows;
}

export function problemKinds(rows: BenchRow[]): string[] {
  return [...new Set(rows.map((r) => r.problem))].sort();
}
