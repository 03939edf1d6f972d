import Papa from 'papaparse';

export interface Row {
  [column: string]: string;
}

export class TableError extends Error {}

const NUMERIC = ['r_d_m', 'n_m', 'h_h_m', 'h_s_m', 'coverage'];

/** Parse a sweep-results table (comma-separated, fixed header row). */
export function parseTable(text: string, required: string[]): Row[] {
  const parsed = Papa.parse<Row>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new TableError(`table parse error: ${parsed.errors[0].message}`);
  }
  const columns = parsed.meta.fields ?? [];
  for (const col of required) {
    if (!columns.includes(col)) {
      throw new TableError(`missing column '${col}'`);
    }
  }
  const rows = parsed.data;
  if (rows.length === 0) {
    throw new TableError('empty table: no data rows');
  }
  for (const col of required.filter((c) => NUMERIC.includes(c))) {
    for (const row of rows) {
      if (!Number.isFinite(Number(row[col]))) {
        throw new TableError(`non-numeric value '${row[col]}' in column '${col}'`);
      }
    }
  }
  return rows;
}

export function num(row: Row, column: string): number {
  return Number(row[column]);
}

/** Group rows by a key function, preserving first-seen group order. */
export function groupBy(rows: Row[], key: (row: Row) => string): Map<string, Row[]> {
  const groups = new Map<string, Row[]>();
  for (const row of rows) {
    const k = key(row);
    const bucket = groups.get(k);
    if (bucket) bucket.push(row);
    else groups.set(k, [row]);
  }
  return groups;
}

/**
 * Index of the row with the highest coverage; ties break toward the
 * smallest abscissa so the marker is reproducible.
 */
export function argmaxCoverage(rows: Row[], xColumn: string): number {
  let best = 0;
  for (let i = 1; i < rows.length; i++) {
    const ci = num(rows[i], 'coverage');
    const cb = num(rows[best], 'coverage');
    if (ci > cb || (ci === cb && num(rows[i], xColumn) < num(rows[best], xColumn))) {
      best = i;
    }
  }
  return best;
}
