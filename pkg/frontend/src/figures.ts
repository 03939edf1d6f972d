import { Row, argmaxCoverage, groupBy, num, parseTable } from './table.js';

const WIDTH = 720;
const HEIGHT = 480;
const MARGIN = { left: 64, right: 180, top: 24, bottom: 48 };

const PALETTE = [
  '#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e',
  '#8c564b', '#e377c2', '#17becf',
];

interface Series {
  label: string;
  group: string;
  points: { x: number; y: number }[];
  maxIndex: number;
}

function linscale(domain: [number, number], range: [number, number]) {
  const [d0, d1] = domain;
  const [r0, r1] = range;
  const span = d1 - d0 || 1;
  return (v: number) => r0 + ((v - d0) / span) * (r1 - r0);
}

function fmtKm(meters: number): string {
  return `${meters / 1000} km`;
}

function buildSvg(series: Series[], xLabel: string, markers: boolean): string {
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const x = linscale([Math.min(...xs), Math.max(...xs)],
    [MARGIN.left, WIDTH - MARGIN.right]);
  const y = linscale([0, 1], [HEIGHT - MARGIN.bottom, MARGIN.top]);

  const parts: string[] = [];
  parts.push(`<svg xmlns="http://www.w3.org/2000/svg" width="${WIDTH}" height="${HEIGHT}" viewBox="0 0 ${WIDTH} ${HEIGHT}">`);
  parts.push(`<rect width="${WIDTH}" height="${HEIGHT}" fill="white"/>`);

  // axes and gridlines
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    const yy = y(t).toFixed(1);
    parts.push(`<line x1="${MARGIN.left}" y1="${yy}" x2="${WIDTH - MARGIN.right}" y2="${yy}" stroke="#ddd"/>`);
    parts.push(`<text x="${MARGIN.left - 8}" y="${yy}" text-anchor="end" dominant-baseline="middle" font-size="12">${t}</text>`);
  }
  parts.push(`<line x1="${MARGIN.left}" y1="${y(0)}" x2="${WIDTH - MARGIN.right}" y2="${y(0)}" stroke="black"/>`);
  parts.push(`<line x1="${MARGIN.left}" y1="${y(0)}" x2="${MARGIN.left}" y2="${y(1)}" stroke="black"/>`);
  parts.push(`<text x="${(MARGIN.left + WIDTH - MARGIN.right) / 2}" y="${HEIGHT - 10}" text-anchor="middle" font-size="13">${xLabel}</text>`);
  parts.push(`<text x="16" y="${(y(0) + y(1)) / 2}" text-anchor="middle" font-size="13" transform="rotate(-90 16 ${(y(0) + y(1)) / 2})">coverage probability</text>`);

  series.forEach((s, i) => {
    const color = PALETTE[i % PALETTE.length];
    const pts = s.points
      .map((p) => `${x(p.x).toFixed(2)},${y(p.y).toFixed(2)}`)
      .join(' ');
    parts.push(`<polyline class="series" data-label="${s.label}" points="${pts}" fill="none" stroke="${color}" stroke-width="2"/>`);
    if (markers) {
      const m = s.points[s.maxIndex];
      parts.push(`<circle class="max-marker" data-group="${s.group}" data-x="${m.x}" cx="${x(m.x).toFixed(2)}" cy="${y(m.y).toFixed(2)}" r="5" fill="${color}" stroke="black"/>`);
    }
    const ly = MARGIN.top + 16 + i * 18;
    parts.push(`<line x1="${WIDTH - MARGIN.right + 10}" y1="${ly}" x2="${WIDTH - MARGIN.right + 34}" y2="${ly}" stroke="${color}" stroke-width="2"/>`);
    parts.push(`<text class="legend" x="${WIDTH - MARGIN.right + 40}" y="${ly + 4}" font-size="12">${s.label}</text>`);
  });

  parts.push('</svg>');
  return parts.join('\n') + '\n';
}

/** Coverage vs deployed relay count, one line per disaster radius. */
export function renderSetup1(text: string): string {
  const rows = parseTable(text, ['r_d_m', 'n_m', 'coverage']);
  const groups = groupBy(rows, (r) => r.r_d_m);
  const series: Series[] = [];
  for (const [rd, bucket] of groups) {
    bucket.sort((a, b) => num(a, 'n_m') - num(b, 'n_m'));
    series.push({
      label: `r_d = ${fmtKm(Number(rd))}`,
      group: String(Number(rd)),
      points: bucket.map((r) => ({ x: num(r, 'n_m'), y: num(r, 'coverage') })),
      maxIndex: argmaxCoverage(bucket, 'n_m'),
    });
  }
  series.sort((a, b) => Number(a.group) - Number(b.group));
  return buildSvg(series, 'deployed relay units', true);
}

/** Coverage vs disaster radius, one line per infrastructure variant. */
export function renderSetup2(text: string): string {
  const rows = parseTable(text, ['r_d_m', 'h_h_m', 'h_s_m', 'satellite', 'coverage']);
  const groups = groupBy(rows, (r) => `${r.h_h_m}|${r.h_s_m}|${r.satellite}`);
  const series: Series[] = [];
  for (const [key, bucket] of groups) {
    bucket.sort((a, b) => num(a, 'r_d_m') - num(b, 'r_d_m'));
    const sat = bucket[0].satellite === 'true'
      ? `sat @ ${fmtKm(num(bucket[0], 'h_s_m'))}`
      : 'no sat';
    series.push({
      label: `h_H = ${fmtKm(num(bucket[0], 'h_h_m'))}, ${sat}`,
      group: key,
      points: bucket.map((r) => ({ x: num(r, 'r_d_m'), y: num(r, 'coverage') })),
      maxIndex: argmaxCoverage(bucket, 'r_d_m'),
    });
  }
  series.sort((a, b) => a.label.localeCompare(b.label));
  return buildSvg(series, 'disaster radius [m]', false);
}
