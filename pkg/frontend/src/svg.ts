/**
 * Minimal hand-rolled SVG line charts: no DOM, just strings.
 *
 * Series are polylines (or step-after staircases) over an integer x axis;
 * bands are filled polygons between a lower and an upper series. Gaps
 * (null values) split a series into separate segments.
 */

export type Point = [number, number | null];

export interface Series {
  name: string;
  points: Point[];
  color: string;
  kind?: "line" | "stair";
  width?: number;
  dash?: string;
}

export interface Band {
  name: string;
  lo: Point[];
  hi: Point[];
  color: string;
  opacity?: number;
}

export interface ChartSpec {
  title: string;
  yLabel: string;
  xLabel?: string;
  series: Series[];
  bands?: Band[];
  yMin?: number;
  yMax?: number;
}

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

export function niceTicks(min: number, max: number, count: number): number[] {
  const range = max - min || 1;
  const rough = range / count;
  const magnitude = Math.pow(10, Math.floor(Math.log10(rough)));
  const step =
    [1, 2, 5, 10].map((m) => m * magnitude).find((s) => s >= rough) ?? rough;
  const ticks: number[] = [];
  for (let v = Math.ceil(min / step) * step; v <= max + step * 1e-9; v += step) {
    ticks.push(Math.abs(v) < step * 1e-9 ? 0 : v);
  }
  return ticks;
}

function finiteValues(points: Point[]): number[] {
  return points
    .map(([, y]) => y)
    .filter((y): y is number => y !== null && Number.isFinite(y));
}

const MARGIN = { top: 34, right: 16, bottom: 36, left: 56 };

/** Render one chart as a translated <g> block of the given size. */
export function chartGroup(
  spec: ChartSpec,
  x0: number,
  y0: number,
  width: number,
  height: number,
): string {
  const innerW = width - MARGIN.left - MARGIN.right;
  const innerH = height - MARGIN.top - MARGIN.bottom;

  const xs = spec.series
    .flatMap((s) => s.points.map(([x]) => x))
    .concat((spec.bands ?? []).flatMap((b) => b.lo.map(([x]) => x)));
  const ys = spec.series
    .flatMap((s) => finiteValues(s.points))
    .concat((spec.bands ?? []).flatMap((b) => finiteValues(b.lo)))
    .concat((spec.bands ?? []).flatMap((b) => finiteValues(b.hi)));
  const xMin = Math.min(...xs);
  const xMax = Math.max(...xs);
  let yMin = spec.yMin ?? Math.min(...ys);
  let yMax = spec.yMax ?? Math.max(...ys);
  if (yMin === yMax) {
    yMin -= 1;
    yMax += 1;
  }
  const pad = 0.04 * (yMax - yMin);
  if (spec.yMin === undefined) yMin -= pad;
  if (spec.yMax === undefined) yMax += pad;

  const sx = (x: number) => MARGIN.left + ((x - xMin) / (xMax - xMin || 1)) * innerW;
  const sy = (y: number) =>
    MARGIN.top + innerH - ((y - yMin) / (yMax - yMin)) * innerH;

  const parts: string[] = [];
  parts.push(
    `<text x="${MARGIN.left}" y="18" font-size="14" font-weight="bold">` +
      `${escapeXml(spec.title)}</text>`,
  );

  for (const tick of niceTicks(yMin, yMax, 5)) {
    const y = sy(tick);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${y.toFixed(2)}" x2="${MARGIN.left + innerW}" ` +
        `y2="${y.toFixed(2)}" stroke="#ddd" stroke-width="0.6"/>`,
      `<text x="${MARGIN.left - 6}" y="${(y + 3.5).toFixed(2)}" font-size="10" ` +
        `text-anchor="end" fill="#555">${escapeXml(formatTick(tick))}</text>`,
    );
  }
  for (const tick of niceTicks(xMin, xMax, 8)) {
    const x = sx(tick);
    parts.push(
      `<text x="${x.toFixed(2)}" y="${MARGIN.top + innerH + 16}" font-size="10" ` +
        `text-anchor="middle" fill="#555">${escapeXml(formatTick(tick))}</text>`,
    );
  }
  parts.push(
    `<text x="${MARGIN.left - 42}" y="${MARGIN.top + innerH / 2}" font-size="11" ` +
      `fill="#333" transform="rotate(-90 ${MARGIN.left - 42} ${MARGIN.top + innerH / 2})" ` +
      `text-anchor="middle">${escapeXml(spec.yLabel)}</text>`,
  );
  if (spec.xLabel) {
    parts.push(
      `<text x="${MARGIN.left + innerW / 2}" y="${height - 6}" font-size="11" ` +
        `fill="#333" text-anchor="middle">${escapeXml(spec.xLabel)}</text>`,
    );
  }

  for (const band of spec.bands ?? []) {
    for (const polygon of bandPolygons(band, sx, sy)) {
      parts.push(
        `<polygon data-series="${escapeXml(band.name)}" points="${polygon}" ` +
          `fill="${band.color}" opacity="${band.opacity ?? 0.25}" stroke="none"/>`,
      );
    }
  }

  for (const series of spec.series) {
    for (const d of seriesPaths(series, sx, sy)) {
      parts.push(
        `<path data-series="${escapeXml(series.name)}" d="${d}" fill="none" ` +
          `stroke="${series.color}" stroke-width="${series.width ?? 1.4}"` +
          (series.dash ? ` stroke-dasharray="${series.dash}"` : "") +
          `/>`,
      );
    }
  }

  const legendY = MARGIN.top - 12;
  let legendX = MARGIN.left + 140;
  for (const series of spec.series) {
    parts.push(
      `<line x1="${legendX}" y1="${legendY}" x2="${legendX + 18}" y2="${legendY}" ` +
        `stroke="${series.color}" stroke-width="2"` +
        (series.dash ? ` stroke-dasharray="${series.dash}"` : "") +
        `/>`,
      `<text x="${legendX + 22}" y="${legendY + 3.5}" font-size="10" fill="#333">` +
        `${escapeXml(series.name)}</text>`,
    );
    legendX += 26 + 7 * series.name.length + 16;
  }

  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${innerW}" height="${innerH}" ` +
      `fill="none" stroke="#999" stroke-width="0.8"/>`,
  );

  return `<g transform="translate(${x0} ${y0})">${parts.join("")}</g>`;
}

function formatTick(v: number): string {
  if (Math.abs(v) >= 1000) return v.toFixed(0);
  if (Number.isInteger(v)) return String(v);
  return String(parseFloat(v.toPrecision(4)));
}

/** Break a series at null gaps and convert each run into a path d string. */
function seriesPaths(
  series: Series,
  sx: (x: number) => number,
  sy: (y: number) => number,
): string[] {
  const paths: string[] = [];
  let current: string[] = [];
  let prev: [number, number] | null = null;

  const flush = () => {
    if (current.length > 1) paths.push(current.join(" "));
    current = [];
    prev = null;
  };

  for (const [x, y] of series.points) {
    if (y === null || !Number.isFinite(y)) {
      flush();
      continue;
    }
    const px = sx(x);
    const py = sy(y);
    if (prev === null) {
      current.push(`M ${px.toFixed(2)} ${py.toFixed(2)}`);
    } else if (series.kind === "stair") {
      current.push(`H ${px.toFixed(2)} V ${py.toFixed(2)}`);
    } else {
      current.push(`L ${px.toFixed(2)} ${py.toFixed(2)}`);
    }
    prev = [px, py];
  }
  flush();
  return paths;
}

/** Filled polygons between lo and hi, split at gaps in either edge. */
function bandPolygons(
  band: Band,
  sx: (x: number) => number,
  sy: (y: number) => number,
): string[] {
  if (band.lo.length !== band.hi.length) {
    throw new Error(`band ${band.name}: lo/hi lengths differ`);
  }
  const polygons: string[] = [];
  let lower: string[] = [];
  let upper: string[] = [];

  const flush = () => {
    if (lower.length > 1) {
      polygons.push([...lower, ...upper.reverse()].join(" "));
    }
    lower = [];
    upper = [];
  };

  for (let i = 0; i < band.lo.length; i++) {
    const [x, lo] = band.lo[i];
    const hi = band.hi[i][1];
    if (lo === null || hi === null) {
      flush();
      continue;
    }
    lower.push(`${sx(x).toFixed(2)},${sy(lo).toFixed(2)}`);
    upper.push(`${sx(x).toFixed(2)},${sy(hi).toFixed(2)}`);
  }
  flush();
  return polygons;
}

export function svgDocument(width: number, height: number, body: string): string {
  return (
    `<?xml version="1.0" encoding="UTF-8"?>\n` +
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
    `viewBox="0 0 ${width} ${height}" font-family="sans-serif">` +
    `<rect width="${width}" height="${height}" fill="white"/>` +
    body +
    `</svg>\n`
  );
}
