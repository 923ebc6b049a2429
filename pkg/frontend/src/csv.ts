/**
 * Parsing for stockguard trajectory exports.
 *
 * trajectory.csv has a fixed header; cells left blank are undefined at that
 * step (e.g. no interval is emitted once the horizon no longer fits the
 * run). Flags are serialized as 0/1.
 */

export interface TrajectoryRow {
  t: number;
  stock: number;
  order: number | null;
  demand: number | null;
  cost: number | null;
  policy_errors: number;
  policy_bound: number;
  horizon_cost: number | null;
  interval_lo: number | null;
  interval_hi: number | null;
  interval_full: boolean | null;
  interval_empty: boolean | null;
  inference_errors: number | null;
  inference_bound: number | null;
}

export const EXPECTED_COLUMNS = [
  "t",
  "stock",
  "order",
  "demand",
  "cost",
  "policy_errors",
  "policy_bound",
  "horizon_cost",
  "interval_lo",
  "interval_hi",
  "interval_full",
  "interval_empty",
  "inference_errors",
  "inference_bound",
] as const;

function num(cell: string, where: string): number {
  const value = Number(cell);
  if (cell === "" || Number.isNaN(value)) {
    throw new Error(`${where}: cannot parse numeric cell ${JSON.stringify(cell)}`);
  }
  return value;
}

function optNum(cell: string, where: string): number | null {
  return cell === "" ? null : num(cell, where);
}

function optFlag(cell: string, where: string): boolean | null {
  if (cell === "") return null;
  if (cell === "0" || cell === "1") return cell === "1";
  throw new Error(`${where}: flag cell must be 0 or 1, got ${JSON.stringify(cell)}`);
}

/** Parse trajectory.csv text; the header must carry the expected columns. */
export function parseTrajectory(text: string): TrajectoryRow[] {
  const lines = text.trim().split("\n");
  if (lines.length < 2) throw new Error("trajectory CSV has no data rows");
  const header = lines[0].split(",");
  for (const column of EXPECTED_COLUMNS) {
    if (!header.includes(column)) {
      throw new Error(`trajectory CSV is missing column ${JSON.stringify(column)}`);
    }
  }
  const index = new Map(header.map((name, i) => [name, i]));
  const at = (cells: string[], column: string) => cells[index.get(column)!] ?? "";

  return lines.slice(1).map((line, i) => {
    const cells = line.split(",");
    const where = `row ${i + 2}`;
    return {
      t: num(at(cells, "t"), where),
      stock: num(at(cells, "stock"), where),
      order: optNum(at(cells, "order"), where),
      demand: optNum(at(cells, "demand"), where),
      cost: optNum(at(cells, "cost"), where),
      policy_errors: num(at(cells, "policy_errors"), where),
      policy_bound: num(at(cells, "policy_bound"), where),
      horizon_cost: optNum(at(cells, "horizon_cost"), where),
      interval_lo: optNum(at(cells, "interval_lo"), where),
      interval_hi: optNum(at(cells, "interval_hi"), where),
      interval_full: optFlag(at(cells, "interval_full"), where),
      interval_empty: optFlag(at(cells, "interval_empty"), where),
      inference_errors: optNum(at(cells, "inference_errors"), where),
      inference_bound: optNum(at(cells, "inference_bound"), where),
    };
  });
}

/** Flat numeric map written next to the trajectory. */
export interface RunMetrics {
  [key: string]: number;
}

export function parseMetrics(text: string): RunMetrics {
  const data = JSON.parse(text);
  if (typeof data !== "object" || data === null || Array.isArray(data)) {
    throw new Error("metrics.json must be a flat object");
  }
  for (const [key, value] of Object.entries(data)) {
    if (typeof value !== "number") {
      throw new Error(`metrics.json key ${key} is not a number`);
    }
  }
  return data as RunMetrics;
}
