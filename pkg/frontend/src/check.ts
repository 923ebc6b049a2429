/**
 * Consistency checks between a trajectory export and its metrics summary.
 *
 * Recomputes the service level and coverage from the raw rows, verifies the
 * error-process bounds row by row, and compares against metrics.json. Any
 * mismatch is a defect in the producing run (or a tampered file), so the
 * CLI exits nonzero.
 */

import { RunMetrics, TrajectoryRow } from "./csv.js";

const TOL = 1e-9;

export interface CheckReport {
  ok: boolean;
  problems: string[];
  serviceLevel: number;
  coverage: number;
}

function covered(row: TrajectoryRow): boolean {
  if (row.interval_empty) return false;
  return (
    row.interval_lo! <= row.horizon_cost! && row.horizon_cost! <= row.interval_hi!
  );
}

export function checkTrajectory(
  rows: TrajectoryRow[],
  metrics: RunMetrics,
): CheckReport {
  const problems: string[] = [];
  const T = metrics.T;
  const H = metrics.H;
  if (rows.length !== T + 1) {
    problems.push(`expected ${T + 1} rows for T=${T}, found ${rows.length}`);
  }

  for (const row of rows) {
    if (row.policy_errors > row.policy_bound) {
      problems.push(
        `t=${row.t}: policy errors ${row.policy_errors} above bound ${row.policy_bound}`,
      );
    }
    if (
      row.inference_errors !== null &&
      row.inference_errors > (row.inference_bound ?? -Infinity)
    ) {
      problems.push(
        `t=${row.t}: inference errors ${row.inference_errors} above bound ${row.inference_bound}`,
      );
    }
  }

  let critical = 0;
  for (const row of rows) {
    if (row.t >= 1 && row.stock <= metrics.x_c) critical += 1;
  }
  const serviceLevel = (T - critical) / T;
  if (Math.abs(serviceLevel - metrics.service_level) > TOL) {
    problems.push(
      `service level recomputed ${serviceLevel} != metrics ${metrics.service_level}`,
    );
  }

  let resolved = 0;
  let coveredCount = 0;
  for (const row of rows) {
    if (row.horizon_cost === null || row.interval_lo === null) continue;
    resolved += 1;
    if (covered(row)) coveredCount += 1;
  }
  const horizons = T - H + 1;
  if (resolved !== horizons) {
    problems.push(`expected ${horizons} resolved horizons, found ${resolved}`);
  }
  const coverage = coveredCount / horizons;
  if (Math.abs(coverage - metrics.coverage) > TOL) {
    problems.push(`coverage recomputed ${coverage} != metrics ${metrics.coverage}`);
  }

  if (serviceLevel < 1 - metrics.alpha - TOL) {
    problems.push(`service level ${serviceLevel} below 1 - alpha`);
  }
  if (coverage < 1 - metrics.beta - TOL) {
    problems.push(`coverage ${coverage} below 1 - beta`);
  }

  return { ok: problems.length === 0, problems, serviceLevel, coverage };
}
