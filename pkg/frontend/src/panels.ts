/**
 * The three figure panels built from a trajectory export:
 *
 *  - stock:  stock level and orders over time;
 *  - cost:   realized horizon cost inside the shaded prediction band;
 *  - errors: both error-process staircases under their bound lines.
 *
 * The errors panel re-asserts the certified property (errors never above
 * the bound) before drawing anything.
 */

import { TrajectoryRow } from "./csv.js";
import { Band, ChartSpec, Point, Series, chartGroup, svgDocument } from "./svg.js";

export const PANELS = ["stock", "cost", "errors"] as const;
export type PanelName = (typeof PANELS)[number];

const WIDTH = 860;
const HEIGHT = 340;

function pick(
  rows: TrajectoryRow[],
  key: keyof TrajectoryRow,
): Point[] {
  return rows.map((row) => [row.t, row[key] as number | null]);
}

function requireColumns(rows: TrajectoryRow[], keys: (keyof TrajectoryRow)[]) {
  for (const key of keys) {
    if (!rows.some((row) => row[key] !== null && row[key] !== undefined)) {
      throw new Error(`column ${String(key)} carries no data`);
    }
  }
}

function stockChart(rows: TrajectoryRow[], title: string): ChartSpec {
  requireColumns(rows, ["stock", "order"]);
  return {
    title,
    yLabel: "items",
    xLabel: "step",
    series: [
      { name: "stock", points: pick(rows, "stock"), color: "#1f6feb" },
      { name: "order", points: pick(rows, "order"), color: "#d97706", width: 1.1 },
    ],
  };
}

function costChart(rows: TrajectoryRow[], title: string): ChartSpec {
  requireColumns(rows, ["horizon_cost", "interval_lo", "interval_hi"]);
  const band: Band = {
    name: "interval",
    lo: pick(rows, "interval_lo"),
    hi: pick(rows, "interval_hi"),
    color: "#1f6feb",
    opacity: 0.2,
  };
  return {
    title,
    yLabel: "horizon cost",
    xLabel: "step",
    bands: [band],
    series: [
      {
        name: "horizon_cost",
        points: pick(rows, "horizon_cost"),
        color: "#b91c1c",
      },
    ],
  };
}

function errorCharts(rows: TrajectoryRow[], title: string): ChartSpec[] {
  requireColumns(rows, ["policy_errors", "policy_bound"]);
  for (const row of rows) {
    if (row.policy_errors > row.policy_bound) {
      throw new Error(
        `certified property violated at t=${row.t}: policy errors ` +
          `${row.policy_errors} above bound ${row.policy_bound}`,
      );
    }
    if (
      row.inference_errors !== null &&
      row.inference_errors > (row.inference_bound ?? -Infinity)
    ) {
      throw new Error(
        `certified property violated at t=${row.t}: inference errors ` +
          `${row.inference_errors} above bound ${row.inference_bound}`,
      );
    }
  }
  return [
    {
      title: `${title} - critical stock events`,
      yLabel: "events",
      series: [
        {
          name: "policy_errors",
          points: pick(rows, "policy_errors"),
          color: "#b91c1c",
          kind: "stair",
        },
        {
          name: "policy_bound",
          points: pick(rows, "policy_bound"),
          color: "#1f6feb",
          dash: "5,3",
        },
      ],
    },
    {
      title: `${title} - miscoverage events (observed + potential)`,
      yLabel: "events",
      xLabel: "step",
      series: [
        {
          name: "inference_errors",
          points: pick(rows, "inference_errors"),
          color: "#b91c1c",
          kind: "stair",
        },
        {
          name: "inference_bound",
          points: pick(rows, "inference_bound"),
          color: "#1f6feb",
          dash: "5,3",
        },
      ],
    },
  ];
}

export function renderPanel(
  rows: TrajectoryRow[],
  panel: PanelName,
  title: string,
): string {
  switch (panel) {
    case "stock":
      return svgDocument(
        WIDTH,
        HEIGHT,
        chartGroup(stockChart(rows, title), 0, 0, WIDTH, HEIGHT),
      );
    case "cost":
      return svgDocument(
        WIDTH,
        HEIGHT,
        chartGroup(costChart(rows, title), 0, 0, WIDTH, HEIGHT),
      );
    case "errors": {
      const [top, bottom] = errorCharts(rows, title);
      return svgDocument(
        WIDTH,
        2 * HEIGHT,
        chartGroup(top, 0, 0, WIDTH, HEIGHT) +
          chartGroup(bottom, 0, HEIGHT, WIDTH, HEIGHT),
      );
    }
    default:
      throw new Error(`unknown panel ${JSON.stringify(panel)}`);
  }
}
