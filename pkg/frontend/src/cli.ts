#!/usr/bin/env node
/**
 * plots --csv PATH --panel NAME --out PATH [--check] [--metrics PATH]
 *
 * Renders one panel of a stockguard trajectory export to SVG. With
 * --check, first validates the export against its metrics.json (by default
 * the sibling of the CSV) and exits 1 on any mismatch; rendering is then
 * optional. Exit codes: 0 ok, 1 failed check, 2 usage or I/O error.
 */

import { readFileSync, writeFileSync } from "fs";
import path from "path";

import { checkTrajectory } from "./check.js";
import { parseMetrics, parseTrajectory } from "./csv.js";
import { PANELS, PanelName, renderPanel } from "./panels.js";

interface Args {
  csv?: string;
  panel?: string;
  out?: string;
  metrics?: string;
  title?: string;
  check: boolean;
}

export function parseArgs(argv: string[]): Args {
  const args: Args = { check: false };
  for (let i = 0; i < argv.length; i++) {
    const flag = argv[i];
    const next = () => {
      if (i + 1 >= argv.length) throw new Error(`flag ${flag} needs a value`);
      return argv[++i];
    };
    switch (flag) {
      case "--csv":
        args.csv = next();
        break;
      case "--panel":
        args.panel = next();
        break;
      case "--out":
        args.out = next();
        break;
      case "--metrics":
        args.metrics = next();
        break;
      case "--title":
        args.title = next();
        break;
      case "--check":
        args.check = true;
        break;
      case "--help":
      case "-h":
        args.csv = args.csv ?? undefined;
        printUsage();
        break;
      default:
        throw new Error(`unknown flag ${flag}`);
    }
  }
  return args;
}

function printUsage(): void {
  console.log(
    "usage: plots --csv PATH [--panel stock|cost|errors --out PATH] " +
      "[--check] [--metrics PATH] [--title TEXT]",
  );
}

export function runCli(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  if (!args.csv) {
    printUsage();
    return 2;
  }

  let rows;
  try {
    rows = parseTrajectory(readFileSync(args.csv, "utf-8"));
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }

  if (args.check) {
    const metricsPath =
      args.metrics ?? path.join(path.dirname(args.csv), "metrics.json");
    let metrics;
    try {
      metrics = parseMetrics(readFileSync(metricsPath, "utf-8"));
    } catch (err) {
      console.error(`error: ${(err as Error).message}`);
      return 2;
    }
    const report = checkTrajectory(rows, metrics);
    if (!report.ok) {
      for (const problem of report.problems) console.error(`CHECK FAIL: ${problem}`);
      return 1;
    }
    console.log(
      `check ok: service level ${report.serviceLevel.toFixed(4)}, ` +
        `coverage ${report.coverage.toFixed(4)}`,
    );
  }

  if (args.panel !== undefined || args.out !== undefined) {
    if (!args.panel || !args.out) {
      console.error("error: rendering needs both --panel and --out");
      return 2;
    }
    if (!(PANELS as readonly string[]).includes(args.panel)) {
      console.error(
        `error: unknown panel ${args.panel}; expected ${PANELS.join("|")}`,
      );
      return 2;
    }
    const title = args.title ?? `${args.panel}: ${path.basename(args.csv)}`;
    let svg: string;
    try {
      svg = renderPanel(rows, args.panel as PanelName, title);
    } catch (err) {
      console.error(`error: ${(err as Error).message}`);
      return 2;
    }
    writeFileSync(args.out, svg);
    console.log(`wrote ${args.out}`);
  } else if (!args.check) {
    printUsage();
    return 2;
  }
  return 0;
}

const invokedDirectly =
  process.argv[1] !== undefined &&
  import.meta.url === new URL(`file://${path.resolve(process.argv[1])}`).href;
if (invokedDirectly) {
  process.exit(runCli(process.argv.slice(2)));
}
