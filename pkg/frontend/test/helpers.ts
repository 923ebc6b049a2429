import { readFileSync } from "fs";
import path from "path";
import { fileURLToPath } from "url";

const here = path.dirname(fileURLToPath(import.meta.url));

/** Shipped outputs of the three synthetic scenarios, produced by the
 * primary CLI (stockguard run). */
export const SCENARIO_DIR = path.resolve(here, "..", "..", "scenario_outputs");
export const SCENARIOS = ["periodic", "sir", "feedback"] as const;

export function readScenario(name: string): { csv: string; metrics: string } {
  return {
    csv: readFileSync(path.join(SCENARIO_DIR, name, "trajectory.csv"), "utf-8"),
    metrics: readFileSync(path.join(SCENARIO_DIR, name, "metrics.json"), "utf-8"),
  };
}

export function scenarioPath(name: string, file: string): string {
  return path.join(SCENARIO_DIR, name, file);
}

/**
 * Minimal XML well-formedness check: every opened tag must close in order.
 * Good enough to call an SVG "parseable" without a DOM dependency.
 */
export function assertWellFormedXml(text: string): void {
  const stack: string[] = [];
  // lazy attribute group so the self-closing slash lands in its own group
  const tagRe = /<(\/?)([a-zA-Z][\w-]*)((?:"[^"]*"|'[^']*'|[^"'>])*?)(\/?)>/g;
  const body = text.replace(/<\?[^?]*\?>/g, "").replace(/<!--[\s\S]*?-->/g, "");
  let match;
  let seen = 0;
  while ((match = tagRe.exec(body)) !== null) {
    seen += 1;
    const [, closing, name, , selfClosing] = match;
    if (closing) {
      const open = stack.pop();
      if (open !== name) {
        throw new Error(`mismatched tag: expected </${open}>, found </${name}>`);
      }
    } else if (!selfClosing) {
      stack.push(name);
    }
  }
  if (seen === 0) throw new Error("no XML tags found");
  if (stack.length > 0) throw new Error(`unclosed tags: ${stack.join(", ")}`);
}
