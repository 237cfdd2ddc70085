/**
 * Thin bindings over the `hvbox` command-line tool.
 *
 * All numeric work happens in the CLI process; this package only writes
 * point files, spawns subcommands, and parses the documents and tables
 * they emit. Set HVBOX_CLI to override the executable (default: "hvbox").
 */

import { execFileSync } from "node:child_process";
import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

export type PointInput = readonly (readonly number[])[];

export interface DecomposeOptions {
  /** Clip the upper grid bounds to this reference point. */
  reference?: readonly number[];
  /** Replace the lower sentinel bounds with this point. */
  ideal?: readonly number[];
}

export interface BoxBounds {
  lower: number[];
  upper: number[];
}

export interface DecompositionMeta {
  alpha: number;
  mode: string;
  reference?: number[];
  ideal?: number[];
  m: number;
  n: number;
}

export interface DecompositionDiagnostics {
  iterations: number;
  accepted: number;
  pruned_dominated: number;
  pruned_resolution: number;
  pruned_volume: number;
  max_depth: number;
}

export interface DecompositionDocument {
  meta: DecompositionMeta;
  h_all: number;
  h_tol: number;
  sum_volume: number;
  bounds: BoxBounds;
  boxes: BoxBounds[];
  diagnostics: DecompositionDiagnostics;
}

export interface HviRow {
  value: number;
  belowBound: boolean;
}

function cliCommand(): string {
  return process.env.HVBOX_CLI ?? "hvbox";
}

function runCli(args: string[]): string {
  const command = cliCommand();
  try {
    return execFileSync(command, args, {
      encoding: "utf8",
      stdio: ["ignore", "pipe", "pipe"],
    });
  } catch (error) {
    const failure = error as { stderr?: string; message?: string };
    const detail = failure.stderr?.trim() || failure.message || "unknown failure";
    throw new Error(detail);
  }
}

function toCsv(points: PointInput): string {
  if (points.length === 0) {
    return "# empty\n";
  }
  return points.map((row) => row.join(",")).join("\n") + "\n";
}

function withTempDir<T>(body: (dir: string) => T): T {
  const dir = mkdtempSync(join(tmpdir(), "hvbox-"));
  try {
    return body(dir);
  } finally {
    rmSync(dir, { recursive: true, force: true });
  }
}

function parseHviTable(text: string): HviRow[] {
  const rows: HviRow[] = [];
  for (const line of text.split("\n")) {
    if (!line || line.startsWith("#")) {
      continue;
    }
    const fields = line.split("\t");
    rows.push({ value: Number(fields[1]), belowBound: fields[2] === "below-bound" });
  }
  return rows;
}

/** Parsed decomposition plus improvement queries routed through the CLI. */
export class DecompositionHandle {
  readonly document: DecompositionDocument;
  private readonly documentText: string;

  constructor(documentText: string) {
    this.documentText = documentText;
    this.document = JSON.parse(documentText) as DecompositionDocument;
  }

  get boxCount(): number {
    return this.document.diagnostics.accepted;
  }

  /** Total volume of the kept boxes, as reported by the document. */
  nondominatedVolume(): number {
    return this.document.sum_volume;
  }

  /** Improvement per candidate, in input order. */
  hviBatch(candidates: PointInput): number[] {
    return this.hviBatchDetailed(candidates).map((row) => row.value);
  }

  /** Improvement per candidate plus the below-lower-bound flag. */
  hviBatchDetailed(candidates: PointInput): HviRow[] {
    if (candidates.length === 0) {
      return [];
    }
    return withTempDir((dir) => {
      const docPath = join(dir, "decomposition.json");
      const candPath = join(dir, "candidates.csv");
      writeFileSync(docPath, this.documentText, "utf8");
      writeFileSync(candPath, toCsv(candidates), "utf8");
      return parseHviTable(runCli(["hvi", "--doc", docPath, candPath]));
    });
  }
}

/**
 * Decompose the non-dominated space of a raw point set (dominated rows are
 * filtered by the CLI) at the given volume tolerance.
 */
export function decompose(
  points: PointInput,
  alpha: number,
  options: DecomposeOptions = {},
): DecompositionHandle {
  return withTempDir((dir) => {
    const frontPath = join(dir, "front.csv");
    writeFileSync(frontPath, toCsv(points), "utf8");
    const args = ["decompose", "--alpha", String(alpha)];
    if (options.reference) {
      args.push("--ref", options.reference.join(","));
    }
    if (options.ideal) {
      args.push("--ideal", options.ideal.join(","));
    }
    args.push(frontPath);
    return new DecompositionHandle(runCli(args));
  });
}

/** Improvement per candidate against an existing handle, in input order. */
export function hviBatch(handle: DecompositionHandle, candidates: PointInput): number[] {
  return handle.hviBatch(candidates);
}

/**
 * Brute-force hypervolume of `points` bounded by `reference`, or, with
 * `yNew`, the brute-force improvement of that candidate.
 */
export function oracleHv(
  points: PointInput,
  reference: readonly number[],
  yNew?: readonly number[],
): number {
  return withTempDir((dir) => {
    const path = join(dir, "points.csv");
    writeFileSync(path, toCsv(points), "utf8");
    const args = ["oracle", "--ref", reference.join(",")];
    if (yNew) {
      args.push("--new", yNew.join(","));
    }
    args.push(path);
    return Number(runCli(args).trim());
  });
}
