/** Elicitation session state and the grid lock rules.
 *
 * The decision-maker edits two preference rows (best-to-other and
 * other-to-worst). Cells implied by the role selections are locked: role
 * self-comparisons are pinned to 1, and every best/worst crossing repeats
 * the single best-to-worst judgment entered in the first worst column. A
 * payload built from a complete session therefore always satisfies the
 * service's role invariants.
 */

import type { AnalysisReport, PcsPayload } from "./api.js";

export type Row = "bestToOther" | "otherToWorst";

export interface GridCell {
  row: Row;
  index: number; // 0-based criterion index
}

export interface ElicitationSession {
  criteria: string[];
  best: number[]; // 0-based, non-empty once selected
  worst: number[];
  scaleId: string;
  bestRow: (number | null)[];
  worstRow: (number | null)[];
  liveReport: AnalysisReport | null;
  error: string | null;
}

export function newSession(criteria: string[], scaleId = "saaty"): ElicitationSession {
  return {
    criteria: [...criteria],
    best: [],
    worst: [],
    scaleId,
    bestRow: criteria.map(() => null),
    worstRow: criteria.map(() => null),
    liveReport: null,
    error: null,
  };
}

export function renameCriterion(session: ElicitationSession, index: number, name: string): ElicitationSession {
  const criteria = [...session.criteria];
  criteria[index] = name;
  return { ...session, criteria };
}

export function setRoles(session: ElicitationSession, best: number[], worst: number[]): ElicitationSession {
  return { ...session, best: [...best].sort((a, b) => a - b), worst: [...worst].sort((a, b) => a - b) };
}

export type CellState =
  | { kind: "editable"; value: number | null }
  | { kind: "locked"; value: number | null; reason: string };

/** The single editable cell holding the best-to-worst judgment. */
export function abwCell(session: ElicitationSession): GridCell | null {
  if (session.best.length === 0 || session.worst.length === 0) return null;
  return { row: "bestToOther", index: session.worst[0]! };
}

export function abwValue(session: ElicitationSession): number | null {
  const cell = abwCell(session);
  return cell ? session.bestRow[cell.index] ?? null : null;
}

export function cellState(session: ElicitationSession, cell: GridCell): CellState {
  const { row, index } = cell;
  const isBest = session.best.includes(index);
  const isWorst = session.worst.includes(index);
  const abw = abwValue(session);
  if (row === "bestToOther") {
    if (isBest) return { kind: "locked", value: 1, reason: "best criterion vs itself" };
    if (isWorst) {
      const anchor = abwCell(session);
      if (anchor && anchor.index === index) return { kind: "editable", value: session.bestRow[index] ?? null };
      return { kind: "locked", value: abw, reason: "repeats the best-to-worst judgment" };
    }
    return { kind: "editable", value: session.bestRow[index] ?? null };
  }
  if (isWorst) return { kind: "locked", value: 1, reason: "worst criterion vs itself" };
  if (isBest) return { kind: "locked", value: abw, reason: "repeats the best-to-worst judgment" };
  return { kind: "editable", value: session.worstRow[index] ?? null };
}

export function setCell(session: ElicitationSession, cell: GridCell, value: number): ElicitationSession {
  const state = cellState(session, cell);
  if (state.kind === "locked") return session;
  const next = { ...session, bestRow: [...session.bestRow], worstRow: [...session.worstRow] };
  if (cell.row === "bestToOther") next.bestRow[cell.index] = value;
  else next.worstRow[cell.index] = value;
  return next;
}

export function editableCells(session: ElicitationSession): GridCell[] {
  const cells: GridCell[] = [];
  for (const row of ["bestToOther", "otherToWorst"] as Row[]) {
    for (let index = 0; index < session.criteria.length; index += 1) {
      if (cellState(session, { row, index }).kind === "editable") cells.push({ row, index });
    }
  }
  return cells;
}

export function isComplete(session: ElicitationSession): boolean {
  if (session.best.length === 0 || session.worst.length === 0) return false;
  return editableCells(session).every((cell) => cellState(session, cell).value != null);
}

/** Build the service payload, materializing every locked cell. */
export function toPayload(session: ElicitationSession): PcsPayload {
  if (!isComplete(session)) {
    throw new Error("the preference grid is not completely filled in");
  }
  const n = session.criteria.length;
  const bestToOther: number[] = [];
  const otherToWorst: number[] = [];
  for (let index = 0; index < n; index += 1) {
    bestToOther.push(cellState(session, { row: "bestToOther", index }).value as number);
    otherToWorst.push(cellState(session, { row: "otherToWorst", index }).value as number);
  }
  return {
    names: [...session.criteria],
    best: session.best.map((i) => i + 1),
    worst: session.worst.map((i) => i + 1),
    bestToOther,
    otherToWorst,
    scale: session.scaleId,
  };
}

export interface WhatIfDelta {
  base: AnalysisReport;
  shadow: AnalysisReport;
  crDelta: number;
  weightDeltas: number[];
}

/** Difference of two service reports for a one-cell trial edit; both reports
 * come from the service (exactly two analyze calls). */
export function whatIfDelta(base: AnalysisReport, shadow: AnalysisReport): WhatIfDelta {
  return {
    base,
    shadow,
    crDelta: shadow.cr - base.cr,
    weightDeltas: shadow.bestWeights.map((w, k) => w - (base.bestWeights[k] ?? 0)),
  };
}
