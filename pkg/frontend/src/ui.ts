/** DOM rendering. Presentation only: every displayed number is read from a
 * service report (or is the difference of two reports in the what-if
 * panel); highlighting uses the report's anchor field. */

import { AnalysisReport, ScaleInfo } from "./api.js";
import { fmt4, fmtDelta, levelLabel, weightsCsv } from "./format.js";
import {
  CellState,
  ElicitationSession,
  GridCell,
  Row,
  WhatIfDelta,
  abwCell,
  cellState,
} from "./session.js";

export interface UiCallbacks {
  onRename(index: number, name: string): void;
  onCriteriaCount(count: number): void;
  onScale(scaleId: string): void;
  onToggleRole(role: "best" | "worst", index: number): void;
  onCell(cell: GridCell, value: number): void;
  onWhatIf(cell: GridCell, value: number): void;
  onExportJson(): void;
  onExportCsv(): void;
}

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (Node | string)[]
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  for (const [key, value] of Object.entries(attrs)) {
    if (key === "class") node.className = value;
    else node.setAttribute(key, value);
  }
  node.append(...children);
  return node;
}

function anchorCriteria(report: AnalysisReport | null): Set<number> {
  const out = new Set<number>();
  if (!report) return out;
  if (report.anchor.i) out.add(report.anchor.i - 1);
  if (report.anchor.j) out.add(report.anchor.j - 1);
  return out;
}

export class AppView {
  private whatIfPick: GridCell | null = null;

  constructor(
    private readonly root: HTMLElement,
    private readonly callbacks: UiCallbacks,
  ) {}

  render(session: ElicitationSession, scales: ScaleInfo[], whatIf: WhatIfDelta | null): void {
    this.root.replaceChildren(
      this.renderSetup(session, scales),
      this.renderGrid(session, scales),
      this.renderReport(session),
      this.renderWhatIf(session, whatIf),
    );
  }

  private scale(session: ElicitationSession, scales: ScaleInfo[]): ScaleInfo | undefined {
    return scales.find((s) => s.id === session.scaleId);
  }

  private renderSetup(session: ElicitationSession, scales: ScaleInfo[]): HTMLElement {
    const scaleSelect = el("select", { id: "scale-select" });
    for (const scale of scales) {
      const option = el("option", { value: scale.id }, scale.id);
      if (scale.id === session.scaleId) option.selected = true;
      scaleSelect.append(option);
    }
    scaleSelect.addEventListener("change", () => this.callbacks.onScale(scaleSelect.value));

    const count = el("input", { id: "criteria-count", type: "number", min: "2", max: "15" });
    count.value = String(session.criteria.length);
    count.addEventListener("change", () => this.callbacks.onCriteriaCount(Number(count.value)));

    const names = el("div", { class: "names" });
    session.criteria.forEach((name, index) => {
      const input = el("input", { type: "text", class: "name-input", "data-index": String(index) });
      input.value = name;
      input.addEventListener("change", () => this.callbacks.onRename(index, input.value));
      names.append(input);
    });

    const roleChips = (role: "best" | "worst") => {
      const active = role === "best" ? session.best : session.worst;
      const box = el("div", { class: "chips", id: `${role}-chips` });
      session.criteria.forEach((name, index) => {
        const chip = el(
          "button",
          { class: `chip ${active.includes(index) ? "on" : ""}`, "data-role": role, "data-index": String(index) },
          name,
        );
        chip.addEventListener("click", () => this.callbacks.onToggleRole(role, index));
        box.append(chip);
      });
      return box;
    };

    return el(
      "section",
      { class: "setup" },
      el("h2", {}, "Criteria and roles"),
      el("label", {}, "How many criteria? ", count),
      names,
      el("label", {}, "Scale ", scaleSelect),
      el("div", {}, el("span", { class: "role-label" }, "Best (most preferred): "), roleChips("best")),
      el("div", {}, el("span", { class: "role-label" }, "Worst (least preferred): "), roleChips("worst")),
    );
  }

  private levelSelect(
    session: ElicitationSession,
    scales: ScaleInfo[],
    cell: GridCell,
    state: CellState,
    onPick: (value: number) => void,
  ): HTMLElement {
    const scale = this.scale(session, scales);
    const select = el("select", {
      class: "cell",
      "data-row": cell.row,
      "data-index": String(cell.index),
    }) as HTMLSelectElement;
    select.append(el("option", { value: "" }, "-"));
    for (const level of scale?.levels ?? []) {
      const option = el("option", { value: String(level.value) }, levelLabel(level.term, level.value));
      if (state.value !== null && Math.abs(level.value - state.value) < 1e-12) option.selected = true;
      select.append(option);
    }
    if (state.kind === "locked") {
      select.disabled = true;
      select.title = state.reason;
      select.classList.add("locked");
    } else {
      select.addEventListener("change", () => {
        if (select.value !== "") onPick(Number(select.value));
      });
    }
    return select;
  }

  private renderGrid(session: ElicitationSession, scales: ScaleInfo[]): HTMLElement {
    const anchors = anchorCriteria(session.liveReport);
    const abw = abwCell(session);
    const table = el("table", { class: "grid" });
    const head = el("tr", {}, el("th", {}, ""));
    session.criteria.forEach((name, index) => {
      const th = el("th", {}, name);
      if (anchors.has(index)) th.classList.add("anchor");
      head.append(th);
    });
    table.append(head);

    const rows: [Row, string][] = [
      ["bestToOther", "Best vs criterion"],
      ["otherToWorst", "Criterion vs worst"],
    ];
    for (const [row, label] of rows) {
      const tr = el("tr", {}, el("th", {}, label));
      session.criteria.forEach((_, index) => {
        const cell: GridCell = { row, index };
        const state = cellState(session, cell);
        const td = el("td", {});
        if (anchors.has(index)) td.classList.add("anchor");
        if (abw && row === abw.row && index === abw.index) td.classList.add("abw");
        td.append(this.levelSelect(session, scales, cell, state, (value) => this.callbacks.onCell(cell, value)));
        tr.append(td);
      });
      table.append(tr);
    }
    const hint = el(
      "p",
      { class: "hint" },
      "Shaded cells are derived from the role selections; the outlined cell is the best-to-worst judgment. Highlighted columns drive the current inconsistency.",
    );
    return el("section", { class: "grid-box" }, el("h2", {}, "Preferences"), table, hint);
  }

  private crBadge(report: AnalysisReport): HTMLElement {
    const cls = report.cr >= 0.9999 ? "bad" : report.cr > 0.25 ? "warn" : "ok";
    const badge = el("span", { class: `cr-badge ${cls}`, id: "cr-badge" }, fmt4(report.cr));
    return badge;
  }

  private renderReport(session: ElicitationSession): HTMLElement {
    const box = el("section", { class: "report" }, el("h2", {}, "Live analysis"));
    if (session.error) {
      box.append(el("p", { class: "error", id: "error-box" }, session.error));
    }
    const report = session.liveReport;
    if (!report) {
      box.append(el("p", { class: "placeholder" }, "Fill in every open cell to see weights and consistency."));
      return box;
    }
    box.append(
      el(
        "p",
        {},
        "Consistency ratio ",
        this.crBadge(report),
        report.cr >= 0.9999 ? el("span", { class: "banner" }, " maximal inconsistency") : "",
        ` (deviation ${fmt4(report.epsilonStar)}, index ${fmt4(report.ci)})`,
      ),
    );

    const table = el(
      "table",
      { class: "weights", id: "weight-table" },
      el("tr", {}, el("th", {}, "criterion"), el("th", {}, "weight"), el("th", {}, "optimal range"), el("th", {}, "")),
    );
    const maxHi = Math.max(...report.intervals.map(([, hi]) => hi));
    report.bestWeights.forEach((weight, k) => {
      const [lo, hi] = report.intervals[k]!;
      const bar = el("div", { class: "bar" });
      bar.append(
        el("div", {
          class: "bar-range",
          style: `left:${(lo / maxHi) * 100}%;width:${(Math.max(hi - lo, 0.002) / maxHi) * 100}%`,
        }),
        el("div", { class: "bar-point", style: `left:${(weight / maxHi) * 100}%` }),
      );
      table.append(
        el(
          "tr",
          {},
          el("td", {}, session.criteria[k] ?? `c${k + 1}`),
          el("td", { class: "weight-cell" }, fmt4(weight)),
          el("td", {}, `[${fmt4(lo)}, ${fmt4(hi)}]`),
          el("td", { class: "bar-cell" }, bar),
        ),
      );
    });
    box.append(table);

    if (report.warnings.length > 0) {
      const chips = el("div", { class: "warnings" });
      for (const warning of report.warnings) chips.append(el("span", { class: "warning-chip" }, warning));
      box.append(chips);
    }

    const exportJson = el("button", { id: "export-json" }, "Download report JSON");
    exportJson.addEventListener("click", () => this.callbacks.onExportJson());
    const exportCsv = el("button", { id: "export-csv" }, "Download weights CSV");
    exportCsv.addEventListener("click", () => this.callbacks.onExportCsv());
    box.append(el("div", { class: "exports" }, exportJson, exportCsv));
    return box;
  }

  private renderWhatIf(session: ElicitationSession, delta: WhatIfDelta | null): HTMLElement {
    const box = el("section", { class: "whatif" }, el("h2", {}, "What if?"));
    if (!session.liveReport) {
      box.append(el("p", { class: "placeholder" }, "Complete the grid first, then try a revision here."));
      return box;
    }
    box.append(
      el(
        "p",
        { class: "hint" },
        "Pick any open cell and a trial value to preview the effect without committing it.",
      ),
    );
    const cellPick = el("select", { id: "whatif-cell" }) as HTMLSelectElement;
    cellPick.append(el("option", { value: "" }, "choose a cell"));
    for (const row of ["bestToOther", "otherToWorst"] as Row[]) {
      session.criteria.forEach((name, index) => {
        if (cellState(session, { row, index }).kind !== "editable") return;
        const label = row === "bestToOther" ? `best vs ${name}` : `${name} vs worst`;
        cellPick.append(el("option", { value: `${row}:${index}` }, label));
      });
    }
    cellPick.addEventListener("change", () => {
      const [row, index] = cellPick.value.split(":");
      this.whatIfPick = cellPick.value ? { row: row as Row, index: Number(index) } : null;
    });
    const valuePick = el("input", { id: "whatif-value", type: "number", step: "any", min: "1" }) as HTMLInputElement;
    const go = el("button", { id: "whatif-go" }, "Preview");
    go.addEventListener("click", () => {
      if (this.whatIfPick && valuePick.value !== "") {
        this.callbacks.onWhatIf(this.whatIfPick, Number(valuePick.value));
      }
    });
    box.append(el("div", { class: "whatif-controls" }, cellPick, valuePick, go));

    if (delta) {
      const table = el(
        "table",
        { class: "weights", id: "whatif-table" },
        el("tr", {}, el("th", {}, "criterion"), el("th", {}, "now"), el("th", {}, "would be"), el("th", {}, "delta")),
      );
      delta.base.bestWeights.forEach((w, k) => {
        table.append(
          el(
            "tr",
            {},
            el("td", {}, session.criteria[k] ?? `c${k + 1}`),
            el("td", {}, fmt4(w)),
            el("td", {}, fmt4(delta.shadow.bestWeights[k] ?? NaN)),
            el("td", { class: "delta" }, fmtDelta(delta.weightDeltas[k] ?? NaN)),
          ),
        );
      });
      box.append(
        el(
          "p",
          { id: "whatif-cr" },
          `Consistency ratio ${fmt4(delta.base.cr)} -> ${fmt4(delta.shadow.cr)} (${fmtDelta(delta.crDelta)})`,
        ),
        table,
      );
      if (delta.shadow.warnings.length > 0) {
        const chips = el("div", { class: "warnings" });
        for (const warning of delta.shadow.warnings) chips.append(el("span", { class: "warning-chip" }, warning));
        box.append(chips);
      }
    }
    return box;
  }
}

export function download(filename: string, text: string, mime: string): void {
  const blob = new Blob([text], { type: mime });
  const url = URL.createObjectURL(blob);
  const a = document.createElement("a");
  a.href = url;
  a.download = filename;
  a.click();
  URL.revokeObjectURL(url);
}

export function reportCsv(session: ElicitationSession): string {
  const report = session.liveReport;
  if (!report) return "";
  return weightsCsv(session.criteria, report.bestWeights, report.intervals);
}
