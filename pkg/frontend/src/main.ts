/** Application bootstrap: wires the session state, the debounced live
 * analyzer and the view together. */

import { ApiClient, ScaleInfo } from "./api.js";
import { LiveAnalyzer } from "./live.js";
import {
  ElicitationSession,
  GridCell,
  WhatIfDelta,
  newSession,
  renameCriterion,
  setCell,
  setRoles,
} from "./session.js";
import { AppView, download, reportCsv } from "./ui.js";

const client = new ApiClient();
const analyzer = new LiveAnalyzer(client);

let session: ElicitationSession = newSession(["c1", "c2", "c3", "c4"]);
let scales: ScaleInfo[] = [];
let whatIf: WhatIfDelta | null = null;

function rerender(): void {
  view.render(session, scales, whatIf);
}

function resubmit(): void {
  whatIf = null;
  analyzer
    .schedule(session)
    .then((report) => {
      if (report) {
        session = { ...session, liveReport: report, error: null };
        rerender();
      }
    })
    .catch((err: Error) => {
      session = { ...session, error: err.message };
      rerender();
    });
  rerender();
}

const view = new AppView(document.getElementById("app")!, {
  onRename(index, name) {
    session = renameCriterion(session, index, name);
    rerender();
  },
  onCriteriaCount(count) {
    const bounded = Math.max(2, Math.min(15, Math.floor(count)));
    const names = Array.from({ length: bounded }, (_, i) => session.criteria[i] ?? `c${i + 1}`);
    session = newSession(names, session.scaleId);
    rerender();
  },
  onScale(scaleId) {
    session = newSession(session.criteria, scaleId);
    rerender();
  },
  onToggleRole(role, index) {
    const current = role === "best" ? session.best : session.worst;
    const other = role === "best" ? session.worst : session.best;
    if (other.includes(index)) return; // roles stay disjoint
    const next = current.includes(index) ? current.filter((i) => i !== index) : [...current, index];
    session = setRoles(
      session,
      role === "best" ? next : session.best,
      role === "worst" ? next : session.worst,
    );
    resubmit();
  },
  onCell(cell: GridCell, value: number) {
    session = setCell(session, cell, value);
    resubmit();
  },
  onWhatIf(cell: GridCell, value: number) {
    analyzer
      .whatIf(session, cell, value)
      .then((delta) => {
        whatIf = delta;
        rerender();
      })
      .catch((err: Error) => {
        session = { ...session, error: err.message };
        rerender();
      });
  },
  onExportJson() {
    if (session.liveReport) {
      download("bwm-report.json", JSON.stringify(session.liveReport, null, 2), "application/json");
    }
  },
  onExportCsv() {
    if (session.liveReport) {
      download("bwm-weights.csv", reportCsv(session), "text/csv");
    }
  },
});

client
  .scales()
  .then((loaded) => {
    scales = loaded;
    rerender();
  })
  .catch((err: Error) => {
    session = { ...session, error: `could not load scales: ${err.message}` };
    rerender();
  });

rerender();
