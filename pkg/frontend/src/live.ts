/** Debounced live submission with newest-wins cancellation: at most one
 * request in flight; a newer grid edit aborts the older request. */

import { ApiClient, AnalysisReport } from "./api.js";
import { ElicitationSession, isComplete, toPayload, whatIfDelta, WhatIfDelta, GridCell, setCell } from "./session.js";

export const LIVE_DEBOUNCE_MS = 300;

export class LiveAnalyzer {
  private timer: ReturnType<typeof setTimeout> | null = null;
  private supersede: (() => void) | null = null;
  private inFlight: AbortController | null = null;

  constructor(
    private readonly client: ApiClient,
    private readonly debounceMs: number = LIVE_DEBOUNCE_MS,
  ) {}

  /** Schedule a live analysis after the debounce window; resolves with the
   * report, or null when superseded by a newer edit or incomplete input. */
  schedule(session: ElicitationSession): Promise<AnalysisReport | null> {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.supersede?.();
    }
    return new Promise((resolve, reject) => {
      this.supersede = () => resolve(null);
      this.timer = setTimeout(() => {
        this.timer = null;
        this.supersede = null;
        this.submitNow(session).then(resolve, reject);
      }, this.debounceMs);
    });
  }

  /** Immediate submission (used by tests and the what-if panel). */
  async submitNow(session: ElicitationSession): Promise<AnalysisReport | null> {
    if (!isComplete(session)) return null;
    this.inFlight?.abort();
    const controller = new AbortController();
    this.inFlight = controller;
    try {
      return await this.client.analyze(toPayload(session), controller.signal);
    } catch (err) {
      if (controller.signal.aborted) return null; // superseded
      throw err;
    } finally {
      if (this.inFlight === controller) this.inFlight = null;
    }
  }

  /** Shadow comparison for one trial cell edit: exactly two analyze calls
   * (base and shadow), nothing committed to the session. */
  async whatIf(session: ElicitationSession, cell: GridCell, value: number): Promise<WhatIfDelta> {
    const shadowSession = setCell(session, cell, value);
    const [base, shadow] = await Promise.all([
      this.client.analyze(toPayload(session)),
      this.client.analyze(toPayload(shadowSession)),
    ]);
    return whatIfDelta(base, shadow);
  }
}
