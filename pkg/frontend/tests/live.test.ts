import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { ApiClient } from "../src/api.js";
import { LIVE_DEBOUNCE_MS, LiveAnalyzer } from "../src/live.js";
import { newSession, setCell, setRoles } from "../src/session.js";
import { example1Session, fakeReport, recordingFetch } from "./helpers.js";

describe("debounced live submission", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("waits out the debounce window before calling the service", async () => {
    const rec = recordingFetch(() => fakeReport());
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const pending = analyzer.schedule(example1Session());
    expect(rec.calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(LIVE_DEBOUNCE_MS - 1);
    expect(rec.calls).toHaveLength(0);
    await vi.advanceTimersByTimeAsync(2);
    expect(await pending).not.toBeNull();
    expect(rec.calls).toHaveLength(1);
  });

  it("collapses rapid edits into a single request, newest wins", async () => {
    const rec = recordingFetch((body) => fakeReport({ epsilonStar: body.bestToOther[1]! }));
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    let s = example1Session();
    const first = analyzer.schedule(s);
    await vi.advanceTimersByTimeAsync(100);
    s = setCell(s, { row: "bestToOther", index: 1 }, 4);
    const second = analyzer.schedule(s);
    await vi.advanceTimersByTimeAsync(LIVE_DEBOUNCE_MS + 1);
    expect(await first).toBeNull(); // superseded edit never reaches the wire
    const report = await second;
    expect(report?.epsilonStar).toBe(4);
    expect(rec.calls).toHaveLength(1);
  });

  it("returns null for incomplete grids without calling the service", async () => {
    const rec = recordingFetch(() => fakeReport());
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const pending = analyzer.schedule(setRoles(newSession(["a", "b", "c"]), [0], [2]));
    await vi.advanceTimersByTimeAsync(LIVE_DEBOUNCE_MS + 1);
    expect(await pending).toBeNull();
    expect(rec.calls).toHaveLength(0);
  });

  it("keeps entered preferences when the service rejects the grid", async () => {
    const rec = recordingFetch(() => ({ status: 400, error: "bad entry" }));
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const session = example1Session();
    const pending = analyzer.schedule(session);
    const expectation = expect(pending).rejects.toThrow("bad entry");
    await vi.advanceTimersByTimeAsync(LIVE_DEBOUNCE_MS + 1);
    await expectation;
    // the failure surfaces as an error; the session object is untouched
    expect(session.bestRow[1]).toBe(9);
  });
});

describe("what-if previews", () => {
  it("issues exactly two analyze calls for a one-cell trial", async () => {
    const rec = recordingFetch((body) => fakeReport({ cr: body.bestToOther[2] === 5 ? 0.3 : 0.1 }));
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const delta = await analyzer.whatIf(example1Session(), { row: "bestToOther", index: 2 }, 5);
    expect(rec.calls).toHaveLength(2);
    expect(delta.base.cr).toBe(0.1);
    expect(delta.shadow.cr).toBe(0.3);
    expect(delta.crDelta).toBeCloseTo(0.2, 12);
  });

  it("produces zero deltas for a no-op change", async () => {
    const rec = recordingFetch(() => fakeReport({ cr: 0.1037 }));
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const session = example1Session();
    const delta = await analyzer.whatIf(session, { row: "bestToOther", index: 2 }, 3); // already 3
    expect(rec.calls).toHaveLength(2);
    expect(delta.crDelta).toBe(0);
    expect(delta.weightDeltas.every((d) => d === 0)).toBe(true);
  });

  it("passes the shadow report's warnings through untouched", async () => {
    const rec = recordingFetch((body) =>
      body.bestToOther.some((v) => v > 9)
        ? fakeReport({ warnings: ["bestToOther[3] = 12 exceeds the best-to-worst value 9"] })
        : fakeReport(),
    );
    const analyzer = new LiveAnalyzer(new ApiClient("", rec.fetch));
    const delta = await analyzer.whatIf(example1Session(), { row: "bestToOther", index: 2 }, 12);
    expect(delta.shadow.warnings[0]).toMatch(/exceeds the best-to-worst/);
    expect(delta.base.warnings).toHaveLength(0);
  });
});
