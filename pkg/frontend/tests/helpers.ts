import type { AnalysisReport, PcsPayload } from "../src/api.js";
import { ElicitationSession, newSession, setCell, setRoles } from "../src/session.js";

/** Example 1: five criteria on the Salo-Hamalainen scale, best c1, worst c5. */
export function example1Session(): ElicitationSession {
  let s = setRoles(newSession(["c1", "c2", "c3", "c4", "c5"], "salo"), [0], [4]);
  s = setCell(s, { row: "bestToOther", index: 4 }, 9); // best-to-worst judgment
  s = setCell(s, { row: "bestToOther", index: 1 }, 9);
  s = setCell(s, { row: "bestToOther", index: 2 }, 3);
  s = setCell(s, { row: "bestToOther", index: 3 }, 1.8571);
  s = setCell(s, { row: "otherToWorst", index: 1 }, 1.5);
  s = setCell(s, { row: "otherToWorst", index: 2 }, 4);
  s = setCell(s, { row: "otherToWorst", index: 3 }, 3);
  return s;
}

/** Two equally-preferred best criteria (c1, c2), worst c4, Saaty scale. */
export function example6Session(): ElicitationSession {
  let s = setRoles(newSession(["c1", "c2", "c3", "c4"], "saaty"), [0, 1], [3]);
  s = setCell(s, { row: "bestToOther", index: 3 }, 7);
  s = setCell(s, { row: "bestToOther", index: 2 }, 2);
  s = setCell(s, { row: "otherToWorst", index: 2 }, 3);
  return s;
}

export function fakeReport(overrides: Partial<AnalysisReport> = {}): AnalysisReport {
  return {
    epsilonStar: 0.5,
    abwStar: 2.25,
    intervals: [
      [0.36, 0.36],
      [0.24, 0.24],
      [0.24, 0.24],
      [0.16, 0.16],
    ],
    bestWeights: [0.36, 0.24, 0.24, 0.16],
    bestModifiedPcs: {
      names: ["c1", "c2", "c3", "c4"],
      best: [1],
      worst: [4],
      bestToOther: [1, 1.5, 1.5, 2.25],
      otherToWorst: [2.25, 1.5, 1.5, 1],
    },
    ci: 0.5,
    cr: 1.0,
    anchor: { kind: "pair", i: 2, j: 3 },
    boundsRespected: true,
    warnings: [],
    ...overrides,
  };
}

export interface RecordingFetch {
  fetch: (input: string, init?: RequestInit) => Promise<Response>;
  calls: { url: string; body: PcsPayload | null }[];
}

/** fetch stub answering /api/analyze with canned (or computed) reports. */
export function recordingFetch(respond: (body: PcsPayload) => AnalysisReport | { status: number; error: string }): RecordingFetch {
  const calls: RecordingFetch["calls"] = [];
  return {
    calls,
    fetch: async (url, init) => {
      const body = init?.body ? (JSON.parse(init.body as string) as PcsPayload) : null;
      calls.push({ url, body });
      if (init?.signal?.aborted) {
        throw new DOMException("aborted", "AbortError");
      }
      const result = respond(body as PcsPayload);
      if ("status" in result && "error" in result) {
        return new Response(JSON.stringify({ error: result.error, type: "RoleConflictError" }), {
          status: result.status,
        });
      }
      return new Response(JSON.stringify(result), { status: 200 });
    },
  };
}
