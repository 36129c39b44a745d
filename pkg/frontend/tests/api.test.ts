import { describe, expect, it } from "vitest";

import { AnalyzeRequestError, ApiClient } from "../src/api.js";
import { example6Session, fakeReport, recordingFetch } from "./helpers.js";
import { toPayload } from "../src/session.js";

describe("ApiClient", () => {
  it("posts the payload and returns the parsed report", async () => {
    const rec = recordingFetch(() => fakeReport({ cr: 0.0436 }));
    const client = new ApiClient("", rec.fetch);
    const report = await client.analyze(toPayload(example6Session()));
    expect(report.cr).toBe(0.0436);
    expect(rec.calls).toHaveLength(1);
    expect(rec.calls[0]!.url).toBe("/api/analyze");
    expect(rec.calls[0]!.body?.best).toEqual([1, 2]);
  });

  it("maps service errors to typed exceptions", async () => {
    const rec = recordingFetch(() => ({ status: 422, error: "roles overlap" }));
    const client = new ApiClient("", rec.fetch);
    await expect(client.analyze(toPayload(example6Session()))).rejects.toThrowError(AnalyzeRequestError);
    await client.analyze(toPayload(example6Session())).catch((err: AnalyzeRequestError) => {
      expect(err.status).toBe(422);
      expect(err.kind).toBe("RoleConflictError");
      expect(err.message).toBe("roles overlap");
    });
  });

  it("prefixes a base url", async () => {
    const rec = recordingFetch(() => fakeReport());
    const client = new ApiClient("http://127.0.0.1:9999", rec.fetch);
    await client.analyze(toPayload(example6Session()));
    expect(rec.calls[0]!.url).toBe("http://127.0.0.1:9999/api/analyze");
  });

  it("fetches scale definitions", async () => {
    const scales = [{ id: "saaty", maxValue: 9, levels: [{ term: "Indifference", value: 1 }] }];
    const client = new ApiClient("", async () => new Response(JSON.stringify({ scales }), { status: 200 }));
    expect(await client.scales()).toEqual(scales);
  });
});
