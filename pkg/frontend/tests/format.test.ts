import { describe, expect, it } from "vitest";

import { fmt4, fmtDelta, levelLabel, weightsCsv } from "../src/format.js";

describe("formatting", () => {
  it("uses four decimals like the published tables", () => {
    expect(fmt4(0.103706)).toBe("0.1037");
    expect(fmt4(1)).toBe("1.0000");
  });

  it("signs deltas", () => {
    expect(fmtDelta(0.0123)).toBe("+0.0123");
    expect(fmtDelta(-0.0123)).toBe("-0.0123");
    expect(fmtDelta(0)).toBe("0.0000");
  });

  it("labels unnamed scale levels by value", () => {
    expect(levelLabel("Strong preference", 5)).toBe("Strong preference");
    expect(levelLabel(null, 1.4142135623730951)).toBe("1.4142");
    expect(levelLabel(null, 2)).toBe("2");
  });

  it("exports weights as csv", () => {
    const csv = weightsCsv(["a", "b"], [0.7, 0.3], [[0.69, 0.71], [0.29, 0.31]]);
    expect(csv.split("\n")[0]).toBe("criterion,weight,lower,upper");
    expect(csv).toContain("a,0.7,0.69,0.71");
  });
});
