import { describe, expect, it } from "vitest";

import { compareView, panelCaption } from "../src/compare.js";
import { FIXTURE } from "../src/fixtures.js";
import { CommandResponse } from "../src/types.js";

function withDispersion(d: number): CommandResponse {
  return { ...FIXTURE.command, dispersion: d };
}

describe("compareView", () => {
  it("flags the larger-dispersion panel", () => {
    const [a, b] = compareView(
      FIXTURE.scene,
      { sentence: "put the cube into the red bowl", response: withDispersion(0.05) },
      { sentence: "put the cube into the green bowl", response: withDispersion(0.31) },
    );
    expect(a.flagged).toBe(false);
    expect(b.flagged).toBe(true);
    expect(panelCaption(b)).toContain("larger spread");
    expect(panelCaption(a)).not.toContain("larger spread");
  });

  it("flags neither panel on equal dispersion", () => {
    const [a, b] = compareView(
      FIXTURE.scene,
      { sentence: "x", response: withDispersion(0.2) },
      { sentence: "x", response: withDispersion(0.2) },
    );
    expect(a.flagged).toBe(false);
    expect(b.flagged).toBe(false);
  });

  it("renders both scatters from the stored responses", () => {
    const [a, b] = compareView(
      FIXTURE.scene,
      { sentence: "valid", response: FIXTURE.command },
      { sentence: "invalid", response: FIXTURE.command },
    );
    for (const panel of [a, b]) {
      expect(panel.svg.match(/class="goal-sample"/g)).toHaveLength(50);
    }
    expect([a.svg, b.svg]).toMatchSnapshot();
  });
});
