import { describe, expect, it } from "vitest";

import { boardSvg, dispersionLabel } from "../src/board.js";
import { FIXTURE } from "../src/fixtures.js";

describe("boardSvg", () => {
  it("renders the stored scene identically across calls", () => {
    const svg = boardSvg(FIXTURE.scene);
    expect(svg).toBe(boardSvg(FIXTURE.scene));
    expect(svg).toMatchSnapshot();
  });

  it("draws one glyph per bowl plus the cube", () => {
    const svg = boardSvg(FIXTURE.scene);
    expect(svg.match(/class="bowl"/g)).toHaveLength(5);
    expect(svg.match(/class="cube"/g)).toHaveLength(1);
  });

  it("does not mark the target bowl", () => {
    // the operator must identify the target by language alone
    const svg = boardSvg(FIXTURE.scene);
    expect(svg).not.toContain("target");
  });

  it("uses circles for round bowls and rects for square bowls", () => {
    const svg = boardSvg(FIXTURE.scene);
    for (const bowl of FIXTURE.scene.bowls) {
      const tag = bowl.shape === "round" ? "circle" : "rect";
      expect(svg).toMatch(new RegExp(`<${tag}[^>]*data-color="${bowl.color}"`));
    }
  });

  it("draws a 50-point uncertainty scatter", () => {
    const svg = boardSvg(FIXTURE.scene, { scatter: FIXTURE.command.goal_samples });
    expect(svg.match(/class="goal-sample"/g)).toHaveLength(50);
    expect(svg).toMatchSnapshot();
  });

  it("hides the overlay when goal samples are absent", () => {
    const svg = boardSvg(FIXTURE.scene, { scatter: undefined });
    expect(svg).not.toContain("goal-sample");
  });

  it("tints the trail by outcome", () => {
    const trail: [number, number][] = [
      [0, 0.1],
      [0.1, 0.2],
    ];
    expect(boardSvg(FIXTURE.scene, { trail, success: true })).toContain("#1aa626");
    expect(boardSvg(FIXTURE.scene, { trail, success: false })).toContain("#d91a1a");
  });
});

describe("dispersionLabel", () => {
  it("formats metres to three decimals", () => {
    expect(dispersionLabel(0.3333)).toBe("dispersion 0.333 m");
  });

  it("is empty without a dispersion value", () => {
    expect(dispersionLabel(undefined)).toBe("");
  });
});
