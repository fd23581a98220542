import { describe, expect, it } from "vitest";

import { FIXTURE } from "../src/fixtures.js";
import {
  PLAYBACK_FPS,
  durationMs,
  frameForTime,
  frameState,
  releaseFrame,
} from "../src/playback.js";

const command = FIXTURE.command;

describe("releaseFrame", () => {
  it("finds the first open-gripper frame in the stored response", () => {
    const k = releaseFrame(command.trajectory);
    expect(k).toBeGreaterThan(0);
    expect(k).toBeLessThan(command.trajectory.length);
    expect(command.trajectory[k][6]).toBeLessThanOrEqual(0.5);
    expect(command.trajectory[k - 1][6]).toBeGreaterThan(0.5);
  });

  it("returns the frame count when the gripper never opens", () => {
    const closed = [[0, 0, 0, 0, 0, 0, 1.0], [0, 0, 0, 0, 0, 0, 0.9]];
    expect(releaseFrame(closed)).toBe(2);
  });
});

describe("frameForTime", () => {
  it("advances at 20 fps", () => {
    expect(frameForTime(0, 101)).toBe(0);
    expect(frameForTime(1000, 101)).toBe(PLAYBACK_FPS);
    expect(frameForTime(2500, 101)).toBe(50);
  });

  it("clamps into [0, T)", () => {
    expect(frameForTime(-50, 101)).toBe(0);
    expect(frameForTime(1e9, 101)).toBe(100);
  });

  it("covers the whole trajectory within the playback duration", () => {
    expect(frameForTime(durationMs(101), 101)).toBe(100);
  });
});

describe("frameState", () => {
  it("rides the cube on the end effector before release", () => {
    const k = releaseFrame(command.trajectory) - 1;
    const fs = frameState(command, k);
    expect(fs.released).toBe(false);
    expect(fs.cube).toEqual(fs.ee);
  });

  it("drops the cube at the server landing point after release", () => {
    const k = releaseFrame(command.trajectory);
    const fs = frameState(command, k);
    expect(fs.released).toBe(true);
    expect(fs.cube).toEqual(command.landing_xy);
  });

  it("flags the final frame as done", () => {
    expect(frameState(command, command.ee_path.length - 1).done).toBe(true);
    expect(frameState(command, 0).done).toBe(false);
  });
});
