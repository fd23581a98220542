import { CommandResponse } from "./types.js";

export const PLAYBACK_FPS = 20;
const GRIP_RELEASE_THRESHOLD = 0.5;

/**
 * First frame index at which the gripper is open, or the frame count when
 * it never opens.  The cube glyph drops at this frame.
 */
export function releaseFrame(trajectory: number[][]): number {
  for (let k = 0; k < trajectory.length; k++) {
    if (trajectory[k][6] <= GRIP_RELEASE_THRESHOLD) return k;
  }
  return trajectory.length;
}

/** Frame index for an elapsed wall-clock time, clamped to [0, T). */
export function frameForTime(elapsedMs: number, nFrames: number): number {
  const k = Math.floor((elapsedMs / 1000) * PLAYBACK_FPS);
  return Math.max(0, Math.min(nFrames - 1, k));
}

export function durationMs(nFrames: number): number {
  return (nFrames / PLAYBACK_FPS) * 1000;
}

export interface FrameState {
  /** End-effector xy at this frame (table coordinates, metres). */
  ee: [number, number];
  /** Cube glyph xy: rides the end effector until release, then sits at the
   * server-reported landing point (the client never recomputes physics). */
  cube: [number, number];
  released: boolean;
  done: boolean;
}

export function frameState(response: CommandResponse, frame: number): FrameState {
  const n = response.ee_path.length;
  const k = Math.max(0, Math.min(n - 1, frame));
  const release = releaseFrame(response.trajectory);
  const ee: [number, number] = [response.ee_path[k][0], response.ee_path[k][1]];
  const released = k >= release;
  return {
    ee,
    cube: released ? response.landing_xy : ee,
    released,
    done: k >= n - 1,
  };
}
