import { SceneDoc } from "./types.js";

/**
 * Top-down SVG board of a tabletop scene.
 *
 * Pure string generation: rendering is reproducible from (scene JSON,
 * command response) alone, which lets stored-response fixtures drive
 * snapshot tests with no live backend or canvas.
 */

export const BOARD_SCALE = 600; // px per metre of table width

const PALETTE: Record<string, string> = {
  red: "#d91a1a",
  green: "#1aa626",
  blue: "#2640d9",
  yellow: "#e6d91a",
  pink: "#f280bf",
};
const BOWL_RADIUS: Record<string, number> = { small: 0.0625, large: 0.0875 };
const CUBE_EDGE = 0.04;

export interface Overlay {
  /** End-effector trail up to the current frame. */
  trail?: [number, number][];
  /** Cube glyph position override (during/after playback). */
  cube?: [number, number];
  /** MC-dropout goal samples to scatter. */
  scatter?: number[][];
  /** Outcome tint for the trail once playback finished. */
  success?: boolean;
}

function px(scene: SceneDoc, x: number): number {
  return ((x + scene.table.w / 2) / scene.table.w) * BOARD_SCALE;
}

function py(scene: SceneDoc, y: number): number {
  const h = (scene.table.h / scene.table.w) * BOARD_SCALE;
  return h - (y / scene.table.h) * h;
}

function n(v: number): string {
  return v.toFixed(1);
}

export function boardSvg(scene: SceneDoc, overlay: Overlay = {}): string {
  const width = BOARD_SCALE;
  const height = (scene.table.h / scene.table.w) * BOARD_SCALE;
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 ${n(width)} ${n(height)}" ` +
      `width="${n(width)}" height="${n(height)}" data-kind="board">`,
    `<rect class="table" x="0" y="0" width="${n(width)}" height="${n(height)}" fill="#ccccc7"/>`,
  ];

  scene.bowls.forEach((bowl, i) => {
    const r = BOWL_RADIUS[bowl.size] * BOARD_SCALE;
    const fill = PALETTE[bowl.color] ?? "#888888";
    const cx = px(scene, bowl.x);
    const cy = py(scene, bowl.y);
    const common = `class="bowl" data-index="${i}" data-color="${bowl.color}" ` +
      `data-shape="${bowl.shape}" data-size="${bowl.size}" fill="${fill}"`;
    if (bowl.shape === "round") {
      parts.push(`<circle ${common} cx="${n(cx)}" cy="${n(cy)}" r="${n(r)}"/>`);
    } else {
      parts.push(
        `<rect ${common} x="${n(cx - r)}" y="${n(cy - r)}" width="${n(2 * r)}" height="${n(2 * r)}"/>`,
      );
    }
  });

  if (overlay.trail && overlay.trail.length > 1) {
    const pts = overlay.trail
      .map(([x, y]) => `${n(px(scene, x))},${n(py(scene, y))}`)
      .join(" ");
    const tint =
      overlay.success === undefined ? "#444444" : overlay.success ? "#1aa626" : "#d91a1a";
    parts.push(
      `<polyline class="trail" points="${pts}" fill="none" stroke="${tint}" stroke-width="2"/>`,
    );
  }

  if (overlay.scatter) {
    for (const [x, y] of overlay.scatter) {
      parts.push(
        `<circle class="goal-sample" cx="${n(px(scene, x))}" cy="${n(py(scene, y))}" ` +
          `r="3" fill="none" stroke="#222222" stroke-width="1"/>`,
      );
    }
  }

  const cube = overlay.cube ?? [scene.cube.x, scene.cube.y];
  const half = (CUBE_EDGE / 2) * BOARD_SCALE;
  parts.push(
    `<rect class="cube" x="${n(px(scene, cube[0]) - half)}" y="${n(py(scene, cube[1]) - half)}" ` +
      `width="${n(2 * half)}" height="${n(2 * half)}" fill="#595959"/>`,
  );

  parts.push("</svg>");
  return parts.join("\n");
}

/** Dispersion readout shown beside a scatter overlay. */
export function dispersionLabel(dispersion: number | undefined): string {
  if (dispersion === undefined) return "";
  return `dispersion ${dispersion.toFixed(3)} m`;
}
