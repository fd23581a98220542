import { boardSvg, dispersionLabel } from "./board.js";
import { CommandResponse, SceneDoc } from "./types.js";

export interface ComparePanel {
  title: string;
  sentence: string;
  svg: string;
  dispersion: number;
  flagged: boolean;
}

/**
 * Side-by-side uncertainty comparison of two commands on the same scene.
 * The panel with the larger dispersion is flagged; ties flag neither.
 */
export function compareView(
  scene: SceneDoc,
  a: { sentence: string; response: CommandResponse },
  b: { sentence: string; response: CommandResponse },
): [ComparePanel, ComparePanel] {
  const da = a.response.dispersion ?? 0;
  const db = b.response.dispersion ?? 0;
  const make = (
    title: string,
    entry: { sentence: string; response: CommandResponse },
    dispersion: number,
    flagged: boolean,
  ): ComparePanel => ({
    title,
    sentence: entry.sentence,
    svg: boardSvg(scene, { scatter: entry.response.goal_samples ?? [] }),
    dispersion,
    flagged,
  });
  return [
    make("A", a, da, da > db),
    make("B", b, db, db > da),
  ];
}

export function panelCaption(panel: ComparePanel): string {
  const flag = panel.flagged ? " — larger spread" : "";
  return `${panel.title}: "${panel.sentence}" ${dispersionLabel(panel.dispersion)}${flag}`;
}
