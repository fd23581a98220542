import { boardSvg, dispersionLabel } from "./board.js";
import { compareView, panelCaption } from "./compare.js";
import { durationMs, frameForTime, frameState } from "./playback.js";
import { ApiClient, ApiError, CommandResponse, SceneDoc } from "./types.js";

interface SessionState {
  sceneId: string | null;
  scene: SceneDoc | null;
  lastResponse: CommandResponse | null;
  inFlight: boolean;
  mcEnabled: boolean;
  mcPasses: number;
}

function el<T extends HTMLElement>(root: ParentNode, selector: string): T {
  const node = root.querySelector(selector);
  if (!node) throw new Error(`missing element ${selector}`);
  return node as T;
}

export class ConsoleApp {
  readonly state: SessionState = {
    sceneId: null,
    scene: null,
    lastResponse: null,
    inFlight: false,
    mcEnabled: false,
    mcPasses: 50,
  };

  private board: HTMLElement;
  private banner: HTMLElement;
  private inputError: HTMLElement;
  private commandInput: HTMLInputElement;
  private sendButton: HTMLButtonElement;
  private readout: HTMLElement;
  private comparePane: HTMLElement;

  constructor(
    root: ParentNode,
    private api: ApiClient,
    private raf: (cb: (t: number) => void) => void = (cb) =>
      requestAnimationFrame(cb),
  ) {
    this.board = el(root, "#board");
    this.banner = el(root, "#banner");
    this.inputError = el(root, "#input-error");
    this.commandInput = el<HTMLInputElement>(root, "#command");
    this.sendButton = el<HTMLButtonElement>(root, "#send");
    this.readout = el(root, "#readout");
    this.comparePane = el(root, "#compare");

    el<HTMLButtonElement>(root, "#new-scene").addEventListener("click", () => {
      void this.newScene();
    });
    this.sendButton.addEventListener("click", () => {
      void this.sendCommand();
    });
    this.commandInput.addEventListener("input", () => this.syncControls());
    el<HTMLInputElement>(root, "#mc-toggle").addEventListener("change", (ev) => {
      this.state.mcEnabled = (ev.target as HTMLInputElement).checked;
      this.syncControls();
    });
    el<HTMLButtonElement>(root, "#compare-run").addEventListener("click", () => {
      void this.runComparison(
        el<HTMLInputElement>(root, "#compare-valid").value,
        el<HTMLInputElement>(root, "#compare-invalid").value,
      );
    });
    this.syncControls();
  }

  /** Send is disabled for empty input or while a request/animation runs. */
  private syncControls(): void {
    this.sendButton.disabled =
      this.state.inFlight ||
      this.state.sceneId === null ||
      !this.commandInput.value.trim();
  }

  private showBanner(message: string): void {
    this.banner.textContent = message;
    this.banner.hidden = message === "";
  }

  async newScene(seed?: number, requiredAttrs?: string[]): Promise<void> {
    try {
      const res = await this.api.createScene({
        seed,
        required_attrs: requiredAttrs,
      });
      this.state.sceneId = res.scene_id;
      this.state.scene = res.scene;
      this.state.lastResponse = null;
      this.showBanner("");
      this.board.innerHTML = boardSvg(res.scene);
      this.readout.textContent = "";
    } catch (err) {
      // network failures land here; the board stays usable and retriable
      this.showBanner(`scene request failed: ${(err as Error).message}`);
    }
    this.syncControls();
  }

  async sendCommand(): Promise<void> {
    const scene = this.state.scene;
    const sceneId = this.state.sceneId;
    const sentence = this.commandInput.value.trim();
    if (!scene || !sceneId || !sentence || this.state.inFlight) return;
    this.state.inFlight = true;
    this.inputError.textContent = "";
    this.syncControls();
    try {
      const mc = this.state.mcEnabled ? this.state.mcPasses : 0;
      const response = await this.api.sendCommand(sceneId, sentence, mc);
      this.state.lastResponse = response;
      await this.animate(scene, response);
    } catch (err) {
      if (err instanceof ApiError) {
        this.inputError.textContent = err.message;
      } else {
        this.showBanner(`command failed: ${(err as Error).message}`);
      }
    } finally {
      this.state.inFlight = false;
      this.syncControls();
    }
  }

  /** 20 fps playback of the returned end-effector path with cube drop. */
  private animate(scene: SceneDoc, response: CommandResponse): Promise<void> {
    const nFrames = response.ee_path.length;
    const total = durationMs(nFrames);
    return new Promise((resolve) => {
      let start: number | null = null;
      const tick = (now: number) => {
        if (start === null) start = now;
        const elapsed = Math.min(now - start, total);
        const k = frameForTime(elapsed, nFrames);
        const fs = frameState(response, k);
        this.board.innerHTML = boardSvg(scene, {
          trail: response.ee_path.slice(0, k + 1).map((p) => [p[0], p[1]]),
          cube: fs.cube,
          scatter: fs.done ? response.goal_samples : undefined,
          success: fs.done ? response.success : undefined,
        });
        if (!fs.done || elapsed < total) {
          this.raf(tick);
        } else {
          this.readout.textContent = [
            response.success ? "success" : "miss",
            dispersionLabel(response.dispersion),
          ]
            .filter(Boolean)
            .join(" · ");
          resolve();
        }
      };
      this.raf(tick);
    });
  }

  async runComparison(validText: string, invalidText: string): Promise<void> {
    const scene = this.state.scene;
    const sceneId = this.state.sceneId;
    if (!scene || !sceneId || this.state.inFlight) return;
    if (!this.state.mcEnabled) {
      this.comparePane.textContent =
        "enable stochastic passes to compare uncertainty";
      return;
    }
    if (!validText.trim() || !invalidText.trim()) return;
    this.state.inFlight = true;
    this.syncControls();
    try {
      const [ra, rb] = [
        await this.api.sendCommand(sceneId, validText, this.state.mcPasses),
        await this.api.sendCommand(sceneId, invalidText, this.state.mcPasses),
      ];
      const panels = compareView(
        scene,
        { sentence: validText, response: ra },
        { sentence: invalidText, response: rb },
      );
      this.comparePane.innerHTML = panels
        .map(
          (p) =>
            `<figure class="${p.flagged ? "flagged" : ""}">${p.svg}` +
            `<figcaption>${panelCaption(p)}</figcaption></figure>`,
        )
        .join("");
    } catch (err) {
      this.inputError.textContent = (err as Error).message;
    } finally {
      this.state.inFlight = false;
      this.syncControls();
    }
  }
}
