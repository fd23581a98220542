import { FIXTURE } from "./fixtures.js";
import {
  ApiClient,
  ApiError,
  CommandResponse,
  SceneRequest,
  SceneResponse,
} from "./types.js";

/**
 * Fixture-backed client: same interface as the live service, served from
 * stored responses.  Used for development (`?mock=1`) and UI tests.
 */
export class MockApiClient implements ApiClient {
  private scenes = new Map<string, SceneResponse>();
  private counter = 0;

  async health(): Promise<{ status: string; model_version: string }> {
    return { status: "ok", model_version: "mpn-v1" };
  }

  async createScene(req: SceneRequest): Promise<SceneResponse> {
    if (req.required_attrs?.some((a) => !["color", "shape", "size"].includes(a))) {
      throw new ApiError(400, "required_attrs must be among color/shape/size");
    }
    const id = `mock-${(req.seed ?? 0).toString()}-${this.counter++}`;
    const response: SceneResponse = { scene_id: id, scene: FIXTURE.scene };
    this.scenes.set(id, response);
    return response;
  }

  sceneImageUrl(sceneId: string): string {
    return `data:scene/${sceneId}`;
  }

  async sendCommand(
    sceneId: string,
    sentence: string,
    mcPasses: number,
  ): Promise<CommandResponse> {
    if (!this.scenes.has(sceneId)) throw new ApiError(404, "unknown scene");
    if (!sentence.trim()) throw new ApiError(400, "sentence must be nonempty");
    if (sentence.split(/\s+/).length > 15) {
      throw new ApiError(422, "sentence exceeds 15 tokens after tokenization");
    }
    const base = FIXTURE.command;
    if (mcPasses <= 0) {
      const { goal_samples: _g, dispersion: _d, ...rest } = base;
      return rest;
    }
    return { ...base, goal_samples: base.goal_samples?.slice(0, mcPasses) };
  }
}
