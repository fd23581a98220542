import {
  ApiClient,
  ApiError,
  CommandResponse,
  SceneRequest,
  SceneResponse,
} from "./types.js";

async function asJson<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = `${res.status} ${res.statusText}`;
    try {
      const body = (await res.json()) as { detail?: string };
      if (body.detail) detail = body.detail;
    } catch {
      // keep the status-line fallback
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

export class HttpApiClient implements ApiClient {
  constructor(readonly baseUrl: string) {}

  async health(): Promise<{ status: string; model_version: string }> {
    return asJson(await fetch(`${this.baseUrl}/health`));
  }

  async createScene(req: SceneRequest): Promise<SceneResponse> {
    return asJson(
      await fetch(`${this.baseUrl}/scenes`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(req),
      }),
    );
  }

  sceneImageUrl(sceneId: string): string {
    return `${this.baseUrl}/scenes/${sceneId}/image`;
  }

  async sendCommand(
    sceneId: string,
    sentence: string,
    mcPasses: number,
  ): Promise<CommandResponse> {
    return asJson(
      await fetch(`${this.baseUrl}/command`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify({ scene_id: sceneId, sentence, mc_passes: mcPasses }),
      }),
    );
  }
}
