/** JSON shapes exchanged with the inference service. */

export interface BowlDoc {
  color: string;
  shape: string;
  size: string;
  x: number;
  y: number;
}

export interface SceneDoc {
  seed: number;
  table: { w: number; h: number };
  bowls: BowlDoc[];
  cube: { x: number; y: number };
  target_index: number;
}

export interface SceneResponse {
  scene_id: string;
  scene: SceneDoc;
}

export interface CommandResponse {
  /** (T, 7) raw joint frames: 6 joints in rad + gripper in [0, 1]. */
  trajectory: number[][];
  dt: number;
  /** (T, 3) end-effector positions in metres. */
  ee_path: number[][];
  landing_xy: [number, number];
  success: boolean;
  /** (N, 2) implied landing points from stochastic passes, when requested. */
  goal_samples?: number[][];
  dispersion?: number;
}

export interface SceneRequest {
  seed?: number;
  n_objects?: number;
  required_attrs?: string[];
}

export interface ApiClient {
  health(): Promise<{ status: string; model_version: string }>;
  createScene(req: SceneRequest): Promise<SceneResponse>;
  sceneImageUrl(sceneId: string): string;
  sendCommand(sceneId: string, sentence: string, mcPasses: number): Promise<CommandResponse>;
}

/** Error carrying the HTTP status and the service's detail message. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    detail: string,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}
