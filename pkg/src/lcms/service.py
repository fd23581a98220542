"""HTTP/JSON inference service for the web console.

The model snapshot is immutable for the process lifetime; the only mutable
state is a mutex-guarded LRU store of scenes created through POST /scenes.
"""

from __future__ import annotations

import json
import threading
import uuid
from collections import OrderedDict

import numpy as np
from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .checkpoint import FORMAT_VERSION, load_checkpoint
from .language import tokenize
from .pipeline import default_embeddings, end_to_end, _sample_n_objects
from .simulator import SamplingExhausted, Scene, render, sample_scene, scene_to_json
from .simulator.render import image_to_png
from .simulator.scene import ATTRIBUTES

SCENE_STORE_CAPACITY = 1024


class SceneRequest(BaseModel):
    seed: int | None = None
    n_objects: int | None = Field(default=None, ge=3, le=5)
    required_attrs: list[str] | None = None


class CommandRequest(BaseModel):
    scene_id: str
    sentence: str
    mc_passes: int = Field(default=0, ge=0)
    mc_seed: int = 0


class SceneStore:
    def __init__(self, capacity: int = SCENE_STORE_CAPACITY):
        self._lock = threading.Lock()
        self._scenes: OrderedDict[str, Scene] = OrderedDict()
        self._capacity = capacity

    def put(self, scene: Scene) -> str:
        scene_id = uuid.uuid4().hex[:12]
        with self._lock:
            self._scenes[scene_id] = scene
            while len(self._scenes) > self._capacity:
                self._scenes.popitem(last=False)
        return scene_id

    def get(self, scene_id: str) -> Scene | None:
        with self._lock:
            scene = self._scenes.get(scene_id)
            if scene is not None:
                self._scenes.move_to_end(scene_id)
            return scene


def create_app(checkpoint_path) -> FastAPI:
    model, header = load_checkpoint(checkpoint_path)
    table = default_embeddings(model.config)
    store = SceneStore()
    app = FastAPI(title="lcms inference service")
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.get("/health")
    def health():
        return {"status": "ok", "model_version": FORMAT_VERSION}

    @app.post("/scenes")
    def create_scene(req: SceneRequest):
        seed = req.seed if req.seed is not None else int(np.random.SeedSequence().generate_state(1)[0])
        required = tuple(req.required_attrs) if req.required_attrs else ("color",)
        if not set(required) <= set(ATTRIBUTES):
            raise HTTPException(400, f"required_attrs must be among {ATTRIBUTES}")
        rng = np.random.default_rng(seed)
        n = req.n_objects if req.n_objects is not None else _sample_n_objects(rng, required)
        try:
            scene = sample_scene(seed, n, required)
        except (SamplingExhausted, ValueError) as exc:
            raise HTTPException(400, str(exc))
        scene_id = store.put(scene)
        return {"scene_id": scene_id, "scene": json.loads(scene_to_json(scene))}

    @app.get("/scenes/{scene_id}/image")
    def scene_image(scene_id: str):
        scene = store.get(scene_id)
        if scene is None:
            raise HTTPException(404, "unknown scene")
        png = image_to_png(render(scene, model.config.image_h, model.config.image_w))
        return Response(content=png, media_type="image/png")

    @app.post("/command")
    def command(req: CommandRequest):
        if not req.sentence.strip():
            raise HTTPException(400, "sentence must be nonempty")
        scene = store.get(req.scene_id)
        if scene is None:
            raise HTTPException(404, "unknown scene")
        if len(tokenize(req.sentence)) > model.config.l_s:
            raise HTTPException(
                422, f"sentence exceeds {model.config.l_s} tokens after tokenization"
            )
        result = end_to_end(
            req.sentence, scene, model,
            mc_passes=req.mc_passes, mc_seed=req.mc_seed, table=table,
        )
        doc = {
            "trajectory": result.trajectory.frames.tolist(),
            "dt": result.trajectory.dt,
            "ee_path": result.ee_path.tolist(),
            "landing_xy": result.landing_xy.tolist(),
            "success": result.success,
        }
        if result.goal_samples is not None:
            doc["goal_samples"] = result.goal_samples.task_xy.tolist()
            doc["dispersion"] = result.goal_samples.dispersion
        return doc

    return app
