"""Command-line interface: data generation, training, evaluation, inference."""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click
import numpy as np

from . import dmp
from .checkpoint import load_checkpoint
from .pipeline import (
    end_to_end,
    evaluate,
    fit_label,
    generate_dataset,
    model_predict_fn,
    train as train_model,
)
from .simulator import scene_from_json
from .simulator.arm import default_arm, denormalize_joints


@click.group()
def main():
    """Language-conditioned motion synthesis workbench."""


@main.command("gen-data")
@click.option("--n", type=int, required=True, help="number of samples")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--out", type=click.Path(), required=True)
def gen_data(n, seed, out):
    """Generate a demonstration dataset."""
    def progress(done, total):
        if done % 100 == 0 or done == total:
            click.echo(f"{done}/{total} samples", err=True)

    manifest = generate_dataset(n, seed, out, progress=progress)
    click.echo(f"wrote {manifest['n']} samples to {out} (splits {manifest['splits']})")


@main.command("train")
@click.option("--data", type=click.Path(exists=True), required=True)
@click.option(
    "--config", "config_path", type=click.Path(exists=True), default=None,
    help="JSON file of model hyperparameter overrides",
)
@click.option("--out", type=click.Path(), required=True)
@click.option("--epochs", type=int, default=100, show_default=True)
@click.option("--batch-size", type=int, default=64, show_default=True)
@click.option("--lr", type=float, default=1e-3, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option(
    "--augment/--no-augment", default=False, show_default=True,
    help="label-preserving scene/sentence augmentation with a goal-weighted loss",
)
def train_cmd(data, config_path, out, epochs, batch_size, lr, seed, augment):
    """Train the policy network on a dataset directory."""
    from .model import ModelConfig

    model_config = None
    if config_path is not None:
        try:
            doc = json.loads(Path(config_path).read_text())
            for key in ("ngram_sizes", "block_channels"):
                if key in doc:
                    doc[key] = tuple(doc[key])
            model_config = ModelConfig(**doc)
        except (ValueError, TypeError) as exc:
            click.echo(f"error: bad model config {config_path}: {exc}", err=True)
            sys.exit(2)

    def progress(epoch, total, tl, vl):
        click.echo(f"epoch {epoch}/{total} train {tl:.4g} val {vl:.4g}", err=True)

    log = Path(out).with_suffix(".train_log.csv")
    train_model(
        data, out, model_config=model_config, epochs=epochs, batch_size=batch_size,
        lr=lr, seed=seed, log_path=log, progress=progress, augment=augment,
    )
    click.echo(f"checkpoint written to {out}; training curve in {log}")


@main.command("eval")
@click.option("--ckpt", type=click.Path(exists=True), required=True)
@click.option("--n-per-feature", type=int, default=100, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--json-out", type=click.Path(), default=None)
def eval_cmd(ckpt, n_per_feature, seed, json_out):
    """Per-feature success evaluation of a trained checkpoint."""
    model, _ = load_checkpoint(ckpt)
    report = evaluate(model_predict_fn(model), n_per_feature=n_per_feature, seed=seed)
    click.echo(report.table())
    if json_out:
        Path(json_out).write_text(report.to_json())


@main.command("infer")
@click.option("--ckpt", type=click.Path(exists=True), required=True)
@click.option("--scene", "scene_path", type=click.Path(), required=True)
@click.option("--sentence", type=str, required=True)
@click.option("--mc", type=int, default=0, show_default=True)
def infer(ckpt, scene_path, sentence, mc):
    """Run one command against a scene JSON file."""
    try:
        scene = scene_from_json(Path(scene_path).read_text())
    except (OSError, KeyError, ValueError) as exc:
        click.echo(f"error: cannot load scene {scene_path}: {exc}", err=True)
        sys.exit(2)
    model, _ = load_checkpoint(ckpt)
    result = end_to_end(sentence, scene, model, mc_passes=mc)
    doc = {
        "landing_xy": [float(v) for v in result.landing_xy],
        "success": result.success,
    }
    if result.goal_samples is not None:
        doc["dispersion"] = result.goal_samples.dispersion
        doc["goal_samples"] = result.goal_samples.task_xy.tolist()
    click.echo(json.dumps(doc, indent=2))


@main.command("fit-dmp")
@click.option("--traj-csv", type=click.Path(exists=True), required=True)
def fit_dmp(traj_csv):
    """Fit DMP parameters to a raw 7-D trajectory CSV; prints params JSON."""
    traj = dmp.trajectory_from_csv(Path(traj_csv).read_text())
    params = fit_label(traj, default_arm(), dmp.DmpConfig())
    click.echo(
        json.dumps(
            {
                "weights": params.weights.tolist(),
                "goal": params.goal.tolist(),
                "start": params.start.tolist(),
            }
        )
    )


@main.command("rollout")
@click.option("--params-json", type=click.Path(exists=True), required=True)
def rollout_cmd(params_json):
    """Roll out DMP params (JSON, normalized) and print a raw trajectory CSV."""
    doc = json.loads(Path(params_json).read_text())
    params = dmp.DmpParams(
        weights=np.array(doc["weights"]),
        goal=np.array(doc["goal"]),
        start=np.array(doc["start"]),
    )
    traj = dmp.rollout(params, dmp.DmpConfig())
    arm = default_arm()
    raw = dmp.Trajectory(frames=denormalize_joints(traj.frames, arm), dt=traj.dt)
    click.echo(dmp.trajectory_to_csv(raw), nl=False)


@main.command("serve")
@click.option("--ckpt", type=click.Path(exists=True), required=False, default=None)
@click.option("--port", type=int, default=8000, show_default=True)
@click.option("--host", type=str, default="127.0.0.1", show_default=True)
def serve(ckpt, port, host):
    """Start the HTTP inference service (LCMS_CHECKPOINT overrides --ckpt)."""
    import os

    import uvicorn

    from .service import create_app

    path = os.environ.get("LCMS_CHECKPOINT", ckpt)
    if not path:
        click.echo("error: provide --ckpt or set LCMS_CHECKPOINT", err=True)
        sys.exit(2)
    uvicorn.run(create_app(path), host=host, port=port)


if __name__ == "__main__":
    main()
