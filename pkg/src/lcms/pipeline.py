"""Dataset generation, training orchestration, evaluation, and inference glue.

Reproducibility scheme: every scene seed derives from
SeedSequence([namespace, root_seed, ...]) with namespace 0 for training
data and 1 for evaluation, so evaluation scenes can never collide with
training scenes generated from the same root seed.
"""

from __future__ import annotations

import dataclasses
import hashlib
import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch

from . import dmp
from .checkpoint import load_checkpoint, save_checkpoint
from .language import (
    EmbeddingTable,
    Lexicon,
    Sentence,
    build_embeddings,
    default_lexicon,
    embed_sentence,
    generate_sentence,
    grammar_vocabulary,
    lexicon_to_json,
    tokenize,
)
from .model import (
    ModelConfig,
    MultimodalPolicyNetwork,
    GoalSamples,
    home_start,
    loss_fn,
    make_optimizer,
    mc_dropout_goals,
    predict_params,
    train_step,
)
from .simulator import (
    PlanningFailed,
    SamplingExhausted,
    Scene,
    check_success,
    execute,
    plan_demonstration,
    render,
    sample_scene,
    scene_from_json,
    scene_to_json,
)
from .simulator.arm import ArmModel, default_arm, denormalize_joints, normalize_joints
from .simulator.render import image_to_png, png_to_image
from .simulator.scene import (
    ATTRIBUTES,
    BOWL_X_RANGE,
    BOWL_Y_RANGE,
    COLORS,
    MIN_BOWL_SEPARATION,
    SHAPES,
    SIZES,
)
from .simulator.world import ee_path_of

TRAIN_NAMESPACE = 0
EVAL_NAMESPACE = 1

# the 7 nonempty attribute subsets, cycled during dataset generation
ATTRIBUTE_SUBSETS: tuple[tuple[str, ...], ...] = (
    ("color",),
    ("shape",),
    ("size",),
    ("color", "shape"),
    ("color", "size"),
    ("shape", "size"),
    ("color", "shape", "size"),
)

MANIFEST_VERSION = 1


def derive_seed(namespace: int, *parts: int) -> int:
    return int(np.random.SeedSequence([namespace, *parts]).generate_state(1)[0])


def split_of(index: int) -> str:
    """90/5/5 split by hash of the sample index."""
    h = int(hashlib.sha256(str(index).encode()).hexdigest(), 16) % 100
    if h < 90:
        return "train"
    return "val" if h < 95 else "test"


@dataclass(frozen=True)
class SampleRecord:
    index: int
    seed: int
    required: tuple[str, ...]
    split: str
    sentence: str
    scene_file: str
    image_file: str
    trajectory_file: str
    weights: np.ndarray  # (o, b) fitted label
    goal: np.ndarray  # (o,)
    start: np.ndarray  # (o,)


def _sample_n_objects(rng: np.random.Generator, required: tuple[str, ...]) -> int:
    n = int(rng.integers(3, 6))
    return max(n, len(required) + 1)


def generate_sample(
    root_seed: int,
    index: int,
    arm: ArmModel,
    dmp_config: dmp.DmpConfig,
    lexicon: Lexicon,
    max_retries: int = 50,
):
    """One (scene, sentence, demonstration, label) tuple; retries failed plans."""
    required = ATTRIBUTE_SUBSETS[index % len(ATTRIBUTE_SUBSETS)]
    for retry in range(max_retries):
        seed = derive_seed(TRAIN_NAMESPACE, root_seed, index, retry)
        rng = np.random.default_rng(seed)
        try:
            scene = sample_scene(seed, _sample_n_objects(rng, required), required)
            demo = plan_demonstration(scene, arm, n_frames=dmp_config.n_frames, dt=dmp_config.dt_out)
        except (SamplingExhausted, PlanningFailed):
            continue
        sentence = generate_sentence(scene, seed, lexicon)
        # fit from the CSV round-trip so stored labels re-fit exactly
        csv_text = dmp.trajectory_to_csv(demo.joints)
        stored = dmp.trajectory_from_csv(csv_text)
        label = fit_label(stored, arm, dmp_config)
        rolled = dmp.rollout(label, dmp_config)
        landing = execute(
            dmp.Trajectory(frames=denormalize_joints(rolled.frames, arm), dt=rolled.dt), scene, arm
        )
        if not check_success(scene, landing):
            continue
        return scene, sentence, demo, csv_text, label, required, seed
    raise SamplingExhausted(f"sample {index}: no valid demonstration after {max_retries} tries")


def fit_label(raw_trajectory: dmp.Trajectory, arm: ArmModel, config: dmp.DmpConfig) -> dmp.DmpParams:
    """Normalize a raw joint trajectory and fit DMP parameters to it."""
    norm = dmp.Trajectory(
        frames=normalize_joints(raw_trajectory.frames, arm), dt=raw_trajectory.dt
    )
    return dmp.fit(norm, config)


def generate_dataset(
    n: int,
    root_seed: int,
    outdir,
    arm: ArmModel | None = None,
    dmp_config: dmp.DmpConfig | None = None,
    model_config: ModelConfig | None = None,
    lexicon: Lexicon | None = None,
    progress=None,
) -> dict:
    """Write a dataset directory and return its manifest."""
    if n < 1:
        raise ValueError("n must be >= 1")
    arm = arm or default_arm()
    dmp_config = dmp_config or dmp.DmpConfig()
    model_config = model_config or ModelConfig()
    lexicon = lexicon or default_lexicon()
    out = Path(outdir)
    for sub in ("scenes", "images", "trajectories"):
        (out / sub).mkdir(parents=True, exist_ok=True)
    lexicon_json = lexicon_to_json(lexicon)
    (out / "lexicon.json").write_text(lexicon_json)

    records = []
    for i in range(n):
        scene, sentence, demo, csv_text, label, required, seed = generate_sample(
            root_seed, i, arm, dmp_config, lexicon
        )
        name = f"{i:05d}"
        (out / "scenes" / f"{name}.json").write_text(scene_to_json(scene))
        (out / "images" / f"{name}.png").write_bytes(
            image_to_png(render(scene, model_config.image_h, model_config.image_w))
        )
        (out / "trajectories" / f"{name}.csv").write_text(csv_text)
        records.append(
            SampleRecord(
                index=i,
                seed=seed,
                required=required,
                split=split_of(i),
                sentence=sentence.text,
                scene_file=f"scenes/{name}.json",
                image_file=f"images/{name}.png",
                trajectory_file=f"trajectories/{name}.csv",
                weights=label.weights,
                goal=label.goal,
                start=label.start,
            )
        )
        if progress is not None:
            progress(i + 1, n)

    manifest = {
        "version": MANIFEST_VERSION,
        "root_seed": root_seed,
        "n": n,
        "splits": {
            s: sum(1 for r in records if r.split == s) for s in ("train", "val", "test")
        },
        "dmp_config": dataclasses.asdict(dmp_config),
        "model_config": dataclasses.asdict(model_config),
        "lexicon_sha256": hashlib.sha256(lexicon_json.encode()).hexdigest(),
        "samples": [
            {
                "index": r.index,
                "seed": r.seed,
                "required": list(r.required),
                "split": r.split,
                "sentence": r.sentence,
                "scene": r.scene_file,
                "image": r.image_file,
                "trajectory": r.trajectory_file,
                "label": {
                    "weights": [[float(v) for v in row] for row in r.weights],
                    "goal": [float(v) for v in r.goal],
                    "start": [float(v) for v in r.start],
                },
            }
            for r in records
        ],
    }
    (out / "manifest.json").write_text(json.dumps(manifest, sort_keys=True))
    return manifest


def load_manifest(dataset_dir) -> dict:
    return json.loads((Path(dataset_dir) / "manifest.json").read_text())


def default_embeddings(model_config: ModelConfig, lexicon: Lexicon | None = None) -> EmbeddingTable:
    lexicon = lexicon or default_lexicon()
    return build_embeddings(grammar_vocabulary(lexicon), model_config.l_w)


def _load_tensors(dataset_dir, manifest: dict, table: EmbeddingTable, config: ModelConfig):
    root = Path(dataset_dir)
    n = manifest["n"]
    W = np.zeros((n, config.l_s, config.l_w), dtype=np.float32)
    images = np.zeros((n, 3, config.image_h, config.image_w), dtype=np.float32)
    theta = np.zeros((n, config.n_dims, config.n_basis), dtype=np.float32)
    goal = np.zeros((n, config.n_dims), dtype=np.float32)
    splits: dict[str, list[int]] = {"train": [], "val": [], "test": []}
    for rec in manifest["samples"]:
        i = rec["index"]
        W[i] = embed_sentence(tokenize(rec["sentence"]), table, config.l_s)
        img = png_to_image((root / rec["image"]).read_bytes())
        images[i] = img.transpose(2, 0, 1)
        theta[i] = rec["label"]["weights"]
        goal[i] = rec["label"]["goal"]
        splits[rec["split"]].append(i)
    return (
        torch.from_numpy(W),
        torch.from_numpy(images),
        torch.from_numpy(theta),
        torch.from_numpy(goal),
        splits,
    )


def augment_scene(scene: Scene, rng: np.random.Generator) -> Scene:
    """Label-preserving scene rewrite for training augmentation.

    The demonstrated trajectory depends only on the target bowl's (x, y),
    so every bowl's attributes and every distractor's position can be
    resampled freely while the stored (weights, goal) label stays exact.
    Attribute combinations are drawn without replacement, which keeps the
    target referable (its full attribute triple is always unique).
    """
    tx, ty = scene.target.x, scene.target.y
    n = len(scene.bowls)
    pts: list[tuple[float, float]] | None = None
    for _attempt in range(50):
        cand = [(tx, ty)]
        for _ in range(n - 1):
            for _try in range(200):
                x = rng.uniform(*BOWL_X_RANGE)
                y = rng.uniform(*BOWL_Y_RANGE)
                if all(
                    (x - px) ** 2 + (y - py) ** 2 >= MIN_BOWL_SEPARATION**2
                    for px, py in cand
                ):
                    cand.append((x, y))
                    break
            else:
                break
        if len(cand) == n:
            pts = cand
            break
    if pts is None:
        return scene
    all_types = list(itertools.product(COLORS, SHAPES, SIZES))
    types = [all_types[k] for k in rng.choice(len(all_types), size=n, replace=False)]
    bowls = []
    j = 1
    for i, bowl in enumerate(scene.bowls):
        if i == scene.target_index:
            color, shape, size = types[0]
            bowls.append(dataclasses.replace(bowl, color=color, shape=shape, size=size))
        else:
            color, shape, size = types[j]
            bowls.append(
                dataclasses.replace(
                    bowl, color=color, shape=shape, size=size, x=pts[j][0], y=pts[j][1]
                )
            )
            j += 1
    return dataclasses.replace(scene, bowls=tuple(bowls))


AUGMENT_IMAGE_NOISE = 0.02
AUGMENT_GOAL_WEIGHT = 100.0
AUGMENT_WEIGHT_DECAY = 1e-4


def _standardized_loss(
    model: MultimodalPolicyNetwork,
    theta: torch.Tensor,
    g: torch.Tensor,
    theta_label: torch.Tensor,
    g_label: torch.Tensor,
    goal_weight: float = AUGMENT_GOAL_WEIGHT,
) -> torch.Tensor:
    """Same per-element MSE structure as loss_fn, in standardized output space.

    Scaling by the per-entry label statistics keeps the two heads at
    comparable magnitude; the large goal weight reflects that task success
    is governed almost entirely by the goal configuration.
    """
    zt = (theta - model.weight_offset) / model.weight_scale
    ztl = (theta_label - model.weight_offset) / model.weight_scale
    zg = (g - model.goal_offset) / model.goal_scale
    zgl = (g_label - model.goal_offset) / model.goal_scale
    o = g.shape[-1]
    ob = theta.shape[-1] * theta.shape[-2]
    l_theta = ((zt - ztl) ** 2).flatten(1).sum(dim=1) / ob
    l_goal = ((zg - zgl) ** 2).sum(dim=1) / o
    return (l_theta + goal_weight * l_goal).mean()


def train(
    dataset_dir,
    out_checkpoint,
    model_config: ModelConfig | None = None,
    epochs: int = 100,
    batch_size: int = 64,
    lr: float = 1e-3,
    seed: int = 0,
    table: EmbeddingTable | None = None,
    log_path=None,
    progress=None,
    augment: bool = False,
    lexicon: Lexicon | None = None,
) -> Path:
    """Mini-batch training loop; keeps the best-validation checkpoint.

    With ``augment=True`` every batch re-places distractor bowls,
    re-renders the image with small Gaussian pixel noise, and re-samples
    the command sentence from the grammar — all label-preserving — and the
    loss moves to standardized output space with a heavy goal term.
    Validation (and checkpoint selection) then tracks goal RMSE, the
    quantity that decides task success.
    """
    manifest = load_manifest(dataset_dir)
    if model_config is None:
        cfg_doc = dict(manifest["model_config"])
        for key in ("ngram_sizes", "block_channels"):
            cfg_doc[key] = tuple(cfg_doc[key])
        model_config = ModelConfig(**cfg_doc)
    table = table or default_embeddings(model_config)
    lexicon = lexicon or default_lexicon()
    W, images, theta, goal, splits = _load_tensors(dataset_dir, manifest, table, model_config)
    scenes = None
    if augment:
        root = Path(dataset_dir)
        scenes = [
            scene_from_json((root / rec["scene"]).read_text())
            for rec in sorted(manifest["samples"], key=lambda r: r["index"])
        ]

    torch.manual_seed(seed)
    model = MultimodalPolicyNetwork(model_config)
    train_ids = [i for i in splits["train"]]
    model.set_output_standardization(theta[train_ids], goal[train_ids])
    if augment:
        optimizer = torch.optim.Adam(
            model.parameters(), lr=lr, weight_decay=AUGMENT_WEIGHT_DECAY
        )
        scheduler = torch.optim.lr_scheduler.CosineAnnealingLR(
            optimizer, T_max=epochs, eta_min=lr / 20.0
        )
    else:
        optimizer = make_optimizer(model, lr=lr)
        scheduler = None
    gen = torch.Generator().manual_seed(seed + 1)
    shuffler = torch.Generator().manual_seed(seed + 2)
    aug_rng = np.random.default_rng(derive_seed(TRAIN_NAMESPACE, manifest["root_seed"], seed))

    train_idx = torch.tensor(splits["train"], dtype=torch.long)
    val_idx = torch.tensor(splits["val"] or splits["train"], dtype=torch.long)

    def val_loss() -> float:
        model.eval()
        with torch.no_grad():
            t, g = model(W[val_idx], images[val_idx])
            if augment:
                out = float(((g - goal[val_idx]) ** 2).mean().sqrt())
            else:
                out = float(loss_fn(t, g, theta[val_idx], goal[val_idx]))
        model.train()
        return out

    def augmented_batch(idx: list[int]) -> tuple[torch.Tensor, torch.Tensor]:
        Wb = torch.empty(len(idx), model_config.l_s, model_config.l_w)
        Ib = torch.empty(len(idx), 3, model_config.image_h, model_config.image_w)
        for k, i in enumerate(idx):
            sc = augment_scene(scenes[i], aug_rng)
            s = generate_sentence(sc, int(aug_rng.integers(2**31)), lexicon)
            Wb[k] = torch.from_numpy(embed_sentence(tokenize(s), table, model_config.l_s))
            img = render(sc, model_config.image_h, model_config.image_w)
            Ib[k] = torch.from_numpy(img.transpose(2, 0, 1).copy())
        Ib += torch.randn(Ib.shape, generator=shuffler) * AUGMENT_IMAGE_NOISE
        return Wb, Ib

    out_checkpoint = Path(out_checkpoint)
    log_rows = [f"epoch,train_loss,val_loss"]
    initial_val = val_loss()
    best_val = float("inf")
    model.train()
    for epoch in range(epochs):
        perm = train_idx[torch.randperm(len(train_idx), generator=shuffler)]
        losses = []
        for k in range(0, len(perm), batch_size):
            idx = perm[k : k + batch_size]
            if augment:
                Wb, Ib = augmented_batch(idx.tolist())
                optimizer.zero_grad(set_to_none=True)
                t, g = model(Wb, Ib, dropout_on=True, gen=gen)
                loss = _standardized_loss(model, t, g, theta[idx], goal[idx])
                loss.backward()
                optimizer.step()
                losses.append(float(loss.detach()))
            else:
                losses.append(
                    train_step(model, optimizer, W[idx], images[idx], theta[idx], goal[idx], gen)
                )
        if scheduler is not None:
            scheduler.step()
        v = val_loss()
        log_rows.append(f"{epoch},{np.mean(losses):.6g},{v:.6g}")
        if v < best_val:
            best_val = v
            save_checkpoint(
                out_checkpoint,
                model,
                extra={"epoch": epoch, "val_loss": v, "initial_val_loss": initial_val},
            )
        if progress is not None:
            progress(epoch + 1, epochs, float(np.mean(losses)), v)
    if log_path is not None:
        Path(log_path).write_text("\n".join(log_rows) + "\n")
    return out_checkpoint


# --- evaluation protocol ---

@dataclass
class CategoryResult:
    feature: str
    n_scenarios: int
    success_rate: float
    mean_goal_error: float | None  # m, over successful cases
    mean_dispersion: float | None = None


@dataclass
class EvalReport:
    categories: dict[str, CategoryResult]

    def to_json(self) -> str:
        return json.dumps(
            {k: dataclasses.asdict(v) for k, v in self.categories.items()}, indent=2, sort_keys=True
        )

    def table(self) -> str:
        lines = [f"{'feature':<8} {'n':>5} {'success':>9} {'goal err (m)':>13}"]
        for c in self.categories.values():
            err = f"{c.mean_goal_error:.4f}" if c.mean_goal_error is not None else "-"
            lines.append(f"{c.feature:<8} {c.n_scenarios:>5} {c.success_rate:>8.1%} {err:>13}")
        return "\n".join(lines)


def eval_scene(feature: str, eval_seed: int, index: int) -> tuple[Scene, Sentence, int]:
    """Deterministic evaluation scene with `feature` as the unique distinguisher."""
    feat_idx = ATTRIBUTES.index(feature)
    for retry in range(50):
        seed = derive_seed(EVAL_NAMESPACE, eval_seed, feat_idx, index, retry)
        rng = np.random.default_rng(seed)
        try:
            scene = sample_scene(seed, _sample_n_objects(rng, (feature,)), (feature,))
        except SamplingExhausted:
            continue
        return scene, generate_sentence(scene, seed), seed
    raise SamplingExhausted(f"evaluation scene {feature}/{index}")


def run_policy(
    params: dmp.DmpParams,
    scene: Scene,
    arm: ArmModel,
    dmp_config: dmp.DmpConfig,
):
    """Rollout -> denormalize -> execute; returns (raw trajectory, landing, success)."""
    rolled = dmp.rollout(params, dmp_config)
    raw = dmp.Trajectory(frames=denormalize_joints(rolled.frames, arm), dt=rolled.dt)
    landing = execute(raw, scene, arm)
    return raw, landing, check_success(scene, landing)


def evaluate(
    predict_fn,
    n_per_feature: int = 100,
    seed: int = 0,
    arm: ArmModel | None = None,
    dmp_config: dmp.DmpConfig | None = None,
    progress=None,
) -> EvalReport:
    """Per-feature success protocol.

    `predict_fn(scene, sentence) -> DmpParams` decouples the harness from
    the model: pass a trained policy, or inject ground-truth labels to
    validate the harness itself.
    """
    arm = arm or default_arm()
    dmp_config = dmp_config or dmp.DmpConfig()
    categories = {}
    for feature in ATTRIBUTES:
        successes = 0
        goal_errors = []
        for i in range(n_per_feature):
            scene, sentence, _ = eval_scene(feature, seed, i)
            params = predict_fn(scene, sentence)
            _, landing, ok = run_policy(params, scene, arm, dmp_config)
            if ok:
                successes += 1
                target = scene.target
                goal_errors.append(
                    float(np.hypot(landing[0] - target.x, landing[1] - target.y))
                )
            if progress is not None:
                progress(feature, i + 1, n_per_feature)
        categories[feature] = CategoryResult(
            feature=feature,
            n_scenarios=n_per_feature,
            success_rate=successes / n_per_feature,
            mean_goal_error=float(np.mean(goal_errors)) if goal_errors else None,
        )
    return EvalReport(categories=categories)


def model_predict_fn(
    model: MultimodalPolicyNetwork,
    table: EmbeddingTable | None = None,
    arm: ArmModel | None = None,
):
    """Wrap a trained network as an evaluate()-compatible predictor."""
    arm = arm or default_arm()
    table = table or default_embeddings(model.config)
    config = model.config

    def predict(scene: Scene, sentence) -> dmp.DmpParams:
        W = embed_sentence(tokenize(sentence), table, config.l_s)
        image = render(scene, config.image_h, config.image_w)
        return predict_params(model, W, image, arm=arm)

    return predict


def oracle_predict_fn(arm: ArmModel | None = None, dmp_config: dmp.DmpConfig | None = None):
    """Ground-truth predictor: plans and fits the label for each scene."""
    arm = arm or default_arm()
    dmp_config = dmp_config or dmp.DmpConfig()

    def predict(scene: Scene, sentence) -> dmp.DmpParams:
        demo = plan_demonstration(scene, arm, n_frames=dmp_config.n_frames, dt=dmp_config.dt_out)
        return fit_label(demo.joints, arm, dmp_config)

    return predict


# --- end-to-end inference ---

@dataclass
class CommandResult:
    trajectory: dmp.Trajectory  # raw units (rad + gripper)
    ee_path: np.ndarray  # (T, 3)
    landing_xy: np.ndarray
    success: bool
    goal_samples: GoalSamples | None = None


def end_to_end(
    sentence_text: str,
    scene: Scene,
    model: MultimodalPolicyNetwork,
    mc_passes: int = 0,
    mc_seed: int = 0,
    arm: ArmModel | None = None,
    dmp_config: dmp.DmpConfig | None = None,
    table: EmbeddingTable | None = None,
) -> CommandResult:
    """render -> forward -> rollout -> execute -> success (+ optional MC)."""
    arm = arm or default_arm()
    dmp_config = dmp_config or dmp.DmpConfig()
    table = table or default_embeddings(model.config)
    W = embed_sentence(tokenize(sentence_text), table, model.config.l_s)
    image = render(scene, model.config.image_h, model.config.image_w)
    params = predict_params(model, W, image, arm=arm)
    raw, landing, ok = run_policy(params, scene, arm, dmp_config)
    samples = None
    if mc_passes:
        samples = mc_dropout_goals(model, W, image, mc_passes, mc_seed, arm)
    return CommandResult(
        trajectory=raw,
        ee_path=ee_path_of(raw, arm),
        landing_xy=np.asarray(landing),
        success=ok,
        goal_samples=samples,
    )


# --- uncertainty study: dispersion under valid vs. contradictory commands ---

@dataclass
class UncertaintyStudy:
    valid_dispersions: np.ndarray
    invalid_dispersions: np.ndarray

    @property
    def valid_median(self) -> float:
        return float(np.median(self.valid_dispersions))

    @property
    def invalid_median(self) -> float:
        return float(np.median(self.invalid_dispersions))

    @property
    def fraction_invalid_above_valid_median(self) -> float:
        return float(np.mean(self.invalid_dispersions > self.valid_median))


def absent_color(scene: Scene) -> str | None:
    present = {b.color for b in scene.bowls}
    for color in COLORS:
        if color not in present:
            return color
    return None


def uncertainty_study(
    model: MultimodalPolicyNetwork,
    n_each: int = 50,
    mc_passes: int = 50,
    seed: int = 0,
    arm: ArmModel | None = None,
    table: EmbeddingTable | None = None,
) -> UncertaintyStudy:
    """MC-dropout dispersion over paired valid / unsatisfiable commands.

    For each evaluation scene the valid command names the target; the
    invalid one names a color absent from the scene, so a well-calibrated
    policy should scatter its goal samples more for the invalid case.
    """
    arm = arm or default_arm()
    table = table or default_embeddings(model.config)
    config = model.config
    valid, invalid = [], []
    i = 0
    while len(valid) < n_each:
        scene, sentence, scene_seed = eval_scene("color", seed, i)
        i += 1
        missing = absent_color(scene)
        if missing is None:
            continue
        image = render(scene, config.image_h, config.image_w)
        for text, bucket in (
            (sentence.text, valid),
            (f"put the cube into the {missing} bowl", invalid),
        ):
            W = embed_sentence(tokenize(text), table, config.l_s)
            samples = mc_dropout_goals(model, W, image, mc_passes, seed=scene_seed, arm=arm)
            bucket.append(samples.dispersion)
    return UncertaintyStudy(
        valid_dispersions=np.array(valid), invalid_dispersions=np.array(invalid)
    )


# --- diagnostics: weight profiles for near/far targets (policy shaping) ---

def weight_profiles(
    model: MultimodalPolicyNetwork,
    scene_near: Scene,
    scene_far: Scene,
    sentence_near: str,
    sentence_far: str,
    n_joints: int = 4,
    table: EmbeddingTable | None = None,
) -> dict:
    """Per-joint basis-weight series for two scenes, as plottable data."""
    table = table or default_embeddings(model.config)
    config = model.config
    out = {}
    for tag, scene, text in (
        ("near", scene_near, sentence_near),
        ("far", scene_far, sentence_far),
    ):
        W = embed_sentence(tokenize(text), table, config.l_s)
        image = render(scene, config.image_h, config.image_w)
        params = predict_params(model, W, image)
        out[tag] = params.weights[:n_joints]
    out["max_abs_difference"] = float(np.abs(out["near"] - out["far"]).max())
    return out


def weight_profiles_csv(profiles: dict) -> str:
    near, far = profiles["near"], profiles["far"]
    lines = ["joint,basis,theta_near,theta_far"]
    for j in range(near.shape[0]):
        for i in range(near.shape[1]):
            lines.append(f"{j},{i},{near[j, i]:.9g},{far[j, i]:.9g}")
    return "\n".join(lines) + "\n"


def plot_weight_profiles(profiles: dict, out_png) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    near, far = profiles["near"], profiles["far"]
    n = near.shape[0]
    fig, axes = plt.subplots(1, n, figsize=(3 * n, 2.5), sharey=True)
    for j, ax in enumerate(np.atleast_1d(axes)):
        ax.plot(near[j], label="near")
        ax.plot(far[j], label="far")
        ax.set_title(f"joint {j}")
        ax.set_xlabel("basis")
    np.atleast_1d(axes)[0].legend()
    fig.tight_layout()
    fig.savefig(out_png, dpi=100)
    plt.close(fig)
