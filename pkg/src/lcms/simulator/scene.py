"""Tabletop scenes: attributed bowls, a cube, and constraint-aware sampling.

A scene holds 3-5 bowls (the candidate bins) plus the manipuland cube at a
fixed pickup zone.  Sampling takes a required attribute subset S and
produces scenes where S is the unique minimal distinguishing set for the
target: every attribute combination that is not a superset of S is blocked
by some distractor, so a speaker has to mention exactly the attributes in S.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

import numpy as np

COLORS = ("red", "green", "blue", "yellow", "pink")
SHAPES = ("round", "square")
SIZES = ("small", "large")
ATTRIBUTES = ("color", "shape", "size")

# bowl footprint radius / half-edge in metres
BOWL_RADIUS = {"small": 0.0625, "large": 0.0875}
# success bounding-box half edge (boxes of 12.5 / 17.5 cm edge length)
BOWL_HALF_EDGE = {"small": 0.0625, "large": 0.0875}

TABLE_W = 0.9  # x in [-w/2, w/2]
TABLE_H = 0.6  # y in [0, h]
CUBE_POSITION = (0.0, 0.08)  # fixed pickup zone
CUBE_EDGE = 0.04
MIN_BOWL_SEPARATION = 0.22
# bowls keep clear of the table edge and the pickup zone
BOWL_X_RANGE = (-0.36, 0.36)
BOWL_Y_RANGE = (0.20, 0.52)

MAX_SAMPLING_TRIES = 10_000


class SamplingExhausted(Exception):
    pass


@dataclass(frozen=True)
class SceneObject:
    kind: str  # "bowl" or "cube"
    color: str
    shape: str
    size: str
    x: float
    y: float

    @property
    def attrs(self) -> tuple[str, str, str]:
        return (self.color, self.shape, self.size)


@dataclass(frozen=True)
class Scene:
    bowls: tuple[SceneObject, ...]
    cube_xy: tuple[float, float]
    target_index: int
    seed: int
    table_w: float = TABLE_W
    table_h: float = TABLE_H

    @property
    def target(self) -> SceneObject:
        return self.bowls[self.target_index]

    def __post_init__(self):
        if not 3 <= len(self.bowls) <= 5:
            raise ValueError("scene needs 3 to 5 bowls")
        if not 0 <= self.target_index < len(self.bowls):
            raise ValueError("target_index out of range")


def _matches(a: SceneObject, b: SceneObject, subset: frozenset[str]) -> bool:
    return all(getattr(a, attr) == getattr(b, attr) for attr in subset)


def distinguishing_subsets(scene: Scene) -> list[frozenset[str]]:
    """All inclusion-minimal attribute subsets that single out the target.

    A subset S distinguishes the target when no distractor matches it on
    every attribute in S.  Results are sorted by size then name for
    deterministic downstream sampling.
    """
    target = scene.target
    distractors = [b for i, b in enumerate(scene.bowls) if i != scene.target_index]
    good: list[frozenset[str]] = []
    for r in (1, 2, 3):
        for combo in itertools.combinations(ATTRIBUTES, r):
            s = frozenset(combo)
            if any(s > g for g in good):
                continue  # not minimal
            if not any(_matches(d, target, s) for d in distractors):
                good.append(s)
    return sorted(good, key=lambda s: (len(s), sorted(s)))


def _blocked(target: SceneObject, distractors: list[SceneObject], required: frozenset[str]) -> bool:
    """True when the minimal distinguishing family is exactly {required}."""
    for r in range(1, 4):
        for combo in itertools.combinations(ATTRIBUTES, r):
            s = frozenset(combo)
            distinguishes = not any(_matches(d, target, s) for d in distractors)
            if s >= required:
                if not distinguishes:
                    return False
            elif distinguishes:
                return False
    return True


def _sample_positions(rng: np.random.Generator, n: int) -> list[tuple[float, float]] | None:
    pts: list[tuple[float, float]] = []
    for _ in range(n):
        for _try in range(200):
            x = rng.uniform(*BOWL_X_RANGE)
            y = rng.uniform(*BOWL_Y_RANGE)
            if all((x - px) ** 2 + (y - py) ** 2 >= MIN_BOWL_SEPARATION**2 for px, py in pts):
                pts.append((x, y))
                break
        else:
            return None
    return pts


def sample_scene(seed: int, n_objects: int = 4, required_unique_attrs=("color",)) -> Scene:
    """Sample a scene whose target needs exactly `required_unique_attrs`.

    Deterministic in (seed, n_objects, required_unique_attrs).  Raises
    SamplingExhausted when no valid assignment exists (e.g. a 3-attribute
    requirement with only 3 bowls: that needs 3 dedicated distractors).
    """
    required = frozenset(required_unique_attrs)
    if not required or not required <= set(ATTRIBUTES):
        raise ValueError("required_unique_attrs must be a nonempty subset of color/shape/size")
    if not 3 <= n_objects <= 5:
        raise ValueError("n_objects must be in [3, 5]")
    if n_objects - 1 < len(required):
        raise SamplingExhausted(
            f"{len(required)} blocking distractors needed but only {n_objects - 1} available"
        )
    rng = np.random.default_rng(seed)
    all_types = list(itertools.product(COLORS, SHAPES, SIZES))
    for _ in range(MAX_SAMPLING_TRIES):
        types = [all_types[k] for k in rng.choice(len(all_types), size=n_objects, replace=False)]
        target_t = types[0]
        # one blocker per required attribute: matches the target everywhere
        # except on that attribute, so every non-superset of `required` fails
        blockers = []
        ok = True
        for attr in sorted(required):
            idx = ATTRIBUTES.index(attr)
            domain = {"color": COLORS, "shape": SHAPES, "size": SIZES}[attr]
            alt = list(v for v in domain if v != target_t[idx])
            t = list(target_t)
            t[idx] = alt[rng.integers(len(alt))]
            t = tuple(t)
            if t == target_t or t in blockers:
                ok = False
                break
            blockers.append(t)
        if not ok:
            continue
        extras = [t for t in types[1:] if t not in blockers and t != target_t]
        rest = (blockers + extras)[: n_objects - 1]
        if len(rest) != n_objects - 1 or len(set(rest + [target_t])) != n_objects:
            continue
        positions = _sample_positions(rng, n_objects)
        if positions is None:
            continue
        order = rng.permutation(n_objects)
        all_t = [target_t] + rest
        bowls = tuple(
            SceneObject(
                kind="bowl",
                color=all_t[k][0],
                shape=all_t[k][1],
                size=all_t[k][2],
                x=positions[j][0],
                y=positions[j][1],
            )
            for j, k in enumerate(order)
        )
        target_index = int(np.argwhere(order == 0)[0][0])
        target = bowls[target_index]
        distractors = [b for i, b in enumerate(bowls) if i != target_index]
        if not _blocked(target, distractors, required):
            continue
        return Scene(bowls=bowls, cube_xy=CUBE_POSITION, target_index=target_index, seed=int(seed))
    raise SamplingExhausted(f"no valid scene after {MAX_SAMPLING_TRIES} tries")


# --- JSON round-trip ---

def scene_to_json(scene: Scene) -> str:
    doc = {
        "seed": scene.seed,
        "table": {"w": scene.table_w, "h": scene.table_h},
        "bowls": [
            {"color": b.color, "shape": b.shape, "size": b.size, "x": b.x, "y": b.y}
            for b in scene.bowls
        ],
        "cube": {"x": scene.cube_xy[0], "y": scene.cube_xy[1]},
        "target_index": scene.target_index,
    }
    return json.dumps(doc, sort_keys=True)


def scene_from_json(text: str) -> Scene:
    doc = json.loads(text)
    bowls = tuple(
        SceneObject(kind="bowl", color=b["color"], shape=b["shape"], size=b["size"], x=b["x"], y=b["y"])
        for b in doc["bowls"]
    )
    return Scene(
        bowls=bowls,
        cube_xy=(doc["cube"]["x"], doc["cube"]["y"]),
        target_index=doc["target_index"],
        seed=doc.get("seed", 0),
        table_w=doc["table"]["w"],
        table_h=doc["table"]["h"],
    )
