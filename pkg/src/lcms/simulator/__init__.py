"""Kinematic tabletop world: arm, scenes, rendering, demonstration planning."""

from .arm import (  # noqa: F401
    ArmModel,
    NoConvergence,
    default_arm,
    forward_kinematics,
    ik_solve,
)
from .scene import (  # noqa: F401
    BOWL_HALF_EDGE,
    COLORS,
    SHAPES,
    SIZES,
    SamplingExhausted,
    Scene,
    SceneObject,
    sample_scene,
    scene_from_json,
    scene_to_json,
)
from .render import PALETTE, image_to_png, png_to_image, render  # noqa: F401
from .world import (  # noqa: F401
    Demonstration,
    PlanningFailed,
    check_success,
    execute,
    min_jerk_profile,
    plan_demonstration,
)
