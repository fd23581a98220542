"""Demonstration planning, trajectory execution, and success checking.

Planning produces a minimum-jerk Cartesian hover path from above the cube
pickup zone to above the target bowl, tracked frame by frame with damped
least-squares IK.  Execution is kinematic: the cube rides under the end
effector while the gripper is closed and drops straight down on release.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..dmp import Trajectory
from .arm import ArmModel, GRIP_CLOSED, GRIP_OPEN, NoConvergence, forward_kinematics, ik_solve
from .scene import BOWL_HALF_EDGE, Scene

HOVER_Z = 0.15
RELEASE_START = 0.90  # fraction of the horizon where the gripper starts opening
RELEASE_END = 0.95
GRIP_RELEASE_THRESHOLD = 0.5


class PlanningFailed(Exception):
    pass


@dataclass(frozen=True)
class Demonstration:
    scene: Scene
    sentence: str
    joints: Trajectory  # (T, 7) raw units: rad + gripper in [0, 1]
    ee_path: np.ndarray  # (T, 3) m


def min_jerk_profile(s: np.ndarray) -> np.ndarray:
    """Minimum-jerk interpolation factor for normalized time s in [0, 1]."""
    return 10 * s**3 - 15 * s**4 + 6 * s**5


def smooth_step(s: np.ndarray) -> np.ndarray:
    s = np.clip(s, 0.0, 1.0)
    return 3 * s**2 - 2 * s**3


def gripper_profile(n_frames: int) -> np.ndarray:
    """Closed until 90% of the horizon, smooth-step open by 95%."""
    s = np.linspace(0.0, 1.0, n_frames)
    u = (s - RELEASE_START) / (RELEASE_END - RELEASE_START)
    return GRIP_CLOSED + (GRIP_OPEN - GRIP_CLOSED) * smooth_step(u)


def plan_demonstration(scene: Scene, arm: ArmModel, n_frames: int = 101, dt: float = 0.05) -> Demonstration:
    """Plan a 7-D joint demonstration that bins the cube into the target bowl."""
    target = scene.target
    start = np.array([scene.cube_xy[0], scene.cube_xy[1], HOVER_Z])
    end = np.array([target.x, target.y, HOVER_Z])
    s = min_jerk_profile(np.linspace(0.0, 1.0, n_frames))
    path = start[None, :] + s[:, None] * (end - start)[None, :]

    joints = np.empty((n_frames, 7))
    q = arm.home.copy()
    try:
        for k in range(n_frames):
            q = ik_solve(arm, path[k], q)
            joints[k, :6] = q
    except NoConvergence as exc:
        raise PlanningFailed(f"IK failed at frame {k}: {exc}") from exc
    joints[:, 6] = gripper_profile(n_frames)

    ee = np.array([forward_kinematics(arm, joints[k, :6], check_limits=False) for k in range(n_frames)])
    return Demonstration(scene=scene, sentence="", joints=Trajectory(frames=joints, dt=dt), ee_path=ee)


def execute(joints: Trajectory, scene: Scene, arm: ArmModel) -> np.ndarray:
    """Run a 7-D joint trajectory and return the cube's final xy.

    The cube tracks the end-effector xy while the gripper is closed
    (> 0.5) and freezes at the first open frame.
    """
    if joints.n_dims != 7:
        raise ValueError("execution expects 7-D trajectories")
    q = np.clip(joints.frames[:, :6], arm.limits_lower, arm.limits_upper)
    grip = joints.frames[:, 6]
    cube_xy = np.asarray(scene.cube_xy, dtype=float)
    for k in range(joints.n_frames):
        if grip[k] <= GRIP_RELEASE_THRESHOLD:
            return cube_xy
        ee = forward_kinematics(arm, q[k], check_limits=False)
        cube_xy = ee[:2].copy()
    return cube_xy


def check_success(scene: Scene, cube_xy) -> bool:
    """Cube inside the target bowl's axis-aligned bounding box?"""
    target = scene.target
    half = BOWL_HALF_EDGE[target.size]
    return bool(
        abs(cube_xy[0] - target.x) <= half and abs(cube_xy[1] - target.y) <= half
    )


def ee_path_of(joints: Trajectory, arm: ArmModel) -> np.ndarray:
    """End-effector positions for each frame of a joint trajectory."""
    return np.array(
        [forward_kinematics(arm, np.clip(f[:6], arm.limits_lower, arm.limits_upper), check_limits=False) for f in joints.frames]
    )


def landing_of(joints: Trajectory, scene: Scene, arm: ArmModel) -> tuple[np.ndarray, bool]:
    xy = execute(joints, scene, arm)
    return xy, check_success(scene, xy)
