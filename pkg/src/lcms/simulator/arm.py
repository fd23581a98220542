"""6-R arm model: forward kinematics and damped-least-squares IK.

The arm is a fixed anthropomorphic chain pinned here for reproducibility:
a vertical base yaw, three pitch joints (shoulder/elbow/wrist), a wrist
yaw, and a flange pitch.  Each joint is described by its rotation axis in
the parent frame plus the link offset that follows it.  Only end-effector
position matters for the binning task, so IK is position-only with the
spare degrees of freedom absorbed by damping.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class NoConvergence(Exception):
    """IK failed to reach the target; carries the best-effort solution."""

    def __init__(self, q: np.ndarray, residual: float):
        super().__init__(f"IK did not converge, residual {residual:.4f} m")
        self.q = q
        self.residual = residual


@dataclass(frozen=True)
class ArmModel:
    axes: np.ndarray  # (6, 3) unit rotation axes in parent frames
    offsets: np.ndarray  # (6, 3) link offsets applied after each rotation (m)
    limits_lower: np.ndarray  # (6,) rad
    limits_upper: np.ndarray  # (6,) rad
    home: np.ndarray  # (6,) rad, within limits
    base: np.ndarray  # (3,) position of the chain root in the table frame (m)


def _axis_rotation(axis: np.ndarray, angle: float) -> np.ndarray:
    """Rodrigues rotation about a unit axis."""
    c, s = np.cos(angle), np.sin(angle)
    K = np.array(
        [
            [0.0, -axis[2], axis[1]],
            [axis[2], 0.0, -axis[0]],
            [-axis[1], axis[0], 0.0],
        ]
    )
    return np.eye(3) + s * K + (1 - c) * (K @ K)


def default_arm() -> ArmModel:
    """The pinned workbench arm.

    Links (base riser 0.35, upper arm 0.55, forearm 0.55, wrist 0.20,
    flange 0.10 m) give a 1.40 m reach around the shoulder at
    (0, -0.30, 0.35), which covers the whole table at hover height.
    """
    axes = np.array(
        [
            [0.0, 0.0, 1.0],  # base yaw
            [-1.0, 0.0, 0.0],  # shoulder pitch (positive leans toward +y)
            [-1.0, 0.0, 0.0],  # elbow pitch
            [-1.0, 0.0, 0.0],  # wrist pitch
            [0.0, 0.0, 1.0],  # wrist yaw
            [-1.0, 0.0, 0.0],  # flange pitch
        ]
    )
    offsets = np.array(
        [
            [0.0, 0.0, 0.35],
            [0.0, 0.0, 0.55],
            [0.0, 0.0, 0.55],
            [0.0, 0.0, 0.20],
            [0.0, 0.0, 0.0],
            [0.0, 0.0, 0.10],
        ]
    )
    return ArmModel(
        axes=axes,
        offsets=offsets,
        limits_lower=np.array([-2.9, -1.9, -2.6, -2.6, -2.9, -2.0]),
        limits_upper=np.array([2.9, 1.9, 2.6, 2.6, 2.9, 2.0]),
        home=np.array([0.0, 0.4, 2.1, 1.1, 0.0, 0.1]),
        base=np.array([0.0, -0.30, 0.0]),
    )


# End-effector position at default_arm().home, in the table frame; pinned
# from a hand-checked evaluation of the chain product. Hovers just above
# the cube pickup zone.
HOME_EE_POSITION = np.array([0.0, 0.10185206, 0.15179287])

# Gripper opening range; index 6 of a 7-D trajectory lives in this range.
GRIP_CLOSED = 1.0
GRIP_OPEN = 0.0


def _frames(arm: ArmModel, q: np.ndarray):
    """Joint origins and world axes along the chain, plus the EE position."""
    p = arm.base.astype(float).copy()
    R = np.eye(3)
    origins = np.empty((6, 3))
    world_axes = np.empty((6, 3))
    for i in range(6):
        origins[i] = p
        R = R @ _axis_rotation(arm.axes[i], q[i])
        world_axes[i] = R @ arm.axes[i]
        p = p + R @ arm.offsets[i]
    return origins, world_axes, p


def forward_kinematics(arm: ArmModel, q: np.ndarray, check_limits: bool = True) -> np.ndarray:
    """End-effector position in the table frame for joint angles q (rad)."""
    q = np.asarray(q, dtype=float)
    if q.shape != (6,):
        raise ValueError("q must have 6 joint angles")
    if check_limits and (np.any(q < arm.limits_lower - 1e-9) or np.any(q > arm.limits_upper + 1e-9)):
        raise ValueError("joint angles outside limits")
    return _frames(arm, q)[2]


def position_jacobian(arm: ArmModel, q: np.ndarray) -> np.ndarray:
    """3x6 position Jacobian (columns: world_axis x (ee - joint origin))."""
    origins, world_axes, ee = _frames(arm, q)
    return np.cross(world_axes, ee - origins).T


def ik_solve(
    arm: ArmModel,
    target: np.ndarray,
    q_seed: np.ndarray,
    tol: float = 1e-3,
    max_iters: int = 200,
    damping: float = 0.05,
) -> np.ndarray:
    """Damped-least-squares IK for an end-effector position.

    Iterates dq = J^T (J J^T + lambda^2 I)^-1 err with per-step joint-limit
    clamping until the residual drops below tol (1 mm).  Raises
    NoConvergence carrying the best q seen and its residual.
    """
    target = np.asarray(target, dtype=float)
    q = np.clip(np.asarray(q_seed, dtype=float), arm.limits_lower, arm.limits_upper)
    best_q, best_res = q.copy(), np.linalg.norm(target - forward_kinematics(arm, q, check_limits=False))
    if best_res < tol:
        return q
    lam2 = damping**2 * np.eye(3)
    for _ in range(max_iters):
        err = target - forward_kinematics(arm, q, check_limits=False)
        res = np.linalg.norm(err)
        if res < best_res:
            best_q, best_res = q.copy(), res
        if res < tol:
            return q
        J = position_jacobian(arm, q)
        dq = J.T @ np.linalg.solve(J @ J.T + lam2, err)
        step = np.linalg.norm(dq, ord=np.inf)
        if step > 0.2:  # trust region: keep linearization honest
            dq *= 0.2 / step
        q = np.clip(q + dq, arm.limits_lower, arm.limits_upper)
    err = target - forward_kinematics(arm, q, check_limits=False)
    res = np.linalg.norm(err)
    if res < best_res:
        best_q, best_res = q, res
    if best_res < tol:
        return best_q
    raise NoConvergence(best_q, best_res)


# --- joint normalization (simulation boundary <-> learning coordinates) ---

def joint_limits_7(arm: ArmModel) -> tuple[np.ndarray, np.ndarray]:
    """Limits for the 7 learned dimensions: 6 joints + gripper in [0, 1]."""
    lo = np.append(arm.limits_lower, 0.0)
    hi = np.append(arm.limits_upper, 1.0)
    return lo, hi


def normalize_joints(values: np.ndarray, arm: ArmModel) -> np.ndarray:
    """Map raw 7-D joint/gripper values to [-1, 1] by the joint limits."""
    lo, hi = joint_limits_7(arm)
    return 2.0 * (np.asarray(values, dtype=float) - lo) / (hi - lo) - 1.0


def denormalize_joints(values: np.ndarray, arm: ArmModel) -> np.ndarray:
    lo, hi = joint_limits_7(arm)
    return (np.asarray(values, dtype=float) + 1.0) * (hi - lo) / 2.0 + lo
