"""Dynamic motor primitive engine.

A DMP is a critically damped point attractor per output dimension,
shaped by a learned forcing term over a shared exponential phase:

    tau * dz/dt = alpha_z * (beta_z * (g - y) - z) + f(x)
    tau * dy/dt = z
    x(t) = exp(-alpha_x * t / tau)

The forcing term is a normalized radial-basis mixture gated by the phase,
so it vanishes as x -> 0 and the system always converges to the goal.
Weights are fitted from demonstrations with per-basis locally weighted
regression, or produced at run time by the policy network.

The forcing term is deliberately NOT scaled by (g - y0): scaling makes
fitting singular for dimensions that barely move (e.g. a joint that stays
put during a demonstration), and the unscaled variant keeps fit() total.
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field

import numpy as np

MIN_CENTER_GAP = 1e-6
LWR_RIDGE = 1e-8
PSI_SUM_GUARD = 1e-12


@dataclass(frozen=True)
class DmpConfig:
    """Fixed hyperparameters of the primitive.

    n_dims is the number of output dimensions (7 = 6 joints + gripper),
    n_basis the number of forcing basis functions per dimension.
    alpha_x = 4.6052 puts the phase at 0.01 when t = tau.
    """

    n_dims: int = 7
    n_basis: int = 20
    alpha_z: float = 25.0
    beta_z: float = 6.25
    alpha_x: float = 4.6052
    tau: float = 5.0
    dt_out: float = 0.05
    substeps: int = 5

    def __post_init__(self):
        if self.n_dims < 1:
            raise ValueError("n_dims must be >= 1")
        if self.n_basis < 2:
            raise ValueError("n_basis must be >= 2")
        for name in ("alpha_z", "beta_z", "alpha_x", "tau", "dt_out"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.substeps < 1:
            raise ValueError("substeps must be >= 1")

    @property
    def n_frames(self) -> int:
        return int(round(self.tau / self.dt_out)) + 1


@dataclass(frozen=True)
class BasisSet:
    """Gaussian basis functions over the phase coordinate."""

    centers: np.ndarray  # (b,), strictly decreasing, centers[0] == 1
    widths: np.ndarray  # (b,), all positive

    def psi(self, x) -> np.ndarray:
        """Basis activations at phase(s) x; shape (..., b)."""
        x = np.asarray(x, dtype=float)[..., None]
        return np.exp(-self.widths * (x - self.centers) ** 2)


@dataclass(frozen=True)
class DmpParams:
    """Learnable part of a primitive: forcing weights, goal, and start."""

    weights: np.ndarray  # (o, b)
    goal: np.ndarray  # (o,)
    start: np.ndarray  # (o,)

    def __post_init__(self):
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))
        object.__setattr__(self, "goal", np.asarray(self.goal, dtype=float))
        object.__setattr__(self, "start", np.asarray(self.start, dtype=float))
        if self.weights.ndim != 2:
            raise ValueError("weights must be a 2-D (o, b) matrix")
        o = self.weights.shape[0]
        if self.goal.shape != (o,) or self.start.shape != (o,):
            raise ValueError("goal/start length must match weight rows")
        for name in ("weights", "goal", "start"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise ValueError(f"non-finite values in {name}")


@dataclass(frozen=True)
class Trajectory:
    """Uniformly sampled multidimensional trajectory."""

    frames: np.ndarray  # (T, o)
    dt: float
    velocities: np.ndarray | None = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, "frames", np.asarray(self.frames, dtype=float))
        if self.frames.ndim != 2 or self.frames.shape[0] < 2:
            raise ValueError("trajectory needs at least 2 frames of shape (T, o)")
        if self.dt <= 0:
            raise ValueError("dt must be positive")
        if not np.all(np.isfinite(self.frames)):
            raise ValueError("non-finite trajectory values")

    @property
    def n_frames(self) -> int:
        return self.frames.shape[0]

    @property
    def n_dims(self) -> int:
        return self.frames.shape[1]

    @property
    def duration(self) -> float:
        return (self.n_frames - 1) * self.dt

    @property
    def times(self) -> np.ndarray:
        return np.arange(self.n_frames) * self.dt


def build_basis(config: DmpConfig) -> BasisSet:
    """Place basis centers evenly in phase time and derive widths.

    Centers follow the canonical decay, c_i = exp(-alpha_x * i / (b - 1)),
    so they are evenly spaced in time.  Widths come from the gap to the
    next center; the last basis reuses the previous width.
    """
    b = config.n_basis
    i = np.arange(b)
    centers = np.exp(-config.alpha_x * i / (b - 1))
    gaps = centers[:-1] - centers[1:]
    if np.any(gaps < MIN_CENTER_GAP):
        raise ValueError(
            "basis centers closer than the minimum gap; reduce n_basis or raise alpha_x"
        )
    widths = np.empty(b)
    widths[:-1] = 1.0 / (2.0 * gaps**2)
    widths[-1] = widths[-2]
    return BasisSet(centers=centers, widths=widths)


def canonical_phase(t, config: DmpConfig) -> np.ndarray | float:
    """Phase value(s) x = exp(-alpha_x * t / tau), in (0, 1] for t >= 0."""
    return np.exp(-config.alpha_x * np.asarray(t, dtype=float) / config.tau)


def forcing(x, params: DmpParams, basis: BasisSet) -> np.ndarray:
    """Forcing vector f(x), one value per output dimension.

    f_j(x) = x * sum_i psi_i(x) * w_ji / sum_i psi_i(x).  Returns zeros
    when the activation mass underflows (deep in the tail of all bases).
    """
    psi = basis.psi(x)
    denom = psi.sum(axis=-1)
    scale = np.where(denom < PSI_SUM_GUARD, 0.0, np.asarray(x, dtype=float) / np.maximum(denom, PSI_SUM_GUARD))
    return (psi @ params.weights.T) * scale[..., None]


def rollout(params: DmpParams, config: DmpConfig, basis: BasisSet | None = None) -> Trajectory:
    """Integrate the primitive with fixed-step RK4.

    Produces round(tau / dt_out) + 1 frames starting at params.start with
    zero initial velocity.  The phase is evaluated analytically at the RK4
    stage times, so the result is deterministic.
    """
    if basis is None:
        basis = build_basis(config)
    o = config.n_dims
    if params.weights.shape != (o, config.n_basis):
        raise ValueError(
            f"weights shape {params.weights.shape} does not match config "
            f"({o}, {config.n_basis})"
        )
    tau, az, bz = config.tau, config.alpha_z, config.beta_z
    g = params.goal

    def deriv(t: float, y: np.ndarray, z: np.ndarray):
        f = forcing(canonical_phase(t, config), params, basis)
        zdot = (az * (bz * (g - y) - z) + f) / tau
        return z / tau, zdot

    n_frames = config.n_frames
    h = config.dt_out / config.substeps
    frames = np.empty((n_frames, o))
    vels = np.empty((n_frames, o))
    y = params.start.copy()
    z = np.zeros(o)
    frames[0] = y
    vels[0] = z / tau
    t = 0.0
    for k in range(1, n_frames):
        for _ in range(config.substeps):
            k1y, k1z = deriv(t, y, z)
            k2y, k2z = deriv(t + h / 2, y + h / 2 * k1y, z + h / 2 * k1z)
            k3y, k3z = deriv(t + h / 2, y + h / 2 * k2y, z + h / 2 * k2z)
            k4y, k4z = deriv(t + h, y + h * k3y, z + h * k3z)
            y = y + h / 6 * (k1y + 2 * k2y + 2 * k3y + k4y)
            z = z + h / 6 * (k1z + 2 * k2z + 2 * k3z + k4z)
            t += h
        frames[k] = y
        vels[k] = z / tau
    return Trajectory(frames=frames, dt=config.dt_out, velocities=vels)


def fit(demo: Trajectory, config: DmpConfig, basis: BasisSet | None = None) -> DmpParams:
    """Fit forcing weights to a demonstration by locally weighted regression.

    Velocities/accelerations come from central finite differences
    (one-sided at the ends).  Each basis solves its own scalar ridge
    problem against the target forcing, weighted by its activation.
    """
    if basis is None:
        basis = build_basis(config)
    if demo.n_frames < 5:
        raise ValueError("demonstration needs at least 5 frames")
    y = demo.frames
    dt = demo.dt
    g = y[-1].copy()
    y0 = y[0].copy()

    if np.allclose(y, y[0], atol=1e-15):
        return DmpParams(
            weights=np.zeros((demo.n_dims, config.n_basis)), goal=y0.copy(), start=y0
        )

    yd = np.gradient(y, dt, axis=0)
    # pure central second difference; edge values replicated (the one-sided
    # edge formula amplifies the startup transient catastrophically once
    # the attractor term is subtracted back out)
    ydd = np.empty_like(y)
    ydd[1:-1] = (y[2:] - 2 * y[1:-1] + y[:-2]) / dt**2
    ydd[0] = ydd[1]
    ydd[-1] = ydd[-2]

    tau = config.tau
    # target forcing per frame: (T, o)
    f_target = tau**2 * ydd - config.alpha_z * (config.beta_z * (g - y) - tau * yd)

    x = canonical_phase(demo.times, config)  # (T,)
    psi = basis.psi(x)  # (T, b)
    sx = psi * x[:, None]  # psi_i(x_t) * x_t
    denom = (sx * x[:, None]).sum(axis=0) + LWR_RIDGE  # (b,)
    weights = (f_target.T @ sx) / denom  # (o, b)
    return DmpParams(weights=weights, goal=g, start=y0)


# --- trajectory CSV (diagnostics / dataset storage) ---

CSV_HEADER = "t,q0,q1,q2,q3,q4,q5,grip"


def trajectory_to_csv(traj: Trajectory) -> str:
    """Serialize a 7-D trajectory: header `t,q0..q5,grip`, %.9g floats, LF."""
    if traj.n_dims != 7:
        raise ValueError("CSV format is for 7-D trajectories")
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for k in range(traj.n_frames):
        row = [k * traj.dt, *traj.frames[k]]
        buf.write(",".join(f"{v:.9g}" for v in row) + "\n")
    return buf.getvalue()


def trajectory_from_csv(text: str) -> Trajectory:
    lines = [ln for ln in text.strip().split("\n") if ln]
    if not lines or lines[0].strip() != CSV_HEADER:
        raise ValueError(f"expected header {CSV_HEADER!r}")
    rows = np.array([[float(v) for v in ln.split(",")] for ln in lines[1:]])
    if rows.ndim != 2 or rows.shape[1] != 8 or rows.shape[0] < 2:
        raise ValueError("malformed trajectory CSV body")
    dt = rows[1, 0] - rows[0, 0]
    return Trajectory(frames=rows[:, 1:], dt=dt)
