"""Multimodal policy network: (sentence, image) -> DMP parameters.

Three stages: an n-gram text CNN pools the sentence matrix into a sentence
embedding; the embedding is projected to an image plane and stacked as a
fourth channel before three stride-2 convolution blocks (each with an
additive residual convolution) produce the task embedding; a shared
perceptron feeds two heads that emit the forcing weights and the goal.

Dropout is applied functionally with an explicit torch.Generator so that
Monte-Carlo mask sampling is reproducible; the same network serves
training, deterministic inference, and stochastic uncertainty passes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import torch
from torch import nn

from .dmp import DmpParams
from .simulator.arm import (
    ArmModel,
    GRIP_CLOSED,
    default_arm,
    denormalize_joints,
    forward_kinematics,
    normalize_joints,
)

GOAL_LOSS_WEIGHT = 10.0


class NonFiniteGradient(RuntimeError):
    def __init__(self, tensor_name: str):
        super().__init__(f"non-finite gradient in {tensor_name}")
        self.tensor_name = tensor_name


@dataclass(frozen=True)
class ModelConfig:
    l_s: int = 15
    l_w: int = 50
    ngram_sizes: tuple[int, ...] = (1, 2, 3)
    n_filters: int = 64
    d_s: int = 64
    image_h: int = 64
    image_w: int = 64
    block_channels: tuple[int, int, int] = (16, 32, 64)
    d_e: int = 256
    d_g: int = 128
    dropout: float = 0.1
    n_dims: int = 7
    n_basis: int = 20
    mc_passes: int = 50

    def __post_init__(self):
        if not 0.0 <= self.dropout < 1.0:
            raise ValueError("dropout must be in [0, 1)")
        if any(n > self.l_s for n in self.ngram_sizes):
            raise ValueError("n-gram sizes cannot exceed l_s")
        if self.image_h % 8 or self.image_w % 8:
            raise ValueError("image size must be divisible by 8 (three stride-2 blocks)")


def _dropout(x: torch.Tensor, p: float, on: bool, gen: torch.Generator | None) -> torch.Tensor:
    if not on or p == 0.0:
        return x
    keep = (torch.rand(x.shape, generator=gen, device=x.device, dtype=x.dtype) >= p).to(x.dtype)
    return x * keep / (1.0 - p)


class ConvBlock(nn.Module):
    """conv 3x3 -> conv 3x3 stride 2 -> additive residual conv 3x3."""

    def __init__(self, c_in: int, c_out: int):
        super().__init__()
        self.conv1 = nn.Conv2d(c_in, c_out, 3, padding=1)
        self.conv2 = nn.Conv2d(c_out, c_out, 3, stride=2, padding=1)
        self.conv_res = nn.Conv2d(c_out, c_out, 3, padding=1)

    def forward(self, x: torch.Tensor) -> torch.Tensor:
        h = torch.relu(self.conv1(x))
        h = torch.relu(self.conv2(h))
        return torch.relu(h + self.conv_res(h))


class MultimodalPolicyNetwork(nn.Module):
    def __init__(self, config: ModelConfig):
        super().__init__()
        self.config = config
        c = config
        self.ngram_convs = nn.ModuleList(
            [nn.Conv2d(1, c.n_filters, (n, c.l_w)) for n in c.ngram_sizes]
        )
        self.ngram_merge = nn.Linear(c.n_filters * len(c.ngram_sizes), c.d_s)
        self.sentence_plane = nn.Linear(c.d_s, c.image_h * c.image_w)
        chans = c.block_channels
        self.blocks = nn.ModuleList(
            [
                ConvBlock(4, chans[0]),
                ConvBlock(chans[0], chans[1]),
                ConvBlock(chans[1], chans[2]),
            ]
        )
        flat = (c.image_h // 8) * (c.image_w // 8) * chans[2]
        self.embed_head = nn.Linear(flat, c.d_e)
        # shared translation perceptron (used by BOTH heads)
        self.shared = nn.Linear(c.d_e, c.d_g)
        self.head_weights = nn.Sequential(
            nn.Linear(c.d_g, c.d_g), nn.ReLU(), nn.Linear(c.d_g, c.n_dims * c.n_basis)
        )
        self.head_goal = nn.Sequential(
            nn.Linear(c.d_g, c.d_g), nn.ReLU(), nn.Linear(c.d_g, c.n_dims)
        )
        # fixed output standardization: heads emit z-scores, outputs are
        # z * scale + offset.  Set from training-label statistics so rows
        # with wildly different magnitudes (late-phase gripper forcing)
        # train at the same rate; identity by default.
        self.register_buffer("weight_scale", torch.ones(c.n_dims, c.n_basis))
        self.register_buffer("weight_offset", torch.zeros(c.n_dims, c.n_basis))
        self.register_buffer("goal_scale", torch.ones(c.n_dims))
        self.register_buffer("goal_offset", torch.zeros(c.n_dims))
        # He initialization: the default conv/linear init attenuates the
        # input-dependent signal component roughly 100x across this depth,
        # which stalls training at the constant (label-mean) predictor
        for m in self.modules():
            if isinstance(m, (nn.Conv2d, nn.Linear)):
                nn.init.kaiming_normal_(m.weight, nonlinearity="relu")
                nn.init.zeros_(m.bias)

    def set_output_standardization(self, theta_labels: torch.Tensor, g_labels: torch.Tensor) -> None:
        """Fit the output scale/offset buffers to a label set (n, o, b) / (n, o)."""
        min_scale = 1e-3  # keep outputs differentiable w.r.t. the heads
        self.weight_offset.copy_(theta_labels.mean(dim=0))
        self.weight_scale.copy_(theta_labels.std(dim=0).clamp_min(min_scale))
        self.goal_offset.copy_(g_labels.mean(dim=0))
        self.goal_scale.copy_(g_labels.std(dim=0).clamp_min(min_scale))

    def encode_sentence(self, W: torch.Tensor) -> torch.Tensor:
        """Sentence matrix (B, l_s, l_w) -> sentence embedding (B, d_s)."""
        x = W.unsqueeze(1)
        pooled = []
        for conv in self.ngram_convs:
            h = torch.relu(conv(x)).squeeze(3)  # (B, filters, positions)
            pooled.append(h.max(dim=2).values)
        return torch.relu(self.ngram_merge(torch.cat(pooled, dim=1)))

    def encode_scene(
        self,
        image: torch.Tensor,
        e_s: torch.Tensor,
        dropout_on: bool = False,
        gen: torch.Generator | None = None,
    ) -> torch.Tensor:
        """Image (B, 3, H, W) + sentence embedding -> task embedding (B, d_e)."""
        plane = self.sentence_plane(e_s).view(-1, 1, self.config.image_h, self.config.image_w)
        x = torch.cat([image, plane], dim=1)
        for block in self.blocks:
            x = block(x)
        e = torch.relu(self.embed_head(x.flatten(1)))
        return _dropout(e, self.config.dropout, dropout_on, gen)

    def translate(
        self,
        e: torch.Tensor,
        dropout_on: bool = False,
        gen: torch.Generator | None = None,
    ) -> tuple[torch.Tensor, torch.Tensor]:
        """Task embedding -> (weights (B, o, b), goal (B, o))."""
        h = torch.relu(self.shared(e))
        h = _dropout(h, self.config.dropout, dropout_on, gen)
        z = self.head_weights(h).view(-1, self.config.n_dims, self.config.n_basis)
        theta = z * self.weight_scale + self.weight_offset
        g = self.head_goal(h) * self.goal_scale + self.goal_offset
        return theta, g

    def forward(
        self,
        W: torch.Tensor,
        image: torch.Tensor,
        dropout_on: bool = False,
        gen: torch.Generator | None = None,
    ) -> tuple[torch.Tensor, torch.Tensor]:
        e_s = self.encode_sentence(W)
        e = self.encode_scene(image, e_s, dropout_on, gen)
        return self.translate(e, dropout_on, gen)


def loss_fn(
    theta_pred: torch.Tensor,
    g_pred: torch.Tensor,
    theta_label: torch.Tensor,
    g_label: torch.Tensor,
) -> torch.Tensor:
    """Mean-squared parameter loss with the goal term up-weighted."""
    o = g_pred.shape[-1]
    ob = theta_pred.shape[-1] * theta_pred.shape[-2]
    l_theta = ((theta_pred - theta_label) ** 2).flatten(1).sum(dim=1) / ob
    l_goal = ((g_pred - g_label) ** 2).sum(dim=1) / o
    return (l_theta + GOAL_LOSS_WEIGHT * l_goal).mean()


def make_optimizer(model: nn.Module, lr: float = 1e-3) -> torch.optim.Optimizer:
    return torch.optim.Adam(model.parameters(), lr=lr, betas=(0.9, 0.999), eps=1e-8)


def train_step(
    model: MultimodalPolicyNetwork,
    optimizer: torch.optim.Optimizer,
    W: torch.Tensor,
    images: torch.Tensor,
    theta_label: torch.Tensor,
    g_label: torch.Tensor,
    gen: torch.Generator | None = None,
) -> float:
    """One gradient step on a batch; dropout active.  Returns the loss."""
    optimizer.zero_grad(set_to_none=True)
    theta, g = model(W, images, dropout_on=True, gen=gen)
    loss = loss_fn(theta, g, theta_label, g_label)
    loss.backward()
    for name, p in model.named_parameters():
        if p.grad is not None and not torch.isfinite(p.grad).all():
            raise NonFiniteGradient(name)
    optimizer.step()
    return float(loss.detach())


# --- policy wrapper over numpy domain types ---

def home_start(arm: ArmModel | None = None) -> np.ndarray:
    """Normalized 7-D start configuration: home joints, gripper closed."""
    if arm is None:
        arm = default_arm()
    raw = np.append(arm.home, GRIP_CLOSED)
    return normalize_joints(raw, arm)


def predict_params(
    model: MultimodalPolicyNetwork,
    sentence_matrix: np.ndarray,
    image: np.ndarray,
    dropout_on: bool = False,
    gen: torch.Generator | None = None,
    arm: ArmModel | None = None,
) -> DmpParams:
    """Run the network on one (sentence matrix, HxWx3 image) pair."""
    dtype = next(model.parameters()).dtype
    W = torch.as_tensor(sentence_matrix, dtype=dtype).unsqueeze(0)
    img = torch.as_tensor(image, dtype=dtype).permute(2, 0, 1).unsqueeze(0)
    with torch.no_grad():
        theta, g = model(W, img, dropout_on=dropout_on, gen=gen)
    return DmpParams(
        weights=theta[0].numpy().astype(float),
        goal=g[0].numpy().astype(float),
        start=home_start(arm),
    )


@dataclass(frozen=True)
class GoalSamples:
    joint_goals: np.ndarray  # (N, 7) raw joint units
    task_xy: np.ndarray  # (N, 2) implied cube landing positions (m)
    dispersion: float  # mean pairwise task-space distance (m)
    samples: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "samples", self.task_xy.shape[0])


def mean_pairwise_distance(points: np.ndarray) -> float:
    n = points.shape[0]
    if n < 2:
        return 0.0
    diff = points[:, None, :] - points[None, :, :]
    d = np.sqrt((diff**2).sum(-1))
    return float(d[np.triu_indices(n, k=1)].mean())


def mc_dropout_goals(
    model: MultimodalPolicyNetwork,
    sentence_matrix: np.ndarray,
    image: np.ndarray,
    n_passes: int,
    seed: int,
    arm: ArmModel | None = None,
) -> GoalSamples:
    """Stochastic forward passes; the spread of implied landing points
    serves as a task-validity signal."""
    if n_passes < 2:
        raise ValueError("need at least 2 stochastic passes")
    if arm is None:
        arm = default_arm()
    gen = torch.Generator().manual_seed(seed)
    joint_goals = np.empty((n_passes, 7))
    task_xy = np.empty((n_passes, 2))
    for i in range(n_passes):
        params = predict_params(model, sentence_matrix, image, dropout_on=True, gen=gen, arm=arm)
        raw = denormalize_joints(params.goal, arm)
        joint_goals[i] = raw
        q = np.clip(raw[:6], arm.limits_lower, arm.limits_upper)
        task_xy[i] = forward_kinematics(arm, q, check_limits=False)[:2]
    return GoalSamples(
        joint_goals=joint_goals,
        task_xy=task_xy,
        dispersion=mean_pairwise_distance(task_xy),
    )
