import itertools

import numpy as np
import pytest

from lcms import dmp
from lcms.simulator import (
    NoConvergence,
    PlanningFailed,
    SamplingExhausted,
    Scene,
    SceneObject,
    check_success,
    execute,
    forward_kinematics,
    ik_solve,
    plan_demonstration,
    render,
    sample_scene,
    scene_from_json,
    scene_to_json,
)
from lcms.simulator.arm import (
    HOME_EE_POSITION,
    denormalize_joints,
    normalize_joints,
    position_jacobian,
)
from lcms.simulator.render import BACKGROUND, PALETTE, image_to_png, png_to_image, table_to_pixel
from lcms.simulator.scene import (
    ATTRIBUTES,
    BOWL_HALF_EDGE,
    BOWL_RADIUS,
    MIN_BOWL_SEPARATION,
    distinguishing_subsets,
)
from lcms.simulator.world import gripper_profile, min_jerk_profile


def make_scene(bowl_specs, target_index=0, cube=(0.0, 0.08)):
    bowls = tuple(
        SceneObject(kind="bowl", color=c, shape=sh, size=sz, x=x, y=y)
        for (c, sh, sz, x, y) in bowl_specs
    )
    return Scene(bowls=bowls, cube_xy=cube, target_index=target_index, seed=0)


THREE_BOWLS = [
    ("red", "round", "large", -0.25, 0.30),
    ("green", "round", "large", 0.0, 0.45),
    ("blue", "square", "small", 0.25, 0.30),
]


class TestKinematics:
    def test_home_position_matches_published_constant(self, arm):
        assert np.allclose(forward_kinematics(arm, arm.home), HOME_EE_POSITION, atol=1e-8)

    def test_base_rotation_preserves_height(self, arm):
        q = arm.home.copy()
        z0 = forward_kinematics(arm, q)[2]
        q2 = q.copy()
        q2[0] = q[0] + np.pi / 2  # stay within limits
        assert np.isclose(forward_kinematics(arm, q2)[2], z0)

    def test_out_of_limit_rejected(self, arm):
        q = arm.home.copy()
        q[1] = arm.limits_upper[1] + 0.5
        with pytest.raises(ValueError):
            forward_kinematics(arm, q)

    def test_jacobian_matches_finite_differences(self, arm):
        rng = np.random.default_rng(0)
        for _ in range(10):
            q = rng.uniform(arm.limits_lower * 0.8, arm.limits_upper * 0.8)
            J = position_jacobian(arm, q)
            h = 1e-6
            for j in range(6):
                dq = np.zeros(6)
                dq[j] = h
                fd = (
                    forward_kinematics(arm, q + dq, check_limits=False)
                    - forward_kinematics(arm, q - dq, check_limits=False)
                ) / (2 * h)
                assert np.allclose(J[:, j], fd, atol=1e-6)


class TestIk:
    def test_already_converged_returns_seed(self, arm):
        target = forward_kinematics(arm, arm.home)
        q = ik_solve(arm, target, arm.home)
        assert np.array_equal(q, arm.home)

    def test_fk_ik_roundtrip(self, arm):
        rng = np.random.default_rng(1)
        bad = 0
        for _ in range(1000):
            target = np.array(
                [rng.uniform(-0.42, 0.42), rng.uniform(0.05, 0.55), rng.uniform(0.1, 0.4)]
            )
            try:
                q = ik_solve(arm, target, arm.home)
            except NoConvergence:
                bad += 1
                continue
            assert np.linalg.norm(forward_kinematics(arm, q, check_limits=False) - target) < 1e-3
        assert bad <= 10  # >= 99% convergence

    def test_unreachable_residual_matches_workspace_distance(self, arm):
        target = np.array([0.0, 3.0, 0.35])
        shoulder = arm.base + np.array([0.0, 0.0, 0.35])
        reach = 0.55 + 0.55 + 0.20 + 0.10
        expected = np.linalg.norm(target - shoulder) - reach
        with pytest.raises(NoConvergence) as exc_info:
            ik_solve(arm, target, arm.home)
        assert abs(exc_info.value.residual - expected) < 0.05

    def test_limits_respected(self, arm):
        q = ik_solve(arm, np.array([0.35, 0.45, 0.15]), arm.home)
        assert np.all(q >= arm.limits_lower) and np.all(q <= arm.limits_upper)


class TestNormalization:
    def test_roundtrip(self, arm):
        rng = np.random.default_rng(2)
        raw = np.append(rng.uniform(arm.limits_lower, arm.limits_upper), 0.7)
        n = normalize_joints(raw, arm)
        assert np.all(np.abs(n) <= 1.0)
        assert np.allclose(denormalize_joints(n, arm), raw)


class TestSceneSampling:
    def test_determinism(self):
        a = sample_scene(123, 4, ("color",))
        b = sample_scene(123, 4, ("color",))
        assert scene_to_json(a) == scene_to_json(b)

    @pytest.mark.parametrize("required", [("color",), ("shape",), ("size",)])
    def test_required_singleton_is_unique_minimal_set(self, required):
        # exhaustive attribute audit over many sampled scenes
        for i in range(100):
            scene = sample_scene(i, 4, required)
            assert distinguishing_subsets(scene) == [frozenset(required)]
            target = scene.target
            # requested attribute value appears once among bowls
            assert (
                sum(getattr(b, required[0]) == getattr(target, required[0]) for b in scene.bowls)
                == 1
            )
            # some other attribute is shared with a distractor
            others = [a for a in ATTRIBUTES if a not in required]
            assert any(
                getattr(b, a) == getattr(target, a)
                for a in others
                for k, b in enumerate(scene.bowls)
                if k != scene.target_index
            )

    def test_pair_requirement_excludes_singletons(self):
        for i in range(50):
            scene = sample_scene(i, 4, ("shape", "size"))
            minimal = distinguishing_subsets(scene)
            assert minimal == [frozenset({"shape", "size"})]
            assert all(len(s) > 1 for s in minimal)

    def test_no_duplicate_attribute_triples(self):
        for i in range(200):
            scene = sample_scene(i, 5, ("color",))
            triples = [b.attrs for b in scene.bowls]
            assert len(set(triples)) == len(triples)

    def test_bowl_separation(self):
        for i in range(100):
            scene = sample_scene(i, 5, ("color",))
            for a, b in itertools.combinations(scene.bowls, 2):
                assert np.hypot(a.x - b.x, a.y - b.y) >= MIN_BOWL_SEPARATION

    def test_triple_requirement_needs_four_bowls(self):
        with pytest.raises(SamplingExhausted):
            sample_scene(0, 3, ("color", "shape", "size"))
        scene = sample_scene(0, 4, ("color", "shape", "size"))
        assert distinguishing_subsets(scene) == [frozenset(ATTRIBUTES)]

    def test_json_roundtrip(self):
        scene = sample_scene(7, 4, ("color",))
        back = scene_from_json(scene_to_json(scene))
        assert back == scene


class TestDistinguishingSubsets:
    def test_color_unique(self):
        scene = make_scene(THREE_BOWLS)
        assert frozenset({"color"}) in distinguishing_subsets(scene)

    def test_identical_twin_has_no_distinguisher(self):
        specs = [
            ("red", "round", "large", -0.25, 0.30),
            ("red", "round", "large", 0.25, 0.30),
            ("blue", "square", "small", 0.0, 0.50),
        ]
        assert distinguishing_subsets(make_scene(specs)) == []


class TestRender:
    def test_background_outside_footprints(self):
        img = render(make_scene(THREE_BOWLS), 64, 64)
        # top-left corner is far from every object footprint
        assert tuple(img[0, 0]) == BACKGROUND

    def test_center_pixel_carries_bowl_color(self):
        scene = make_scene(
            [
                ("red", "round", "large", 0.0, 0.30),
                ("green", "round", "large", -0.30, 0.45),
                ("blue", "square", "small", 0.30, 0.45),
            ]
        )
        img = render(scene, 64, 64)
        row, col = table_to_pixel(0.0, 0.30, scene, 64, 64)
        assert tuple(img[int(round(row)), int(round(col))]) == PALETTE["red"]

    def test_color_change_is_local(self):
        base = THREE_BOWLS
        other = [("pink",) + b[1:] if i == 2 else b for i, b in enumerate(base)]
        img_a = render(make_scene(base))
        img_b = render(make_scene(other))
        diff = np.any(img_a != img_b, axis=2)
        changed_a = np.all(img_a == PALETTE["blue"], axis=2)
        changed_b = np.all(img_b == PALETTE["pink"], axis=2)
        assert np.array_equal(diff, changed_a | changed_b)
        assert diff.sum() > 0

    def test_footprint_matches_analytic_geometry(self):
        scene = make_scene(THREE_BOWLS)
        h = w = 128
        img = render(scene, h, w)
        bowl = scene.bowls[0]
        mask = np.all(img == PALETTE[bowl.color], axis=2)
        rows, cols = np.nonzero(mask)
        xs = (cols + 0.5) / w * scene.table_w - scene.table_w / 2
        ys = scene.table_h - (rows + 0.5) / h * scene.table_h
        r = BOWL_RADIUS[bowl.size]
        d = np.hypot(xs - bowl.x, ys - bowl.y)
        px = scene.table_w / w
        assert np.all(d <= r + px * 1.5)

    def test_png_roundtrip(self):
        img = render(make_scene(THREE_BOWLS))
        back = png_to_image(image_to_png(img))
        assert back.shape == img.shape
        assert np.abs(back - img).max() <= 1.0 / 255.0 + 1e-9


class TestPlanningAndExecution:
    def test_min_jerk_boundary_conditions(self):
        s = np.linspace(0, 1, 1001)
        v = np.gradient(min_jerk_profile(s), s)
        assert abs(v[0]) < 1e-3 and abs(v[-1]) < 1e-3

    def test_gripper_profile_timing(self):
        g = gripper_profile(101)
        assert np.all(g[: int(0.90 * 100)] == 1.0)
        assert np.all(g[int(0.95 * 100) :] == 0.0)

    def test_plan_reaches_target(self, arm):
        scene = sample_scene(11, 4, ("color",))
        demo = plan_demonstration(scene, arm)
        assert demo.joints.n_frames == 101
        final_xy = demo.ee_path[-1, :2]
        assert np.hypot(final_xy[0] - scene.target.x, final_xy[1] - scene.target.y) < 0.01

    def test_ik_continuity(self, arm):
        scene = sample_scene(13, 5, ("shape",))
        demo = plan_demonstration(scene, arm)
        steps = np.abs(np.diff(demo.joints.frames[:, :6], axis=0))
        assert steps.max() < 0.15

    def test_execute_never_released(self, arm):
        scene = sample_scene(17, 4, ("color",))
        demo = plan_demonstration(scene, arm)
        frames = demo.joints.frames.copy()
        frames[:, 6] = 1.0
        closed = dmp.Trajectory(frames=frames, dt=demo.joints.dt)
        xy = execute(closed, scene, arm)
        assert np.allclose(xy, demo.ee_path[-1, :2], atol=1e-9)

    def test_execute_release_above_target(self, arm):
        scene = sample_scene(19, 4, ("color",))
        demo = plan_demonstration(scene, arm)
        xy = execute(demo.joints, scene, arm)
        assert check_success(scene, xy)

    def test_planned_demos_succeed(self, arm):
        ok = 0
        for i in range(50):
            scene = sample_scene(3000 + i, 4, ("color",))
            demo = plan_demonstration(scene, arm)
            ok += check_success(scene, execute(demo.joints, scene, arm))
        assert ok >= 50 * 0.99


class TestCheckSuccess:
    def test_center_hit(self):
        scene = make_scene(THREE_BOWLS)
        assert check_success(scene, (scene.target.x, scene.target.y))

    @pytest.mark.parametrize("size,edge", [("small", 0.125), ("large", 0.175)])
    def test_bbox_edge(self, size, edge):
        specs = [
            ("red", "round", size, -0.25, 0.30),
            ("green", "round", "large", 0.1, 0.45),
            ("blue", "square", "small", 0.3, 0.25),
        ]
        scene = make_scene(specs)
        x, y = scene.target.x, scene.target.y
        assert check_success(scene, (x + edge / 2, y))
        assert not check_success(scene, (x + edge / 2 + 0.001, y))

    def test_distractor_bowl_is_failure(self):
        scene = make_scene(THREE_BOWLS, target_index=0)
        d = scene.bowls[1]
        assert not check_success(scene, (d.x, d.y))
