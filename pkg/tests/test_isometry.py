import math

import numpy as np
import pytest

import metrikos as mk
from metrikos import sampling

PLANE_METRICS = [mk.Euclidean(), mk.Taxicab(), mk.Chebyshev()]

DISTANCE_PRESERVING_FOR_ALL_THREE = [
    mk.translation(2.5, -1.25),
    mk.reflect_origin(),
    mk.reflect_x1(),
    mk.reflect_x2(),
    mk.swap_axes(),
    mk.reflect_about_point(0.75, 2.0),
]


class TestNamedMaps:
    def test_reflect_origin(self):
        assert np.array_equal(mk.apply_map(mk.reflect_origin(), (3, -2)), (-3, 2))

    def test_quarter_turn(self):
        img = mk.apply_map(mk.rotation(math.pi / 2), (1, 0))
        assert np.allclose(img, (0, 1), atol=1e-15)

    def test_reflect_about_point(self):
        assert np.array_equal(mk.apply_map(mk.reflect_about_point(1, 1), (0, 0)), (2, 2))

    def test_translation(self):
        assert np.array_equal(mk.apply_map(mk.translation(5, 0), (0, 0)), (5, 0))

    def test_identity(self, rng):
        p = rng.uniform(-3, 3, size=2)
        assert np.array_equal(mk.apply_map(mk.identity_map(), p), p)

    def test_named_map_dispatch(self):
        m = mk.named_map("rotation", math.pi)
        assert np.allclose(m.linear, [[-1, 0], [0, -1]], atol=1e-15)
        assert np.array_equal(mk.named_map("translation", 1, 2).offset, (1, 2))
        with pytest.raises(ValueError, match="unknown map tag"):
            mk.named_map("shear")

    def test_swap_axes(self):
        assert np.array_equal(mk.apply_map(mk.swap_axes(), (3, 7)), (7, 3))


class TestSphereMaps:
    def test_orthogonality_enforced(self):
        with pytest.raises(ValueError, match="orthogonal"):
            mk.SphereMap(np.diag([1.0, 1.0, 2.0]))

    def test_rotation_about_z(self):
        m = mk.rotation_about_axis((0, 0, 1), math.pi / 2)
        assert np.allclose(mk.apply_map(m, (1, 0, 0)), (0, 1, 0), atol=1e-15)

    def test_reflection_admitted(self):
        m = mk.SphereMap(np.diag([1.0, 1.0, -1.0]))
        assert np.linalg.det(m.linear) == pytest.approx(-1.0)

    def test_image_stays_on_sphere(self, rng):
        m = mk.rotation_about_axis(rng.normal(size=3), float(rng.uniform(0, 7)))
        for p in sampling.random_sphere_points(rng, 50):
            assert np.linalg.norm(mk.apply_map(m, p)) == pytest.approx(1.0, abs=1e-12)

    def test_zero_axis_rejected(self):
        with pytest.raises(ValueError, match="nonzero"):
            mk.rotation_about_axis((0, 0, 0), 1.0)


class TestCompose:
    def test_translation_after_flip_is_point_reflection(self, rng):
        a1, a2 = rng.uniform(-3, 3, size=2)
        composed = mk.compose(mk.translation(2 * a1, 2 * a2), mk.reflect_origin())
        direct = mk.reflect_about_point(a1, a2)
        assert np.array_equal(composed.linear, direct.linear)
        assert np.array_equal(composed.offset, direct.offset)

    def test_identity_is_neutral(self):
        f = mk.rotation(0.3)
        g = mk.compose(mk.identity_map(), f)
        assert np.array_equal(g.linear, f.linear)
        assert np.array_equal(g.offset, f.offset)

    def test_rotation_inverse(self):
        m = mk.compose(mk.rotation(0.7), mk.rotation(-0.7))
        assert np.allclose(m.linear, np.eye(2), atol=1e-12)
        assert np.allclose(m.offset, 0.0, atol=1e-12)

    def test_matches_pointwise_application(self, rng):
        for _ in range(50):
            f = mk.PlaneMap(rng.normal(size=(2, 2)), rng.normal(size=2))
            g = mk.PlaneMap(rng.normal(size=(2, 2)), rng.normal(size=2))
            p = rng.normal(size=2)
            assert np.allclose(
                mk.apply_map(mk.compose(f, g), p),
                mk.apply_map(f, mk.apply_map(g, p)),
                atol=1e-12,
            )

    def test_sphere_compose(self):
        a = mk.rotation_about_axis((0, 0, 1), 0.4)
        b = mk.rotation_about_axis((0, 0, 1), -0.4)
        assert np.allclose(mk.compose(a, b).linear, np.eye(3), atol=1e-12)

    def test_mixed_kinds_rejected(self):
        with pytest.raises(TypeError):
            mk.compose(mk.identity_map(), mk.SphereMap(np.eye(3)))


class TestIsIsometry:
    def test_rotation_preserves_euclidean(self, rng):
        sample = list(sampling.random_points(rng, 32))
        ok, witness = mk.is_isometry(mk.rotation(math.pi / 4), mk.Euclidean(), sample)
        assert ok and witness is None

    def test_rotation_breaks_taxicab_with_witness(self):
        sample = [(0.0, 0.0), (1.0, 0.0)]
        ok, witness = mk.is_isometry(mk.rotation(math.pi / 4), mk.Taxicab(), sample)
        assert not ok
        assert witness.before == 1.0
        assert witness.after == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_rotation_breaks_chebyshev_with_witness(self):
        sample = [(0.0, 0.0), (1.0, 0.0)]
        ok, witness = mk.is_isometry(mk.rotation(math.pi / 4), mk.Chebyshev(), sample)
        assert not ok
        assert witness.before == 1.0
        assert witness.after == pytest.approx(math.sqrt(2) / 2, abs=1e-12)

    @pytest.mark.parametrize("metric", PLANE_METRICS, ids=lambda m: m.name)
    def test_shared_symmetries(self, rng, metric):
        sample = list(sampling.random_points(rng, 24, low=-4, high=4))
        for m in DISTANCE_PRESERVING_FOR_ALL_THREE:
            ok, witness = mk.is_isometry(m, metric, sample)
            assert ok, (metric.name, witness)

    def test_many_random_rotations_preserve_euclidean(self, rng):
        sample = list(sampling.random_points(rng, 12))
        for theta in rng.uniform(-2 * math.pi, 2 * math.pi, size=100):
            ok, _ = mk.is_isometry(mk.rotation(float(theta)), mk.Euclidean(), sample)
            assert ok

    def test_orthogonal_maps_preserve_both_sphere_metrics(self, rng):
        from scipy.stats import ortho_group

        sample = list(sampling.random_sphere_points(rng, 10))
        seeds = np.random.RandomState(7)
        for _ in range(20):
            m = mk.SphereMap(ortho_group.rvs(3, random_state=seeds))
            ok, witness = mk.is_isometry(m, mk.GreatCircle(), sample)
            assert ok, witness
            # the chord metric is the ambient Euclidean distance
            ok, witness = mk.is_isometry(m, mk.Euclidean(), sample)
            assert ok, witness

    def test_chord_preserved_too(self, rng):
        sample = list(sampling.random_sphere_points(rng, 10))
        m = mk.rotation_about_axis(rng.normal(size=3), 1.1)
        before = [mk.chord_distance(a, b) for a in sample for b in sample]
        after = [
            mk.chord_distance(mk.apply_map(m, a), mk.apply_map(m, b))
            for a in sample
            for b in sample
        ]
        assert np.allclose(before, after, atol=1e-12)

    def test_scaling_is_not_an_isometry(self, rng):
        doubling = mk.PlaneMap(2.0 * np.eye(2), np.zeros(2))
        sample = list(sampling.random_points(rng, 8))
        ok, witness = mk.is_isometry(doubling, mk.Euclidean(), sample)
        assert not ok
        assert witness.after == pytest.approx(2 * witness.before, rel=1e-12)

    def test_image_leaving_carrier_is_an_error(self, rng):
        sub = mk.restrict(mk.Euclidean(), [(0.0, 0.0), (1.0, 0.0)])
        with pytest.raises(mk.CarrierError):
            mk.is_isometry(mk.translation(10.0, 0.0), sub, [(0.0, 0.0), (1.0, 0.0)])

    def test_dimension_mismatch_is_an_error(self, rng):
        sample = list(sampling.random_sphere_points(rng, 4))
        with pytest.raises(ValueError):
            mk.is_isometry(mk.rotation(0.5), mk.GreatCircle(), sample)


class TestTransitivity:
    def test_constructed_map_moves_p_to_q(self, rng):
        for _ in range(100):
            p, q = sampling.random_sphere_points(rng, 2)
            m = mk.rotation_sending(p, q)
            assert np.allclose(mk.apply_map(m, p), q, atol=1e-12)

    def test_trivial_and_antipodal_cases(self):
        p = mk.sphere_point((0, 0, 1))
        assert np.allclose(mk.apply_map(mk.rotation_sending(p, p), p), p, atol=1e-15)
        m = mk.rotation_sending(p, -p)
        assert np.allclose(mk.apply_map(m, p), -p, atol=1e-12)

    def test_constructed_map_certifies(self, rng):
        sample = list(sampling.random_sphere_points(rng, 12))
        p, q = sampling.random_sphere_points(rng, 2)
        ok, witness = mk.is_isometry(mk.rotation_sending(p, q), mk.GreatCircle(), sample)
        assert ok, witness
