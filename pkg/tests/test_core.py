import math

import numpy as np
import pytest

import metrikos as mk
from metrikos.core import MAX_WITNESSES_PER_AXIOM

from _support import builtin_cases


def planted_non_metric() -> mk.MatrixMetric:
    # squared separation |i - j|**2 on three labels: symmetric but not a metric
    values = np.array([[abs(i - j) ** 2 for j in range(3)] for i in range(3)], dtype=float)
    return mk.MatrixMetric(mk.DistanceMatrix(values))


class TestDistanceDispatch:
    def test_worked_values(self):
        assert abs(mk.distance(mk.Euclidean(), (0, 0), (1, 1)) - math.sqrt(2)) <= 1e-12
        assert mk.distance(mk.Discrete(), (0.5, 0.5), (0.5, 0.5)) == 0.0
        assert mk.distance(mk.Taxicab(), (0, 0), (3, 4)) == 7.0

    def test_identity_and_symmetry(self, rng):
        for spec, sample in builtin_cases(rng, n=12):
            for x in sample[:4]:
                assert mk.distance(spec, x, x) == 0.0
            for x, y in zip(sample[:6], sample[6:12]):
                assert mk.distance(spec, x, y) == mk.distance(spec, y, x)

    def test_carrier_errors(self, rng):
        with pytest.raises(ValueError):
            mk.distance(mk.Euclidean(), (0, 0), (1, 2, 3))
        with pytest.raises(mk.CarrierError):
            mk.distance(mk.GreatCircle(), (0.3, 0, 0), (0, 0, 1))
        g = mk.grid_graph(2, 2)
        with pytest.raises(mk.CarrierError):
            mk.distance(mk.GraphPath(g), 0, 99)
        with pytest.raises(mk.CarrierError):
            mk.distance(planted_non_metric(), 0, 5)

    def test_unreachable_pair_is_an_error(self):
        g = mk.WeightedGraph(4, [(0, 1, 1.0), (2, 3, 1.0)])
        with pytest.raises(mk.UnreachableError, match="not a metric space"):
            mk.distance(mk.GraphPath(g), 0, 3)


class TestSymmetryIsExact:
    @pytest.mark.parametrize("case_index", range(10))
    def test_exact_symmetry_bulk(self, rng, case_index):
        spec, sample = builtin_cases(rng, n=24)[case_index]
        idx = rng.integers(0, len(sample), size=(10_000, 2))
        for i, j in idx:
            a, b = sample[int(i)], sample[int(j)]
            assert mk.distance(spec, a, b) == mk.distance(spec, b, a)


class TestVerifyAxioms:
    def test_three_point_euclidean_sample(self):
        report = mk.verify_axioms(mk.Euclidean(), [(0, 0), (1, 0), (1, 1)])
        assert report.all_ok
        assert report.witnesses == []

    def test_planted_non_metric_fails_triangle(self):
        report = mk.verify_axioms(planted_non_metric(), [0, 1, 2])
        assert report.symmetry_ok and report.nonnegativity_ok and report.identity_ok
        assert not report.triangle_ok
        w = report.for_axiom("triangle")[0]
        assert w.indices == (0, 1, 2)
        assert w.lhs == 4.0
        assert w.rhs == 2.0

    def test_discrete_three_points(self):
        report = mk.verify_axioms(mk.Discrete(), [(0, 0), (1, 0), (2, 2)])
        assert report.all_ok

    def test_all_builtin_variants_certify(self, rng):
        for spec, sample in builtin_cases(rng, n=24):
            report = mk.verify_axioms(spec, sample)
            assert report.all_ok, (spec.name, report.witnesses[:3])

    def test_round_trip_matrix_certifies(self, rng):
        for spec, sample in builtin_cases(rng, n=12):
            tabulated = mk.MatrixMetric(mk.matrix_from_points(spec, sample))
            report = mk.verify_axioms(tabulated, list(range(len(sample))))
            assert report.all_ok, spec.name

    def test_empty_sample_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            mk.verify_axioms(mk.Euclidean(), [])

    def test_asymmetric_and_negative_witnesses(self):
        values = np.array([[0.0, 1.0, -2.0], [3.0, 0.0, 1.0], [-2.0, 1.0, 0.0]])
        spec = mk.MatrixMetric(mk.DistanceMatrix(values))
        report = mk.verify_axioms(spec, [0, 1, 2])
        assert not report.symmetry_ok
        assert not report.nonnegativity_ok
        sym = report.for_axiom("symmetry")[0]
        assert sym.indices == (0, 1)
        assert (sym.lhs, sym.rhs) == (1.0, 3.0)
        neg = report.for_axiom("nonnegativity")[0]
        assert neg.lhs < 0

    def test_identity_violations(self):
        # zero distance between distinct labels, nonzero on the diagonal
        values = np.array([[0.0, 0.0], [0.0, 0.5]])
        report = mk.verify_axioms(mk.MatrixMetric(mk.DistanceMatrix(values)), [0, 1])
        assert not report.identity_ok
        axioms = {w.indices for w in report.for_axiom("identity")}
        assert (0, 1) in axioms and (1, 1) in axioms

    def test_duplicate_points_are_the_same_point(self):
        report = mk.verify_axioms(mk.Euclidean(), [(1, 1), (1, 1), (2, 0)])
        assert report.all_ok

    def test_witnesses_reproduce(self, rng):
        values = rng.uniform(0.0, 1.0, size=(6, 6))
        values[np.diag_indices(6)] = 0.0
        spec = mk.MatrixMetric(mk.DistanceMatrix(values))
        sample = list(range(6))
        report = mk.verify_axioms(spec, sample)
        for w in report.witnesses:
            if w.axiom == "triangle":
                x, y, z = w.indices
                assert w.lhs == mk.distance(spec, x, z)
                assert w.rhs == pytest.approx(
                    mk.distance(spec, x, y) + mk.distance(spec, y, z), rel=1e-12
                )
            elif w.axiom == "symmetry":
                i, j = w.indices
                assert (w.lhs, w.rhs) == (mk.distance(spec, i, j), mk.distance(spec, j, i))
            elif w.axiom in ("identity", "nonnegativity"):
                i, j = w.indices
                assert w.lhs == mk.distance(spec, i, j)

    def test_witness_cap(self):
        n = 12
        values = np.full((n, n), -1.0)
        values[np.diag_indices(n)] = 0.0
        report = mk.verify_axioms(mk.MatrixMetric(mk.DistanceMatrix(values)), list(range(n)))
        per_axiom = {}
        for w in report.witnesses:
            per_axiom[w.axiom] = per_axiom.get(w.axiom, 0) + 1
        assert all(c <= MAX_WITNESSES_PER_AXIOM for c in per_axiom.values())
        assert not report.nonnegativity_ok


class TestRestrict:
    def test_agrees_with_base(self):
        sub = mk.restrict(mk.Euclidean(), [(0, 0), (1, 0)])
        assert mk.distance(sub, (0, 0), (1, 0)) == 1.0

    def test_restriction_inherits_axioms(self):
        sub = mk.restrict(mk.Euclidean(), [(0, 0), (1, 0)])
        assert mk.verify_axioms(sub, [(0, 0), (1, 0)]).all_ok

    def test_antipodal_restriction(self):
        sub = mk.restrict(mk.GreatCircle(), [(0, 0, 1), (0, 0, -1)])
        assert mk.distance(sub, (0, 0, 1), (0, 0, -1)) == pytest.approx(math.pi, abs=1e-12)

    def test_membership_enforced(self):
        sub = mk.restrict(mk.Euclidean(), [(0, 0), (1, 0)])
        with pytest.raises(mk.CarrierError):
            mk.distance(sub, (0, 0), (0.5, 0))

    def test_empty_restriction_rejected(self):
        with pytest.raises(ValueError, match="nonempty"):
            mk.restrict(mk.Euclidean(), [])


class TestMatrixFromPoints:
    def test_pair(self):
        m = mk.matrix_from_points(mk.Euclidean(), [(0, 0), (1, 0)])
        assert np.array_equal(m.values, [[0, 1], [1, 0]])

    def test_unit_diagonal_entries(self):
        m = mk.matrix_from_points(mk.Chebyshev(), [(0, 0), (1, 1)])
        assert m.values[0, 1] == 1.0
        m = mk.matrix_from_points(mk.Taxicab(), [(0, 0), (1, 1)])
        assert m.values[0, 1] == 2.0

    def test_symmetric_zero_diagonal(self, rng):
        pts = rng.uniform(-3, 3, size=(10, 2))
        m = mk.matrix_from_points(mk.Euclidean(), list(pts))
        assert np.array_equal(m.values, m.values.T)
        assert np.all(np.diag(m.values) == 0.0)


class TestDistanceMatrixType:
    def test_non_square_rejected(self):
        with pytest.raises(ValueError, match="square"):
            mk.DistanceMatrix(np.zeros((2, 3)))

    def test_non_finite_rejected(self):
        with pytest.raises(ValueError, match="finite"):
            mk.DistanceMatrix(np.array([[0.0, np.inf], [1.0, 0.0]]))

    def test_labels_must_match(self):
        with pytest.raises(ValueError, match="label"):
            mk.DistanceMatrix(np.zeros((2, 2)), labels=("a",))

    def test_asymmetry_allowed_at_construction(self):
        m = mk.DistanceMatrix(np.array([[0.0, 1.0], [2.0, 0.0]]))
        assert m.n == 2


class TestToleranceConfig:
    def test_defaults(self):
        tol = mk.ToleranceConfig()
        assert tol.abs_tol == 1e-9
        assert tol.rel_tol == 1e-12

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            mk.ToleranceConfig(abs_tol=-1.0)
