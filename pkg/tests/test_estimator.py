import numpy as np
import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from nlbwm import BestWorstWeights, analyze


class TestFit:
    def test_fit_on_validated_system(self, ex1):
        est = BestWorstWeights().fit(ex1)
        report = analyze(ex1)
        assert est.weights_ == pytest.approx(np.asarray(report.best_weights))
        assert est.epsilon_star_ == report.epsilon_star
        assert est.consistency_ratio_ == pytest.approx(0.1037, abs=5e-4)
        assert est.n_features_in_ == 5

    def test_fit_on_dict(self, ex6):
        est = BestWorstWeights().fit(ex6.to_dict())
        assert est.weights_ == pytest.approx((0.3833, 0.3833, 0.1773, 0.0561), abs=5e-4)

    def test_fit_on_raw_vectors(self, ex5):
        est = BestWorstWeights(best=0, worst=3, scale="saaty")
        est.fit([ex5.best_to_other, ex5.other_to_worst])
        assert est.weights_ == pytest.approx((0.36, 0.24, 0.24, 0.16), abs=1e-9)

    def test_raw_vectors_need_roles(self):
        with pytest.raises(ValueError, match="best and worst"):
            BestWorstWeights().fit([[1, 2, 4], [4, 2, 1]])

    def test_wrong_shape(self):
        with pytest.raises(ValueError, match="2 x n"):
            BestWorstWeights(best=0, worst=2).fit([[1, 2, 4], [4, 2, 1], [1, 1, 1]])

    def test_interval_weights_attribute(self, ex1):
        est = BestWorstWeights().fit(ex1)
        assert est.interval_weights_.shape == (5, 2)
        assert np.all(est.interval_weights_[:, 0] <= est.interval_weights_[:, 1] + 1e-12)

    def test_legacy_attachment(self, ex1):
        est = BestWorstWeights(run_legacy=True).fit(ex1)
        assert est.report_.legacy is not None


class TestTransformPredict:
    def test_transform_scales_columns(self, consistent3):
        est = BestWorstWeights().fit(consistent3)
        scores = np.array([[1.0, 1.0, 1.0], [2.0, 0.0, 1.0]])
        out = est.transform(scores)
        assert out == pytest.approx(scores * est.weights_)

    def test_predict_is_weighted_sum(self, consistent3):
        est = BestWorstWeights().fit(consistent3)
        scores = np.array([[1.0, 1.0, 1.0], [0.0, 2.0, 0.5]])
        assert est.predict(scores) == pytest.approx(scores @ est.weights_)
        # a row dominating on the heaviest criterion wins
        best_row = np.argmax(est.predict(np.eye(3)))
        assert best_row == int(np.argmax(est.weights_))

    def test_unfitted_raises(self):
        with pytest.raises(NotFittedError):
            BestWorstWeights().transform([[1.0, 2.0]])

    def test_column_mismatch(self, consistent3):
        est = BestWorstWeights().fit(consistent3)
        with pytest.raises(ValueError, match="columns"):
            est.predict([[1.0, 2.0]])


class TestSklearnProtocol:
    def test_get_set_params_roundtrip(self):
        est = BestWorstWeights(best=1, worst=2, scale="salo", run_legacy=True)
        params = est.get_params()
        assert params == {"best": 1, "worst": 2, "scale": "salo", "run_legacy": True}
        cloned = clone(est)
        assert cloned.get_params() == params

    def test_set_params_chains(self, ex5):
        est = BestWorstWeights().set_params(best=0, worst=3)
        est.fit([ex5.best_to_other, ex5.other_to_worst])
        assert est.weights_[0] == pytest.approx(0.36, abs=1e-9)
