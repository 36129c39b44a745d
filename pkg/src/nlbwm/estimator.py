"""Scikit-learn style facade over the analysis pipeline.

``BestWorstWeights`` fits on one comparison system and exposes the derived
weights through the usual fitted-attribute convention, so the method can sit
inside sklearn pipelines: ``transform`` rescales alternative-by-criterion
score matrices by the fitted weights and ``predict`` returns the weighted
sum score per alternative.
"""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.exceptions import NotFittedError
from sklearn.utils.validation import check_array

from .analysis import AnalysisReport, analyze
from .pcs import PairwiseComparisonSystem, from_dict, validate


class BestWorstWeights(BaseEstimator):
    """Derive criteria weights from best/worst pairwise comparisons.

    Parameters
    ----------
    best, worst : int | list[int] | None
        0-based role indices, used when fitting on a raw pair of vectors.
        Ignored when fitting on an already validated system or a dict.
    scale : str | None
        Scale label recorded on systems built from raw vectors.
    run_legacy : bool
        Attach the historical single-scale results to the report.

    Attributes
    ----------
    weights_ : ndarray of shape (n,)
        The unique best optimal weight set.
    interval_weights_ : ndarray of shape (n, 2)
        Per-criterion [lower, upper] optimal weight bounds.
    epsilon_star_ : float
    consistency_ratio_ : float
    report_ : AnalysisReport
    """

    def __init__(self, best=None, worst=None, scale=None, run_legacy=False):
        self.best = best
        self.worst = worst
        self.scale = scale
        self.run_legacy = run_legacy

    def _as_pcs(self, X) -> PairwiseComparisonSystem:
        if isinstance(X, PairwiseComparisonSystem):
            return X
        if isinstance(X, dict):
            return from_dict(X)
        arr = check_array(X, ensure_2d=True, dtype=float)
        if arr.shape[0] != 2:
            raise ValueError(
                f"expected a 2 x n array (best-to-other and other-to-worst rows), got {arr.shape}"
            )
        if self.best is None or self.worst is None:
            raise ValueError("best and worst indices are required when fitting on raw vectors")
        return validate(arr[0], arr[1], self.best, self.worst, scale=self.scale)

    def fit(self, X, y=None):
        """Analyze a comparison system given as a validated object, a dict
        (JSON schema) or a 2 x n array of the two comparison vectors."""
        pcs = self._as_pcs(X)
        report: AnalysisReport = analyze(pcs, legacy=self.run_legacy)
        self.pcs_ = pcs
        self.report_ = report
        self.weights_ = np.asarray(report.best_weights)
        self.interval_weights_ = np.asarray(report.intervals)
        self.epsilon_star_ = report.epsilon_star
        self.consistency_index_ = report.ci
        self.consistency_ratio_ = report.cr
        self.n_features_in_ = pcs.n
        self.feature_names_in_ = np.asarray(pcs.names, dtype=object)
        return self

    def _check_fitted_scores(self, X) -> np.ndarray:
        if not hasattr(self, "weights_"):
            raise NotFittedError("fit must be called before transform/predict")
        scores = check_array(X, ensure_2d=True, dtype=float)
        if scores.shape[1] != self.n_features_in_:
            raise ValueError(
                f"score matrix has {scores.shape[1]} columns, expected {self.n_features_in_}"
            )
        return scores

    def transform(self, X) -> np.ndarray:
        """Scale an (alternatives x criteria) score matrix by the weights."""
        return self._check_fitted_scores(X) * self.weights_

    def predict(self, X) -> np.ndarray:
        """Weighted-sum score of each alternative row."""
        return self._check_fitted_scores(X) @ self.weights_
