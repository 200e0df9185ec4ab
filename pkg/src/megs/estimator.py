"""Scikit-learn compatible feature extraction from pure-state batches."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.exceptions import NotFittedError

from ._validation import check_state_batch
from .catalog import enumerate_megs
from .operators import enumerate_class_operators


class ConcurrenceFeatures(TransformerMixin, BaseEstimator):
    """Map pure-state vectors to their per-class concurrence values.

    Rows of ``X`` are complex state vectors in row-major amplitude order
    (last subsystem index fastest); the transform output has one column per
    label of the generating set, ordered EPR pairs first, then GHZ subsets
    by size.

    Parameters
    ----------
    dims : sequence of int, optional
        Subsystem dimensions.  When omitted, ``fit`` infers an all-qubit
        system from the row width (which must then be a power of two).
    scale : float
        Multiplies every class value (default 1, the convention under which
        a two-qubit Bell state scores 1 on its EPR column).
    normalize : bool
        Renormalize input rows instead of rejecting unnormalized ones.

    Examples
    --------
    >>> import numpy as np
    >>> from megs import ghz_state, w_state
    >>> X = np.stack([ghz_state(3).amps, w_state(3).amps])
    >>> feats = ConcurrenceFeatures().fit(X)
    >>> feats.transform(X).shape
    (2, 4)
    """

    def __init__(self, dims=None, scale: float = 1.0, normalize: bool = False):
        self.dims = dims
        self.scale = scale
        self.normalize = normalize

    def fit(self, X, y=None):
        """Validate ``X``, fix the dimension vector and build the operators."""
        X, dims = check_state_batch(X, self.dims, normalize=self.normalize)
        catalog = enumerate_megs(len(dims))
        self.dims_ = dims
        self.labels_ = catalog.labels
        self.operators_ = [enumerate_class_operators(dims, lb) for lb in catalog.labels]
        self.n_features_in_ = X.shape[1]
        return self

    def transform(self, X):
        """Per-class concurrence values, shape ``(n_samples, n_labels)``."""
        self._check_fitted()
        X, _ = check_state_batch(X, self.dims_, normalize=self.normalize)
        out = np.zeros((X.shape[0], len(self.labels_)))
        for col, ops in enumerate(self.operators_):
            acc = np.zeros(X.shape[0])
            for op in ops:
                # row-wise psi^T O psi, vectorized over the batch
                values = np.einsum("nd,de,ne->n", X, op.matrix, X)
                acc += np.abs(values) ** 2
            out[:, col] = self.scale * np.sqrt(acc)
        return out

    def get_feature_names_out(self, input_features=None):
        self._check_fitted()
        return np.asarray([str(lb) for lb in self.labels_], dtype=object)

    def _check_fitted(self):
        if not hasattr(self, "labels_"):
            raise NotFittedError(
                "This ConcurrenceFeatures instance is not fitted yet; call fit first."
            )
