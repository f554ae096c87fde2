"""One-vs-rest linear SVM trained with the Pegasos subgradient schedule."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset, rng_for


@dataclass
class LinearSVMModel:
    kind = "linear_svm"
    weights: np.ndarray  # (k, d); no intercept, margins are w . x
    class_names: tuple[str, ...]
    n_features: int
    seed: int
    hyperparameters: dict = field(default_factory=dict)

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        return np.asarray(X, dtype=float) @ self.weights.T

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        # Softmax over margins; used only for ranking (ROC), not calibration.
        margins = self.decision_function(X)
        margins -= margins.max(axis=1, keepdims=True)
        p = np.exp(margins)
        return p / p.sum(axis=1, keepdims=True)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.decision_function(X), axis=1)


def _train_head(X: np.ndarray, y_signed: np.ndarray, lam: float, epochs: int,
                rng: np.random.Generator) -> np.ndarray:
    n, d = X.shape
    w = np.zeros(d)
    t = 1
    for _ in range(epochs):
        for idx in rng.permutation(n):
            eta = 1.0 / (lam * t)
            w *= 1.0 - 1.0 / t
            if y_signed[idx] * (w @ X[idx]) < 1.0:
                w += eta * y_signed[idx] * X[idx]
            t += 1
    return w


def train_linear_svm(
    data: Dataset, lam: float = 1e-4, epochs: int = 50, seed: int = 0
) -> LinearSVMModel:
    """L2-regularized hinge loss, step size 1/(lam*t), one head per class.

    Each head's sample order comes from its own (seed, head) generator, so the
    result is independent of head training order.
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    if epochs < 1:
        raise ValueError("epochs must be >= 1")
    if len(data) == 0:
        raise ValueError("cannot train on an empty dataset")
    k = len(data.class_names)
    weights = np.zeros((k, data.X.shape[1]))
    for c in range(k):
        y_signed = np.where(data.y == c, 1.0, -1.0)
        weights[c] = _train_head(data.X, y_signed, lam, epochs, rng_for(seed, c))
    return LinearSVMModel(
        weights=weights,
        class_names=data.class_names,
        n_features=data.X.shape[1],
        seed=seed,
        hyperparameters={"lam": lam, "epochs": epochs},
    )
