"""CART decision tree with Gini impurity and class-frequency leaves."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset, rng_for


@dataclass
class TreeNode:
    feature: int | None = None
    threshold: float | None = None
    left: "TreeNode | None" = None
    right: "TreeNode | None" = None
    distribution: np.ndarray | None = None  # leaf only: class frequencies, sums to 1

    @property
    def is_leaf(self) -> bool:
        return self.distribution is not None


def gini(counts: np.ndarray) -> float:
    total = counts.sum()
    if total == 0:
        return 0.0
    p = counts / total
    return float(1.0 - np.sum(p * p))


def best_split(
    X: np.ndarray,
    y: np.ndarray,
    n_classes: int,
    feature_indices: np.ndarray,
) -> tuple[int, float, float] | None:
    """Best (feature, threshold, impurity decrease) over midpoint thresholds.

    Ties resolve to the lowest feature index and then the lowest threshold,
    so training is deterministic. Returns None when nothing improves.
    """
    n = len(y)
    parent_counts = np.bincount(y, minlength=n_classes).astype(float)
    parent_gini = gini(parent_counts)
    one_hot = np.eye(n_classes)[y]

    best: tuple[int, float, float] | None = None
    for f in feature_indices:
        column = X[:, f]
        order = np.argsort(column, kind="stable")
        xs = column[order]
        boundaries = np.flatnonzero(xs[:-1] != xs[1:])
        if boundaries.size == 0:
            continue
        cum = np.cumsum(one_hot[order], axis=0)
        left_counts = cum[boundaries]
        n_left = (boundaries + 1).astype(float)
        n_right = n - n_left
        right_counts = parent_counts - left_counts
        gini_left = 1.0 - np.sum((left_counts / n_left[:, None]) ** 2, axis=1)
        gini_right = 1.0 - np.sum((right_counts / n_right[:, None]) ** 2, axis=1)
        decrease = parent_gini - (n_left * gini_left + n_right * gini_right) / n
        i = int(np.argmax(decrease))
        if decrease[i] > 1e-12 and (best is None or decrease[i] > best[2]):
            threshold = float((xs[boundaries[i]] + xs[boundaries[i] + 1]) / 2.0)
            best = (int(f), threshold, float(decrease[i]))
    return best


def build_tree(
    X: np.ndarray,
    y: np.ndarray,
    n_classes: int,
    max_depth: int | None,
    min_samples_split: int,
    depth: int = 0,
    feature_rng: np.random.Generator | None = None,
    n_candidate_features: int | None = None,
) -> TreeNode:
    counts = np.bincount(y, minlength=n_classes).astype(float)

    def leaf() -> TreeNode:
        return TreeNode(distribution=counts / counts.sum())

    if (
        (max_depth is not None and depth >= max_depth)
        or len(y) < min_samples_split
        or np.count_nonzero(counts) <= 1
    ):
        return leaf()

    d = X.shape[1]
    if feature_rng is not None and n_candidate_features is not None and n_candidate_features < d:
        features = np.sort(feature_rng.choice(d, size=n_candidate_features, replace=False))
    else:
        features = np.arange(d)
    found = best_split(X, y, n_classes, features)
    if found is None:
        return leaf()
    feature, threshold, _ = found
    mask = X[:, feature] <= threshold
    node = TreeNode(feature=feature, threshold=threshold)
    node.left = build_tree(
        X[mask], y[mask], n_classes, max_depth, min_samples_split,
        depth + 1, feature_rng, n_candidate_features,
    )
    node.right = build_tree(
        X[~mask], y[~mask], n_classes, max_depth, min_samples_split,
        depth + 1, feature_rng, n_candidate_features,
    )
    return node


def _predict_proba_node(
    node: TreeNode, X: np.ndarray, rows: np.ndarray, out: np.ndarray
) -> None:
    if node.is_leaf:
        out[rows] = node.distribution
        return
    mask = X[rows, node.feature] <= node.threshold
    if mask.any():
        _predict_proba_node(node.left, X, rows[mask], out)
    if (~mask).any():
        _predict_proba_node(node.right, X, rows[~mask], out)


@dataclass
class DecisionTreeModel:
    kind = "decision_tree"
    root: TreeNode
    class_names: tuple[str, ...]
    n_features: int
    seed: int
    hyperparameters: dict = field(default_factory=dict)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        out = np.zeros((len(X), len(self.class_names)))
        _predict_proba_node(self.root, X, np.arange(len(X)), out)
        return out

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)


def train_decision_tree(
    data: Dataset,
    max_depth: int | None = 12,
    min_samples_split: int = 2,
    seed: int = 0,
) -> DecisionTreeModel:
    if len(data) == 0:
        raise ValueError("cannot train on an empty dataset")
    root = build_tree(
        data.X, data.y, len(data.class_names), max_depth, min_samples_split
    )
    return DecisionTreeModel(
        root=root,
        class_names=data.class_names,
        n_features=data.X.shape[1],
        seed=seed,
        hyperparameters={"max_depth": max_depth, "min_samples_split": min_samples_split},
    )
