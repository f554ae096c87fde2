"""Random forest: bagged CART trees with per-node feature subsampling."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .dataset import Dataset, rng_for
from .tree import DecisionTreeModel, build_tree


@dataclass
class RandomForestModel:
    kind = "random_forest"
    trees: list[DecisionTreeModel]
    class_names: tuple[str, ...]
    n_features: int
    seed: int
    hyperparameters: dict = field(default_factory=dict)

    def predict_proba(self, X: np.ndarray) -> np.ndarray:
        # Soft voting: mean of the trees' leaf distributions. The argmax of
        # this mean is the ensemble vote, so predict == argmax(predict_proba).
        stacked = np.stack([tree.predict_proba(X) for tree in self.trees])
        return stacked.mean(axis=0)

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.predict_proba(X), axis=1)


def train_random_forest(
    data: Dataset,
    n_trees: int = 100,
    max_depth: int | None = 12,
    min_samples_split: int = 2,
    seed: int = 0,
    bootstrap: bool = True,
    feature_subsample: bool = True,
) -> RandomForestModel:
    """Train ``n_trees`` CART trees; each tree's RNG derives from (seed, index),
    so results do not depend on training order."""
    if n_trees < 1:
        raise ValueError("n_trees must be >= 1")
    if len(data) == 0:
        raise ValueError("cannot train on an empty dataset")
    d = data.X.shape[1]
    n_candidates = math.isqrt(d) + (0 if math.isqrt(d) ** 2 == d else 1)  # ceil(sqrt(d))
    trees = []
    for i in range(n_trees):
        rng = rng_for(seed, i)
        if bootstrap:
            idx = rng.integers(0, len(data), size=len(data))
            X, y = data.X[idx], data.y[idx]
        else:
            X, y = data.X, data.y
        root = build_tree(
            X,
            y,
            len(data.class_names),
            max_depth,
            min_samples_split,
            feature_rng=rng if feature_subsample else None,
            n_candidate_features=n_candidates if feature_subsample else None,
        )
        trees.append(
            DecisionTreeModel(
                root=root,
                class_names=data.class_names,
                n_features=d,
                seed=seed,
                hyperparameters={"max_depth": max_depth, "min_samples_split": min_samples_split},
            )
        )
    return RandomForestModel(
        trees=trees,
        class_names=data.class_names,
        n_features=d,
        seed=seed,
        hyperparameters={
            "n_trees": n_trees,
            "max_depth": max_depth,
            "min_samples_split": min_samples_split,
            "bootstrap": bootstrap,
            "feature_subsample": feature_subsample,
        },
    )
