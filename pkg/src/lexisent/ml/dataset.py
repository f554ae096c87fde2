"""Feature vectors from lexicon entries, labeled datasets, stratified splits."""

from __future__ import annotations

import io
import csv
import logging
from dataclasses import dataclass

import numpy as np

from ..lexicon import LanguageCode, Lexicon, Polarity, PosTag

log = logging.getLogger(__name__)

FEATURE_NAMES: tuple[str, ...] = (
    "shared_score",
    "score_fr",
    "score_cil",
    "score_en",
    "score_af",
    "score_nso",
    "score_zu",
    "english_chars",
    "english_words",
)

TASKS = ("pos", "polarity")


@dataclass
class Dataset:
    X: np.ndarray  # (n, 9) float
    y: np.ndarray  # (n,) int class indices
    class_names: tuple[str, ...]
    task: str
    provenance: tuple[str, ...]
    feature_names: tuple[str, ...] = FEATURE_NAMES

    def __len__(self) -> int:
        return len(self.y)

    def subset(self, indices: np.ndarray) -> "Dataset":
        return Dataset(
            X=self.X[indices],
            y=self.y[indices],
            class_names=self.class_names,
            task=self.task,
            provenance=tuple(self.provenance[i] for i in indices),
            feature_names=self.feature_names,
        )


def featurize(lexicon: Lexicon, task: str = "pos") -> Dataset:
    """One vector per entry: the seven scores (per-language ones falling back
    to the shared score) plus length and word count of the english form."""
    if task not in TASKS:
        raise ValueError(f"unknown task {task!r}; expected one of {TASKS}")
    rows = []
    labels = []
    for entry in lexicon.entries:
        english = entry.forms.get(LanguageCode.ENGLISH)
        rows.append(
            [entry.shared_score]
            + [entry.effective_score(lang) for lang in LanguageCode]
            + [len(english) if english else 0, len(english.split()) if english else 0]
        )
        if task == "pos":
            labels.append(list(PosTag).index(entry.pos))
        else:
            labels.append(list(Polarity).index(Polarity.from_score(entry.shared_score)))
    class_names = tuple(
        m.value for m in (PosTag if task == "pos" else Polarity)
    )
    return Dataset(
        X=np.asarray(rows, dtype=float),
        y=np.asarray(labels, dtype=int),
        class_names=class_names,
        task=task,
        provenance=tuple(e.entry_id for e in lexicon.entries),
    )


def rng_for(seed: int, *stream: int) -> np.random.Generator:
    """Independent generator for (seed, stream...); deterministic per key."""
    key = [seed & 0xFFFFFFFFFFFFFFFF] + [s & 0xFFFFFFFFFFFFFFFF for s in stream]
    return np.random.default_rng(np.random.SeedSequence(key))


def split(data: Dataset, train_fraction: float, seed: int) -> tuple[Dataset, Dataset]:
    """Stratified shuffle split; deterministic per seed; union equals input.

    Single-member classes go to the training side (logged, since they cannot
    be stratified).
    """
    if not 0.0 < train_fraction < 1.0:
        raise ValueError("train_fraction must lie strictly between 0 and 1")
    rng = rng_for(seed, 0)
    train_idx: list[int] = []
    test_idx: list[int] = []
    for k in range(len(data.class_names)):
        members = np.flatnonzero(data.y == k)
        if len(members) == 0:
            continue
        if len(members) == 1:
            log.warning(
                "class %r has a single member; assigning it to the training split",
                data.class_names[k],
            )
            train_idx.extend(members.tolist())
            continue
        shuffled = rng.permutation(members)
        n_train = int(len(members) * train_fraction + 0.5)
        train_idx.extend(shuffled[:n_train].tolist())
        test_idx.extend(shuffled[n_train:].tolist())
    train_idx.sort()
    test_idx.sort()
    return data.subset(np.asarray(train_idx, dtype=int)), data.subset(
        np.asarray(test_idx, dtype=int)
    )


def dataset_csv(data: Dataset) -> str:
    """CSV export with one named column per feature, plus label and provenance."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(list(data.feature_names) + ["label", "entry_id"])
    for row, label, entry_id in zip(data.X, data.y, data.provenance):
        writer.writerow(
            [repr(float(v)) for v in row] + [data.class_names[label], entry_id]
        )
    return buffer.getvalue()
