"""Exploratory statistics over a lexicon: distributions, correlations, quartiles."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .lexicon import LanguageCode, Lexicon, Polarity, PosTag

#: Histogram bin centers: one unit-width bin per integer score.
HISTOGRAM_CENTERS = tuple(range(-9, 10))


def score_bin(value: float) -> int:
    """Index of the unit-width bin centered on the nearest integer (half rounds up)."""
    return int(math.floor(value + 0.5)) + 9


def pearson(xs: list[float], ys: list[float]) -> float | None:
    """Pearson r of two equal-length samples; None when undefined (n < 2 or
    zero variance in either sample). Clamped into [-1, 1]."""
    n = len(xs)
    if n < 2:
        return None
    mean_x = sum(xs) / n
    mean_y = sum(ys) / n
    sxx = sum((x - mean_x) ** 2 for x in xs)
    syy = sum((y - mean_y) ** 2 for y in ys)
    if sxx <= 0.0 or syy <= 0.0:
        return None
    sxy = sum((x - mean_x) * (y - mean_y) for x, y in zip(xs, ys))
    r = sxy / (math.sqrt(sxx) * math.sqrt(syy))
    return max(-1.0, min(1.0, r))


@dataclass
class EdaReport:
    entry_count: int
    polarity_counts: dict[Polarity, int]
    pos_by_polarity: dict[PosTag, dict[Polarity, int]]
    per_language_histograms: dict[LanguageCode, list[int]]
    cross_language_correlation: dict[LanguageCode, dict[LanguageCode, float | None]]
    per_pos_five_number: dict[PosTag, tuple[float, float, float, float, float]]

    def to_json_dict(self) -> dict:
        return {
            "entry_count": self.entry_count,
            "polarity_counts": {p.value: c for p, c in self.polarity_counts.items()},
            "pos_by_polarity": {
                pos.value: {p.value: c for p, c in row.items()}
                for pos, row in self.pos_by_polarity.items()
            },
            "histogram_bin_centers": list(HISTOGRAM_CENTERS),
            "per_language_histograms": {
                lang.value: counts for lang, counts in self.per_language_histograms.items()
            },
            "cross_language_correlation": {
                a.value: {b.value: r for b, r in row.items()}
                for a, row in self.cross_language_correlation.items()
            },
            "per_pos_five_number": {
                pos.value: {
                    "min": f[0], "q1": f[1], "median": f[2], "q3": f[3], "max": f[4]
                }
                for pos, f in self.per_pos_five_number.items()
            },
        }


def compute_eda(lexicon: Lexicon) -> EdaReport:
    """Summarize the lexicon the way the analysis notebooks would.

    Polarity counts and the POS breakdown classify the shared score. The
    per-language histograms and the correlation matrix use only per-language
    scores that are explicitly present; pairs with fewer than two joint
    observations (or a constant column) are reported as absent, not as 0.
    """
    if len(lexicon) == 0:
        raise ValueError("cannot summarize an empty lexicon")

    polarity_counts = {p: 0 for p in Polarity}
    pos_by_polarity = {pos: {p: 0 for p in Polarity} for pos in PosTag}
    for entry in lexicon.entries:
        polarity = Polarity.from_score(entry.shared_score)
        polarity_counts[polarity] += 1
        pos_by_polarity[entry.pos][polarity] += 1

    histograms: dict[LanguageCode, list[int]] = {}
    columns: dict[LanguageCode, dict[str, float]] = {}
    for language in LanguageCode:
        counts = [0] * len(HISTOGRAM_CENTERS)
        column: dict[str, float] = {}
        for entry in lexicon.entries:
            if language in entry.per_language_scores:
                score = entry.per_language_scores[language]
                counts[score_bin(score)] += 1
                column[entry.entry_id] = score
        histograms[language] = counts
        columns[language] = column

    correlation: dict[LanguageCode, dict[LanguageCode, float | None]] = {
        a: {} for a in LanguageCode
    }
    languages = list(LanguageCode)
    for i, a in enumerate(languages):
        correlation[a][a] = 1.0 if len(columns[a]) >= 2 else None
        for b in languages[i + 1 :]:
            shared_ids = [eid for eid in columns[a] if eid in columns[b]]
            r = pearson(
                [columns[a][eid] for eid in shared_ids],
                [columns[b][eid] for eid in shared_ids],
            )
            correlation[a][b] = r
            correlation[b][a] = r

    five_number: dict[PosTag, tuple[float, float, float, float, float]] = {}
    for pos in PosTag:
        scores = [e.shared_score for e in lexicon.entries if e.pos is pos]
        if scores:
            q = np.percentile(np.asarray(scores, dtype=float), [0, 25, 50, 75, 100])
            five_number[pos] = tuple(float(v) for v in q)

    return EdaReport(
        entry_count=len(lexicon),
        polarity_counts=polarity_counts,
        pos_by_polarity=pos_by_polarity,
        per_language_histograms=histograms,
        cross_language_correlation=correlation,
        per_pos_five_number=five_number,
    )
