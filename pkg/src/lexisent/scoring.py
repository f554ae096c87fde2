"""Sentence sentiment scoring from lexicon word scores, plus a small English baseline.

Two scoring modes exist: ``avg`` scores each word by the mean of its entry's
per-language scores, ``v2`` by the score for the sentence's own language.
Sentence totals are plain sums of word scores (they may leave [-9, 9]).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .lexicon import LanguageCode, Lexicon, Polarity
from .translator import TokenKind, resolve_entry, tokenize


class ScoreMode(str, Enum):
    AVG = "avg"
    V2 = "v2"


@dataclass(frozen=True)
class ScoredSentence:
    sentence: str
    language: LanguageCode
    mode: ScoreMode
    word_scores: tuple[tuple[str, float], ...]
    total_score: float
    polarity: Polarity


BaselineScorer = Callable[[str], tuple[float, Polarity]]


def score_sentence(
    sentence: str, language: LanguageCode, lexicon: Lexicon, mode: ScoreMode
) -> ScoredSentence:
    """Tokenize and score one sentence; unknown tokens score 0."""
    tokens = tokenize(sentence, language, lexicon)
    word_scores: list[tuple[str, float]] = []
    for token in tokens:
        entry = resolve_entry(token, lexicon)
        if token.kind is TokenKind.LEXICAL and entry is not None:
            if mode is ScoreMode.AVG:
                score = entry.mean_score()
            else:
                score = entry.effective_score(language)
        else:
            score = 0.0
        word_scores.append((token.surface, score))
    total = math.fsum(score for _, score in word_scores)
    return ScoredSentence(
        sentence=sentence,
        language=language,
        mode=mode,
        word_scores=tuple(word_scores),
        total_score=total,
        polarity=Polarity.from_score(total),
    )


def format_word_scores(word_scores: tuple[tuple[str, float], ...]) -> str:
    """Serialize word scores as ``form:score; form:score``."""
    return "; ".join(f"{form}:{_fmt(score)}" for form, score in word_scores)


def _fmt(score: float) -> str:
    if score == int(score):
        return str(int(score))
    return repr(score)


# Valence list for the built-in baseline: a small set of common English
# sentiment words with conventional intensities in [-4, 4]. This is a minimal
# stand-in for rule-based compound scorers, not a reimplementation of one.
ENGLISH_VALENCES: dict[str, float] = {
    "amazing": 2.8,
    "angry": -2.3,
    "awful": -2.0,
    "bad": -2.5,
    "beautiful": 2.9,
    "best": 3.2,
    "better": 1.9,
    "boring": -1.3,
    "calm": 1.3,
    "care": 2.2,
    "caring": 2.2,
    "cruel": -2.6,
    "danger": -2.4,
    "dead": -3.3,
    "evil": -3.4,
    "excellent": 2.7,
    "fail": -2.5,
    "fear": -2.2,
    "fun": 2.3,
    "glad": 2.0,
    "good": 1.9,
    "great": 3.1,
    "happy": 2.7,
    "hate": -2.7,
    "hurt": -2.4,
    "joy": 2.8,
    "kind": 2.4,
    "like": 1.5,
    "love": 3.2,
    "nice": 1.8,
    "pain": -2.5,
    "perfect": 2.7,
    "poor": -2.1,
    "sad": -2.1,
    "scared": -2.2,
    "terrible": -2.1,
    "thank": 1.9,
    "thanks": 1.9,
    "trust": 2.3,
    "ugly": -2.6,
    "war": -2.9,
    "weak": -1.9,
    "win": 2.8,
    "wonderful": 2.7,
    "worst": -3.1,
    "wrong": -2.1,
}

#: Compound scores beyond +/-0.05 classify as positive/negative.
BASELINE_THRESHOLD = 0.05

# Normalization constant for mapping a raw valence sum into [-1, 1].
_NORMALIZATION_ALPHA = 15.0


def builtin_english_baseline(sentence: str) -> tuple[float, Polarity]:
    """Sum valences of known English words and squash into a compound score.

    The raw sum x maps to x / sqrt(x^2 + 15), so the compound always lies in
    [-1, 1]; sentences with no valence hits (any non-English input) score 0.
    """
    total = 0.0
    word = []
    for ch in sentence.casefold() + " ":
        if ch.isspace() or ch in '.,!?;:"()':
            if word:
                total += ENGLISH_VALENCES.get("".join(word), 0.0)
                word = []
        else:
            word.append(ch)
    compound = total / math.sqrt(total * total + _NORMALIZATION_ALPHA)
    if compound > BASELINE_THRESHOLD:
        return compound, Polarity.POSITIVE
    if compound < -BASELINE_THRESHOLD:
        return compound, Polarity.NEGATIVE
    return compound, Polarity.NEUTRAL


def zero_baseline(sentence: str) -> tuple[float, Polarity]:
    """Baseline that abstains: compound 0.0, neutral, for every sentence."""
    return 0.0, Polarity.NEUTRAL


@dataclass(frozen=True)
class ComparisonRow:
    sentence: str
    language: LanguageCode
    total_avg: float
    word_scores_avg: tuple[tuple[str, float], ...]
    polarity_avg: Polarity
    total_v2: float
    word_scores_v2: tuple[tuple[str, float], ...]
    polarity_v2: Polarity
    baseline_compound: float
    baseline_polarity: Polarity


@dataclass
class ComparisonReport:
    rows: list[ComparisonRow]
    agreement: float
    polarity_counts: dict[str, dict[Polarity, int]]

    def to_json_dict(self) -> dict:
        return {
            "rows": [
                {
                    "sentence": r.sentence,
                    "language": r.language.value,
                    "total_score_avg": r.total_avg,
                    "word_scores_avg": format_word_scores(r.word_scores_avg),
                    "sentiment_avg": r.polarity_avg.value,
                    "total_score_v2": r.total_v2,
                    "word_scores_v2": format_word_scores(r.word_scores_v2),
                    "sentiment_v2": r.polarity_v2.value,
                    "baseline_compound": r.baseline_compound,
                    "baseline_sentiment": r.baseline_polarity.value,
                }
                for r in self.rows
            ],
            "agreement": self.agreement,
            "polarity_counts": {
                scorer: {p.value: c for p, c in counts.items()}
                for scorer, counts in self.polarity_counts.items()
            },
        }


def score_batch(
    rows: list[tuple[str, LanguageCode]],
    lexicon: Lexicon,
    baseline: BaselineScorer,
) -> ComparisonReport:
    """Score every sentence under both modes plus the baseline.

    Agreement is the fraction of rows where the v2 polarity matches the
    baseline's (vacuously 1.0 on empty input). Output rows keep input order.
    """
    out: list[ComparisonRow] = []
    counts = {
        scorer: {p: 0 for p in Polarity} for scorer in ("avg", "v2", "baseline")
    }
    agree = 0
    for sentence, language in rows:
        avg = score_sentence(sentence, language, lexicon, ScoreMode.AVG)
        v2 = score_sentence(sentence, language, lexicon, ScoreMode.V2)
        compound, baseline_polarity = baseline(sentence)
        counts["avg"][avg.polarity] += 1
        counts["v2"][v2.polarity] += 1
        counts["baseline"][baseline_polarity] += 1
        if v2.polarity is baseline_polarity:
            agree += 1
        out.append(
            ComparisonRow(
                sentence=sentence,
                language=language,
                total_avg=avg.total_score,
                word_scores_avg=avg.word_scores,
                polarity_avg=avg.polarity,
                total_v2=v2.total_score,
                word_scores_v2=v2.word_scores,
                polarity_v2=v2.polarity,
                baseline_compound=compound,
                baseline_polarity=baseline_polarity,
            )
        )
    agreement = agree / len(rows) if rows else 1.0
    return ComparisonReport(rows=out, agreement=agreement, polarity_counts=counts)


COMPARISON_COLUMNS = (
    "sentence",
    "language",
    "total_score_avg",
    "word_scores_avg",
    "sentiment_avg",
    "total_score_v2",
    "word_scores_v2",
    "sentiment_v2",
    "baseline_compound",
    "baseline_sentiment",
)


def comparison_csv_rows(report: ComparisonReport) -> list[list[str]]:
    """Rows for the comparison table; totals use 6 decimals, compounds 4."""
    rows = [list(COMPARISON_COLUMNS)]
    for r in report.rows:
        rows.append(
            [
                r.sentence,
                r.language.value,
                f"{r.total_avg:.6f}",
                format_word_scores(r.word_scores_avg),
                r.polarity_avg.value,
                f"{r.total_v2:.6f}",
                format_word_scores(r.word_scores_v2),
                r.polarity_v2.value,
                f"{r.baseline_compound:.4f}",
                r.baseline_polarity.value,
            ]
        )
    return rows
