"""Six-language sentiment lexicon: domain types, CSV I/O, cleaning, extension.

A lexicon row is one concept carried across up to six languages, with a part
of speech, one shared sentiment score, and optional per-language scores.
Lexicon values are immutable; every operation that changes content returns a
new ``Lexicon`` plus a report describing what happened.
"""

from __future__ import annotations

import csv
import io
import unicodedata
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Iterable, Mapping, Sequence

SCORE_MIN = -9.0
SCORE_MAX = 9.0

# Scores within this distance of zero classify as neutral.
NEUTRAL_EPSILON = 1e-9


class LanguageCode(str, Enum):
    """The six supported languages, in canonical column order."""

    FRENCH = "french"
    CILUBA = "ciluba"
    ENGLISH = "english"
    AFRIKAANS = "afrikaans"
    SEPEDI = "sepedi"
    ZULU = "zulu"

    @classmethod
    def parse(cls, text: str) -> "LanguageCode":
        try:
            return cls(text)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(
                f"unknown language {text!r} (expected one of: {valid})"
            ) from None


class PosTag(str, Enum):
    """Part-of-speech labels exactly as they appear in the source data.

    The label set mixes French and English spellings; "adverb" and "adverbe"
    are distinct classes and are never merged.
    """

    ADJECTIF = "adjectif"
    ADVERB = "adverb"
    ADVERBE = "adverbe"
    ARTICLE = "article"
    CONJUNCTION = "conjunction"
    MOT = "mot"
    NOMBRE = "nombre"
    PRONOMPERSONNEL = "pronompersonnel"
    VERBE = "verbe"

    @classmethod
    def parse(cls, text: str) -> "PosTag":
        try:
            return cls(text)
        except ValueError:
            valid = ", ".join(m.value for m in cls)
            raise ValueError(
                f"unknown POS tag {text!r} (expected one of: {valid})"
            ) from None


class Polarity(str, Enum):
    NEGATIVE = "negative"
    NEUTRAL = "neutral"
    POSITIVE = "positive"

    @classmethod
    def from_score(cls, score: float, eps: float = NEUTRAL_EPSILON) -> "Polarity":
        if score > eps:
            return cls.POSITIVE
        if score < -eps:
            return cls.NEGATIVE
        return cls.NEUTRAL


#: Per-language score column names, in header order.
SCORE_COLUMNS: dict[LanguageCode, str] = {
    LanguageCode.FRENCH: "score_fr",
    LanguageCode.CILUBA: "score_cil",
    LanguageCode.ENGLISH: "score_en",
    LanguageCode.AFRIKAANS: "score_af",
    LanguageCode.SEPEDI: "score_nso",
    LanguageCode.ZULU: "score_zu",
}

CSV_HEADER: tuple[str, ...] = tuple(
    [lang.value for lang in LanguageCode]
    + ["pos", "score"]
    + [SCORE_COLUMNS[lang] for lang in LanguageCode]
)


class LexiconFormatError(ValueError):
    """A malformed lexicon file. Carries the 1-based data row (0 = header)."""

    def __init__(self, message: str, row: int | None = None, column: str | None = None):
        self.row = row
        self.column = column
        where = []
        if row is not None:
            where.append(f"row {row}")
        if column is not None:
            where.append(f"column {column!r}")
        prefix = f"[{', '.join(where)}] " if where else ""
        super().__init__(prefix + message)


def normalize_form(form: str) -> str:
    """Canonical surface form: NFC, stripped, case-folded. Diacritics kept."""
    return unicodedata.normalize("NFC", form).strip().casefold()


def check_score(value: float, row: int | None = None, column: str | None = None) -> float:
    if not (SCORE_MIN <= value <= SCORE_MAX):
        raise LexiconFormatError(
            f"score {value!r} outside [{SCORE_MIN:g}, {SCORE_MAX:g}]", row, column
        )
    return float(value)


@dataclass(frozen=True)
class LexiconEntry:
    """One concept: surface forms per language, POS, shared and per-language scores.

    ``entry_id`` is assigned positionally by the owning :class:`Lexicon`;
    missing translations and missing per-language scores are absent keys,
    never empty strings.
    """

    forms: Mapping[LanguageCode, str]
    pos: PosTag
    shared_score: float
    per_language_scores: Mapping[LanguageCode, float]
    entry_id: str = ""

    def form(self, language: LanguageCode) -> str | None:
        return self.forms.get(language)

    def effective_score(self, language: LanguageCode) -> float:
        """Language-specific score, falling back to the shared score."""
        return self.per_language_scores.get(language, self.shared_score)

    def mean_score(self) -> float:
        """Mean over the per-language scores present; shared score if none are."""
        if not self.per_language_scores:
            return self.shared_score
        values = list(self.per_language_scores.values())
        return sum(values) / len(values)

    def polarity(self, language: LanguageCode | None = None) -> Polarity:
        score = self.shared_score if language is None else self.effective_score(language)
        return Polarity.from_score(score)

    def dedup_key(self) -> tuple[str, PosTag, float]:
        return (normalize_form(self.forms[LanguageCode.FRENCH]), self.pos, self.shared_score)


def check_entry(entry: LexiconEntry) -> None:
    """Raise ``ValueError`` unless the entry satisfies all per-entry invariants."""
    if LanguageCode.FRENCH not in entry.forms:
        raise ValueError("entry is missing the required french form")
    for language, form in entry.forms.items():
        if form == "":
            raise ValueError(f"empty {language.value} form (absent forms must be omitted)")
        if form != normalize_form(form):
            raise ValueError(
                f"{language.value} form {form!r} is not normalized (trimmed, case-folded, NFC)"
            )
    check_score(entry.shared_score)
    for language, score in entry.per_language_scores.items():
        check_score(score, column=SCORE_COLUMNS[language])


class Lexicon:
    """Immutable ordered collection of entries with per-language form indexes.

    Entry ids are positional ("r1", "r2", ...), matching 1-based data rows of
    the CSV serialization, so a parse/serialize round trip is the identity.
    """

    def __init__(self, entries: Iterable[LexiconEntry]):
        self.entries: tuple[LexiconEntry, ...] = tuple(
            replace(entry, entry_id=f"r{i}") for i, entry in enumerate(entries, start=1)
        )
        self.by_id: dict[str, LexiconEntry] = {e.entry_id: e for e in self.entries}
        self.index: dict[LanguageCode, dict[str, tuple[str, ...]]] = {
            lang: {} for lang in LanguageCode
        }
        self.max_phrase_len: dict[LanguageCode, int] = {lang: 0 for lang in LanguageCode}
        for entry in self.entries:
            for language, form in entry.forms.items():
                ids = self.index[language].setdefault(form, ())
                self.index[language][form] = ids + (entry.entry_id,)
                words = len(form.split())
                if words > self.max_phrase_len[language]:
                    self.max_phrase_len[language] = words

    def __len__(self) -> int:
        return len(self.entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Lexicon) and self.entries == other.entries

    def lookup(self, language: LanguageCode, form: str) -> tuple[LexiconEntry, ...]:
        return tuple(self.by_id[i] for i in self.index[language].get(form, ()))

    def forms(self, language: LanguageCode) -> Iterable[str]:
        return self.index[language].keys()


def parse_lexicon(source: bytes | str) -> Lexicon:
    """Parse a UTF-8 lexicon CSV into a :class:`Lexicon`.

    Rows are kept in file order and are *not* cleaned: un-trimmed or mixed-case
    forms and duplicate rows survive parsing so that :func:`clean` can report
    them. Errors carry the offending 1-based data row and column.
    """
    if isinstance(source, bytes):
        try:
            text = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise LexiconFormatError(f"lexicon is not valid UTF-8: {exc}") from None
    else:
        text = source
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise LexiconFormatError("empty lexicon file", row=0) from None
    if tuple(header) != CSV_HEADER:
        raise LexiconFormatError(
            f"bad header {header!r}; expected {','.join(CSV_HEADER)}", row=0
        )

    entries = []
    for row_no, row in enumerate(reader, start=1):
        if len(row) != len(CSV_HEADER):
            raise LexiconFormatError(
                f"expected {len(CSV_HEADER)} columns, found {len(row)}", row=row_no
            )
        cells = dict(zip(CSV_HEADER, row))
        forms: dict[LanguageCode, str] = {}
        for language in LanguageCode:
            cell = cells[language.value]
            if cell != "":
                forms[language] = cell
        if LanguageCode.FRENCH not in forms:
            raise LexiconFormatError("missing required french form", row_no, "french")
        try:
            pos = PosTag.parse(cells["pos"])
        except ValueError as exc:
            raise LexiconFormatError(str(exc), row_no, "pos") from None
        shared = _parse_score(cells["score"], row_no, "score")
        per_language: dict[LanguageCode, float] = {}
        for language in LanguageCode:
            column = SCORE_COLUMNS[language]
            cell = cells[column]
            if cell != "":
                per_language[language] = _parse_score(cell, row_no, column)
        entries.append(
            LexiconEntry(
                forms=forms, pos=pos, shared_score=shared, per_language_scores=per_language
            )
        )
    return Lexicon(entries)


def _parse_score(cell: str, row: int, column: str) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise LexiconFormatError(f"invalid score literal {cell!r}", row, column) from None
    return check_score(value, row, column)


def format_score(value: float) -> str:
    """Canonical decimal literal: integral values without a fraction part."""
    if value == int(value):
        return str(int(value))
    return repr(value)


def serialize_lexicon(lexicon: Lexicon) -> bytes:
    """Canonical CSV bytes; inverse of :func:`parse_lexicon` (row order kept)."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for entry in lexicon.entries:
        row = [entry.forms.get(lang, "") for lang in LanguageCode]
        row.append(entry.pos.value)
        row.append(format_score(entry.shared_score))
        row.extend(
            format_score(entry.per_language_scores[lang])
            if lang in entry.per_language_scores
            else ""
            for lang in LanguageCode
        )
        writer.writerow(row)
    return buffer.getvalue().encode("utf-8")


@dataclass
class CleaningReport:
    """Everything :func:`clean` changed, keyed by the *input* lexicon's entry ids."""

    normalized_forms: list[dict] = field(default_factory=list)
    dropped_forms: list[dict] = field(default_factory=list)
    removed_duplicates: list[dict] = field(default_factory=list)

    @property
    def change_count(self) -> int:
        return (
            len(self.normalized_forms)
            + len(self.dropped_forms)
            + len(self.removed_duplicates)
        )

    def to_json_dict(self) -> dict:
        return {
            "normalized_forms": self.normalized_forms,
            "dropped_forms": self.dropped_forms,
            "removed_duplicates": self.removed_duplicates,
            "change_count": self.change_count,
        }


def clean(lexicon: Lexicon) -> tuple[Lexicon, CleaningReport]:
    """Normalize every form and drop exact duplicates, keeping first occurrences.

    Duplicates are rows equal under the dedup key (french form, POS, shared
    score); rows sharing a form but differing in score or POS are kept, since
    they encode context-dependent sentiment. Idempotent.
    """
    report = CleaningReport()
    cleaned: list[LexiconEntry] = []
    seen: dict[tuple, str] = {}
    for entry in lexicon.entries:
        forms: dict[LanguageCode, str] = {}
        for language, form in entry.forms.items():
            normalized = normalize_form(form)
            if normalized == "":
                if language is LanguageCode.FRENCH:
                    raise ValueError(
                        f"entry {entry.entry_id}: french form {form!r} normalizes to empty"
                    )
                report.dropped_forms.append(
                    {"entry_id": entry.entry_id, "language": language.value, "before": form}
                )
                continue
            if normalized != form:
                report.normalized_forms.append(
                    {
                        "entry_id": entry.entry_id,
                        "language": language.value,
                        "before": form,
                        "after": normalized,
                    }
                )
            forms[language] = normalized
        candidate = replace(entry, forms=forms)
        key = candidate.dedup_key()
        if key in seen:
            report.removed_duplicates.append(
                {"entry_id": entry.entry_id, "kept_entry_id": seen[key]}
            )
            continue
        seen[key] = entry.entry_id
        cleaned.append(candidate)
    return Lexicon(cleaned), report


@dataclass
class ValidationReport:
    """Findings from :func:`validate_lexicon`; an empty report means clean input."""

    duplicates: list[dict] = field(default_factory=list)
    unnormalized_forms: list[dict] = field(default_factory=list)

    @property
    def issue_count(self) -> int:
        return len(self.duplicates) + len(self.unnormalized_forms)

    def to_json_dict(self) -> dict:
        return {
            "duplicates": self.duplicates,
            "unnormalized_forms": self.unnormalized_forms,
            "issue_count": self.issue_count,
        }


def validate_lexicon(lexicon: Lexicon) -> ValidationReport:
    """Flag duplicate rows (under the dedup key) and forms clean would rewrite."""
    report = ValidationReport()
    seen: dict[tuple, int] = {}
    for row_no, entry in enumerate(lexicon.entries, start=1):
        for language, form in entry.forms.items():
            normalized = normalize_form(form)
            if normalized != form:
                report.unnormalized_forms.append(
                    {
                        "row": row_no,
                        "entry_id": entry.entry_id,
                        "language": language.value,
                        "form": form,
                        "normalized": normalized,
                    }
                )
        key = entry.dedup_key()
        if key in seen:
            report.duplicates.append(
                {"row": row_no, "entry_id": entry.entry_id, "first_row": seen[key]}
            )
        else:
            seen[key] = row_no
    return report


@dataclass
class AdditionReport:
    added: int = 0
    rejected: list[dict] = field(default_factory=list)

    def to_json_dict(self) -> dict:
        return {"added": self.added, "rejected": self.rejected}


def add_entries(
    lexicon: Lexicon, new_entries: Sequence[LexiconEntry]
) -> tuple[Lexicon, AdditionReport]:
    """Append entries whose dedup key is novel; conflicts are rejected per entry.

    Every candidate must already satisfy the per-entry invariants
    (:func:`check_entry` raises otherwise). Conflicts never merge silently.
    """
    report = AdditionReport()
    existing = {entry.dedup_key(): entry.entry_id for entry in lexicon.entries}
    accepted: list[LexiconEntry] = []
    for entry in new_entries:
        check_entry(entry)
        key = entry.dedup_key()
        if key in existing:
            report.rejected.append(
                {
                    "french": entry.forms[LanguageCode.FRENCH],
                    "pos": entry.pos.value,
                    "shared_score": entry.shared_score,
                    "conflicts_with": existing[key],
                }
            )
            continue
        existing[key] = f"new{len(accepted)}"
        accepted.append(entry)
    report.added = len(accepted)
    return Lexicon(list(lexicon.entries) + accepted), report


def context_dependent_forms(lexicon: Lexicon, language: LanguageCode) -> list[str]:
    """Forms of ``language`` that occur in entries of opposite polarity.

    A form qualifies when it appears in at least two entries and, judged by
    the language-specific effective score, at least one is positive and one
    negative. Returned sorted for determinism.
    """
    result = []
    for form, ids in lexicon.index[language].items():
        if len(ids) < 2:
            continue
        polarities = {lexicon.by_id[i].polarity(language) for i in ids}
        if Polarity.POSITIVE in polarities and Polarity.NEGATIVE in polarities:
            result.append(form)
    return sorted(result)
