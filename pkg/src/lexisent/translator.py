"""Phrase-aware tokenization and word-by-word translation over a lexicon."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, field
from enum import Enum

from .lexicon import LanguageCode, Lexicon, LexiconEntry, PosTag

#: Characters treated as separators (dropped from tokens). Apostrophes are
#: word characters so contractions stay whole.
PUNCTUATION = set('.,!?;:"()')

#: Disambiguation rank when one surface form maps to several entries.
_POS_PRIORITY = {
    PosTag.MOT: 0,
    PosTag.VERBE: 1,
    PosTag.NOMBRE: 2,
    PosTag.ADJECTIF: 3,
    PosTag.ADVERB: 4,
    PosTag.ADVERBE: 5,
    PosTag.ARTICLE: 6,
    PosTag.CONJUNCTION: 7,
    PosTag.PRONOMPERSONNEL: 8,
}


class TokenKind(str, Enum):
    LEXICAL = "lexical"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Token:
    surface: str
    kind: TokenKind
    entry_id: str | None
    span: tuple[int, int]
    #: Entry ids that also matched the surface but lost disambiguation.
    alternatives: tuple[str, ...] = ()


@dataclass(frozen=True)
class TranslationResult:
    source_language: LanguageCode
    target_language: LanguageCode
    source_text: str
    translated_text: str
    tokens: tuple[Token, ...]
    unknown_count: int


def normalize_sentence(sentence: str) -> str:
    return unicodedata.normalize("NFC", sentence).casefold()


def word_tokens(text: str) -> list[str]:
    """Normalized words of ``text`` with punctuation separators dropped."""
    return [w for w, _, _ in _words_with_spans(normalize_sentence(text))]


def _words_with_spans(normalized: str) -> list[tuple[str, int, int]]:
    words = []
    start = None
    for i, ch in enumerate(normalized):
        if ch.isspace() or ch in PUNCTUATION:
            if start is not None:
                words.append((normalized[start:i], start, i))
                start = None
        elif start is None:
            start = i
    if start is not None:
        words.append((normalized[start:], start, len(normalized)))
    return words


def _choose_entry(lexicon: Lexicon, ids: tuple[str, ...]) -> tuple[str, tuple[str, ...]]:
    """Pick one entry id deterministically; ties go to the earliest entry."""
    ranked = sorted(ids, key=lambda i: (_POS_PRIORITY[lexicon.by_id[i].pos], i))
    return ranked[0], tuple(ranked[1:])


def tokenize(sentence: str, language: LanguageCode, lexicon: Lexicon) -> list[Token]:
    """Segment a sentence against the lexicon's phrases for ``language``.

    The sentence is normalized (NFC, case-folded), punctuation acts as a
    separator, and matching is greedy left-to-right longest-match up to the
    longest phrase recorded for the language, so "go tšhaba go wa" becomes two
    two-word tokens when both phrases are known. Words with no lexicon match
    come back as unknown tokens. Spans index into the normalized sentence.
    """
    normalized = normalize_sentence(sentence)
    words = _words_with_spans(normalized)
    max_len = max(1, lexicon.max_phrase_len[language])
    index = lexicon.index[language]

    tokens: list[Token] = []
    i = 0
    while i < len(words):
        match_len = 0
        matched_ids: tuple[str, ...] = ()
        for length in range(min(max_len, len(words) - i), 0, -1):
            candidate = " ".join(w for w, _, _ in words[i : i + length])
            ids = index.get(candidate, ())
            if ids:
                match_len = length
                matched_ids = ids
                break
        if match_len == 0:
            word, start, end = words[i]
            tokens.append(Token(word, TokenKind.UNKNOWN, None, (start, end)))
            i += 1
        else:
            surface = " ".join(w for w, _, _ in words[i : i + match_len])
            span = (words[i][1], words[i + match_len - 1][2])
            chosen, alternatives = _choose_entry(lexicon, matched_ids)
            tokens.append(Token(surface, TokenKind.LEXICAL, chosen, span, alternatives))
            i += match_len
    return tokens


def resolve_entry(token: Token, lexicon: Lexicon) -> LexiconEntry | None:
    return lexicon.by_id[token.entry_id] if token.entry_id is not None else None


def translate(
    sentence: str,
    source: LanguageCode,
    target: LanguageCode,
    lexicon: Lexicon,
) -> TranslationResult:
    """Translate word by word, keeping word order.

    Each lexical token is replaced by its entry's target-language form; tokens
    whose entry lacks that form are downgraded to unknown and passed through
    verbatim, as are words the lexicon does not know at all. Identity
    translation short-circuits to the normalized input.
    """
    tokens = tuple(tokenize(sentence, source, lexicon))
    if source is target:
        return TranslationResult(
            source_language=source,
            target_language=target,
            source_text=sentence,
            translated_text=normalize_sentence(sentence),
            tokens=tokens,
            unknown_count=sum(t.kind is TokenKind.UNKNOWN for t in tokens),
        )

    pieces: list[str] = []
    out_tokens: list[Token] = []
    unknown = 0
    for token in tokens:
        entry = resolve_entry(token, lexicon)
        target_form = entry.forms.get(target) if entry is not None else None
        if token.kind is TokenKind.LEXICAL and target_form is not None:
            pieces.append(target_form)
            out_tokens.append(token)
        else:
            pieces.append(token.surface)
            out_tokens.append(
                Token(token.surface, TokenKind.UNKNOWN, None, token.span, token.alternatives)
            )
            unknown += 1
    return TranslationResult(
        source_language=source,
        target_language=target,
        source_text=sentence,
        translated_text=" ".join(pieces),
        tokens=tuple(out_tokens),
        unknown_count=unknown,
    )


def translate_batch(
    rows: list[tuple[str, LanguageCode, LanguageCode]], lexicon: Lexicon
) -> list[TranslationResult]:
    return [translate(sentence, src, dst, lexicon) for sentence, src, dst in rows]
