"""Deterministic tokenization, sentence segmentation, and raw text counts.

Every downstream formula (readability indices, length features, topic and
sentiment inputs) consumes the counts produced here, so the segmentation
rules are fixed and dependency-free: results must be bit-reproducible run
to run and machine to machine.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

# A token is a maximal run of alphanumeric characters; a single apostrophe or
# hyphen joins two runs into one token ("state-of-the-art", "NLP's").
# [^\W_] is "word character minus underscore", i.e. Unicode alphanumerics.
_TOKEN_RE = re.compile(r"[^\W_]+(?:['\-][^\W_]+)*", re.UNICODE)

_URL_MENTION_RE = re.compile(r"https?://\S+|www\.\S+|@\w+")

# Splits after these are suppressed even when a '.' is followed by whitespace.
DEFAULT_ABBREVIATIONS = ("e.g.", "i.e.", "Dr.", "Fig.", "et al.")

_TERMINALS = ".!?"

# Syllable heuristic is English-specific; vowels stay ASCII even though
# letter counting is full Unicode.
_VOWELS = frozenset("aeiouy")


@dataclass(frozen=True)
class TextStats:
    """Raw counts for one document.

    character_count counts all non-whitespace characters, letter_count only
    alphabetic ones. complex_word_count is the number of tokens with three
    or more estimated syllables. per_word_syllables has one entry per token,
    in token order.
    """

    character_count: int = 0
    letter_count: int = 0
    word_count: int = 0
    sentence_count: int = 0
    complex_word_count: int = 0
    per_word_syllables: list[int] = field(default_factory=list)


def tokenize(text: str) -> list[str]:
    """Split text into word tokens.

    Tokens are maximal alphanumeric runs, optionally joined by single
    internal apostrophes or hyphens. All punctuation and whitespace is a
    separator. Empty text yields an empty list.
    """
    return _TOKEN_RE.findall(text)


def strip_urls(text: str) -> str:
    """Remove URLs and @-mentions; everything else is left untouched."""
    return _URL_MENTION_RE.sub(" ", text)


def _ends_with_abbreviation(candidate: str, abbreviations: tuple[str, ...]) -> bool:
    low = candidate.lower()
    for abbr in abbreviations:
        a = abbr.lower()
        if low.endswith(a):
            # Boundary check so "config." does not match "Fig.".
            prev = len(low) - len(a) - 1
            if prev < 0 or not low[prev].isalnum():
                return True
    return False


def split_sentences(
    text: str, abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS
) -> list[str]:
    """Split text into sentences on terminal punctuation.

    A sentence ends at '.', '!' or '?' followed by whitespace or end of
    text, except when the text up to a '.' ends with a known abbreviation.
    Text with content but no terminal punctuation is a single sentence.
    Returned sentences are stripped of surrounding whitespace and keep
    their terminal punctuation.
    """
    sentences: list[str] = []
    start = 0
    n = len(text)
    for i, ch in enumerate(text):
        if ch not in _TERMINALS:
            continue
        if i + 1 < n and not text[i + 1].isspace():
            continue
        candidate = text[start : i + 1].strip()
        if ch == "." and _ends_with_abbreviation(candidate, abbreviations):
            continue
        if candidate:
            sentences.append(candidate)
        start = i + 1
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences


def count_syllables(word: str) -> int:
    """Estimate the syllable count of a single token.

    Counts maximal vowel groups (a, e, i, o, u, y), subtracts one for a
    terminal silent 'e' preceded by a consonant (kept when the word ends
    in consonant + "le"), and floors at 1 for any word containing a
    letter. Tokens without letters count 0.
    """
    low = word.lower()
    groups = 0
    prev_vowel = False
    for ch in low:
        is_vowel = ch in _VOWELS
        if is_vowel and not prev_vowel:
            groups += 1
        prev_vowel = is_vowel

    if (
        len(low) >= 2
        and low.endswith("e")
        and low[-2].isalpha()
        and low[-2] not in _VOWELS
        and not (low.endswith("le") and len(low) >= 3 and low[-3].isalpha() and low[-3] not in _VOWELS)
    ):
        groups -= 1

    if any(ch.isalpha() for ch in low):
        return max(1, groups)
    return 0


def text_stats(
    text: str, abbreviations: tuple[str, ...] = DEFAULT_ABBREVIATIONS
) -> TextStats:
    """Aggregate all raw counts for one document."""
    tokens = tokenize(text)
    syllables = [count_syllables(tok) for tok in tokens]
    return TextStats(
        character_count=sum(1 for ch in text if not ch.isspace()),
        letter_count=sum(1 for ch in text if ch.isalpha()),
        word_count=len(tokens),
        sentence_count=len(split_sentences(text, abbreviations)),
        complex_word_count=sum(1 for s in syllables if s >= 3),
        per_word_syllables=syllables,
    )
