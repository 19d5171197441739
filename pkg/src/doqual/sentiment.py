"""Lexicon-based polarity scoring.

One pluggable word list drives everything. A lexicon file declares its own
value range in a header line: probability-of-positive in [0, 1] (neutral
0.5) or signed polarity in [-1, 1] (neutral 0). Scores are means, never
sums, so document length does not inflate them. Negation and intensifiers
are out of scope.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from pathlib import Path

from .errors import ParseError, SchemaError, UndefinedInputError
from .textseg import tokenize

RANGES = {
    "prob": (0.0, 1.0, 0.5),
    "polarity": (-1.0, 1.0, 0.0),
}


@dataclass(frozen=True)
class SentimentLexicon:
    kind: str  # "prob" or "polarity"
    entries: dict[str, float]

    @property
    def neutral(self) -> float:
        return RANGES[self.kind][2]


def load_lexicon(path: str | Path) -> SentimentLexicon:
    """Parse a lexicon file.

    Format: first line `#range=prob` or `#range=polarity`, then one
    `word<TAB>value` entry per line. Words are matched case-insensitively,
    so they are lowercased here; the last of any duplicate entries wins,
    with a warning.
    """
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if not lines or not lines[0].startswith("#range="):
        raise ParseError(f"{path}:1: missing '#range=prob|polarity' header")
    kind = lines[0][len("#range=") :].strip()
    if kind not in RANGES:
        raise SchemaError(f"{path}:1: unknown range {kind!r}")
    lo, hi, _ = RANGES[kind]

    entries: dict[str, float] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0]:
            raise ParseError(f"{path}:{lineno}: expected 'word<TAB>value'")
        word = parts[0].lower()
        try:
            value = float(parts[1])
        except ValueError:
            raise ParseError(f"{path}:{lineno}: non-numeric value {parts[1]!r}") from None
        if not (lo <= value <= hi):
            raise SchemaError(
                f"{path}:{lineno}: value {value} outside declared range [{lo}, {hi}]"
            )
        if word in entries:
            warnings.warn(f"duplicate lexicon entry {word!r}; keeping the later value")
        entries[word] = value
    return SentimentLexicon(kind=kind, entries=entries)


def tweet_sentiment(tokens: list[str], lexicon: SentimentLexicon) -> float:
    """Mean lexicon value over in-lexicon tokens; neutral when none match."""
    values = [lexicon.entries[t.lower()] for t in tokens if t.lower() in lexicon.entries]
    if not values:
        return lexicon.neutral
    return sum(values) / len(values)


def article_sentiment(
    sentences: list[str], lexicon: SentimentLexicon
) -> tuple[float, float]:
    """(average, maximum) of per-sentence scores.

    Each sentence is scored like a tweet: the mean value of its in-lexicon
    tokens, neutral when it has none.
    """
    if not sentences:
        raise UndefinedInputError("article sentiment needs at least one sentence")
    scores = [tweet_sentiment(tokenize(s), lexicon) for s in sentences]
    return sum(scores) / len(scores), max(scores)
