"""Readability indices and length features over TextStats.

Three classic grade-level indices are evaluated exactly from raw counts:

    coleman_liau:  0.0588 * L - 0.296 * S - 15.9
                   L = letters per 100 words, S = sentences per 100 words
    ari:           4.71 * chars/word + 0.5 * words/sentence - 21.43
    gunning_fog:   0.4 * (words/sentence + 100 * complex_words/words)

"characters" means non-whitespace characters, "letters" alphabetic ones;
the two definitions are kept distinct on purpose. Degenerate inputs (zero
words or sentences) raise rather than returning a silent 0, which would be
an extreme outlier on these scales; the evaluation harness imputes the
corpus mean for such rows.
"""

from __future__ import annotations

from .errors import ParameterError, UndefinedInputError
from .textseg import TextStats

DOMAINS = ("tweet", "article")


def _require_words(stats: TextStats) -> None:
    if stats.word_count < 1:
        raise UndefinedInputError("readability is undefined for a zero-word document")


def _require_sentences(stats: TextStats) -> None:
    if stats.sentence_count < 1:
        raise UndefinedInputError("readability is undefined without sentences")


def coleman_liau(stats: TextStats) -> float:
    """Coleman-Liau index; requires at least one word."""
    _require_words(stats)
    letters_per_100 = 100.0 * stats.letter_count / stats.word_count
    sentences_per_100 = 100.0 * stats.sentence_count / stats.word_count
    return 0.0588 * letters_per_100 - 0.296 * sentences_per_100 - 15.9


def ari(stats: TextStats) -> float:
    """Automated Readability Index; requires words and sentences."""
    _require_words(stats)
    _require_sentences(stats)
    chars_per_word = stats.character_count / stats.word_count
    words_per_sentence = stats.word_count / stats.sentence_count
    return 4.71 * chars_per_word + 0.5 * words_per_sentence - 21.43


def gunning_fog(stats: TextStats) -> float:
    """Gunning-Fog index; requires words and sentences."""
    _require_words(stats)
    _require_sentences(stats)
    words_per_sentence = stats.word_count / stats.sentence_count
    complex_share = 100.0 * stats.complex_word_count / stats.word_count
    return 0.4 * (words_per_sentence + complex_share)


def _check_domain(domain: str) -> None:
    if domain not in DOMAINS:
        raise ParameterError(f"unknown domain {domain!r}; expected one of {DOMAINS}")


def readability_features(stats: TextStats, domain: str) -> list[float]:
    """Readability feature vector: [CLI] for tweets, [CLI, ARI, GFI] for articles."""
    _check_domain(domain)
    if domain == "tweet":
        return [coleman_liau(stats)]
    return [coleman_liau(stats), ari(stats), gunning_fog(stats)]


def length_features(stats: TextStats, domain: str) -> list[float]:
    """Length feature vector, unnormalized raw counts.

    Tweets carry [word_count]; articles [sentence_count, word_count,
    character_count].
    """
    _check_domain(domain)
    if domain == "tweet":
        return [float(stats.word_count)]
    return [
        float(stats.sentence_count),
        float(stats.word_count),
        float(stats.character_count),
    ]


def readability_feature_names(domain: str) -> list[str]:
    _check_domain(domain)
    if domain == "tweet":
        return ["readability:cli"]
    return ["readability:cli", "readability:ari", "readability:gfi"]


def length_feature_names(domain: str) -> list[str]:
    _check_domain(domain)
    if domain == "tweet":
        return ["length:words"]
    return ["length:sentences", "length:words", "length:characters"]
