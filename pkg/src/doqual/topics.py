"""Topic modeling by collapsed Gibbs sampling.

A fitted model carries the final-sample topic/word count matrix and one
topic-proportion row per training document. Sampling is single-chain and
sequential (each assignment conditions on all others), so fitting is
single-threaded; a fitted model is immutable and safe for concurrent
inference. All randomness flows from the seed through one numpy
Generator: the same call with the same seed is bit-identical.

The per-document feature is either the full topic-proportion vector or
its top-k truncation renormalized back onto the simplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import ParameterError, ParseError

LDA_MAGIC = "DOQUAL-LDA-1"

DEFAULT_BETA = 0.01
DEFAULT_ITERATIONS = 1000
DEFAULT_INFER_ITERATIONS = 50
DEFAULT_MIN_DF = 2


def default_alpha(n_topics: int) -> float:
    return 50.0 / n_topics


@dataclass
class TopicModel:
    n_topics: int
    alpha: float
    beta: float
    vocabulary: list[str]
    topic_word_counts: list[list[int]]  # n_topics x |vocabulary|
    doc_topic: list[list[float]]  # one simplex row per training document
    rng_seed: int
    doc_topic_counts: list[list[int]] = field(default_factory=list)
    topic_counts: list[int] = field(default_factory=list)

    def __post_init__(self):
        if not self.topic_counts:
            self.topic_counts = [sum(row) for row in self.topic_word_counts]
        self.word_index = {w: i for i, w in enumerate(self.vocabulary)}


def _build_vocabulary(
    docs_lower: list[list[str]], min_df: int, stopwords: frozenset[str]
) -> list[str]:
    df: dict[str, int] = {}
    order: list[str] = []
    for doc in docs_lower:
        for w in set(doc):
            if w in stopwords:
                continue
            if w not in df:
                order.append(w)
                df[w] = 0
            df[w] += 1
    return [w for w in order if df[w] >= min_df]


def _doc_topic_row(counts: list[int], alpha: float) -> list[float]:
    k = len(counts)
    total = sum(counts)
    denom = total + k * alpha
    return [(c + alpha) / denom for c in counts]


def fit_lda(
    corpus: list[list[str]],
    n_topics: int,
    alpha: float | None = None,
    beta: float = DEFAULT_BETA,
    iterations: int = DEFAULT_ITERATIONS,
    seed: int = 0,
    min_df: int = DEFAULT_MIN_DF,
    stopwords: frozenset[str] | None = None,
) -> TopicModel:
    """Fit a topic model on tokenized documents.

    Tokens are lowercased; words below the document-frequency floor (or in
    the optional stopword set) are dropped from the vocabulary and skipped.
    iterations counts full Gibbs sweeps after the random initialization;
    0 is allowed and leaves the initial assignment.
    """
    if not corpus:
        raise ParameterError("corpus must be non-empty")
    if n_topics < 2:
        raise ParameterError(f"n_topics must be >= 2, got {n_topics}")
    if iterations < 0:
        raise ParameterError(f"iterations must be >= 0, got {iterations}")
    if alpha is None:
        alpha = default_alpha(n_topics)
    if alpha <= 0 or beta <= 0:
        raise ParameterError("alpha and beta must be positive")

    docs_lower = [[w.lower() for w in doc] for doc in corpus]
    vocabulary = _build_vocabulary(docs_lower, min_df, stopwords or frozenset())
    word_index = {w: i for i, w in enumerate(vocabulary)}
    docs = [[word_index[w] for w in doc if w in word_index] for doc in docs_lower]

    n_docs = len(docs)
    n_words = len(vocabulary)
    total_tokens = sum(len(d) for d in docs)

    rng = np.random.default_rng(seed)
    n_dk = [[0] * n_topics for _ in range(n_docs)]
    n_kw = [[0] * n_words for _ in range(n_topics)]
    n_k = [0] * n_topics
    assignments: list[list[int]] = []

    init = rng.integers(0, n_topics, size=total_tokens) if total_tokens else []
    pos = 0
    for d, doc in enumerate(docs):
        z_doc = []
        for w in doc:
            k = int(init[pos])
            pos += 1
            z_doc.append(k)
            n_dk[d][k] += 1
            n_kw[k][w] += 1
            n_k[k] += 1
        assignments.append(z_doc)

    v_beta = n_words * beta
    for _ in range(iterations):
        if total_tokens == 0:
            break
        us = rng.random(total_tokens)
        t = 0
        for d, doc in enumerate(docs):
            row = n_dk[d]
            z_doc = assignments[d]
            for i, w in enumerate(doc):
                k_old = z_doc[i]
                row[k_old] -= 1
                n_kw[k_old][w] -= 1
                n_k[k_old] -= 1

                total = 0.0
                cums = []
                for k in range(n_topics):
                    total += (row[k] + alpha) * (n_kw[k][w] + beta) / (n_k[k] + v_beta)
                    cums.append(total)
                target = us[t] * total
                t += 1
                k_new = 0
                while cums[k_new] < target:
                    k_new += 1

                z_doc[i] = k_new
                row[k_new] += 1
                n_kw[k_new][w] += 1
                n_k[k_new] += 1
        # every token stays assigned to exactly one topic
        assert sum(n_k) == total_tokens

    doc_topic = [_doc_topic_row(n_dk[d], alpha) for d in range(n_docs)]
    return TopicModel(
        n_topics=n_topics,
        alpha=alpha,
        beta=beta,
        vocabulary=vocabulary,
        topic_word_counts=n_kw,
        doc_topic=doc_topic,
        rng_seed=seed,
        doc_topic_counts=n_dk,
        topic_counts=n_k,
    )


def infer_doc_topics(
    model: TopicModel,
    tokens: list[str],
    iterations: int = DEFAULT_INFER_ITERATIONS,
    seed: int = 0,
) -> list[float]:
    """Fold a new document into a fitted model.

    Topic/word counts stay frozen; only the document's own topic counts are
    resampled. Out-of-vocabulary words are skipped, so a document with no
    known words (or no words at all) comes back as the uniform vector.
    """
    if iterations < 0:
        raise ParameterError(f"iterations must be >= 0, got {iterations}")
    ids = [model.word_index[w.lower()] for w in tokens if w.lower() in model.word_index]
    k_topics = model.n_topics
    if not ids:
        return [1.0 / k_topics] * k_topics

    rng = np.random.default_rng(seed)
    alpha, beta = model.alpha, model.beta
    n_kw = model.topic_word_counts
    n_k = model.topic_counts
    v_beta = len(model.vocabulary) * beta

    counts = [0] * k_topics
    z = []
    init = rng.integers(0, k_topics, size=len(ids))
    for j, _w in enumerate(ids):
        k = int(init[j])
        z.append(k)
        counts[k] += 1

    for _ in range(iterations):
        us = rng.random(len(ids))
        for j, w in enumerate(ids):
            counts[z[j]] -= 1
            total = 0.0
            cums = []
            for k in range(k_topics):
                total += (counts[k] + alpha) * (n_kw[k][w] + beta) / (n_k[k] + v_beta)
                cums.append(total)
            target = us[j] * total
            k_new = 0
            while cums[k_new] < target:
                k_new += 1
            z[j] = k_new
            counts[k_new] += 1

    return _doc_topic_row(counts, alpha)


def top_k_normalized(dist: list[float], k: int) -> list[float]:
    """Keep the k largest probabilities and renormalize them to sum 1.

    Ties pick the lower topic index; output is in descending order.
    """
    if k < 1 or k > len(dist):
        raise ParameterError(f"k must be in [1, {len(dist)}], got {k}")
    ranked = sorted(range(len(dist)), key=lambda i: (-dist[i], i))[:k]
    top = [dist[i] for i in ranked]
    total = sum(top)
    return [v / total for v in top]


def save_topic_model(model: TopicModel, path: str | Path) -> None:
    """Persist the inference-relevant state as a versioned text dump."""
    lines = [
        LDA_MAGIC,
        f"{model.n_topics} {model.alpha!r} {model.beta!r} {model.rng_seed}",
        str(len(model.vocabulary)),
    ]
    lines.extend(model.vocabulary)
    for row in model.topic_word_counts:
        lines.append(" ".join(str(c) for c in row))
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def load_topic_model(path: str | Path) -> TopicModel:
    text = Path(path).read_text(encoding="utf-8").splitlines()
    if not text or text[0] != LDA_MAGIC:
        raise ParseError(f"{path}: not a {LDA_MAGIC} file")
    try:
        k_str, alpha_str, beta_str, seed_str = text[1].split()
        n_topics, alpha, beta, seed = int(k_str), float(alpha_str), float(beta_str), int(seed_str)
        n_words = int(text[2])
        vocabulary = text[3 : 3 + n_words]
        counts = [
            [int(c) for c in text[3 + n_words + k].split()] for k in range(n_topics)
        ]
    except (IndexError, ValueError) as exc:
        raise ParseError(f"{path}: truncated or corrupt model dump: {exc}") from exc
    if len(vocabulary) != n_words or any(len(row) != n_words for row in counts):
        raise ParseError(f"{path}: inconsistent vocabulary/count dimensions")
    return TopicModel(
        n_topics=n_topics,
        alpha=alpha,
        beta=beta,
        vocabulary=list(vocabulary),
        topic_word_counts=counts,
        doc_topic=[],
        rng_seed=seed,
    )
