"""Greedy left-to-right part-of-speech tagger and presence-vector reduction.

The tagger is an averaged perceptron over a chain of greedy decisions: each
token is scored against every tag using sparse features of the word itself
plus the two previously predicted tags, so earlier predictions carry context
forward. Downstream consumers only see a binary per-document tag-presence
vector, which is deliberately robust to the exact tagger used; pre-tagged
corpora can be ingested directly through read_tagged_corpus to bypass
tagging entirely.

Two tag inventories ship as data files: a 38-tag set for articles and a
24-tag set for tweets. The file content is the contract; line order defines
vector index order.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import ParseError, SchemaError

_START = "-START-"
_START2 = "-START2-"
_END = "-END-"
_END2 = "-END2-"

TAGGER_MAGIC = "DOQUAL-TAGGER-1"


@dataclass(frozen=True)
class TagSet:
    name: str
    tags: tuple[str, ...]

    def __post_init__(self):
        if len(set(self.tags)) != len(self.tags):
            raise SchemaError(f"tagset {self.name!r} contains duplicate tags")

    def __len__(self) -> int:
        return len(self.tags)

    def index(self, tag: str) -> int:
        try:
            return self.tags.index(tag)
        except ValueError:
            raise SchemaError(f"tag {tag!r} not in tagset {self.name!r}") from None


@dataclass
class TaggerModel:
    """Feature weights keyed feature -> tag -> weight, plus the tagset.

    averaged is True once the perceptron totals have been folded in; a
    trained model is immutable by convention and safe to share across
    threads.
    """

    weights: dict[str, dict[str, float]]
    tagset: TagSet
    averaged: bool


def _features(i: int, word: str, context: list[str], prev: str, prev2: str) -> list[str]:
    low = word.lower()
    return [
        "bias",
        "w=" + word,
        "lw=" + low,
        "suf1=" + low[-1:],
        "suf2=" + low[-2:],
        "suf3=" + low[-3:],
        "p1=" + prev,
        "p2=" + prev2,
        "pw=" + context[i - 1].lower(),
        "nw=" + context[i + 1].lower(),
    ]


def _score_and_pick(
    feats: list[str], weights: dict[str, dict[str, float]], tagset: TagSet
) -> str:
    scores: dict[str, float] = {}
    for feat in feats:
        per_tag = weights.get(feat)
        if not per_tag:
            continue
        for tag, w in per_tag.items():
            scores[tag] = scores.get(tag, 0.0) + w
    best_tag = tagset.tags[0]
    best = scores.get(best_tag, 0.0)
    for tag in tagset.tags[1:]:
        s = scores.get(tag, 0.0)
        if s > best:  # strict: ties keep the earlier tagset index
            best = s
            best_tag = tag
    return best_tag


def tag(model: TaggerModel, tokens: list[str]) -> list[str]:
    """Tag tokens greedily left to right; output length equals input length."""
    if not tokens:
        return []
    context = [_START] + list(tokens) + [_END]
    prev, prev2 = _START, _START2
    out: list[str] = []
    for i, word in enumerate(tokens, start=1):
        feats = _features(i, word, context, prev, prev2)
        chosen = _score_and_pick(feats, model.weights, model.tagset)
        out.append(chosen)
        prev2 = prev
        prev = chosen
    return out


def train_tagger(
    corpus: list[tuple[list[str], list[str]]],
    tagset: TagSet,
    epochs: int = 5,
    seed: int = 0,
) -> TaggerModel:
    """Train an averaged perceptron tagger with greedy decoding.

    Sentence order is reshuffled every epoch from the given seed. The
    returned weights are the running average over all updates, which
    smooths out late-training oscillation.
    """
    if not corpus:
        raise SchemaError("empty training corpus")
    if epochs < 1:
        raise SchemaError("epochs must be >= 1")
    known = set(tagset.tags)
    for tokens, gold in corpus:
        if len(tokens) != len(gold):
            raise SchemaError(
                f"sentence has {len(tokens)} tokens but {len(gold)} tags"
            )
        for g in gold:
            if g not in known:
                raise SchemaError(f"gold tag {g!r} not in tagset {tagset.name!r}")

    weights: dict[str, dict[str, float]] = {}
    totals: dict[tuple[str, str], float] = {}
    stamps: dict[tuple[str, str], int] = {}
    updates = 0

    def adjust(feat: str, tag_name: str, delta: float) -> None:
        key = (feat, tag_name)
        per_tag = weights.setdefault(feat, {})
        current = per_tag.get(tag_name, 0.0)
        totals[key] = totals.get(key, 0.0) + (updates - stamps.get(key, 0)) * current
        stamps[key] = updates
        per_tag[tag_name] = current + delta

    rng = random.Random(seed)
    order = list(range(len(corpus)))
    for _ in range(epochs):
        rng.shuffle(order)
        for idx in order:
            tokens, gold = corpus[idx]
            if not tokens:
                continue
            context = [_START] + list(tokens) + [_END]
            prev, prev2 = _START, _START2
            for i, word in enumerate(tokens, start=1):
                feats = _features(i, word, context, prev, prev2)
                guess = _score_and_pick(feats, weights, tagset)
                updates += 1
                if guess != gold[i - 1]:
                    for feat in feats:
                        adjust(feat, gold[i - 1], 1.0)
                        adjust(feat, guess, -1.0)
                # Chain on our own predictions, as at tagging time.
                prev2 = prev
                prev = guess

    averaged: dict[str, dict[str, float]] = {}
    for feat, per_tag in weights.items():
        for tag_name, w in per_tag.items():
            key = (feat, tag_name)
            total = totals.get(key, 0.0) + (updates - stamps.get(key, 0)) * w
            avg = total / updates if updates else 0.0
            if avg != 0.0:
                averaged.setdefault(feat, {})[tag_name] = avg
    return TaggerModel(weights=averaged, tagset=tagset, averaged=True)


def pos_presence_vector(tags: list[str], tagset: TagSet) -> list[int]:
    """Binary vector over the tagset: 1 where the tag occurs at least once."""
    vec = [0] * len(tagset)
    for t in tags:
        vec[tagset.index(t)] = 1
    return vec


def read_tagset(path: str | Path, name: str | None = None) -> TagSet:
    """Read a tagset file: UTF-8, one tag per line, line order = index order."""
    p = Path(path)
    tags = []
    for line in p.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line:
            tags.append(line)
    return TagSet(name=name or p.stem, tags=tuple(tags))


def builtin_tagset(kind: str) -> TagSet:
    """The shipped inventories: 'article' (38 tags) or 'tweet' (24 tags)."""
    if kind not in ("article", "tweet"):
        raise SchemaError(f"no builtin tagset for kind {kind!r}")
    text = resources.files("doqual").joinpath(f"data/tagset_{kind}.txt").read_text("utf-8")
    tags = tuple(line.strip() for line in text.splitlines() if line.strip())
    return TagSet(name=kind, tags=tags)


def read_tagged_corpus(path: str | Path) -> list[tuple[list[str], list[str]]]:
    """Read a tagged corpus: one sentence per line, tokens as word_TAG.

    The split is on the last underscore, so words may themselves contain
    underscores. Blank lines are skipped.
    """
    sentences = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            tokens: list[str] = []
            tags_: list[str] = []
            for item in line.split(" "):
                word, sep, tag_name = item.rpartition("_")
                if not sep or not word or not tag_name:
                    raise ParseError(
                        f"{path}:{lineno}: malformed token {item!r} (expected word_TAG)"
                    )
                tokens.append(word)
                tags_.append(tag_name)
            sentences.append((tokens, tags_))
    return sentences


def save_tagger(model: TaggerModel, path: str | Path) -> None:
    payload = {
        "format": TAGGER_MAGIC,
        "tagset_name": model.tagset.name,
        "tags": list(model.tagset.tags),
        "averaged": model.averaged,
        "weights": model.weights,
    }
    Path(path).write_text(json.dumps(payload, sort_keys=True), encoding="utf-8")


def load_tagger(path: str | Path) -> TaggerModel:
    payload = json.loads(Path(path).read_text(encoding="utf-8"))
    if payload.get("format") != TAGGER_MAGIC:
        raise ParseError(f"{path}: not a {TAGGER_MAGIC} file")
    tagset = TagSet(name=payload["tagset_name"], tags=tuple(payload["tags"]))
    return TaggerModel(
        weights=payload["weights"], tagset=tagset, averaged=bool(payload["averaged"])
    )
