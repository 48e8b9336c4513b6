"""Reference-less features of a source/output sentence pair."""
from __future__ import annotations

from dataclasses import asdict, dataclass, fields
from typing import Optional, Sequence

from rapidfuzz.distance import Levenshtein

from .core import EvalConfig
from .embed import EmbeddingProvider, mean_cosine
from .segment import text_stats


def levenshtein_similarity(a: str, b: str) -> float:
    """``1 - distance / max(len)`` over characters; two empty strings are identical."""
    longest = max(len(a), len(b))
    if longest == 0:
        return 1.0
    return 1.0 - Levenshtein.distance(a, b) / longest


@dataclass(frozen=True)
class FeatureVector:
    """Features of one pair.

    ``n_splits`` is the number of sentences the output has beyond the
    source, floored at 0: a sentence split into two counts as one split.
    """

    src_sentence_len: int
    out_sentence_len: int
    src_syllables: int
    out_syllables: int
    src_word_syllables: float
    out_word_syllables: float
    n_splits: int
    compression_ratio: float
    exact_copy: bool
    levenshtein_sim: float
    embedding_cosine: Optional[float] = None


def compute_features(
    source: str,
    output: str,
    config: EvalConfig,
    provider: Optional[EmbeddingProvider] = None,
) -> FeatureVector:
    if not source:
        raise ValueError("empty source sentence")
    src = text_stats(source, config.language, config.tokenizer)
    out = text_stats(output, config.language, config.tokenizer)
    cosine = None
    if provider is not None:
        a, b = provider.embed(source), provider.embed(output)
        cosine = mean_cosine(a, b) if len(a) and len(b) else 0.0
    return FeatureVector(
        src_sentence_len=src.n_words,
        out_sentence_len=out.n_words,
        src_syllables=src.n_syllables,
        out_syllables=out.n_syllables,
        src_word_syllables=src.avg_word_syllables,
        out_word_syllables=out.avg_word_syllables,
        n_splits=max(0, out.n_sentences - src.n_sentences),
        compression_ratio=len(output) / len(source),
        exact_copy=output == source,
        levenshtein_sim=levenshtein_similarity(source, output),
        embedding_cosine=cosine,
    )


def aggregate_features(vectors: Sequence[FeatureVector]) -> dict[str, Optional[float]]:
    """Per-field means; ``exact_copy`` becomes the copy rate.

    ``embedding_cosine`` is averaged over the pairs that have it and is
    ``None`` when none do.
    """
    if not vectors:
        raise ValueError("no feature vectors to aggregate")
    means: dict[str, Optional[float]] = {}
    for f in fields(FeatureVector):
        values = [getattr(v, f.name) for v in vectors]
        present = [float(x) for x in values if x is not None]
        means[f.name] = sum(present) / len(present) if present else None
    means["exact_copy_rate"] = means.pop("exact_copy")
    return means


def feature_dict(vector: FeatureVector) -> dict:
    return asdict(vector)
