"""Greedy cosine matching of token embeddings (BERTScore without IDF or rescaling)."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .types import EmbeddingProvider, ProviderError, TokenEmbeddings


@dataclass(frozen=True)
class MatchScore:
    precision: float
    recall: float
    f1: float

    def __iter__(self):
        return iter((self.precision, self.recall, self.f1))


def _unit_rows(vectors: np.ndarray) -> np.ndarray:
    return vectors / np.linalg.norm(vectors, axis=1, keepdims=True)


def greedy_match(candidate: TokenEmbeddings, reference: TokenEmbeddings) -> MatchScore:
    """Each candidate token is matched to its most similar reference token
    (precision) and vice versa (recall)."""
    if len(candidate) == 0 or len(reference) == 0:
        raise ValueError("greedy matching needs non-empty token lists")
    if candidate.dim != reference.dim:
        raise ValueError(f"dimension mismatch: {candidate.dim} vs {reference.dim}")
    u = _unit_rows(candidate.vectors)
    v = _unit_rows(reference.vectors)
    sim = np.clip(u @ v.T, -1.0, 1.0)
    # Rounding leaves the cosine of a direction with itself a few ulps off 1.
    same = np.all(u[:, None, :] == v[None, :, :], axis=2)
    sim[same] = 1.0
    p = float(sim.max(axis=1).mean())
    r = float(sim.max(axis=0).mean())
    f = 2 * p * r / (p + r) if p + r != 0 else 0.0
    return MatchScore(p, r, f)


def mean_cosine(a: TokenEmbeddings, b: TokenEmbeddings) -> float:
    """Cosine similarity of the mean token vectors of ``a`` and ``b``."""
    u = a.vectors.mean(axis=0)
    v = b.vectors.mean(axis=0)
    nu, nv = np.linalg.norm(u), np.linalg.norm(v)
    if nu == 0 or nv == 0:
        return 0.0
    return float(np.clip(u @ v / (nu * nv), -1.0, 1.0))


class SegmentProviderError(ProviderError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"embedding provider failed on segment {index}: {cause}")
        self.index = index
        self.cause = cause


def segment_bertscore(output: str, references: Sequence[str], provider: EmbeddingProvider) -> MatchScore:
    """Best-F1 match of ``output`` over its references.

    A side without tokens (an empty output line) scores 0 instead of failing
    the whole corpus.
    """
    cand = provider.embed(output)
    best: Optional[MatchScore] = None
    for ref in references:
        ref_emb = provider.embed(ref)
        if len(cand) == 0 or len(ref_emb) == 0:
            score = MatchScore(0.0, 0.0, 0.0)
        else:
            score = greedy_match(cand, ref_emb)
        if best is None or score.f1 > best.f1:
            best = score
    if best is None:
        raise ValueError("segment has no reference")
    return best


def bertscore_segments(
    outputs: Sequence[str],
    references: Sequence[Sequence[str]],
    provider: EmbeddingProvider,
) -> list[MatchScore]:
    if len(outputs) != len(references):
        raise ValueError(f"{len(outputs)} outputs but {len(references)} reference lists")

    def score(i: int) -> MatchScore:
        try:
            return segment_bertscore(outputs[i], references[i], provider)
        except ProviderError as exc:
            raise SegmentProviderError(i, exc) from exc

    workers = max(1, int(getattr(provider, "max_parallelism", 1)))
    if workers == 1:
        return [score(i) for i in range(len(outputs))]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(score, range(len(outputs))))


def bertscore_corpus(
    outputs: Sequence[str],
    references: Sequence[Sequence[str]],
    provider: EmbeddingProvider,
) -> MatchScore:
    """Corpus means of per-segment precision, recall and F1 on raw text."""
    segments = bertscore_segments(outputs, references, provider)
    if not segments:
        raise ValueError("empty corpus")
    n = len(segments)
    return MatchScore(
        sum(s.precision for s in segments) / n,
        sum(s.recall for s in segments) / n,
        sum(s.f1 for s in segments) / n,
    )
