from __future__ import annotations

from dataclasses import dataclass
from typing import Protocol, Sequence, runtime_checkable

import numpy as np


class ProviderError(RuntimeError):
    """An embedding provider could not deliver embeddings."""


class UnknownSentence(ProviderError):
    pass


class ProtocolViolation(ProviderError):
    pass


class ModelMismatch(ProtocolViolation):
    pass


class MalformedEmbeddings(ProviderError):
    pass


@dataclass(frozen=True, eq=False)
class TokenEmbeddings:
    """Subword tokens with one vector each; rows of ``vectors`` align with ``tokens``."""

    tokens: tuple[str, ...]
    vectors: np.ndarray

    def __post_init__(self) -> None:
        tokens = tuple(self.tokens)
        vectors = np.array(self.vectors, dtype=np.float64)
        if vectors.ndim != 2 or vectors.shape[0] != len(tokens):
            raise MalformedEmbeddings(
                f"{len(tokens)} tokens but vectors of shape {vectors.shape}"
            )
        if vectors.shape[1] < 1:
            raise MalformedEmbeddings("vector dimension must be at least 1")
        if not np.all(np.isfinite(vectors)):
            raise MalformedEmbeddings("vectors contain NaN or infinite components")
        if len(tokens) and np.any(np.linalg.norm(vectors, axis=1) == 0):
            raise MalformedEmbeddings("zero vector: cosine similarity undefined")
        vectors.setflags(write=False)
        object.__setattr__(self, "tokens", tokens)
        object.__setattr__(self, "vectors", vectors)

    @classmethod
    def from_lists(cls, tokens: Sequence[str], vectors: Sequence[Sequence[float]]) -> "TokenEmbeddings":
        if len(tokens) != len(vectors):
            raise MalformedEmbeddings(f"{len(tokens)} tokens but {len(vectors)} vectors")
        dims = {len(v) for v in vectors}
        if len(dims) > 1:
            raise MalformedEmbeddings(f"vectors of mixed dimension {sorted(dims)}")
        # An empty sequence carries no dimension; 1 keeps the array well formed.
        array = np.array(vectors, dtype=np.float64).reshape(len(tokens), dims.pop() if dims else 1)
        return cls(tuple(tokens), array)

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    def __len__(self) -> int:
        return len(self.tokens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TokenEmbeddings):
            return NotImplemented
        return self.tokens == other.tokens and np.array_equal(self.vectors, other.vectors)

    def __hash__(self) -> int:
        return hash((self.tokens, self.vectors.tobytes()))


@runtime_checkable
class EmbeddingProvider(Protocol):
    """Source of contextual subword embeddings for raw sentences.

    ``max_parallelism`` tells corpus scorers how many concurrent ``embed``
    calls the provider tolerates.
    """

    model_id: str
    max_parallelism: int

    def embed(self, text: str) -> TokenEmbeddings: ...
