"""Embedding-based similarity with pluggable embedding providers."""
from .matching import (
    MatchScore,
    SegmentProviderError,
    bertscore_corpus,
    bertscore_segments,
    greedy_match,
    mean_cosine,
    segment_bertscore,
)
from .providers import (
    FileProvider,
    RemoteProvider,
    StubProvider,
    char_trigrams,
    embedding_record,
    file_provider,
    remote_provider,
    stub_provider,
    write_embedding_file,
)
from .types import (
    EmbeddingProvider,
    MalformedEmbeddings,
    ModelMismatch,
    ProtocolViolation,
    ProviderError,
    TokenEmbeddings,
    UnknownSentence,
)

__all__ = [
    "EmbeddingProvider",
    "FileProvider",
    "MalformedEmbeddings",
    "MatchScore",
    "ModelMismatch",
    "ProtocolViolation",
    "ProviderError",
    "RemoteProvider",
    "SegmentProviderError",
    "StubProvider",
    "TokenEmbeddings",
    "UnknownSentence",
    "bertscore_corpus",
    "bertscore_segments",
    "char_trigrams",
    "embedding_record",
    "file_provider",
    "greedy_match",
    "mean_cosine",
    "remote_provider",
    "segment_bertscore",
    "stub_provider",
    "write_embedding_file",
]
