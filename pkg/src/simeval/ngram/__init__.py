"""Tokenization-sensitive overlap metrics."""
from .bleu import AlignmentError, BleuStats, bleu_from_stats, bleu_stats, closest_ref_length, corpus_bleu
from .counts import MAX_ORDER, averaged_counts, ngram_counts
from .sari import SariBreakdown, corpus_sari, sentence_sari, sentence_saris

__all__ = [
    "AlignmentError",
    "BleuStats",
    "MAX_ORDER",
    "SariBreakdown",
    "averaged_counts",
    "bleu_from_stats",
    "bleu_stats",
    "closest_ref_length",
    "corpus_bleu",
    "corpus_sari",
    "ngram_counts",
    "sentence_sari",
    "sentence_saris",
]
