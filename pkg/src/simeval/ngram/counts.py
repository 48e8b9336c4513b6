from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Sequence

MAX_ORDER = 4


def ngram_counts(tokens: Sequence[str], n: int) -> Counter:
    """Multiset of the ``n``-token tuples of ``tokens``."""
    tokens = tuple(tokens)
    return Counter(tokens[i:i + n] for i in range(len(tokens) - n + 1))


def averaged_counts(sequences: Sequence[Sequence[str]], n: int) -> dict[tuple, Fraction]:
    """N-gram counts summed over ``sequences`` and divided by their number."""
    total: Counter = Counter()
    for seq in sequences:
        total.update(ngram_counts(seq, n))
    r = len(sequences)
    return {gram: Fraction(count, r) for gram, count in total.items()}
