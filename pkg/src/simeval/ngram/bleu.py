"""Corpus-level BLEU over pre-tokenized segments."""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from .counts import MAX_ORDER, ngram_counts


class AlignmentError(ValueError):
    pass


@dataclass(frozen=True)
class BleuStats:
    matches: tuple[int, ...]
    totals: tuple[int, ...]
    sys_len: int
    ref_len: int


def _tokens(seq) -> tuple[str, ...]:
    return tuple(getattr(seq, "tokens", seq))


def closest_ref_length(hyp_len: int, ref_lens: Iterable[int]) -> int:
    """Reference length closest to ``hyp_len``; ties go to the shorter one."""
    return min(ref_lens, key=lambda r: (abs(r - hyp_len), r))


def bleu_stats(outputs: Sequence, references: Sequence[Sequence]) -> BleuStats:
    if len(outputs) == 0:
        raise AlignmentError("empty corpus")
    if len(outputs) != len(references):
        raise AlignmentError(f"{len(outputs)} outputs but {len(references)} reference lists")
    matches = [0] * MAX_ORDER
    totals = [0] * MAX_ORDER
    sys_len = ref_len = 0
    for i, (hyp, refs) in enumerate(zip(outputs, references)):
        if not refs:
            raise AlignmentError(f"segment {i} has no reference")
        hyp = _tokens(hyp)
        refs = [_tokens(r) for r in refs]
        sys_len += len(hyp)
        ref_len += closest_ref_length(len(hyp), (len(r) for r in refs))
        for n in range(1, MAX_ORDER + 1):
            hyp_counts = ngram_counts(hyp, n)
            max_ref: Counter = Counter()
            for ref in refs:
                max_ref |= ngram_counts(ref, n)
            matches[n - 1] += sum((hyp_counts & max_ref).values())
            totals[n - 1] += sum(hyp_counts.values())
    return BleuStats(tuple(matches), tuple(totals), sys_len, ref_len)


def bleu_from_stats(stats: BleuStats, smooth: bool = True) -> float:
    """Score in [0, 100].

    With ``smooth``, the k-th zero-match order gets precision
    ``1 / (2**k * total)`` (exponential decay); otherwise any zero precision
    gives 0. An order with no hypothesis n-grams at all always gives 0.
    """
    log_sum = 0.0
    decay = 1.0
    for m, t in zip(stats.matches, stats.totals):
        if t == 0:
            return 0.0
        if m == 0:
            if not smooth:
                return 0.0
            decay *= 2
            p = 1.0 / (decay * t)
        else:
            p = m / t
        log_sum += math.log(p)
    bp = 1.0
    if stats.sys_len < stats.ref_len:
        bp = math.exp(1 - stats.ref_len / stats.sys_len)
    return 100.0 * bp * math.exp(log_sum / MAX_ORDER)


def corpus_bleu(outputs: Sequence, references: Sequence[Sequence], smooth: bool = True) -> float:
    """BLEU of ``outputs`` against per-segment reference lists.

    Items may be :class:`~simeval.segment.TokenSeq` or plain token sequences.
    """
    return bleu_from_stats(bleu_stats(outputs, references), smooth=smooth)
