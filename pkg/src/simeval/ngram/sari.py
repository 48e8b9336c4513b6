"""SARI: add/keep/delete n-gram scores of an output against source and references.

Follows the released sentence-level implementation: reference counts are
averaged over the references, keep and delete are scored per n-gram as the
fraction of the candidate count that is justified, add uses n-gram presence
only. Keep and add are F1 scores, delete is precision only, and any 0/0 is 0.
All arithmetic is exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bleu import AlignmentError
from .counts import MAX_ORDER, averaged_counts, ngram_counts

ZERO = Fraction(0)


def _tokens(seq) -> tuple[str, ...]:
    return tuple(getattr(seq, "tokens", seq))


def _ratio(num, den) -> Fraction:
    return Fraction(num) / den if den else ZERO


def _f1(p: Fraction, r: Fraction) -> Fraction:
    return 2 * p * r / (p + r) if p + r > 0 else ZERO


@dataclass(frozen=True)
class SariBreakdown:
    """Per-order components, index 0 holds unigrams."""

    f1_add: tuple[Fraction, ...]
    f1_keep: tuple[Fraction, ...]
    precision_del: tuple[Fraction, ...]

    @property
    def add(self) -> Fraction:
        return sum(self.f1_add, ZERO) / len(self.f1_add)

    @property
    def keep(self) -> Fraction:
        return sum(self.f1_keep, ZERO) / len(self.f1_keep)

    @property
    def delete(self) -> Fraction:
        return sum(self.precision_del, ZERO) / len(self.precision_del)

    @property
    def sari(self) -> Fraction:
        return 100 * (self.add + self.keep + self.delete) / 3


def _keep_score(src: Counter, out: Counter, ref: dict) -> Fraction:
    cand = src & out
    target = {g: min(c, ref[g]) for g, c in src.items() if g in ref}
    p_sum = r_sum = ZERO
    for gram, count in cand.items():
        good = min(count, ref.get(gram, ZERO))
        if good > 0:
            p_sum += _ratio(good, count)
            r_sum += _ratio(good, target[gram])
    return _f1(_ratio(p_sum, len(cand)), _ratio(r_sum, len(target)))


def _delete_precision(src: Counter, out: Counter, ref: dict) -> Fraction:
    cand = src - out
    total = ZERO
    for gram, count in cand.items():
        good = count - ref.get(gram, ZERO)
        if good > 0:
            total += _ratio(good, count)
    return _ratio(total, len(cand))


def _add_score(src: Counter, out: Counter, ref: dict) -> Fraction:
    cand = set(out) - set(src)
    target = set(ref) - set(src)
    good = len(cand & target)
    return _f1(_ratio(good, len(cand)), _ratio(good, len(target)))


def sentence_sari(source, output, references: Sequence) -> SariBreakdown:
    if not references:
        raise ValueError("SARI needs at least one reference")
    src_tokens = _tokens(source)
    out_tokens = _tokens(output)
    ref_tokens = [_tokens(r) for r in references]
    adds, keeps, dels = [], [], []
    for n in range(1, MAX_ORDER + 1):
        src = ngram_counts(src_tokens, n)
        out = ngram_counts(out_tokens, n)
        ref = averaged_counts(ref_tokens, n)
        adds.append(_add_score(src, out, ref))
        keeps.append(_keep_score(src, out, ref))
        dels.append(_delete_precision(src, out, ref))
    return SariBreakdown(tuple(adds), tuple(keeps), tuple(dels))


def sentence_saris(sources: Sequence, outputs: Sequence, references: Sequence[Sequence]) -> list[SariBreakdown]:
    if not (len(sources) == len(outputs) == len(references)):
        raise AlignmentError(
            f"misaligned corpus: {len(sources)} sources, {len(outputs)} outputs, "
            f"{len(references)} reference lists"
        )
    if not sources:
        raise AlignmentError("empty corpus")
    return [sentence_sari(s, o, r) for s, o, r in zip(sources, outputs, references)]


def corpus_sari(sources: Sequence, outputs: Sequence, references: Sequence[Sequence]) -> float:
    """Macro-average of sentence SARI, in [0, 100]."""
    scores = sentence_saris(sources, outputs, references)
    return float(sum((b.sari for b in scores), ZERO) / len(scores))
