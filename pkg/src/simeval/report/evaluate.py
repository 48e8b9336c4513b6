from __future__ import annotations

import dataclasses
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from ..core import EvalConfig, SettingsFingerprint, build_settings_fingerprint
from ..corpus import SystemOutput, TestSet
from ..embed import EmbeddingProvider, ProviderError, bertscore_segments, mean_cosine
from ..features import aggregate_features, compute_features, feature_dict
from ..ngram import AlignmentError, corpus_bleu, sentence_saris
from ..readability import (
    FormulaSet,
    UndefinedReadability,
    UnsupportedReadabilityLanguage,
    readability_for,
)
from ..segment import corpus_text_stats, load_abbreviations, lowercase_tokens, tokenize

log = logging.getLogger(__name__)

METRIC_KEYS = (
    "bleu", "sari", "sari_add", "sari_keep", "sari_del",
    "bs_p", "bs_r", "bs_f1",
    "fre", "fkgl", "wstf1", "wstf2", "wstf3", "wstf4",
)
READABILITY_FIELDS = {
    FormulaSet.EN: ("fre", "fkgl"),
    FormulaSet.DE: ("fre", "wstf1", "wstf2", "wstf3", "wstf4"),
}
NOT_APPLICABLE = "not applicable"

SRC2SRC = "identity-src2src"
TGT2TGT = "identity-tgt2tgt"


@dataclass(frozen=True)
class MetricReport:
    """Scores of one system on one test set under one config.

    A metric that could not be computed is ``None`` in ``metrics`` and has
    its reason in ``absent``. Values are stored unrounded.
    """

    system_name: str
    test_set_name: str
    fingerprint: SettingsFingerprint
    metrics: dict[str, Optional[float]]
    absent: dict[str, str]
    feature_means: dict[str, Optional[float]]
    n_segments: int
    readability_band: Optional[str] = None
    errors: tuple[str, ...] = ()
    segments: Optional[list[dict[str, Any]]] = field(default=None, compare=False)

    def to_dict(self) -> dict[str, Any]:
        out = {
            "system_name": self.system_name,
            "test_set_name": self.test_set_name,
            "fingerprint": {
                "human_readable": self.fingerprint.human_readable,
                "digest": self.fingerprint.digest,
            },
            "metrics": dict(self.metrics),
            "absent": dict(self.absent),
            "feature_means": dict(self.feature_means),
            "n_segments": self.n_segments,
            "readability_band": self.readability_band,
            "errors": list(self.errors),
        }
        if self.segments is not None:
            out["segments"] = self.segments
        return out


def _check_provider(config: EvalConfig, provider: Optional[EmbeddingProvider]) -> None:
    if provider is not None and config.embedding_model_id != provider.model_id:
        raise ValueError(
            f"config names embedding model {config.embedding_model_id!r} "
            f"but the provider serves {provider.model_id!r}"
        )


def evaluate_system(
    test_set: TestSet,
    system_output: SystemOutput,
    config: EvalConfig,
    provider: Optional[EmbeddingProvider] = None,
    *,
    segment_scores: bool = False,
) -> MetricReport:
    """Score ``system_output`` on ``test_set``.

    BLEU and SARI see tokens produced by the config's tokenizer (lowercased
    if requested); embedding scores see the raw sentences.
    """
    if system_output.test_set_name != test_set.name:
        raise AlignmentError(
            f"system {system_output.system_name!r} was produced for {system_output.test_set_name!r}, "
            f"not {test_set.name!r}"
        )
    outputs = system_output.outputs
    if len(outputs) != len(test_set):
        raise AlignmentError(f"{len(outputs)} outputs for {len(test_set)} segments")
    if len(test_set) == 0:
        raise AlignmentError("empty test set")
    _check_provider(config, provider)

    abbreviations = load_abbreviations(config.language)

    def prep(text: str):
        seq = tokenize(text, config.tokenizer, config.language, abbreviations)
        return lowercase_tokens(seq) if config.lowercase else seq

    src_tok = [prep(s) for s in test_set.sources]
    out_tok = [prep(o) for o in outputs]
    ref_tok = [[prep(r) for r in refs] for refs in test_set.references]

    metrics: dict[str, Optional[float]] = {k: None for k in METRIC_KEYS}
    absent: dict[str, str] = {}
    errors: list[str] = []

    metrics["bleu"] = corpus_bleu(out_tok, ref_tok)
    saris = sentence_saris(src_tok, out_tok, ref_tok)
    n = len(saris)
    metrics["sari"] = float(sum((b.sari for b in saris), Fraction(0)) / n)
    metrics["sari_add"] = float(100 * sum((b.add for b in saris), Fraction(0)) / n)
    metrics["sari_keep"] = float(100 * sum((b.keep for b in saris), Fraction(0)) / n)
    metrics["sari_del"] = float(100 * sum((b.delete for b in saris), Fraction(0)) / n)

    bs_segments = None
    cosines = None
    if provider is None:
        for k in ("bs_p", "bs_r", "bs_f1"):
            absent[k] = "no embedding provider configured"
    else:
        try:
            bs_segments = bertscore_segments(list(outputs), [list(r) for r in test_set.references], provider)
            cosines = []
            for src, out in zip(test_set.sources, outputs):
                a, b = provider.embed(src), provider.embed(out)
                cosines.append(mean_cosine(a, b) if len(a) and len(b) else 0.0)
        except ProviderError as exc:
            log.error("embedding metrics unavailable: %s", exc)
            errors.append(str(exc))
            bs_segments = cosines = None
            for k in ("bs_p", "bs_r", "bs_f1"):
                absent[k] = f"embedding provider failed: {exc}"
        else:
            metrics["bs_p"] = sum(s.precision for s in bs_segments) / n
            metrics["bs_r"] = sum(s.recall for s in bs_segments) / n
            metrics["bs_f1"] = sum(s.f1 for s in bs_segments) / n

    band = None
    readability_keys = ("fre", "fkgl", "wstf1", "wstf2", "wstf3", "wstf4")
    try:
        stats = corpus_text_stats(outputs, config.language, config.tokenizer)
        scores = readability_for(config, stats)
    except (UndefinedReadability, UnsupportedReadabilityLanguage) as exc:
        for k in readability_keys:
            absent[k] = str(exc)
    else:
        band = scores.fre_band
        values = scores.as_dict()
        for k in readability_keys:
            if k in READABILITY_FIELDS[scores.variant_used]:
                metrics[k] = values[k]
            else:
                absent[k] = f"{NOT_APPLICABLE} to {scores.variant_used.value} formulas"

    features = [compute_features(s, o, config) for s, o in zip(test_set.sources, outputs)]
    if cosines is not None:
        features = [dataclasses.replace(f, embedding_cosine=c) for f, c in zip(features, cosines)]

    segments = None
    if segment_scores:
        segments = []
        for i, feats in enumerate(features):
            seg: dict[str, Any] = {
                "index": i,
                "sari": float(saris[i].sari),
                "features": feature_dict(feats),
            }
            if bs_segments is not None:
                seg["bs_p"], seg["bs_r"], seg["bs_f1"] = tuple(bs_segments[i])
            segments.append(seg)

    return MetricReport(
        system_name=system_output.system_name,
        test_set_name=test_set.name,
        fingerprint=build_settings_fingerprint(config),
        metrics=metrics,
        absent=absent,
        feature_means=aggregate_features(features),
        n_segments=n,
        readability_band=band,
        errors=tuple(errors),
        segments=segments,
    )


def identity_baselines(
    test_set: TestSet,
    config: EvalConfig,
    provider: Optional[EmbeddingProvider] = None,
    *,
    segment_scores: bool = False,
) -> tuple[MetricReport, MetricReport]:
    """Source-as-output and reference-0-as-output reports."""
    src2src = SystemOutput(SRC2SRC, test_set.name, test_set.sources)
    tgt2tgt = SystemOutput(TGT2TGT, test_set.name, test_set.reference_stream(0))
    return (
        evaluate_system(test_set, src2src, config, provider, segment_scores=segment_scores),
        evaluate_system(test_set, tgt2tgt, config, provider, segment_scores=segment_scores),
    )
