"""Command line entry point: ``simeval {evaluate,corpus-stats,fingerprint}``.

Exit codes: 0 success, 2 input or validation error, 3 embedding
provider or network error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from ..core import ConfigError, EvalConfig, Tokenizer, build_settings_fingerprint, validate_config
from ..corpus import CorpusError, corpus_stats, default_manifest_path, load_system_output, load_test_set
from ..embed import EmbeddingProvider, FileProvider, ProviderError, RemoteProvider, StubProvider
from ..ngram import AlignmentError
from ..readability import UnsupportedReadabilityLanguage
from .evaluate import evaluate_system, identity_baselines
from .render import FORMATS, MixedSettings, render_report

log = logging.getLogger("simeval")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_PROVIDER = 3


class UsageError(ValueError):
    pass


def parse_provider_option(value: str) -> EmbeddingProvider:
    """``stub:SEED``, ``file:PATH`` or ``http:URL#MODEL``; a bare
    ``http://host#MODEL`` URL works too."""
    kind, sep, rest = value.partition(":")
    if not sep:
        raise UsageError(f"bad --emb value {value!r}")
    if kind == "stub":
        try:
            return StubProvider(int(rest))
        except ValueError:
            raise UsageError(f"stub seed must be an integer, got {rest!r}") from None
    if kind == "file":
        return FileProvider(rest)
    if kind in ("http", "https"):
        target = rest if kind == "http" and rest.startswith(("http://", "https://")) else value
        url, sep, model = target.rpartition("#")
        if not sep or not url or not model:
            raise UsageError(f"remote provider needs URL#MODEL, got {value!r}")
        return RemoteProvider(url, model)
    raise UsageError(f"unknown provider kind {kind!r} in --emb")


def _config_from_args(args, language_default: Optional[str] = None, provider=None) -> EvalConfig:
    raw = {}
    if getattr(args, "config", None):
        try:
            raw = json.loads(Path(args.config).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(raw, dict):
            raise UsageError("config document must be a JSON object")
    if args.lang:
        raw["language"] = args.lang
    elif "language" not in raw and language_default:
        raw["language"] = language_default
    if args.tokenizer:
        raw["tokenizer"] = args.tokenizer
    if args.lowercase:
        raw["lowercase"] = True
    if getattr(args, "readability", None):
        raw["readability_variant"] = args.readability
    if provider is not None:
        raw["embedding_model_id"] = provider.model_id
    elif getattr(args, "emb_model", None):
        raw["embedding_model_id"] = args.emb_model
    return validate_config(raw)


def _write(out: str, data: bytes) -> None:
    if out == "-":
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        Path(out).write_bytes(data)


def cmd_evaluate(args) -> int:
    if not args.sys and not args.baselines:
        raise UsageError("give at least one --sys file or --baselines")
    test_set = load_test_set(args.manifest, args.test_set, args.split)
    provider = parse_provider_option(args.emb) if args.emb else None
    config = _config_from_args(args, test_set.language, provider)
    reports = []
    for path in args.sys:
        system = load_system_output(path, test_set)
        reports.append(evaluate_system(test_set, system, config, provider, segment_scores=args.segment_scores))
    if args.baselines:
        reports.extend(identity_baselines(test_set, config, provider, segment_scores=args.segment_scores))
    _write(args.out, render_report(reports, args.format))
    if any(r.errors for r in reports):
        return EXIT_PROVIDER
    return EXIT_OK


def cmd_corpus_stats(args) -> int:
    test_set = load_test_set(args.manifest, args.test_set, args.split)
    config = _config_from_args(args, test_set.language)
    fp = build_settings_fingerprint(config)
    meta = test_set.metadata
    doc = {
        "test_set": test_set.name,
        "split": test_set.split,
        "fingerprint": {"human_readable": fp.human_readable, "digest": fp.digest},
        "size": len(test_set),
        "n_refs": meta.n_refs,
        "target_group": meta.target_group,
        "domain": meta.domain,
        "pct_nm_alignments": meta.pct_nm_alignments,
        "complex": corpus_stats(test_set, "complex", config),
        "simple": corpus_stats(test_set, "simple", config),
    }
    if args.format == "json":
        text = json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    else:
        lines = [f"Settings: {fp.human_readable}", f"Digest: {fp.digest}",
                 f"Test set: {test_set.name} (n = {len(test_set)}, refs = {meta.n_refs})", ""]
        lines.append(f"{'side':8}  {'FRE':>7}  {'sent.len':>8}  {'word.len':>8}")
        for side in ("complex", "simple"):
            s = doc[side]
            lines.append(f"{side:8}  {s['fre']:7.2f}  {s['avg_sentence_len']:8.2f}  {s['avg_word_syllables']:8.2f}")
        text = "\n".join(lines) + "\n"
    _write(args.out, text.encode("utf-8"))
    return EXIT_OK


def cmd_fingerprint(args) -> int:
    config = _config_from_args(args)
    fp = build_settings_fingerprint(config)
    sys.stdout.write(f"{fp.human_readable}\n{fp.digest}\n")
    return EXIT_OK


def _add_settings(p: argparse.ArgumentParser, lang_required: bool = False) -> None:
    p.add_argument("--config", help="JSON settings document; flags override its values")
    p.add_argument("--lang", required=lang_required, help="ISO 639-1 language code")
    p.add_argument("--tokenizer", choices=[t.value for t in Tokenizer])
    p.add_argument("--lowercase", action="store_true")
    p.add_argument("--readability", choices=["auto", "force-en", "force-de"],
                   help="readability formula set (default: by language)")


def _add_corpus(p: argparse.ArgumentParser) -> None:
    p.add_argument("--manifest", default=str(default_manifest_path()))
    p.add_argument("--test-set", required=True)
    p.add_argument("--split", default="test")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simeval", description="Evaluate sentence simplification outputs.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("evaluate", help="score system outputs on a test set")
    _add_corpus(ev)
    ev.add_argument("--sys", action="append", default=[], metavar="FILE", help="system output, one line per segment")
    _add_settings(ev)
    ev.add_argument("--emb", help="embedding provider: stub:SEED | file:PATH | http:URL#MODEL")
    ev.add_argument("--baselines", action="store_true", help="add src2src and tgt2tgt identity baselines")
    ev.add_argument("--segment-scores", action="store_true", help="include per-segment scores in JSON")
    ev.add_argument("--format", choices=FORMATS, default="text")
    ev.add_argument("--out", default="-")
    ev.set_defaults(func=cmd_evaluate)

    cs = sub.add_parser("corpus-stats", help="reading ease and lengths of both sides of a test set")
    _add_corpus(cs)
    _add_settings(cs)
    cs.add_argument("--format", choices=("json", "text"), default="json")
    cs.add_argument("--out", default="-")
    cs.set_defaults(func=cmd_corpus_stats)

    fp = sub.add_parser("fingerprint", help="print the settings fingerprint")
    _add_settings(fp)
    fp.add_argument("--emb-model", help="embedding model id")
    fp.set_defaults(func=cmd_fingerprint)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ProviderError as exc:
        log.error("%s", exc)
        return EXIT_PROVIDER
    except (ConfigError, CorpusError, MixedSettings, AlignmentError, UsageError,
            UnsupportedReadabilityLanguage, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
