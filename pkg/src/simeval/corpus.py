"""Test-set manifests, parallel sentence-per-line files, corpus statistics."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any, Optional, Sequence, Union

from .core import EvalConfig
from .readability import readability_for
from .segment import corpus_text_stats

DATA_DIR_ENV = "SIMEVAL_DATA_DIR"


class CorpusError(ValueError):
    pass


class UnknownTestSet(CorpusError):
    pass


class MissingFile(CorpusError):
    pass


class LineCountMismatch(CorpusError):
    def __init__(self, path: Union[str, Path], expected: int, got: int):
        super().__init__(f"{path}: expected {expected} lines, got {got}")
        self.path = str(path)
        self.expected = expected
        self.got = got


class EmptyLine(CorpusError):
    def __init__(self, path: Union[str, Path], line_number: int):
        super().__init__(f"{path}: empty line {line_number}")
        self.path = str(path)
        self.line_number = line_number


class BadLineEndings(CorpusError):
    pass


@dataclass(frozen=True)
class TestSetMetadata:
    n_refs: int
    __test__ = False
    target_group: Optional[str] = None
    domain: Optional[str] = None
    size: Optional[int] = None
    pct_nm_alignments: Optional[float] = None


@dataclass(frozen=True)
class TestSet:
    name: str
    language: str
    metadata: TestSetMetadata
    sources: tuple[str, ...]
    references: tuple[tuple[str, ...], ...]
    split: str = "test"

    __test__ = False  # not a pytest test class, despite the name

    def __post_init__(self) -> None:
        if len(self.sources) != len(self.references):
            raise LineCountMismatch(self.name, len(self.sources), len(self.references))
        for i, refs in enumerate(self.references):
            if len(refs) != self.metadata.n_refs:
                raise CorpusError(f"segment {i} has {len(refs)} references, expected {self.metadata.n_refs}")

    def __len__(self) -> int:
        return len(self.sources)

    def reference_stream(self, k: int) -> tuple[str, ...]:
        return tuple(refs[k] for refs in self.references)


@dataclass(frozen=True)
class SystemOutput:
    system_name: str
    test_set_name: str
    outputs: tuple[str, ...]


# --- manifest --------------------------------------------------------------

@dataclass(frozen=True)
class ManifestEntry:
    name: str
    dir: Path
    language: str
    splits: tuple[str, ...]
    n_refs: int
    metadata: dict[str, Any] = field(default_factory=dict)


def default_manifest_path() -> Path:
    return Path(str(resources.files("simeval") / "resources" / "manifest.json"))


def read_manifest(manifest_path: Union[str, Path]) -> dict[str, ManifestEntry]:
    manifest_path = Path(manifest_path)
    try:
        raw = json.loads(manifest_path.read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise MissingFile(f"manifest not found: {manifest_path}") from None
    except json.JSONDecodeError as exc:
        raise CorpusError(f"{manifest_path}: invalid JSON ({exc.msg})") from None
    if not isinstance(raw, dict):
        raise CorpusError(f"{manifest_path}: manifest must map test-set names to entries")
    base = Path(os.environ.get(DATA_DIR_ENV) or manifest_path.parent)
    entries = {}
    for name, entry in raw.items():
        try:
            entries[name] = ManifestEntry(
                name=name,
                dir=base / entry["dir"],
                language=entry["language"],
                splits=tuple(entry.get("splits", ["test"])),
                n_refs=int(entry.get("n_refs", 1)),
                metadata=dict(entry.get("metadata", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise CorpusError(f"{manifest_path}: bad entry {name!r} ({exc})") from None
    return entries


def read_lines(path: Union[str, Path], allow_empty: bool = False) -> list[str]:
    """One sentence per line, UTF-8, LF endings; the final newline is optional."""
    path = Path(path)
    try:
        data = path.read_bytes().decode("utf-8")
    except FileNotFoundError:
        raise MissingFile(f"missing file: {path}") from None
    except UnicodeDecodeError as exc:
        raise CorpusError(f"{path}: not valid UTF-8 ({exc.reason})") from None
    if "\r" in data:
        raise BadLineEndings(f"{path}: CR characters found, LF line endings required")
    if data.endswith("\n"):
        data = data[:-1]
    lines = data.split("\n") if data else []
    if not allow_empty:
        for i, line in enumerate(lines, 1):
            if not line.strip():
                raise EmptyLine(path, i)
    return lines


def _reference_paths(directory: Path, name: str, split: str, n_refs: int) -> list[Path]:
    single = directory / f"{name}.{split}.simp"
    if n_refs == 1 and single.exists():
        return [single]
    return [directory / f"{name}.{split}.simp.{k}" for k in range(n_refs)]


def load_test_set(manifest_path: Union[str, Path], name: str, split: str = "test") -> TestSet:
    entries = read_manifest(manifest_path)
    if name not in entries:
        raise UnknownTestSet(f"test set {name!r} not in manifest {manifest_path}")
    entry = entries[name]
    if split not in entry.splits:
        raise UnknownTestSet(f"test set {name!r} has no split {split!r}")
    orig_path = entry.dir / f"{name}.{split}.orig"
    sources = read_lines(orig_path)
    ref_streams = []
    for path in _reference_paths(entry.dir, name, split, entry.n_refs):
        lines = read_lines(path)
        if len(lines) != len(sources):
            raise LineCountMismatch(path, len(sources), len(lines))
        ref_streams.append(lines)
    meta = entry.metadata
    pct = meta.get("pct_nm_alignments")
    return TestSet(
        name=name,
        language=entry.language,
        metadata=TestSetMetadata(
            n_refs=entry.n_refs,
            target_group=meta.get("target_group"),
            domain=meta.get("domain"),
            size=meta.get("size"),
            pct_nm_alignments=float(pct) if pct is not None else None,
        ),
        sources=tuple(sources),
        references=tuple(zip(*ref_streams)) if sources else (),
        split=split,
    )


def load_system_output(path: Union[str, Path], test_set: TestSet, system_name: Optional[str] = None) -> SystemOutput:
    """System outputs may contain empty lines; the line count must match."""
    path = Path(path)
    lines = read_lines(path, allow_empty=True)
    if len(lines) != len(test_set):
        raise LineCountMismatch(path, len(test_set), len(lines))
    return SystemOutput(system_name or path.name.split(".")[0], test_set.name, tuple(lines))


# --- statistics ------------------------------------------------------------

def corpus_stats(test_set: TestSet, side: str, config: EvalConfig) -> dict[str, float]:
    """Reading ease, words per sentence and syllables per word of one side.

    ``side`` is ``"complex"`` (sources) or ``"simple"`` (reference 0).
    """
    if side == "complex":
        texts: Sequence[str] = test_set.sources
    elif side == "simple":
        texts = test_set.reference_stream(0) if len(test_set) else ()
    else:
        raise ValueError(f"side must be 'complex' or 'simple', not {side!r}")
    if not texts:
        raise CorpusError(f"test set {test_set.name!r} is empty")
    stats = corpus_text_stats(texts, config.language, config.tokenizer)
    return {
        "fre": readability_for(config, stats).fre,
        "avg_sentence_len": stats.avg_sentence_len,
        "avg_word_syllables": stats.avg_word_syllables,
    }
