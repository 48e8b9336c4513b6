from __future__ import annotations

import functools
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union


class Abbreviations:
    """Read-only abbreviation lookup.

    Matching is exact first, then case-insensitive, so a sentence-initial
    ``Z.B.`` is recognized from a ``z.B.`` entry.
    """

    def __init__(self, entries: Iterable[str]):
        self._exact = frozenset(entries)
        self._folded = frozenset(e.casefold() for e in self._exact)

    def __contains__(self, token: object) -> bool:
        if not isinstance(token, str):
            return False
        return token in self._exact or token.casefold() in self._folded

    def __len__(self) -> int:
        return len(self._exact)

    def __iter__(self):
        return iter(sorted(self._exact))


def parse_abbreviation_lines(lines: Iterable[str]) -> list[str]:
    entries = []
    for line in lines:
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        entries.append(line)
    return entries


@functools.lru_cache(maxsize=None)
def _load_path(path: str) -> Abbreviations:
    with open(path, encoding="utf-8") as f:
        return Abbreviations(parse_abbreviation_lines(f))


@functools.lru_cache(maxsize=None)
def _load_builtin(language: str) -> Abbreviations:
    ref = resources.files("simeval") / "resources" / "abbreviations" / f"{language}.txt"
    if not ref.is_file():
        return Abbreviations(())
    return Abbreviations(parse_abbreviation_lines(ref.read_text(encoding="utf-8").splitlines()))


def load_abbreviations(language: str, path: Optional[Union[str, Path]] = None) -> Abbreviations:
    """Abbreviations for ``language``, or from a user file when ``path`` is given.

    Languages without a shipped list get an empty one.
    """
    if path is not None:
        return _load_path(str(Path(path).resolve()))
    return _load_builtin(language)
