from __future__ import annotations

import re
from typing import Optional

from .abbreviations import Abbreviations, load_abbreviations

_CLOSERS = "\"')]}»«“”‘’›‹"
_TERMINATOR = re.compile(r"([.!?]+)[" + re.escape(_CLOSERS) + r"]*")
_OPENERS = set("\"'([{»«„“‘‚›‹")


def _starts_sentence(rest: str) -> bool:
    i = 0
    while i < len(rest) and rest[i] in _OPENERS:
        i += 1
    return i < len(rest) and rest[i].isupper()


def _word_before(text: str, end: int) -> str:
    start = end
    while start > 0 and not text[start - 1].isspace():
        start -= 1
    word = text[start:end]
    return word.lstrip("".join(_OPENERS))


def _is_boundary(text: str, match: re.Match, abbreviations: Abbreviations) -> bool:
    end = match.end()
    if end < len(text) and not text[end].isspace():
        return False
    rest = text[end:].lstrip()
    if rest and not _starts_sentence(rest):
        return False
    if match.group(1) == ".":
        if _word_before(text, match.end(1)) in abbreviations:
            return False
    return True


def split_sentences(
    text: str,
    language: str,
    abbreviations: Optional[Abbreviations] = None,
) -> list[str]:
    """Split at ``.``, ``!`` or ``?`` followed by whitespace and an uppercase letter.

    The end of the text is always a boundary. A lone period that closes a
    known abbreviation never is. Terminators stay with the left sentence.
    """
    if abbreviations is None:
        abbreviations = load_abbreviations(language)
    sentences = []
    start = 0
    for match in _TERMINATOR.finditer(text):
        if _is_boundary(text, match, abbreviations):
            piece = text[start:match.end()].strip()
            if piece:
                sentences.append(piece)
            start = match.end()
    tail = text[start:].strip()
    if tail:
        sentences.append(tail)
    return sentences
