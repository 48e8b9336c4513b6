from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, replace
from typing import Optional

from ..core import Tokenizer
from .abbreviations import Abbreviations, load_abbreviations


@dataclass(frozen=True)
class TokenSeq:
    tokens: tuple[str, ...]
    scheme: Tokenizer
    language: str
    lowercased: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "tokens", tuple(self.tokens))
        for tok in self.tokens:
            if not tok or any(c.isspace() for c in tok):
                raise ValueError(f"invalid token {tok!r}")

    def __len__(self) -> int:
        return len(self.tokens)

    def __iter__(self):
        return iter(self.tokens)


# mteval-v13a, language-dependent part for Western languages.
_13A_RULES = (
    (re.compile(r"([\{-\~\[-\` -\&\(-\+\:-\@\/])"), r" \1 "),
    (re.compile(r"([^0-9])([\.,])"), r"\1 \2 "),
    (re.compile(r"([\.,])([^0-9])"), r" \1 \2"),
    (re.compile(r"([0-9])(-)"), r"\1 \2 "),
)


def tokenize_13a(text: str) -> list[str]:
    # Entity unescaping and <skipped> removal from the original script are
    # left out: inputs are plain text, and both would alter visible characters.
    norm = f" {text} "
    for pattern, repl in _13A_RULES:
        norm = pattern.sub(repl, norm)
    return norm.split()


# Numbers with internal separators: 1,5  10.000  12:30  1/2  -3
_NUMBER = re.compile(r"[+\-−]?\d+(?:[.,:/]\d+)*")


def _is_punct(ch: str) -> bool:
    return unicodedata.category(ch)[0] in "PS"


def _split_chunk(chunk: str, abbreviations: Abbreviations) -> list[str]:
    prefix: list[str] = []
    suffix: list[str] = []
    while chunk:
        if chunk in abbreviations or _NUMBER.fullmatch(chunk):
            break
        if _is_punct(chunk[0]):
            prefix.append(chunk[0])
            chunk = chunk[1:]
        elif _is_punct(chunk[-1]):
            suffix.append(chunk[-1])
            chunk = chunk[:-1]
        else:
            break
    if chunk:
        prefix.append(chunk)
    prefix.extend(reversed(suffix))
    return prefix


def tokenize_lang_rules(text: str, abbreviations: Abbreviations) -> list[str]:
    """Whitespace split, then peel punctuation off both ends of each chunk.

    Abbreviations and separator-bearing numbers stop the peeling, so
    ``z.B.`` and ``1,5`` survive as single tokens.
    """
    tokens: list[str] = []
    for chunk in text.split():
        tokens.extend(_split_chunk(chunk, abbreviations))
    return tokens


def tokenize(
    text: str,
    scheme: Tokenizer | str,
    language: str,
    abbreviations: Optional[Abbreviations] = None,
) -> TokenSeq:
    scheme = Tokenizer(scheme)
    if scheme is Tokenizer.NONE:
        tokens = text.split()
    elif scheme is Tokenizer.MTEVAL_13A:
        tokens = tokenize_13a(text)
    else:
        if abbreviations is None:
            abbreviations = load_abbreviations(language)
        tokens = tokenize_lang_rules(text, abbreviations)
    return TokenSeq(tuple(tokens), scheme, language)


def lowercase_tokens(seq: TokenSeq) -> TokenSeq:
    if seq.lowercased:
        return seq
    return replace(seq, tokens=tuple(t.lower() for t in seq.tokens), lowercased=True)
