from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from ..core import Tokenizer
from .abbreviations import Abbreviations, load_abbreviations
from .sentences import split_sentences
from .syllables import count_syllables
from .tokenize import tokenize


def is_word(token: str) -> bool:
    return any(ch.isalpha() for ch in token)


@dataclass(frozen=True)
class TextStats:
    """Surface counts of a text plus the averages readability formulas use.

    Stored as counts so that statistics of several texts can be summed
    (``a + b``) before averaging, which is what corpus-level stats need.
    """

    n_sentences: int = 0
    n_words: int = 0
    n_syllables: int = 0
    n_polysyllable_words: int = 0  # three or more syllables
    n_long_words: int = 0  # more than six letters
    n_monosyllable_words: int = 0

    def __add__(self, other: "TextStats") -> "TextStats":
        if not isinstance(other, TextStats):
            return NotImplemented
        return TextStats(
            self.n_sentences + other.n_sentences,
            self.n_words + other.n_words,
            self.n_syllables + other.n_syllables,
            self.n_polysyllable_words + other.n_polysyllable_words,
            self.n_long_words + other.n_long_words,
            self.n_monosyllable_words + other.n_monosyllable_words,
        )

    @property
    def avg_sentence_len(self) -> float:
        return self.n_words / self.n_sentences if self.n_sentences else 0.0

    @property
    def avg_word_syllables(self) -> float:
        return self.n_syllables / self.n_words if self.n_words else 0.0

    def _pct(self, count: int) -> float:
        return 100.0 * count / self.n_words if self.n_words else 0.0

    @property
    def pct_3plus_syllable_words(self) -> float:
        return self._pct(self.n_polysyllable_words)

    @property
    def pct_gt6_letter_words(self) -> float:
        return self._pct(self.n_long_words)

    @property
    def pct_monosyllable_words(self) -> float:
        return self._pct(self.n_monosyllable_words)

    def as_dict(self) -> dict[str, float]:
        return {
            "n_sentences": self.n_sentences,
            "n_words": self.n_words,
            "n_syllables": self.n_syllables,
            "avg_sentence_len": self.avg_sentence_len,
            "avg_word_syllables": self.avg_word_syllables,
            "pct_3plus_syllable_words": self.pct_3plus_syllable_words,
            "pct_gt6_letter_words": self.pct_gt6_letter_words,
            "pct_monosyllable_words": self.pct_monosyllable_words,
        }


def text_stats(
    text: str,
    language: str,
    scheme: Tokenizer | str = Tokenizer.LANG_RULES,
    abbreviations: Optional[Abbreviations] = None,
) -> TextStats:
    if abbreviations is None:
        abbreviations = load_abbreviations(language)
    n_sentences = len(split_sentences(text, language, abbreviations))
    words = [t for t in tokenize(text, scheme, language, abbreviations) if is_word(t)]
    syllables = [count_syllables(w, language) for w in words]
    return TextStats(
        n_sentences=n_sentences,
        n_words=len(words),
        n_syllables=sum(syllables),
        n_polysyllable_words=sum(1 for s in syllables if s >= 3),
        n_long_words=sum(1 for w in words if sum(ch.isalpha() for ch in w) > 6),
        n_monosyllable_words=sum(1 for s in syllables if s == 1),
    )


def corpus_text_stats(
    texts: Iterable[str],
    language: str,
    scheme: Tokenizer | str = Tokenizer.LANG_RULES,
) -> TextStats:
    """Sum of per-line statistics; each line is segmented on its own."""
    total = TextStats()
    abbreviations = load_abbreviations(language)
    for text in texts:
        total = total + text_stats(text, language, scheme, abbreviations)
    return total
