"""Language-specific readability formulas over :class:`~simeval.segment.TextStats`.

Constants:

* Flesch Reading Ease (English): 206.835 - 1.015 ASL - 84.6 ASW
* Flesch-Kincaid Grade Level:   0.39 ASL + 11.8 ASW - 15.59
* Amstad's German FRE:          180 - ASL - 58.5 ASW
* Wiener Sachtextformel, with MS = % words of 3+ syllables, SL = ASL,
  IW = % words longer than 6 letters, ES = % monosyllabic words:

  ====== ====== ====== ====== ======= =======
  form   MS     SL     IW     ES      const
  ====== ====== ====== ====== ======= =======
  1      0.1935 0.1672 0.1297 -0.0327 -0.875
  2      0.2007 0.1682 0.1373 0       -2.779
  3      0.2963 0.1905 0      0       -1.1144
  4      0.2744 0.2656 0      0       -1.693
  ====== ====== ====== ====== ======= =======

ASL is words per sentence, ASW syllables per word. No score is clamped.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import ConfigError, EvalConfig
from .segment import TextStats


class UndefinedReadability(ValueError):
    """Readability of a text without words or sentences."""


class UnsupportedReadabilityLanguage(ConfigError):
    pass


class FormulaSet(str, enum.Enum):
    EN = "en"
    DE = "de"


WSTF_CONSTANTS = {
    1: (0.1935, 0.1672, 0.1297, -0.0327, -0.875),
    2: (0.2007, 0.1682, 0.1373, 0.0, -2.779),
    3: (0.2963, 0.1905, 0.0, 0.0, -1.1144),
    4: (0.2744, 0.2656, 0.0, 0.0, -1.693),
}

# Lower bound of each reading-ease band, after Amstad; scores below 30 are
# "very difficult".
FRE_BANDS = (
    (90.0, "very easy"),
    (80.0, "easy"),
    (70.0, "fairly easy"),
    (60.0, "standard"),
    (50.0, "fairly difficult"),
    (30.0, "difficult"),
)


def fre_band(score: float) -> str:
    for lower, label in FRE_BANDS:
        if score >= lower:
            return label
    return "very difficult"


def _check(stats: TextStats) -> None:
    if stats.n_words <= 0 or stats.n_sentences <= 0:
        raise UndefinedReadability("readability needs at least one word and one sentence")


def fre_english(stats: TextStats) -> float:
    _check(stats)
    return 206.835 - 1.015 * stats.avg_sentence_len - 84.6 * stats.avg_word_syllables


def fre_german(stats: TextStats) -> float:
    _check(stats)
    return 180.0 - stats.avg_sentence_len - 58.5 * stats.avg_word_syllables


def fkgl(stats: TextStats) -> float:
    _check(stats)
    return 0.39 * stats.avg_sentence_len + 11.8 * stats.avg_word_syllables - 15.59


def wiener_sachtextformel(stats: TextStats) -> tuple[float, float, float, float]:
    _check(stats)
    ms = stats.pct_3plus_syllable_words
    sl = stats.avg_sentence_len
    iw = stats.pct_gt6_letter_words
    es = stats.pct_monosyllable_words
    return tuple(
        a * ms + b * sl + c * iw + d * es + const
        for a, b, c, d, const in (WSTF_CONSTANTS[k] for k in (1, 2, 3, 4))
    )


@dataclass(frozen=True)
class ReadabilityScores:
    """Scores of one formula set; fields of the other set stay ``None``."""

    variant_used: FormulaSet
    fre: float
    fkgl: Optional[float] = None
    wstf1: Optional[float] = None
    wstf2: Optional[float] = None
    wstf3: Optional[float] = None
    wstf4: Optional[float] = None

    @property
    def fre_band(self) -> str:
        return fre_band(self.fre)

    def as_dict(self) -> dict[str, Optional[float]]:
        return {
            "fre": self.fre,
            "fkgl": self.fkgl,
            "wstf1": self.wstf1,
            "wstf2": self.wstf2,
            "wstf3": self.wstf3,
            "wstf4": self.wstf4,
        }


def resolve_formula_set(config: EvalConfig) -> FormulaSet:
    lang = config.readability_language
    try:
        return FormulaSet(lang)
    except ValueError:
        raise UnsupportedReadabilityLanguage(
            f"no readability formulas for language {lang!r}; use readability_variant force-en or force-de"
        ) from None


def readability_for(config: EvalConfig, stats: TextStats) -> ReadabilityScores:
    variant = resolve_formula_set(config)
    if variant is FormulaSet.EN:
        return ReadabilityScores(variant, fre=fre_english(stats), fkgl=fkgl(stats))
    w1, w2, w3, w4 = wiener_sachtextformel(stats)
    return ReadabilityScores(variant, fre=fre_german(stats), wstf1=w1, wstf2=w2, wstf3=w3, wstf4=w4)
