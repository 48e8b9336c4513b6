"""Heuristic syllable counting by vowel runs."""
from __future__ import annotations

import functools
import re

VOWELS = {
    "de": "aeiouäöüy",
    "en": "aeiouy",
}
# Fallback for languages without a dedicated vowel set.
DEFAULT_VOWELS = "aeiouyàáâãäåæèéêëìíîïòóôõöøùúûüýÿœ"


@functools.lru_cache(maxsize=None)
def _vowel_run_pattern(language: str) -> re.Pattern:
    vowels = VOWELS.get(language, DEFAULT_VOWELS)
    return re.compile(f"[{vowels}]+")


def count_syllables(word: str, language: str) -> int:
    """Number of maximal vowel runs in ``word``.

    Only letters are considered, so punctuation attached to a token does not
    matter. English drops a final silent ``e`` (``make``) unless the word is a
    single run or ends in ``le`` (``table``). Any word with a letter has at
    least one syllable; tokens without letters have none.
    """
    letters = "".join(ch for ch in word.lower() if ch.isalpha())
    if not letters:
        return 0
    runs = _vowel_run_pattern(language).findall(letters)
    count = len(runs)
    if (
        language == "en"
        and count >= 2
        and letters.endswith("e")
        and runs[-1] == "e"
        and not letters.endswith("le")
    ):
        count -= 1
    return max(count, 1)
