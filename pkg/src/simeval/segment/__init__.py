"""Tokenization, sentence splitting, casing and syllable counting."""
from .abbreviations import Abbreviations, load_abbreviations
from .sentences import split_sentences
from .stats import TextStats, corpus_text_stats, is_word, text_stats
from .syllables import count_syllables
from .tokenize import TokenSeq, lowercase_tokens, tokenize, tokenize_13a

__all__ = [
    "Abbreviations",
    "TextStats",
    "TokenSeq",
    "corpus_text_stats",
    "count_syllables",
    "is_word",
    "load_abbreviations",
    "lowercase_tokens",
    "split_sentences",
    "text_stats",
    "tokenize",
    "tokenize_13a",
]
