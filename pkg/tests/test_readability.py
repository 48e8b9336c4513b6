import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simeval.core import EvalConfig
from simeval.readability import (
    WSTF_CONSTANTS,
    FormulaSet,
    UndefinedReadability,
    UnsupportedReadabilityLanguage,
    fkgl,
    fre_band,
    fre_english,
    fre_german,
    readability_for,
    wiener_sachtextformel,
)
from simeval.segment import TextStats, text_stats

# 1 sentence, 10 words, 15 syllables: ASL 10, ASW 1.5
STATS_10_15 = TextStats(n_sentences=1, n_words=10, n_syllables=15)
# ASL 1, ASW 1
STATS_1_1 = TextStats(n_sentences=10, n_words=10, n_syllables=10, n_monosyllable_words=10)


def test_fre_english():
    assert fre_english(STATS_10_15) == pytest.approx(69.785, abs=1e-9)
    assert fre_english(STATS_1_1) == pytest.approx(121.22, abs=1e-9)


def test_fre_german():
    assert fre_german(STATS_10_15) == pytest.approx(82.25, abs=1e-9)


def test_fkgl():
    assert fkgl(STATS_10_15) == pytest.approx(6.01, abs=1e-9)
    assert fkgl(STATS_1_1) == pytest.approx(-3.4, abs=1e-9)
    assert fkgl(STATS_10_15) == fkgl(STATS_10_15)


def test_wstf1_hand_value():
    # MS 0, SL 10, IW 0, ES 100
    stats = TextStats(n_sentences=1, n_words=10, n_syllables=10, n_monosyllable_words=10)
    assert wiener_sachtextformel(stats)[0] == pytest.approx(-2.473, abs=1e-9)


def test_wstf_monosyllabic_short_words_use_only_sl_and_es():
    stats = TextStats(n_sentences=2, n_words=12, n_syllables=12, n_monosyllable_words=12)
    a, b, c, d, const = WSTF_CONSTANTS[1]
    assert wiener_sachtextformel(stats)[0] == pytest.approx(b * 6 + d * 100 + const, abs=1e-12)


counts = st.integers(1, 400)


@given(sentences=counts, words=counts, extra_syll=st.integers(0, 800), seed=st.integers(0, 10**6))
def test_wstf_against_spreadsheet_recomputation(sentences, words, extra_syll, seed):
    rng = random.Random(seed)
    poly = rng.randint(0, words)
    mono = rng.randint(0, words - poly)
    long_ = rng.randint(0, words)
    stats = TextStats(sentences, words, words + extra_syll, poly, long_, mono)
    ms, sl, iw, es = 100 * poly / words, words / sentences, 100 * long_ / words, 100 * mono / words
    want = (
        0.1935 * ms + 0.1672 * sl + 0.1297 * iw - 0.0327 * es - 0.875,
        0.2007 * ms + 0.1682 * sl + 0.1373 * iw - 2.779,
        0.2963 * ms + 0.1905 * sl - 1.1144,
        0.2744 * ms + 0.2656 * sl - 1.693,
    )
    for got, expected in zip(wiener_sachtextformel(stats), want):
        assert got == pytest.approx(expected, abs=1e-9)


@pytest.mark.parametrize("formula", [fre_english, fre_german, fkgl, wiener_sachtextformel])
def test_undefined_on_empty(formula):
    with pytest.raises(UndefinedReadability):
        formula(TextStats())
    with pytest.raises(UndefinedReadability):
        formula(text_stats("", "de"))


@given(asl=st.integers(1, 60), syll=st.integers(10, 40))
def test_monotonicity(asl, syll):
    # more syllables raise ASW; halving the sentences doubles ASL
    base = TextStats(n_sentences=60, n_words=60 * asl, n_syllables=6 * asl * syll)
    more_syll = TextStats(n_sentences=60, n_words=60 * asl, n_syllables=6 * asl * (syll + 1))
    longer = TextStats(n_sentences=30, n_words=60 * asl, n_syllables=6 * asl * syll)
    for fre in (fre_english, fre_german):
        assert fre(more_syll) < fre(base)
        assert fre(longer) < fre(base)
    assert fkgl(more_syll) > fkgl(base)
    assert fkgl(longer) > fkgl(base)


def test_dispatch_german():
    scores = readability_for(EvalConfig("de"), STATS_10_15)
    assert scores.variant_used is FormulaSet.DE
    assert scores.fre == pytest.approx(82.25)
    assert scores.fkgl is None
    assert all(getattr(scores, f"wstf{i}") is not None for i in range(1, 5))


def test_dispatch_force_english_on_german():
    scores = readability_for(EvalConfig("de", readability_variant="force-en"), STATS_10_15)
    assert scores.variant_used is FormulaSet.EN
    assert scores.fre == pytest.approx(69.785)
    assert scores.fkgl == pytest.approx(6.01)
    assert scores.wstf1 is None


def test_dispatch_english():
    assert readability_for(EvalConfig("en"), STATS_10_15).variant_used is FormulaSet.EN


@pytest.mark.parametrize("lang, variant", list(itertools.product(["en", "de", "fr"], ["auto", "force-en", "force-de"])))
def test_dispatch_totality(lang, variant):
    config = EvalConfig(lang, readability_variant=variant)
    try:
        scores = readability_for(config, STATS_10_15)
    except UnsupportedReadabilityLanguage:
        assert lang == "fr" and variant == "auto"
    else:
        assert scores.fre is not None
        populated = [k for k, v in scores.as_dict().items() if v is not None]
        assert populated in (["fre", "fkgl"], ["fre", "wstf1", "wstf2", "wstf3", "wstf4"])


def test_purity_identical_stats_identical_scores():
    a = text_stats("Der Hund bellt laut.", "de")
    b = text_stats("Die Maus rennt weit.", "de")
    assert a == b
    assert readability_for(EvalConfig("de"), a) == readability_for(EvalConfig("de"), b)


@pytest.mark.parametrize(
    "score, label",
    [(120, "very easy"), (90, "very easy"), (85, "easy"), (65, "standard"), (55, "fairly difficult"),
     (35, "difficult"), (8.55, "very difficult"), (-20, "very difficult")],
)
def test_fre_bands(score, label):
    assert fre_band(score) == label
