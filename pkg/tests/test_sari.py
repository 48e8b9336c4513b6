import itertools
import json
import random
from fractions import Fraction
from pathlib import Path

import pytest

from oracles import brute_sari
from simeval.ngram import AlignmentError, corpus_sari, sentence_sari, sentence_saris

FIXTURES = Path(__file__).parent / "fixtures"
_SEQS = [list(p) for n in range(6) for p in itertools.product("xyz", repeat=n)]


def random_tiny(rng, max_refs=2):
    return rng.choice(_SEQS), rng.choice(_SEQS), [rng.choice(_SEQS) for _ in range(rng.randint(1, max_refs))]


def test_all_identical():
    s = "a b c d".split()
    b = sentence_sari(s, s, [s])
    assert b.f1_keep == (1, 1, 1, 1)
    assert b.f1_add == (0, 0, 0, 0)
    assert b.precision_del == (0, 0, 0, 0)
    assert b.sari == Fraction(100, 3)


@pytest.mark.parametrize("seed", range(20))
def test_matches_brute_force(seed):
    rng = random.Random(seed)
    src, out, refs = rng.choice(_SEQS), rng.choice(_SEQS), [rng.choice(_SEQS) for _ in range(rng.randint(1, 3))]
    b = sentence_sari(src, out, refs)
    assert (b.sari, b.add, b.keep, b.delete) == brute_sari(src, out, refs)


def test_matches_reference_implementation_fixtures():
    cases = json.loads((FIXTURES / "sari_reference.json").read_text(encoding="utf-8"))
    assert cases[0]["sari"] == pytest.approx(26.8278, abs=1e-4)
    for case in cases:
        b = sentence_sari(case["source"].split(), case["output"].split(), [r.split() for r in case["references"]])
        assert float(b.sari) == pytest.approx(case["sari"], abs=1e-6)
        assert float(b.add) == pytest.approx(case["add"], abs=1e-6)
        assert float(b.keep) == pytest.approx(case["keep"], abs=1e-6)
        assert float(b.delete) == pytest.approx(case["delete"], abs=1e-6)


def test_component_ranges():
    rng = random.Random(3)
    for _ in range(500):
        b = sentence_sari(*random_tiny(rng))
        for part in b.f1_add + b.f1_keep + b.precision_del:
            assert 0 <= part <= 1
        assert 0 <= b.sari <= 100


def test_corpus_of_identical_triples_equals_sentence_value():
    src, out, refs = "a b c d e".split(), "a b x d".split(), ["a b d e".split()]
    single = float(sentence_sari(src, out, refs).sari)
    assert corpus_sari([src] * 4, [out] * 4, [refs] * 4) == pytest.approx(single, abs=1e-12)
    assert corpus_sari([src], [out], [refs]) == single


def test_corpus_order_invariant():
    rng = random.Random(11)
    triples = [random_tiny(rng) for _ in range(12)]
    unzip = lambda ts: (list(t[0] for t in ts), list(t[1] for t in ts), list(t[2] for t in ts))
    score = corpus_sari(*unzip(triples))
    rng.shuffle(triples)
    assert corpus_sari(*unzip(triples)) == score


def test_alignment_errors():
    with pytest.raises(AlignmentError):
        sentence_saris([["a"]], [["a"], ["b"]], [[["a"]]])
    with pytest.raises(ValueError):
        sentence_sari(["a"], ["a"], [])
