import json

import pytest

from simeval.core import EvalConfig
from simeval.corpus import SystemOutput, TestSet, TestSetMetadata
from simeval.embed import StubProvider, UnknownSentence
from simeval.ngram import AlignmentError
from simeval.report import SRC2SRC, TGT2TGT, MixedSettings, evaluate_system, identity_baselines, render_report
from simeval.report.render import ABSENT
from toydata import TOY_REFS, TOY_SOURCES, TOY_SYSTEM

TOY = TestSet("toy", "de", TestSetMetadata(2), tuple(TOY_SOURCES), tuple(zip(*TOY_REFS)))
SYSTEM = SystemOutput("sys", "toy", tuple(TOY_SYSTEM))
DE = EvalConfig("de")


def test_metrics_in_range():
    report = evaluate_system(TOY, SYSTEM, DE)
    m = report.metrics
    assert 0 <= m["bleu"] <= 100 and 0 <= m["sari"] <= 100
    assert m["sari"] == pytest.approx((m["sari_add"] + m["sari_keep"] + m["sari_del"]) / 3)
    assert m["fkgl"] is None and "fkgl" in report.absent
    assert m["wstf1"] is not None
    assert report.absent["bs_p"] == "no embedding provider configured"
    assert report.n_segments == 3
    assert report.readability_band is not None


def test_identity_baselines():
    src2src, tgt2tgt = identity_baselines(TOY, DE)
    assert src2src.system_name == SRC2SRC and tgt2tgt.system_name == TGT2TGT
    assert tgt2tgt.metrics["bleu"] == 100.0
    assert src2src.feature_means["exact_copy_rate"] == 1.0
    assert src2src.metrics["sari_add"] == 0.0


def test_tgt2tgt_single_reference():
    single = TestSet("one", "de", TestSetMetadata(1), tuple(TOY_SOURCES), tuple((r,) for r in TOY_REFS[0]))
    assert identity_baselines(single, DE)[1].metrics["bleu"] == 100.0


def test_alignment_checks():
    with pytest.raises(AlignmentError):
        evaluate_system(TOY, SystemOutput("s", "other", tuple(TOY_SYSTEM)), DE)
    with pytest.raises(AlignmentError):
        evaluate_system(TOY, SystemOutput("s", "toy", ("a",)), DE)


def test_provider_must_match_config():
    with pytest.raises(ValueError):
        evaluate_system(TOY, SYSTEM, DE, StubProvider(0))
    report = evaluate_system(TOY, SYSTEM, DE.replace(embedding_model_id="stub-0"), StubProvider(0))
    assert 0 < report.metrics["bs_p"] <= 1
    assert report.feature_means["embedding_cosine"] is not None


def test_bertscore_independent_of_tokenizer():
    values = set()
    for tok in ("none", "13a", "lang-rules"):
        config = EvalConfig("de", tok, embedding_model_id="stub-0")
        values.add(evaluate_system(TOY, SYSTEM, config, StubProvider(0)).metrics["bs_p"])
    assert len(values) == 1


class BrokenProvider(StubProvider):
    def embed(self, text):
        if text == TOY_SYSTEM[1]:
            raise UnknownSentence("gone")
        return super().embed(text)


def test_provider_failure_marks_absent():
    config = DE.replace(embedding_model_id="stub-0")
    report = evaluate_system(TOY, SYSTEM, config, BrokenProvider(0))
    assert report.metrics["bs_p"] is None
    assert report.absent["bs_p"].startswith("embedding provider failed")
    assert report.errors
    assert report.metrics["bleu"] is not None
    text = render_report([report], "text").decode()
    assert "BS-P" in text and ABSENT in text and "embedding provider failed" in text


def test_lowercase_changes_ngram_scores_only():
    upper = TestSet("u", "de", TestSetMetadata(1), ("Der Hund bellt laut heute.",), (("DER HUND BELLT LAUT HEUTE.",),))
    out = SystemOutput("s", "u", ("Der Hund bellt laut heute.",))
    cased = evaluate_system(upper, out, DE)
    lowered = evaluate_system(upper, out, DE.replace(lowercase=True))
    assert lowered.metrics["bleu"] == 100.0 and cased.metrics["bleu"] < 100.0
    assert cased.metrics["fre"] == lowered.metrics["fre"]


def test_segment_scores():
    report = evaluate_system(TOY, SYSTEM, DE, segment_scores=True)
    assert [s["index"] for s in report.segments] == [0, 1, 2]
    assert report.to_dict()["segments"][2]["features"]["exact_copy"] is True
    assert "segments" not in evaluate_system(TOY, SYSTEM, DE).to_dict()


def test_empty_output_lines_are_scored():
    out = SystemOutput("s", "toy", ("", TOY_SYSTEM[1], TOY_SYSTEM[2]))
    report = evaluate_system(TOY, out, DE.replace(embedding_model_id="stub-0"), StubProvider(0))
    assert report.metrics["bs_p"] is not None


def test_unsupported_readability_language_is_absent():
    french = TestSet("fr", "fr", TestSetMetadata(1), ("Il est venu.",), (("Il vint.",),))
    report = evaluate_system(french, SystemOutput("s", "fr", ("Il est venu.",)), EvalConfig("fr"))
    assert report.metrics["fre"] is None and "fre" in report.absent
    forced = evaluate_system(french, SystemOutput("s", "fr", ("Il est venu.",)), EvalConfig("fr", readability_variant="force-en"))
    assert forced.metrics["fre"] is not None


# --- rendering ------------------------------------------------------------------

def test_json_document():
    report = evaluate_system(TOY, SYSTEM, DE)
    doc = json.loads(render_report([report], "json"))
    assert doc["fingerprint"]["human_readable"] == "lang=de;tok=lang-rules;lc=false;emb=none;read=auto"
    assert doc["systems"][0]["metrics"]["bleu"] == report.metrics["bleu"]


@pytest.mark.parametrize("fmt", ["text", "markdown", "html", "json"])
def test_render_deterministic(fmt):
    a = render_report(list(identity_baselines(TOY, DE)), fmt)
    b = render_report(list(identity_baselines(TOY, DE)), fmt)
    assert a == b
    assert isinstance(a, bytes)


def test_mixed_settings_refused():
    a = evaluate_system(TOY, SYSTEM, EvalConfig("de", "none"))
    b = evaluate_system(TOY, SYSTEM, EvalConfig("de", "13a"))
    with pytest.raises(MixedSettings):
        render_report([a, b], "text")


def test_mixed_test_sets_refused():
    other = TestSet("other", "de", TOY.metadata, TOY.sources, TOY.references)
    a = evaluate_system(TOY, SYSTEM, DE)
    b = evaluate_system(other, SystemOutput("sys", "other", SYSTEM.outputs), DE)
    with pytest.raises(MixedSettings):
        render_report([a, b], "json")


def test_render_errors():
    with pytest.raises(ValueError):
        render_report([], "text")
    with pytest.raises(ValueError):
        render_report([evaluate_system(TOY, SYSTEM, DE)], "pdf")


@pytest.mark.parametrize(
    "change",
    [{"tokenizer": "13a"}, {"lowercase": True}, {"embedding_model_id": "m"}, {"readability_variant": "force-en"}],
)
def test_every_config_change_shows_in_header(change):
    base = render_report([evaluate_system(TOY, SYSTEM, DE)], "text").decode().splitlines()[0]
    config = DE.replace(**change)
    provider = StubProvider(0) if "embedding_model_id" in change else None
    if provider:
        config = config.replace(embedding_model_id=provider.model_id)
    changed = render_report([evaluate_system(TOY, SYSTEM, config, provider)], "text").decode().splitlines()[0]
    assert base.startswith("Settings: ") and changed != base


def test_not_applicable_columns_dropped_and_absent_noted():
    text = render_report([evaluate_system(TOY, SYSTEM, DE)], "text").decode()
    header = text.splitlines()[4]
    assert "FKGL" not in header and "WSTF1" in header
    # an unconfigured metric stays visible as absent, with its reason
    assert "BS-P" in header
    assert f"sys: bs_p {ABSENT} no embedding provider configured" in text


def test_markdown_and_html_shapes():
    reports = list(identity_baselines(TOY, DE))
    md = render_report(reports, "markdown").decode()
    assert "| System |" in md and TGT2TGT in md
    html = render_report(reports, "html").decode()
    assert html.startswith("<!DOCTYPE html>") and "<table>" in html
