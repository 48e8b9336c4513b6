"""Comparison tables for reports that share one settings fingerprint."""
from __future__ import annotations

import html
import json
from typing import Optional, Sequence

from .evaluate import NOT_APPLICABLE, MetricReport

FORMATS = ("text", "markdown", "html", "json")
ABSENT = "\u2014"


class MixedSettings(ValueError):
    """Reports computed under different settings cannot share a table."""


# (key, header, section) in display order.
COLUMNS = (
    ("bleu", "BLEU", "metrics"),
    ("sari", "SARI", "metrics"),
    ("sari_add", "add", "metrics"),
    ("sari_keep", "keep", "metrics"),
    ("sari_del", "del", "metrics"),
    ("bs_p", "BS-P", "metrics"),
    ("fre", "FRE", "metrics"),
    ("fkgl", "FKGL", "metrics"),
    ("wstf1", "WSTF1", "metrics"),
    ("wstf2", "WSTF2", "metrics"),
    ("wstf3", "WSTF3", "metrics"),
    ("wstf4", "WSTF4", "metrics"),
    ("out_sentence_len", "sent.len", "features"),
    ("out_word_syllables", "syll/word", "features"),
    ("n_splits", "splits", "features"),
    ("compression_ratio", "compr.", "features"),
    ("exact_copy_rate", "copy", "features"),
    ("levenshtein_sim", "lev.sim", "features"),
    ("embedding_cosine", "cos", "features"),
)


def _check(reports: Sequence[MetricReport]) -> None:
    if not reports:
        raise ValueError("nothing to render")
    digests = {r.fingerprint.digest for r in reports}
    if len(digests) > 1:
        settings = sorted({r.fingerprint.human_readable for r in reports})
        raise MixedSettings("reports were computed under different settings: " + " | ".join(settings))
    names = {r.test_set_name for r in reports}
    if len(names) > 1:
        raise MixedSettings(f"reports cover different test sets: {sorted(names)}")


def _value(report: MetricReport, key: str, section: str) -> Optional[float]:
    return (report.metrics if section == "metrics" else report.feature_means).get(key)


def _columns(reports: Sequence[MetricReport]):
    """Drop columns that do not apply to any report (other formula set,
    cosine without a provider); keep failed ones so they show as absent."""
    cols = []
    for key, header, section in COLUMNS:
        if any(_value(r, key, section) is not None for r in reports):
            cols.append((key, header, section))
        elif section == "metrics" and any(
            key in r.absent and not r.absent[key].startswith(NOT_APPLICABLE) for r in reports
        ):
            cols.append((key, header, section))
    return cols


def _cell(report: MetricReport, key: str, section: str) -> str:
    value = _value(report, key, section)
    return ABSENT if value is None else f"{value:.2f}"


def _header_lines(reports: Sequence[MetricReport]) -> list[str]:
    fp = reports[0].fingerprint
    return [
        f"Settings: {fp.human_readable}",
        f"Digest: {fp.digest}",
        f"Test set: {reports[0].test_set_name} (n = {reports[0].n_segments})",
    ]


def _notes(reports: Sequence[MetricReport], cols) -> list[str]:
    shown = {key for key, _, _ in cols}
    notes = []
    for r in reports:
        for key in sorted(r.absent):
            if key in shown:
                notes.append(f"{r.system_name}: {key} {ABSENT} {r.absent[key]}")
    return notes


def _table(reports: Sequence[MetricReport]):
    cols = _columns(reports)
    headers = ["System"] + [h for _, h, _ in cols] + ["FRE band"]
    rows = [
        [r.system_name] + [_cell(r, k, s) for k, _, s in cols] + [r.readability_band or ABSENT]
        for r in reports
    ]
    return cols, headers, rows


def render_text(reports: Sequence[MetricReport]) -> str:
    cols, headers, rows = _table(reports)
    widths = [max(len(row[i]) for row in [headers] + rows) for i in range(len(headers))]

    def fmt(row):
        first = row[0].ljust(widths[0])
        rest = [cell.rjust(w) for cell, w in zip(row[1:], widths[1:])]
        return "  ".join([first] + rest).rstrip()

    lines = _header_lines(reports) + [""]
    lines.append(fmt(headers))
    lines.append("  ".join("-" * w for w in widths))
    lines.extend(fmt(row) for row in rows)
    notes = _notes(reports, cols)
    if notes:
        lines += [""] + notes
    return "\n".join(lines) + "\n"


def _md_escape(cell: str) -> str:
    return cell.replace("|", "\\|")


def render_markdown(reports: Sequence[MetricReport]) -> str:
    cols, headers, rows = _table(reports)
    lines = [f"- {line}" for line in _header_lines(reports)] + [""]
    lines.append("| " + " | ".join(headers) + " |")
    lines.append("|" + "|".join(["---"] + ["---:"] * (len(headers) - 2) + ["---"]) + "|")
    for row in rows:
        lines.append("| " + " | ".join(_md_escape(c) for c in row) + " |")
    notes = _notes(reports, cols)
    if notes:
        lines += [""] + [f"- {_md_escape(n)}" for n in notes]
    return "\n".join(lines) + "\n"


def render_html(reports: Sequence[MetricReport]) -> str:
    cols, headers, rows = _table(reports)
    esc = html.escape
    out = [
        "<!DOCTYPE html>",
        '<html><head><meta charset="utf-8"><title>Evaluation report</title></head><body>',
        '<div class="settings">',
    ]
    out += [f"<p>{esc(line)}</p>" for line in _header_lines(reports)]
    out.append("</div>")
    out.append("<table>")
    out.append("<tr>" + "".join(f"<th>{esc(h)}</th>" for h in headers) + "</tr>")
    for row in rows:
        out.append("<tr>" + "".join(f"<td>{esc(c)}</td>" for c in row) + "</tr>")
    out.append("</table>")
    notes = _notes(reports, cols)
    if notes:
        out.append("<ul>" + "".join(f"<li>{esc(n)}</li>" for n in notes) + "</ul>")
    out.append("</body></html>")
    return "\n".join(out) + "\n"


def render_json(reports: Sequence[MetricReport]) -> str:
    fp = reports[0].fingerprint
    doc = {
        "fingerprint": {"human_readable": fp.human_readable, "digest": fp.digest},
        "test_set": reports[0].test_set_name,
        "systems": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False) + "\n"


_RENDERERS = {
    "text": render_text,
    "markdown": render_markdown,
    "html": render_html,
    "json": render_json,
}


def render_report(reports: Sequence[MetricReport], format: str = "text") -> bytes:
    if format not in _RENDERERS:
        raise ValueError(f"unknown format {format!r} (expected one of: {', '.join(FORMATS)})")
    _check(reports)
    return _RENDERERS[format](reports).encode("utf-8")
