"""Evaluation runs, report rendering and the command line."""
from .evaluate import SRC2SRC, TGT2TGT, MetricReport, evaluate_system, identity_baselines
from .render import MixedSettings, render_report

__all__ = [
    "MetricReport",
    "MixedSettings",
    "SRC2SRC",
    "TGT2TGT",
    "evaluate_system",
    "identity_baselines",
    "render_report",
]
