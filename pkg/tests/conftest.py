import json

import pytest

# Outcome per acceptance criterion, filled in by tests marked ``acceptance``.
ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): test that decides acceptance criterion n")


def pytest_runtest_logreport(report):
    if report.when not in ("setup", "call"):
        return
    criteria = [value for key, value in report.user_properties if key == "acceptance"]
    if not criteria:
        return
    n = criteria[0]
    if report.skipped:
        outcome = "SKIP"
    elif report.failed:
        outcome = "FAIL"
    elif report.when == "call":
        outcome = "PASS"
    else:
        return
    # One failing test fails the whole criterion.
    if ACCEPTANCE_RESULTS.get(n) != "FAIL":
        if not (outcome == "PASS" and ACCEPTANCE_RESULTS.get(n) == "SKIP"):
            ACCEPTANCE_RESULTS[n] = outcome


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            item.user_properties.append(("acceptance", int(marker.args[0])))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(f"ACCEPTANCE criterion {n}: {ACCEPTANCE_RESULTS[n]}")


def write_lines(path, lines):
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


@pytest.fixture
def make_corpus(tmp_path):
    """Write a one-test-set manifest and its files; returns the manifest path."""

    def make(name, sources, references, language="de", metadata=None, single_file=False):
        n_refs = len(references)
        directory = tmp_path / "data" / name
        directory.mkdir(parents=True, exist_ok=True)
        write_lines(directory / f"{name}.test.orig", sources)
        if single_file:
            write_lines(directory / f"{name}.test.simp", references[0])
        else:
            for k, stream in enumerate(references):
                write_lines(directory / f"{name}.test.simp.{k}", stream)
        manifest = tmp_path / "data" / "manifest.json"
        entries = json.loads(manifest.read_text(encoding="utf-8")) if manifest.exists() else {}
        entries[name] = {
            "dir": name,
            "language": language,
            "n_refs": n_refs,
            "splits": ["test"],
            "metadata": metadata or {},
        }
        manifest.write_text(json.dumps(entries), encoding="utf-8")
        return manifest

    return make
