from __future__ import annotations

import contextlib

import pytest

from rouge2.data import data_path
from rouge2.synonyms import load_dictionary
from rouge2.text import reference_stopwords, tokenize
from rouge2.topics import load_tagged

PHONE = data_path("phone")

_acceptance: list[tuple[str, str, bool, str]] = []


def _read(*parts):
    return PHONE.joinpath(*parts).read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def phone_dir():
    return PHONE


@pytest.fixture(scope="session")
def texts():
    """Plain phone-review summaries keyed ref / sys1 / sys2."""
    return {
        "ref": tokenize(_read("references", "phone.1.txt")),
        "sys1": tokenize(_read("systems", "phone_sys1.txt")),
        "sys2": tokenize(_read("systems", "phone_sys2.txt")),
    }


@pytest.fixture(scope="session")
def tagged():
    return {
        "ref": load_tagged(PHONE / "references" / "phone.1.tag"),
        "sys1": load_tagged(PHONE / "systems" / "phone_sys1.tag"),
        "sys2": load_tagged(PHONE / "systems" / "phone_sys2.tag"),
    }


@pytest.fixture(scope="session")
def stopwords():
    return reference_stopwords()


@pytest.fixture(scope="session")
def display_screen():
    return load_dictionary(PHONE / "synonyms.txt")


@pytest.fixture
def criterion():
    """Record an acceptance criterion's outcome for the end-of-run summary."""

    @contextlib.contextmanager
    def record(number: str, name: str):
        try:
            yield
        except BaseException as exc:
            _acceptance.append((number, name, False, f"{type(exc).__name__}: {exc}".splitlines()[0]))
            raise
        _acceptance.append((number, name, True, ""))

    return record


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, detail in sorted(_acceptance, key=lambda r: int(r[0])):
        line = f"criterion {number} ({name}): {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(line + (f"  {detail}" if detail else ""))
