import pathlib

import numpy as np
import pytest

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

# (criterion, description, passed, detail) rows filled in by test_acceptance
ACCEPTANCE_LOG = []


def ginibre(rng, d, cols=None):
    cols = d if cols is None else cols
    return (rng.normal(size=(d, cols)) + 1j * rng.normal(size=(d, cols))) / np.sqrt(2)


def rand_herm(rng, d):
    g = ginibre(rng, d)
    return (g + g.conj().T) / 2


def rand_vec(rng, d):
    return ginibre(rng, d, 1).reshape(-1)


def rand_unitary(rng, d):
    q, r = np.linalg.qr(ginibre(rng, d))
    return q * (np.diag(r) / np.abs(np.diag(r))).conj()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, detail in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {desc} -- {detail}")
