import sys

import pytest

from factorbench import build_factorisation_tables, build_sieve


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # replay the acceptance-gate lines outside the capture machinery
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "REPORT_LINES", None)
    if lines:
        terminalreporter.section("acceptance gate")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sieve_small():
    return build_sieve(10_000)


@pytest.fixture(scope="session")
def sieve_big():
    # covers every exhaustive check up to 10^6
    return build_sieve(1_000_000)


@pytest.fixture(scope="session")
def ftables_small():
    # full per-k tables for oracle-scale checks
    return build_factorisation_tables(3000)


@pytest.fixture(scope="session")
def ftables_parity():
    # full per-k tables to 10^5 for the parity identity
    return build_factorisation_tables(100_000)


@pytest.fixture(scope="session")
def ftables_big():
    # f only; the per-k tables would be oversized at this scale
    return build_factorisation_tables(1_000_000, k_max=0, budget=30_000_000)
