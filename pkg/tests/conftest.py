import pytest

from brauer_relations import build_group
from brauer_relations.cli import default_catalog, read_catalog

CATALOG_SPECS = [spec for _, spec in read_catalog(default_catalog())]
SMALL_SPECS = [s for s in CATALOG_SPECS if build_group(s).order <= 24]


@pytest.fixture(scope="session")
def catalog():
    """Every bundled catalog group, built once per session."""
    return {spec: build_group(spec) for spec in CATALOG_SPECS}


@pytest.fixture
def S3():
    return build_group("S3")


@pytest.fixture
def Q8():
    return build_group("Q8")


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[number])
