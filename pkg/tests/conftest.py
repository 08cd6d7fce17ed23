import pathlib

import pytest

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_NAMES = sorted(path.stem for path in FIXTURES.glob("*.json"))


@pytest.fixture
def fixtures_dir() -> pathlib.Path:
    return FIXTURES


def fixture_path(name: str) -> pathlib.Path:
    return FIXTURES / f"{name}.json"
