import pathlib

import pytest

REPO = pathlib.Path(__file__).resolve().parent.parent
DATA_CSV = REPO / "data" / "forestfires.csv"
RULES_FILE = REPO / "rules" / "fwi.rules"


@pytest.fixture(scope="session")
def dataset_text() -> str:
    return DATA_CSV.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def rules_text() -> str:
    return RULES_FILE.read_text(encoding="utf-8")
