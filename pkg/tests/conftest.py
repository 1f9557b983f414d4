import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from reqconflict import load_conllu, loads_conllu

FIXTURES = Path(__file__).parent / "fixtures"


def build(req_id: str, text: str, rows: list[str]):
    """Compact sentence builder: each row is
    'index surface lemma upos xpos head relation [misc]'."""
    lines = [f"# req_id = {req_id}", f"# text = {text}"]
    for row in rows:
        parts = row.split()
        misc = parts[7] if len(parts) > 7 else "_"
        idx, surface, lemma, upos, xpos, head, rel = parts[:7]
        lines.append("\t".join([idx, surface, lemma, upos, xpos, "_",
                                head, rel, "_", misc]))
    return loads_conllu("\n".join(lines) + "\n")[0]


@pytest.fixture(scope="session")
def paper8():
    return load_conllu(FIXTURES / "uav_paper8.conllu")


@pytest.fixture(scope="session")
def paper8_by_id(paper8):
    return {s.req_id: s for s in paper8}


@pytest.fixture(scope="session")
def solar12():
    return load_conllu(FIXTURES / "solar12.conllu")


@pytest.fixture(scope="session")
def solar_eim():
    return load_conllu(FIXTURES / "solar_eim.conllu")
