from pathlib import Path

import pytest

REPO = Path(__file__).resolve().parent.parent
SPACES = REPO / "spaces"


@pytest.fixture(scope="session")
def spaces_dir() -> Path:
    return SPACES


@pytest.fixture(scope="session")
def demo_space():
    from solsel.space import load_space

    return load_space(SPACES / "demo_small.json")


@pytest.fixture(scope="session")
def flowheat_space():
    from solsel.space import load_space

    return load_space(SPACES / "flowheat_full.json")


@pytest.fixture(scope="session")
def synthetic_space():
    from solsel.space import load_space

    return load_space(SPACES / "synthetic.json")
