import os
import pathlib

import pytest

REPO = pathlib.Path(__file__).resolve().parent.parent


def property_seed():
    """Seed for every randomized driver; override with QDFS_SEED."""
    return int(os.environ.get("QDFS_SEED", "20240601"))


@pytest.fixture
def configs_dir():
    return REPO / "configs"


@pytest.fixture
def default_config(configs_dir):
    return str(configs_dir / "default.toml")
