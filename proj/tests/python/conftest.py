import os
import pathlib
import shutil

import pytest

ROOT = pathlib.Path(os.environ.get("COMMLAB_ROOT", pathlib.Path(__file__).parents[2]))


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def data(root):
    return root / "tests" / "data"


@pytest.fixture(scope="session")
def commlab_bin(root):
    path = os.environ.get("COMMLAB_BIN") or shutil.which("commlab")
    if path is None:
        candidate = root / "build" / "commlab"
        if not candidate.exists():
            pytest.skip("commlab executable not found")
        path = str(candidate)
    return path
