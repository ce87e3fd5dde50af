import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from hopfcat import fixtures as fx
from hopfcat.scalars import QQ

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "..", "fixtures")


@pytest.fixture(scope="session")
def hopf_fixtures():
    return fx.hopf_fixtures(QQ)


@pytest.fixture(scope="session")
def fixture_dir():
    return FIXTURE_DIR
