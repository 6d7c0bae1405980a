import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")

from stabrec.verify import _code as build_cached  # noqa: E402


def pytest_configure(config):
    config.build_cached = build_cached
