import pytest

from app.utils import cache


@pytest.fixture(autouse=True)
def fresh_memo():
    cache.clear()
    yield
    cache.clear()
