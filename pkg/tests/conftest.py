import pytest
from fastapi.testclient import TestClient

from app.core.config import pin_settings


@pytest.fixture(autouse=True)
def pinned_settings():
    """
    Every test starts from the built-in defaults, whatever the environment holds
    """
    pin_settings()
    yield
    pin_settings()


@pytest.fixture
def client():
    from main import app

    return TestClient(app)
