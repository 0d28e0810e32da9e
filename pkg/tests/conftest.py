import pytest

from src.exception import CustomException


@pytest.fixture
def rejected():
    """Assert that a call raises CustomException wrapping the given error type."""

    def check(error_type, fn, *args, **kwargs):
        with pytest.raises(CustomException) as excinfo:
            fn(*args, **kwargs)
        assert isinstance(excinfo.value.original, error_type), excinfo.value.original
        return excinfo.value

    return check
