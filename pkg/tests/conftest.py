import pytest

from flatbeltrami.scheme import Scheme, SchemeKind
from flatbeltrami.settings import load_settings


@pytest.fixture
def rosay():
    return Scheme(SchemeKind.ROSAY)


@pytest.fixture
def loglog():
    return Scheme(SchemeKind.LOGLOG)


@pytest.fixture
def settings_cache():
    load_settings.cache_clear()
    yield load_settings
    load_settings.cache_clear()
