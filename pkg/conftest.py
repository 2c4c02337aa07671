"""Pytest wiring: configure Django and a test database, as `manage.py test` does."""
import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')
django.setup()

from django.test.utils import get_runner  # noqa: E402
from django.conf import settings  # noqa: E402

_runner = None
_old_config = None


def pytest_sessionstart(session):
    global _runner, _old_config
    _runner = get_runner(settings)(verbosity=0, interactive=False)
    _runner.setup_test_environment()
    _old_config = _runner.setup_databases()


def pytest_sessionfinish(session, exitstatus):
    if _runner is not None:
        _runner.teardown_databases(_old_config)
        _runner.teardown_test_environment()
