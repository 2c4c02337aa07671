"""
WSGI entry point serving the proof API.

Exposes ``application`` for ``runserver`` and WSGI servers. Tile
evaluation inside requests stays in-process, so any worker model works.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'core.settings')

application = get_wsgi_application()
