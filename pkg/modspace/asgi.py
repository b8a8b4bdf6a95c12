"""
ASGI entry point for the modspace API.

Served in production by gunicorn with uvicorn workers (see ``render.yaml``).
"""

import os

from django.core.asgi import get_asgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'modspace.settings')

application = get_asgi_application()
