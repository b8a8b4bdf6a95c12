"""
WSGI entry point for the modspace API, for servers without ASGI support.
"""

import os

from django.core.wsgi import get_wsgi_application

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'modspace.settings')

application = get_wsgi_application()
