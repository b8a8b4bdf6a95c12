import logging

from rest_framework import status
from rest_framework.response import Response
from rest_framework.views import exception_handler

from triples.exceptions import DomainError

logger = logging.getLogger(__name__)


def api_exception_handler(exc, context):
    """
    DRF exception handler: domain errors become 422 responses, everything
    else falls through to the default handler.
    """
    if isinstance(exc, DomainError):
        view = context.get('view')
        logger.info(f"Domain error in {view.__class__.__name__ if view else 'unknown view'}: {exc}")
        return Response(
            {'detail': str(exc), 'code': exc.code},
            status=status.HTTP_422_UNPROCESSABLE_ENTITY
        )
    return exception_handler(exc, context)
