from django.core.exceptions import ValidationError


class DomainError(ValidationError):
    """
    Well-formed input that violates a mathematical precondition.

    The message names the violated condition; ``code`` is a short machine tag.
    """

    def __init__(self, message, code='domain'):
        super().__init__(message, code=code)

    def __str__(self):
        return self.message


def check_genus(g):
    if g < 2:
        raise DomainError(f"genus must be at least 2, got {g}", code='genus')
    return g
