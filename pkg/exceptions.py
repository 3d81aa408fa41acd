import logging

from django.core.management.base import CommandError

logger = logging.getLogger(__name__)


class VknotError(Exception):
    """Base class for every domain error raised by the vknot apps."""

    pass


def root_exception_handler(exc, command=None):
    """
    Standardizes domain errors for the command line: a VknotError becomes a
    CommandError carrying the error name and exit status 1.
    Anything else is logged with its traceback and re-raised untouched.
    """
    name = exc.__class__.__name__

    if isinstance(exc, VknotError):
        logger.warning(f"{command or 'vknot'} failed with {name}: {exc}")
        return CommandError(f"{name}: {exc}", returncode=1)

    # unexpected exceptions (KeyError, numpy errors ...) are bugs, keep the traceback
    logger.exception(f"Unhandled exception in {command or 'vknot'}", exc_info=exc)
    raise exc
