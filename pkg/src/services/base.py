"""
Shared service plumbing
"""

import functools
import logging

from src.algebra.errors import MultiQSymError

logger = logging.getLogger(__name__)


def logged(action: str):
    """Log a service call: INFO with a check mark on success, rejection or error otherwise, then re-raise"""
    def decorate(method):
        @functools.wraps(method)
        def run(self, *args, **kwargs):
            log = logging.getLogger(type(self).__module__)
            try:
                result = method(self, *args, **kwargs)
            except MultiQSymError as e:
                log.info(f"✗ {action} rejected: {str(e)}")
                raise
            except Exception as e:
                log.error(f"Error during {action}: {str(e)}")
                raise
            log.info(f"✓ {action}")
            return result
        return run
    return decorate
