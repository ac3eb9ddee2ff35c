"""
Logging Configuration
"""

import logging
import os
import sys
from datetime import datetime

from src.config.settings import config

# Create formatters
detailed_formatter = logging.Formatter(
    '%(asctime)s - %(name)s - %(levelname)s - [%(filename)s:%(lineno)d] - %(message)s'
)

simple_formatter = logging.Formatter(
    '%(asctime)s - %(levelname)s - %(message)s'
)


def _file_handlers():
    """Dated detailed log and error log under the configured directory"""
    os.makedirs(config.app.log_directory, exist_ok=True)
    stamp = datetime.now().strftime('%Y%m%d')

    file_handler = logging.FileHandler(os.path.join(config.app.log_directory, f"multiqsym_{stamp}.log"))
    file_handler.setLevel(logging.DEBUG)
    file_handler.setFormatter(detailed_formatter)

    error_handler = logging.FileHandler(os.path.join(config.app.log_directory, f"errors_{stamp}.log"))
    error_handler.setLevel(logging.ERROR)
    error_handler.setFormatter(detailed_formatter)

    return [file_handler, error_handler]


def setup_logger(name, level=None):
    """Setup logger with handlers; stdout stays reserved for results"""
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)

    # Remove existing handlers
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel((level or config.app.log_level).upper())
    console_handler.setFormatter(simple_formatter)
    logger.addHandler(console_handler)

    if config.app.log_to_file:
        for handler in _file_handlers():
            logger.addHandler(handler)

    return logger
