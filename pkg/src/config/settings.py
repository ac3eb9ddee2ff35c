"""
Configuration management for the multiqsym kernel and CLI
"""

import logging
import os
from dotenv import load_dotenv
from pydantic import BaseModel, Field

load_dotenv()


class KernelConfig(BaseModel):
    """Limits and defaults of the algebra kernel"""
    max_weight: int = Field(default_factory=lambda: int(os.getenv('MULTIQSYM_MAX_WEIGHT', '10')))
    default_lyndon_order: str = Field(default_factory=lambda: os.getenv('MULTIQSYM_LYNDON_ORDER', 'lex'))


class AppConfig(BaseModel):
    """Application configuration"""
    log_level: str = Field(default_factory=lambda: os.getenv('LOG_LEVEL', 'WARNING'))
    log_directory: str = Field(default_factory=lambda: os.getenv('LOG_DIRECTORY', './logs'))
    log_to_file: bool = Field(default_factory=lambda: os.getenv('LOG_TO_FILE', 'false').lower() in ('1', 'true', 'yes'))


class Config:
    """Main configuration class"""

    def __init__(self):
        self.kernel = KernelConfig()
        self.app = AppConfig()

    def validate(self):
        """Validate critical configuration"""
        if self.kernel.max_weight < 1:
            raise ValueError("MULTIQSYM_MAX_WEIGHT must be a positive integer")

        if self.kernel.default_lyndon_order not in ('lex', 'revlex'):
            raise ValueError("MULTIQSYM_LYNDON_ORDER must be 'lex' or 'revlex'")

        if not isinstance(logging.getLevelName(self.app.log_level.upper()), int):
            raise ValueError(f"LOG_LEVEL {self.app.log_level!r} is not a logging level")

        if self.app.log_to_file:
            os.makedirs(self.app.log_directory, exist_ok=True)

        return True


# Global config instance
config = Config()
