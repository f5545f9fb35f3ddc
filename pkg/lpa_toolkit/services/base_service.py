"""
Base service holding the configuration and logger every service shares
"""
from lpa_toolkit import Config
from lpa_toolkit.algebra.field import Field, parse_field
from lpa_toolkit.shared.logging_config import get_project_logger


class BaseService:
    """Configuration, logger and coefficient-field resolution for services"""

    def __init__(self, config: Config | None = None):
        self.logger = get_project_logger(self.__class__.__module__)
        self.config = config or Config()

    def field(self, selector: str | None = None) -> Field:
        """The field named by selector, or the configured default"""
        return parse_field(selector) if selector else self.config.field
