"""
Base Command.

Abstract base class for all subcommands.
"""

from abc import ABC, abstractmethod
import argparse
import logging
from typing import Optional, TextIO

from ..graphs.graph import Graph
from ..graphs.graph6 import parse_graph6
from ..polynomials.intpoly import IntPoly, parse_poly
from ..utils.config import CliConfig, ConfigManager
from ..utils.error_handler import log_computation

logger = logging.getLogger('indatt.commands')


class Command(ABC):
    """Abstract base class for subcommands."""

    name = ""
    help = ""

    def __init__(self, config_manager: ConfigManager, cli_config: CliConfig):
        """
        Initialize command with configuration.

        Args:
            config_manager: Loaded configuration file
            cli_config: Validated run-time options
        """
        self.config_manager = config_manager
        self.cli_config = cli_config
        self.command_name = self.__class__.__name__.replace('Command', '').lower()

    @classmethod
    @abstractmethod
    def add_arguments(cls, parser: argparse.ArgumentParser) -> None:
        """
        Declare the subcommand's arguments.

        Args:
            parser: The subcommand's parser
        """
        pass

    @abstractmethod
    def execute(self, args: argparse.Namespace, out: TextIO) -> int:
        """
        Run the subcommand.

        Args:
            args: Parsed arguments
            out: Stream for data output

        Returns:
            int: Exit status
        """
        pass

    def read_graph(self, text: str) -> Graph:
        return parse_graph6(text)

    def read_poly(self, text: str) -> IntPoly:
        return parse_poly(text)

    def write_line(self, out: TextIO, text: str) -> None:
        out.write(text + "\n")

    def log_error(self, message: str, exception: Optional[Exception] = None) -> None:
        """
        Log an error.

        Args:
            message: Error message
            exception: Exception object (optional)
        """
        if exception:
            logger.error(f"{self.command_name}: {message}: {exception}")
            logger.debug("Exception details:", exc_info=True)
        else:
            logger.error(f"{self.command_name}: {message}")

    def log_info(self, message: str) -> None:
        logger.info(f"{self.command_name}: {message}")

    def log_debug(self, message: str) -> None:
        logger.debug(f"{self.command_name}: {message}")

    def log_computation(self, operation: str, **params) -> None:
        """
        Log a computation request.

        Args:
            operation: Operation name
            **params: Operation parameters
        """
        log_computation(self.command_name, operation, **params)
