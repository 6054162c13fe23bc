"""
Command Factory

Creates subcommands by name.
"""

import argparse
import logging
from typing import Dict, List, Type

from .base_command import Command
from .dynamics_commands import AttractorCommand, JuliaCommand
from .graph_commands import ClassifyCommand, StatsCommand
from .polynomial_commands import ChebCommand, FactorCommand, IpolyCommand, PowerCommand, ProductCommand
from .search_commands import EnumerateCommand, RealizeCommand, TablesCommand
from .verify_command import VerifyCommand
from ..utils.config import CliConfig, ConfigManager
from ..utils.error_handler import ConfigError

logger = logging.getLogger('indatt.commands.factory')

COMMANDS: Dict[str, Type[Command]] = {
    command.name: command
    for command in (
        IpolyCommand, ProductCommand, PowerCommand, AttractorCommand, ClassifyCommand,
        ChebCommand, TablesCommand, EnumerateCommand, VerifyCommand,
        StatsCommand, JuliaCommand, FactorCommand, RealizeCommand,
    )
}


class CommandFactory:
    """Factory for creating subcommands."""

    @staticmethod
    def command_names() -> List[str]:
        return list(COMMANDS)

    @staticmethod
    def register(subparsers: argparse._SubParsersAction) -> None:
        """
        Add one subparser per command.

        Args:
            subparsers: Result of ArgumentParser.add_subparsers
        """
        for name, command in COMMANDS.items():
            command.add_arguments(subparsers.add_parser(name, help=command.help))

    @staticmethod
    def create_command(name: str, config_manager: ConfigManager, cli_config: CliConfig) -> Command:
        """
        Create the command with the given name.

        Args:
            name (str): Subcommand name (e.g., 'ipoly', 'classify')
            config_manager: Loaded configuration
            cli_config: Validated run-time options

        Returns:
            Command: An instance of the matching command

        Raises:
            ConfigError: If the name is unknown
        """
        command = COMMANDS.get(name)
        if command is None:
            logger.error(f"Unknown command: {name}")
            raise ConfigError(f"Unknown command: {name}", details={"known": list(COMMANDS)})
        return command(config_manager, cli_config)
