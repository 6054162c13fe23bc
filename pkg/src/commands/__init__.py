"""
Command-line subcommands.
"""

from .base_command import Command
from .factory import COMMANDS, CommandFactory
