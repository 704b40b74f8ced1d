from .cli_config import CliConfig
from .command_result import CommandResult

__all__ = [
    'CliConfig',
    'CommandResult'
]
