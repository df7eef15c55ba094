import logging
from typing import Any, Optional

from bottsamelson.compute.command_map import COMMAND_MAP, CommandHandler
from bottsamelson.model.RunConfig import RunConfig


def get_command_by_name(name: str) -> CommandHandler:
    """
    Return the handler of a subcommand.

    Args:
        name (str): Subcommand name.

    Returns:
        CommandHandler: Function computing the JSON result from a RunConfig.

    Raises:
        ValueError: If the command is unknown.
    """
    try:
        return COMMAND_MAP[name]
    except KeyError as e:
        raise ValueError(f"No command named {name!r}") from e


def run_command(config: RunConfig, logger: Optional[logging.Logger] = None) -> Any:
    """Compute the result of ``config.command`` without touching the cache."""
    logger = logger or logging.Logger("default")
    return get_command_by_name(config.command)(config, logger)
