"""``key = value`` configuration files mirroring the command-line flags."""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import List, Tuple

from ..errors import LightconeError

TRUE_VALUES = ("true", "yes", "on", "1")
FALSE_VALUES = ("false", "no", "off", "0")


class UsageError(LightconeError):
    """Exception raised for invalid or missing command-line arguments."""

    pass


class ConfigFileError(LightconeError):
    """Exception raised when a configuration file cannot be applied."""

    def __init__(self, errors: List[str]) -> None:
        super().__init__("\n".join(errors))
        self.errors = errors


def read_config_file(filepath: str | Path) -> List[Tuple[int, str, str]]:
    """Read ``key = value`` lines as (line number, flag name, value).

    Keys are flag names without leading dashes; ``_`` and ``-`` are
    interchangeable. ``#`` starts a comment and blank lines are skipped.

    Raises:
        FileNotFoundError: If the file doesn't exist
        ConfigFileError: Listing every line without an ``=``
    """
    path = Path(filepath)
    if not path.exists():
        raise FileNotFoundError(f"Config file not found: {filepath}")

    entries: List[Tuple[int, str, str]] = []
    errors: List[str] = []
    for line_number, raw in enumerate(path.read_text().splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        key, separator, value = content.partition("=")
        if not separator or not key.strip():
            errors.append(f"{path}: line {line_number}: expected key = value")
            continue
        name = key.strip().lstrip("-").replace("_", "-")
        entries.append((line_number, name, value.strip()))

    if errors:
        raise ConfigFileError(errors)
    return entries


def config_tokens(
    entries: List[Tuple[int, str, str]], parser: argparse.ArgumentParser
) -> List[str]:
    """Translate config entries into argument tokens for ``parser``.

    Tokens are placed before the real command-line arguments, so a flag given
    on the command line wins over the file.

    Raises:
        ConfigFileError: For unknown keys, the config key itself, or boolean
            flags with a value that is neither true nor false
    """
    actions = {
        option: action
        for action in parser._actions
        for option in action.option_strings
        if option.startswith("--")
    }
    tokens: List[str] = []
    errors: List[str] = []
    for line_number, name, value in entries:
        flag = f"--{name}"
        action = actions.get(flag)
        if action is None or name in ("config", "help"):
            errors.append(f"line {line_number}: unknown key '{name}'")
            continue
        if action.nargs == 0:
            lowered = value.lower()
            if lowered in TRUE_VALUES:
                tokens.append(flag)
            elif lowered not in FALSE_VALUES:
                errors.append(
                    f"line {line_number}: '{name}' takes true or false, got {value!r}"
                )
            continue
        if action.nargs in ("+", "*"):
            tokens.append(flag)
            tokens.extend(value.split())
            continue
        tokens.append(f"{flag}={value}")

    if errors:
        raise ConfigFileError(errors)
    return tokens
