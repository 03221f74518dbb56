from datetime import datetime
from os.path import isfile
from pytz import timezone
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

from exceptions import InvalidSettingsFile


# Built-in defaults, overridden by settings.yml and then by command line flags.
# Audit magnitudes default to the even numbers 2, 4, ... with one value per candidate pair.
DEFAULT_SETTINGS = {
    "logging": {
        "timezone": "utc",
        "level": "WARNING",
        "directory": "logs"
    },
    "tally": {
        "method": "mwsl"
    },
    "audit": {
        "candidates": 4,
        "mode": "exhaustive",
        "magnitudes": None,
        "samples": 100000,
        "seed": 1,
        "workers": 1,
        "chunk_size": 48,
        "stratum_size": 25,
        "methods": ["copeland", "minimax", "mwsl", "variant_local_min"],
        "axioms": ["ProximityCondorcet", "IID", "WinMonotonicity", "WinDominance", "RareTies"],
        "out": "audit_report"
    }
}


def get_current_date_and_time(timezone_string: str):
    """
    Get the current date and time in the specified timezone.

    Parameters:
        timezone_string (str): The timezone to be used.

    Returns:
        str: The current date and time in the specified timezone.
    """

    # Get current date and time and return it formatted
    current_timestamp = datetime.now(tz=timezone(timezone_string))
    return current_timestamp.strftime("%Y-%m-%d_%H-%M-%S.%f")


def parameter_string_to_tupled_list(parameter_string: str):
    """
    Converts a string of comma seperated values to a list inside a tuple.
    Making the data read-only. Surrounding whitespace and empty values are dropped.

    Parameters:
        parameter_string (str): The string to convert.

    Returns:
        tuple: The converted tuple.
    """

    if not parameter_string:
        return ()

    return tuple(value.strip() for value in parameter_string.split(",") if value.strip())


def strip_comment(line: str):
    """
    Remove a '#' comment and surrounding whitespace from a line of a text format.

    Parameters:
        line (str): The raw line.

    Returns:
        str: The content of the line, possibly empty.
    """

    return line.split("#", 1)[0].strip()


def merge_settings(defaults: dict, overrides: dict):
    """
    Merge two settings dictionaries, section by section.

    Parameters:
        defaults (dict): The settings to start from.
        overrides (dict): The settings that take precedence.

    Returns:
        dict: A new dictionary with the merged settings.
    """

    merged = {}
    for key, value in defaults.items():
        override = overrides.get(key)

        # Merge nested sections, replace plain values
        if isinstance(value, dict) and isinstance(override, dict):
            merged[key] = merge_settings(value, override)
        elif key in overrides and override is not None:
            merged[key] = override
        else:
            merged[key] = value

    return merged


def load_settings(path: str = "settings.yml"):
    """
    Load the settings file and merge it with the built-in defaults.

    A missing file is not an error, the defaults are returned instead.

    Parameters:
        path (str): The path to the YAML settings file.

    Returns:
        dict: The settings organised by section.

    Raises:
        InvalidSettingsFile: The file exists but doesn't contain a YAML mapping.
    """

    # Fall back to the defaults when there is no settings file
    if path is None or not isfile(path):
        return merge_settings(DEFAULT_SETTINGS, {})

    # Read the file
    try:
        with open(path, "r", encoding="utf-8") as file:
            data = YAML(typ="safe").load(file)
    except YAMLError:
        raise InvalidSettingsFile(path)

    # An empty file counts as no overrides
    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise InvalidSettingsFile(path)

    return merge_settings(DEFAULT_SETTINGS, data)
