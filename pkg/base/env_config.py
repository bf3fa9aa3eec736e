"""
Environment configuration utility for the catalan-jacobsthal toolkit.
Import this module anywhere in the project to access environment variables
without going through Django settings (e.g. from plain scripts).
"""

import os
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()


def get_env_variable(var_name, default=None):
    """
    Get an environment variable with optional default value.

    Args:
        var_name (str): Name of the environment variable
        default: Default value if variable is not found

    Returns:
        str: Environment variable value or default
    """
    return os.getenv(var_name, default)


def get_int_env_variable(var_name, default):
    """
    Get an integer environment variable.

    Args:
        var_name (str): Name of the environment variable
        default (int): Value used when the variable is not set

    Returns:
        int: Parsed value

    Raises:
        ValueError: If the variable is set but is not an integer
    """
    raw = os.getenv(var_name)
    if raw is None or raw == '':
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"Environment variable '{var_name}' must be an integer, got '{raw}'")

