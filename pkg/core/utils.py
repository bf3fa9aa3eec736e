"""
Core utility functions shared by the management commands.
"""
import logging
from typing import Any, Dict, List, Optional, Tuple

from core.exceptions import DomainError

logger = logging.getLogger('core.utils')


def parse_range(text: str) -> Tuple[int, int]:
    """
    Parse an inclusive integer range.

    Accepts ``"1..30"``, ``"-3..3"`` and a single value ``"7"`` (a one-point
    range).

    Args:
        text: Range text from the command line

    Returns:
        (low, high) tuple, both inclusive

    Raises:
        DomainError: If the text is not a range or low > high
    """
    value = (text or '').strip()
    try:
        if '..' in value:
            low_text, high_text = value.split('..', 1)
            low, high = int(low_text), int(high_text)
        else:
            low = high = int(value)
    except ValueError:
        raise DomainError(f"Invalid range '{text}', expected LOW..HIGH")
    if low > high:
        raise DomainError(f"Empty range '{text}': {low} > {high}")
    return low, high


def parse_box(specs: Dict[str, Optional[str]]) -> Dict[str, Tuple[int, int]]:
    """
    Turn ``{'n': '1..30', 'k': None}`` into ``{'n': (1, 30)}``, dropping unset flags.
    """
    box = {}
    for name, text in specs.items():
        if text is None:
            continue
        box[name] = parse_range(text)
    return box


def to_jsonable(value: Any) -> Any:
    """
    Convert exact values into JSON-ready data.

    Polynomials become coefficient lists (index = power); tuples become
    lists; integers stay integers so no value ever passes through float.
    """
    # local import keeps core free of an app dependency at import time
    from exactmath.poly import Poly

    if isinstance(value, Poly):
        return value.to_list()
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    return value


def format_params(params: Dict[str, int]) -> str:
    return ', '.join(f"{name}={value}" for name, value in params.items())


def chunked(items: List[Any], size: int) -> List[List[Any]]:
    """Split a list into consecutive slices of at most ``size`` items."""
    if size < 1:
        raise ValueError(f"Chunk size must be positive, got {size}")
    return [items[i:i + size] for i in range(0, len(items), size)]
