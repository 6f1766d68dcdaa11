"""
Utilities Module - Disintegrator

Helper functions and utilities.

Author: Disintegrator Team
Date: 2026-10-17
"""

import logging
from fractions import Fraction
from typing import Iterable, Tuple

logger = logging.getLogger(__name__)


def log_section(title: str, char: str = "=", length: int = 80) -> None:
    """
    Log a formatted section header.

    Args:
        title (str): Section title
        char (str): Character to use for border (default: "=")
        length (int): Total line length (default: 80)
    """
    line = char * length
    logger.info(line)
    logger.info(title.center(length))
    logger.info(line)


def log_subsection(title: str, char: str = "-", length: int = 80) -> None:
    """
    Log a formatted subsection header.

    Args:
        title (str): Subsection title
        char (str): Character to use for border (default: "-")
        length (int): Total line length (default: 80)
    """
    logger.info(char * length)
    logger.info(title)
    logger.info(char * length)


def parse_rational(text) -> Fraction:
    """
    Parse an exact rational from a "p/q" string or an integer.

    Args:
        text: "p/q" string, decimal-free integer string, or int

    Returns:
        Fraction: Normalized rational

    Raises:
        ValueError: If the text is not an exact rational
    """
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    parts = text.strip().split("/")
    if len(parts) > 2:
        raise ValueError(f"malformed rational {text!r}")
    try:
        numerator = int(parts[0])
        denominator = int(parts[1]) if len(parts) == 2 else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}")
    if denominator == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Format a rational as a "p/q" string (always with a denominator)."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def format_interval(bounds: Tuple[Fraction, Fraction]) -> list:
    """Format an enclosure as a ["p/q", "p/q"] pair."""
    lo, hi = bounds
    return [format_rational(lo), format_rational(hi)]


def pair(a: int, b: int) -> int:
    """Cantor pairing of two naturals."""
    return (a + b) * (a + b + 1) // 2 + b


def unpair(n: int) -> Tuple[int, int]:
    """Inverse of :func:`pair`."""
    w = 0
    while (w + 1) * (w + 2) // 2 <= n:
        w += 1
    b = n - w * (w + 1) // 2
    return w - b, b


def bits_to_str(bits: Iterable[int]) -> str:
    """Render a bit sequence as a 0/1 string."""
    return "".join("1" if b else "0" for b in bits)
