"""Miscellaneous functions
"""
__all__ = ['fraction_to_string',
           'string_to_fraction',
           'zigzag_integer',
           'flip_bit']

import logging

from fractions import Fraction

from moore_utils.errors import ParseError

# === Set up logging
logger = logging.getLogger(__name__)

# === Functions ===


def fraction_to_string(value):
    """Exact rational as a 'p/q' string. Integers are written as 'p/1', so the
    format is the same for every coordinate.

    Parameters
    ----------
    value: Fraction or int
        The rational to format

    Returns
    -------
    str

    """
    value = Fraction(value)
    return '{0:d}/{1:d}'.format(value.numerator, value.denominator)


def string_to_fraction(rational_string):
    """Parse a 'p/q' (or 'p') string into an exact Fraction

    Parameters
    ----------
    rational_string: str
        The string to parse

    Returns
    -------
    Fraction

    """
    try:
        return Fraction(str(rational_string).strip())
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            "Invalid rational '{0:s}'".format(str(rational_string)))


def zigzag_integer(index):
    """Map 0, 1, 2, 3, 4, ... to 0, 1, -1, 2, -2, ...

    Parameters
    ----------
    index: int
        A nonnegative integer

    Returns
    -------
    int

    """
    if index % 2 == 1:
        return (index + 1) // 2
    return -(index // 2)


def flip_bit(bit):
    """The other one of '0' and '1'
    """
    return '1' if bit == '0' else '0'


# === MAIN ===
if __name__ == "__main__":
    pass
