"""Exceptions raised by `moore_utils`

All of them are ValueErrors, so code that only cares about invalid input can
keep catching ValueError.
"""

__all__ = ['MooreError',
           'SpaceMismatchError',
           'ComponentError',
           'DepthError',
           'ParseError',
           'Diagnostic',
           'MapValidationError',
           'NotInvertibleError',
           'UnsupportedPresentationError',
           'LevelRangeError',
           'ParameterRangeError',
           'EnumerationError']

from dataclasses import dataclass
from typing import Tuple

# === Classes ===


class MooreError(ValueError):
    """Base class of every error raised by the library
    """


class SpaceMismatchError(MooreError):
    """Two objects that should live on the same space do not
    """


class ComponentError(MooreError):
    """A component, cylinder or point does not lie inside its space
    """


class DepthError(MooreError):
    """A refinement depth is too small for the words involved
    """


class ParseError(MooreError):
    """Malformed text, JSON or triplet input
    """


@dataclass(frozen=True)
class Diagnostic:
    """One problem found while validating a chart presentation

    kind is one of 'overlap', 'gap', 'component-mismatch' or
    'face-identity'; charts holds the offending chart indices (may be empty).
    """
    kind: str
    charts: Tuple[int, ...]
    message: str

    def __str__(self):
        return '{0:s} {1:s}: {2:s}'.format(
            self.kind, str(list(self.charts)), self.message)


class MapValidationError(MooreError):
    """A local homeomorphism or presentation failed validation
    """

    def __init__(self, diagnostics):
        self.diagnostics = tuple(diagnostics)
        super().__init__('; '.join(str(d) for d in self.diagnostics))


class NotInvertibleError(MooreError):
    """The chart targets of a map overlap or leave a gap
    """


class UnsupportedPresentationError(MooreError):
    """The presentation is valid, but outside of what a computation supports
    """


class LevelRangeError(MooreError):
    """A simplicial level outside of the truncation was requested
    """


class ParameterRangeError(MooreError):
    """A numeric parameter lies outside of its interval
    """


class EnumerationError(MooreError):
    """The enumeration was asked for an unsupported space or a negative index
    """
