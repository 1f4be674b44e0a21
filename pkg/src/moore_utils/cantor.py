"""Cantor set X = {0,1}^N with its cylinder sets and clopen sets, plus finite
discrete components.

Words are plain strings over '01'; the empty word stands for the whole
component. Points are eventually periodic sequences written as 'u(v)', i.e. the
preperiod u followed by infinitely many copies of the period v.

A clopen set is stored per component as a sorted, prefix-free and fully merged
family of words (or a sorted tuple of indices for a discrete component), so
structural equality is the same as equality of the sets.
"""

__all__ = ['WordRelation',
           'ClopenOp',
           'CantorPoint',
           'Cylinder',
           'ClopenSet',
           'CantorComponent',
           'DiscreteComponent',
           'Space',
           'SpacePoint',
           'check_word',
           'word_relation',
           'parse_point',
           'point_in_cylinder',
           'normalize_words',
           'normalize_clopen',
           'subtract_words',
           'intersect_words',
           'clopen_algebra',
           'refine_words',
           'refine_to_depth',
           'separating_point',
           'cantor_space',
           'discrete_space',
           'EMPTY_SPACE']

import logging
import itertools
import re

from dataclasses import dataclass
from enum import Enum
from typing import Tuple, Union

from moore_utils.misc import flip_bit
from moore_utils.errors import ComponentError, DepthError, ParseError, \
    SpaceMismatchError

# ===Import globals
from moore_utils.globals import _BITS, _CANTOR_KIND, _DISCRETE_KIND, \
    _CANTOR_COMPONENT_NAME

# === Set up logging
logger = logging.getLogger(__name__)

_POINT_PATTERN = re.compile(r'^([01]*)\(([01]+)\)$')

# === Classes ===


class WordRelation(Enum):
    """How the cylinders [u] and [v] of two words are related
    """
    EQUAL = 'Equal'
    U_PREFIX_OF_V = 'UPrefixOfV'
    V_PREFIX_OF_U = 'VPrefixOfU'
    DISJOINT = 'Disjoint'


class ClopenOp(Enum):
    """Boolean operations supported by `clopen_algebra`
    """
    UNION = 'union'
    INTERSECTION = 'intersection'
    DIFFERENCE = 'difference'
    COMPLEMENT = 'complement'


@dataclass(frozen=True)
class CantorPoint:
    """Eventually periodic point preperiod . period . period ...

    The representation is brought to canonical form on construction: the
    period is primitive and the preperiod is as short as possible, so two
    points are equal iff they are the same sequence.
    """
    preperiod: str
    period: str

    def __post_init__(self):
        preperiod = check_word(self.preperiod)
        period = check_word(self.period)

        if period == '':
            raise ParseError('The period of a point has to be nonempty!')

        period = _primitive_root(period)

        # Move trailing copies of the period tail into the periodic part
        while preperiod != '' and preperiod[-1] == period[-1]:
            preperiod = preperiod[:-1]
            period = period[-1] + period[:-1]

        object.__setattr__(self, 'preperiod', preperiod)
        object.__setattr__(self, 'period', period)

    def __str__(self):
        return '{0:s}({1:s})'.format(self.preperiod, self.period)

    def bit(self, i):
        """The i-th bit (0-indexed) of the sequence
        """
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n):
        """The first n bits as a word
        """
        if n <= len(self.preperiod):
            return self.preperiod[:n]

        m = n - len(self.preperiod)
        repeats = m // len(self.period) + 1

        return self.preperiod + (self.period * repeats)[:m]

    def drop(self, n):
        """The point with the first n bits removed
        """
        if n <= len(self.preperiod):
            return CantorPoint(self.preperiod[n:], self.period)

        shift = (n - len(self.preperiod)) % len(self.period)

        return CantorPoint('', self.period[shift:] + self.period[:shift])

    def prepend(self, word):
        """The point word . self
        """
        return CantorPoint(check_word(word) + self.preperiod, self.period)


@dataclass(frozen=True)
class Cylinder:
    """The cylinder [word] inside a Cantor component, or the single point
    `word` (an int index) of a discrete component
    """
    component: str
    word: Union[str, int]

    def is_discrete(self):
        return isinstance(self.word, int)


@dataclass(frozen=True)
class ClopenSet:
    """Normalized clopen set: a tuple of (component, cells) pairs sorted by
    component name, only nonempty components listed.

    Use `normalize_clopen` to build one from arbitrary cylinders.
    """
    parts: Tuple[Tuple[str, Tuple[Union[str, int], ...]], ...] = ()

    def components(self):
        return tuple(name for name, _ in self.parts)

    def cells(self, component):
        for name, cells in self.parts:
            if name == component:
                return cells
        return ()

    def is_empty(self):
        return len(self.parts) == 0

    def cylinders(self):
        return [Cylinder(name, cell)
                for name, cells in self.parts for cell in cells]

    def contains_cylinder(self, cylinder):
        """True if the cylinder (or discrete point) is a subset of the set
        """
        cells = self.cells(cylinder.component)

        if cylinder.is_discrete():
            return cylinder.word in cells

        # For a fully merged family a covered cylinder has a covering word
        return any(cylinder.word.startswith(w) for w in cells
                   if isinstance(w, str))

    def contains_point(self, point):
        cells = self.cells(point.component)

        if isinstance(point.value, int):
            return point.value in cells

        return any(point.value.prefix(len(w)) == w for w in cells
                   if isinstance(w, str))


@dataclass(frozen=True)
class CantorComponent:
    """A clopen piece of the standard Cantor copy, given by its restriction
    """
    name: str
    restriction: Tuple[str, ...] = ('',)

    def __post_init__(self):
        restriction = normalize_words(self.restriction)

        if len(restriction) == 0:
            raise ComponentError(
                "The restriction of component '{0:s}' is empty!".format(
                    self.name))

        object.__setattr__(self, 'restriction', restriction)

    @property
    def kind(self):
        return _CANTOR_KIND

    def cells(self):
        return self.restriction


@dataclass(frozen=True)
class DiscreteComponent:
    """The finite discrete set {0, ..., size - 1}
    """
    name: str
    size: int

    def __post_init__(self):
        if isinstance(self.size, bool) or not isinstance(self.size, int) \
                or self.size < 1:
            raise ComponentError(
                "Discrete component '{0:s}' needs a positive size!".format(
                    self.name))

    @property
    def kind(self):
        return _DISCRETE_KIND

    def cells(self):
        return tuple(range(self.size))


@dataclass(frozen=True)
class Space:
    """Finite disjoint union of Cantor and discrete components
    """
    components: Tuple[Union[CantorComponent, DiscreteComponent], ...] = ()

    def __post_init__(self):
        components = tuple(self.components)
        names = [c.name for c in components]

        if len(set(names)) != len(names):
            raise ComponentError(
                'Component names have to be unique: {0:s}'.format(
                    ','.join(names)))

        object.__setattr__(self, 'components', components)

    def names(self):
        return tuple(c.name for c in self.components)

    def component(self, name):
        for c in self.components:
            if c.name == name:
                return c

        raise ComponentError(
            "No component '{0:s}' in the space".format(str(name)))

    def has_component(self, name):
        return name in self.names()

    def full_clopen(self):
        """The whole space as a ClopenSet
        """
        return normalize_clopen([Cylinder(c.name, cell)
                                 for c in self.components
                                 for cell in c.cells()])

    def has_same_shape(self, other):
        """True if the two spaces agree up to renaming of the components
        """
        if len(self.components) != len(other.components):
            return False

        for a, b in zip(self.components, other.components):
            if a.kind != b.kind or a.cells() != b.cells():
                return False

        return True

    def contains_cylinder(self, cylinder):
        if not self.has_component(cylinder.component):
            return False

        c = self.component(cylinder.component)

        if c.kind == _DISCRETE_KIND:
            return cylinder.is_discrete() and 0 <= cylinder.word < c.size

        if cylinder.is_discrete():
            return False

        return any(cylinder.word.startswith(w) for w in c.restriction)

    def contains_point(self, point):
        if not self.has_component(point.component):
            return False

        c = self.component(point.component)

        if c.kind == _DISCRETE_KIND:
            return isinstance(point.value, int) and 0 <= point.value < c.size

        if not isinstance(point.value, CantorPoint):
            return False

        return any(point.value.prefix(len(w)) == w for w in c.restriction)


@dataclass(frozen=True)
class SpacePoint:
    """A point of a Space: a CantorPoint or an index, tagged by component
    """
    component: str
    value: Union[CantorPoint, int]

    def __str__(self):
        return '{0:s}:{1:s}'.format(self.component, str(self.value))


EMPTY_SPACE = Space(())

# === Functions ===


def check_word(word):
    """Check that `word` is a string over '01' and return it

    Parameters
    ----------
    word: str
        The word to check

    Returns
    -------
    word: str

    """
    if not isinstance(word, str) or any(b not in _BITS for b in word):
        raise ParseError("Invalid binary word: '{0:s}'".format(str(word)))

    return word


def _primitive_root(word):
    """Shortest w with word = w^k
    """
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def word_relation(u, v):
    """Classify the cylinders [u] and [v] as equal, nested or disjoint

    Parameters
    ----------
    u: str
        First word

    v: str
        Second word

    Returns
    -------
    WordRelation

    """
    n = min(len(u), len(v))

    if u[:n] != v[:n]:
        return WordRelation.DISJOINT
    if len(u) == len(v):
        return WordRelation.EQUAL
    if len(u) < len(v):
        return WordRelation.U_PREFIX_OF_V

    return WordRelation.V_PREFIX_OF_U


def parse_point(point_string):
    """Parse the 'u(v)' text form of an eventually periodic point

    Parameters
    ----------
    point_string: str
        E.g. '01(10)'

    Returns
    -------
    CantorPoint

    """
    match = _POINT_PATTERN.match(str(point_string).strip())

    if match is None:
        raise ParseError("Invalid point: '{0:s}'".format(str(point_string)))

    return CantorPoint(match.group(1), match.group(2))


def point_in_cylinder(x, c):
    """True iff the first depth(c.word) bits of x equal c.word

    Parameters
    ----------
    x: SpacePoint or CantorPoint
        The point; a bare CantorPoint is taken to lie in c's component

    c: Cylinder
        The cylinder (or discrete point)

    Returns
    -------
    bool

    """
    if isinstance(x, CantorPoint):
        x = SpacePoint(c.component, x)

    if x.component != c.component:
        raise ComponentError(
            "Point of component '{0:s}' tested against cylinder of '{1:s}'".format(
                x.component, c.component))

    if c.is_discrete():
        return x.value == c.word

    if not isinstance(x.value, CantorPoint):
        raise ComponentError('A discrete point has no binary expansion!')

    return x.value.prefix(len(c.word)) == c.word


def normalize_words(words):
    """Canonical form of a finite union of cylinders: drop subsumed words, then
    merge sibling pairs u0, u1 into u until none is left.

    Parameters
    ----------
    words: iterable of str

    Returns
    -------
    tuple of str, sorted, prefix-free and fully merged

    """
    kept = set()

    for w in sorted(set(check_word(w) for w in words), key=len):
        if not any(w[:i] in kept for i in range(len(w) + 1)):
            kept.add(w)

    if len(kept) == 0:
        return ()

    for depth in range(max(len(w) for w in kept), 0, -1):
        for w in sorted(w for w in kept if len(w) == depth):
            sibling = w[:-1] + flip_bit(w[-1])
            if w[-1] == '0' and sibling in kept:
                kept.discard(w)
                kept.discard(sibling)
                kept.add(w[:-1])

    return tuple(sorted(kept))


def normalize_clopen(cylinders):
    """Canonical ClopenSet with the same points as the union of the cylinders

    Parameters
    ----------
    cylinders: list of Cylinder
        Cylinders (or discrete points), any components, may overlap

    Returns
    -------
    ClopenSet

    """
    by_component = {}

    for c in cylinders:
        by_component.setdefault(c.component, []).append(c.word)

    parts = []

    for name in sorted(by_component):
        cells = by_component[name]
        n_discrete = sum(1 for w in cells if isinstance(w, int))

        if n_discrete not in (0, len(cells)):
            raise ComponentError(
                "Component '{0:s}' mixes words and discrete indices".format(name))

        if n_discrete > 0:
            normalized = tuple(sorted(set(cells)))
        else:
            normalized = normalize_words(cells)

        if len(normalized) > 0:
            parts.append((name, normalized))

    return ClopenSet(tuple(parts))


def _subtract_word(u, v):
    """[u] minus [v] as a list of disjoint words
    """
    relation = word_relation(u, v)

    if relation == WordRelation.DISJOINT:
        return [u]
    if relation != WordRelation.U_PREFIX_OF_V:
        return []

    return [v[:i] + flip_bit(v[i]) for i in range(len(u), len(v))]


def subtract_words(a_words, b_words):
    """Normalized word family of the set difference of two word families
    """
    pieces = list(a_words)

    for v in b_words:
        pieces = [piece for u in pieces for piece in _subtract_word(u, v)]

    return normalize_words(pieces)


def intersect_words(a_words, b_words):
    """Normalized word family of the intersection of two word families
    """
    pieces = []

    for u in a_words:
        for v in b_words:
            relation = word_relation(u, v)
            if relation in (WordRelation.EQUAL, WordRelation.V_PREFIX_OF_U):
                pieces.append(u)
            elif relation == WordRelation.U_PREFIX_OF_V:
                pieces.append(v)

    return normalize_words(pieces)


def _check_in_space(clopen, space):
    for cylinder in clopen.cylinders():
        if not space.contains_cylinder(cylinder):
            raise SpaceMismatchError(
                "Cylinder {0:s}:{1:s} is not part of the space".format(
                    cylinder.component, str(cylinder.word)))


def clopen_algebra(a, b, op, space=None):
    """Boolean operations on clopen sets

    Parameters
    ----------
    a: ClopenSet
        First operand

    b: ClopenSet or None
        Second operand (ignored for the complement)

    op: ClopenOp
        The operation

    space: Space, optional
        The ambient space. Mandatory for the complement; if given, both
        operands are checked to lie in it

    Returns
    -------
    ClopenSet

    """
    if space is not None:
        _check_in_space(a, space)
        if b is not None:
            _check_in_space(b, space)

    if op == ClopenOp.COMPLEMENT:
        if space is None:
            raise SpaceMismatchError('The complement needs an ambient space!')
        a, b = space.full_clopen(), a
        op = ClopenOp.DIFFERENCE

    cylinders = []

    for name in sorted(set(a.components()) | set(b.components())):
        a_cells, b_cells = a.cells(name), b.cells(name)
        cells = a_cells + b_cells

        if len(cells) > 0 and isinstance(cells[0], int):
            a_set, b_set = set(a_cells), set(b_cells)
            if op == ClopenOp.UNION:
                result = a_set | b_set
            elif op == ClopenOp.INTERSECTION:
                result = a_set & b_set
            else:
                result = a_set - b_set
        else:
            if op == ClopenOp.UNION:
                result = normalize_words(cells)
            elif op == ClopenOp.INTERSECTION:
                result = intersect_words(a_cells, b_cells)
            else:
                result = subtract_words(a_cells, b_cells)

        cylinders.extend(Cylinder(name, cell) for cell in result)

    return normalize_clopen(cylinders)


def refine_words(words, depth):
    """All depth-`depth` words whose cylinders lie in the union of `words`

    Parameters
    ----------
    words: iterable of str
        A prefix-free word family

    depth: int
        The refinement depth, at least the longest word

    Returns
    -------
    list of str, sorted

    """
    refined = []

    for w in words:
        if len(w) > depth:
            raise DepthError(
                "Cannot refine word '{0:s}' to depth {1:d}".format(w, depth))

        refined.extend(w + ''.join(tail)
                       for tail in itertools.product(_BITS,
                                                     repeat=depth - len(w)))

    return sorted(refined)


def refine_to_depth(u, d):
    """Depth-d cells of a clopen set

    Discrete components are returned unchanged (a point is its own cell).

    Parameters
    ----------
    u: ClopenSet
        The clopen set

    d: int
        The depth, at least the maximal word depth in u

    Returns
    -------
    list of Cylinder

    """
    cells = []

    for name, words in u.parts:
        if len(words) > 0 and isinstance(words[0], int):
            cells.extend(Cylinder(name, i) for i in words)
        else:
            cells.extend(Cylinder(name, w) for w in refine_words(words, d))

    return cells


def separating_point(x, d):
    """A point y != x with the same first d bits as x

    The first d bits of x are copied, bit d+1 is flipped, and the sequence
    continues with the (unflipped) bit d+1 of x repeated.

    Parameters
    ----------
    x: CantorPoint
        The point to separate from

    d: int
        Number of shared leading bits

    Returns
    -------
    CantorPoint

    """
    if d < 0:
        raise DepthError('The depth has to be nonnegative!')

    original_bit = x.bit(d)

    return CantorPoint(x.prefix(d) + flip_bit(original_bit), original_bit)


def cantor_space(name=_CANTOR_COMPONENT_NAME):
    """Space made of one full Cantor component
    """
    return Space((CantorComponent(name),))


def discrete_space(name, size):
    """Space made of one discrete component with `size` points
    """
    return Space((DiscreteComponent(name, size),))


# === MAIN ===
if __name__ == "__main__":
    pass
