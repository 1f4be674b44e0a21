"""Locally constant, compactly supported integer functions C_c(Y, Z) on a
presented Space, their arithmetic, the enumeration of C(X, Z) and the delta
witnesses.

On a Cantor component a function is kept as a binary trie whose leaves are
integers. Siblings with equal values are merged bottom-up, which makes the trie
the unique minimal one of the function; the stored cells are the nonzero
leaves. Discrete components simply store index -> value.
"""

__all__ = ['LocIntFun',
           'EnumerationCursor',
           'make',
           'zero',
           'constant',
           'indicator',
           'evaluate',
           'cell_value',
           'add',
           'scale',
           'negate',
           'equals',
           'support',
           'image_values',
           'stage_bound',
           'enumeration_key',
           'advance',
           'iter_enumeration',
           'enumerate_function',
           'first_functions',
           'functions_of_stage_grid',
           'delta_witness',
           'random_function']

import logging
import functools
import itertools

from dataclasses import dataclass
from typing import Tuple, Union

from moore_utils.cantor import Cylinder, Space, cantor_space, \
    normalize_clopen, refine_words, separating_point
from moore_utils.misc import zigzag_integer
from moore_utils.errors import ComponentError, DepthError, \
    SpaceMismatchError, EnumerationError, ParseError

# ===Import globals
from moore_utils.globals import _DISCRETE_KIND, _CANTOR_COMPONENT_NAME

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class LocIntFun:
    """Canonical element of C_c(Y, Z)

    parts holds (component, cells) pairs in the order of the space components,
    only components with nonzero cells are listed. Cells are (word, value)
    pairs sorted by word, or (index, value) pairs for a discrete component.
    Build instances with `make` (or the arithmetic below), not directly.
    """
    space: Space
    parts: Tuple[Tuple[str, Tuple[Tuple[Union[str, int], int], ...]], ...] = ()

    def cells(self, component):
        for name, cells in self.parts:
            if name == component:
                return cells
        return ()

    def iter_cells(self):
        for name, cells in self.parts:
            for cell, value in cells:
                yield name, cell, value

    def is_zero(self):
        return len(self.parts) == 0

    def max_depth(self):
        depths = [len(cell) for _, cell, _ in self.iter_cells()
                  if isinstance(cell, str)]
        return max(depths, default=0)


@dataclass(frozen=True)
class EnumerationCursor:
    """Position in the enumeration of C(X, Z)

    position is the index of the next function, in_stage_index counts the
    functions of `stage` listed before it.
    """
    position: int = 0
    stage: int = 0
    in_stage_index: int = 0

# === Trie helpers ===


def _is_leaf(tree):
    return not isinstance(tree, tuple)


def _split(tree):
    if _is_leaf(tree):
        return tree, tree
    return tree


def _reduce(left, right):
    if _is_leaf(left) and _is_leaf(right) and left == right:
        return left
    return (left, right)


def _trie_add(tree, word, value, pos=0):
    """Add value on the cylinder [word]
    """
    if pos == len(word):
        return _trie_map(tree, lambda v: v + value)

    left, right = _split(tree)

    if word[pos] == '0':
        return _reduce(_trie_add(left, word, value, pos + 1), right)

    return _reduce(left, _trie_add(right, word, value, pos + 1))


def _trie_map(tree, fn):
    if _is_leaf(tree):
        return fn(tree)

    return _reduce(_trie_map(tree[0], fn), _trie_map(tree[1], fn))


def _trie_from_leaves(values):
    """Trie of a function given by its values on the 2^s depth-s cells
    """
    if len(values) == 1:
        return values[0]

    half = len(values) // 2

    return _reduce(_trie_from_leaves(values[:half]),
                   _trie_from_leaves(values[half:]))


def _trie_cells(tree, prefix=''):
    if _is_leaf(tree):
        return [(prefix, tree)] if tree != 0 else []

    return _trie_cells(tree[0], prefix + '0') + \
        _trie_cells(tree[1], prefix + '1')


def _canonical(space, summands):
    """Canonical LocIntFun of a sum of (Cylinder, value) terms, no checks
    """
    by_component = {}

    for cylinder, value in summands:
        by_component.setdefault(cylinder.component, []).append(
            (cylinder.word, value))

    parts = []

    for component in space.components:
        terms = by_component.get(component.name, [])

        if len(terms) == 0:
            continue

        if component.kind == _DISCRETE_KIND:
            totals = {}
            for index, value in terms:
                totals[index] = totals.get(index, 0) + value
            cells = tuple((i, totals[i]) for i in sorted(totals)
                          if totals[i] != 0)
        else:
            tree = 0
            for word, value in terms:
                tree = _trie_add(tree, word, value)
            cells = tuple(_trie_cells(tree))

        if len(cells) > 0:
            parts.append((component.name, cells))

    return LocIntFun(space, tuple(parts))


def _check_value(value):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(
            'Function values have to be integers, got {0:s}'.format(
                str(value)))

# === Functions ===


def make(space, cells):
    """The function y -> sum of the values of the cells containing y

    Parameters
    ----------
    space: Space
        The space the function lives on

    cells: list of (Cylinder, int)
        Cells, possibly overlapping, with integer values

    Returns
    -------
    LocIntFun in canonical form

    """
    cells = list(cells)

    for cylinder, value in cells:
        _check_value(value)

        if not space.contains_cylinder(cylinder):
            raise ComponentError(
                "Cell {0:s}:{1:s} lies outside of the space".format(
                    cylinder.component, str(cylinder.word)))

    return _canonical(space, cells)


def zero(space):
    """The zero function on a space
    """
    return LocIntFun(space, ())


def constant(space, value):
    """The function with the same value on every point of the space
    """
    return make(space, [(Cylinder(c.name, cell), value)
                        for c in space.components for cell in c.cells()])


def indicator(space, cylinder, value=1):
    """value * 1_[cylinder]
    """
    return make(space, [(cylinder, value)])


def _check_same_space(f, g):
    if f.space != g.space:
        raise SpaceMismatchError('The functions live on different spaces!')


def evaluate(f, y):
    """Value of f at the point y

    Parameters
    ----------
    f: LocIntFun
        The function

    y: SpacePoint
        A point of f's space

    Returns
    -------
    int

    """
    if not f.space.contains_point(y):
        raise ComponentError(
            'Point {0:s} is not part of the space'.format(str(y)))

    for cell, value in f.cells(y.component):
        if isinstance(cell, int):
            if cell == y.value:
                return value
        elif y.value.prefix(len(cell)) == cell:
            return value

    return 0


def cell_value(f, cylinder):
    """Value of f on a cylinder on which f is constant

    Parameters
    ----------
    f: LocIntFun

    cylinder: Cylinder

    Returns
    -------
    int

    """
    for cell, value in f.cells(cylinder.component):
        if isinstance(cell, int):
            if cell == cylinder.word:
                return value
        elif cylinder.word.startswith(cell):
            return value
        elif cell.startswith(cylinder.word):
            raise DepthError(
                "The function is not constant on [{0:s}]".format(
                    cylinder.word))

    return 0


def add(f, g):
    """Pointwise sum
    """
    _check_same_space(f, g)

    summands = [(Cylinder(name, cell), value)
                for h in (f, g) for name, cell, value in h.iter_cells()]

    return _canonical(f.space, summands)


def scale(f, k):
    """Pointwise product with the integer k
    """
    _check_value(k)

    if k == 0:
        return zero(f.space)

    return LocIntFun(f.space, tuple(
        (name, tuple((cell, k * value) for cell, value in cells))
        for name, cells in f.parts))


def negate(f):
    """-f
    """
    return scale(f, -1)


def equals(f, g):
    """Function equality; structural, which is sound by canonicality
    """
    _check_same_space(f, g)
    return f == g


def support(f):
    """Union of the cells of f as a ClopenSet
    """
    return normalize_clopen([Cylinder(name, cell)
                             for name, cell, _ in f.iter_cells()])


def image_values(f):
    """The finite set f(Y)

    Contains 0 iff the support is not the whole space.
    """
    values = set(value for _, _, value in f.iter_cells())

    if support(f) != f.space.full_clopen():
        values.add(0)

    return frozenset(values)


def stage_bound(stage):
    """Number of functions listed up to and including `stage`

    Stage s collects the functions measurable at depth s with values in
    [-s, s]; there are (2s + 1)^(2^s) of them.
    """
    return (2 * stage + 1) ** (2 ** stage)


def _stage_values(stage, index):
    """Value vector number `index` of the stage grid, first cell most
    significant digit, digits read as 0, 1, -1, 2, -2, ...
    """
    radix = 2 * stage + 1
    length = 2 ** stage
    values = [0] * length

    for j in range(length - 1, -1, -1):
        index, digit = divmod(index, radix)
        values[j] = zigzag_integer(digit)

    return values


def _function_from_values(component_name, values):
    space = cantor_space(component_name)
    tree = _trie_from_leaves(values)
    cells = tuple(_trie_cells(tree))

    if len(cells) == 0:
        return LocIntFun(space, ())

    return LocIntFun(space, ((component_name, cells),))


@functools.lru_cache(maxsize=None)
def _partitions(height):
    """Leaf words of every full binary trie of exactly `height`, sorted
    """
    if height == 0:
        return (('',),)

    lower = [p for h in range(height) for p in _partitions(h)]

    shapes = [tuple('0' + w for w in a) + tuple('1' + w for w in b)
              for a in lower for b in lower
              if max(len(w) for w in a + b) == height - 1]

    return tuple(sorted(shapes))


def _sibling_leaves(words):
    return [i for i in range(len(words) - 1)
            if words[i].endswith('0') and
            words[i + 1] == words[i][:-1] + '1']


def _stage_size(stage):
    return stage_bound(stage) - (stage_bound(stage - 1) if stage > 0 else 0)


def _stage_functions(stage, component_name):
    """The functions new in `stage`, in enumeration order

    A function is keyed by the height of its minimal trie, the words of the
    trie leaves and the leaf values (zeros included). Stage s lists the keys
    with height <= s and values in [-s, s] that were not listed before.
    """
    space = cantor_space(component_name)

    for depth in range(stage + 1):
        for words in _partitions(depth):
            siblings = _sibling_leaves(words)

            for values in itertools.product(range(-stage, stage + 1),
                                            repeat=len(words)):
                if depth < stage and max(abs(v) for v in values) < stage:
                    continue
                if any(values[i] == values[i + 1] for i in siblings):
                    continue

                cells = tuple((w, v) for w, v in zip(words, values) if v != 0)
                yield LocIntFun(space, ((component_name, cells),)
                                if len(cells) > 0 else ())


def _trie_leaves(tree, prefix=''):
    if _is_leaf(tree):
        return [(prefix, tree)]

    return _trie_leaves(tree[0], prefix + '0') + \
        _trie_leaves(tree[1], prefix + '1')


def enumeration_key(f):
    """Sort key of a function in the enumeration of C(X, Z)

    Returns
    -------
    (stage, height, leaf words, leaf values), the leaves being those of the
    minimal trie of f
    """
    name = _check_enumeration_space(f.space)

    tree = 0
    for word, value in f.cells(name):
        tree = _trie_add(tree, word, value)

    leaves = _trie_leaves(tree)
    words = tuple(w for w, _ in leaves)
    values = tuple(v for _, v in leaves)
    height = max(len(w) for w in words)

    return (max(height, max(abs(v) for v in values)), height, words, values)


def advance(cursor, component_name=_CANTOR_COMPONENT_NAME):
    """Function at the cursor and the cursor of the next one

    Parameters
    ----------
    cursor: EnumerationCursor

    component_name: str, optional
        Name of the full Cantor component the functions live on

    Returns
    -------
    (LocIntFun, EnumerationCursor)

    """
    stage, index = cursor.stage, cursor.in_stage_index

    while index >= _stage_size(stage):
        stage += 1
        index = 0
        logger.debug('Enumeration enters stage {0:d}'.format(stage))

    f = next(itertools.islice(_stage_functions(stage, component_name),
                              index, None))

    return f, EnumerationCursor(cursor.position + 1, stage, index + 1)


def iter_enumeration(cursor=None, component_name=_CANTOR_COMPONENT_NAME):
    """Generator over the enumeration of C(X, Z), starting at the cursor
    """
    if cursor is None:
        cursor = EnumerationCursor()

    stage, index = cursor.stage, cursor.in_stage_index

    while True:
        yield from itertools.islice(_stage_functions(stage, component_name),
                                    index, None)
        stage += 1
        index = 0
        logger.debug('Enumeration enters stage {0:d}'.format(stage))


def _check_enumeration_space(space):
    if space is None:
        return _CANTOR_COMPONENT_NAME

    if len(space.components) != 1 or \
            space.components[0].kind == _DISCRETE_KIND or \
            space.components[0].restriction != ('',):
        raise EnumerationError(
            'The enumeration needs a space of one full Cantor component!')

    return space.components[0].name


def enumerate_function(k, space=None):
    """The k-th function of the enumeration of C(X, Z)

    Parameters
    ----------
    k: int
        Nonnegative index

    space: Space, optional
        A single full Cantor component (default: the component 'X')

    Returns
    -------
    LocIntFun

    """
    component_name = _check_enumeration_space(space)

    if isinstance(k, bool) or not isinstance(k, int) or k < 0:
        raise EnumerationError(
            'Invalid enumeration index: {0:s}'.format(str(k)))

    stage = 0
    while stage_bound(stage) <= k:
        stage += 1

    start = stage_bound(stage - 1) if stage > 0 else 0

    return next(itertools.islice(_stage_functions(stage, component_name),
                                 k - start, None))


def first_functions(count, space=None):
    """The first `count` functions of the enumeration
    """
    component_name = _check_enumeration_space(space)
    functions = []

    for f in iter_enumeration(component_name=component_name):
        if len(functions) >= count:
            break
        functions.append(f)

    return functions


def functions_of_stage_grid(stage, component_name=_CANTOR_COMPONENT_NAME):
    """Every function measurable at depth `stage` with values in
    [-stage, stage], by brute force over the value vectors
    """
    radix = 2 * stage + 1
    return [_function_from_values(component_name, _stage_values(stage, i))
            for i in range(radix ** (2 ** stage))]


def delta_witness(x, d):
    """Witness that delta_x is not constant on the depth-d cylinder of x

    Parameters
    ----------
    x: CantorPoint

    d: int
        Depth

    Returns
    -------
    (y, delta_x(x), delta_x(y)): (CantorPoint, int, int)

    """
    y = separating_point(x, d)

    return y, 1, 1 if y == x else 0


def random_function(rng, space, depth, bound):
    """Random function with cells of depth `depth` (or deeper, if a
    restriction needs it) and values in [-bound, bound]

    Parameters
    ----------
    rng: numpy.random.Generator

    space: Space

    depth: int

    bound: int

    Returns
    -------
    LocIntFun

    """
    cells = []

    for component in space.components:
        if component.kind == _DISCRETE_KIND:
            keys = list(component.cells())
        else:
            d = max(depth, max(len(w) for w in component.restriction))
            keys = refine_words(component.restriction, d)

        for key in keys:
            value = int(rng.integers(-bound, bound + 1))
            cells.append((Cylinder(component.name, key), value))

    return _canonical(space, cells)


# === MAIN ===
if __name__ == "__main__":
    pass
