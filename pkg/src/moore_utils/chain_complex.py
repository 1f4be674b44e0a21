"""Moore chain complexes of truncated simplicial spaces

A presentation lists the levels G_0, ..., G_N of a simplicial space and its
face maps d_0, ..., d_n : G_n -> G_{n-1}. The chain groups are C_c(G_n, Z) and
the boundary is the alternating sum of the face pushforwards

    del_n = sum_i (-1)^i (d_i)_*

with del_0 the zero map. For depth preserving faces the boundary restricts to
the functions constant on the depth-d cells, which gives the integer matrices
whose Smith normal forms compute the homology at a given depth.
"""

__all__ = ['SimplicialPresentation',
           'ChainMap',
           'DDReport',
           'HomologyGroup',
           'HomologyEntry',
           'HomologyReport',
           'level_name',
           'iota_map',
           'pi_map',
           'nerve_unit_cantor',
           'nerve_unit_discrete',
           'nerve_pair_groupoid',
           'validate_presentation',
           'check_presentation',
           'corrupt_presentation',
           'boundary',
           'apply_boundary',
           'verify_dd_zero',
           'cell_basis',
           'truncation_matrix',
           'homology_at_depth',
           'homology_report']

import logging
import numpy as np

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from moore_utils import zfun
from moore_utils.maps import LocalHomeo, PrefixChart, bit_swap_map, \
    compose, identity_map, pushforward, semantically_equal, validate
from moore_utils.snf import IntMatrix, smith_normal_form
from moore_utils.cantor import EMPTY_SPACE, CantorComponent, Cylinder, \
    DiscreteComponent, Space, cantor_space, refine_words
from moore_utils.errors import Diagnostic, DepthError, LevelRangeError, \
    MapValidationError, SpaceMismatchError, UnsupportedPresentationError

# ===Import globals
from moore_utils.globals import _DEFAULT_SEED, _DEFAULT_CHAIN_VALUE_BOUND, \
    _DISCRETE_KIND, _LEVEL_COMPONENT_PREFIX

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class SimplicialPresentation:
    """Levels 0..max_level and the face maps between them

    faces[n - 1][i] is d_i : levels[n] -> levels[n - 1]. Only the shapes are
    checked on construction; see `validate_presentation` for the maps and the
    simplicial identities.
    """
    max_level: int
    levels: Tuple[Space, ...]
    faces: Tuple[Tuple[LocalHomeo, ...], ...]
    name: str = 'custom'

    def __post_init__(self):
        levels = tuple(self.levels)
        faces = tuple(tuple(level_faces) for level_faces in self.faces)

        if self.max_level < 1:
            raise LevelRangeError('A presentation needs at least levels 0 and 1!')

        if len(levels) != self.max_level + 1 or len(faces) != self.max_level:
            raise LevelRangeError(
                'Expected {0:d} levels and {1:d} face lists'.format(
                    self.max_level + 1, self.max_level))

        for n in range(1, self.max_level + 1):
            if len(faces[n - 1]) != n + 1:
                raise LevelRangeError(
                    'Level {0:d} needs {1:d} faces, got {2:d}'.format(
                        n, n + 1, len(faces[n - 1])))

            for i, d in enumerate(faces[n - 1]):
                if d.domain != levels[n] or d.codomain != levels[n - 1]:
                    raise SpaceMismatchError(
                        'Face d{0:d} of level {1:d} does not map G_{1:d} to G_{2:d}'.format(
                            i, n, n - 1))

        object.__setattr__(self, 'levels', levels)
        object.__setattr__(self, 'faces', faces)

    def face(self, n, i):
        return self.faces[n - 1][i]

    def is_discrete(self):
        """True if every level consists of discrete components only
        """
        return all(c.kind == _DISCRETE_KIND
                   for level in self.levels for c in level.components)


@dataclass(frozen=True)
class ChainMap:
    """Formal sum of signed pushforwards from C_c(source) to C_c(target)
    """
    source_level: int
    target_level: int
    source: Space
    target: Space
    terms: Tuple[Tuple[int, LocalHomeo], ...] = ()


@dataclass(frozen=True)
class DDReport:
    level: int
    depth: int
    samples: int
    seed: int
    failures: int
    counterexample: Optional[zfun.LocIntFun] = None

    @property
    def passed(self):
        return self.failures == 0


@dataclass(frozen=True)
class HomologyGroup:
    """Z^rank plus the cyclic groups Z/t for t in torsion
    """
    rank: int
    torsion: Tuple[int, ...] = ()

    def __str__(self):
        summands = []
        if self.rank > 0:
            summands.append('Z' if self.rank == 1 else 'Z^{0:d}'.format(
                self.rank))
        summands.extend('Z/{0:d}'.format(t) for t in self.torsion)

        return ' + '.join(summands) if len(summands) > 0 else '0'


@dataclass(frozen=True)
class HomologyEntry:
    level: int
    depth: int
    group: HomologyGroup


@dataclass(frozen=True)
class HomologyReport:
    presentation: str
    entries: Tuple[HomologyEntry, ...]
    stable: Dict[int, bool] = field(default_factory=dict)

# === Functions ===


def level_name(n):
    """Component name of the level n of the built-in nerves
    """
    return '{0:s}{1:d}'.format(_LEVEL_COMPONENT_PREFIX, n)


def _unit_level(n):
    return Space((CantorComponent(level_name(n)),))


def pi_map(n):
    """G_n -> X, the projection to the unit space (one identity chart)
    """
    return identity_map(_unit_level(n), cantor_space())


def iota_map(n):
    """X -> G_n, the diagonal x -> (x, ..., x) (one identity chart)
    """
    return identity_map(cantor_space(), _unit_level(n))


def nerve_unit_cantor(max_level):
    """Nerve of the unit groupoid of the Cantor set, levels 0..max_level

    Every level is a copy of X and every face is d_i = iota_{n-1} o pi_n.
    """
    if max_level < 1:
        raise LevelRangeError('The nerve needs max_level >= 1')

    levels = tuple(_unit_level(n) for n in range(max_level + 1))
    faces = tuple(tuple(compose(iota_map(n - 1), pi_map(n))
                        for _ in range(n + 1))
                  for n in range(1, max_level + 1))

    return SimplicialPresentation(max_level, levels, faces, 'unit-cantor')


def nerve_unit_discrete(size, max_level):
    """Nerve of the unit groupoid of a finite set with `size` points
    """
    if max_level < 1:
        raise LevelRangeError('The nerve needs max_level >= 1')

    levels = tuple(Space((DiscreteComponent(level_name(n), size),))
                   for n in range(max_level + 1))
    faces = tuple(tuple(identity_map(levels[n], levels[n - 1])
                        for _ in range(n + 1))
                  for n in range(1, max_level + 1))

    return SimplicialPresentation(max_level, levels, faces,
                                  'unit-discrete:{0:d}'.format(size))


def _delete_coordinate(index, size, length, i):
    """Index of the tuple with coordinate i removed

    A tuple (a_0, ..., a_{length-1}) has index sum a_k size^(length-1-k).
    """
    digits = []
    for _ in range(length):
        index, digit = divmod(index, size)
        digits.append(digit)
    digits.reverse()

    del digits[i]

    result = 0
    for digit in digits:
        result = result * size + digit

    return result


def nerve_pair_groupoid(size, max_level):
    """Nerve of the pair groupoid F x F on a set with `size` points

    Level n holds the (n+1)-tuples over F and d_i deletes the coordinate i.
    """
    if max_level < 1:
        raise LevelRangeError('The nerve needs max_level >= 1')

    levels = tuple(Space((DiscreteComponent(level_name(n), size ** (n + 1)),))
                   for n in range(max_level + 1))

    faces = []
    for n in range(1, max_level + 1):
        level_faces = []
        for i in range(n + 1):
            charts = tuple(PrefixChart(
                Cylinder(level_name(n), t),
                Cylinder(level_name(n - 1),
                         _delete_coordinate(t, size, n + 1, i)))
                for t in range(size ** (n + 1)))
            level_faces.append(LocalHomeo(levels[n], levels[n - 1], charts))
        faces.append(tuple(level_faces))

    return SimplicialPresentation(max_level, levels, tuple(faces),
                                  'pair:{0:d}'.format(size))


def validate_presentation(P):
    """Diagnostics of the face maps and of the simplicial identities
    d_i d_j = d_{j-1} d_i (i < j)

    Parameters
    ----------
    P: SimplicialPresentation

    Returns
    -------
    list of Diagnostic; empty iff P is valid

    """
    diagnostics = []

    for n in range(1, P.max_level + 1):
        for i, d in enumerate(P.faces[n - 1]):
            for problem in validate(d):
                diagnostics.append(Diagnostic(
                    problem.kind, problem.charts,
                    'face d{0:d} of level {1:d}: {2:s}'.format(
                        i, n, problem.message)))

    if len(diagnostics) > 0:
        return diagnostics

    for n in range(2, P.max_level + 1):
        for j in range(n + 1):
            for i in range(j):
                lhs = compose(P.face(n - 1, i), P.face(n, j))
                rhs = compose(P.face(n - 1, j - 1), P.face(n, i))

                if not semantically_equal(lhs, rhs):
                    diagnostics.append(Diagnostic(
                        'face-identity', (),
                        'd{0:d} d{1:d} != d{2:d} d{0:d} on level {3:d}'.format(
                            i, j, j - 1, n)))

    for d in diagnostics:
        logger.debug('Invalid presentation: {0:s}'.format(str(d)))

    return diagnostics


def check_presentation(P):
    """Raise MapValidationError if P is not a valid presentation
    """
    diagnostics = validate_presentation(P)

    if len(diagnostics) > 0:
        raise MapValidationError(diagnostics)

    return P


def corrupt_presentation(P, n, i):
    """Copy of P with the face d_i of level n replaced by the bit swap

    Only for levels made of one full Cantor component each; used to check that
    the verifications notice a broken face.
    """
    if not 1 <= n <= P.max_level or not 0 <= i <= n:
        raise LevelRangeError(
            'No face d{0:d} on level {1:d}'.format(i, n))

    faces = [list(level_faces) for level_faces in P.faces]
    faces[n - 1][i] = bit_swap_map(P.levels[n], P.levels[n - 1])

    return SimplicialPresentation(P.max_level, P.levels,
                                  tuple(tuple(f) for f in faces),
                                  '{0:s}-corrupted'.format(P.name))


def boundary(P, n):
    """The boundary del_n as a ChainMap; del_0 is the zero map to the empty
    space
    """
    if not 0 <= n <= P.max_level:
        raise LevelRangeError(
            'Boundary del_{0:d} outside of levels 0..{1:d}'.format(
                n, P.max_level))

    if n == 0:
        return ChainMap(0, -1, P.levels[0], EMPTY_SPACE, ())

    terms = tuple(((-1) ** i, d) for i, d in enumerate(P.faces[n - 1]))

    return ChainMap(n, n - 1, P.levels[n], P.levels[n - 1], terms)


def apply_boundary(chain_map, f):
    """Evaluate a ChainMap on a chain f
    """
    if f.space != chain_map.source:
        raise SpaceMismatchError(
            'The chain does not live on level {0:d}'.format(
                chain_map.source_level))

    result = zfun.zero(chain_map.target)

    for sign, d in chain_map.terms:
        result = zfun.add(result, zfun.scale(pushforward(d, f), sign))

    return result


def verify_dd_zero(P, n, samples, depth, seed=_DEFAULT_SEED,
                   bound=_DEFAULT_CHAIN_VALUE_BOUND):
    """Apply del_{n-1} del_n to seeded random chains and count the nonzero
    results

    Parameters
    ----------
    P: SimplicialPresentation

    n: int
        Level, 2 <= n <= max_level

    samples: int
        Number of random chains

    depth: int
        Maximal cell depth of the chains

    seed: int, optional

    bound: int, optional
        Maximal absolute chain value

    Returns
    -------
    DDReport

    """
    if not 2 <= n <= P.max_level:
        raise LevelRangeError(
            'del del needs 2 <= n <= {0:d}, got {1:d}'.format(P.max_level, n))

    rng = np.random.default_rng(seed)
    outer, inner = boundary(P, n - 1), boundary(P, n)
    failures, counterexample = 0, None

    for _ in range(samples):
        f = zfun.random_function(rng, P.levels[n],
                                 int(rng.integers(0, depth + 1)), bound)

        if not apply_boundary(outer, apply_boundary(inner, f)).is_zero():
            failures += 1
            if counterexample is None:
                counterexample = f

    logger.info('del_{0:d} del_{1:d} = 0 on {2:d}/{3:d} chains of {4:s}'.format(
        n - 1, n, samples - failures, samples, P.name))

    return DDReport(n, depth, samples, seed, failures, counterexample)


def cell_basis(space, d):
    """The depth-d cells of a space, components in order

    Parameters
    ----------
    space: Space

    d: int
        Depth; discrete components ignore it

    Returns
    -------
    list of Cylinder

    """
    basis = []

    for component in space.components:
        if component.kind == _DISCRETE_KIND:
            basis.extend(Cylinder(component.name, i)
                         for i in component.cells())
        else:
            basis.extend(Cylinder(component.name, w)
                         for w in refine_words(component.restriction, d))

    return basis


def _check_depth_preserving(P, n, d):
    for i, face in enumerate(P.faces[n - 1]):
        for k, chart in enumerate(face.charts):
            if chart.shift != 0:
                raise UnsupportedPresentationError(
                    'Face d{0:d} of level {1:d}, chart {2:d} shifts the depth by {3:d}'.format(
                        i, n, k, chart.shift))

            if not chart.is_discrete() and len(chart.source.word) > d:
                raise DepthError(
                    'Depth {0:d} is below the chart depth {1:d} of d{2:d} on level {3:d}'.format(
                        d, len(chart.source.word), i, n))


def truncation_matrix(P, n, d):
    """Matrix of del_n on the depth-d cells

    Column k is del_n of the indicator of the k-th cell of level n, expanded in
    the cells of level n-1.

    Parameters
    ----------
    P: SimplicialPresentation

    n: int
        0 <= n <= max_level

    d: int
        Depth

    Returns
    -------
    IntMatrix

    """
    if d < 0:
        raise DepthError('The depth has to be nonnegative!')

    chain_map = boundary(P, n)
    columns = cell_basis(P.levels[n], d)

    if n == 0:
        return IntMatrix(0, len(columns))

    _check_depth_preserving(P, n, d)

    rows = cell_basis(P.levels[n - 1], d)
    row_index = {cell: k for k, cell in enumerate(rows)}
    entries = []

    for col, cell in enumerate(columns):
        image = apply_boundary(chain_map, zfun.indicator(P.levels[n], cell))

        for name, image_cell, value in image.iter_cells():
            if isinstance(image_cell, int):
                entries.append((row_index[Cylinder(name, image_cell)], col,
                                value))
            else:
                for word in refine_words([image_cell], d):
                    entries.append((row_index[Cylinder(name, word)], col,
                                    value))

    return IntMatrix(len(rows), len(columns), tuple(entries))


def homology_at_depth(P, n, d):
    """H_n at depth d: ker del_n / im del_{n+1} on the depth-d cells

    With U A V = diag the SNF of A = del_n, the last columns of V span ker A,
    and im B (B = del_{n+1}) has the coordinates X = (V^-1 B)[rank A:, :] in
    that basis. So rank = dim ker A - rank X and the torsion is the SNF
    torsion of X.

    Parameters
    ----------
    P: SimplicialPresentation

    n: int
        0 <= n <= max_level - 1

    d: int
        Depth

    Returns
    -------
    HomologyGroup

    """
    if not 0 <= n <= P.max_level - 1:
        raise LevelRangeError(
            'H_{0:d} needs del_{1:d}, the top level is {2:d}'.format(
                n, n + 1, P.max_level))

    A = truncation_matrix(P, n, d)
    B = truncation_matrix(P, n + 1, d)

    snf_a = smith_normal_form(A)
    coordinates = snf_a.V_inv.matmul(B).to_dense()[snf_a.rank:, :]
    snf_x = smith_normal_form(IntMatrix.from_dense(coordinates))

    kernel_rank = A.cols - snf_a.rank
    group = HomologyGroup(kernel_rank - snf_x.rank, snf_x.torsion)

    logger.debug('H_{0:d} at depth {1:d}: {2:s}'.format(n, d, str(group)))

    return group


def _is_cantor_only(P):
    return all(c.kind != _DISCRETE_KIND
               for level in P.levels for c in level.components)


def _is_stable(groups, depths, cantor_only):
    """Torsion independent of the depth, ranks doubling per extra depth on
    Cantor only presentations and nondecreasing otherwise
    """
    for (g1, d1), (g2, d2) in zip(zip(groups, depths),
                                  zip(groups[1:], depths[1:])):
        if g1.torsion != g2.torsion:
            return False
        if cantor_only and g2.rank != g1.rank * 2 ** (d2 - d1):
            return False
        if not cantor_only and g2.rank < g1.rank:
            return False

    return True


def homology_report(P, max_n, depths):
    """H_n for n = 0..max_n - 1 at every depth, with a stabilization flag
    per n

    Fully discrete presentations are computed once, at depth 0.

    Parameters
    ----------
    P: SimplicialPresentation

    max_n: int
        At most P.max_level

    depths: list of int
        Ascending

    Returns
    -------
    HomologyReport

    """
    if not 1 <= max_n <= P.max_level:
        raise LevelRangeError(
            'Homology up to H_{0:d} needs levels up to {1:d}'.format(
                max_n - 1, max_n))

    depths = list(depths)

    if len(depths) == 0 or any(d < 0 for d in depths) or \
            depths != sorted(set(depths)):
        raise DepthError('Depths have to be nonnegative and ascending!')

    if P.is_discrete():
        depths = [0]

    entries, stable = [], {}
    cantor_only = _is_cantor_only(P)

    for n in range(max_n):
        groups = [homology_at_depth(P, n, d) for d in depths]
        entries.extend(HomologyEntry(n, d, g) for d, g in zip(depths, groups))
        stable[n] = _is_stable(groups, depths, cantor_only)

    return HomologyReport(P.name, tuple(entries), stable)


# === MAIN ===
if __name__ == "__main__":
    pass
