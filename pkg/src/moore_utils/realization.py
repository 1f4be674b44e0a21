"""The classifying space side of the comparison

For the constant simplicial space on X the realization is X x Omega, where
Omega, the realization of the constant simplicial point, is identified with
the finitely supported sequences

    Delta^inf_fin = {a = (a_k) : a_k >= 0, sum a_k = 1, finitely many a_k != 0}

through j(t_0, ..., t_n) = (t_0, ..., t_n, 0, 0, ...). Everything here is
exact: barycentric coordinates are Fractions.

The singular H_0 of a space is the free abelian group on its path components,
so it is described by the path components of the presented space, and the
sizes of the two H_0 groups are compared as symbolic cardinalities.
"""

__all__ = ['SimplicialOperator',
           'BarycentricPoint',
           'FinSeqPoint',
           'E0',
           'Pi0Kind',
           'Pi0Descriptor',
           'Cardinality',
           'GroupDescription',
           'FinSupFun',
           'DeltaBasis',
           'Verdict',
           'Witness',
           'ComparisonReport',
           'PropertyResult',
           'RealizationCheckReport',
           'identity_operator',
           'operator_compose',
           'affine_push',
           'embed_j',
           'kappa',
           'contraction',
           'product_coordinates',
           'realization_equivalent',
           'is_constant_presentation',
           'pi0',
           'with_contractible_factor',
           'h0_sing',
           'h0_moore',
           'delta',
           'delta_basis',
           'sample_points',
           'random_operator',
           'random_barycentric',
           'random_compatible_pair',
           'random_finseq',
           'random_rational',
           'compare_h0',
           'run_realization_checks']

import logging
import numpy as np

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import total_ordering
from typing import Optional, Tuple

from moore_utils import zfun
from moore_utils.cantor import CantorPoint
from moore_utils.maps import is_positional_identity
from moore_utils.chain_complex import homology_at_depth, nerve_unit_cantor, \
    truncation_matrix
from moore_utils.misc import fraction_to_string
from moore_utils.errors import LevelRangeError, MooreError, \
    ParameterRangeError, ParseError, SpaceMismatchError

# ===Import globals
from moore_utils.globals import _DEFAULT_SEED, _DISCRETE_KIND, \
    _MAX_SAMPLE_SIMPLEX_DIM, _MAX_SAMPLE_SEQUENCE_INDEX, _MAX_SAMPLE_WEIGHT, \
    _MAX_SAMPLE_PREPERIOD, _MAX_SAMPLE_PERIOD

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class SimplicialOperator:
    """Monotone map theta: [m] -> [n], values = (theta(0), ..., theta(m))
    """
    m: int
    n: int
    values: Tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)

        if self.m < 0 or self.n < 0 or len(values) != self.m + 1:
            raise ParseError('An operator [{0:d}] -> [{1:d}] needs {2:d} values'.format(
                self.m, self.n, self.m + 1))

        if any(v < 0 or v > self.n for v in values) or \
                any(a > b for a, b in zip(values, values[1:])):
            raise ParseError(
                'Not a monotone map into [{0:d}]: {1:s}'.format(
                    self.n, str(values)))

        object.__setattr__(self, 'values', values)


@dataclass(frozen=True)
class BarycentricPoint:
    """Point of the standard simplex Delta^n
    """
    n: int
    coords: Tuple[Fraction, ...]

    def __post_init__(self):
        coords = tuple(Fraction(c) for c in self.coords)

        if len(coords) != self.n + 1:
            raise ParseError('A point of Delta^{0:d} has {1:d} coordinates'.format(
                self.n, self.n + 1))
        if any(c < 0 for c in coords) or sum(coords) != 1:
            raise ParseError(
                'Barycentric coordinates have to be >= 0 and sum to 1: {0:s}'.format(
                    ','.join(fraction_to_string(c) for c in coords)))

        object.__setattr__(self, 'coords', coords)


@dataclass(frozen=True)
class FinSeqPoint:
    """Point of Delta^inf_fin, stored as sorted (index, value) pairs with no
    zero values
    """
    entries: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        entries = tuple(sorted((int(k), Fraction(v))
                               for k, v in self.entries if v != 0))
        indices = [k for k, _ in entries]

        if len(set(indices)) != len(indices) or any(k < 0 for k in indices):
            raise ParseError('Indices have to be distinct and nonnegative!')
        if any(v < 0 for _, v in entries) or sum(v for _, v in entries) != 1:
            raise ParseError(
                'Sequence values have to be >= 0 and sum to 1!')

        object.__setattr__(self, 'entries', entries)

    def value(self, k):
        for index, v in self.entries:
            if index == k:
                return v
        return Fraction(0)

    def top_index(self):
        return self.entries[-1][0]


E0 = FinSeqPoint(((0, Fraction(1)),))


class Pi0Kind(Enum):
    FINITE_POINTS = 'FinitePoints'
    SINGLETON_CONTINUUM = 'SingletonComponents-Continuum'
    PRODUCT_WITH_CONTRACTIBLE = 'ProductWithContractible'
    DISJOINT_UNION = 'DisjointUnion'


@dataclass(frozen=True)
class Pi0Descriptor:
    """Path components of a presented space

    FINITE_POINTS carries the number of points, PRODUCT_WITH_CONTRACTIBLE the
    descriptor of the other factor, DISJOINT_UNION one descriptor per part.
    """
    kind: Pi0Kind
    points: int = 0
    inner: Optional['Pi0Descriptor'] = None
    parts: Tuple['Pi0Descriptor', ...] = ()

    def __str__(self):
        if self.kind == Pi0Kind.FINITE_POINTS:
            return '{0:s}({1:d})'.format(self.kind.value, self.points)
        if self.kind == Pi0Kind.PRODUCT_WITH_CONTRACTIBLE:
            return '{0:s}({1:s})'.format(self.kind.value, str(self.inner))
        if self.kind == Pi0Kind.DISJOINT_UNION:
            return ' + '.join(str(p) for p in self.parts)
        return self.kind.value


@total_ordering
@dataclass(frozen=True)
class Cardinality:
    """A finite cardinal k, aleph_0 or 2^aleph_0

    Only the order of these classes is modelled, with aleph_0 < 2^aleph_0.
    """
    tier: int
    value: int = 0

    FINITE = 0
    ALEPH_0 = 1
    CONTINUUM = 2

    @classmethod
    def finite(cls, k):
        return cls(cls.FINITE, k)

    @classmethod
    def aleph_0(cls):
        return cls(cls.ALEPH_0)

    @classmethod
    def continuum(cls):
        return cls(cls.CONTINUUM)

    def is_countable(self):
        return self.tier <= self.ALEPH_0

    def __lt__(self, other):
        return (self.tier, self.value) < (other.tier, other.value)

    def __str__(self):
        if self.tier == self.FINITE:
            return str(self.value)
        return 'aleph_0' if self.tier == self.ALEPH_0 else '2^aleph_0'


@dataclass(frozen=True)
class GroupDescription:
    """A free abelian group: its name, the number of its generators and the
    cardinality of the group itself
    """
    description: str
    generators: Cardinality
    cardinality: Cardinality


@dataclass(frozen=True)
class FinSupFun:
    """Finitely supported function X -> Z, i.e. an element of the direct sum
    of copies of Z indexed by the points of X
    """
    values: Tuple[Tuple[CantorPoint, int], ...] = ()

    def __post_init__(self):
        values = tuple(sorted(((x, int(v)) for x, v in self.values if v != 0),
                              key=lambda item: (len(item[0].preperiod),
                                                str(item[0]))))

        if len(set(x for x, _ in values)) != len(values):
            raise ParseError('Repeated point in a finitely supported function')

        object.__setattr__(self, 'values', values)

    def evaluate(self, x):
        for point, v in self.values:
            if point == x:
                return v
        return 0


@dataclass(frozen=True)
class DeltaBasis:
    """The functions delta_x of a point list; duplicates lists the index pairs
    (i, j), i < j, of equal deltas
    """
    deltas: Tuple[FinSupFun, ...]
    duplicates: Tuple[Tuple[int, int], ...] = ()

    @property
    def injective(self):
        return len(self.duplicates) == 0


class Verdict(Enum):
    NOT_ISOMORPHIC = 'NotIsomorphic'
    INCONCLUSIVE = 'Inconclusive'


@dataclass(frozen=True)
class Witness:
    name: str
    passed: bool
    detail: str = ''


@dataclass(frozen=True)
class ComparisonReport:
    parameters: dict
    moore: dict
    singular: dict
    verdict: Verdict
    reason: str
    witnesses: Tuple[Witness, ...]

    def failed(self):
        return [w for w in self.witnesses if not w.passed]


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: int
    failed: int
    witness: Optional[str] = None


@dataclass(frozen=True)
class RealizationCheckReport:
    samples: int
    seed: int
    results: Tuple[PropertyResult, ...]

    @property
    def passed(self):
        return all(r.failed == 0 for r in self.results)

# === Functions ===


def identity_operator(n):
    return SimplicialOperator(n, n, tuple(range(n + 1)))


def operator_compose(theta_2, theta_1):
    """theta_2 o theta_1
    """
    if theta_1.n != theta_2.m:
        raise SpaceMismatchError(
            'Cannot compose [{0:d}] -> [{1:d}] after [{2:d}] -> [{3:d}]'.format(
                theta_2.m, theta_2.n, theta_1.m, theta_1.n))

    return SimplicialOperator(theta_1.m, theta_2.n,
                              tuple(theta_2.values[v] for v in theta_1.values))


def affine_push(theta, t):
    """The affine map Delta^m -> Delta^n induced by theta: the coordinate j of
    the image is the sum of the t_i with theta(i) = j

    Parameters
    ----------
    theta: SimplicialOperator

    t: BarycentricPoint
        A point of Delta^m

    Returns
    -------
    BarycentricPoint of Delta^n

    """
    if t.n != theta.m:
        raise SpaceMismatchError(
            'The operator starts at [{0:d}], the point lies in Delta^{1:d}'.format(
                theta.m, t.n))

    coords = [Fraction(0)] * (theta.n + 1)

    for i, j in enumerate(theta.values):
        coords[j] += t.coords[i]

    return BarycentricPoint(theta.n, tuple(coords))


def embed_j(t):
    """(t_0, ..., t_n) -> (t_0, ..., t_n, 0, 0, ...)
    """
    return FinSeqPoint(tuple(enumerate(t.coords)))


def kappa(a):
    """The point (a_0, ..., a_n) of the smallest simplex containing a
    """
    n = a.top_index()
    return BarycentricPoint(n, tuple(a.value(k) for k in range(n + 1)))


def contraction(a, s):
    """(1 - s) a + s e_0, the straight line homotopy to e_0 at time s
    """
    s = Fraction(s)

    if s < 0 or s > 1:
        raise ParameterRangeError(
            'The homotopy parameter has to lie in [0,1], got {0:s}'.format(
                fraction_to_string(s)))

    values = {k: (1 - s) * v for k, v in a.entries}
    values[0] = values.get(0, Fraction(0)) + s

    return FinSeqPoint(tuple(values.items()))


def product_coordinates(t, x):
    """Image (x, j(t)) of the class of (t, x) under |cX| -> X x Omega
    """
    return (x, embed_j(t))


def realization_equivalent(first, second):
    """True iff two pairs (t, x) name the same point of the realization of the
    constant simplicial space
    """
    return product_coordinates(*first) == product_coordinates(*second)


def is_constant_presentation(P):
    """True iff every level has the shape of level 0 and every face is the
    identity (components matched by position)
    """
    for level in P.levels:
        if not level.has_same_shape(P.levels[0]):
            return False

    return all(is_positional_identity(d)
               for level_faces in P.faces for d in level_faces)


def pi0(space):
    """Path components of a presented space

    Parameters
    ----------
    space: Space

    Returns
    -------
    Pi0Descriptor

    """
    discrete_points = sum(c.size for c in space.components
                          if c.kind == _DISCRETE_KIND)
    n_cantor = sum(1 for c in space.components if c.kind != _DISCRETE_KIND)

    if n_cantor == 0:
        return Pi0Descriptor(Pi0Kind.FINITE_POINTS, points=discrete_points)

    continuum = Pi0Descriptor(Pi0Kind.SINGLETON_CONTINUUM)

    if discrete_points == 0:
        return continuum

    return Pi0Descriptor(Pi0Kind.DISJOINT_UNION, parts=(
        continuum, Pi0Descriptor(Pi0Kind.FINITE_POINTS,
                                 points=discrete_points)))


def with_contractible_factor(descriptor):
    """Descriptor of the product with a contractible space
    """
    return Pi0Descriptor(Pi0Kind.PRODUCT_WITH_CONTRACTIBLE, inner=descriptor)


def _free_group_size(generators):
    if generators == Cardinality.finite(0):
        return Cardinality.finite(1)
    if generators.is_countable():
        return Cardinality.aleph_0()
    return generators


def h0_sing(descriptor):
    """Singular H_0 as the free abelian group on the path components

    Parameters
    ----------
    descriptor: Pi0Descriptor

    Returns
    -------
    GroupDescription

    """
    if descriptor.kind == Pi0Kind.PRODUCT_WITH_CONTRACTIBLE:
        return h0_sing(descriptor.inner)

    if descriptor.kind == Pi0Kind.FINITE_POINTS:
        generators = Cardinality.finite(descriptor.points)
        if descriptor.points == 0:
            name = '0'
        elif descriptor.points == 1:
            name = 'Z'
        else:
            name = 'Z^{0:d}'.format(descriptor.points)
    elif descriptor.kind == Pi0Kind.SINGLETON_CONTINUUM:
        generators = Cardinality.continuum()
        name = '(+)_{x in X} Z'
    else:
        groups = [h0_sing(part) for part in descriptor.parts]
        generators = max(g.generators for g in groups)
        name = ' + '.join(g.description for g in groups)

    return GroupDescription(name, generators, _free_group_size(generators))


def h0_moore():
    """H_0 of the unit groupoid of X: C(X, Z), a countable group
    """
    return GroupDescription('C(X,Z)', Cardinality.aleph_0(),
                            Cardinality.aleph_0())


def delta(x):
    """delta_x, the indicator of the point x
    """
    return FinSupFun(((x, 1),))


def delta_basis(points):
    """delta_x for every point, with the index pairs of equal deltas
    """
    deltas = tuple(delta(x) for x in points)
    first_seen, duplicates = {}, []

    for j, d in enumerate(deltas):
        if d in first_seen:
            duplicates.append((first_seen[d], j))
        else:
            first_seen[d] = j

    return DeltaBasis(deltas, tuple(duplicates))


def _random_word(rng, length):
    return ''.join('1' if b else '0' for b in rng.integers(0, 2, size=length))


def sample_points(rng, count):
    """`count` pairwise distinct eventually periodic points

    Parameters
    ----------
    rng: numpy.random.Generator

    count: int

    Returns
    -------
    list of CantorPoint

    """
    points, seen = [], set()

    while len(points) < count:
        x = CantorPoint(
            _random_word(rng, int(rng.integers(0, _MAX_SAMPLE_PREPERIOD + 1))),
            _random_word(rng, int(rng.integers(1, _MAX_SAMPLE_PERIOD + 1))))

        if x not in seen:
            seen.add(x)
            points.append(x)

    return points


def random_operator(rng, m=None, n=None):
    """Random monotone map [m] -> [n]; random dimensions when not given
    """
    if m is None:
        m = int(rng.integers(0, _MAX_SAMPLE_SIMPLEX_DIM + 1))
    if n is None:
        n = int(rng.integers(0, _MAX_SAMPLE_SIMPLEX_DIM + 1))

    values = sorted(int(v) for v in rng.integers(0, n + 1, size=m + 1))

    return SimplicialOperator(m, n, tuple(values))


def _random_weights(rng, size):
    weights = [int(w) for w in rng.integers(0, _MAX_SAMPLE_WEIGHT + 1,
                                            size=size)]

    if sum(weights) == 0:
        weights[int(rng.integers(size))] = 1

    total = sum(weights)

    return [Fraction(w, total) for w in weights]


def random_barycentric(rng, n):
    """Random point of Delta^n with small denominators
    """
    return BarycentricPoint(n, tuple(_random_weights(rng, n + 1)))


def random_compatible_pair(rng):
    """Random (theta, t) with t supported on the fixed points of theta

    On such pairs theta_* does not move any mass, so j(theta_*(t)) = j(t)
    holds exactly. An operator moving the support breaks it: theta = (1) on
    [0] -> [1] sends (1) to (0, 1).

    Returns
    -------
    (SimplicialOperator, BarycentricPoint)

    """
    while True:
        theta = random_operator(rng)
        fixed = [i for i, v in enumerate(theta.values) if v == i]

        if len(fixed) > 0:
            break

    coords = [Fraction(0)] * (theta.m + 1)
    for i, w in zip(fixed, _random_weights(rng, len(fixed))):
        coords[i] = w

    return theta, BarycentricPoint(theta.m, tuple(coords))


def random_finseq(rng):
    """Random point of Delta^inf_fin
    """
    size = int(rng.integers(1, _MAX_SAMPLE_SIMPLEX_DIM + 1))
    indices = rng.choice(_MAX_SAMPLE_SEQUENCE_INDEX + 1, size=size,
                         replace=False)

    return FinSeqPoint(tuple(zip((int(k) for k in indices),
                                 _random_weights(rng, size))))


def random_rational(rng):
    """Random rational in [0, 1]
    """
    q = int(rng.integers(1, _MAX_SAMPLE_WEIGHT + 1))
    return Fraction(int(rng.integers(0, q + 1)), q)


def _boundary_pattern_witness(P, depth):
    """del_0 and odd boundaries zero, even boundaries >= 2 the identity
    """
    for n in range(P.max_level + 1):
        matrix = truncation_matrix(P, n, depth)
        expected_identity = n >= 2 and n % 2 == 0

        if expected_identity and not matrix.is_identity():
            return Witness('boundary-pattern', False,
                           'del_{0:d} is not the identity'.format(n))
        if not expected_identity and not matrix.is_zero():
            return Witness('boundary-pattern', False,
                           'del_{0:d} is not zero'.format(n))

    return Witness('boundary-pattern', True,
                   'del_0..del_{0:d} alternate 0/id at depth {1:d}'.format(
                       P.max_level, depth))


def _homology_witness(P, depth):
    for n in range(P.max_level):
        group = homology_at_depth(P, n, depth)
        expected = 2 ** depth if n == 0 else 0

        if group.rank != expected or len(group.torsion) > 0:
            return Witness('moore-h0-ranks', False,
                           'H_{0:d} at depth {1:d} is {2:s}'.format(
                               n, depth, str(group)))

    return Witness('moore-h0-ranks', True,
                   'H_0 has rank {0:d} at depth {1:d}, higher H_n vanish'.format(
                       2 ** depth, depth))


def _enumeration_witnesses(samples):
    functions = zfun.first_functions(samples)
    distinct = len(set(functions)) == len(functions)

    stage = 0
    while zfun.stage_bound(stage + 1) <= samples:
        stage += 1

    grid = set(zfun.functions_of_stage_grid(stage))
    listed = set(functions[:zfun.stage_bound(stage)])

    return [Witness('enumeration-distinct', distinct,
                    'first {0:d} enumerated functions {1:s}'.format(
                        samples,
                        'pairwise distinct' if distinct else 'repeat')),
            Witness('enumeration-stage-complete', grid == listed,
                    'stage {0:d} ({1:d} functions) {2:s}'.format(
                        stage, zfun.stage_bound(stage),
                        'complete' if grid == listed else 'incomplete'))]


def _delta_witnesses(rng, samples, depth):
    points = sample_points(rng, samples)
    basis = delta_basis(points)

    injective = basis.injective and len(set(basis.deltas)) == samples

    not_constant = 0
    for x in points:
        y, at_x, at_y = zfun.delta_witness(x, depth)
        if y != x and y.prefix(depth) == x.prefix(depth) and \
                delta(x).evaluate(x) == at_x and \
                delta(x).evaluate(y) == at_y and at_x != at_y:
            not_constant += 1

    return [Witness('delta-injective', injective,
                    '{0:d} points give {1:d} distinct deltas'.format(
                        samples, len(set(basis.deltas)))),
            Witness('delta-not-locally-constant', not_constant == samples,
                    '{0:d}/{1:d} deltas separated at depth {2:d}'.format(
                        not_constant, samples, depth))]


def _checked(name, check, *args):
    """Run a witness check, turning library errors into a failed witness
    """
    try:
        result = check(*args)
    except MooreError as e:
        logger.warning('Check {0:s} failed: {1:s}'.format(name, str(e)))
        return [Witness(name, False, str(e))]

    return result if isinstance(result, list) else [result]


def compare_h0(max_level=3, depth=3, samples=100, seed=_DEFAULT_SEED,
               presentation=None):
    """Compare the Moore H_0 of the unit groupoid of X with the singular H_0
    of its classifying space

    The Moore side is checked on the depth truncations (boundary pattern, H_0
    ranks) and by the enumeration of C(X, Z) (countability). The singular side
    is described through the path components of X x Omega, and the points of X
    inject into it through x -> delta_x, where no delta_x is locally constant.

    Parameters
    ----------
    max_level: int
        Top level of the nerve, at least 2

    depth: int
        Truncation depth

    samples: int
        Number of enumerated functions and of sampled points

    seed: int, optional

    presentation: SimplicialPresentation, optional
        Replaces the built-in nerve (e.g. a corrupted one)

    Returns
    -------
    ComparisonReport

    """
    if max_level < 2:
        raise LevelRangeError('The comparison needs max_level >= 2')
    if samples < 1 or depth < 0:
        raise ParameterRangeError('Need samples >= 1 and depth >= 0')

    P = nerve_unit_cantor(max_level) if presentation is None else presentation
    rng = np.random.default_rng(seed)

    logger.info('Comparing H_0 for {0:s} up to level {1:d}'.format(
        P.name, P.max_level))

    witnesses = []
    witnesses += _checked('boundary-pattern', _boundary_pattern_witness,
                          P, depth)
    witnesses += _checked('moore-h0-ranks', _homology_witness, P, depth)
    witnesses += _checked('enumeration', _enumeration_witnesses, samples)

    constant = is_constant_presentation(P)
    witnesses.append(Witness(
        'constant-presentation', constant,
        'the nerve {0:s} the constant simplicial space on X'.format(
            'is' if constant else 'is not')))

    descriptor = with_contractible_factor(pi0(P.levels[0]))
    singular = h0_sing(descriptor)
    moore = h0_moore()

    witnesses.append(Witness(
        'pi0-continuum',
        descriptor.inner.kind == Pi0Kind.SINGLETON_CONTINUUM,
        'pi_0 of X x Omega: {0:s}'.format(str(descriptor))))

    witnesses += _delta_witnesses(rng, samples, depth)

    separated = moore.cardinality < singular.cardinality
    witnesses.append(Witness(
        'cardinality-separation', separated,
        '|H_0| = {0:s} vs |H_0^sing| >= {1:s}'.format(
            str(moore.cardinality), str(singular.cardinality))))

    failed = [w.name for w in witnesses if not w.passed]

    if len(failed) == 0:
        verdict = Verdict.NOT_ISOMORPHIC
        reason = 'countable vs. cardinality >= 2^aleph_0'
    else:
        verdict = Verdict.INCONCLUSIVE
        reason = 'failed checks: {0:s}'.format(', '.join(failed))

    logger.info('Verdict: {0:s} ({1:s})'.format(verdict.value, reason))

    return ComparisonReport(
        parameters={'maxLevel': P.max_level, 'depth': depth,
                    'samples': samples, 'seed': seed},
        moore={'group': moore.description,
               'cardinality': str(moore.cardinality),
               'countable': moore.cardinality.is_countable()},
        singular={'pi0': str(descriptor),
                  'group': singular.description,
                  'cardinality': str(singular.cardinality),
                  'countable': singular.cardinality.is_countable()},
        verdict=verdict,
        reason=reason,
        witnesses=tuple(witnesses))


def _faulty_push(theta, t):
    """affine_push with the target coordinates read backwards
    """
    pushed = affine_push(theta, t)
    return BarycentricPoint(pushed.n, tuple(reversed(pushed.coords)))


class _PropertyCounter:

    def __init__(self, name):
        self.name = name
        self.passed = 0
        self.failed = 0
        self.witness = None

    def record(self, ok, witness):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.witness is None:
                self.witness = witness()

    def result(self):
        return PropertyResult(self.name, self.passed, self.failed,
                              self.witness)


def _describe(*objects):
    return '; '.join(str(o) for o in objects)


def run_realization_checks(samples, seed=_DEFAULT_SEED, inject_fault=False):
    """Randomized check of the identities of the Delta^inf_fin model

    Parameters
    ----------
    samples: int
        Number of random cases per property

    seed: int, optional

    inject_fault: bool, optional
        Replace the affine push by a broken one

    Returns
    -------
    RealizationCheckReport

    """
    rng = np.random.default_rng(seed)
    push = _faulty_push if inject_fault else affine_push

    if inject_fault:
        logger.warning('Running the realization checks with a broken push!')

    counters = {name: _PropertyCounter(name) for name in (
        'affine-barycentric', 'affine-functoriality', 'j-compatibility',
        'j-kappa-roundtrip', 'kappa-j-roundtrip', 'contraction-membership',
        'contraction-endpoints', 'product-identification')}

    for _ in range(samples):
        theta_1 = random_operator(rng)
        theta_2 = random_operator(rng, m=theta_1.n)
        t = random_barycentric(rng, theta_1.m)
        x = sample_points(rng, 1)[0]

        pushed = push(theta_1, t)
        counters['affine-barycentric'].record(
            sum(pushed.coords) == 1 and all(c >= 0 for c in pushed.coords),
            lambda: _describe(theta_1, t))
        counters['affine-functoriality'].record(
            push(operator_compose(theta_2, theta_1), t) ==
            push(theta_2, pushed),
            lambda: _describe(theta_2, theta_1, t))
        counters['kappa-j-roundtrip'].record(
            embed_j(kappa(embed_j(t))) == embed_j(t), lambda: _describe(t))

        theta, u = random_compatible_pair(rng)
        moved = push(theta, u)

        counters['j-compatibility'].record(
            embed_j(moved) == embed_j(u), lambda: _describe(theta, u))
        counters['product-identification'].record(
            realization_equivalent((moved, x), (u, x)),
            lambda: _describe(theta, u, x))

        a = random_finseq(rng)
        s = random_rational(rng)

        counters['j-kappa-roundtrip'].record(
            embed_j(kappa(a)) == a, lambda: _describe(a))

        try:
            contracted = contraction(a, s)
            member = sum(v for _, v in contracted.entries) == 1
        except ParseError:
            member = False
        counters['contraction-membership'].record(
            member, lambda: _describe(a, s))
        counters['contraction-endpoints'].record(
            contraction(a, 0) == a and contraction(a, 1) == E0,
            lambda: _describe(a))

    results = tuple(c.result() for c in counters.values())

    for r in results:
        logger.debug('{0:s}: {1:d} passed, {2:d} failed'.format(
            r.name, r.passed, r.failed))

    return RealizationCheckReport(samples, seed, results)


# === MAIN ===
if __name__ == "__main__":
    pass
