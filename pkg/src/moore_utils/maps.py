"""Local homeomorphisms between presented spaces, given by finitely many prefix
substitution charts u.t -> v.t, and the fiber-sum pushforward

    (p_* f)(z) = sum of f(y) over the y with p(y) = z

together with the pullback, composition and inversion of such maps.

The chart sources of a valid map partition its domain; the targets may
overlap (the map need not be injective) and need not cover the codomain.
"""

__all__ = ['PrefixChart',
           'LocalHomeo',
           'validate',
           'check_valid',
           'apply',
           'fiber',
           'pushforward',
           'pullback',
           'compose',
           'invert',
           'semantically_equal',
           'is_positional_identity',
           'identity_map',
           'shift_map',
           'bit_swap_map',
           'random_partition',
           'random_local_homeo',
           'random_homeo']

import logging

from dataclasses import dataclass
from typing import Tuple

from moore_utils import zfun
from moore_utils.cantor import Cylinder, SpacePoint, WordRelation, \
    cantor_space, point_in_cylinder, subtract_words, \
    word_relation
from moore_utils.errors import ComponentError, Diagnostic, \
    MapValidationError, NotInvertibleError, SpaceMismatchError

# ===Import globals
from moore_utils.globals import _BITS, _DISCRETE_KIND

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class PrefixChart:
    """The homeomorphism [u] -> [v], u.t -> v.t between two cylinders, or
    a single point to a single point for discrete components
    """
    source: Cylinder
    target: Cylinder

    def is_discrete(self):
        return self.source.is_discrete()

    @property
    def shift(self):
        """depth(v) - depth(u); 0 for discrete charts
        """
        if self.is_discrete():
            return 0
        return len(self.target.word) - len(self.source.word)


@dataclass(frozen=True)
class LocalHomeo:
    """A local homeomorphism presented by prefix charts

    Construction does not validate; see `validate` and `check_valid`.
    """
    domain: object
    codomain: object
    charts: Tuple[PrefixChart, ...]

    def __post_init__(self):
        object.__setattr__(self, 'charts', tuple(self.charts))

# === Functions ===


def _chart_kind_diagnostics(p):
    diagnostics = []

    for k, chart in enumerate(p.charts):
        problems = []

        if chart.source.is_discrete() != chart.target.is_discrete():
            problems.append('mixes a discrete and a Cantor cell')
        if not p.domain.contains_cylinder(chart.source):
            problems.append('source {0:s}:{1:s} is not in the domain'.format(
                chart.source.component, str(chart.source.word)))
        if not p.codomain.contains_cylinder(chart.target):
            problems.append('target {0:s}:{1:s} is not in the codomain'.format(
                chart.target.component, str(chart.target.word)))

        for problem in problems:
            diagnostics.append(Diagnostic('component-mismatch', (k,), problem))

    return diagnostics


def _cells_overlap(a, b):
    if a.component != b.component:
        return False
    if a.is_discrete():
        return a.word == b.word
    return word_relation(a.word, b.word) != WordRelation.DISJOINT


def _overlaps(cylinders, indices):
    """Pairs of indices whose cylinders intersect
    """
    pairs = []
    first_point = {}
    words = []

    # Discrete points only meet equal points
    for k in indices:
        if cylinders[k].is_discrete():
            key = (cylinders[k].component, cylinders[k].word)
            if key in first_point:
                pairs.append((first_point[key], k))
            else:
                first_point[key] = k
        else:
            words.append(k)

    for a in range(len(words)):
        for b in range(a + 1, len(words)):
            if _cells_overlap(cylinders[words[a]], cylinders[words[b]]):
                pairs.append((words[a], words[b]))

    return sorted(pairs)


def _uncovered(space, cylinders):
    """Per component, the cells of `space` not covered by the cylinders
    """
    missing = []

    for component in space.components:
        covered = [c.word for c in cylinders if c.component == component.name]

        if component.kind == _DISCRETE_KIND:
            covered_points = set(covered)
            gap = [i for i in component.cells() if i not in covered_points]
        else:
            gap = list(subtract_words(component.restriction,
                                      [w for w in covered
                                       if isinstance(w, str)]))

        if len(gap) > 0:
            missing.append((component.name, gap))

    return missing


def validate(p):
    """Check that the chart sources partition the domain exactly

    Parameters
    ----------
    p: LocalHomeo

    Returns
    -------
    list of Diagnostic; empty iff p is valid

    """
    diagnostics = _chart_kind_diagnostics(p)

    bad = set(k for d in diagnostics for k in d.charts)
    good = [k for k in range(len(p.charts)) if k not in bad]
    sources = [chart.source for chart in p.charts]

    for a, b in _overlaps(sources, good):
        diagnostics.append(Diagnostic(
            'overlap', (a, b),
            'chart sources {0:s}:{1:s} and {2:s}:{3:s} intersect'.format(
                sources[a].component, str(sources[a].word),
                sources[b].component, str(sources[b].word))))

    for name, gap in _uncovered(p.domain, [sources[k] for k in good]):
        diagnostics.append(Diagnostic(
            'gap', (),
            "no chart covers {0:s} in component '{1:s}'".format(
                ','.join("'{0:s}'".format(str(w)) for w in gap), name)))

    for d in diagnostics:
        logger.debug('Invalid chart presentation: {0:s}'.format(str(d)))

    return diagnostics


def check_valid(p):
    """Raise MapValidationError if p is not a valid presentation
    """
    diagnostics = validate(p)

    if len(diagnostics) > 0:
        raise MapValidationError(diagnostics)

    return p


def apply(p, y):
    """Image of the point y under p

    Parameters
    ----------
    p: LocalHomeo
        A validated map

    y: SpacePoint
        A point of the domain

    Returns
    -------
    SpacePoint

    """
    if not p.domain.contains_point(y):
        raise ComponentError(
            'Point {0:s} is not part of the domain'.format(str(y)))

    for chart in p.charts:
        if chart.source.component != y.component:
            continue
        if not point_in_cylinder(y, chart.source):
            continue

        if chart.is_discrete():
            return SpacePoint(chart.target.component, chart.target.word)

        image = y.value.drop(len(chart.source.word)).prepend(
            chart.target.word)

        return SpacePoint(chart.target.component, image)

    raise ComponentError('No chart contains the point {0:s}'.format(str(y)))


def fiber(p, z):
    """All preimages of z, in chart order

    Parameters
    ----------
    p: LocalHomeo

    z: SpacePoint
        A point of the codomain

    Returns
    -------
    list of SpacePoint (may be empty)

    """
    if not p.codomain.contains_point(z):
        raise ComponentError(
            'Point {0:s} is not part of the codomain'.format(str(z)))

    preimages = []

    for chart in p.charts:
        if chart.target.component != z.component:
            continue
        if not point_in_cylinder(z, chart.target):
            continue

        if chart.is_discrete():
            value = chart.source.word
        else:
            value = z.value.drop(len(chart.target.word)).prepend(
                chart.source.word)

        preimages.append(SpacePoint(chart.source.component, value))

    return preimages


def _transport(charts, f, forward):
    """Move the cells of f through the charts, summing overlaps

    forward=True moves cells from chart sources to targets (pushforward),
    forward=False from targets to sources (pullback).
    """
    summands = []
    point_values = {}

    for chart in charts:
        src, dst = (chart.source, chart.target) if forward else \
            (chart.target, chart.source)

        if chart.is_discrete():
            if src.component not in point_values:
                point_values[src.component] = dict(f.cells(src.component))

            value = point_values[src.component].get(src.word, 0)
            if value != 0:
                summands.append((Cylinder(dst.component, dst.word), value))
            continue

        for cell, value in f.cells(src.component):
            relation = word_relation(src.word, cell)

            if relation in (WordRelation.EQUAL, WordRelation.U_PREFIX_OF_V):
                moved = dst.word + cell[len(src.word):]
                summands.append((Cylinder(dst.component, moved), value))
            elif relation == WordRelation.V_PREFIX_OF_U:
                summands.append((Cylinder(dst.component, dst.word), value))

    return summands


def pushforward(p, f):
    """Fiber sum p_* f

    Each chart carries the part of f inside its source to its target cylinder,
    and the contributions of all charts are added.

    Parameters
    ----------
    p: LocalHomeo
        A validated map

    f: LocIntFun
        A function on the domain of p

    Returns
    -------
    LocIntFun on the codomain of p

    """
    if f.space != p.domain:
        raise SpaceMismatchError(
            'The function does not live on the domain of the map!')

    return zfun.make(p.codomain, _transport(p.charts, f, forward=True))


def pullback(p, g):
    """p^* g = g o p

    Parameters
    ----------
    p: LocalHomeo
        A validated map

    g: LocIntFun
        A function on the codomain of p

    Returns
    -------
    LocIntFun on the domain of p

    """
    if g.space != p.codomain:
        raise SpaceMismatchError(
            'The function does not live on the codomain of the map!')

    return zfun.make(p.domain, _transport(p.charts, g, forward=False))


def compose(q, p):
    """Presentation of q o p

    Every chart of p is cut into the pieces mapped into single charts of q,
    which is the coarsest refinement for which the prefix rules compose.

    Parameters
    ----------
    q: LocalHomeo
        Applied second

    p: LocalHomeo
        Applied first; its codomain has to be the domain of q

    Returns
    -------
    LocalHomeo from the domain of p to the codomain of q

    """
    if p.codomain != q.domain:
        raise SpaceMismatchError(
            'Cannot compose: the codomain of p is not the domain of q!')

    charts = []
    by_point = {}

    for qc in q.charts:
        if qc.is_discrete():
            by_point.setdefault(qc.source, []).append(qc)

    for pc in p.charts:
        if pc.is_discrete():
            charts.extend(PrefixChart(pc.source, qc.target)
                          for qc in by_point.get(pc.target, []))
            continue

        for qc in q.charts:
            if qc.is_discrete() or \
                    qc.source.component != pc.target.component:
                continue

            v, a = pc.target.word, qc.source.word
            relation = word_relation(v, a)

            if relation in (WordRelation.EQUAL, WordRelation.U_PREFIX_OF_V):
                source = Cylinder(pc.source.component,
                                  pc.source.word + a[len(v):])
                charts.append(PrefixChart(source, qc.target))
            elif relation == WordRelation.V_PREFIX_OF_U:
                target = Cylinder(qc.target.component,
                                  qc.target.word + v[len(a):])
                charts.append(PrefixChart(pc.source, target))

    logger.debug('Composed {0:d} and {1:d} charts into {2:d}'.format(
        len(p.charts), len(q.charts), len(charts)))

    return LocalHomeo(p.domain, q.codomain, tuple(charts))


def invert(p):
    """Inverse of a bijective map: the charts with source and target swapped

    Parameters
    ----------
    p: LocalHomeo
        A validated map whose chart targets partition the codomain

    Returns
    -------
    LocalHomeo

    """
    targets = [chart.target for chart in p.charts]
    overlaps = _overlaps(targets, list(range(len(targets))))

    if len(overlaps) > 0:
        raise NotInvertibleError(
            'Not injective: targets overlap (charts {0:d} and {1:d})'.format(
                *overlaps[0]))

    gaps = _uncovered(p.codomain, targets)

    if len(gaps) > 0:
        raise NotInvertibleError(
            "Not surjective: target gap in component '{0:s}'".format(
                gaps[0][0]))

    return LocalHomeo(p.codomain, p.domain,
                      tuple(PrefixChart(c.target, c.source)
                            for c in p.charts))


def _image_on_piece(chart, piece):
    """Target cell of the sub-piece `piece` of a Cantor chart source
    """
    return Cylinder(chart.target.component,
                    chart.target.word + piece[len(chart.source.word):])


def semantically_equal(p, q):
    """True iff p and q are the same map

    Both are compared on the common refinement of their chart sources; on a
    common piece two prefix rules agree iff they produce the same target word.

    Parameters
    ----------
    p, q: LocalHomeo
        Validated maps

    Returns
    -------
    bool

    """
    if p.domain != q.domain or p.codomain != q.codomain:
        return False

    q_points = {}
    for qc in q.charts:
        if qc.is_discrete():
            q_points.setdefault(qc.source, []).append(qc)

    for pc in p.charts:
        if pc.is_discrete():
            if any(qc.target != pc.target
                   for qc in q_points.get(pc.source, [])):
                return False
            continue

        for qc in q.charts:
            if not _cells_overlap(pc.source, qc.source):
                continue

            piece = max(pc.source.word, qc.source.word, key=len)

            if _image_on_piece(pc, piece) != _image_on_piece(qc, piece):
                return False

    return True


def identity_map(space, codomain=None):
    """The identity of `space`, optionally read as a map onto an equally
    shaped `codomain`, matching the components by position
    """
    if codomain is None:
        codomain = space

    if not space.has_same_shape(codomain):
        raise SpaceMismatchError(
            'The identity needs two spaces of the same shape!')

    charts = []

    for a, b in zip(space.components, codomain.components):
        charts.extend(PrefixChart(Cylinder(a.name, cell), Cylinder(b.name, cell))
                      for cell in a.cells())

    return LocalHomeo(space, codomain, tuple(charts))


def is_positional_identity(p):
    """True iff p is the identity after matching components by position
    """
    if not p.domain.has_same_shape(p.codomain):
        return False

    return semantically_equal(p, identity_map(p.domain, p.codomain))


def _full_cantor_name(space):
    if len(space.components) != 1 or \
            space.components[0].kind == _DISCRETE_KIND or \
            space.components[0].restriction != ('',):
        raise SpaceMismatchError(
            'Expected a space of one full Cantor component!')

    return space.components[0].name


def shift_map(domain=None, codomain=None):
    """The shift x_1 x_2 x_3 ... -> x_2 x_3 ..., charts [0] -> [], [1] -> []
    """
    domain = cantor_space() if domain is None else domain
    codomain = domain if codomain is None else codomain

    a, b = _full_cantor_name(domain), _full_cantor_name(codomain)

    return LocalHomeo(domain, codomain,
                      tuple(PrefixChart(Cylinder(a, bit), Cylinder(b, ''))
                            for bit in _BITS))


def bit_swap_map(domain=None, codomain=None):
    """Flip of the first bit, charts [0] -> [1], [1] -> [0]
    """
    domain = cantor_space() if domain is None else domain
    codomain = domain if codomain is None else codomain

    a, b = _full_cantor_name(domain), _full_cantor_name(codomain)

    return LocalHomeo(domain, codomain,
                      (PrefixChart(Cylinder(a, '0'), Cylinder(b, '1')),
                       PrefixChart(Cylinder(a, '1'), Cylinder(b, '0'))))


def random_partition(rng, count, max_depth):
    """Partition of the Cantor set into at most `count` cylinders of depth at
    most `max_depth`, by splitting random leaves

    Parameters
    ----------
    rng: numpy.random.Generator

    count: int
        Wanted number of pieces

    max_depth: int

    Returns
    -------
    list of str (sorted)

    """
    leaves = ['']

    while len(leaves) < count:
        candidates = [w for w in leaves if len(w) < max_depth]

        if len(candidates) == 0:
            break

        w = candidates[int(rng.integers(len(candidates)))]
        leaves.remove(w)
        leaves.extend([w + '0', w + '1'])

    return sorted(leaves)


def _random_word(rng, max_depth):
    depth = int(rng.integers(0, max_depth + 1))
    return ''.join(_BITS[int(b)] for b in rng.integers(0, 2, size=depth))


def random_local_homeo(rng, domain=None, codomain=None, max_charts=6,
                       max_depth=4):
    """Random valid map between full Cantor components: a random partition of
    the domain, each piece sent to a random target cylinder
    """
    domain = cantor_space() if domain is None else domain
    codomain = domain if codomain is None else codomain

    a, b = _full_cantor_name(domain), _full_cantor_name(codomain)
    count = int(rng.integers(1, max_charts + 1))

    return LocalHomeo(domain, codomain, tuple(
        PrefixChart(Cylinder(a, u), Cylinder(b, _random_word(rng, max_depth)))
        for u in random_partition(rng, count, max_depth)))


def random_homeo(rng, domain=None, codomain=None, max_charts=6, max_depth=4):
    """Random homeomorphism: two random partitions with the same number of
    pieces, matched by a random permutation
    """
    domain = cantor_space() if domain is None else domain
    codomain = domain if codomain is None else codomain

    a, b = _full_cantor_name(domain), _full_cantor_name(codomain)

    sources = random_partition(
        rng, int(rng.integers(1, max_charts + 1)), max_depth)

    targets = []
    while len(targets) != len(sources):
        targets = random_partition(rng, len(sources), max_depth)

    order = rng.permutation(len(targets))

    return LocalHomeo(domain, codomain, tuple(
        PrefixChart(Cylinder(a, u), Cylinder(b, targets[int(k)]))
        for u, k in zip(sources, order)))


# === MAIN ===
if __name__ == "__main__":
    pass
