import itertools
import pytest

from moore_utils import maps, zfun
from moore_utils.cantor import ClopenOp, Cylinder, SpacePoint, \
    cantor_space, clopen_algebra, discrete_space, normalize_clopen, \
    parse_point
from moore_utils.maps import LocalHomeo, PrefixChart
from moore_utils.errors import ComponentError, MapValidationError, \
    NotInvertibleError, SpaceMismatchError


def _chart(u, v, a='X', b='X'):
    return PrefixChart(Cylinder(a, u), Cylinder(b, v))


def _at(text, component='X'):
    return SpacePoint(component, parse_point(text))


def _representatives(depth):
    """One eventually periodic point in each depth-`depth` cylinder
    """
    return [_at(''.join(w) + '(0)')
            for w in itertools.product('01', repeat=depth)]


def test_builtin_maps_are_valid():
    assert maps.validate(maps.shift_map()) == []
    assert maps.validate(maps.bit_swap_map()) == []
    assert maps.validate(maps.identity_map(cantor_space())) == []


def test_overlap_and_gap_are_reported(X):
    p = LocalHomeo(X, X, (_chart('0', '0'), _chart('01', '1')))
    kinds = [d.kind for d in maps.validate(p)]

    assert 'overlap' in kinds
    assert 'gap' in kinds

    with pytest.raises(MapValidationError) as e:
        maps.check_valid(p)
    assert len(e.value.diagnostics) == len(kinds)


def test_component_mismatch_is_reported(X):
    p = LocalHomeo(X, X, (_chart('0', '0', a='Y'), _chart('1', '1')))
    diagnostics = maps.validate(p)

    assert diagnostics[0].kind == 'component-mismatch'
    assert diagnostics[0].charts == (0,)


def test_apply():
    assert maps.apply(maps.bit_swap_map(), _at('01(0)')) == _at('11(0)')
    assert maps.apply(maps.shift_map(), _at('1(01)')) == _at('(01)')

    with pytest.raises(ComponentError):
        maps.apply(maps.shift_map(), _at('(0)', 'Y'))


def test_fiber_of_shift():
    z = _at('(1)')
    fiber = maps.fiber(maps.shift_map(), z)

    assert fiber == [_at('0(1)'), _at('(1)')]
    assert all(maps.apply(maps.shift_map(), y) == z for y in fiber)


def test_pushforward_of_shift(X):
    shift = maps.shift_map()

    assert maps.pushforward(shift, zfun.indicator(X, Cylinder('X', '01'))) \
        == zfun.indicator(X, Cylinder('X', '1'))
    assert maps.pushforward(shift, zfun.constant(X, 1)) == \
        zfun.constant(X, 2)


def test_pushforward_of_composed_shift(X):
    shift = maps.shift_map()
    twice = maps.compose(shift, shift)

    assert len(twice.charts) == 4
    assert maps.validate(twice) == []
    assert maps.pushforward(twice, zfun.constant(X, 1)) == \
        zfun.constant(X, 4)


def test_pullback_of_shift(X):
    pulled = maps.pullback(maps.shift_map(),
                           zfun.indicator(X, Cylinder('X', '1')))

    assert pulled == zfun.make(X, [(Cylinder('X', '01'), 1),
                                   (Cylinder('X', '11'), 1)])


def test_space_mismatch(X):
    Y = cantor_space('Y')

    with pytest.raises(SpaceMismatchError):
        maps.pushforward(maps.shift_map(), zfun.zero(Y))

    with pytest.raises(SpaceMismatchError):
        maps.pullback(maps.shift_map(), zfun.zero(Y))

    with pytest.raises(SpaceMismatchError):
        maps.compose(maps.shift_map(), maps.shift_map(Y))


def test_invert():
    swap = maps.bit_swap_map()

    assert maps.semantically_equal(maps.invert(swap), swap)

    with pytest.raises(NotInvertibleError, match='Not injective'):
        maps.invert(maps.shift_map())


def test_invert_rejects_non_surjective(X):
    p = LocalHomeo(X, X, (_chart('0', '00'), _chart('1', '01')))

    with pytest.raises(NotInvertibleError, match='Not surjective'):
        maps.invert(p)


def test_semantically_equal_ignores_refinement(X):
    coarse = maps.identity_map(X)
    fine = LocalHomeo(X, X, (_chart('0', '0'), _chart('10', '10'),
                             _chart('11', '11')))

    assert maps.semantically_equal(coarse, fine)
    assert maps.is_positional_identity(fine)
    assert not maps.semantically_equal(coarse, maps.bit_swap_map())


def test_identity_between_renamed_spaces():
    p = maps.identity_map(cantor_space('A'), cantor_space('B'))

    assert maps.is_positional_identity(p)
    assert maps.apply(p, _at('(01)', 'A')) == _at('(01)', 'B')

    with pytest.raises(SpaceMismatchError):
        maps.identity_map(cantor_space(), discrete_space('F', 2))


def test_discrete_maps():
    F = discrete_space('F', 3)
    cycle = LocalHomeo(F, F, tuple(
        PrefixChart(Cylinder('F', i), Cylinder('F', (i + 1) % 3))
        for i in range(3)))

    assert maps.validate(cycle) == []

    f = zfun.make(F, [(Cylinder('F', 0), 5)])
    assert maps.pushforward(cycle, f) == zfun.make(F, [(Cylinder('F', 1), 5)])

    thrice = maps.compose(cycle, maps.compose(cycle, cycle))
    assert maps.is_positional_identity(thrice)
    assert maps.semantically_equal(maps.invert(maps.invert(cycle)), cycle)


def test_discrete_collapse_is_not_injective():
    F = discrete_space('F', 2)
    collapse = LocalHomeo(F, F, tuple(
        PrefixChart(Cylinder('F', i), Cylinder('F', 0)) for i in range(2)))

    assert maps.pushforward(collapse, zfun.constant(F, 1)) == \
        zfun.make(F, [(Cylinder('F', 0), 2)])

    with pytest.raises(NotInvertibleError):
        maps.invert(collapse)


def test_random_maps_are_valid(rng):
    for _ in range(100):
        assert maps.validate(maps.random_local_homeo(rng)) == []
        p = maps.random_homeo(rng)
        assert maps.validate(p) == []
        assert maps.is_positional_identity(maps.compose(maps.invert(p), p))


def test_random_partition(rng):
    for count in range(1, 10):
        leaves = maps.random_partition(rng, count, 4)
        assert len(leaves) == count
        assert maps.validate(LocalHomeo(
            cantor_space(), cantor_space(),
            tuple(_chart(w, w) for w in leaves))) == []


def test_pushforward_is_functorial(rng, X):
    for _ in range(1000):
        p = maps.random_local_homeo(rng)
        q = maps.random_local_homeo(rng)
        f = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)

        assert maps.pushforward(maps.compose(q, p), f) == \
            maps.pushforward(q, maps.pushforward(p, f))


def test_pushforward_along_homeo_is_inverse_pullback(rng, X):
    for _ in range(500):
        p = maps.random_homeo(rng)
        f = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)

        assert maps.pushforward(p, f) == maps.pullback(maps.invert(p), f)


def test_pushforward_is_the_fiber_sum(rng, X):
    points = _representatives(8)

    for _ in range(20):
        p = maps.random_local_homeo(rng)
        f = zfun.random_function(rng, X, 4, 5)
        pushed = maps.pushforward(p, f)

        for z in points:
            values = [zfun.evaluate(f, y) for y in maps.fiber(p, z)]
            assert zfun.evaluate(pushed, z) == sum(values)

            # Support containment
            if zfun.evaluate(pushed, z) != 0:
                assert any(v != 0 for v in values)


def _reordered(rng, p):
    order = rng.permutation(len(p.charts))
    return LocalHomeo(p.domain, p.codomain,
                      tuple(p.charts[int(i)] for i in order))


def test_operations_ignore_chart_order(rng, X):
    points = _representatives(5)

    for _ in range(300):
        p, q = maps.random_local_homeo(rng), maps.random_local_homeo(rng)
        p2, q2 = _reordered(rng, p), _reordered(rng, q)
        f = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)

        assert maps.pushforward(p2, f) == maps.pushforward(p, f)
        assert maps.pullback(p2, f) == maps.pullback(p, f)
        assert [maps.apply(p2, y) for y in points] == \
            [maps.apply(p, y) for y in points]
        assert maps.semantically_equal(maps.compose(q2, p2),
                                       maps.compose(q, p))


def test_pushforward_is_additive(rng, X):
    for _ in range(300):
        p = maps.random_local_homeo(rng)
        f = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)
        g = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)

        assert maps.pushforward(p, zfun.add(f, g)) == \
            zfun.add(maps.pushforward(p, f), maps.pushforward(p, g))


def _image(p, clopen):
    """p(clopen) computed chart by chart
    """
    cylinders = []

    for chart in p.charts:
        u, v = chart.source.word, chart.target.word
        for w in clopen.cells('X'):
            if w.startswith(u):
                cylinders.append(Cylinder('X', v + w[len(u):]))
            elif u.startswith(w):
                cylinders.append(Cylinder('X', v))

    return normalize_clopen(cylinders)


def test_pushforward_support_lies_in_the_image(rng, X):
    for _ in range(300):
        p = maps.random_local_homeo(rng)
        f = zfun.random_function(rng, X, int(rng.integers(0, 5)), 5)

        outside = clopen_algebra(zfun.support(maps.pushforward(p, f)),
                                 _image(p, zfun.support(f)),
                                 ClopenOp.DIFFERENCE)

        assert outside.is_empty()
