import itertools
import pytest

from hypothesis import given, settings

from moore_utils import zfun
from moore_utils.cantor import EMPTY_SPACE, ClopenOp, Cylinder, SpacePoint, \
    cantor_space, clopen_algebra, discrete_space, normalize_clopen, \
    parse_point
from moore_utils.errors import ComponentError, DepthError, \
    EnumerationError, ParseError, SpaceMismatchError

from strategies import functions, points


def _at(text):
    return SpacePoint('X', parse_point(text))


def test_make_sums_overlapping_cells(X):
    f = zfun.make(X, [(Cylinder('X', ''), 1), (Cylinder('X', '0'), 1)])

    assert f.cells('X') == (('0', 2), ('1', 1))


def test_make_merges_equal_siblings(X):
    f = zfun.make(X, [(Cylinder('X', '00'), 2), (Cylinder('X', '01'), 2)])

    assert f.cells('X') == (('0', 2),)
    assert zfun.make(X, [(Cylinder('X', '0'), 1), (Cylinder('X', '0'), -1)]
                     ).is_zero()


def test_make_rejects_bad_cells(X):
    with pytest.raises(ComponentError):
        zfun.make(X, [(Cylinder('Y', '0'), 1)])

    with pytest.raises(ParseError):
        zfun.make(X, [(Cylinder('X', '0'), True)])

    with pytest.raises(ParseError):
        zfun.make(X, [(Cylinder('X', '0'), 0.5)])


def test_evaluate(X):
    f = zfun.indicator(X, Cylinder('X', '01'))

    assert zfun.evaluate(f, _at('01(1)')) == 1
    assert zfun.evaluate(f, _at('1(0)')) == 0

    with pytest.raises(ComponentError):
        zfun.evaluate(f, SpacePoint('Y', parse_point('(0)')))


def test_evaluate_discrete():
    F = discrete_space('F', 3)
    f = zfun.make(F, [(Cylinder('F', 1), 4), (Cylinder('F', 1), 1)])

    assert zfun.evaluate(f, SpacePoint('F', 1)) == 5
    assert zfun.evaluate(f, SpacePoint('F', 2)) == 0


def test_cell_value(X):
    f = zfun.indicator(X, Cylinder('X', '01'), 3)

    assert zfun.cell_value(f, Cylinder('X', '011')) == 3
    assert zfun.cell_value(f, Cylinder('X', '1')) == 0

    with pytest.raises(DepthError):
        zfun.cell_value(f, Cylinder('X', '0'))


def test_support_and_image(X):
    f = zfun.make(X, [(Cylinder('X', '00'), 2), (Cylinder('X', '01'), 3)])

    assert zfun.support(f) == normalize_clopen([Cylinder('X', '0')])
    assert zfun.image_values(f) == frozenset({0, 2, 3})
    assert zfun.image_values(zfun.constant(X, 3)) == frozenset({3})
    assert zfun.image_values(zfun.zero(X)) == frozenset({0})


def test_arithmetic_checks_spaces(X):
    with pytest.raises(SpaceMismatchError):
        zfun.add(zfun.zero(X), zfun.zero(cantor_space('Y')))

    with pytest.raises(SpaceMismatchError):
        zfun.equals(zfun.zero(X), zfun.zero(discrete_space('F', 1)))


def test_scale(X):
    f = zfun.indicator(X, Cylinder('X', '1'), 2)

    assert zfun.scale(f, 3) == zfun.indicator(X, Cylinder('X', '1'), 6)
    assert zfun.scale(f, 0).is_zero()


@given(functions(), functions())
def test_add_is_commutative(f, g):
    assert zfun.equals(zfun.add(f, g), zfun.add(g, f))


@given(functions(), functions(), functions())
def test_add_is_associative(f, g, h):
    assert zfun.add(zfun.add(f, g), h) == zfun.add(f, zfun.add(g, h))


@given(functions(), functions())
def test_support_of_a_sum(f, g):
    both = clopen_algebra(zfun.support(f), zfun.support(g), ClopenOp.UNION)
    outside = clopen_algebra(zfun.support(zfun.add(f, g)), both,
                             ClopenOp.DIFFERENCE)

    assert outside.is_empty()


@given(functions())
def test_add_negation_is_zero(f):
    assert zfun.add(f, zfun.negate(f)).is_zero()


@given(functions(), functions(), points())
def test_add_is_pointwise(f, g, x):
    y = SpacePoint('X', x)

    assert zfun.evaluate(zfun.add(f, g), y) == \
        zfun.evaluate(f, y) + zfun.evaluate(g, y)


@given(functions())
def test_canonical_form_is_unique(f):
    cells = [(Cylinder('X', w), v) for w, v in f.cells('X')]

    assert zfun.make(f.space, list(reversed(cells))) == f
    assert all(v != 0 for _, v in f.cells('X'))


def test_stage_bound():
    assert [zfun.stage_bound(s) for s in range(4)] == [1, 9, 625, 5764801]


def test_enumeration_starts_with_zero():
    first = zfun.first_functions(9)

    assert first[0].is_zero()
    assert len(set(first)) == 9
    assert all(f.max_depth() <= 1 for f in first)


def _cells(f):
    return f.cells('X')


def test_enumeration_order_of_the_first_stages():
    first = zfun.first_functions(12)

    assert [_cells(f) for f in first] == [
        (),
        (('', -1),),
        (('', 1),),
        (('0', -1),),
        (('0', -1), ('1', 1)),
        (('1', -1),),
        (('1', 1),),
        (('0', 1), ('1', -1)),
        (('0', 1),),
        (('', -2),),
        (('', 2),),
        (('0', -2), ('1', -1)),
    ]


def test_enumeration_is_sorted_by_key():
    keys = [zfun.enumeration_key(f) for f in zfun.first_functions(3000)]

    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert [k[0] for k in keys[:zfun.stage_bound(2)]] == \
        [0] + [1] * 8 + [2] * 616


def test_enumeration_key():
    f = zfun.make(cantor_space(), [(Cylinder('X', '01'), 3)])

    assert zfun.enumeration_key(f) == \
        (3, 2, ('00', '01', '1'), (0, 3, 0))
    assert zfun.enumeration_key(zfun.zero(cantor_space())) == \
        (0, 0, ('',), (0,))


def test_enumeration_is_injective():
    first = zfun.first_functions(10000)

    assert len(first) == 10000
    assert len(set(first)) == 10000


def test_enumeration_covers_small_functions():
    listed = set(zfun.first_functions(zfun.stage_bound(2)))

    for values in itertools.product((-1, 0, 1), repeat=4):
        f = zfun.make(cantor_space(), [
            (Cylinder('X', ''.join(w)), v)
            for w, v in zip(itertools.product('01', repeat=2), values)])
        assert f in listed


def test_stage_grid_matches_enumeration():
    grid = set(zfun.functions_of_stage_grid(2))

    assert len(grid) == zfun.stage_bound(2)
    assert grid == set(zfun.first_functions(zfun.stage_bound(2)))


@pytest.mark.parametrize('k', [0, 1, 8, 9, 100, 624, 625, 700])
def test_enumerate_function_is_random_access(k):
    assert zfun.enumerate_function(k) == zfun.first_functions(k + 1)[k]


def test_advance_resumes_from_cursor():
    f, cursor = zfun.advance(zfun.EnumerationCursor())
    g, cursor = zfun.advance(cursor)

    assert cursor.position == 2
    assert [f, g] == zfun.first_functions(2)


def test_enumeration_rejects():
    with pytest.raises(EnumerationError):
        zfun.enumerate_function(-1)

    with pytest.raises(EnumerationError):
        zfun.enumerate_function(0, discrete_space('F', 2))

    with pytest.raises(EnumerationError):
        zfun.first_functions(1, EMPTY_SPACE)


def test_enumeration_on_other_component():
    f = zfun.enumerate_function(3, cantor_space('Y'))

    assert f.space == cantor_space('Y')


def test_delta_witness():
    x = parse_point('01(10)')
    y, at_x, at_y = zfun.delta_witness(x, 4)

    assert y.prefix(4) == '0110'
    assert y.bit(4) != x.bit(4)
    assert (at_x, at_y) == (1, 0)


@settings(max_examples=50)
@given(points())
def test_delta_witness_for_all_depths(x):
    for d in range(8):
        y, at_x, at_y = zfun.delta_witness(x, d)
        assert y.prefix(d) == x.prefix(d)
        assert (at_x, at_y) == (1, 0)


def test_random_function(rng):
    F = discrete_space('F', 3)
    f = zfun.random_function(rng, F, 2, 1)

    assert f.space == F
    assert all(abs(v) <= 1 for _, _, v in f.iter_cells())

    g = zfun.random_function(rng, cantor_space(), 3, 2)
    assert g.max_depth() <= 3
