import itertools
import pytest

from hypothesis import given

from moore_utils.cantor import CantorPoint, ClopenOp, Cylinder, Space, \
    SpacePoint, WordRelation, CantorComponent, DiscreteComponent, \
    clopen_algebra, normalize_clopen, normalize_words, parse_point, \
    point_in_cylinder, refine_to_depth, refine_words, separating_point, \
    word_relation, discrete_space, cantor_space
from moore_utils.errors import ComponentError, DepthError, ParseError, \
    SpaceMismatchError

from strategies import clopens, points, words


def test_point_is_canonical():
    assert CantorPoint('0101', '01') == CantorPoint('', '01')
    assert str(CantorPoint('0101', '01')) == '(01)'
    assert CantorPoint('', '0000') == CantorPoint('0', '0')
    assert str(parse_point('01(10)')) == '01(10)'


def test_point_bits():
    x = parse_point('01(10)')

    assert x.prefix(5) == '01101'
    assert x.bit(6) == '1'
    assert x.drop(3) == CantorPoint('', '01')
    assert x.prepend('1').prefix(3) == '101'


@pytest.mark.parametrize('text', ['abc', '01()', '(2)', ''])
def test_parse_point_rejects(text):
    with pytest.raises(ParseError):
        parse_point(text)


def test_word_relation():
    assert word_relation('', '') == WordRelation.EQUAL
    assert word_relation('0', '01') == WordRelation.U_PREFIX_OF_V
    assert word_relation('01', '0') == WordRelation.V_PREFIX_OF_U
    assert word_relation('0', '1') == WordRelation.DISJOINT


def test_point_in_cylinder():
    x = parse_point('011(0)')

    assert point_in_cylinder(x, Cylinder('X', '01'))
    assert not point_in_cylinder(x, Cylinder('X', '1'))
    assert point_in_cylinder(SpacePoint('F', 2), Cylinder('F', 2))

    with pytest.raises(ComponentError):
        point_in_cylinder(SpacePoint('Y', x), Cylinder('X', ''))


def test_normalize_words():
    assert normalize_words(['00', '01', '1']) == ('',)
    assert normalize_words(['0', '01']) == ('0',)
    assert normalize_words(['10', '0', '11']) == ('',)
    assert normalize_words(['011', '010', '00']) == ('0',)
    assert normalize_words([]) == ()

    with pytest.raises(ParseError):
        normalize_words(['012'])


def test_normalize_clopen_rejects_mixed_cells():
    with pytest.raises(ComponentError):
        normalize_clopen([Cylinder('X', '0'), Cylinder('X', 1)])


def test_clopen_algebra(X):
    zero = normalize_clopen([Cylinder('X', '0')])
    deep = normalize_clopen([Cylinder('X', '01')])

    complement = clopen_algebra(zero, None, ClopenOp.COMPLEMENT, X)
    assert complement.cells('X') == ('1',)

    assert clopen_algebra(zero, deep, ClopenOp.INTERSECTION).cells('X') == \
        ('01',)
    assert clopen_algebra(X.full_clopen(), deep,
                          ClopenOp.DIFFERENCE).cells('X') == ('00', '1')
    assert clopen_algebra(zero, complement, ClopenOp.UNION) == \
        X.full_clopen()
    assert clopen_algebra(zero, zero, ClopenOp.DIFFERENCE).is_empty()


def _complement(a):
    return clopen_algebra(a, None, ClopenOp.COMPLEMENT, cantor_space())


@given(clopens())
def test_complement_is_an_involution(a):
    assert _complement(_complement(a)) == a
    assert clopen_algebra(a, _complement(a), ClopenOp.UNION) == \
        cantor_space().full_clopen()
    assert clopen_algebra(a, _complement(a), ClopenOp.INTERSECTION).is_empty()


@given(clopens(), clopens())
def test_de_morgan(a, b):
    union = clopen_algebra(a, b, ClopenOp.UNION)
    meet = clopen_algebra(a, b, ClopenOp.INTERSECTION)

    assert _complement(union) == clopen_algebra(
        _complement(a), _complement(b), ClopenOp.INTERSECTION)
    assert _complement(meet) == clopen_algebra(
        _complement(a), _complement(b), ClopenOp.UNION)
    assert clopen_algebra(a, b, ClopenOp.DIFFERENCE) == clopen_algebra(
        a, _complement(b), ClopenOp.INTERSECTION)


def test_clopen_algebra_checks_space(X):
    zero = normalize_clopen([Cylinder('X', '0')])

    with pytest.raises(SpaceMismatchError):
        clopen_algebra(zero, None, ClopenOp.COMPLEMENT)

    with pytest.raises(SpaceMismatchError):
        clopen_algebra(normalize_clopen([Cylinder('Y', '0')]), zero,
                       ClopenOp.UNION, X)


def test_discrete_clopen_algebra():
    F = discrete_space('F', 4)
    a = normalize_clopen([Cylinder('F', 0), Cylinder('F', 2)])

    assert clopen_algebra(a, None, ClopenOp.COMPLEMENT, F).cells('F') == \
        (1, 3)


def test_refine():
    u = normalize_clopen([Cylinder('X', '1')])

    assert [c.word for c in refine_to_depth(u, 2)] == ['10', '11']
    assert len(refine_words([''], 3)) == 8

    with pytest.raises(DepthError):
        refine_words(['011'], 2)


def test_space_components():
    with pytest.raises(ComponentError):
        Space((CantorComponent('X'), DiscreteComponent('X', 2)))

    with pytest.raises(ComponentError):
        DiscreteComponent('F', 0)

    a = Space((CantorComponent('A'), DiscreteComponent('B', 2)))
    b = Space((CantorComponent('C'), DiscreteComponent('D', 2)))

    assert a.has_same_shape(b)
    assert not a.has_same_shape(discrete_space('B', 2))
    assert a.contains_point(SpacePoint('B', 1))
    assert not a.contains_point(SpacePoint('B', 2))


def test_restricted_component():
    c = CantorComponent('Y', ('01', '00'))

    assert c.restriction == ('0',)
    assert Space((c,)).contains_cylinder(Cylinder('Y', '011'))
    assert not Space((c,)).contains_cylinder(Cylinder('Y', '1'))


def test_normalization_matches_membership_tables(rng):
    """Normalized cylinder lists have the same depth-6 membership table and
    normalizing twice changes nothing
    """
    depth_6 = [''.join(w) for w in itertools.product('01', repeat=6)]

    for _ in range(1000):
        size = int(rng.integers(0, 8))
        cylinders = [''.join(str(b) for b in rng.integers(
            0, 2, size=int(rng.integers(0, 6)))) for _ in range(size)]

        normalized = normalize_words(cylinders)

        for w in depth_6:
            assert any(w.startswith(u) for u in cylinders) == \
                any(w.startswith(v) for v in normalized)

        assert normalize_words(normalized) == normalized


@given(points(), words(8))
def test_separating_point(x, prefix):
    d = len(prefix)
    y = separating_point(x, d)

    assert y != x
    assert y.prefix(d) == x.prefix(d)


def test_separating_point_rejects_negative_depth():
    with pytest.raises(DepthError):
        separating_point(CantorPoint('', '0'), -1)
