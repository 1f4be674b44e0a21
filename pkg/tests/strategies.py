"""Hypothesis strategies shared by the tests
"""
from hypothesis import strategies as st

from moore_utils.cantor import CantorPoint, Cylinder, cantor_space, \
    normalize_clopen
from moore_utils import zfun


def words(max_size=6):
    return st.text(alphabet='01', max_size=max_size)


def points():
    return st.builds(CantorPoint, words(8),
                     st.text(alphabet='01', min_size=1, max_size=4))


def functions(max_depth=4, max_cells=6, bound=5):
    """Locally constant functions on the standard Cantor space
    """
    space = cantor_space()
    cells = st.lists(st.tuples(words(max_depth), st.integers(-bound, bound)),
                     max_size=max_cells)

    return cells.map(lambda cs: zfun.make(
        space, [(Cylinder('X', w), v) for w, v in cs]))


def clopens(max_depth=5, max_cylinders=5):
    """Clopen subsets of the standard Cantor space
    """
    return st.lists(words(max_depth), max_size=max_cylinders).map(
        lambda ws: normalize_clopen([Cylinder('X', w) for w in ws]))
