import itertools
import math
import pytest

from hypothesis import given, strategies as st

from moore_utils.snf import IntMatrix, determinant, format_triplets, \
    kernel_basis, parse_triplets, read_triplet_file, smith_normal_form, \
    write_triplet_file
from moore_utils.errors import ParameterRangeError, ParseError, \
    SpaceMismatchError


def matrices(max_rows=4, max_cols=4, bound=9):
    return st.integers(0, max_rows).flatmap(
        lambda r: st.integers(0, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(-bound, bound), min_size=c, max_size=c),
                min_size=r, max_size=r).map(
                    lambda rows: IntMatrix(r, c, tuple(
                        (i, j, v) for i, row in enumerate(rows)
                        for j, v in enumerate(row))))))


def _determinantal_divisors(matrix):
    """gcd of the k x k minors, for k = 1, 2, ...
    """
    a = matrix.to_dense()
    divisors = []

    for k in range(1, min(matrix.shape) + 1):
        g = 0
        for rows in itertools.combinations(range(matrix.rows), k):
            for cols in itertools.combinations(range(matrix.cols), k):
                minor = IntMatrix.from_dense(a[list(rows)][:, list(cols)])
                g = math.gcd(g, determinant(minor))
        if g == 0:
            break
        divisors.append(g)

    return divisors


@pytest.mark.parametrize('rows, divisors', [
    ([[2, 4], [6, 8]], (2, 4)),
    ([[2, 0], [0, 3]], (1, 6)),
    ([[0, 0], [0, 0]], ()),
    ([[4]], (4,)),
    ([[0, -1, 1, 0], [0, 1, -1, 0]], (1,)),
])
def test_known_forms(rows, divisors):
    result = smith_normal_form(IntMatrix.from_rows(rows))

    assert result.divisors == divisors
    assert result.rank == len(divisors)


def test_torsion():
    result = smith_normal_form(IntMatrix.from_rows([[2, 0], [0, 3]]))

    assert result.torsion == (6,)


def test_empty_matrices():
    for shape in [(0, 0), (0, 3), (3, 0)]:
        result = smith_normal_form(IntMatrix(*shape))
        assert result.rank == 0
        assert result.U.shape == (shape[0], shape[0])
        assert result.V.shape == (shape[1], shape[1])


@given(matrices())
def test_snf_is_a_factorization(matrix):
    result = smith_normal_form(matrix)

    assert result.U.matmul(matrix).matmul(result.V) == \
        result.diagonal_matrix()
    assert result.V.matmul(result.V_inv).is_identity()
    assert abs(determinant(result.U)) == 1


@given(matrices())
def test_divisibility_chain(matrix):
    divisors = smith_normal_form(matrix).divisors

    assert all(d > 0 for d in divisors)
    assert all(b % a == 0 for a, b in zip(divisors, divisors[1:]))

    # Leading nonzero entries, then zeros
    diagonal = smith_normal_form(matrix).diagonal
    assert list(diagonal[:len(divisors)]) == list(divisors)


@given(matrices(max_rows=3, max_cols=3, bound=6))
def test_matches_minor_gcds(matrix):
    divisors = smith_normal_form(matrix).divisors
    expected = _determinantal_divisors(matrix)

    assert len(divisors) == len(expected)
    assert [math.prod(divisors[:k + 1]) for k in range(len(divisors))] == \
        expected


@given(matrices(), st.data())
def test_divisors_ignore_row_and_column_order(matrix, data):
    row_order = data.draw(st.permutations(range(matrix.rows)))
    col_order = data.draw(st.permutations(range(matrix.cols)))
    permuted = IntMatrix(matrix.rows, matrix.cols, tuple(
        (row_order[i], col_order[j], v) for i, j, v in matrix.entries))

    assert smith_normal_form(permuted).divisors == \
        smith_normal_form(matrix).divisors


@given(matrices())
def test_kernel_basis(matrix):
    kernel = kernel_basis(matrix)

    assert kernel.shape == (matrix.cols,
                            matrix.cols - smith_normal_form(matrix).rank)
    assert matrix.matmul(kernel).is_zero()


def test_determinant():
    assert determinant(IntMatrix.from_rows([[2, 1], [7, 4]])) == 1
    assert determinant(IntMatrix.from_rows([[0, 1], [1, 0]])) == -1
    assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0
    assert determinant(IntMatrix(0, 0)) == 1

    with pytest.raises(SpaceMismatchError):
        determinant(IntMatrix(2, 3))


def test_matmul_checks_shapes():
    with pytest.raises(SpaceMismatchError):
        IntMatrix(2, 3) @ IntMatrix(2, 3)


def test_matrix_rejects_entries_outside():
    with pytest.raises(ParameterRangeError):
        IntMatrix(1, 1, ((1, 0, 5),))


def test_parse_triplets():
    matrix = parse_triplets('# a comment\n0 0 2\n0 1 4\n1 0 6\n1 1 8\n')

    assert matrix == IntMatrix.from_rows([[2, 4], [6, 8]])
    assert parse_triplets('') == IntMatrix(0, 0)
    assert parse_triplets('# shape 3 2\n0 1 -1\n').shape == (3, 2)


@pytest.mark.parametrize('text', [
    '0 0\n',
    '0 0 x\n',
    '0 0 1\n0 0 2\n',
    '-1 0 1\n',
    '# shape 1 1\n2 0 1\n',
    '# shape a b\n',
])
def test_parse_triplets_rejects(text):
    with pytest.raises(ParseError):
        parse_triplets(text)


def test_triplet_files(tmp_path):
    matrix = IntMatrix.from_rows([[0, 3], [0, 0], [1, 0]])
    path = str(tmp_path / 'matrix.txt')

    write_triplet_file(matrix, path)

    assert read_triplet_file(path) == matrix
    assert format_triplets(matrix).splitlines()[0] == '# shape 3 2'

    with pytest.raises(ParseError):
        read_triplet_file(str(tmp_path / 'missing.txt'))
