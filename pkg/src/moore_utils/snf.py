"""Exact integer matrices and their Smith normal form

The matrices are stored sparse (sorted nonzero triplets), while the reduction
runs on dense numpy arrays of dtype=object, so every entry stays an arbitrary
precision python int.

The plain text exchange format has one "row col value" triplet per line
(0-indexed), optionally preceded by a "# shape R C" line; without it the shape
is the smallest one holding every triplet.
"""

__all__ = ['IntMatrix',
           'SNFResult',
           'smith_normal_form',
           'kernel_basis',
           'determinant',
           'parse_triplets',
           'format_triplets',
           'read_triplet_file',
           'write_triplet_file']

import logging
import numpy as np

from dataclasses import dataclass
from typing import Tuple

from moore_utils.errors import ParameterRangeError, ParseError, \
    SpaceMismatchError

# === Set up logging
logger = logging.getLogger(__name__)

# === Classes ===


@dataclass(frozen=True)
class IntMatrix:
    """Sparse integer matrix

    entries are (row, col, value) triplets with value != 0, sorted row-major.
    """
    rows: int
    cols: int
    entries: Tuple[Tuple[int, int, int], ...] = ()

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ParameterRangeError('Negative matrix dimensions!')

        entries = tuple(sorted((int(i), int(j), int(v))
                               for i, j, v in self.entries if v != 0))

        for i, j, _ in entries:
            if not (0 <= i < self.rows and 0 <= j < self.cols):
                raise ParameterRangeError(
                    'Entry ({0:d},{1:d}) outside of a {2:d}x{3:d} matrix'.format(
                        i, j, self.rows, self.cols))

        object.__setattr__(self, 'entries', entries)

    @property
    def shape(self):
        return (self.rows, self.cols)

    @classmethod
    def from_dict(cls, rows, cols, values):
        """From a {(row, col): value} mapping
        """
        return cls(rows, cols, tuple((i, j, v)
                                     for (i, j), v in values.items()))

    @classmethod
    def from_rows(cls, rows):
        """From a list of equally long lists
        """
        rows = [list(r) for r in rows]
        n_cols = len(rows[0]) if len(rows) > 0 else 0

        if any(len(r) != n_cols for r in rows):
            raise ParseError('Rows of different length!')

        return cls(len(rows), n_cols, tuple((i, j, v)
                                            for i, r in enumerate(rows)
                                            for j, v in enumerate(r)))

    @classmethod
    def from_dense(cls, array):
        rows, cols = array.shape
        return cls(rows, cols, tuple((i, j, int(array[i, j]))
                                     for i in range(rows)
                                     for j in range(cols)
                                     if array[i, j] != 0))

    @classmethod
    def identity(cls, size):
        return cls(size, size, tuple((i, i, 1) for i in range(size)))

    def to_dense(self):
        """Dense numpy array of python ints (dtype=object)
        """
        array = np.zeros((self.rows, self.cols), dtype=object)
        # np.zeros with dtype=object holds int 0 already
        for i, j, v in self.entries:
            array[i, j] = v
        return array

    def to_rows(self):
        return [[int(v) for v in row] for row in self.to_dense()]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple((j, i, v) for i, j, v in self.entries))

    def matmul(self, other):
        if self.cols != other.rows:
            raise SpaceMismatchError(
                'Cannot multiply a {0:d}x{1:d} and a {2:d}x{3:d} matrix'.format(
                    self.rows, self.cols, other.rows, other.cols))

        return IntMatrix.from_dense(_dense_matmul(self.to_dense(),
                                                  other.to_dense()))

    def __matmul__(self, other):
        return self.matmul(other)

    def is_zero(self):
        return len(self.entries) == 0

    def is_identity(self):
        return self.rows == self.cols and \
            self.entries == tuple((i, i, 1) for i in range(self.rows))


@dataclass(frozen=True)
class SNFResult:
    """U.M.V = diag(diagonal), with U, V unimodular and V_inv = V^-1

    The nonzero diagonal entries come first and form a divisibility chain.
    """
    diagonal: Tuple[int, ...]
    U: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix

    @property
    def rank(self):
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def divisors(self):
        """The nonzero invariant factors
        """
        return tuple(d for d in self.diagonal if d != 0)

    @property
    def torsion(self):
        return tuple(d for d in self.diagonal if d > 1)

    def diagonal_matrix(self):
        return IntMatrix(self.U.rows, self.V.cols,
                         tuple((i, i, d) for i, d in enumerate(self.diagonal)))

# === Functions ===


def _dense_matmul(a, b):
    """Exact product of two object arrays; also handles empty dimensions
    """
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=object)

    return np.dot(a, b)


def _identity(size):
    array = np.zeros((size, size), dtype=object)
    for i in range(size):
        array[i, i] = 1
    return array


class _Reduction:
    """Working state of the reduction: A = U.M.V, V_inv = V^-1 throughout
    """

    def __init__(self, matrix):
        self.A = matrix.to_dense()
        self.U = _identity(matrix.rows)
        self.V = _identity(matrix.cols)
        self.V_inv = _identity(matrix.cols)

    def swap_rows(self, r, s):
        if r != s:
            self.A[[r, s], :] = self.A[[s, r], :]
            self.U[[r, s], :] = self.U[[s, r], :]

    def swap_cols(self, c, s):
        if c != s:
            self.A[:, [c, s]] = self.A[:, [s, c]]
            self.V[:, [c, s]] = self.V[:, [s, c]]
            self.V_inv[[c, s], :] = self.V_inv[[s, c], :]

    def add_row(self, r, s, k):
        """row r += k * row s
        """
        self.A[r, :] = self.A[r, :] + k * self.A[s, :]
        self.U[r, :] = self.U[r, :] + k * self.U[s, :]

    def add_col(self, c, s, k):
        """col c += k * col s
        """
        self.A[:, c] = self.A[:, c] + k * self.A[:, s]
        self.V[:, c] = self.V[:, c] + k * self.V[:, s]
        self.V_inv[s, :] = self.V_inv[s, :] - k * self.V_inv[c, :]

    def negate_row(self, r):
        self.A[r, :] = -self.A[r, :]
        self.U[r, :] = -self.U[r, :]

    def pivot_position(self, t, candidates):
        """Smallest nonzero |entry| among the candidate positions (row-major
        order breaks ties)
        """
        best = None

        for i, j in candidates:
            value = abs(self.A[i, j])
            if value != 0 and (best is None or value < best[0]):
                best = (value, i, j)

        return None if best is None else best[1:]

    def move_to(self, t, position):
        self.swap_rows(t, position[0])
        self.swap_cols(t, position[1])

    def clear_cross(self, t):
        """Reduce column t and row t modulo the pivot; True if all cleared
        """
        rows, cols = self.A.shape
        pivot = self.A[t, t]
        cleared = True

        for i in range(t + 1, rows):
            if self.A[i, t] != 0:
                self.add_row(i, t, -(self.A[i, t] // pivot))
                cleared = cleared and self.A[i, t] == 0

        for j in range(t + 1, cols):
            if self.A[t, j] != 0:
                self.add_col(j, t, -(self.A[t, j] // pivot))
                cleared = cleared and self.A[t, j] == 0

        return cleared

    def non_divisible_row(self, t):
        rows, cols = self.A.shape
        pivot = self.A[t, t]

        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if self.A[i, j] % pivot != 0:
                    return i

        return None


def smith_normal_form(matrix):
    """Smith normal form with its unimodular transforms

    Pivot rule: the smallest nonzero |entry| of the remaining block, ties
    broken row-major. Row t and column t are cleared modulo the pivot, and
    whenever a remainder survives the smallest remainder in the cross becomes
    the new pivot. An entry of the block not divisible by the pivot is fixed by
    adding its row to row t. Diagonal entries are made nonnegative.

    Parameters
    ----------
    matrix: IntMatrix

    Returns
    -------
    SNFResult

    """
    state = _Reduction(matrix)
    rows, cols = matrix.shape

    for t in range(min(rows, cols)):
        position = state.pivot_position(
            t, ((i, j) for i in range(t, rows) for j in range(t, cols)))

        if position is None:
            break

        state.move_to(t, position)

        while True:
            if not state.clear_cross(t):
                cross = [(i, t) for i in range(t, rows)] + \
                    [(t, j) for j in range(t + 1, cols)]
                state.move_to(t, state.pivot_position(t, cross))
                continue

            i = state.non_divisible_row(t)
            if i is None:
                break

            state.add_row(t, i, 1)

        if state.A[t, t] < 0:
            state.negate_row(t)

    diagonal = tuple(int(state.A[i, i]) for i in range(min(rows, cols)))

    logger.debug('SNF of a {0:d}x{1:d} matrix: rank {2:d}'.format(
        rows, cols, sum(1 for d in diagonal if d != 0)))

    return SNFResult(diagonal,
                     IntMatrix.from_dense(state.U),
                     IntMatrix.from_dense(state.V),
                     IntMatrix.from_dense(state.V_inv))


def kernel_basis(matrix, snf=None):
    """Basis of the integer kernel, as the columns of a cols x k matrix

    Parameters
    ----------
    matrix: IntMatrix

    snf: SNFResult, optional
        Reuse an already computed Smith normal form of `matrix`

    Returns
    -------
    IntMatrix

    """
    if snf is None:
        snf = smith_normal_form(matrix)

    V = snf.V.to_dense()

    return IntMatrix.from_dense(V[:, snf.rank:])


def determinant(matrix):
    """Exact determinant by fraction free (Bareiss) elimination
    """
    if matrix.rows != matrix.cols:
        raise SpaceMismatchError('The determinant needs a square matrix!')

    a = matrix.to_dense()
    n = matrix.rows
    sign, previous = 1, 1

    for k in range(n - 1):
        if a[k, k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i, k] != 0), None)
            if swap is None:
                return 0
            a[[k, swap], :] = a[[swap, k], :]
            sign = -sign

        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i, j] = (a[i, j] * a[k, k] - a[i, k] * a[k, j]) // previous

        previous = a[k, k]

    return sign * int(a[n - 1, n - 1]) if n > 0 else 1


def parse_triplets(text):
    """Parse the triplet text format

    Parameters
    ----------
    text: str

    Returns
    -------
    IntMatrix (0x0 for an empty input)

    """
    shape = None
    values = {}

    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()

        if stripped == '':
            continue

        if stripped.startswith('#'):
            fields = stripped[1:].split()
            if len(fields) == 3 and fields[0] == 'shape':
                try:
                    shape = (int(fields[1]), int(fields[2]))
                except ValueError:
                    raise ParseError(
                        'Invalid shape line {0:d}: {1:s}'.format(number, line))
            continue

        fields = stripped.split()

        try:
            if len(fields) != 3:
                raise ValueError
            i, j, v = (int(field) for field in fields)
        except ValueError:
            raise ParseError(
                "Invalid triplet on line {0:d}: '{1:s}'".format(number, line))

        if i < 0 or j < 0:
            raise ParseError(
                'Negative index on line {0:d}'.format(number))
        if (i, j) in values:
            raise ParseError(
                'Duplicate entry ({0:d},{1:d}) on line {2:d}'.format(
                    i, j, number))

        values[(i, j)] = v

    if shape is None:
        shape = (max((i for i, _ in values), default=-1) + 1,
                 max((j for _, j in values), default=-1) + 1)

    try:
        return IntMatrix.from_dict(shape[0], shape[1], values)
    except ValueError as e:
        raise ParseError(str(e))


def format_triplets(matrix):
    """Triplet text of a matrix, shape line included
    """
    lines = ['# shape {0:d} {1:d}'.format(matrix.rows, matrix.cols)]
    lines.extend('{0:d} {1:d} {2:d}'.format(i, j, v)
                 for i, j, v in matrix.entries)

    return '\n'.join(lines) + '\n'


def read_triplet_file(path):
    try:
        with open(path) as file:
            return parse_triplets(file.read())
    except OSError as e:
        raise ParseError("Cannot read '{0:s}': {1:s}".format(path, str(e)))


def write_triplet_file(matrix, path):
    with open(path, 'w') as file:
        file.write(format_triplets(matrix))


# === MAIN ===
if __name__ == "__main__":
    pass
