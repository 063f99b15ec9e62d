"""Gaussian elimination over the two-element field."""

# ExMat - Python package for matroid base exchange.

from __future__ import absolute_import

import numpy as np

__all__ = ['gf2_row_echelon', 'gf2_rank']

def gf2_row_echelon(matrix):
    """Row-reduces a binary matrix over GF(2) with XOR row operations.

    **Arguments**

    - **matrix** : _2-d numpy.ndarray_
        - Matrix with entries in `{0, 1}`.

    **Returns**

    - (_2-d numpy.ndarray_, _list_)
        - The row echelon form as `uint8` and the list of pivot columns.
    """

    R = (np.asarray(matrix, dtype=np.uint8) % 2).copy()
    if R.ndim != 2:
        raise ValueError('matrix must be 2-dimensional')
    nrows, ncols = R.shape

    pivots, row = [], 0
    for col in range(ncols):
        if row == nrows:
            break

        # first nonzero entry at or below the current row
        nonzero = np.flatnonzero(R[row:, col])
        if len(nonzero) == 0:
            continue
        found = row + nonzero[0]
        if found != row:
            R[[row, found]] = R[[found, row]]

        # clear the column below the pivot
        below = row + 1 + np.flatnonzero(R[row+1:, col])
        R[below] ^= R[row]

        pivots.append(col)
        row += 1

    return R, pivots

def gf2_rank(matrix):
    matrix = np.asarray(matrix)
    if matrix.size == 0:
        return 0
    return len(gf2_row_echelon(matrix)[1])
