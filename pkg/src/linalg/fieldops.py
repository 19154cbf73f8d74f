"""
Gauss-Jordan elimination over any exact or floating field

Entries only need +, -, *, / and comparison with 0, so the same code runs
on QuadInt, Fraction and mpmath numbers.
"""
from typing import Any, Callable, List, Optional, Sequence

from ..utils.errors import SingularMatrixError


def _default_is_zero(a) -> bool:
    return a == 0


def _pick(rows, col: int, start: int, is_zero, magnitude):
    candidates = [i for i in range(start, len(rows)) if not is_zero(rows[i][col])]
    if not candidates:
        return None
    if magnitude is None:
        return candidates[0]
    return max(candidates, key=lambda i: magnitude(rows[i][col]))


def field_inverse(
    M: Sequence[Sequence[Any]],
    one: Any = 1,
    zero: Any = 0,
    is_zero: Callable[[Any], bool] = _default_is_zero,
    magnitude: Optional[Callable[[Any], Any]] = None,
) -> List[List[Any]]:
    """
    Inverse of a square matrix.

    magnitude, when given, selects the largest pivot (partial pivoting for
    floating entries); otherwise the first nonzero pivot is used.
    """
    n = len(M)
    rows = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        p = _pick(rows, col, col, is_zero, magnitude)
        if p is None:
            raise SingularMatrixError("matrix is singular")
        rows[col], rows[p] = rows[p], rows[col]
        pivot = rows[col][col]
        rows[col] = [a / pivot for a in rows[col]]
        for i in range(n):
            if i != col and not is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[col])]
    return [row[n:] for row in rows]


def null_vector(
    M: Sequence[Sequence[Any]],
    one: Any = 1,
    zero: Any = 0,
    is_zero: Callable[[Any], bool] = _default_is_zero,
) -> Optional[List[Any]]:
    """A nonzero kernel vector of M, or None when M has full column rank"""
    rows = [list(row) for row in M]
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        p = _pick(rows, col, r, is_zero, None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pivot = rows[r][col]
        rows[r] = [a / pivot for a in rows[r]]
        for i in range(len(rows)):
            if i != r and not is_zero(rows[i][col]):
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    free = next((c for c in range(ncols) if c not in pivots), None)
    if free is None:
        return None
    vec = [zero] * ncols
    vec[free] = one
    for i, col in enumerate(pivots):
        vec[col] = zero - rows[i][free]
    return vec


def mat_mul(A: Sequence[Sequence[Any]], B: Sequence[Sequence[Any]], zero: Any = 0) -> List[List[Any]]:
    cols = list(zip(*B))
    out = []
    for row in A:
        out_row = []
        for col in cols:
            acc = zero
            for a, b in zip(row, col):
                acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out
