"""
Dense matrices over the integers
"""
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix, symbols

from ..exact.poly import IntPoly
from ..utils.errors import ShapeError, UsageError

Rows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row by row"""
    rows: Rows

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if not rows or not rows[0]:
            raise ShapeError("matrix dimensions must be >= 1")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ShapeError("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    # -- construction -------------------------------------------------

    @classmethod
    def of(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, n: int, m: Optional[int] = None) -> "IntMatrix":
        m = n if m is None else m
        return cls(tuple((0,) * m for _ in range(n)))

    @classmethod
    def diag(cls, values: Sequence[int]) -> "IntMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """Assemble a block matrix; blocks in a row share a height"""
        rows: List[Tuple[int, ...]] = []
        for block_row in blocks:
            height = block_row[0].nrows
            if any(b.nrows != height for b in block_row):
                raise ShapeError("blocks in a row must have equal height")
            for i in range(height):
                rows.append(sum((b.rows[i] for b in block_row), ()))
        return cls(tuple(rows))

    @classmethod
    def parse(cls, text: str) -> "IntMatrix":
        """Parse '1,1;2,1': rows split by ';', entries by ','"""
        try:
            rows = [
                tuple(int(x) for x in row.split(","))
                for row in text.strip().split(";")
            ]
        except ValueError as e:
            raise UsageError(f"cannot parse matrix {text!r}") from e
        try:
            return cls(tuple(rows))
        except ShapeError as e:
            raise UsageError(f"cannot parse matrix {text!r}: {e}") from e

    def format(self) -> str:
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    # -- shape --------------------------------------------------------

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    @property
    def shape(self) -> Tuple[int, int]:
        return self.nrows, self.ncols

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def require_square(self) -> int:
        if not self.is_square:
            raise ShapeError(f"expected a square matrix, got {self.nrows}x{self.ncols}")
        return self.nrows

    def __getitem__(self, index: Tuple[int, int]) -> int:
        i, j = index
        return self.rows[i][j]

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "IntMatrix":
        return IntMatrix(tuple(row[c0:c1] for row in self.rows[r0:r1]))

    def entries(self) -> Iterable[int]:
        for row in self.rows:
            yield from row

    def to_lists(self) -> List[List[int]]:
        return [list(row) for row in self.rows]

    def to_sympy(self) -> Matrix:
        return Matrix(self.to_lists())

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ShapeError("shape mismatch in addition")
        return IntMatrix(tuple(
            tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.rows, other.rows)
        ))

    def __neg__(self) -> "IntMatrix":
        return IntMatrix(tuple(tuple(-a for a in r) for r in self.rows))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntMatrix(tuple(tuple(a * other for a in r) for r in self.rows))
        if not isinstance(other, IntMatrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ShapeError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows))
        return IntMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows
        ))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        return self * other

    def __pow__(self, e: int) -> "IntMatrix":
        n = self.require_square()
        if e < 0:
            raise ShapeError("negative powers are not supported")
        result = IntMatrix.identity(n)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def transpose(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows)))

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def trace(self) -> int:
        n = self.require_square()
        return sum(self.rows[i][i] for i in range(n))

    def det(self) -> int:
        """Exact determinant by fraction-free Bareiss elimination"""
        n = self.require_square()
        m = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for k in range(n - 1):
            if m[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
                if swap is None:
                    return 0
                m[k], m[swap] = m[swap], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.entries())

    def __str__(self):
        return self.format()


def char_poly(M: IntMatrix) -> IntPoly:
    """det(xI - M), monic of degree dim(M)"""
    n = M.require_square()
    if n == 1:
        return IntPoly((-M[0, 0], 1))
    if n == 2:
        return IntPoly((M.det(), -M.trace(), 1))
    x = symbols("x")
    coeffs = M.to_sympy().charpoly(x).all_coeffs()
    return IntPoly(tuple(int(c) for c in reversed(coeffs)))
