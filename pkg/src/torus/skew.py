"""
Skew-symmetric parameter matrices with exact or numeric entries
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, List, Sequence, Tuple

from mpmath import mp

from ..exact.quadint import QuadInt
from ..exact.reals import RealRoot, as_quadint, is_exact, parse_real, to_mpf
from ..utils.errors import DomainError, ShapeError, UsageError

# how many comma-separated integers each tagged real consumes
_ARITY = {"quad": 4, "frac": 2, "root": 2, "sqrt": 1, "int": 1}


def split_reals(text: str) -> List[str]:
    """Split a comma-separated list of real specs, keeping quad:a,b,c,D together"""
    pieces = [p.strip() for p in text.split(",")]
    out = []
    i = 0
    while i < len(pieces):
        kind, sep, _ = pieces[i].partition(":")
        arity = _ARITY.get(kind, 1) if sep else 1
        if i + arity > len(pieces):
            raise UsageError(f"truncated value {','.join(pieces[i:])!r}")
        out.append(",".join(pieces[i:i + arity]))
        i += arity
    return out


def _negate(value):
    if is_exact(value):
        return -value
    if hasattr(value, "_mpf_"):
        return -value
    return _Negated(value)


@dataclass(frozen=True)
class _Negated:
    """Lazy negation of a numeric real spec"""
    inner: Any

    def __str__(self):
        return f"-{self.inner}"


@dataclass(frozen=True)
class SkewMatrix:
    """Antisymmetric matrix with zero diagonal; entries kept as given"""
    entries: Tuple[Tuple[Any, ...], ...]

    def __post_init__(self):
        k = len(self.entries)
        if k == 0 or any(len(row) != k for row in self.entries):
            raise ShapeError("skew matrix must be square and nonempty")
        for i in range(k):
            if not _is_zero(self.entries[i][i]):
                raise DomainError("skew matrix diagonal must vanish")
            for j in range(i + 1, k):
                a, b = self.entries[i][j], self.entries[j][i]
                if is_exact(a) and is_exact(b) and a != -b:
                    raise DomainError(f"entries ({i},{j}) and ({j},{i}) are not opposite")

    @classmethod
    def from_upper(cls, upper: Sequence[Sequence[Any]]) -> "SkewMatrix":
        """Build from rows of strictly-upper entries: row i holds theta_(i, i+1..k-1)"""
        k = len(upper) + 1
        grid: List[List[Any]] = [[0] * k for _ in range(k)]
        for i, row in enumerate(upper):
            if len(row) != k - 1 - i:
                raise ShapeError(f"upper row {i} needs {k - 1 - i} entries, got {len(row)}")
            for offset, value in enumerate(row):
                j = i + 1 + offset
                grid[i][j] = value
                grid[j][i] = _negate(value)
        return cls(tuple(tuple(r) for r in grid))

    @classmethod
    def block_diagonal(cls, thetas: Sequence[Any]) -> "SkewMatrix":
        """The normal form with blocks (0, theta; -theta, 0)"""
        k = 2 * len(thetas)
        grid: List[List[Any]] = [[0] * k for _ in range(k)]
        for j, t in enumerate(thetas):
            grid[2 * j][2 * j + 1] = t
            grid[2 * j + 1][2 * j] = _negate(t)
        return cls(tuple(tuple(r) for r in grid))

    @classmethod
    def parse(cls, text: str) -> "SkewMatrix":
        rows = [r for r in text.strip().split(";")]
        upper = [[parse_real(tok) for tok in split_reals(row)] for row in rows]
        try:
            return cls.from_upper(upper)
        except (ShapeError, DomainError) as e:
            raise UsageError(f"cannot parse skew matrix {text!r}: {e}") from e

    @property
    def dim(self) -> int:
        return len(self.entries)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(x) for row in self.entries for x in row)

    def __getitem__(self, index: Tuple[int, int]):
        i, j = index
        return self.entries[i][j]

    def to_mp(self, prec: int = 128):
        """mpmath matrix of the entries at the given precision"""
        with mp.workprec(prec):
            return mp.matrix([[_numeric(x, prec) for x in row] for row in self.entries])

    def to_exact(self) -> List[List[QuadInt]]:
        return [[as_quadint(x) for x in row] for row in self.entries]

    def format(self) -> str:
        k = self.dim
        return ";".join(
            ",".join(_format_entry(self.entries[i][j]) for j in range(i + 1, k)) for i in range(k - 1)
        )


def _is_zero(value) -> bool:
    if is_exact(value):
        return value == 0
    if hasattr(value, "_mpf_"):
        return value == 0
    return False


def _numeric(value, prec: int):
    if isinstance(value, _Negated):
        return -to_mpf(value.inner, prec)
    return to_mpf(value, prec)


def _format_entry(value) -> str:
    if isinstance(value, QuadInt):
        return value.format()
    if isinstance(value, Fraction):
        return f"frac:{value.numerator},{value.denominator}"
    if isinstance(value, int):
        return f"int:{value}"
    if isinstance(value, RealRoot):
        return f"root:{value.m},{value.k}"
    if isinstance(value, _Negated):
        return f"-{_format_entry(value.inner)}"
    if hasattr(value, "_mpf_"):
        return mp.nstr(value, 20)
    return str(value)
