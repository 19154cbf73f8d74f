"""
Smith normal forms over Z and Q[x], Hermite bases, and the
characteristic-matrix similarity test
"""
import logging
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sympy import Matrix, Poly, QQ, Symbol, eye
from sympy.matrices.normalforms import hermite_normal_form
from sympy.matrices.normalforms import invariant_factors as sympy_invariant_factors

from ..exact.poly import IntPoly
from ..utils.errors import ShapeError
from .matrix import IntMatrix
from .models import SnfResult

logger = logging.getLogger(__name__)

_x = Symbol("x")
QX_ONE = Poly(1, _x, domain=QQ)


class _Ring:
    """The handful of Euclidean-domain operations the elimination needs"""
    zero: Any
    one: Any

    def size(self, a) -> int:
        raise NotImplementedError

    def is_zero(self, a) -> bool:
        raise NotImplementedError

    def divmod(self, a, b) -> Tuple[Any, Any]:
        raise NotImplementedError

    def normalize(self, a) -> Tuple[Any, Any]:
        """(u, u*a) with u a unit making u*a canonical"""
        raise NotImplementedError


class _Integers(_Ring):
    zero, one = 0, 1

    def size(self, a):
        return abs(a)

    def is_zero(self, a):
        return a == 0

    def divmod(self, a, b):
        return divmod(a, b)

    def normalize(self, a):
        return (-1, -a) if a < 0 else (1, a)


ZZ_RING = _Integers()


def _identity(n: int, ring: _Ring) -> List[List[Any]]:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def _find_pivot(S, t: int, ring: _Ring) -> Optional[Tuple[int, int]]:
    best = None
    for i in range(t, len(S)):
        for j in range(t, len(S[0])):
            if not ring.is_zero(S[i][j]):
                size = ring.size(S[i][j])
                if best is None or size < best[0]:
                    best = (size, i, j)
    return None if best is None else (best[1], best[2])


def _smith(
    M: Sequence[Sequence[Any]], ring: _Ring, track: bool
) -> Tuple[List[List[Any]], List[List[Any]], List[List[Any]]]:
    """
    Diagonalize M by elementary operations.

    Pivot is the smallest nonzero entry of the trailing submatrix, first in
    row-major order. Returns (U, S, V) with U*M*V = S when track is set.
    """
    m, n = len(M), len(M[0])
    S = [list(row) for row in M]
    U = _identity(m, ring) if track else None
    V = _identity(n, ring) if track else None

    def row_axpy(dst, src, q):
        # row_dst -= q * row_src
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        if track:
            U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def col_axpy(dst, src, q):
        for row in S:
            row[dst] = row[dst] - q * row[src]
        if track:
            for row in V:
                row[dst] = row[dst] - q * row[src]

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        if track:
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        if track:
            for row in V:
                row[i], row[j] = row[j], row[i]

    for t in range(min(m, n)):
        pivot = _find_pivot(S, t, ring)
        if pivot is None:
            break
        while True:
            i, j = pivot
            swap_rows(t, i)
            swap_cols(t, j)
            clean = True
            for i in range(t + 1, m):
                if not ring.is_zero(S[i][t]):
                    q, r = ring.divmod(S[i][t], S[t][t])
                    row_axpy(i, t, q)
                    clean = clean and ring.is_zero(r)
            for j in range(t + 1, n):
                if not ring.is_zero(S[t][j]):
                    q, r = ring.divmod(S[t][j], S[t][t])
                    col_axpy(j, t, q)
                    clean = clean and ring.is_zero(r)
            if not clean:
                pivot = _find_pivot(S, t, ring)
                continue
            bad = next(
                (
                    i for i in range(t + 1, m) for j in range(t + 1, n)
                    if not ring.is_zero(ring.divmod(S[i][j], S[t][t])[1])
                ),
                None,
            )
            if bad is None:
                break
            # pull the offending row into the pivot row and eliminate again
            row_axpy(t, bad, -ring.one)
            pivot = (t, t)
        unit, S[t][t] = ring.normalize(S[t][t])
        if track:
            U[t] = [unit * a for a in U[t]]
    return U, S, V


def smith_normal_form(M: IntMatrix) -> SnfResult:
    """Smith normal form with unimodular transforms: U*M*V = S"""
    U, S, V = _smith(M.rows, ZZ_RING, track=True)
    return SnfResult(U=IntMatrix.of(U), S=IntMatrix.of(S), V=IntMatrix.of(V))


def _to_intpoly(p: Poly) -> IntPoly:
    coeffs = []
    for c in reversed(p.all_coeffs()):
        if c.q != 1:
            raise ValueError(f"non-integral invariant factor {p}")
        coeffs.append(int(c.p))
    return IntPoly(coeffs)


def _divisor_chain(diagonal: Sequence[Poly], n: int) -> List[Poly]:
    """
    Canonical invariant factors of diag(diagonal).

    Elementary divisors of every entry are regrouped so that each factor
    divides the next; the result does not depend on how far the diagonal
    was already reduced.
    """
    powers: Dict[Tuple, List[Tuple[Poly, int]]] = {}
    for f in diagonal:
        for g, e in f.factor_list()[1]:
            g = g.monic()
            powers.setdefault(tuple(g.all_coeffs()), []).append((g, e))
    chain = [QX_ONE] * n
    for entries in powers.values():
        for k, (g, e) in enumerate(sorted(entries, key=lambda t: -t[1])):
            chain[n - 1 - k] = chain[n - 1 - k] * g ** e
    return chain


def invariant_factors(A: IntMatrix) -> List[IntPoly]:
    """
    Monic invariant factors of the characteristic matrix xI - A over Q[x].

    Factors of a square integer matrix are integral by Gauss's lemma; the
    list has length dim(A) and starts with the trivial factors 1.
    """
    n = A.require_square()
    char_matrix = _x * eye(n) - A.to_sympy()
    diagonal = [Poly(f, _x, domain=QQ) for f in sympy_invariant_factors(char_matrix, domain=QQ[_x])]
    factors = [_to_intpoly(f) for f in _divisor_chain(diagonal, n)]
    return sorted(factors, key=lambda f: f.degree)


def similar_via_char_matrix(A: IntMatrix, B: IntMatrix) -> bool:
    """Rational similarity: xI - A and xI - B share their Smith form"""
    if A.shape != B.shape or not A.is_square:
        raise ShapeError(f"cannot compare {A.shape} with {B.shape}")
    return invariant_factors(A) == invariant_factors(B)


def hermite_basis(vectors: Sequence[Sequence[int]]) -> List[Tuple[int, ...]]:
    """Row Hermite normal form of the lattice spanned by integer vectors"""
    rows = [list(v) for v in vectors if any(v)]
    if not rows:
        return []
    # sympy puts the vectors in columns with pivots at the bottom
    W = hermite_normal_form(Matrix([row[::-1] for row in rows]).T)
    return [tuple(int(a) for a in reversed(list(W.col(j)))) for j in reversed(range(W.cols))]
