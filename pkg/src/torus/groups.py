"""
Membership in SO(n, n | Z) and Sp(2n, Z), and the block lift between them
"""
from typing import List

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..linalg.matrix import IntMatrix
from ..utils.errors import DomainError, ShapeError


def _half(g: IntMatrix) -> int:
    n = g.require_square()
    if n % 2:
        raise ShapeError(f"expected even dimension, got {n}")
    return n // 2


def split_form(k: int) -> IntMatrix:
    """Gram matrix of x_1 x_(k+1) + ... + x_k x_2k, up to the factor 1/2"""
    I, Z = IntMatrix.identity(k), IntMatrix.zeros(k)
    return IntMatrix.from_blocks([[Z, I], [I, Z]])


def standard_symplectic(n: int) -> IntMatrix:
    """J = (0, I; -I, 0)"""
    I, Z = IntMatrix.identity(n), IntMatrix.zeros(n)
    return IntMatrix.from_blocks([[Z, I], [-I, Z]])


def check_so_nn(g: IntMatrix) -> bool:
    """g^t F g = F for the split form F"""
    F = split_form(_half(g))
    return g.T * F * g == F


def is_symplectic(g: IntMatrix) -> bool:
    """g^t J g = J"""
    J = standard_symplectic(_half(g))
    return g.T * J * g == J


def blocks(g: IntMatrix):
    k = _half(g)
    return (
        g.block(0, k, 0, k), g.block(0, k, k, 2 * k),
        g.block(k, 2 * k, 0, k), g.block(k, 2 * k, k, 2 * k),
    )


def symplectic_lift(g: IntMatrix) -> IntMatrix:
    """
    Lift (a, b; c, d) with n x n blocks to the 4n x 4n matrix with blocks
    A = diag(a, a), B = (0, b; -b, 0), C = (0, -c; c, 0), D = diag(d, d).

    g is symplectic exactly when the lift preserves the split form.
    """
    a, b, c, d = blocks(g)
    Z = IntMatrix.zeros(a.nrows)
    A = IntMatrix.from_blocks([[a, Z], [Z, a]])
    B = IntMatrix.from_blocks([[Z, b], [-b, Z]])
    C = IntMatrix.from_blocks([[Z, -c], [c, Z]])
    D = IntMatrix.from_blocks([[d, Z], [Z, d]])
    return IntMatrix.from_blocks([[A, B], [C, D]])


def eq11_lift(a: int, b: int, c: int, d: int) -> IntMatrix:
    """The 4x4 lift of the 2x2 matrix (a, b; c, d)"""
    return symplectic_lift(IntMatrix(((a, b), (c, d))))


class RsElement(BaseModel):
    """Element of SO(k, k | Z) given by its four k x k blocks"""
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    A: IntMatrix = Field(description="Top-left block")
    B: IntMatrix = Field(description="Top-right block")
    C: IntMatrix = Field(description="Bottom-left block")
    D: IntMatrix = Field(description="Bottom-right block")

    @model_validator(mode="after")
    def _check_identities(self) -> "RsElement":
        k = self.A.nrows
        if any(m.shape != (k, k) for m in (self.A, self.B, self.C, self.D)):
            raise ValueError("blocks must be square of equal size")
        I, Z = IntMatrix.identity(k), IntMatrix.zeros(k)
        if self.A.T * self.D + self.C.T * self.B != I:
            raise ValueError("A^t D + C^t B != I")
        if self.A.T * self.C + self.C.T * self.A != Z:
            raise ValueError("A^t C + C^t A != 0")
        if self.B.T * self.D + self.D.T * self.B != Z:
            raise ValueError("B^t D + D^t B != 0")
        return self

    @classmethod
    def from_matrix(cls, g: IntMatrix) -> "RsElement":
        A, B, C, D = blocks(g)
        try:
            return cls(A=A, B=B, C=C, D=D)
        except ValueError as e:
            raise DomainError(f"not in SO(k, k | Z): {e}") from e

    @property
    def k(self) -> int:
        return self.A.nrows

    @property
    def matrix(self) -> IntMatrix:
        return IntMatrix.from_blocks([[self.A, self.B], [self.C, self.D]])


def _elementary(n: int, i: int, j: int, value: int = 1) -> IntMatrix:
    rows = [[int(r == c) for c in range(n)] for r in range(n)]
    rows[i][j] += value
    return IntMatrix.of(rows)


def symplectic_generators(n: int) -> List[IntMatrix]:
    """Generators of Sp(2n, Z): symmetric transvections and GL(n, Z) embeddings"""
    I, Z = IntMatrix.identity(n), IntMatrix.zeros(n)
    gens = []
    for i in range(n):
        for j in range(i, n):
            S = [[0] * n for _ in range(n)]
            S[i][j] = S[j][i] = 1
            Sm = IntMatrix.of(S)
            gens.append(IntMatrix.from_blocks([[I, Sm], [Z, I]]))
            gens.append(IntMatrix.from_blocks([[I, Z], [Sm, I]]))
    for i in range(n):
        for j in range(n):
            if i != j:
                U = _elementary(n, i, j)
                U_inv_T = _elementary(n, i, j, -1).T
                gens.append(IntMatrix.from_blocks([[U, Z], [Z, U_inv_T]]))
    gens.append(standard_symplectic(n))
    return gens
