"""
Normal form of a real skew-symmetric matrix
"""
import logging
from typing import List, Tuple

from mpmath import mp

from ..utils.errors import DegenerateInputError, ShapeError
from .models import NormalFormResult, NormalTorus
from .skew import SkewMatrix

logger = logging.getLogger(__name__)

GENERIC_TOLERANCE = 1e-10


def _fix_phase(u, k: int):
    """Rotate u so its largest component (last one among ties) is real positive"""
    mags = [abs(u[i]) for i in range(k)]
    top = max(mags)
    idx = max(i for i in range(k) if mags[i] >= top * (1 - mp.mpf(10) ** -20))
    phase = u[idx] / abs(u[idx])
    return [u[i] / phase for i in range(k)]


def normal_form(theta: SkewMatrix, precision: int = 128) -> NormalFormResult:
    """
    Orthogonal Q and theta_1 > ... > theta_n > 0 with Q^t Theta Q block
    diagonal in blocks (0, theta_j; -theta_j, 0).

    The theta_j come from the Hermitian eigenproblem of i*Theta.
    """
    k = theta.dim
    if k % 2:
        raise ShapeError(f"normal form needs even dimension, got {k}")
    n = k // 2
    with mp.workprec(precision):
        M = theta.to_mp(precision)
        H = mp.matrix(k, k)
        for i in range(k):
            for j in range(k):
                H[i, j] = mp.mpc(0, 1) * M[i, j]
        E, V = mp.eighe(H)
        order = sorted(range(k), key=lambda i: E[i], reverse=True)[:n]
        values = [mp.re(E[i]) for i in order]
        scale = max(abs(E[i]) for i in range(k)) or mp.mpf(1)
        tol = scale * GENERIC_TOLERANCE
        if values[-1] <= tol:
            raise DegenerateInputError("zero eigenvalue pair; input is not generic")
        for a, b in zip(values, values[1:]):
            if a - b <= tol:
                raise DegenerateInputError("repeated eigenvalue pair; input is not generic")

        Q = mp.matrix(k, k)
        root2 = mp.sqrt(2)
        for j, idx in enumerate(order):
            u = _fix_phase([V[r, idx] for r in range(k)], k)
            for r in range(k):
                Q[r, 2 * j] = root2 * mp.im(u[r])
                Q[r, 2 * j + 1] = root2 * mp.re(u[r])

        normal = mp.matrix(k, k)
        for j, t in enumerate(values):
            normal[2 * j, 2 * j + 1] = t
            normal[2 * j + 1, 2 * j] = -t
        conjugated = Q.T * M * Q
        gram = Q.T * Q
        residual = max(abs(conjugated[i, j] - normal[i, j]) for i in range(k) for j in range(k))
        residual += max(abs(gram[i, j] - (1 if i == j else 0)) for i in range(k) for j in range(k))
        logger.debug("normal form residual %s", mp.nstr(residual, 5))
        return NormalFormResult(
            torus=NormalTorus(thetas=values),
            conjugator=Q,
            residual=residual,
            precision=precision,
        )
