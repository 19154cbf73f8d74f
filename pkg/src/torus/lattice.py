"""
Trace lattice generators and the real multiplication test
"""
import logging
from fractions import Fraction
from math import lcm
from typing import List, Optional

from ..exact.quadint import QuadInt
from ..exact.reals import as_quadint, is_exact
from ..linalg.snf import hermite_basis
from ..utils.errors import MixedFieldError
from .models import LatticeGenerator, NormalTorus, RealMultiplication, TraceLattice

logger = logging.getLogger(__name__)


def _label(subset: List[int]) -> str:
    if not subset:
        return "1"
    return "*".join(f"theta{i}" for i in subset)


def _reduce(values: List[QuadInt]) -> Optional[List[QuadInt]]:
    """Z-basis of the span of exact values in a single quadratic field"""
    fields = {v.D for v in values if not v.is_rational}
    if len(fields) > 1:
        return None
    D = fields.pop() if fields else 2
    L = lcm(*(v.c for v in values))
    vectors = [(v.a * (L // v.c), v.b * (L // v.c)) for v in values]
    return [QuadInt(a, b, L, D) for a, b in hermite_basis(vectors)]


def trace_lattice(t: NormalTorus) -> TraceLattice:
    """All subset products of the parameters; exact inputs also get a reduced basis"""
    n = t.n
    generators = []
    exact_values: Optional[List[QuadInt]] = [] if all(t.exact) else None
    for mask in range(1 << n):
        subset = [i + 1 for i in range(n) if mask >> i & 1]
        value = None
        if exact_values is not None:
            try:
                value = QuadInt.rational(1)
                for i in subset:
                    value = value * as_quadint(t.thetas[i - 1])
                exact_values.append(value)
            except MixedFieldError:
                logger.debug("subset %s mixes quadratic fields; keeping it formal", subset)
                value, exact_values = None, None
        generators.append(LatticeGenerator(subset=subset, label=_label(subset), value=value))
    reduced = _reduce(exact_values) if exact_values else None
    statement = None
    if n == 1 and has_real_multiplication(t).status == "yes":
        statement = f"tau(K0) = Z + ({as_quadint(t.thetas[0])})Z"
    return TraceLattice(generators=generators, reduced_basis=reduced, statement=statement)


def has_real_multiplication(t: NormalTorus) -> RealMultiplication:
    """
    yes when every parameter is a quadratic algebraic integer, no when an
    exact parameter is not, unknown when any parameter is only numeric
    """
    orders, polys = [], []
    status = "yes"
    for theta in t.thetas:
        if not is_exact(theta):
            polys.append(None)
            if status == "yes":
                status = "unknown"
            continue
        q = as_quadint(theta)
        poly = q.minimal_polynomial()
        polys.append(str(poly))
        if poly.degree == 2 and poly.is_monic():
            orders.append(f"Z[{q}]")
        else:
            status = "no"
    if status == "yes":
        description = "End contains " + ", ".join(orders)
    elif status == "no":
        description = "End is Z"
        orders = []
    else:
        description = "undetermined for numeric parameters"
        orders = []
    return RealMultiplication(status=status, orders=orders, minimal_polynomials=polys, description=description)
