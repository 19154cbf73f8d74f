"""
Tests for skew parameter matrices, the SO(n, n | Z) action, normal form
and the trace lattice
"""
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from mpmath import mp

from src.exact import QuadInt
from src.exact.reals import NumericReal
from src.linalg import IntMatrix
from src.torus import (
    NormalTorus,
    RsElement,
    SkewMatrix,
    apply_rs_action,
    check_so_nn,
    eq11_lift,
    has_real_multiplication,
    is_symplectic,
    moebius_boundary,
    normal_form,
    split_form,
    symplectic_generators,
    symplectic_lift,
    trace_lattice,
)
from src.utils.errors import DegenerateInputError, DomainError, ShapeError, SingularMatrixError, UsageError

SQRT2 = QuadInt.sqrt(2)
SL2_GENERATORS = [
    IntMatrix.parse("1,1;0,1"),
    IntMatrix.parse("1,-1;0,1"),
    IntMatrix.parse("0,-1;1,0"),
]


def _word(gens, indices, n):
    g = IntMatrix.identity(n)
    for i in indices:
        g = g * gens[i % len(gens)]
    return g


# -- groups --------------------------------------------------------------


@pytest.mark.parametrize("n", [1, 2, 3])
@given(indices=st.lists(st.integers(min_value=0, max_value=100), max_size=8))
def test_symplectic_words_lift_into_so(n, indices):
    g = _word(symplectic_generators(n), indices, 2 * n)
    assert is_symplectic(g)
    lift = symplectic_lift(g)
    assert lift.shape == (4 * n, 4 * n)
    assert check_so_nn(lift)


def test_split_form_is_orthogonal_but_not_symplectic():
    F = split_form(2)
    assert check_so_nn(F)
    assert not is_symplectic(F)


def test_odd_dimension_rejected():
    with pytest.raises(ShapeError):
        is_symplectic(IntMatrix.identity(3))
    with pytest.raises(ShapeError):
        check_so_nn(IntMatrix.identity(3))


def test_rs_element_from_matrix():
    g = RsElement.from_matrix(eq11_lift(2, 1, 1, 1))
    assert g.k == 2
    assert g.matrix == eq11_lift(2, 1, 1, 1)
    with pytest.raises(DomainError):
        RsElement.from_matrix(IntMatrix.diag([2, 1, 1, 1]))


# -- skew matrices -------------------------------------------------------


def test_skew_parse_and_format():
    theta = SkewMatrix.parse("sqrt:2,frac:1,3,int:0;quad:1,1,2,5,int:2;pi")
    assert theta.dim == 4
    assert theta[0, 1] == SQRT2
    assert theta[1, 0] == -SQRT2
    assert theta[0, 2] == Fraction(1, 3)
    assert not theta.is_exact
    again = SkewMatrix.parse(theta.format())
    assert again.format() == theta.format()


def test_skew_parse_errors():
    with pytest.raises(UsageError):
        SkewMatrix.parse("sqrt:2,int:1;int:3;int:4")
    with pytest.raises(UsageError):
        SkewMatrix.parse("quad:1,1")


def test_skew_rejects_bad_entries():
    with pytest.raises(DomainError):
        SkewMatrix(((1, 2), (-2, 0)))
    with pytest.raises(DomainError):
        SkewMatrix(((0, 2), (2, 0)))
    with pytest.raises(ShapeError):
        SkewMatrix(((0, 1, 2), (-1, 0, 3)))


# -- action --------------------------------------------------------------


@given(indices=st.lists(st.integers(min_value=0, max_value=2), max_size=10))
def test_action_restricts_to_moebius(indices):
    m = _word(SL2_GENERATORS, indices, 2)
    a, b = m.rows[0]
    c, d = m.rows[1]
    g = RsElement.from_matrix(eq11_lift(a, b, c, d))
    out = apply_rs_action(g, SkewMatrix.from_upper([[SQRT2]]))
    assert out[0, 1] == moebius_boundary(m, SQRT2)
    assert out[1, 0] == -out[0, 1]


def test_moebius_examples():
    assert moebius_boundary(IntMatrix.parse("1,1;1,2"), SQRT2) == SQRT2 / 2
    assert moebius_boundary(IntMatrix.parse("0,-1;1,0"), SQRT2) == -SQRT2 / 2
    with pytest.raises(DomainError):
        moebius_boundary(IntMatrix.parse("2,0;0,1"), SQRT2)
    with pytest.raises(SingularMatrixError):
        moebius_boundary(IntMatrix.parse("0,-1;1,1"), QuadInt.rational(-1))


def test_action_translation_in_dimension_four():
    n = 2
    shift = symplectic_generators(n)[0]
    g = RsElement.from_matrix(symplectic_lift(shift))
    theta = SkewMatrix.from_upper([[SQRT2, 1, 0], [0, 2], [SQRT2 * 3]])
    out = apply_rs_action(g, theta)
    assert out[0, 2] == theta[0, 2] + 1
    assert out[0, 1] == theta[0, 1]
    assert out[2, 3] == theta[2, 3]


def test_action_numeric():
    g = RsElement.from_matrix(eq11_lift(1, 1, 0, 1))
    out = apply_rs_action(g, SkewMatrix.from_upper([[NumericReal("pi")]]), precision=128)
    with mp.workprec(128):
        assert abs(out[0, 1] - (mp.pi + 1)) < mp.mpf(2) ** -100
        assert abs(out[1, 0] + out[0, 1]) < mp.mpf(2) ** -100


def test_action_singular_denominator():
    g = RsElement.from_matrix(eq11_lift(1, 0, 1, 1))
    with pytest.raises(SingularMatrixError):
        apply_rs_action(g, SkewMatrix.from_upper([[-1]]))


def test_action_dimension_mismatch():
    g = RsElement.from_matrix(eq11_lift(1, 1, 0, 1))
    with pytest.raises(ShapeError):
        apply_rs_action(g, SkewMatrix.from_upper([[1, 2, 3], [4, 5], [6]]))


# -- normal form ---------------------------------------------------------


def test_normal_form_recovers_invariants():
    theta = SkewMatrix.from_upper([[1, 2, 3], [4, 5], [6]])
    result = normal_form(theta, precision=192)
    t1, t2 = result.torus.thetas
    assert t1 > t2 > 0
    with mp.workprec(192):
        # theta_1 theta_2 is the |Pfaffian|; the squares sum to half the squared Frobenius norm
        assert abs(t1 * t2 - 8) < mp.mpf(10) ** -40
        assert abs(t1 ** 2 + t2 ** 2 - 91) < mp.mpf(10) ** -40
    assert result.residual < mp.mpf(10) ** -40


def test_normal_form_of_block_diagonal():
    result = normal_form(SkewMatrix.block_diagonal([1, 3]))
    t1, t2 = result.torus.thetas
    assert abs(t1 - 3) < 1e-30 and abs(t2 - 1) < 1e-30
    assert result.residual < 1e-30


def test_normal_form_degenerate_inputs():
    with pytest.raises(DegenerateInputError):
        normal_form(SkewMatrix.block_diagonal([2, 2]))
    with pytest.raises(DegenerateInputError):
        normal_form(SkewMatrix.from_upper([[1, 0, 0], [0, 0], [0]]))
    with pytest.raises(ShapeError):
        normal_form(SkewMatrix.from_upper([[1, 2], [3]]))


# -- trace lattice -------------------------------------------------------


def test_trace_lattice_single_parameter():
    lattice = trace_lattice(NormalTorus(thetas=[SQRT2]))
    assert [g.label for g in lattice.generators] == ["1", "theta1"]
    assert len(lattice.reduced_basis) == 2
    assert lattice.statement is not None


def test_trace_lattice_two_parameters():
    lattice = trace_lattice(NormalTorus(thetas=[SQRT2, SQRT2 + 1]))
    assert [g.subset for g in lattice.generators] == [[], [1], [2], [1, 2]]
    assert lattice.generators[3].value == SQRT2 * (SQRT2 + 1)
    assert len(lattice.reduced_basis) == 2
    assert lattice.statement is None


def test_trace_lattice_mixed_fields_stays_formal():
    lattice = trace_lattice(NormalTorus(thetas=[SQRT2, QuadInt.sqrt(3)]))
    assert lattice.reduced_basis is None
    assert lattice.generators[3].value is None
    assert lattice.generators[3].label == "theta1*theta2"


def test_real_multiplication_status():
    assert has_real_multiplication(NormalTorus(thetas=[SQRT2])).status == "yes"
    golden = QuadInt.parse("quad:1,1,2,5")
    assert has_real_multiplication(NormalTorus(thetas=[golden, SQRT2])).status == "yes"
    no = has_real_multiplication(NormalTorus(thetas=[Fraction(1, 2)]))
    assert no.status == "no" and no.description == "End is Z"
    half_root = QuadInt.parse("quad:0,1,2,2")
    assert has_real_multiplication(NormalTorus(thetas=[half_root])).status == "no"
    assert has_real_multiplication(NormalTorus(thetas=[NumericReal("pi")])).status == "unknown"


def test_normal_torus_rejects_nonpositive():
    with pytest.raises(ValueError):
        NormalTorus(thetas=[SQRT2 - 2])
    with pytest.raises(ValueError):
        NormalTorus(thetas=[])
