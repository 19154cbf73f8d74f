"""
Tests for local factors, Dirichlet characters, Euler products, sweeps,
the curve comparison and report rendering
"""
import cmath
import json

import pytest
from hypothesis import given, settings, strategies as st
from mpmath import mp

from src.elliptic import make_curve
from src.exact import QuadInt, RootOfUnity
from src.linalg import IntMatrix
from src.lfunc import (
    LocalFactor,
    artin_pair_combine,
    build_lp,
    build_lp_root,
    det_one_minus_zl,
    dirichlet_character,
    dirichlet_character_group,
    dirichlet_l_function,
    dirichlet_local_factor,
    euler_product,
    excluded_primes,
    format_real,
    local_zeta,
    render,
    root_l_function,
    run_sweep,
    sweep_primes,
    to_jsonable,
    torus_l_function,
    write_report,
)
from src.lfunc.compare import compare_report
from src.lfunc.report import COMPARE_COLUMNS, format_complex
from src.lfunc.sweep import chunked
from src.utils.errors import (
    ConvergenceError,
    DomainError,
    ExcludedPrimesDegenerate,
    NotPrimeError,
    PrecisionExhaustedError,
    UsageError,
)
from src.utils.primes import primes_up_to

A_PELL = IntMatrix.parse("1,1;2,1")
A_GOLDEN = IntMatrix.parse("2,1;1,1")
A_UNIPOTENT = IntMatrix.parse("1,1;0,1")
ZETA2 = "1.6449340668482264365"
CATALAN = "0.91596559417721901505"

SL2_GENERATORS = [IntMatrix.parse("1,1;0,1"), IntMatrix.parse("1,0;1,1"), IntMatrix.parse("0,-1;1,0")]


# -- local factors ------------------------------------------------------


def test_build_lp_examples():
    assert build_lp(A_PELL, 2).matrix == IntMatrix.parse("6,2;-1,0")
    assert build_lp(A_PELL, 3).matrix == IntMatrix.parse("14,3;-1,0")
    assert local_zeta(build_lp(A_PELL, 2)).coefficients == [1, -6, 2]
    assert local_zeta(build_lp(A_PELL, 3)).coefficients == [1, -14, 3]


def test_trace_of_powers_feeds_first_row():
    expected = {2: 6, 3: 14, 5: 82, 7: 478, 11: 16238, 13: 94642, 17: 3215042, 19: 18738638}
    for p, trace in expected.items():
        assert build_lp(A_PELL, p).matrix[0, 0] == trace


def test_trace_of_powers_matches_exact_unit_powers():
    # (1 + sqrt 2) is the dominant eigenvalue of A_PELL
    epsilon = QuadInt(1, 1, 1, 2)
    for p in primes_up_to(40):
        assert build_lp(A_PELL, p).matrix[0, 0] == (epsilon ** p).trace
    golden = QuadInt(3, 1, 2, 5)
    for p in primes_up_to(40):
        assert build_lp(A_GOLDEN, p).matrix[0, 0] == (golden ** p).trace


@given(
    indices=st.lists(st.integers(min_value=0, max_value=2), min_size=1, max_size=6),
    p=st.sampled_from([2, 3, 5, 7, 11]),
)
def test_rank_one_local_zeta_law(indices, p):
    A = IntMatrix.identity(2)
    for i in indices:
        A = A * SL2_GENERATORS[i]
    factor = local_zeta(build_lp(A, p))
    assert factor.coefficients == [1, -(A ** p).trace(), p]
    assert factor.degree == 2


def test_local_zeta_in_dimension_three():
    A = IntMatrix.parse("2,1,0;1,1,0;0,0,1")
    for p in (2, 3, 5):
        factor = local_zeta(build_lp(A, p))
        assert factor.degree == 3
        assert factor.coefficients[0] == 1
        assert factor.coefficients[1] == -(A ** p).trace()


def test_det_one_minus_zl():
    assert det_one_minus_zl(IntMatrix.parse("6,2;-1,0")) == [1, -6, 2]
    assert det_one_minus_zl(IntMatrix.identity(3)) == [1, -3, 3, -1]


def test_build_lp_errors():
    with pytest.raises(DomainError):
        build_lp(IntMatrix.parse("2,0;0,1"), 3)
    with pytest.raises(DomainError):
        build_lp(IntMatrix.parse("1"), 3)
    with pytest.raises(NotPrimeError):
        build_lp(A_PELL, 4)


def test_root_of_unity_case():
    lp = build_lp_root(4, 3)
    assert lp.n == 0
    assert lp.root == RootOfUnity(4, 3)
    assert str(lp.root) == "-i"
    factor = local_zeta(lp)
    assert str(factor.coefficients[1]) == "i"
    assert not factor.is_integral()
    assert local_zeta(build_lp_root(2, 3)).coefficients == [1, 1]


def test_excluded_primes():
    assert excluded_primes(A_GOLDEN, 100).primes == [5]
    assert 5 in excluded_primes(A_GOLDEN, 100)
    assert 7 not in excluded_primes(A_GOLDEN, 100)
    # tr(A)^2 - 4 = 12
    assert excluded_primes(IntMatrix.parse("3,1;2,1"), 100).primes == [2, 3]
    assert excluded_primes(A_PELL, 100).all_excluded
    degenerate = excluded_primes(A_UNIPOTENT, 100)
    assert degenerate.all_excluded
    assert 101 in degenerate


# -- characters ---------------------------------------------------------


@pytest.mark.parametrize("N,count", [(1, 1), (4, 2), (5, 4), (8, 4), (12, 4), (15, 8)])
def test_character_group_size(N, count):
    group = dirichlet_character_group(N)
    assert len(group) == count
    assert group[0].is_trivial
    assert len({tuple(chi.exponents) for chi in group}) == count


@pytest.mark.parametrize("N", [5, 8, 15])
def test_characters_are_multiplicative(N):
    for chi in dirichlet_character_group(N):
        units = list(chi.values)
        for a in units:
            for b in units:
                assert chi(a) * chi(b) == chi(a * b)


def test_nontrivial_characters_sum_to_zero():
    with mp.workprec(128):
        for chi in dirichlet_character_group(15)[1:]:
            total = sum(v.value(128)[0] for v in chi.values.values())
            assert abs(total) < mp.mpf(10) ** -30


def test_character_mod_four():
    chi = dirichlet_character(4, 1)
    assert chi(3) == -1
    assert chi(1) == 1
    assert chi(2) == 0
    assert chi.is_real
    assert dirichlet_local_factor(chi, 3).coefficients == [1, 1]
    assert dirichlet_local_factor(chi, 5).coefficients == [1, -1]
    assert dirichlet_local_factor(chi, 2).coefficients == [1]


def test_character_mod_five_is_complex():
    chi = dirichlet_character(5, 1)
    assert chi(2) == RootOfUnity(4, 1)
    assert not chi.is_real


def test_character_errors():
    with pytest.raises(DomainError):
        dirichlet_character(4, 2)
    with pytest.raises(DomainError):
        dirichlet_character(1, 1)
    with pytest.raises(DomainError):
        dirichlet_character(0, 0)


# -- Euler products -----------------------------------------------------


def test_zeta_two_from_trivial_character():
    result = dirichlet_l_function(dirichlet_character(1, 0), 2, 10 ** 6)
    with mp.workprec(128):
        assert abs(result.value - mp.mpf(ZETA2)) < mp.mpf(10) ** -6
    assert result.factors == len(primes_up_to(10 ** 6))


def test_catalan_from_character_mod_four():
    result = dirichlet_l_function(dirichlet_character(4, 1), 2, 10 ** 6)
    with mp.workprec(128):
        assert abs(result.value - mp.mpf(CATALAN)) < mp.mpf(10) ** -6


def test_empty_product_is_one():
    result = euler_product([], 2, 100)
    assert result.value == 1
    assert result.factors == 0


def test_euler_product_skips_excluded_and_large_primes():
    factors = [LocalFactor(p=p, coefficients=[1, -1]) for p in (2, 3, 5, 7)]
    result = euler_product(factors, 2, 5, excluded=[3])
    assert result.factors == 2
    assert result.excluded == [3]
    with mp.workprec(128):
        expected = 1 / ((1 - mp.mpf(1) / 4) * (1 - mp.mpf(1) / 25))
        assert abs(result.value - expected) < mp.mpf(2) ** -120


def test_convergence_is_checked():
    with pytest.raises(ConvergenceError):
        dirichlet_l_function(dirichlet_character(1, 0), 1, 100)
    with pytest.raises(ConvergenceError):
        dirichlet_l_function(dirichlet_character(4, 1), mp.mpc(0.5, 3), 100)


def test_vanishing_denominator():
    with pytest.raises(DomainError):
        euler_product([LocalFactor(p=2, coefficients=[1, -2])], 1, 10)


def test_root_l_function_trivial_root():
    result = root_l_function(1, 2, 1000)
    reference = dirichlet_l_function(dirichlet_character(1, 0), 2, 1000)
    assert result.value == reference.value


def test_torus_l_function():
    result = torus_l_function(A_GOLDEN, 4, 50)
    assert result.excluded == [5]
    assert result.factors == len(primes_up_to(50)) - 1
    with pytest.raises(ExcludedPrimesDegenerate):
        torus_l_function(A_UNIPOTENT, 4, 50)


def test_thread_count_does_not_change_values():
    single = torus_l_function(A_GOLDEN, 4, 300, threads=1)
    many = torus_l_function(A_GOLDEN, 4, 300, threads=4)
    assert single.value == many.value
    chi = dirichlet_character(15, 3)
    assert dirichlet_l_function(chi, 2, 500, threads=1).value == dirichlet_l_function(chi, 2, 500, threads=8).value


# -- the two-dimensional representation ---------------------------------


@settings(max_examples=100)
@given(
    angle=st.floats(min_value=0, max_value=2, allow_nan=False),
    p=st.sampled_from([2, 3, 5, 7, 101]),
    s=st.floats(min_value=1.5, max_value=6),
)
def test_artin_pair_matches_product(angle, p, s):
    with mp.workprec(128):
        v = mp.expjpi(mp.mpf(angle))
    pair = artin_pair_combine(v, p, s)
    with mp.workprec(128):
        assert abs(pair.factor - pair.product_of_factors) < mp.mpf(10) ** -25


@pytest.mark.parametrize(
    "v,expected",
    [(RootOfUnity(1, 0), (9, 16)), (RootOfUnity(4, 1), (17, 16)), (RootOfUnity(2, 1), (25, 16))],
)
def test_artin_pair_determinants(v, expected):
    pair = artin_pair_combine(v, 2, 2)
    with mp.workprec(128):
        assert abs(pair.determinant_term - mp.mpf(expected[0]) / expected[1]) < mp.mpf(2) ** -100
        assert abs(pair.factor - pair.product_of_factors) < mp.mpf(2) ** -100


def test_artin_pair_accepts_builtin_complex():
    pair = artin_pair_combine(cmath.exp(0.7j), 3, 2)
    with mp.workprec(128):
        assert abs(pair.factor - pair.product_of_factors) < mp.mpf(2) ** -100
    pair = artin_pair_combine(-1.0, 2, 2)
    with mp.workprec(128):
        assert abs(pair.determinant_term - mp.mpf(25) / 16) < mp.mpf(2) ** -100


def test_artin_pair_detects_disagreeing_factors(monkeypatch):
    exact_det = mp.det
    monkeypatch.setattr(mp, "det", lambda m: exact_det(m) * (1 + mp.mpf(2) ** -40))
    with pytest.raises(PrecisionExhaustedError):
        artin_pair_combine(RootOfUnity(4, 1), 2, 2)


def test_artin_pair_rejects_non_unit():
    with pytest.raises(DomainError):
        artin_pair_combine(2 + 0j, 3, 2)


# -- sweeps -------------------------------------------------------------


def test_chunked():
    assert [len(c) for c in chunked(list(range(10)), 3)] == [4, 3, 3]
    assert chunked([], 3) == []
    assert chunked([2, 3], 8) == [[2], [3]]


@pytest.mark.asyncio
async def test_sweep_primes_keeps_order():
    primes = primes_up_to(2000)
    result = await sweep_primes(primes, lambda p: (p, (A_PELL ** p).trace() % 1000003), threads=4)
    assert result == [(p, (A_PELL ** p).trace() % 1000003) for p in primes]
    assert await sweep_primes([], lambda p: p, threads=4) == []


def test_run_sweep_matches_sequential():
    primes = primes_up_to(500)
    assert run_sweep(primes, lambda p: p * p, threads=1) == run_sweep(primes, lambda p: p * p, threads=6)


# -- curve comparison ---------------------------------------------------


def test_compare_report_unipotent():
    curve = make_curve(-1, 0)
    rows = compare_report(A_UNIPOTENT, curve, 20)
    assert [r.p for r in rows] == [5, 7, 11, 13, 17, 19]
    assert [r.ap for r in rows] == [-2, 0, 0, 6, 2, 0]
    assert all(r.trAp == 2 for r in rows)
    assert all(r.excluded for r in rows)
    assert not any(r.equal for r in rows)
    assert rows[0].curve_factor == [1, 2, 5]
    assert rows[0].torus_factor == [1, -2, 5]


def test_compare_report_pell_against_congruent_curve():
    rows = compare_report(A_PELL, make_curve(-1, 0, -4), 20)
    assert [(r.p, r.ap, r.trAp) for r in rows] == [
        (5, -2, 82),
        (7, 0, 478),
        (11, 0, 16238),
        (13, 6, 94642),
        (17, 2, 3215042),
        (19, 0, 18738638),
    ]
    assert [r.curve_factor for r in rows] == [[1, 2, 5], [1, 0, 7], [1, 0, 11], [1, -6, 13], [1, -2, 17], [1, 0, 19]]
    assert [r.torus_factor for r in rows] == [[1, -r.trAp, r.p] for r in rows]
    # tr(A) = 2 excludes every prime
    assert all(r.excluded for r in rows)
    assert not any(r.equal for r in rows)


def test_compare_report_good_primes_only():
    rows = compare_report(A_GOLDEN, make_curve(-1, 0), 10)
    assert [r.p for r in rows] == [5, 7]
    assert [r.excluded for r in rows] == [True, False]
    assert compare_report(A_GOLDEN, make_curve(-1, 0), 2) == []


def test_compare_report_threads():
    curve = make_curve(0, 1)
    assert compare_report(A_PELL, curve, 200, threads=1) == compare_report(A_PELL, curve, 200, threads=4)


# -- rendering ----------------------------------------------------------


def test_format_real_digits():
    with mp.workprec(128):
        third = mp.mpf(1) / 3
    assert format_real(third) == "0.33333333333333333333"
    assert format_real(2) == "2.0000000000000000000"
    assert format_complex(mp.mpc(1, -2)) == "1.0000000000000000000-2.0000000000000000000j"


def test_zeta_two_renders_twenty_digits():
    result = dirichlet_l_function(dirichlet_character(1, 0), 2, 100)
    text = to_jsonable(result)["value"]
    digits = text.replace(".", "").lstrip("0")
    assert len(digits) == 20
    assert text.startswith("1.64")


def test_render_csv_header_order():
    rows = compare_report(A_UNIPOTENT, make_curve(-1, 0), 7)
    lines = render(rows, "csv").splitlines()
    assert lines[0] == ",".join(COMPARE_COLUMNS)
    assert lines[1] == '5,-2,2,"[1,2,5]","[1,-2,5]",true,false'
    assert len(lines) == 3


def test_render_json_and_text():
    record = {"p": 5, "factor": LocalFactor(p=5, coefficients=[1, -2, 5]), "matrix": A_PELL}
    parsed = json.loads(render(record, "json"))
    assert parsed == {"p": 5, "factor": {"p": 5, "coefficients": [1, -2, 5]}, "matrix": "1,1;2,1"}
    assert render(record, "text").splitlines()[0] == "p: 5"
    with pytest.raises(UsageError):
        render(record, "yaml")
    with pytest.raises(UsageError):
        render([1, 2], "csv")


def test_write_report(tmp_path):
    out = tmp_path / "report.json"
    text = write_report({"p": 7}, "json", str(out))
    assert out.read_text(encoding="utf-8") == text
    assert write_report({"p": 7}, "json") == text


if __name__ == "__main__":
    pytest.main([__file__])
