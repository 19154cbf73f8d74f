"""
One handler per subcommand; each returns plain data for the report writers
"""
import logging
from typing import Any, Dict, List

from mpmath import mp

from ..cfrac import convergents, cf_expand, fundamental_unit, jacobi_perron, period_product, unit_power_for_theta
from ..elliptic import parse_curve
from ..exact import QuadInt, parse_real
from ..lfunc import (
    build_lp,
    dirichlet_character,
    dirichlet_character_group,
    dirichlet_l_function,
    dirichlet_local_factor,
    local_zeta,
    torus_l_function,
)
from ..lfunc.compare import compare_report
from ..linalg import IntMatrix, perron_frobenius, smith_normal_form
from ..teich import lemma_chain, unit_index, unit_index_table
from ..torus import SkewMatrix, check_so_nn, is_symplectic, normal_form, split_reals, symplectic_lift
from ..utils.config import Config
from ..utils.errors import UsageError

logger = logging.getLogger(__name__)

CF_CONVERGENTS = 8


def parse_s(text: str, precision: int):
    """Evaluation point: a real literal or a complex one such as 2+1j"""
    text = text.strip()
    try:
        with mp.workprec(precision):
            if "j" in text:
                z = complex(text)
                return mp.mpc(mp.mpf(repr(z.real)), mp.mpf(repr(z.imag)))
            return mp.mpf(text)
    except ValueError as e:
        raise UsageError(f"cannot parse s = {text!r}") from e


def torus_matrix(args) -> IntMatrix:
    """--matrix directly, or the unit matrix of --theta"""
    if getattr(args, "matrix", None):
        return IntMatrix.parse(args.matrix)
    if getattr(args, "theta", None):
        return unit_power_for_theta(QuadInt.parse(args.theta))[0]
    raise UsageError("give --theta or --matrix")


def cmd_unit(args, cfg: Config) -> Dict[str, Any]:
    theta = QuadInt.parse(args.theta)
    data = fundamental_unit(theta)
    A, lam, m = unit_power_for_theta(theta)
    return {
        "theta": theta,
        "epsilon": data.epsilon,
        "minimal_polynomial": data.epsilon.minimal_polynomial(),
        "norm": data.norm,
        "discriminant": data.discriminant,
        "order_index": data.order_index,
        "matrix": A,
        "eigenvalue": lam,
        "power": m,
    }


def cmd_localzeta(args, cfg: Config) -> Dict[str, Any]:
    if args.modulus is not None:
        chi = dirichlet_character(args.modulus, args.char)
        factor = dirichlet_local_factor(chi, args.prime)
        return {
            "p": args.prime,
            "modulus": args.modulus,
            "char": args.char,
            "chi_p": chi(args.prime),
            "denominator": factor.coefficients,
        }
    A = torus_matrix(args)
    lp = build_lp(A, args.prime)
    return {"p": args.prime, "matrix": lp.matrix, "denominator": local_zeta(lp).coefficients}


def cmd_lfunction(args, cfg: Config) -> Dict[str, Any]:
    s = parse_s(args.s, cfg.precision)
    if args.modulus is not None:
        chi = dirichlet_character(args.modulus, args.char)
        result = dirichlet_l_function(chi, s, cfg.prime_bound, cfg.precision, cfg.threads)
    else:
        result = torus_l_function(torus_matrix(args), s, cfg.prime_bound, cfg.precision, cfg.threads)
    return {
        "s": result.s,
        "value": result.value,
        "prime_bound": result.prime_bound,
        "excluded": result.excluded,
        "precision": result.precision,
        "factors": result.factors,
    }


def cmd_compare(args, cfg: Config):
    curve = parse_curve(args.curve)
    return compare_report(torus_matrix(args), curve, cfg.prime_bound, cfg.threads)


def cmd_snf(args, cfg: Config) -> Dict[str, Any]:
    result = smith_normal_form(IntMatrix.parse(args.matrix))
    return {"U": result.U, "S": result.S, "V": result.V, "diagonal": result.diagonal}


def cmd_jp(args, cfg: Config) -> Dict[str, Any]:
    theta = [parse_real(tok) for tok in split_reals(args.theta)]
    state = jacobi_perron(theta, args.max_iters, cfg.jp_precision)
    out: Dict[str, Any] = {
        "digits": state.digits,
        "period_candidate": list(state.period_candidate) if state.period_candidate else None,
        "heuristic": state.heuristic,
        "precision": state.precision,
    }
    if state.period_candidate:
        out["period_product"] = period_product(state)
    return out


def cmd_normalform(args, cfg: Config) -> Dict[str, Any]:
    result = normal_form(SkewMatrix.parse(args.skew), cfg.precision)
    return {"thetas": result.torus.thetas, "residual": result.residual, "precision": result.precision}


def cmd_so_check(args, cfg: Config) -> Dict[str, Any]:
    g = IntMatrix.parse(args.matrix)
    return {"matrix": g, "so_nn": check_so_nn(g)}


def cmd_symplectic_check(args, cfg: Config) -> Dict[str, Any]:
    g = IntMatrix.parse(args.matrix)
    symplectic = is_symplectic(g)
    out: Dict[str, Any] = {"matrix": g, "symplectic": symplectic}
    if symplectic:
        lift = symplectic_lift(g)
        out["lift"] = lift
        out["lift_so_nn"] = check_so_nn(lift)
    return out


def cmd_functor(args, cfg: Config) -> Dict[str, Any]:
    return lemma_chain(IntMatrix.parse(args.matrix))


def cmd_unit_index(args, cfg: Config):
    theta = QuadInt.parse(args.theta)
    if args.table:
        return unit_index_table(theta, args.n)
    return unit_index(theta, args.n)


def cmd_cf(args, cfg: Config) -> Dict[str, Any]:
    theta = QuadInt.parse(args.theta)
    expansion = cf_expand(theta)
    digits = expansion.digits(CF_CONVERGENTS)
    return {
        "theta": theta,
        "preperiod": expansion.preperiod,
        "period": expansion.period,
        "convergents": [f"{p}/{q}" for p, q in convergents(digits)],
    }


def cmd_characters(args, cfg: Config) -> List[Dict[str, Any]]:
    out = []
    for chi in dirichlet_character_group(args.modulus):
        out.append({
            "index": chi.index,
            "generators": chi.generators,
            "orders": chi.orders,
            "exponents": chi.exponents,
            "values": {str(u): str(v) for u, v in chi.values.items()},
        })
    return out


def cmd_pf(args, cfg: Config):
    return perron_frobenius(IntMatrix.parse(args.matrix), args.mode, max(cfg.precision, 256))


COMMANDS = {
    "unit": cmd_unit,
    "localzeta": cmd_localzeta,
    "lfunction": cmd_lfunction,
    "compare": cmd_compare,
    "snf": cmd_snf,
    "jp": cmd_jp,
    "normalform": cmd_normalform,
    "so-check": cmd_so_check,
    "symplectic-check": cmd_symplectic_check,
    "functor": cmd_functor,
    "unit-index": cmd_unit_index,
    "cf": cmd_cf,
    "characters": cmd_characters,
    "pf": cmd_pf,
}
