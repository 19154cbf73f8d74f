#!/usr/bin/env python3
"""
Walkthrough of the pipeline, and a thin front for the command line
"""
import asyncio
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent / "src"))

from src.cfrac import cf_expand, fundamental_unit, unit_power_for_theta
from src.cli import main as cli_main
from src.elliptic import cm_catalog, count_points
from src.exact import QuadInt
from src.lfunc import build_lp, dirichlet_character, dirichlet_l_function, excluded_primes, local_zeta, sweep_primes
from src.lfunc.compare import compare_report
from src.lfunc.report import format_real
from src.teich import lemma_chain
from src.linalg import IntMatrix
from src.utils import config, primes_up_to


async def setup_demo():
    """Run each stage on small inputs and print what comes out"""

    print("L-functions of noncommutative tori with real multiplication")
    print("=" * 60)

    print("\n1. Real quadratic parameter and its unit")
    theta = QuadInt.sqrt(2)
    expansion = cf_expand(theta)
    unit = fundamental_unit(theta)
    A, lam, m = unit_power_for_theta(theta)
    print(f"   theta = {theta}, continued fraction {expansion.preperiod} {expansion.period}*")
    print(f"   epsilon = {unit.epsilon} (norm {unit.norm}), A = {A.format()}, eigenvalue epsilon^{m}")

    print("\n2. Local factors of the torus")
    for p in primes_up_to(7):
        factor = local_zeta(build_lp(A, p))
        print(f"   p = {p}: det(I - L_p z) = {factor.coefficients}")
    excluded = excluded_primes(A, config.prime_bound)
    if excluded.all_excluded:
        print("   tr(A)^2 = 4: every prime is excluded for this A")

    print("\n3. Endomorphism functor")
    chain = lemma_chain(IntMatrix.parse("2,1;3,4"))
    print(f"   (2,1;3,4) -> {chain.normalized.format()} -> {chain.image.format()}, omega = {chain.omega}")

    print("\n4. Point counts of the catalog curves")
    for curve in cm_catalog():
        primes = [p for p in primes_up_to(30) if p > 3 and curve.discriminant % p]
        records = await sweep_primes(primes, lambda p, c=curve: count_points(c, p), threads=config.threads)
        print(f"   {curve.label}: " + ", ".join(f"a_{r.p} = {r.ap}" for r in records))

    print("\n5. Curve against torus")
    for row in compare_report(A, cm_catalog()[0], 20):
        print(f"   p = {row.p}: a_p = {row.ap}, tr(A^p) = {row.trAp}, equal = {row.equal}")

    print("\n6. Dirichlet L-values at s = 2")
    for index, name in ((0, "zeta(2)"), (1, "L(2, chi_4)")):
        modulus = 1 if index == 0 else 4
        result = dirichlet_l_function(dirichlet_character(modulus, index), 2, 10000, config.precision)
        print(f"   {name} ~ {format_real(result.value.real)} (p <= 10^4)")

    print("\nDone. Every stage is also available as a subcommand: python demo.py --help")


def main():
    """Main entry point"""
    if sys.argv[1:] == ["--demo"]:
        asyncio.run(setup_demo())
        return 0
    return cli_main(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
