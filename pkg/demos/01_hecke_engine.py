"""Tour of the cyclotomic Hecke engine.

The algebra H(m, r) is generated by braid generators T_1..T_{r-1} and
commuting elements L_1..L_r, over Z[q, q^-1, u_1..u_m].  Every element
is stored in the normal form sum c_{w,a} T_w L^a with w a permutation
and a in {0..m-1}^r; multiplication straightens products back into that
form, reducing L_1^m by the defining degree-m polynomial.
"""

from __future__ import annotations

from cycloschur.hecke import HeckeAlgebra, from_left_form, tau, to_left_form
from cycloschur.ring import RingElem


def main() -> None:
    m, r = 2, 3
    alg = HeckeAlgebra(m, r)
    print(f"H({m}, {r}): dimension {alg.dim()} = {m}^{r} * {r}!")
    print()

    print("quadratic relation:  T1 * T1 =", alg.gen_T(1) * alg.gen_T(1))
    print("braid relation:      T1*T2*T1 == T2*T1*T2:",
          alg.gen_T(1) * alg.gen_T(2) * alg.gen_T(1)
          == alg.gen_T(2) * alg.gen_T(1) * alg.gen_T(2))
    print()

    print("the degree-m relation for L1:")
    print("  L1^2 =", alg.gen_L(1) * alg.gen_L(1))
    print()

    print("L-elements commute and conjugate along T:")
    L2 = alg.gen_L(2)
    print("  L1*L2 == L2*L1:", alg.gen_L(1) * L2 == L2 * alg.gen_L(1))
    print("  T1*L1*T1 == q*L2:",
          alg.gen_T(1) * alg.gen_L(1) * alg.gen_T(1) == L2.scale(alg.q))
    print()

    x = alg.gen_T(1) * alg.gen_L(2) * alg.gen_T(2)
    print("a straightened product  T1 * L2 * T2 =")
    print(" ", x)
    print()

    print("the anti-automorphism fixing T_i and L_j reverses products:")
    y = alg.gen_L(1) * alg.gen_T(1)
    print("  tau(x*y) == tau(y)*tau(x):", tau(x * y) == tau(y) * tau(x))
    print()

    print("left normal form (L-monomials in front) and back:")
    lf = to_left_form(x)
    print("  number of left-form terms:", len(lf.coeffs))
    print("  round trip exact:", from_left_form(lf) == x)
    print()

    print("an element with an explicit Laurent coefficient:")
    z = x.scale(RingElem.q_power(-2, alg.nvars)) + alg.one()
    print(" ", z)


if __name__ == "__main__":
    main()
