"""Coset combinatorics behind the basis theorems.

Double cosets of Young subgroups in the symmetric group correspond to
nonnegative integer matrices with prescribed margins; with colors the
same picture holds for the wreath product of Z/m with S_r and matrices
whose entries are m-tuples.  The distinguished representative of each
coset and the refinement composition that indexes its stabilizer both
fall out of the matrix.
"""

from __future__ import annotations

from cycloschur.permutations import (
    compositions,
    coset_reps,
    ddot,
    ddot_inverse,
    theta,
    theta_inverse,
    identity,
)
from cycloschur.wreath import (
    colored_count,
    colored_matrix_of,
    double_coset_rep,
    enumerate_colored,
    enumerate_wreath,
    nu_colored,
)


def main() -> None:
    r = 3
    lam, mu = (2, 1), (1, 2)
    print(f"minimal right-coset representatives for S_{lam} in S_{r}:")
    for w in coset_reps(lam):
        print("  ", w.im, "length", w.length())
    print()

    print("the identity double coset as a matrix (row-intersection counts):")
    A = theta(lam, identity(r), mu)
    print("  theta(lam, id, mu) =", A)
    print("  back to the representative:", theta_inverse(A).im)
    print()

    m, n = 2, 2
    print(f"colored matrices with m = {m} colors, {n} x {n}, entries summing to {r}:")
    print("  closed-form count:", colored_count(n, r, m))
    sample = list(enumerate_colored(n, r, m))[:3]
    for B in sample:
        rep = double_coset_rep(B)
        print("  matrix", B)
        print("    representative perm", rep.perm.im, "colors", rep.colors)
        print("    stabilizer composition", nu_colored(B))
    print()

    print("every group element lands in the fiber of its matrix:")
    g = next(iter(enumerate_wreath(m, r)))
    B = colored_matrix_of((r,), g, (r,))
    print("  matrix of a group element with full margins:", B)
    print()

    k = 4
    print(f"reindexing compositions of k = {k} with m = {m} parts:")
    for lam2 in list(compositions(k, m))[:4]:
        dd = ddot(lam2)
        print(f"  {lam2} -> {dd} -> {ddot_inverse(dd, m)}")


if __name__ == "__main__":
    main()
