"""cycloschur: exact computer algebra for cyclotomic Hecke algebras.

Subpackages cover, bottom-up:

- ``ring``: the ground ring Z[q, q^-1, u_1..u_m] with exact and modular
  linear algebra;
- ``permutations``: symmetric groups, reduced words, (double) coset
  combinatorics, and the row-intersection matrix correspondence;
- ``wreath``: the wreath product Z/m wr S_r, colored matrices, and the
  colored double-coset correspondence;
- ``hecke``: the cyclotomic Hecke algebra of type G(m, 1, r) on its
  interpolating basis, with straightening and module coordinates;
- ``affine``: the extended affine Hecke algebra of type A and the
  evaluation map onto the cyclotomic quotient;
- ``schur``: slim cyclotomic q-Schur algebras, their hom-space bases,
  structure constants, idempotents, and rank/commutativity checks;
- ``typeb``: the Hecke algebra of type B at two parameters and the
  comparison against the m = 2 cyclotomic picture;
- ``expressions``: the small expression language used by the CLI;
- ``cache``: the content-addressed JSON result cache;
- ``verify``: named check suites with JSON reports;
- ``cli``: the ``cyclo`` command-line entry point.
"""

from __future__ import annotations

__version__ = "0.1.0"
