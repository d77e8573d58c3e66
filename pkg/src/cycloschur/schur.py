"""Slim cyclotomic q-Schur algebras on their hom-space bases.

For compositions lam, mu of r with at most n parts, the hom space from the
cyclic module x_mu H to x_lam H has a basis indexed by the n x n colored
matrices with row sums lam and column sums mu.  The basis vector of the
colored matrix A is right multiplication by

    b_A = x_lam T_d sigma seq,   where
    d    = minimal representative of the double coset of the entry sums,
    sigma = the blockwise symmetric element of the reindexed colors,
    seq  = sum of T_v over the minimal coset representatives attached to
           the column-major refinement inside the Young subgroup of mu,

and the endomorphism algebra of the direct sum over all of Lambda(n, r) is
the slim Schur algebra, of rank C(m n^2 + r - 1, r) over R.

Structure constants are computed by a division-free triangular elimination
against the leading terms of the b_A (the longest representative times the
lex-greatest monomial of sigma, which always has coefficient 1), entirely
over R.  Composition is right factor first: (x * y) acts by y then x.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .affine import AffineAlgebra, AffineElement, affine_sigma
from .hecke import (
    HeckeAlgebra,
    HeckeElement,
    eigen_test,
    module_coords,
    sigma_ddot,
)
from .permutations import (
    Composition,
    IntMatrix,
    Permutation,
    check_composition,
    compositions,
    coset_reps_within,
    identity,
    j_set,
    left_coset_factor,
    nu_of,
    theta,
    theta_inverse,
)
from .ring import MODULAR_PRIME, RingElem, RingMatrix, modular_rank, rank_mod_p
from .wreath import (
    ColoredMatrix,
    colored_col_sums,
    colored_count,
    colored_row_sums,
    colored_size,
    enumerate_colored,
    enumerate_colored_with_margins,
)


def embed_matrix(A: IntMatrix, m: int) -> ColoredMatrix:
    """Place an ordinary matrix in the color-0 slot of each entry."""
    return tuple(
        tuple((0,) * (m - 1) + (int(v),) for v in row) for row in A
    )


def diagonal_matrix(lam: Sequence[int], m: int) -> ColoredMatrix:
    """The colored diagonal matrix of a composition (color-0 entries)."""
    lam = check_composition(lam)
    n = len(lam)
    return tuple(
        tuple(
            (0,) * (m - 1) + (lam[i] if i == j else 0,) for j in range(n)
        )
        for i in range(n)
    )


class SchurContext:
    """The slim Schur algebra for (m, n, r), with per-basis caches."""

    def __init__(self, m: int, n: int, r: int, hecke: HeckeAlgebra | None = None):
        if n < 1:
            raise ValueError("need n >= 1")
        self.m = m
        self.n = n
        self.r = r
        self.hecke = hecke if hecke is not None else HeckeAlgebra(m, r)
        if self.hecke.m != m or self.hecke.r != r:
            raise ValueError("underlying algebra does not match (m, r)")
        self._basis: list[ColoredMatrix] | None = None
        self._tails: dict[ColoredMatrix, HeckeElement] = {}
        self._bs: dict[ColoredMatrix, HeckeElement] = {}
        self._coords: dict[ColoredMatrix, dict] = {}

    def _signature(self):
        return (self.m, self.n, self.r, self.hecke)

    def __eq__(self, other):
        return isinstance(other, SchurContext) and self._signature() == other._signature()

    def __hash__(self):
        return hash((self.m, self.n, self.r))

    def __repr__(self):
        return f"SchurContext(m={self.m}, n={self.n}, r={self.r})"

    def rank(self) -> int:
        return colored_count(self.n, self.r, self.m)

    def weights(self) -> list[Composition]:
        return list(compositions(self.r, self.n))

    def basis(self, guard: int | None = None) -> list[ColoredMatrix]:
        if self._basis is None:
            self._basis = list(enumerate_colored(self.n, self.r, self.m, guard))
        return self._basis

    def basis_block(self, lam: Sequence[int], mu: Sequence[int]) -> list[ColoredMatrix]:
        lam, mu = check_composition(lam), check_composition(mu)
        return list(enumerate_colored_with_margins(lam, mu, self.m))

    # -- the basis homomorphisms ------------------------------------------

    def tail(self, A: ColoredMatrix) -> HeckeElement:
        """T_d * sigma * (coset sum): b_A without the leading symmetrizer."""
        cached = self._tails.get(A)
        if cached is not None:
            return cached
        alg = self.hecke
        size = colored_size(A)
        mu = colored_col_sums(A)
        d = theta_inverse(size)
        elem = alg.from_perm(d) * sigma_ddot(alg, A)
        seq = alg.zero()
        for v in coset_reps_within(mu, nu_of(size)):
            seq = seq + alg.from_perm(v)
        elem = elem * seq
        self._tails[A] = elem
        return elem

    def b_element(self, A: ColoredMatrix) -> HeckeElement:
        cached = self._bs.get(A)
        if cached is not None:
            return cached
        lam = colored_row_sums(A)
        out = self.hecke.x_lambda(lam) * self.tail(A)
        self._bs[A] = out
        return out

    def b_coords(self, A: ColoredMatrix) -> dict:
        cached = self._coords.get(A)
        if cached is not None:
            return cached
        out = module_coords(self.b_element(A), colored_row_sums(A))
        self._coords[A] = out
        return out


def b_element_affine(alg: AffineAlgebra, A: ColoredMatrix) -> AffineElement:
    """The affine lift of b_A, with X's in place of L's."""
    from .wreath import a_ddot

    size = colored_size(A)
    lam = colored_row_sums(A)
    mu = colored_col_sums(A)
    if alg.r != sum(lam):
        raise ValueError("rank mismatch")
    d = theta_inverse(size)
    nu = nu_of(size)
    dd = a_ddot(A)
    n_rows, n_cols = len(A), len(A[0]) if A else 0
    exps = [dd[i][j] for j in range(n_cols) for i in range(n_rows)]
    elem = alg.x_lambda(lam) * alg.from_perm(d) * affine_sigma(alg, nu, exps)
    seq = alg.zero()
    for v in coset_reps_within(mu, nu_of(size)):
        seq = seq + alg.from_perm(v)
    return elem * seq


# -- triangular expansion in the hom basis ---------------------------------


class NotInSpanError(ValueError):
    """The element does not lie in the span of the hom-space basis."""


def _suffix_diffs(ahat: Sequence[int]) -> tuple[int, ...] | None:
    """Invert per-block suffix sums; None if not nonincreasing/nonnegative."""
    k = len(ahat)
    if any(x < 0 for x in ahat):
        return None
    for t in range(k - 1):
        if ahat[t] < ahat[t + 1]:
            return None
    return tuple(
        (ahat[t] - (ahat[t + 1] if t + 1 < k else 0)) for t in range(k)
    )


def _recover_matrix(
    ctx: SchurContext,
    lam: Composition,
    mu: Composition,
    d2: Permutation,
    c: tuple[int, ...],
) -> tuple[ColoredMatrix, Permutation]:
    """Rebuild the colored matrix whose leading module term is (d2, c).

    Raises NotInSpanError when the term cannot be a leading term: wrong
    representative, non-monotone exponent block, or color overflow.
    """
    from .permutations import ddot_inverse

    m = ctx.m
    d, v = left_coset_factor(d2, mu)
    size = theta(lam, d, mu)
    nu = nu_of(size)
    vs = coset_reps_within(mu, nu)
    max_len = max(x.length() for x in vs)
    longest = [x for x in vs if x.length() == max_len]
    if len(longest) != 1:
        raise AssertionError("longest coset representative is not unique")
    if v != longest[0]:
        raise NotInSpanError(
            f"term at {d2.im} pairs with {v.im}, not the longest representative"
        )
    e = v.inv().apply_to_tuple(c)
    n_rows, n_cols = len(size), len(size[0]) if size else 0
    entries: dict[tuple[int, int], tuple[int, ...]] = {}
    offset = 0
    for j in range(n_cols):
        for i in range(n_rows):
            k = size[i][j]
            ahat = e[offset : offset + k]
            offset += k
            diffs = _suffix_diffs(ahat)
            if diffs is None or sum(diffs) > m - 1:
                raise NotInSpanError(
                    f"exponent block {ahat} at cell ({i + 1},{j + 1}) is not a "
                    "leading pattern"
                )
            entries[(i, j)] = ddot_inverse(diffs, m)
    C = tuple(
        tuple(entries[(i, j)] for j in range(n_cols)) for i in range(n_rows)
    )
    return C, v


def _term_order_key(mu: Composition):
    def key(item: tuple[Permutation, tuple[int, ...]]):
        d2, c = item
        d, v = left_coset_factor(d2, mu)
        e = v.inv().apply_to_tuple(c)
        return (d2.length(), e, d2.im, c)

    return key


def express_in_hom_basis(
    ctx: SchurContext,
    z: HeckeElement,
    lam: Sequence[int],
    mu: Sequence[int],
) -> dict[ColoredMatrix, RingElem]:
    """Coordinates of z in the basis {b_A : row sums lam, column sums mu}.

    Division-free: repeatedly match the greatest module term of z under
    (representative length, pulled-back exponent) against the unique basis
    vector leading there, and subtract.  Raises NotInSpanError when z is
    outside the span.
    """
    import math

    from .permutations import young_subgroup_size

    lam = check_composition(lam)
    mu = check_composition(mu)
    coords = dict(module_coords(z, lam))
    keyfun = _term_order_key(mu)
    out: dict[ColoredMatrix, RingElem] = {}
    zero = RingElem.zero(ctx.hecke.nvars)
    # Each pass strictly lowers the greatest term, so the module dimension
    # bounds the number of passes.
    budget = (
        math.factorial(ctx.r) // young_subgroup_size(lam)
    ) * ctx.m**ctx.r + 1
    while coords:
        budget -= 1
        if budget < 0:
            raise NotInSpanError("triangular elimination failed to terminate")
        d2, c = max(coords, key=keyfun)
        f = coords[(d2, c)]
        C, _ = _recover_matrix(ctx, lam, mu, d2, c)
        if colored_row_sums(C) != lam or colored_col_sums(C) != mu:
            raise NotInSpanError("recovered matrix has wrong margins")
        out[C] = out.get(C, zero) + f
        for key, coeff in ctx.b_coords(C).items():
            cur = coords.get(key, zero) - coeff * f
            if cur.is_zero():
                coords.pop(key, None)
            else:
                coords[key] = cur
    return {C: f for C, f in out.items() if not f.is_zero()}


# -- elements of the Schur algebra -----------------------------------------


class SchurElement:
    """An R-linear combination of hom-basis vectors."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: SchurContext, terms: dict[ColoredMatrix, RingElem]):
        self.ctx = ctx
        self.terms = {A: c for A, c in terms.items() if not c.is_zero()}

    def _check(self, other: "SchurElement") -> None:
        if self.ctx != other.ctx:
            raise ValueError("elements from different Schur algebras")

    def __add__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        out = dict(self.terms)
        for A, c in other.terms.items():
            new = out.get(A, RingElem.zero(self.ctx.hecke.nvars)) + c
            if new.is_zero():
                out.pop(A, None)
            else:
                out[A] = new
        return SchurElement(self.ctx, out)

    def __neg__(self) -> "SchurElement":
        return SchurElement(self.ctx, {A: -c for A, c in self.terms.items()})

    def __sub__(self, other: "SchurElement") -> "SchurElement":
        return self + (-other)

    def scale(self, c: RingElem) -> "SchurElement":
        return SchurElement(self.ctx, {A: v * c for A, v in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SchurElement):
            return NotImplemented
        return self.ctx == other.ctx and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "SchurElement") -> "SchurElement":
        self._check(other)
        return schur_multiply(self, other)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for A, c in sorted(self.terms.items()):
            parts.append(f"({c})*Phi{A}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"SchurElement({self})"


def multiply_basis(
    ctx: SchurContext, A: ColoredMatrix, B: ColoredMatrix
) -> dict[ColoredMatrix, RingElem]:
    """Structure constants of Phi_A o Phi_B (apply B's map first)."""
    if colored_col_sums(A) != colored_row_sums(B):
        return {}
    z = ctx.b_element(A) * ctx.tail(B)
    return express_in_hom_basis(
        ctx, z, colored_row_sums(A), colored_col_sums(B)
    )


def schur_multiply(x: SchurElement, y: SchurElement) -> SchurElement:
    ctx = x.ctx
    zero = RingElem.zero(ctx.hecke.nvars)
    acc: dict[ColoredMatrix, RingElem] = {}
    for A, ca in x.terms.items():
        for B, cb in y.terms.items():
            for C, f in multiply_basis(ctx, A, B).items():
                new = acc.get(C, zero) + f * ca * cb
                if new.is_zero():
                    acc.pop(C, None)
                else:
                    acc[C] = new
    return SchurElement(ctx, acc)


def basis_element(ctx: SchurContext, A: ColoredMatrix) -> SchurElement:
    return SchurElement(ctx, {A: RingElem.one(ctx.hecke.nvars)})


def idempotent(ctx: SchurContext, lam: Sequence[int]) -> SchurElement:
    """The projection onto the lam summand: the diagonal basis vector."""
    lam = check_composition(lam)
    if len(lam) != ctx.n or sum(lam) != ctx.r:
        raise ValueError(f"{lam} is not an n-part composition of r")
    return basis_element(ctx, diagonal_matrix(lam, ctx.m))


def identity_element(ctx: SchurContext) -> SchurElement:
    out = SchurElement(ctx, {})
    for lam in ctx.weights():
        out = out + idempotent(ctx, lam)
    return out


def embed_q_schur(ctx: SchurContext, A: IntMatrix) -> SchurElement:
    """The classical q-Schur basis vector of an ordinary matrix, embedded."""
    return basis_element(ctx, embed_matrix(A, ctx.m))


def phi_pair(ctx: SchurContext, lam: Sequence[int], mu: Sequence[int]) -> SchurElement:
    """The basis vector of the identity double coset for margins (lam, mu)."""
    lam, mu = check_composition(lam), check_composition(mu)
    A = theta(lam, identity(ctx.r), mu)
    return embed_q_schur(ctx, A)


# -- verification routines -------------------------------------------------


def verify_rank(
    ctx: SchurContext,
    trials: int = 3,
    seed: int = 0,
    exact: bool = False,
    p: int = MODULAR_PRIME,
) -> dict:
    """Certify that the hom-basis vectors are independent, block by block.

    For each pair of weights the coordinate vectors of the b's are stacked
    and their rank is certified (modularly, or exactly with Bareiss) to
    equal the block size.  Returns a report with the certified total and
    the closed-form count.
    """
    from .ring import exact_rank

    expected = ctx.rank()
    total = 0
    blocks_report = []
    for lam in ctx.weights():
        for mu in ctx.weights():
            block = ctx.basis_block(lam, mu)
            if not block:
                continue
            col_index: dict = {}
            rows = []
            for A in block:
                coords = ctx.b_coords(A)
                row = {}
                for key, coeff in coords.items():
                    j = col_index.setdefault(key, len(col_index))
                    row[j] = coeff
                rows.append(row)
            entries = []
            for row in rows:
                vec = [RingElem.zero(ctx.hecke.nvars)] * len(col_index)
                for j, coeff in row.items():
                    vec[j] = coeff
                entries.extend(vec)
            M = RingMatrix(len(rows), len(col_index), entries)
            if exact:
                got = exact_rank(M)
            else:
                got = modular_rank(M, trials=trials, seed=seed, p=p)
            total += got
            blocks_report.append(
                {"lam": list(lam), "mu": list(mu), "size": len(block), "rank": got}
            )
    ok = total == expected and all(b["rank"] == b["size"] for b in blocks_report)
    return {
        "expected": expected,
        "certified": total,
        "ok": ok,
        "blocks": blocks_report,
    }


def verify_commutative(ctx: SchurContext) -> dict:
    """Check that the n = 1 slim Schur algebra is commutative."""
    if ctx.n != 1:
        raise ValueError("commutativity check applies to n = 1")
    basis = ctx.basis()
    failures = []
    for A in basis:
        for B in basis:
            left = multiply_basis(ctx, A, B)
            right = multiply_basis(ctx, B, A)
            if left != right:
                failures.append((A, B))
    return {"size": len(basis), "ok": not failures, "failures": failures}


def eigen_certificate(ctx: SchurContext, lam: Sequence[int], mu: Sequence[int]) -> bool:
    """Symbolic two-sided eigen property of every b in the (lam, mu) block."""
    lam, mu = check_composition(lam), check_composition(mu)
    for A in ctx.basis_block(lam, mu):
        b = ctx.b_element(A)
        for i in j_set(lam):
            if not eigen_test(b, i, "left"):
                return False
        for j in j_set(mu):
            if not eigen_test(b, j, "right"):
                return False
    return True


def hom_space_nullity(
    alg: HeckeAlgebra,
    lam: Sequence[int],
    mu: Sequence[int],
    seed: int = 0,
    p: int = MODULAR_PRIME,
    guard: int | None = None,
) -> int:
    """Dimension over F_p of {h : T_i h = q h (i in J_lam), h T_j = q h (j in J_mu)}.

    Specializes q and the parameters at seeded random points and solves the
    sparse linear system on the normal-form coordinates of h.
    """
    import random as _random

    lam, mu = check_composition(lam), check_composition(mu)
    rng = _random.Random(seed)
    q_val = rng.randrange(1, p)
    u_vals = [rng.randrange(p) for _ in range(alg.nvars)]
    basis = list(alg.pbw_basis(guard))
    col_of = {key: j for j, key in enumerate(basis)}
    row_map: dict = {}

    def add_entry(row_key, col, val):
        if val % p == 0:
            return
        row = row_map.setdefault(row_key, {})
        row[col] = (row.get(col, 0) + val) % p
        if row[col] == 0:
            del row[col]

    q_spec = q_val % p
    for j_col, key in enumerate(basis):
        mono = HeckeElement(alg, {key: alg.one_c})
        for i in j_set(lam):
            moved = mono.lmul_gen_T(i)
            for okey, coeff in moved.terms.items():
                add_entry(("L", i, okey), j_col, coeff.specialize_mod(p, q_val, u_vals))
            add_entry(("L", i, key), j_col, -q_spec)
        for jj in j_set(mu):
            moved = mono.rmul_gen_T(jj)
            for okey, coeff in moved.terms.items():
                add_entry(("R", jj, okey), j_col, coeff.specialize_mod(p, q_val, u_vals))
            add_entry(("R", jj, key), j_col, -q_spec)
    rows = list(row_map.values())
    return len(basis) - rank_mod_p(rows, p)


def verify_hom_space_dims(
    ctx: SchurContext, seed: int = 0, p: int = MODULAR_PRIME
) -> dict:
    """Solution-space dimensions match the block sizes, for every block."""
    blocks = []
    ok = True
    for lam in ctx.weights():
        for mu in ctx.weights():
            expected = len(ctx.basis_block(lam, mu))
            got = hom_space_nullity(ctx.hecke, lam, mu, seed=seed, p=p)
            blocks.append(
                {"lam": list(lam), "mu": list(mu), "expected": expected, "dim": got}
            )
            ok = ok and got == expected
    return {"ok": ok, "blocks": blocks}


# -- serialization ---------------------------------------------------------


def matrix_to_json(A: ColoredMatrix) -> list:
    return [[list(entry) for entry in row] for row in A]


def matrix_from_json(data) -> ColoredMatrix:
    return tuple(tuple(tuple(int(x) for x in entry) for entry in row) for row in data)


def schur_to_json(x: SchurElement) -> dict:
    terms = []
    for A, c in sorted(x.terms.items()):
        terms.append({"matrix": matrix_to_json(A), "poly": c.to_json()})
    return {"m": x.ctx.m, "n": x.ctx.n, "r": x.ctx.r, "terms": terms}


def schur_from_json(ctx: SchurContext, data: Mapping) -> SchurElement:
    if (int(data["m"]), int(data["n"]), int(data["r"])) != (ctx.m, ctx.n, ctx.r):
        raise ValueError("serialized element belongs to a different algebra")
    terms: dict[ColoredMatrix, RingElem] = {}
    for item in data["terms"]:
        A = matrix_from_json(item["matrix"])
        c = RingElem.from_json(item["poly"], ctx.hecke.nvars)
        cur = terms.get(A)
        terms[A] = c if cur is None else cur + c
    return SchurElement(ctx, terms)
