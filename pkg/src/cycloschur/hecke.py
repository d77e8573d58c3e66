"""The cyclotomic Hecke algebra of the complex reflection group G(m, 1, r).

Over R = Z[q, q^-1, u_1..u_m], the algebra H has generators T_1..T_{r-1}
and commuting elements L_1..L_r subject to

- (T_i + 1)(T_i - q) = 0 and the braid relations,
- (L_1 - u_1)(L_1 - u_2)...(L_1 - u_m) = 0,
- T_i L_i T_i = q L_{i+1}, and T_i L_j = L_j T_i for j != i, i+1.

Elements are kept in the normal form  sum  c_{w,a} T_w L^a  with w a
permutation and a in {0..m-1}^r, a free R-basis of rank m^r r!.  The two
workhorses are:

- straightening (moving L^a rightward past a generator T_i):
  L^a T_i = T_i L^{a s_i}                                  if a_i = a_{i+1},
  L^a T_i = T_i L^{a s_i} + (q-1) * sum_{t=1}^{a_{i+1}-a_i}
            L^{a s_i - t(e_i - e_{i+1})}                    if a_i < a_{i+1},
  L^a T_i = T_i L^{a s_i} + (1-q) * sum_{t=0}^{a_i-a_{i+1}-1}
            L^{a s_i + t(e_i - e_{i+1})}                    if a_i > a_{i+1},
  where a s_i swaps the i-th and (i+1)-st entries; every correction
  exponent stays inside {0..m-1}^r, so no reduction is needed;

- cyclotomic overflow: L_1^m = sum_{k=1}^m (-1)^{k+1} e_k(u) L_1^{m-k},
  and for j > 1 the overflow runs through the chain
  L_j = q^{1-j} T_{j-1}..T_1 L_1 T_1..T_{j-1}.

The parameter list is pluggable: ``HeckeAlgebra(m, r)`` uses the generic
variables u_1..u_m, while explicit ring elements (for instance (-1, Q) at
two parameters) give specialized models without changing any code path.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .guards import check_guard
from .permutations import (
    Permutation,
    check_composition,
    double_coset_factor,
    identity,
    reduced_word,
    right_coset_factor,
    young_subgroup,
    young_subgroup_size,
)
from .ring import RingElem, elementary_symmetric_of
from .wreath import ColoredMatrix, a_ddot, colored_size

TermKey = tuple[Permutation, tuple[int, ...]]


@lru_cache(maxsize=None)
def _cached_word(im: tuple[int, ...]) -> tuple[int, ...]:
    return reduced_word(Permutation(im))


def _swap_positions(w: Permutation, i: int) -> Permutation:
    """w * s_i: exchange positions i, i+1 of the one-line word."""
    im = list(w.im)
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(tuple(im))


def _swap_values(w: Permutation, i: int) -> Permutation:
    """s_i * w: exchange the values i, i+1."""
    im = list(w.im)
    pi, pj = im.index(i), im.index(i + 1)
    im[pi], im[pj] = i + 1, i
    return Permutation(tuple(im))


class HeckeAlgebra:
    """Context object: degree m, rank r, and the parameter list."""

    def __init__(
        self,
        m: int,
        r: int,
        nvars: int | None = None,
        u_params: Sequence[RingElem] | None = None,
    ):
        if m < 1 or r < 1:
            raise ValueError("need m >= 1 and r >= 1")
        if nvars is None:
            nvars = m
        if u_params is None:
            u_params = tuple(RingElem.u_var(i, nvars) for i in range(1, m + 1))
        u_params = tuple(u_params)
        if len(u_params) != m:
            raise ValueError(f"need {m} parameters, got {len(u_params)}")
        for p in u_params:
            if p.nvars != nvars:
                raise ValueError("parameters must live in the declared ring")
        self.m = m
        self.r = r
        self.nvars = nvars
        self.u_params = u_params
        self.q = RingElem.q_power(1, nvars)
        self.one_c = RingElem.one(nvars)
        self.qm1 = self.q - self.one_c
        # L_1^m = sum_k overflow[k-1] L_1^{m-k}
        self.overflow = tuple(
            elementary_symmetric_of(list(u_params), k).scale((-1) ** (k + 1))
            for k in range(1, m + 1)
        )

    def _signature(self):
        return (self.m, self.r, self.nvars, self.u_params)

    def __eq__(self, other):
        return isinstance(other, HeckeAlgebra) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def __repr__(self):
        return f"HeckeAlgebra(m={self.m}, r={self.r})"

    def dim(self) -> int:
        return self.m**self.r * math.factorial(self.r)

    # -- element constructors ---------------------------------------------

    def elem(self, terms: Mapping[TermKey, RingElem]) -> "HeckeElement":
        clean = {k: c for k, c in terms.items() if not c.is_zero()}
        return HeckeElement(self, clean)

    def zero(self) -> "HeckeElement":
        return HeckeElement(self, {})

    def one(self) -> "HeckeElement":
        key = (identity(self.r), (0,) * self.r)
        return HeckeElement(self, {key: self.one_c})

    def scalar(self, c: RingElem) -> "HeckeElement":
        key = (identity(self.r), (0,) * self.r)
        return self.elem({key: c})

    def gen_T(self, i: int) -> "HeckeElement":
        if not 1 <= i <= self.r - 1:
            raise ValueError(f"T index {i} out of range 1..{self.r - 1}")
        from .permutations import simple

        key = (simple(i, self.r), (0,) * self.r)
        return HeckeElement(self, {key: self.one_c})

    def gen_L(self, j: int) -> "HeckeElement":
        if not 1 <= j <= self.r:
            raise ValueError(f"L index {j} out of range 1..{self.r}")
        return self.one().rmul_gen_L(j)

    def from_perm(self, w: Permutation) -> "HeckeElement":
        if w.size != self.r:
            raise ValueError("permutation size mismatch")
        return HeckeElement(self, {(w, (0,) * self.r): self.one_c})

    def jm_monomial(self, a: Sequence[int]) -> "HeckeElement":
        """The product L_1^{a_1} ... L_r^{a_r}; exponents reduce as needed."""
        a = tuple(int(x) for x in a)
        if len(a) != self.r or any(x < 0 for x in a):
            raise ValueError(f"bad exponent vector {a}")
        out = self.one()
        for j, e in enumerate(a, start=1):
            for _ in range(e):
                out = out.rmul_gen_L(j)
        return out

    def x_lambda(self, lam: Sequence[int]) -> "HeckeElement":
        """The q-symmetrizer sum of T_w over the Young subgroup of lam."""
        lam = check_composition(lam)
        if sum(lam) != self.r:
            raise ValueError(f"{lam} is not a composition of {self.r}")
        zero_a = (0,) * self.r
        return HeckeElement(
            self, {(w, zero_a): self.one_c for w in young_subgroup(lam)}
        )

    def pbw_basis(self, guard: int | None = None) -> Iterator[TermKey]:
        check_guard(self.dim(), guard, f"normal-form basis m={self.m}, r={self.r}")
        from .permutations import all_perms

        for w in all_perms(self.r):
            for a in itertools.product(range(self.m), repeat=self.r):
                yield (w, a)


class HeckeElement:
    """A sparse R-linear combination of normal-form monomials T_w L^a."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: HeckeAlgebra, terms: dict[TermKey, RingElem]):
        self.alg = alg
        self.terms = terms

    # -- linear structure --------------------------------------------------

    def _check(self, other: "HeckeElement") -> None:
        if self.alg != other.alg:
            raise ValueError("elements from different algebras")

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add_term(out, k, c)
        return HeckeElement(self.alg, out)

    def __neg__(self) -> "HeckeElement":
        return HeckeElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "HeckeElement") -> "HeckeElement":
        return self + (-other)

    def scale(self, c: RingElem) -> "HeckeElement":
        if c.is_zero():
            return self.alg.zero()
        return HeckeElement(self.alg, {k: v * c for k, v in self.terms.items()})

    def scale_int(self, n: int) -> "HeckeElement":
        return self.scale(RingElem.const(n, self.alg.nvars))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, w: Permutation, a: Sequence[int]) -> RingElem:
        return self.terms.get((w, tuple(a)), RingElem.zero(self.alg.nvars))

    # -- generator actions -------------------------------------------------

    def rmul_gen_T(self, i: int) -> "HeckeElement":
        return HeckeElement(self.alg, _rmul_T(self.alg, self.terms, i))

    def rmul_gen_L(self, j: int) -> "HeckeElement":
        return HeckeElement(self.alg, _rmul_L(self.alg, self.terms, j))

    def lmul_gen_T(self, i: int) -> "HeckeElement":
        """Left multiplication T_i * x in a single pass (L parts untouched)."""
        alg = self.alg
        out: dict[TermKey, RingElem] = {}
        for (w, a), c in self.terms.items():
            if not w.has_left_descent(i):
                _add_term(out, (_swap_values(w, i), a), c)
            else:
                _add_term(out, (w, a), c * alg.qm1)
                _add_term(out, (_swap_values(w, i), a), c * alg.q)
        return HeckeElement(alg, out)

    # -- multiplication ----------------------------------------------------

    def __mul__(self, other: "HeckeElement") -> "HeckeElement":
        self._check(other)
        alg = self.alg
        acc: dict[TermKey, RingElem] = {}
        for (w2, a2), c2 in other.terms.items():
            cur = self.terms
            for letter in _cached_word(w2.im):
                cur = _rmul_T(alg, cur, letter)
            for j in range(1, alg.r + 1):
                for _ in range(a2[j - 1]):
                    cur = _rmul_L(alg, cur, j)
            for key, c in cur.items():
                _add_term(acc, key, c * c2)
        return HeckeElement(alg, acc)

    # -- printing / io -----------------------------------------------------

    def sorted_terms(self) -> list[tuple[TermKey, RingElem]]:
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].im, kv[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (w, a), c in self.sorted_terms():
            factors = []
            if not w.is_identity():
                factors.append("T[" + ",".join(map(str, w.im)) + "]")
            if any(a):
                factors.append("L[" + ",".join(map(str, a)) + "]")
            if not factors:
                factors.append("1")
            parts.append(f"({c})*" + "*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"HeckeElement({self})"


def _add_term(out: dict[TermKey, RingElem], key: TermKey, c: RingElem) -> None:
    cur = out.get(key)
    if cur is None:
        if not c.is_zero():
            out[key] = c
    else:
        new = cur + c
        if new.is_zero():
            del out[key]
        else:
            out[key] = new


def _rmul_T(
    alg: HeckeAlgebra, terms: Mapping[TermKey, RingElem], i: int
) -> dict[TermKey, RingElem]:
    """Right multiplication of a normal-form dict by T_i."""
    if not 1 <= i <= alg.r - 1:
        raise ValueError(f"T index {i} out of range")
    q, qm1, one = alg.q, alg.qm1, alg.one_c
    neg_qm1 = one - q
    out: dict[TermKey, RingElem] = {}
    for (w, a), c in terms.items():
        ai, aj = a[i - 1], a[i]
        a_sw = a[: i - 1] + (aj, ai) + a[i + 1 :]
        wsi = _swap_positions(w, i)
        if w.im[i - 1] < w.im[i]:
            _add_term(out, (wsi, a_sw), c)
        else:
            _add_term(out, (w, a_sw), c * qm1)
            _add_term(out, (wsi, a_sw), c * q)
        if ai < aj:
            c_corr = c * qm1
            for t in range(1, aj - ai + 1):
                b = list(a_sw)
                b[i - 1] -= t
                b[i] += t
                _add_term(out, (w, tuple(b)), c_corr)
        elif ai > aj:
            c_corr = c * neg_qm1
            for t in range(0, ai - aj):
                b = list(a_sw)
                b[i - 1] += t
                b[i] -= t
                _add_term(out, (w, tuple(b)), c_corr)
    return out


def _rmul_L(
    alg: HeckeAlgebra, terms: Mapping[TermKey, RingElem], j: int
) -> dict[TermKey, RingElem]:
    """Right multiplication of a normal-form dict by L_j."""
    if not 1 <= j <= alg.r:
        raise ValueError(f"L index {j} out of range")
    m = alg.m
    out: dict[TermKey, RingElem] = {}
    if j == 1:
        for (w, a), c in terms.items():
            if a[0] < m - 1:
                _add_term(out, (w, (a[0] + 1,) + a[1:]), c)
            else:
                for k in range(1, m + 1):
                    _add_term(out, (w, (m - k,) + a[1:]), c * alg.overflow[k - 1])
        return out
    high: dict[TermKey, RingElem] = {}
    for (w, a), c in terms.items():
        if a[j - 1] < m - 1:
            b = a[: j - 1] + (a[j - 1] + 1,) + a[j:]
            _add_term(out, (w, b), c)
        else:
            high[(w, a)] = c
    if high:
        # overflow via L_j = q^{1-j} T_{j-1}..T_1 L_1 T_1..T_{j-1}
        cur = high
        for i in range(j - 1, 0, -1):
            cur = _rmul_T(alg, cur, i)
        cur = _rmul_L(alg, cur, 1)
        for i in range(1, j):
            cur = _rmul_T(alg, cur, i)
        scale = RingElem.q_power(1 - j, alg.nvars)
        for key, c in cur.items():
            _add_term(out, key, c * scale)
    return out


# -- anti-automorphism and the left-handed view ----------------------------


def tau(x: HeckeElement) -> HeckeElement:
    """The anti-automorphism fixing every T_i and L_j.

    Sends T_w L^a to L^a T_{w^{-1}}, re-expanded into normal form.
    """
    alg = x.alg
    acc: dict[TermKey, RingElem] = {}
    id_r = identity(alg.r)
    for (w, a), c in x.terms.items():
        cur: dict[TermKey, RingElem] = {(id_r, a): c}
        for letter in _cached_word(w.inv().im):
            cur = _rmul_T(alg, cur, letter)
        for key, v in cur.items():
            _add_term(acc, key, v)
    return HeckeElement(alg, acc)


class LeftForm:
    """An element written on the left-handed basis L^a T_w."""

    __slots__ = ("alg", "coeffs")

    def __init__(
        self, alg: HeckeAlgebra, coeffs: dict[tuple[tuple[int, ...], Permutation], RingElem]
    ):
        self.alg = alg
        self.coeffs = {k: c for k, c in coeffs.items() if not c.is_zero()}

    def __eq__(self, other):
        if not isinstance(other, LeftForm):
            return NotImplemented
        return self.alg == other.alg and self.coeffs == other.coeffs


def to_left_form(x: HeckeElement) -> LeftForm:
    """Coordinates of x on the basis L^a T_w.

    Uses the anti-automorphism twice: if tau(x) = sum c_{v,b} T_v L^b then
    x = sum c_{v,b} L^b T_{v^{-1}}.
    """
    y = tau(x)
    return LeftForm(x.alg, {(a, w.inv()): c for (w, a), c in y.terms.items()})


def from_left_form(lf: LeftForm) -> HeckeElement:
    alg = lf.alg
    acc: dict[TermKey, RingElem] = {}
    id_r = identity(alg.r)
    for (a, w), c in lf.coeffs.items():
        cur: dict[TermKey, RingElem] = {(id_r, a): c}
        for letter in _cached_word(w.im):
            cur = _rmul_T(alg, cur, letter)
        for key, v in cur.items():
            _add_term(acc, key, v)
    return HeckeElement(alg, acc)


# -- block elementary symmetric elements -----------------------------------


def sigma_elementary(
    alg: HeckeAlgebra, k: int, positions: Sequence[int] | None = None
) -> HeckeElement:
    """e_k of the commuting elements L_j for j in positions (default: all)."""
    if positions is None:
        positions = range(1, alg.r + 1)
    positions = list(positions)
    if not 0 <= k <= len(positions):
        raise ValueError(f"k = {k} out of range for {len(positions)} positions")
    total = alg.zero()
    for subset in itertools.combinations(positions, k):
        elem = alg.one()
        for j in subset:
            elem = elem.rmul_gen_L(j)
        total = total + elem
    return total


def sigma_nu(
    alg: HeckeAlgebra, nu: Sequence[int], exps: Sequence[Sequence[int]]
) -> HeckeElement:
    """Blockwise product of powers of elementary symmetric L-polynomials.

    The composition nu cuts {1..r} into consecutive blocks; block c of size
    k contributes prod_t e_t(L's of block c)^{exps[c][t-1]}, with exps[c]
    of length k.
    """
    nu = check_composition(nu)
    if sum(nu) != alg.r:
        raise ValueError(f"{nu} is not a composition of {alg.r}")
    if len(exps) != len(nu):
        raise ValueError("need one exponent tuple per block")
    from .permutations import blocks

    result = alg.one()
    for blk, ex in zip(blocks(nu), exps):
        positions = list(blk)
        if len(ex) != len(positions):
            raise ValueError(
                f"exponent tuple {tuple(ex)} does not match block size {len(positions)}"
            )
        for t, e in enumerate(ex, start=1):
            for _ in range(int(e)):
                result = result * sigma_elementary(alg, t, positions)
    return result


def sigma_ddot(alg: HeckeAlgebra, A: ColoredMatrix) -> HeckeElement:
    """The interpolating symmetric element attached to a colored matrix.

    Blocks follow the column-major composition of the entry-sum matrix;
    block (i, j) carries the reindexed exponent tuple of the colored entry.
    """
    from .permutations import nu_of

    size = colored_size(A)
    nu = nu_of(size)
    dd = a_ddot(A)
    n_rows = len(A)
    n_cols = len(A[0]) if A else 0
    exps = [dd[i][j] for j in range(n_cols) for i in range(n_rows)]
    return sigma_nu(alg, nu, exps)


# -- module coordinates and linear tests -----------------------------------


def module_coords(
    x: HeckeElement, lam: Sequence[int]
) -> dict[tuple[Permutation, tuple[int, ...]], RingElem]:
    """Coordinates of x in the free module x_lam H on its monomial basis.

    The basis vectors x_lam T_d L^a (d a minimal right-coset representative)
    expand as sum_{u} T_{u d} L^a with all coefficients equal, so grouping
    the normal-form terms of x by coset recovers the coordinates; any
    mismatch means x does not lie in the module, and raises.
    """
    lam = check_composition(lam)
    alg = x.alg
    if sum(lam) != alg.r:
        raise ValueError(f"{lam} is not a composition of {alg.r}")
    size = young_subgroup_size(lam)
    coords: dict[tuple[Permutation, tuple[int, ...]], RingElem] = {}
    counts: dict[tuple[Permutation, tuple[int, ...]], int] = {}
    for (w, a), c in x.terms.items():
        _, d = right_coset_factor(w, lam)
        key = (d, a)
        if key in coords:
            if coords[key] != c:
                raise ValueError("element does not lie in the cyclic module")
            counts[key] += 1
        else:
            coords[key] = c
            counts[key] = 1
    for key, n in counts.items():
        if n != size:
            raise ValueError("element does not lie in the cyclic module")
    return coords


def eigen_test(x: HeckeElement, i: int, side: str) -> bool:
    """Does T_i act on x by the scalar q (from the given side)?"""
    if side == "left":
        return x.lmul_gen_T(i) == x.scale(x.alg.q)
    if side == "right":
        return x.rmul_gen_T(i) == x.scale(x.alg.q)
    raise ValueError("side must be 'left' or 'right'")


def appendix_basis_coords(
    x: HeckeElement, lam: Sequence[int], mu: Sequence[int]
) -> dict[tuple[Permutation, Permutation, tuple[int, ...], Permutation], RingElem]:
    """Coordinates on the basis T_u T_d L^b T_v of the whole algebra.

    Here u runs over the Young subgroup of lam, d over minimal double coset
    representatives, b over {0..m-1}^r and v over the minimal right-coset
    representatives attached to the cell of d inside the Young subgroup of
    mu.  Triangular elimination: the longest surviving normal-form monomial
    of T_u T_d L^b T_v is T_{udv} L^{b v} with coefficient 1, so repeatedly
    matching the longest term of x determines the coordinates.
    """
    lam = check_composition(lam)
    mu = check_composition(mu)
    alg = x.alg
    coords: dict[tuple[Permutation, Permutation, tuple[int, ...], Permutation], RingElem] = {}
    work = dict(x.terms)
    while work:
        w, a = max(work, key=lambda k: (k[0].length(), k[0].im, k[1]))
        c = work[(w, a)]
        u, d, v = double_coset_factor(w, lam, mu)
        b = v.inv().apply_to_tuple(a)
        key = (u, d, b, v)
        cur = coords.get(key)
        coords[key] = c if cur is None else cur + c
        # rebuild T_u T_d L^b T_v and subtract c times it
        cur_terms: dict[TermKey, RingElem] = {((u * d), (0,) * alg.r): alg.one_c}
        for j in range(1, alg.r + 1):
            for _ in range(b[j - 1]):
                cur_terms = _rmul_L(alg, cur_terms, j)
        for letter in _cached_word(v.im):
            cur_terms = _rmul_T(alg, cur_terms, letter)
        for key2, v2 in cur_terms.items():
            _add_term(work, key2, -(v2 * c))
    return {k: c for k, c in coords.items() if not c.is_zero()}


# -- serialization ---------------------------------------------------------


def element_to_json(x: HeckeElement) -> dict:
    terms = []
    for (w, a), c in x.sorted_terms():
        terms.append({"w": list(w.im), "a": list(a), "poly": c.to_json()})
    return {"m": x.alg.m, "r": x.alg.r, "terms": terms}


def element_from_json(alg: HeckeAlgebra, data: Mapping) -> HeckeElement:
    if int(data["m"]) != alg.m or int(data["r"]) != alg.r:
        raise ValueError("serialized element belongs to a different algebra")
    terms: dict[TermKey, RingElem] = {}
    for item in data["terms"]:
        w = Permutation(tuple(int(v) for v in item["w"]))
        a = tuple(int(v) for v in item["a"])
        if len(a) != alg.r or any(not 0 <= e < alg.m for e in a):
            raise ValueError(f"bad exponent vector {a}")
        c = RingElem.from_json(item["poly"], alg.nvars)
        _add_term(terms, (w, a), c)
    return HeckeElement(alg, terms)
