"""Exact arithmetic in the ground ring R = Z[q, q^-1, u_1, ..., u_m].

Every coefficient in this package is an element of R: a Laurent polynomial
in the invertible variable q whose coefficients are ordinary (non-Laurent)
polynomials in the parameters u_1, ..., u_m with integer coefficients.
Elements are stored sparsely as a map from monomials to nonzero integer
coefficients, where a monomial is a pair ``(q_exponent, u_exponents)`` with
``q_exponent`` any integer and ``u_exponents`` a tuple of ``nvars`` naturals.

Also provided: elementary symmetric polynomials in the u-parameters (the
coefficients of the cyclotomic relation), Poincare polynomials of Young
subgroups, exact specialization at rational points, and rank certification
for matrices over R (probabilistic modular rank plus an exact fraction-free
escape hatch).

All values are immutable; all operations are pure functions.
"""

from __future__ import annotations

import itertools
import json
import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# Default prime for modular specializations: 2^31 - 1 (Mersenne), > 2^30.
MODULAR_PRIME = 2**31 - 1

Monomial = tuple[int, tuple[int, ...]]


class RingError(ValueError):
    """Raised on contract violations in ring operations."""


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division turns out to be inexact."""


class RingElem:
    """An element of Z[q, q^-1, u_1, ..., u_nvars] in canonical sparse form.

    ``terms`` maps ``(q_exponent, u_exponents)`` to a nonzero integer.
    Two elements are equal iff they have the same ``nvars`` and identical
    term maps.  Instances are immutable by convention: no method mutates
    ``terms`` after construction.
    """

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | None = None):
        if nvars < 0:
            raise RingError("nvars must be nonnegative")
        clean: dict[Monomial, int] = {}
        if terms:
            for (qe, ue), c in terms.items():
                if c == 0:
                    continue
                ue = tuple(ue)
                if len(ue) != nvars:
                    raise RingError(
                        f"u-exponent tuple {ue} has length {len(ue)}, expected {nvars}"
                    )
                if any(e < 0 for e in ue):
                    raise RingError(f"negative u-exponent in {ue}")
                clean[(qe, ue)] = c
        self.nvars = nvars
        self.terms = clean
        self._hash: int | None = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(nvars: int) -> "RingElem":
        return RingElem(nvars, {})

    @staticmethod
    def const(c: int, nvars: int) -> "RingElem":
        return RingElem(nvars, {(0, (0,) * nvars): c})

    @staticmethod
    def one(nvars: int) -> "RingElem":
        return RingElem.const(1, nvars)

    @staticmethod
    def q_power(k: int, nvars: int) -> "RingElem":
        return RingElem(nvars, {(k, (0,) * nvars): 1})

    @staticmethod
    def u_var(i: int, nvars: int) -> "RingElem":
        """The variable u_i, 1-indexed."""
        if not 1 <= i <= nvars:
            raise RingError(f"u index {i} out of range 1..{nvars}")
        exps = [0] * nvars
        exps[i - 1] = 1
        return RingElem(nvars, {(0, tuple(exps)): 1})

    # -- basic predicates --------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return self.terms == {(0, (0,) * self.nvars): 1}

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "RingElem") -> None:
        if not isinstance(other, RingElem):
            raise TypeError(f"expected RingElem, got {type(other).__name__}")
        if self.nvars != other.nvars:
            raise RingError(
                f"mismatched variable counts: {self.nvars} vs {other.nvars}"
            )

    def __add__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        out = dict(self.terms)
        for mon, c in other.terms.items():
            new = out.get(mon, 0) + c
            if new:
                out[mon] = new
            else:
                out.pop(mon, None)
        res = RingElem.__new__(RingElem)
        res.nvars = self.nvars
        res.terms = out
        res._hash = None
        return res

    def __neg__(self) -> "RingElem":
        res = RingElem.__new__(RingElem)
        res.nvars = self.nvars
        res.terms = {mon: -c for mon, c in self.terms.items()}
        res._hash = None
        return res

    def __sub__(self, other: "RingElem") -> "RingElem":
        return self + (-other)

    def __mul__(self, other: "RingElem") -> "RingElem":
        self._check(other)
        out: dict[Monomial, int] = {}
        for (qa, ua), ca in self.terms.items():
            for (qb, ub), cb in other.terms.items():
                mon = (qa + qb, tuple(x + y for x, y in zip(ua, ub)))
                new = out.get(mon, 0) + ca * cb
                if new:
                    out[mon] = new
                else:
                    del out[mon]
        res = RingElem.__new__(RingElem)
        res.nvars = self.nvars
        res.terms = out
        res._hash = None
        return res

    def scale(self, c: int) -> "RingElem":
        if c == 0:
            return RingElem.zero(self.nvars)
        res = RingElem.__new__(RingElem)
        res.nvars = self.nvars
        res.terms = {mon: c * v for mon, v in self.terms.items()}
        res._hash = None
        return res

    def __pow__(self, k: int) -> "RingElem":
        if k < 0:
            raise RingError("negative powers only exist for monomials in q; use q_power")
        result = RingElem.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RingElem):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    # -- canonical order and leading term ---------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        """Terms sorted ascending by the canonical (q_exp, u_exps) lex order."""
        return sorted(self.terms.items())

    def leading(self) -> tuple[Monomial, int]:
        """The lex-largest monomial and its coefficient (error on zero)."""
        if not self.terms:
            raise RingError("zero element has no leading term")
        mon = max(self.terms)
        return mon, self.terms[mon]

    # -- specialization ----------------------------------------------------

    def specialize(self, q_val, u_vals: Sequence) -> Fraction:
        """Evaluate at rational q = q_val and u_i = u_vals[i-1], exactly.

        Raises ``ZeroDivisionError`` when q_val = 0 meets a negative
        q-exponent.
        """
        if len(u_vals) != self.nvars:
            raise RingError(f"expected {self.nvars} u-values, got {len(u_vals)}")
        q_val = Fraction(q_val)
        u_vals = [Fraction(v) for v in u_vals]
        total = Fraction(0)
        for (qe, ue), c in self.terms.items():
            if q_val == 0 and qe < 0:
                raise ZeroDivisionError("q = 0 specialization with negative exponent")
            val = Fraction(c)
            val *= q_val**qe
            for u, e in zip(u_vals, ue):
                if e:
                    val *= u**e
            total += val
        return total

    def specialize_mod(self, p: int, q_val: int, u_vals: Sequence[int]) -> int:
        """Evaluate in the prime field F_p; q_val must be nonzero mod p."""
        if len(u_vals) != self.nvars:
            raise RingError(f"expected {self.nvars} u-values, got {len(u_vals)}")
        if q_val % p == 0:
            raise ZeroDivisionError("q specialization must be invertible mod p")
        total = 0
        for (qe, ue), c in self.terms.items():
            val = c % p
            val = val * pow(q_val, qe, p) % p
            for u, e in zip(u_vals, ue):
                if e:
                    val = val * pow(u, e, p) % p
            total = (total + val) % p
        return total

    # -- serialization -----------------------------------------------------

    def to_json(self) -> list[dict]:
        """Canonical JSON: term list sorted by the monomial order."""
        return [
            {"c": c, "q": qe, "u": list(ue)} for (qe, ue), c in self.sorted_terms()
        ]

    @staticmethod
    def from_json(data: Iterable[Mapping], nvars: int) -> "RingElem":
        terms: dict[Monomial, int] = {}
        for item in data:
            mon = (int(item["q"]), tuple(int(e) for e in item["u"]))
            terms[mon] = terms.get(mon, 0) + int(item["c"])
        return RingElem(nvars, terms)

    # -- printing ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"RingElem({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (qe, ue), c in self.sorted_terms():
            factors = []
            if qe:
                factors.append("q" if qe == 1 else f"q^{qe}")
            for i, e in enumerate(ue, start=1):
                if e:
                    factors.append(f"u{i}" if e == 1 else f"u{i}^{e}")
            if not factors:
                body = str(abs(c))
            else:
                mag = "*".join(factors)
                body = mag if abs(c) == 1 else f"{abs(c)}*{mag}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def ring_arith(a: RingElem, b: RingElem, op: str) -> RingElem:
    """Dispatch basic arithmetic by name: add, sub, mul, neg (neg ignores b)."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise RingError(f"unknown op {op!r}")


def elementary_symmetric_params(k: int, m: int) -> RingElem:
    """The k-th elementary symmetric polynomial e_k(u_1, ..., u_m).

    These are the expansion coefficients of (L_1 - u_1)...(L_1 - u_m); e_0 = 1.
    """
    if not 0 <= k <= m:
        raise RingError(f"k = {k} out of range 0..{m}")
    terms: dict[Monomial, int] = {}
    for subset in itertools.combinations(range(m), k):
        exps = [0] * m
        for i in subset:
            exps[i] = 1
        terms[(0, tuple(exps))] = 1
    return RingElem(m, terms)


def elementary_symmetric_of(values: Sequence[RingElem], k: int) -> RingElem:
    """e_k evaluated at an explicit list of ring elements."""
    if not values and k == 0:
        raise RingError("need at least the ambient nvars; pass values or use const")
    nvars = values[0].nvars
    total = RingElem.zero(nvars)
    for subset in itertools.combinations(values, k):
        prod = RingElem.one(nvars)
        for v in subset:
            prod = prod * v
        total = total + prod
    return total


def quantum_factorial(n: int, nvars: int) -> RingElem:
    """[n]_q! = prod_{j=1..n} (1 + q + ... + q^{j-1})."""
    result = RingElem.one(nvars)
    for j in range(2, n + 1):
        bracket = RingElem(nvars, {(e, (0,) * nvars): 1 for e in range(j)})
        result = result * bracket
    return result


def poincare_polynomial(lam: Sequence[int], nvars: int = 0) -> RingElem:
    """Sum of q^(length) over the Young subgroup of the composition lam.

    Equals the product of the quantum factorials [lam_i]_q!.
    """
    if any(part < 0 for part in lam):
        raise RingError("composition parts must be nonnegative")
    result = RingElem.one(nvars)
    for part in lam:
        result = result * quantum_factorial(part, nvars)
    return result


def exact_div(a: RingElem, b: RingElem) -> RingElem:
    """Exact division a / b in R; raises ExactDivisionError if b does not divide a.

    Works by repeated cancellation of lex-leading terms, which is valid
    because the (q, u) lex order is multiplicative over an integral domain.
    """
    a._check(b)
    if b.is_zero():
        raise ExactDivisionError("division by zero")
    nvars = a.nvars
    (qb, ub), cb = b.leading()
    quotient: dict[Monomial, int] = {}
    rem = a
    while not rem.is_zero():
        (qa, ua), ca = rem.leading()
        if ca % cb != 0:
            raise ExactDivisionError("leading coefficient does not divide")
        diff = tuple(x - y for x, y in zip(ua, ub))
        if any(d < 0 for d in diff):
            raise ExactDivisionError("leading monomial does not divide")
        mon = (qa - qb, diff)
        coeff = ca // cb
        quotient[mon] = coeff
        rem = rem - RingElem(nvars, {mon: coeff}) * b
    return RingElem(nvars, quotient)


def divide_by_int(a: RingElem, c: int) -> RingElem:
    """Exact division of every coefficient by the integer c."""
    if c == 0:
        raise ExactDivisionError("division by zero")
    out: dict[Monomial, int] = {}
    for mon, v in a.terms.items():
        if v % c != 0:
            raise ExactDivisionError(f"coefficient {v} not divisible by {c}")
        out[mon] = v // c
    return RingElem(a.nvars, out)


class RingMatrix:
    """A dense rows x cols matrix of RingElem entries (all sharing nvars)."""

    __slots__ = ("rows", "cols", "nvars", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[RingElem]):
        if len(entries) != rows * cols:
            raise RingError(
                f"expected {rows * cols} entries, got {len(entries)}"
            )
        nvars = entries[0].nvars if entries else 0
        for e in entries:
            if e.nvars != nvars:
                raise RingError("entries must share the same variable count")
        self.rows = rows
        self.cols = cols
        self.nvars = nvars
        self.entries = list(entries)

    def at(self, i: int, j: int) -> RingElem:
        return self.entries[i * self.cols + j]

    @staticmethod
    def from_rows(rows: Sequence[Sequence[RingElem]]) -> "RingMatrix":
        flat = [e for row in rows for e in row]
        return RingMatrix(len(rows), len(rows[0]) if rows else 0, flat)


def rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    """Rank of a sparse matrix over F_p; rows are {column: value} dicts."""
    pivots: dict[int, dict[int, int]] = {}
    rank = 0
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        for pc in sorted(pivots):
            coeff = r.get(pc)
            if coeff is None:
                continue
            piv = pivots[pc]
            for c, pv in piv.items():
                nv = (r.get(c, 0) - coeff * pv) % p
                if nv:
                    r[c] = nv
                else:
                    r.pop(c, None)
            r.pop(pc, None)
        if not r:
            continue
        pivot_col = min(r)
        inv = pow(r[pivot_col], -1, p)
        pivots[pivot_col] = {c: v * inv % p for c, v in r.items() if c != pivot_col}
        rank += 1
    return rank


def modular_rank(
    M: RingMatrix, trials: int = 3, seed: int = 0, p: int = MODULAR_PRIME
) -> int:
    """Max rank of M over `trials` random specializations into F_p.

    A lower bound on the rank of M over the fraction field of R; equality
    with a predicted count certifies linear independence.  Deterministic
    given the seed; q is drawn nonzero.
    """
    if trials < 1:
        raise RingError("trials must be >= 1")
    rng = random.Random(seed)
    best = 0
    for _ in range(trials):
        q_val = rng.randrange(1, p)
        u_vals = [rng.randrange(p) for _ in range(M.nvars)]
        rows = []
        for i in range(M.rows):
            row = {}
            for j in range(M.cols):
                v = M.at(i, j).specialize_mod(p, q_val, u_vals)
                if v:
                    row[j] = v
            rows.append(row)
        best = max(best, rank_mod_p(rows, p))
    return best


def exact_rank(M: RingMatrix) -> int:
    """Exact rank over the fraction field of R by fraction-free elimination.

    Bareiss-style: every division is by the previous pivot and provably
    exact.  Exponential worst case; intended as the --exact escape hatch at
    desk scale.
    """
    a = [[M.at(i, j) for j in range(M.cols)] for i in range(M.rows)]
    n_rows, n_cols = M.rows, M.cols
    nvars = M.nvars
    prev = RingElem.one(nvars)
    rank = 0
    row = 0
    for _ in range(min(n_rows, n_cols)):
        pr = pc = -1
        for i in range(row, n_rows):
            for j in range(row, n_cols):
                if not a[i][j].is_zero():
                    pr, pc = i, j
                    break
            if pr >= 0:
                break
        if pr < 0:
            break
        a[row], a[pr] = a[pr], a[row]
        for r2 in range(n_rows):
            a[r2][row], a[r2][pc] = a[r2][pc], a[r2][row]
        pivot = a[row][row]
        for i in range(row + 1, n_rows):
            for j in range(row + 1, n_cols):
                num = a[i][j] * pivot - a[i][row] * a[row][j]
                a[i][j] = exact_div(num, prev)
            a[i][row] = RingElem.zero(nvars)
        prev = pivot
        rank += 1
        row += 1
    return rank


def ring_to_json_str(x: RingElem) -> str:
    return json.dumps(x.to_json(), separators=(",", ":"))
