"""Symmetric group combinatorics: words, cosets, and matrix correspondences.

Conventions, fixed once for the whole package:

- A permutation w of {1..r} is stored by its one-line notation
  ``im = (w(1), ..., w(r))``.
- Composition of permutations is ``(u * v)(i) = u(v(i))``.
- The simple reflection s_i swaps the values i and i+1; as a right factor
  it swaps positions i, i+1 of the one-line word, as a left factor it swaps
  the values i, i+1.
- ``length(w)`` is the inversion count, and ``reduced_word(w)`` returns the
  lexicographically smallest reduced expression, letters being generator
  indices read left to right (so the word (1, 2) means s_1 * s_2).
- Compositions are tuples of nonnegative integers; the composition lam of r
  cuts {1..r} into consecutive value blocks R_1, R_2, ... of sizes lam_i.
- The Young subgroup S_lam permutes each block internally.  Its generator
  index set j_set(lam) consists of the i < r that are NOT partial sums
  of lam.
- coset_reps(lam) lists the minimal-length representatives d of the right
  cosets S_lam d; these satisfy d^{-1}(i) < d^{-1}(i+1) for i in j_set(lam)
  and make lengths additive: length(u * d) = length(u) + length(d) for
  every u in S_lam.
- Double cosets S_lam w S_mu correspond bijectively to nonnegative integer
  matrices with row sums lam and column sums mu, via
  theta(lam, w, mu)[i][j] = |R_i^lam  intersect  w(R_j^mu)|; theta_inverse
  rebuilds the minimal-length representative from the matrix.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterator, Sequence

Composition = tuple[int, ...]
IntMatrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class Permutation:
    """A permutation of {1..r} in one-line notation."""

    im: tuple[int, ...]

    def __post_init__(self):
        r = len(self.im)
        if sorted(self.im) != list(range(1, r + 1)):
            raise ValueError(f"not a permutation of 1..{r}: {self.im}")

    @property
    def size(self) -> int:
        return len(self.im)

    def __call__(self, i: int) -> int:
        return self.im[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return Permutation(tuple(self.im[j - 1] for j in other.im))

    def inv(self) -> "Permutation":
        out = [0] * self.size
        for pos, val in enumerate(self.im, start=1):
            out[val - 1] = pos
        return Permutation(tuple(out))

    def length(self) -> int:
        im = self.im
        return sum(
            1
            for i in range(len(im))
            for j in range(i + 1, len(im))
            if im[i] > im[j]
        )

    def is_identity(self) -> bool:
        return all(v == i for i, v in enumerate(self.im, start=1))

    def has_left_descent(self, i: int) -> bool:
        """length(s_i * w) < length(w); holds iff i appears after i+1."""
        return self.im.index(i) > self.im.index(i + 1)

    def has_right_descent(self, i: int) -> bool:
        """length(w * s_i) < length(w); holds iff w(i) > w(i+1)."""
        return self.im[i - 1] > self.im[i]

    def apply_to_tuple(self, a: Sequence) -> tuple:
        """Place permutation: (a . w) = (a_{w(1)}, ..., a_{w(r)}).

        A right action: (a . v) . w = a . (v * w).
        """
        return tuple(a[v - 1] for v in self.im)


def identity(r: int) -> Permutation:
    return Permutation(tuple(range(1, r + 1)))


def simple(i: int, r: int) -> Permutation:
    if not 1 <= i <= r - 1:
        raise ValueError(f"generator index {i} out of range 1..{r - 1}")
    im = list(range(1, r + 1))
    im[i - 1], im[i] = im[i], im[i - 1]
    return Permutation(tuple(im))


def from_word(word: Sequence[int], r: int) -> Permutation:
    return reduce(lambda w, i: w * simple(i, r), word, identity(r))


def reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically smallest reduced word for w.

    Greedy: repeatedly strip the smallest left descent.
    """
    word: list[int] = []
    r = w.size
    cur = w
    while not cur.is_identity():
        for i in range(1, r):
            if cur.has_left_descent(i):
                word.append(i)
                cur = simple(i, r) * cur
                break
    return tuple(word)


def longest_element(r: int) -> Permutation:
    return Permutation(tuple(range(r, 0, -1)))


def all_perms(r: int) -> Iterator[Permutation]:
    for im in itertools.permutations(range(1, r + 1)):
        yield Permutation(im)


# -- compositions ----------------------------------------------------------


def check_composition(lam: Sequence[int]) -> Composition:
    lam = tuple(int(x) for x in lam)
    if any(x < 0 for x in lam):
        raise ValueError(f"composition parts must be nonnegative: {lam}")
    return lam


def partial_sums(lam: Sequence[int]) -> tuple[int, ...]:
    """All prefix sums lam_1, lam_1+lam_2, ..., up to and including the total."""
    out = []
    total = 0
    for part in lam:
        total += part
        out.append(total)
    return tuple(out)


def blocks(lam: Sequence[int]) -> list[range]:
    """Consecutive value blocks R_1, R_2, ... (1-indexed, possibly empty)."""
    out = []
    start = 1
    for part in lam:
        out.append(range(start, start + part))
        start += part
    return out


def j_set(lam: Sequence[int]) -> frozenset[int]:
    """Generator indices of the Young subgroup: i < r not a partial sum."""
    r = sum(lam)
    sums = set(partial_sums(lam))
    return frozenset(i for i in range(1, r) if i not in sums)


def compositions(r: int, n: int) -> Iterator[Composition]:
    """All weak compositions of r into exactly n parts, lexicographically."""
    if n == 0:
        if r == 0:
            yield ()
        return
    for first in range(r + 1):
        for rest in compositions(r - first, n - 1):
            yield (first,) + rest


def partitions(r: int, max_parts: int | None = None) -> Iterator[Composition]:
    """Partitions of r (nonincreasing, no trailing zeros), at most max_parts."""

    def rec(remaining: int, cap: int, slots: int | None) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if slots is not None and slots == 0:
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(
                remaining - first, first, None if slots is None else slots - 1
            ):
                yield (first,) + rest

    yield from rec(r, r, max_parts)


def young_subgroup(lam: Sequence[int]) -> Iterator[Permutation]:
    """All elements of S_lam, as permutations of {1..sum(lam)}."""
    lam = check_composition(lam)
    r = sum(lam)
    blks = blocks(lam)
    for pieces in itertools.product(
        *[itertools.permutations(list(b)) for b in blks]
    ):
        im = [0] * r
        for blk, piece in zip(blks, pieces):
            for pos, val in zip(blk, piece):
                im[pos - 1] = val
        yield Permutation(tuple(im))


def young_subgroup_size(lam: Sequence[int]) -> int:
    import math

    size = 1
    for part in lam:
        size *= math.factorial(part)
    return size


# -- coset representatives -------------------------------------------------


def coset_reps(lam: Sequence[int]) -> list[Permutation]:
    """Minimal-length representatives of the right cosets S_lam d.

    Built constructively: choose which positions receive the values of each
    block, then fill each block's values in increasing position order.
    Sorted by (length, one-line word).
    """
    lam = check_composition(lam)
    r = sum(lam)
    blks = blocks(lam)
    reps: list[Permutation] = []

    def rec(avail: tuple[int, ...], bi: int, im: dict[int, int]):
        if bi == len(blks):
            reps.append(Permutation(tuple(im[p] for p in range(1, r + 1))))
            return
        blk = list(blks[bi])
        for chosen in itertools.combinations(avail, len(blk)):
            new_im = dict(im)
            for pos, val in zip(chosen, blk):
                new_im[pos] = val
            rest = tuple(p for p in avail if p not in set(chosen))
            rec(rest, bi + 1, new_im)

    rec(tuple(range(1, r + 1)), 0, {})
    reps.sort(key=lambda d: (d.length(), d.im))
    return reps


def is_right_coset_rep(d: Permutation, lam: Sequence[int]) -> bool:
    dinv = d.inv()
    return all(dinv(i) < dinv(i + 1) for i in j_set(lam))


def is_left_coset_rep(d: Permutation, mu: Sequence[int]) -> bool:
    return all(d(i) < d(i + 1) for i in j_set(mu))


def right_coset_factor(
    w: Permutation, lam: Sequence[int]
) -> tuple[Permutation, Permutation]:
    """Factor w = u * d with u in S_lam and d the minimal rep of S_lam w."""
    lam = check_composition(lam)
    winv = w.inv()
    im = [0] * w.size
    for blk in blocks(lam):
        vals = list(blk)
        positions = sorted(winv(v) for v in vals)
        for pos, val in zip(positions, vals):
            im[pos - 1] = val
    d = Permutation(tuple(im))
    u = w * d.inv()
    return u, d


def left_coset_factor(
    w: Permutation, mu: Sequence[int]
) -> tuple[Permutation, Permutation]:
    """Factor w = d * v with v in S_mu and d the minimal rep of w S_mu."""
    mu = check_composition(mu)
    im = [0] * w.size
    for blk in blocks(mu):
        positions = list(blk)
        vals = sorted(w(p) for p in positions)
        for pos, val in zip(positions, vals):
            im[pos - 1] = val
    d = Permutation(tuple(im))
    v = d.inv() * w
    return d, v


def double_coset_factor(
    w: Permutation, lam: Sequence[int], mu: Sequence[int]
) -> tuple[Permutation, Permutation, Permutation]:
    """The unique factorization w = u * d * v with additive lengths.

    Here d is the minimal element of S_lam w S_mu, u lies in S_lam, and v
    lies in S_mu and is a minimal right-coset representative for the Young
    subgroup of nu_of(theta(lam, d, mu)) inside S_mu.
    """
    u, d1 = right_coset_factor(w, lam)
    d, v = left_coset_factor(d1, mu)
    if u.length() + d.length() + v.length() != w.length():
        raise AssertionError(
            f"double coset factorization not additive for {w.im}"
        )
    return u, d, v


# -- the matrix correspondence ---------------------------------------------


def theta(lam: Sequence[int], w: Permutation, mu: Sequence[int]) -> IntMatrix:
    """The block-intersection matrix |R_i^lam  intersect  w(R_j^mu)|.

    Constant on double cosets S_lam w S_mu; row sums lam, column sums mu.
    """
    lam = check_composition(lam)
    mu = check_composition(mu)
    if sum(lam) != sum(mu) or sum(lam) != w.size:
        raise ValueError("size mismatch between compositions and permutation")
    lam_blocks = blocks(lam)
    mu_blocks = blocks(mu)
    out = []
    for rb in lam_blocks:
        rset = set(rb)
        row = []
        for cb in mu_blocks:
            row.append(sum(1 for j in cb if w(j) in rset))
        out.append(tuple(row))
    return tuple(out)


def row_sums(A: IntMatrix) -> Composition:
    return tuple(sum(row) for row in A)


def col_sums(A: IntMatrix) -> Composition:
    if not A:
        return ()
    return tuple(sum(row[j] for row in A) for j in range(len(A[0])))


def theta_inverse(A: IntMatrix) -> Permutation:
    """The minimal-length representative of the double coset encoded by A.

    For each column block (positions) taken in increasing order, assign the
    values of row block 1, then row block 2, ..., each in increasing order;
    each row block hands out its values column by column.
    """
    lam = row_sums(A)
    mu = col_sums(A)
    r = sum(lam)
    lam_blocks = blocks(lam)
    mu_blocks = blocks(mu)
    # next value to hand out from each row block
    next_val = [b.start for b in lam_blocks]
    im = [0] * r
    for j, cb in enumerate(mu_blocks):
        positions = list(cb)
        pos_idx = 0
        for i in range(len(A)):
            for _ in range(A[i][j]):
                im[positions[pos_idx] - 1] = next_val[i]
                next_val[i] += 1
                pos_idx += 1
    return Permutation(tuple(im))


def nu_of(A: IntMatrix) -> Composition:
    """Column-major flattening of A: (a_11, a_21, ..., a_12, a_22, ...).

    A composition of the total sum that refines the column sums.
    """
    if not A:
        return ()
    return tuple(A[i][j] for j in range(len(A[0])) for i in range(len(A)))


def matrices_with_margins(
    lam: Sequence[int], mu: Sequence[int]
) -> Iterator[IntMatrix]:
    """All nonnegative integer matrices with row sums lam and column sums mu."""
    lam = check_composition(lam)
    mu = check_composition(mu)
    if sum(lam) != sum(mu):
        return

    def rec(rows_left: tuple[int, ...], cols_left: tuple[int, ...]):
        if not rows_left:
            if all(c == 0 for c in cols_left):
                yield ()
            return
        target = rows_left[0]
        n = len(cols_left)

        def fill(j: int, remaining: int, row: tuple[int, ...]):
            if j == n:
                if remaining == 0:
                    yield row
                return
            for v in range(min(remaining, cols_left[j]) + 1):
                yield from fill(j + 1, remaining - v, row + (v,))

        for row in fill(0, target, ()):
            new_cols = tuple(c - v for c, v in zip(cols_left, row))
            for rest in rec(rows_left[1:], new_cols):
                yield (row,) + rest

    yield from rec(lam, mu)


def double_coset_reps(
    lam: Sequence[int], mu: Sequence[int]
) -> list[Permutation]:
    """Minimal-length representatives of S_lam \\ S_r / S_mu, via matrices."""
    reps = [theta_inverse(A) for A in matrices_with_margins(lam, mu)]
    reps.sort(key=lambda d: (d.length(), d.im))
    return reps


def matrices_sum(n: int, r: int) -> Iterator[IntMatrix]:
    """All n x n nonnegative integer matrices with entry sum r."""
    cells = n * n

    def rec(k: int, remaining: int, flat: tuple[int, ...]):
        if k == cells:
            if remaining == 0:
                yield flat
            return
        for v in range(remaining + 1):
            yield from rec(k + 1, remaining - v, flat + (v,))

    for flat in rec(0, r, ()):
        yield tuple(flat[i * n : (i + 1) * n] for i in range(n))


def coset_reps_within(
    mu: Sequence[int], nu: Sequence[int]
) -> list[Permutation]:
    """Minimal right-coset representatives of S_nu inside S_mu.

    Requires nu to refine mu (consecutive groups of nu parts sum to the mu
    parts).  Built blockwise and multiplied together; lengths add across
    blocks since supports are disjoint.
    """
    mu = check_composition(mu)
    nu = check_composition(nu)
    r = sum(mu)
    # split nu into groups matching mu
    groups: list[tuple[int, ...]] = []
    idx = 0
    for part in mu:
        grp: list[int] = []
        total = 0
        while total < part:
            if idx >= len(nu):
                raise ValueError(f"{nu} does not refine {mu}")
            grp.append(nu[idx])
            total += nu[idx]
            idx += 1
        if total != part:
            raise ValueError(f"{nu} does not refine {mu}")
        # absorb zero parts that follow, to keep alignment canonical
        while idx < len(nu) and nu[idx] == 0:
            grp.append(0)
            idx += 1
        groups.append(tuple(grp))
    while idx < len(nu) and nu[idx] == 0:
        idx += 1
    if idx != len(nu):
        raise ValueError(f"{nu} does not refine {mu}")

    per_block: list[list[Permutation]] = []
    offset = 0
    for part, grp in zip(mu, groups):
        local = coset_reps(grp)
        lifted = []
        for d in local:
            im = list(range(1, r + 1))
            for k, v in enumerate(d.im):
                im[offset + k] = offset + v
            lifted.append(Permutation(tuple(im)))
        per_block.append(lifted)
        offset += part
    out = []
    for combo in itertools.product(*per_block):
        prod = reduce(lambda a, b: a * b, combo, identity(r))
        out.append(prod)
    out.sort(key=lambda d: (d.length(), d.im))
    return out


# -- composition reindexing ------------------------------------------------


def ddot(lam: Sequence[int]) -> tuple[int, ...]:
    """Reindex an m-part composition of k as a k-tuple with sum < m.

    With p_t the partial sums of lam and b_i = #{t < m : p_t >= i} for
    i = 1..k, returns (b_1 - b_2, ..., b_{k-1} - b_k, b_k).  A bijection
    from m-part compositions of k onto k-tuples of naturals summing to at
    most m - 1; see ddot_inverse.
    """
    lam = check_composition(lam)
    m = len(lam)
    k = sum(lam)
    if k == 0:
        return ()
    sums = partial_sums(lam)[: m - 1]
    b = [sum(1 for p in sums if p >= i) for i in range(1, k + 1)]
    return tuple(b[i] - b[i + 1] for i in range(k - 1)) + (b[k - 1],)


def ddot_inverse(dd: Sequence[int], m: int) -> Composition:
    """Inverse of ddot: recover the m-part composition from the k-tuple."""
    dd = tuple(int(x) for x in dd)
    k = len(dd)
    if any(x < 0 for x in dd) or sum(dd) > m - 1:
        raise ValueError(f"{dd} is not a {k}-tuple with sum < {m}")
    # suffix sums rebuild b, then conjugate back to partial sums
    b = [sum(dd[i:]) for i in range(k)]
    p = [sum(1 for bi in b if bi >= m - t) for t in range(1, m)]
    lam = []
    prev = 0
    for pt in p:
        lam.append(pt - prev)
        prev = pt
    lam.append(k - prev)
    return tuple(lam)
