"""Named verification suites with timed, order-stable reports.

Each suite is a list of independent checks over a small parameter grid;
a check returns a boolean plus a witness (counts, offending inputs, or
sub-reports).  Guard violations surface as status "skipped(guard)" so a
too-large request degrades into an explicit skip instead of an open-ended
computation.  Reports are deterministic for a fixed seed: entries are
sorted by check id and the wall-clock field is informational only.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass
from typing import Callable, Sequence

from .affine import AffineAlgebra, coefficient_symmetry_check, epsilon_u
from .guards import GuardError, check_guard
from .hecke import (
    HeckeAlgebra,
    HeckeElement,
    from_left_form,
    tau,
    to_left_form,
)
from .permutations import compositions, young_subgroup
from .ring import RingElem, poincare_polynomial
from .schur import (
    SchurContext,
    b_element_affine,
    basis_element,
    identity_element,
    multiply_basis,
    phi_pair,
    verify_commutative,
    verify_hom_space_dims,
    verify_rank,
)
from .typeb import (
    verify_group_algebra_basis,
    verify_route_agreement,
    verify_shifted_coset_identity,
    verify_single_row_coset_basis,
    verify_worked_example,
)
from .wreath import colored_col_sums, colored_row_sums

SUITE_NAMES = (
    "pbw",
    "straighten",
    "basis",
    "rank",
    "commutative",
    "schur-mult",
    "typeb",
    "poincare",
    "epsilon",
    "affine-sym",
)


@dataclass
class SuiteParams:
    m: int = 2
    n: int = 2
    r: int = 2
    lam: tuple[int, ...] | None = None
    mu: tuple[int, ...] | None = None
    seed: int = 0
    trials: int = 3
    guard: int | None = None
    exact: bool = False

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "r": self.r,
            "lam": list(self.lam) if self.lam is not None else None,
            "mu": list(self.mu) if self.mu is not None else None,
            "seed": self.seed,
            "trials": self.trials,
            "guard": self.guard,
            "exact": self.exact,
        }


@dataclass
class CheckOutcome:
    check: str
    params: dict
    status: str  # "pass" | "fail" | "skipped(guard)"
    witness: object
    seconds: float

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "params": self.params,
            "status": self.status,
            "witness": self.witness,
            "seconds": round(self.seconds, 4),
        }


def _run_check(
    check_id: str, params: dict, fn: Callable[[], tuple[bool, object]]
) -> CheckOutcome:
    start = time.perf_counter()
    try:
        ok, witness = fn()
        status = "pass" if ok else "fail"
    except GuardError as exc:
        status, witness = "skipped(guard)", str(exc)
    return CheckOutcome(check_id, params, status, witness, time.perf_counter() - start)


# -- random elements -------------------------------------------------------


def _random_coeff(rng: random.Random, nvars: int) -> RingElem:
    c = RingElem.const(rng.randrange(-3, 4) or 1, nvars)
    return c * RingElem.q_power(rng.randrange(-1, 2), nvars)


def _random_hecke(
    alg: HeckeAlgebra, rng: random.Random, keys: Sequence, nterms: int = 3
) -> HeckeElement:
    chosen = rng.sample(list(keys), k=min(nterms, len(keys)))
    return alg.elem({key: _random_coeff(rng, alg.nvars) for key in chosen})


def _random_affine(alg: AffineAlgebra, rng: random.Random, nterms: int = 3):
    out = alg.zero()
    for _ in range(nterms):
        exps = tuple(rng.randrange(0, 3) for _ in range(alg.r))
        w_word = [rng.randrange(1, alg.r) for _ in range(2)] if alg.r > 1 else []
        elem = alg.x_monomial(exps)
        for i in w_word:
            elem = elem * alg.gen_T(i)
        out = out + elem.scale(_random_coeff(rng, alg.nvars))
    return out


# -- suites ----------------------------------------------------------------


def suite_pbw(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "r": p.r}
    out: list[CheckOutcome] = []
    alg = HeckeAlgebra(p.m, p.r)
    rng = random.Random(p.seed)

    def keys():
        return list(alg.pbw_basis(p.guard))

    def count():
        got = len(keys())
        want = (p.m**p.r) * math.factorial(p.r)
        return got == want, {"count": got, "expected": want}

    out.append(_run_check("pbw.count", base, count))

    def quadratic():
        q, one = alg.q, alg.one_c
        for i in range(1, p.r):
            t = alg.gen_T(i)
            if (t - alg.scalar(q)) * (t + alg.one()) != alg.zero():
                return False, {"i": i}
        return True, {"generators": p.r - 1}

    out.append(_run_check("pbw.quadratic", base, quadratic))

    def braid():
        for i in range(1, p.r - 1):
            a, b = alg.gen_T(i), alg.gen_T(i + 1)
            if a * b * a != b * a * b:
                return False, {"i": i}
        for i in range(1, p.r):
            for j in range(i + 2, p.r):
                a, b = alg.gen_T(i), alg.gen_T(j)
                if a * b != b * a:
                    return False, {"i": i, "j": j}
        return True, {}

    out.append(_run_check("pbw.braid", base, braid))

    def cyclotomic():
        prod = alg.one()
        for t in range(p.m):
            prod = prod * (alg.gen_L(1) - alg.scalar(alg.u_params[t]))
        return prod.is_zero(), {"degree": p.m}

    out.append(_run_check("pbw.cyclotomic", base, cyclotomic))

    def roundtrip():
        ks = keys()
        for t in range(max(p.trials, 3)):
            x = _random_hecke(alg, rng, ks)
            if from_left_form(to_left_form(x)) != x:
                return False, {"trial": t}
        return True, {"trials": max(p.trials, 3)}

    out.append(_run_check("pbw.roundtrip", base, roundtrip))

    def assoc():
        ks = keys()
        for t in range(max(p.trials, 3)):
            x = _random_hecke(alg, rng, ks)
            y = _random_hecke(alg, rng, ks)
            z = _random_hecke(alg, rng, ks)
            if (x * y) * z != x * (y * z):
                return False, {"trial": t}
        return True, {"trials": max(p.trials, 3)}

    out.append(_run_check("pbw.assoc", base, assoc))

    def anti():
        ks = keys()
        for t in range(max(p.trials, 3)):
            x = _random_hecke(alg, rng, ks)
            y = _random_hecke(alg, rng, ks)
            if tau(x * y) != tau(y) * tau(x):
                return False, {"trial": t}
        return True, {"trials": max(p.trials, 3)}

    out.append(_run_check("pbw.tau-anti", base, anti))
    return out


def suite_straighten(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "r": p.r}
    out: list[CheckOutcome] = []
    alg = HeckeAlgebra(p.m, p.r)
    rng = random.Random(p.seed)

    def closed_form():
        keys = list(alg.pbw_basis(p.guard))
        sample = keys if len(keys) <= 60 else rng.sample(keys, k=60)
        for key in sample:
            x = alg.elem({key: alg.one_c})
            for i in range(1, p.r):
                if x.lmul_gen_T(i) != alg.gen_T(i) * x:
                    return False, {"key": repr(key), "i": i}
        return True, {"keys": len(sample)}

    out.append(_run_check("straighten.closed-form", base, closed_form))

    def exchange():
        q = alg.q
        for i in range(1, p.r):
            lhs = alg.gen_T(i) * alg.gen_L(i) * alg.gen_T(i)
            if lhs != alg.gen_L(i + 1).scale(q):
                return False, {"i": i, "case": "TLT"}
            for j in range(1, p.r + 1):
                if j in (i, i + 1):
                    continue
                if alg.gen_L(j) * alg.gen_T(i) != alg.gen_T(i) * alg.gen_L(j):
                    return False, {"i": i, "j": j, "case": "commute"}
        return True, {}

    out.append(_run_check("straighten.exchange", base, exchange))

    def jm_commute():
        for t in range(max(p.trials, 3)):
            a = tuple(rng.randrange(0, p.m + 1) for _ in range(p.r))
            b = tuple(rng.randrange(0, p.m + 1) for _ in range(p.r))
            x, y = alg.jm_monomial(a), alg.jm_monomial(b)
            if x * y != y * x:
                return False, {"a": a, "b": b}
        return True, {"trials": max(p.trials, 3)}

    out.append(_run_check("straighten.jm-commute", base, jm_commute))
    return out


def suite_basis(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "n": p.n, "r": p.r}
    out: list[CheckOutcome] = []

    def counted():
        ctx = SchurContext(p.m, p.n, p.r)
        got = len(ctx.basis(p.guard))
        return got == ctx.rank(), {"count": got, "closed_form": ctx.rank()}

    out.append(_run_check("basis.count", base, counted))

    def eigen():
        ctx = SchurContext(p.m, p.n, p.r)
        ctx.basis(p.guard)
        from .schur import eigen_certificate

        for lam in ctx.weights():
            for mu in ctx.weights():
                if not eigen_certificate(ctx, lam, mu):
                    return False, {"lam": lam, "mu": mu}
        return True, {"blocks": len(ctx.weights()) ** 2}

    out.append(_run_check("basis.eigen", base, eigen))

    def dims():
        ctx = SchurContext(p.m, p.n, p.r)
        ctx.basis(p.guard)
        rep = verify_hom_space_dims(ctx, seed=p.seed)
        return rep["ok"], {"blocks": len(rep["blocks"])}

    out.append(_run_check("basis.hom-dims", base, dims))
    return out


def suite_rank(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "n": p.n, "r": p.r, "trials": p.trials, "exact": p.exact}

    def ranked():
        ctx = SchurContext(p.m, p.n, p.r)
        ctx.basis(p.guard)
        rep = verify_rank(ctx, trials=p.trials, seed=p.seed, exact=p.exact)
        return rep["ok"], {"expected": rep["expected"], "certified": rep["certified"]}

    return [_run_check("rank.blocks", base, ranked)]


def suite_commutative(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "r": p.r}

    def commuting():
        ctx = SchurContext(p.m, 1, p.r)
        ctx.basis(p.guard)
        rep = verify_commutative(ctx)
        return rep["ok"], {"size": rep["size"]}

    return [_run_check("commutative.pairs", base, commuting)]


def suite_schur_mult(p: SuiteParams) -> list[CheckOutcome]:
    base = {"m": p.m, "n": p.n, "r": p.r}
    out: list[CheckOutcome] = []
    rng = random.Random(p.seed)

    def make_ctx() -> SchurContext:
        ctx = SchurContext(p.m, p.n, p.r)
        ctx.basis(p.guard)
        return ctx

    def unit():
        ctx = make_ctx()
        one = identity_element(ctx)
        basis = ctx.basis()
        sample = basis if len(basis) <= 40 else rng.sample(basis, k=40)
        for A in sample:
            phi = basis_element(ctx, A)
            if one * phi != phi or phi * one != phi:
                return False, {"A": A}
        return True, {"sampled": len(sample)}

    out.append(_run_check("schur-mult.unit", base, unit))

    def reconstruct():
        ctx = make_ctx()
        basis = ctx.basis()
        pairs = [
            (A, B)
            for A in basis
            for B in basis
            if colored_col_sums(A) == colored_row_sums(B)
        ]
        sample = pairs if len(pairs) <= 30 else rng.sample(pairs, k=30)
        for A, B in sample:
            prod = ctx.b_element(A) * ctx.tail(B)
            coeffs = multiply_basis(ctx, A, B)
            total = ctx.hecke.zero()
            for C, c in coeffs.items():
                total = total + ctx.b_element(C).scale(c)
            if total != prod:
                return False, {"A": A, "B": B}
        return True, {"sampled": len(sample)}

    out.append(_run_check("schur-mult.reconstruct", base, reconstruct))

    def assoc():
        ctx = make_ctx()
        basis = ctx.basis()
        by_ro: dict[tuple, list] = {}
        for B in basis:
            by_ro.setdefault(colored_row_sums(B), []).append(B)
        done = 0
        for _ in range(200):
            if done >= max(p.trials, 5):
                break
            A = rng.choice(basis)
            bs = by_ro.get(colored_col_sums(A))
            if not bs:
                continue
            B = rng.choice(bs)
            cs = by_ro.get(colored_col_sums(B))
            if not cs:
                continue
            C = rng.choice(cs)
            fa, fb, fc = (basis_element(ctx, M) for M in (A, B, C))
            if (fa * fb) * fc != fa * (fb * fc):
                return False, {"A": A, "B": B, "C": C}
            done += 1
        return True, {"triples": done}

    out.append(_run_check("schur-mult.assoc", base, assoc))
    return out


def suite_typeb(p: SuiteParams) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    base = {"r": p.r, "n": p.n}

    def coset_basis():
        rep = verify_single_row_coset_basis(p.r)
        return rep["ok"], {"cases": len(rep["cases"])}

    out.append(_run_check("typeb.coset-basis", base, coset_basis))

    def shifted():
        checked = 0
        for total in range(2, min(p.r, 4) + 1):
            for b in range(1, total + 1):
                rep = verify_shifted_coset_identity(total - b, b, p.r)
                if not rep["ok"]:
                    return False, rep
                checked += len(rep["cases"])
        return True, {"cases": checked}

    out.append(_run_check("typeb.shifted", base, shifted))

    def example():
        rep = verify_worked_example()
        return rep["ok"], rep["checks"]

    out.append(_run_check("typeb.example", base, example))

    def routes():
        count = math.comb(2 * p.n * p.n + p.r - 1, p.r)
        check_guard(count, p.guard, "two-color route comparison")
        sample = None if count <= 150 else 60
        rep = verify_route_agreement(p.n, p.r, sample=sample, seed=p.seed)
        return rep["ok"], {"checked": rep["checked"]}

    out.append(_run_check("typeb.routes", base, routes))

    def group_algebra():
        count = math.comb(2 * p.n * p.n + p.r - 1, p.r)
        check_guard(count, p.guard, "group algebra degeneration")
        rep = verify_group_algebra_basis(p.n, p.r)
        return rep["ok"], {"checked": rep["checked"]}

    out.append(_run_check("typeb.group-algebra", base, group_algebra))
    return out


def suite_poincare(p: SuiteParams) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    base = {"m": p.m, "r": p.r}

    def length_sum():
        comps = list(compositions(p.r, min(p.r, 3)))
        for lam in comps:
            total = RingElem.zero(0)
            for w in young_subgroup(lam):
                total = total + RingElem.q_power(w.length(), 0)
            if total != poincare_polynomial(lam, 0):
                return False, {"lam": lam}
        return True, {"compositions": len(comps)}

    out.append(_run_check("poincare.length-sum", base, length_sum))

    def morita():
        ctx = SchurContext(p.m, p.r, p.r)
        ctx.basis(p.guard)
        omega = (1,) * p.r
        checked = 0
        for lam in ctx.weights():
            left = phi_pair(ctx, lam, omega) * phi_pair(ctx, omega, lam)
            scaled = phi_pair(ctx, lam, lam).scale(
                poincare_polynomial(lam, ctx.m)
            )
            if left != scaled:
                return False, {"lam": lam}
            checked += 1
        return True, {"weights": checked}

    out.append(_run_check("poincare.morita", base, morita))
    return out


def suite_epsilon(p: SuiteParams) -> list[CheckOutcome]:
    out: list[CheckOutcome] = []
    base = {"m": p.m, "r": p.r}
    target = HeckeAlgebra(p.m, p.r)
    aff = AffineAlgebra(p.r, nvars=p.m)
    rng = random.Random(p.seed)

    def multiplicative():
        trials = max(p.trials, 5)
        for t in range(trials):
            x = _random_affine(aff, rng)
            y = _random_affine(aff, rng)
            if epsilon_u(x * y, target) != epsilon_u(x, target) * epsilon_u(y, target):
                return False, {"trial": t}
        return True, {"trials": trials}

    out.append(_run_check("epsilon.multiplicative", base, multiplicative))

    def basis_map():
        ctx = SchurContext(p.m, p.n, p.r)
        basis = ctx.basis(p.guard)
        sample = basis if len(basis) <= 150 else rng.sample(basis, k=60)
        for A in sample:
            lifted = b_element_affine(aff, A)
            if epsilon_u(lifted, ctx.hecke) != ctx.b_element(A):
                return False, {"A": A}
        return True, {"checked": len(sample)}

    out.append(_run_check("epsilon.basis-map", {**base, "n": p.n}, basis_map))
    return out


def suite_affine_sym(p: SuiteParams) -> list[CheckOutcome]:
    base = {"r": p.r}

    def symmetrizer():
        alg = AffineAlgebra(p.r)
        x_full = alg.x_lambda((p.r,))
        from .affine import affine_sigma

        checked = 0
        for exps in itertools.product(range(2), repeat=p.r):
            if sum(exps) > 2:
                continue
            z = x_full * affine_sigma(alg, (p.r,), [exps])
            if not coefficient_symmetry_check(z):
                return False, {"exps": exps}
            checked += 1
        return True, {"elements": checked}

    return [_run_check("affine-sym.symmetrizer", base, symmetrizer)]


SUITES: dict[str, Callable[[SuiteParams], list[CheckOutcome]]] = {
    "pbw": suite_pbw,
    "straighten": suite_straighten,
    "basis": suite_basis,
    "rank": suite_rank,
    "commutative": suite_commutative,
    "schur-mult": suite_schur_mult,
    "typeb": suite_typeb,
    "poincare": suite_poincare,
    "epsilon": suite_epsilon,
    "affine-sym": suite_affine_sym,
}


def run_suite(name: str, params: SuiteParams) -> dict:
    """Execute one named suite (or 'all') and assemble a stable report."""
    if name == "all":
        suite_fns = [SUITES[n] for n in SUITE_NAMES]
    elif name in SUITES:
        suite_fns = [SUITES[name]]
    else:
        raise ValueError(
            f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)} or all"
        )
    start = time.perf_counter()
    checks: list[CheckOutcome] = []
    for fn in suite_fns:
        checks.extend(fn(params))
    checks.sort(key=lambda c: c.check)
    status = "pass" if all(c.status != "fail" for c in checks) else "fail"
    return {
        "suite": name,
        "params": params.to_dict(),
        "status": status,
        "checks": [c.to_dict() for c in checks],
        "seconds": round(time.perf_counter() - start, 4),
    }


def exit_code_for(report: dict) -> int:
    return 0 if report["status"] == "pass" else 1
