"""Explicit resolutions: Ziegler's presentation of Omega^1 for generic
arrangements, and the divided-power complexes resolving exterior powers of a
module of projective dimension one.

The differentials of the exterior-power complexes are not built; they are
checked through graded Euler characteristics, Betti tables and wedge images.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Sequence

from .arrangement import Arrangement, is_generic, make_arrangement
from .errors import GenericityViolated, HypothesisFailed
from .exact import MPoly, RatMatrix, dim_S, monomial_index, monomials
from .linalg import EXACT
from .logmodules import (
    FORM,
    BettiTable,
    ModuleSelector,
    betti_probe,
    graded_dim,
    local_freeness_test,
    wedge_compare,
)


# ---------------------------------------------------------------------------
# Ziegler


@dataclass
class ZieglerData:
    arrangement: Arrangement  # in the new coordinates; the first n+1 forms are x_0..x_n
    change: list[list[Fraction]]  # rows: the first n+1 original forms, i.e. y = change * x
    coefficients: list[list[Fraction]]  # a_{i,j}: l_i = sum_j a_{i,j} y_j
    tau: list[list[MPoly]]  # d x (d-n-1)
    source_twists: list[int]
    target_twists: list[int]

    @property
    def d(self) -> int:
        return len(self.tau)

    def to_json(self) -> dict:
        return {
            "change_of_coordinates": [[str(x) for x in r] for r in self.change],
            "coefficients": [[str(x) for x in r] for r in self.coefficients],
            "source_twists": self.source_twists,
            "target_twists": self.target_twists,
            "tau": [[repr(e) for e in row] for row in self.tau],
        }


def _inverse(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    k = len(rows)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(k)] for i, r in enumerate(rows)]
    red, piv = RatMatrix(aug).rref()
    if piv[:k] != list(range(k)):
        raise ValueError("singular matrix")
    return [r[k:] for r in red[:k]]


def ziegler_matrix(A: Arrangement) -> ZieglerData:
    N = A.n_vars
    ok, witness = is_generic(N, A.forms)
    if not ok:
        raise GenericityViolated(
            f"genericity violated: forms {list(witness)} are dependent", witness=list(witness)
        )
    if A.d < N:
        raise GenericityViolated("genericity violated: fewer than n+1 hyperplanes")
    change = [[Fraction(x) for x in A.forms[i]] for i in range(N)]
    inv = _inverse(change)
    # a form alpha(x) = alpha . x = alpha . inv . y
    coeffs = []
    for f in A.forms[N:]:
        coeffs.append([sum(Fraction(f[k]) * inv[k][j] for k in range(N)) for j in range(N)])
    new_forms = [[int(i == j) for j in range(N)] for i in range(N)]
    for row in coeffs:
        den = 1
        for x in row:
            den = den * x.denominator // _gcd(den, x.denominator)
        new_forms.append([int(x * den) for x in row])
    B = make_arrangement(N, new_forms, (A.name or "arrangement") + ":ziegler")
    s = A.d - N
    y = [MPoly.var(j, N) for j in range(N)]
    tau: list[list[MPoly]] = []
    for j in range(N):
        tau.append([y[j].scale(coeffs[i][j]) for i in range(s)])
    for i in range(s):
        l_i = MPoly.linear(coeffs[i])
        tau.append([(-l_i if k == i else MPoly.zero(N)) for k in range(s)])
    return ZieglerData(B, change, coeffs, tau, [0] * s, [1] * A.d)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


@dataclass
class ZieglerCheck:
    window: tuple[int, int]
    rows: list[dict]
    failures: list[dict]
    composition_zero: bool

    @property
    def passed(self) -> bool:
        return not self.failures and self.composition_zero

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "window": list(self.window),
            "degrees": self.rows,
            "failures": self.failures,
            "composition_zero": self.composition_zero,
            "passed": self.passed,
        }


def _tau_rank(z: ZieglerData, m: int) -> int:
    """Rank of tau: S_m^(d-n-1) -> S_(m+1)^d, degreewise."""
    N = z.arrangement.n_vars
    src = monomials(N, m)
    idx = monomial_index(N, m + 1)
    size = len(idx)
    rows = []
    for col in range(len(z.source_twists)):
        for mu in src:
            row = {}
            for i, entry in enumerate(z.tau):
                for e, c in entry[col].terms.items():
                    row[i * size + idx[tuple(a + b for a, b in zip(e, mu))]] = c
            rows.append(row)
    return EXACT.rank(EXACT.sparse(rows, z.d * size))


def _composition_zero(z: ZieglerData) -> bool:
    """Each column of tau maps to zero under e_i -> d(alpha_i) / alpha_i."""
    B = z.arrangement
    N = B.n_vars
    for col in range(len(z.source_twists)):
        total = [Fraction(0)] * N
        for i, entry in enumerate(z.tau):
            poly = entry[col]
            if poly.is_zero():
                continue
            alpha = MPoly.linear(B.forms[i])
            q = poly.divide_exact(alpha)  # degree 0
            c = q.terms.get((0,) * N, Fraction(0))
            for j in range(N):
                total[j] += c * B.forms[i][j]
        if any(total):
            return False
    return True


def ziegler_check(A: Arrangement, window: tuple[int, int] = (-1, 4)) -> ZieglerCheck:
    z = ziegler_matrix(A)
    N = A.n_vars
    s = len(z.source_twists)
    sel = ModuleSelector(A, FORM, 1)
    rows, failures = [], []
    for m in range(window[0], window[1] + 1):
        expected = A.d * dim_S(N, m + 1) - s * dim_S(N, m)
        actual = graded_dim(sel, m)
        rank = _tau_rank(z, m) if s else 0
        injective = rank == s * dim_S(N, m)
        rows.append({"m": m, "dim": actual, "expected": expected, "injective": injective})
        if actual != expected or not injective:
            failures.append(rows[-1])
    return ZieglerCheck(tuple(window), rows, failures, _composition_zero(z))


# ---------------------------------------------------------------------------
# divided-power complexes


@dataclass
class LebeltTerm:
    index: int  # homological position i: D_i F1 (x) Lambda^(p-i) F0
    twists: list[int]  # a for each summand S(a)

    @property
    def rank(self) -> int:
        return len(self.twists)

    def dim(self, n_vars: int, m: int) -> int:
        return sum(dim_S(n_vars, m + a) for a in self.twists)


@dataclass
class LebeltTerms:
    p: int
    terms: list[LebeltTerm]

    def betti(self) -> dict[tuple[int, int], int]:
        """Predicted Betti numbers in the (i, j) convention of BettiTable: S(-j)."""
        out: dict[tuple[int, int], int] = {}
        for t in self.terms:
            for a in t.twists:
                out[(t.index, -a)] = out.get((t.index, -a), 0) + 1
        return out

    def euler_dim(self, n_vars: int, m: int) -> int:
        return sum((-1) ** t.index * t.dim(n_vars, m) for t in self.terms)

    def to_json(self) -> dict:
        return {"p": self.p, "terms": [{"index": t.index, "rank": t.rank, "twists": t.twists} for t in self.terms]}


def lebelt_terms(F0_twists: Sequence[int], F1_twists: Sequence[int], p: int) -> LebeltTerms:
    if p < 1:
        raise ValueError("p must be at least 1")
    F0, F1 = list(F0_twists), list(F1_twists)
    terms = []
    for i in range(p + 1):
        tw = []
        for ms in combinations_with_replacement(range(len(F1)), i):
            a = sum(F1[k] for k in ms)
            for sub in combinations(range(len(F0)), p - i):
                tw.append(a + sum(F0[k] for k in sub))
        terms.append(LebeltTerm(i, sorted(tw, reverse=True)))
    return LebeltTerms(p, terms)


@dataclass
class LebeltReport:
    side: str
    p: int
    window: tuple[int, int]
    terms: LebeltTerms
    euler_ok: bool
    betti_ok: bool
    pdim: int
    top_pdim: int
    wedge_ok: bool
    failures: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.euler_ok and self.betti_ok and self.pdim == self.p and self.top_pdim == 0 and self.wedge_ok

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "side": self.side,
            "p": self.p,
            "window": list(self.window),
            "terms": self.terms.to_json(),
            "euler_ok": self.euler_ok,
            "betti_ok": self.betti_ok,
            "pdim": self.pdim,
            "top_pdim": self.top_pdim,
            "wedge_ok": self.wedge_ok,
            "failures": self.failures,
            "passed": self.passed,
        }


def _cutoffs_for(twists_by_index: Sequence[Sequence[int]], n_vars: int) -> tuple[int, int]:
    gen = max(-a for a in twists_by_index[0])
    top = max(-a for tw in twists_by_index for a in tw)
    return gen, top + n_vars + 1


def one_step_resolution(A: Arrangement, side: str = FORM) -> BettiTable:
    """Betti table of the p = 1 module, which must have projective dimension one."""
    sel = ModuleSelector(A, side, 1)
    N = A.n_vars
    if side == FORM:
        gen, syz = 0, N + 1
    else:
        gen, syz = A.d, A.d + N + 1
    b = betti_probe(sel, gen, syz, max_index=2)
    return b


def lebelt_check(A: Arrangement, p: int, window: tuple[int, int] | None = None, side: str = FORM) -> LebeltReport:
    n = A.n_vars - 1
    if not 1 <= p <= n - 1:
        raise HypothesisFailed(f"hypothesis failed: need 1 <= p <= n-1 = {n - 1}")
    lf = local_freeness_test(A)
    if not lf.locally_free:
        raise HypothesisFailed("hypothesis failed: not locally free", lf.witness)
    b1 = one_step_resolution(A, side)
    if b1.pdim != 1 or not b1.complete:
        raise HypothesisFailed(
            f"hypothesis failed: projective dimension of the p = 1 module is {b1.pdim}, not 1",
            b1.to_json(),
        )
    terms = lebelt_terms(b1.twists(0), b1.twists(1), p)
    N = A.n_vars
    if window is None:
        lo = -max(terms.terms[0].twists)
        window = (lo - 1, lo + 4)
    sel = ModuleSelector(A, side, p)
    failures = []
    euler_ok = True
    for m in range(window[0], window[1] + 1):
        lhs, rhs = terms.euler_dim(N, m), graded_dim(sel, m)
        if lhs != rhs:
            euler_ok = False
            failures.append({"check": "euler", "m": m, "complex": lhs, "module": rhs})
    gen, syz = _cutoffs_for([t.twists for t in terms.terms], N)
    bp = betti_probe(sel, gen, syz, max_index=p + 1)
    betti_ok = bp.complete and bp.entries == terms.betti()
    if not betti_ok:
        failures.append({"check": "betti", "probe": bp.to_json(), "predicted": sorted(terms.betti().items())})
    top_sel = ModuleSelector(A, side, N)
    top_deg = -A.d if side == FORM else A.d
    top = betti_probe(top_sel, top_deg, top_deg + N + 1, max_index=1)
    wedge_ok = True
    for m in range(window[0], window[1] + 1):
        image, full = wedge_compare(A, p, m, side)
        if image != full:
            wedge_ok = False
            failures.append({"check": "wedge", "m": m, "image": image, "module": full})
    return LebeltReport(side, p, tuple(window), terms, euler_ok, betti_ok, bp.pdim, top.pdim, wedge_ok, failures)
