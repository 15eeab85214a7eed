"""Chern polynomials on P^n, the R(E; t, X) limit, and Hilbert-polynomial bookkeeping.

All Chern arithmetic lives in Q[t]/(t^(n+1)).  Series in X are expanded at
X = 1 through u = X - 1, with truncated polynomials in t as coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial
from typing import Sequence

from .arrangement import Arrangement, characteristic_poly, poincare_poly
from .errors import HypothesisFailed, LimitDoesNotExist, ResolutionIncomplete
from .exact import (
    ONE_MINUS_X,
    HilbertSeries,
    LaurentPoly,
    TruncPoly,
    USeries,
    binom,
    expand_at_one,
)
from .linalg import EXACT, Field
from .logmodules import (
    DER,
    BettiTable,
    ModuleSelector,
    betti_probe,
    hilbert_series,
    local_freeness_test,
    stable_hilbert_series,
)

CHERN = "chern"
POINCARE = "poincare-class"


@dataclass(frozen=True)
class ChernPoly:
    """A class in Z[t]/(t^(n+1)) on P^n."""

    n: int
    poly: TruncPoly
    tag: str = CHERN

    def __post_init__(self):
        if self.poly.modulus != self.n + 1:
            raise ValueError("modulus must be n + 1")

    @classmethod
    def from_coeffs(cls, n: int, coeffs: Sequence, tag: str = CHERN) -> "ChernPoly":
        return cls(n, TruncPoly(n + 1, coeffs), tag)

    @property
    def coeffs(self) -> list:
        c = self.poly.coeffs
        return [int(a) if a.denominator == 1 else a for a in c]

    def c(self, i: int) -> Fraction:
        return self.poly.coeffs[i] if 0 <= i <= self.n else Fraction(0)

    def __mul__(self, other: "ChernPoly") -> "ChernPoly":
        return ChernPoly(self.n, self.poly * other.poly, self.tag)

    def __eq__(self, other):
        if isinstance(other, ChernPoly):
            return self.n == other.n and self.poly == other.poly
        if isinstance(other, (list, tuple)):
            return self.poly == TruncPoly(self.n + 1, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self.poly))

    def to_json(self) -> list:
        return [str(a) if isinstance(a, Fraction) else a for a in self.coeffs]

    def __repr__(self):
        return f"ChernPoly(n={self.n}, {self.poly})"


def chern_split(twists: Sequence[int], n: int) -> ChernPoly:
    out = TruncPoly.one(n + 1)
    for a in twists:
        out = out * TruncPoly(n + 1, [1, a])
    return ChernPoly(n, out)


def chern_from_betti(b: BettiTable, n: int) -> ChernPoly:
    """Alternating Whitney product over a finite resolution by sums of O(-j)."""
    if not b.complete:
        raise ResolutionIncomplete("resolution incomplete")
    out = TruncPoly.one(n + 1)
    for (i, j), mult in sorted(b.entries.items()):
        out = out * TruncPoly(n + 1, [1, -j]) ** (mult if i % 2 == 0 else -mult)
    return ChernPoly(n, out)


def dual_chern(c: ChernPoly) -> ChernPoly:
    return ChernPoly(c.n, c.poly.substitute_neg(), c.tag)


def poincare_class(A: Arrangement) -> ChernPoly:
    n = A.n_vars - 1
    return ChernPoly.from_coeffs(n, poincare_poly(A), POINCARE)


# ---------------------------------------------------------------------------
# R(E; t, X)


@dataclass
class RInput:
    """Hilbert series of H^0_* of the exterior powers 0..r of a rank-r bundle on P^n."""

    r: int
    n: int
    series: list[HilbertSeries]

    def __post_init__(self):
        if len(self.series) != self.r + 1:
            raise ValueError("need one series per exterior power 0..r")
        for h in self.series:
            if h.denom_power != self.n + 1:
                raise ValueError("series must have denominator (1-X)^(n+1)")

    @classmethod
    def split(cls, twists: Sequence[int], n: int) -> "RInput":
        """Series of the split bundle (+) O(a_i): exterior power i is (+)_{|I|=i} S(sum a_I)."""
        r = len(twists)
        series = []
        for i in range(r + 1):
            num: dict[int, int] = {}
            for I in combinations(range(r), i):
                e = -sum(twists[k] for k in I)
                num[e] = num.get(e, 0) + 1
            series.append(HilbertSeries(LaurentPoly(num), n + 1))
        return cls(r, n, series)


def assemble_R(inp: RInput, sign_of_t: int = 1, max_order: int = 1) -> USeries:
    """R(E; s*t, X) expanded in u = X - 1 through u^max_order, s = sign_of_t."""
    if sign_of_t not in (1, -1):
        raise ValueError("sign_of_t must be +1 or -1")
    r, n = inp.r, inp.n
    mod = n + 1
    total = USeries(mod, max_order, {})
    for j in range(r + 1):
        tp = r - j
        if tp > n:
            continue
        combo = LaurentPoly({})
        for i in range(j, r + 1):
            combo = combo + inp.series[i].numerator * LaurentPoly({0: (-1) ** (i - j) * comb(i, j)})
        if combo.is_zero():
            continue
        # combo / (1-X)^(n+1) * u^j * (-u)^(n+1-r) * (-1)^r (s t)^(r-j)
        s = j + n + 1 - r
        cap = max(max_order - s, 0)
        part = expand_at_one(combo, n + 1, mod, cap).shift(s).truncate(max_order)
        coef = (-1) ** ((n + 1) % 2) * sign_of_t ** tp
        total = total + part.scale(TruncPoly.t_power(mod, tp, coef))
    return total


def limit_at_one(rs: USeries) -> ChernPoly:
    for k, c in rs.negative_part().items():
        tp = next(i for i, a in enumerate(c.coeffs) if a)
        raise LimitDoesNotExist(k, tp, c.coeffs[tp])
    return ChernPoly(rs.modulus - 1, rs.coefficient(0))


# ---------------------------------------------------------------------------
# Solomon-Terao


def default_series_cutoff(A: Arrangement) -> int:
    n = A.n_vars - 1
    return A.d + 2 * n + 4


def der_series(A: Arrangement, cutoff: int | None = None, field: Field = EXACT) -> list[HilbertSeries]:
    """Series of D^0..D^(n+1): at a fixed cutoff, or at the first stable one below the default."""
    sels = [ModuleSelector(A, DER, p) for p in range(A.n_vars + 1)]
    if cutoff is None:
        top = default_series_cutoff(A)
        return [stable_hilbert_series(s, top, field) for s in sels]
    return [hilbert_series(s, cutoff, field) for s in sels]


def series_cutoff(series: Sequence[HilbertSeries]) -> int | None:
    cuts = [h.cutoff for h in series if h.cutoff is not None]
    return max(cuts) if cuts else None


def solomon_terao_from_series(series: Sequence[HilbertSeries], n: int) -> list[int]:
    """(-1)^(n+1) lim_{X->1} sum_p P(D^p; X) (t(X-1) - 1)^p, coefficients lowest first."""
    mod = n + 2  # exact: the result has degree <= n+1
    total = USeries(mod, 0, {})
    for p, h in enumerate(series):
        for j in range(p + 1):
            if j >= mod:
                continue
            # multiplying by u^j, j >= 0, never needs source orders above 0
            part = expand_at_one(h.numerator, h.denom_power, mod, 0).shift(j).truncate(0)
            total = total + part.scale(TruncPoly.t_power(mod, j, (-1) ** (p - j) * comb(p, j)))
    lim = limit_at_one(total)
    sign = (-1) ** (n + 1)
    return [int(sign * a) for a in lim.poly.coeffs]


def solomon_terao(A: Arrangement, cutoff: int | None = None, field: Field = EXACT) -> list[int]:
    """Characteristic polynomial of A from the Hilbert series of all D^p."""
    n = A.n_vars - 1
    chi = solomon_terao_from_series(der_series(A, cutoff, field), n)
    # cross-check pi(t) = (-t)^(n+1) chi(-1/t): coefficient k of pi is (-1)^k chi_{n+1-k}
    pi = [(-1) ** k * chi[n + 1 - k] for k in range(n + 2)]
    if pi[0] != 1 or sum(pi[k] * (-1) ** k for k in range(n + 2)) != 0:
        raise ArithmeticError(f"Solomon-Terao output fails the Poincare cross-check: {chi}")
    return chi


# ---------------------------------------------------------------------------
# the main theorem


@dataclass
class MainTheoremReport:
    strategy: str
    pi: list[int]
    pi_bar: ChernPoly
    c_omega: ChernPoly
    c_der: ChernPoly
    c_omega0: ChernPoly
    equal: bool
    cor53: bool
    cutoffs: dict
    probabilistic: bool = False
    betti: BettiTable | None = None

    @property
    def verified(self) -> bool:
        return self.equal and self.cor53

    def to_json(self) -> dict:
        out = {
            "strategy": self.strategy,
            "pi": self.pi,
            "pi_bar": self.pi_bar.to_json(),
            "c_omega1": self.c_omega.to_json(),
            "c_der1": self.c_der.to_json(),
            "c_omega1_0": self.c_omega0.to_json(),
            "equal": self.equal,
            "cor53": self.cor53,
            "cutoffs": self.cutoffs,
            "probabilistic": self.probabilistic,
        }
        if self.betti is not None:
            out["betti"] = self.betti.to_json()
        return out


def poly_mul(a: Sequence, b: Sequence) -> list:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def omega_chern_by_limit(A: Arrangement, cutoff: int | None = None, field: Field = EXACT) -> tuple[ChernPoly, int]:
    """c_t of the sheaf of log 1-forms as lim R(D^1-sheaf; -t, X), with the cutoff used."""
    n = A.n_vars - 1
    series = der_series(A, cutoff, field)
    return limit_at_one(assemble_R(RInput(n + 1, n, series), -1)), series_cutoff(series)


def verify_main_theorem(
    A: Arrangement,
    strategy: str = "betti",
    cutoff: int | None = None,
    gen_cutoff: int | None = None,
    syz_cutoff: int | None = None,
    field: Field = EXACT,
    check_hypothesis: bool = True,
) -> MainTheoremReport:
    """Compare the Poincare class with c_t of the sheaf of logarithmic 1-forms."""
    n = A.n_vars - 1
    if check_hypothesis:
        lf = local_freeness_test(A)
        if not lf.locally_free:
            raise HypothesisFailed("hypothesis failed: not locally free", lf.witness)
    one_plus_t = TruncPoly(n + 1, [1, 1])
    betti = None
    if strategy == "limit":
        c_omega, c = omega_chern_by_limit(A, cutoff, field)
        c_der = dual_chern(c_omega)
        cutoffs = {"series": c}
    elif strategy == "betti":
        g = A.d if gen_cutoff is None else gen_cutoff
        s = A.d + n + 2 if syz_cutoff is None else syz_cutoff
        betti = betti_probe(ModuleSelector(A, DER, 1, euler_complement=True), g, s, field=field)
        c_der0 = chern_from_betti(betti, n)
        c_der = c_der0 * ChernPoly.from_coeffs(n, [1, -1])  # Euler summand O(-1)
        c_omega = dual_chern(c_der)
        cutoffs = {"generators": g, "syzygies": s}
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    pi = poincare_poly(A)
    pi_bar = ChernPoly.from_coeffs(n, pi, POINCARE)
    c_omega0 = ChernPoly(n, c_omega.poly * (one_plus_t ** -1))
    full = poly_mul([1, 1], list(c_omega0.poly.coeffs))
    cor53 = [Fraction(x) for x in full] == [Fraction(x) for x in pi]
    return MainTheoremReport(
        strategy, list(pi), pi_bar, c_omega, c_der, c_omega0,
        pi_bar.poly == c_omega.poly, cor53, cutoffs, field.probabilistic, betti,
    )


# ---------------------------------------------------------------------------
# Hilbert polynomials


class HilbertPolynomial:
    """Polynomial in m with rational coefficients, lowest degree first."""

    def __init__(self, coeffs: Sequence, threshold: int | None = None):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = c
        self.threshold = threshold

    def __call__(self, m) -> Fraction:
        total = Fraction(0)
        for a in reversed(self.coeffs):
            total = total * m + a
        return total

    def __add__(self, other):
        k = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + [Fraction(0)] * (k - len(self.coeffs))
        b = other.coeffs + [Fraction(0)] * (k - len(other.coeffs))
        return HilbertPolynomial([x + y for x, y in zip(a, b)])

    def scale(self, c) -> "HilbertPolynomial":
        return HilbertPolynomial([a * c for a in self.coeffs], self.threshold)

    def compose_linear(self, a, b=0) -> "HilbertPolynomial":
        """m -> a*m + b."""
        out = HilbertPolynomial([])
        power = HilbertPolynomial([1])
        lin = HilbertPolynomial([b, a])
        for c in self.coeffs:
            out = out + power.scale(c)
            power = power * lin
        return out

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return HilbertPolynomial([])
        return HilbertPolynomial(poly_mul(self.coeffs, other.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_integer_valued(self) -> bool:
        return all(self(m).denominator == 1 for m in range(len(self.coeffs) + 1))

    def __eq__(self, other):
        if isinstance(other, HilbertPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self.coeffs))

    def to_json(self) -> list[str]:
        return [str(a) for a in self.coeffs]

    def __repr__(self):
        return f"HilbertPolynomial({[str(a) for a in self.coeffs]})"


def binomial_poly(l: int, shift: int = 0) -> HilbertPolynomial:
    """C(m + shift + l, l) as a polynomial in m."""
    out = HilbertPolynomial([1])
    for k in range(1, l + 1):
        out = out * HilbertPolynomial([shift + k, 1])
    return out.scale(Fraction(1, factorial(l)))


def hilbert_poly_from_series(h: HilbertSeries) -> HilbertPolynomial:
    """T(m) = sum_l (-1)^(n-l) e_(n-l) C(m+l, l), e_k the Taylor coefficients of the numerator at 1."""
    n = h.denom_power - 1
    if n < 0:
        return HilbertPolynomial([], None)
    e = h.numerator.substitute_one_plus(n)
    out = HilbertPolynomial([])
    for l in range(n + 1):
        out = out + binomial_poly(l).scale((-1) ** (n - l) * e[n - l])
    top = h.numerator.max_exp()
    out.threshold = (top - n) if top is not None else None
    return out


def chi_twist_poly_p3_rank3(c1: int, c2: int, c3: int) -> HilbertPolynomial:
    """chi(E(m)) for a rank-3 bundle on P^3 by Riemann-Roch.

    The constant term carries c1^3/6.  A printed variant with c1^3/3 cannot be
    right: for O(a)^3 it disagrees with 3*C(a+3, 3), and for (-14, 66, -104)
    it does not give the constant -6 of the corresponding Hilbert polynomial.
    """
    c1, c2, c3 = Fraction(c1), Fraction(c2), Fraction(c3)
    const = 3 + Fraction(11, 6) * c1 + c1 ** 2 - 2 * c2 + c1 ** 3 / 6 - c1 * c2 / 2 + c3 / 2
    lin = Fraction(11, 2) + 2 * c1 + c1 ** 2 / 2 - c2
    quad = 3 + c1 / 2
    return HilbertPolynomial([const, lin, quad, Fraction(1, 2)])


# ---------------------------------------------------------------------------
# split-bundle identities


def _exterior_twists(twists: Sequence[int], i: int) -> list[int]:
    return [sum(s) for s in combinations(twists, i)]


def chi_line(b: int, n: int) -> int:
    """chi(O(b)) on P^n."""
    return int(binom(b + n, n))


def split_hilbert_poly(twists: Sequence[int], n: int) -> HilbertPolynomial:
    out = HilbertPolynomial([])
    for b in twists:
        out = out + binomial_poly(n, b)
    return out


@dataclass
class TopChernReport:
    twists: list[int]
    n: int
    top_identity: bool | None
    top_lhs: int | None
    top_rhs: int | None
    poly_identity: bool | None

    @property
    def passed(self) -> bool:
        return all(x is not False for x in (self.top_identity, self.poly_identity))

    def to_json(self) -> dict:
        return {
            "twists": self.twists, "n": self.n,
            "top_identity": self.top_identity, "top_lhs": self.top_lhs, "top_rhs": self.top_rhs,
            "poly_identity": self.poly_identity,
        }


def top_chern_checks(twists: Sequence[int], n: int) -> TopChernReport:
    r = len(twists)
    if r < n:
        raise ValueError("rank must be at least n")
    c = chern_split(twists, n)
    lhs = 0
    for i in range(r - n, r + 1):
        chi = sum(chi_line(b, n) for b in _exterior_twists(twists, i))
        lhs += (-1) ** i * comb(i, r - n) * chi
    rhs = (-1) ** r * int(c.c(n))
    poly_ok = None
    if r == n:
        total = HilbertPolynomial([])
        for i in range(n + 1):
            Q = split_hilbert_poly(_exterior_twists(twists, i), n).compose_linear(i)
            total = total + Q.scale((-1) ** i)
        target = HilbertPolynomial([(-1) ** n * c.c(n - k) for k in range(n + 1)])
        poly_ok = total == target
    return TopChernReport(list(twists), n, lhs == rhs, lhs, rhs, poly_ok)


# ---------------------------------------------------------------------------
# replacing modules by their truncations


def truncate_series(h: HilbertSeries, m0: int) -> HilbertSeries:
    """Series of the degree >= m0 part of a module."""
    low = LaurentPoly({m: h.dim(m) for m in range(_lowest(h), m0)})
    num = h.numerator - low * ONE_MINUS_X ** h.denom_power
    return HilbertSeries(num, h.denom_power)


def _lowest(h: HilbertSeries) -> int:
    lo = h.numerator.min_exp()
    return lo if lo is not None else 0


def remark42_check(A: Arrangement, m0: int, cutoff: int | None = None, field: Field = EXACT) -> bool:
    n = A.n_vars - 1
    series = der_series(A, cutoff, field)
    base = limit_at_one(assemble_R(RInput(n + 1, n, series), -1))
    cut = [truncate_series(h, m0) for h in series]
    other = limit_at_one(assemble_R(RInput(n + 1, n, cut), -1))
    return base == other
