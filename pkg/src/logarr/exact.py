"""Exact arithmetic foundation.

Rationals are :class:`fractions.Fraction`. Everything here is immutable after
construction and free of floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Mapping, Sequence

Rat = Fraction


def as_rat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x)
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to an exact rational")


# ---------------------------------------------------------------------------
# monomials in graded-lex order


@lru_cache(maxsize=None)
def monomials(n_vars: int, deg: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of total degree ``deg``, in descending lex order.

    Descending lex within a fixed degree is the graded-lex order used for every
    pivot choice in the package.
    """
    if deg < 0 or n_vars < 0:
        return ()
    if n_vars == 0:
        return ((),) if deg == 0 else ()
    out = []
    for combo in combinations_with_replacement(range(n_vars), deg):
        e = [0] * n_vars
        for v in combo:
            e[v] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(n_vars: int, deg: int) -> dict[tuple[int, ...], int]:
    return {e: i for i, e in enumerate(monomials(n_vars, deg))}


def dim_S(n_vars: int, m: int) -> int:
    """dim of the degree-m part of a polynomial ring in n_vars variables."""
    if m < 0:
        return 0
    if n_vars == 0:
        return 1 if m == 0 else 0
    return comb(m + n_vars - 1, n_vars - 1)


def binom(e: int, k: int) -> Fraction | int:
    """Generalized binomial coefficient C(e, k) for any integer e and k >= 0."""
    if k < 0:
        return 0
    num = 1
    for i in range(k):
        num *= e - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return num // den


# ---------------------------------------------------------------------------
# multivariate polynomials


class MPoly:
    """Sparse multivariate polynomial with rational coefficients."""

    __slots__ = ("n_vars", "terms")

    def __init__(self, n_vars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.n_vars = n_vars
        clean: dict[tuple[int, ...], Fraction] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != n_vars:
                    raise ValueError("exponent vector has wrong length")
                c = as_rat(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, n_vars, terms):
        p = cls.__new__(cls)
        p.n_vars = n_vars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, n_vars: int) -> "MPoly":
        return cls._raw(n_vars, {})

    @classmethod
    def const(cls, n_vars: int, c) -> "MPoly":
        return cls(n_vars, {(0,) * n_vars: c})

    @classmethod
    def var(cls, i: int, n_vars: int) -> "MPoly":
        e = [0] * n_vars
        e[i] = 1
        return cls._raw(n_vars, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, coeffs: Sequence) -> "MPoly":
        n = len(coeffs)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(n, terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None if inhomogeneous or zero."""
        degs = {sum(e) for e in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True)

    def _check(self, other):
        if self.n_vars != other.n_vars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.n_vars, other)
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MPoly._raw(self.n_vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.n_vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            other = MPoly.const(self.n_vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "MPoly":
        c = as_rat(c)
        if not c:
            return MPoly.zero(self.n_vars)
        return MPoly._raw(self.n_vars, {e: c * v for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MPoly._raw(self.n_vars, {e: c for e, c in out.items() if c})

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = MPoly.const(self.n_vars, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def diff(self, i: int) -> "MPoly":
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return MPoly._raw(self.n_vars, out)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def leading_term(self):
        e = max(self.terms, key=lambda t: (sum(t), t))
        return e, self.terms[e]

    def divide_exact(self, other: "MPoly") -> "MPoly":
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        self._check(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        le, lc = other.leading_term()
        rem = self
        quot: dict[tuple[int, ...], Fraction] = {}
        while rem.terms:
            e, c = rem.leading_term()
            if any(a < b for a, b in zip(e, le)):
                raise ArithmeticError("division is not exact")
            qe = tuple(a - b for a, b in zip(e, le))
            qc = c / lc
            quot[qe] = quot.get(qe, 0) + qc
            rem = rem - MPoly._raw(self.n_vars, {qe: qc}) * other
        return MPoly(self.n_vars, quot)

    def coefficient_vector(self, deg: int) -> list[Fraction]:
        idx = monomial_index(self.n_vars, deg)
        out = [Fraction(0)] * len(idx)
        for e, c in self.terms.items():
            if sum(e) != deg:
                raise ValueError("term outside the requested degree")
            out[idx[e]] = c
        return out

    @classmethod
    def from_vector(cls, n_vars: int, deg: int, vec: Sequence) -> "MPoly":
        mons = monomials(n_vars, deg)
        return cls(n_vars, {mons[i]: c for i, c in enumerate(vec) if c})

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.n_vars == other.n_vars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == MPoly.const(self.n_vars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n_vars, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def product(polys: Iterable[MPoly], n_vars: int) -> MPoly:
    out = MPoly.const(n_vars, 1)
    for p in polys:
        out = out * p
    return out


# ---------------------------------------------------------------------------
# Laurent polynomials in one variable X


class LaurentPoly:
    """Finite Laurent polynomial sum c_k X^k with exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = as_rat(c)
                if c:
                    clean[int(k)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls({k: c})

    @classmethod
    def from_coeffs(cls, min_exp: int, coeffs: Sequence) -> "LaurentPoly":
        return cls({min_exp + i: c for i, c in enumerate(coeffs)})

    def min_exp(self) -> int | None:
        return min(self.terms) if self.terms else None

    def max_exp(self) -> int | None:
        return max(self.terms) if self.terms else None

    def coeff(self, k: int) -> Fraction:
        return self.terms.get(k, Fraction(0))

    def to_pair(self) -> tuple[int, list]:
        """(min_exponent, dense coefficient list) serialization form."""
        if not self.terms:
            return 0, []
        lo, hi = self.min_exp(), self.max_exp()
        return lo, [self.coeff(k) for k in range(lo, hi + 1)]

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            other = LaurentPoly({0: other})
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = as_rat(other)
            return LaurentPoly({k: c * v for k, v in self.terms.items()})
        out: dict[int, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = LaurentPoly({0: 1})
        for _ in range(k):
            out = out * self
        return out

    def shift(self, s: int) -> "LaurentPoly":
        return LaurentPoly({k + s: c for k, c in self.terms.items()})

    def __call__(self, x):
        return sum((c * Fraction(x) ** k for k, c in self.terms.items()), Fraction(0))

    def substitute_one_plus(self, order: int) -> list[Fraction]:
        """Coefficients of u^0..u^order in self(1+u) (negative powers expand as series)."""
        out = [Fraction(0)] * (order + 1)
        for k, c in self.terms.items():
            for j in range(order + 1):
                b = binom(k, j)
                if b:
                    out[j] += c * b
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly({0: other})
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms):
            c = self.terms[k]
            parts.append(f"{c}" if k == 0 else f"{c}*X^{k}")
        return " + ".join(parts).replace("+ -", "- ")


ONE_MINUS_X = LaurentPoly({0: 1, 1: -1})


# ---------------------------------------------------------------------------
# truncated polynomial ring Q[t]/(t^m)


class TruncPoly:
    """Element of Q[t]/(t^modulus); coefficients of t^0 .. t^(modulus-1)."""

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs: Sequence = ()):
        if modulus < 1:
            raise ValueError("modulus must be positive")
        c = [as_rat(x) for x in list(coeffs)[:modulus]]
        c += [Fraction(0)] * (modulus - len(c))
        self.modulus = modulus
        self.coeffs = tuple(c)

    @classmethod
    def one(cls, modulus: int) -> "TruncPoly":
        return cls(modulus, [1])

    @classmethod
    def zero(cls, modulus: int) -> "TruncPoly":
        return cls(modulus, [])

    @classmethod
    def t_power(cls, modulus: int, k: int, c=1) -> "TruncPoly":
        if k >= modulus:
            return cls.zero(modulus)
        return cls(modulus, [0] * k + [c])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other):
        if self.modulus != other.modulus:
            raise ValueError("truncated polynomials with different moduli")

    def __add__(self, other):
        if not isinstance(other, TruncPoly):
            other = TruncPoly(self.modulus, [other])
        self._check(other)
        return TruncPoly(self.modulus, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return TruncPoly(self.modulus, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, TruncPoly):
            c = as_rat(other)
            return TruncPoly(self.modulus, [c * a for a in self.coeffs])
        self._check(other)
        m = self.modulus
        out = [Fraction(0)] * m
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(m - i):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
        return TruncPoly(m, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return trunc_invert(self) ** (-k)
        out = TruncPoly.one(self.modulus)
        for _ in range(k):
            out = out * self
        return out

    def substitute_neg(self) -> "TruncPoly":
        """t -> -t."""
        return TruncPoly(self.modulus, [(-a if i % 2 else a) for i, a in enumerate(self.coeffs)])

    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coeffs)

    def ints(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("non-integral coefficients")
        return [int(a) for a in self.coeffs]

    def __eq__(self, other):
        if isinstance(other, TruncPoly):
            return self.modulus == other.modulus and self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self == TruncPoly(self.modulus, other)
        if isinstance(other, (int, Fraction)):
            return self == TruncPoly(self.modulus, [other])
        return NotImplemented

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        terms = []
        for i, a in enumerate(self.coeffs):
            if a:
                terms.append(f"{a}" if i == 0 else (f"{a}*t" if i == 1 else f"{a}*t^{i}"))
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} mod t^{self.modulus}"


def trunc_invert(p: TruncPoly) -> TruncPoly:
    """Inverse of a unit of Q[t]/(t^m)."""
    c0 = p.coeffs[0]
    if not c0:
        raise ZeroDivisionError("not a unit")
    m = p.modulus
    q = [Fraction(0)] * m
    q[0] = 1 / c0
    for k in range(1, m):
        s = sum((p.coeffs[i] * q[k - i] for i in range(1, k + 1)), Fraction(0))
        q[k] = -s / c0
    return TruncPoly(m, q)


# ---------------------------------------------------------------------------
# Laurent series in u = X - 1 with truncated-polynomial coefficients


class USeries:
    """Laurent series sum_k c_k u^k, c_k in Q[t]/(t^m), known for k <= max_order."""

    __slots__ = ("modulus", "max_order", "coeffs")

    def __init__(self, modulus: int, max_order: int, coeffs: Mapping[int, TruncPoly] | None = None):
        self.modulus = modulus
        self.max_order = max_order
        clean = {}
        for k, c in (coeffs or {}).items():
            if k <= max_order and not c.is_zero():
                if c.modulus != modulus:
                    raise ValueError("coefficient modulus mismatch")
                clean[k] = c
        self.coeffs = clean

    @property
    def min_order(self) -> int:
        return min(self.coeffs) if self.coeffs else self.max_order + 1

    def coefficient(self, k: int) -> TruncPoly:
        if k > self.max_order:
            raise ValueError(f"order {k} beyond truncation {self.max_order}")
        return self.coeffs.get(k, TruncPoly.zero(self.modulus))

    def negative_part(self) -> dict[int, TruncPoly]:
        return {k: c for k, c in sorted(self.coeffs.items()) if k < 0}

    def __add__(self, other: "USeries") -> "USeries":
        if self.modulus != other.modulus:
            raise ValueError("modulus mismatch")
        top = min(self.max_order, other.max_order)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return USeries(self.modulus, top, out)

    def __neg__(self):
        return USeries(self.modulus, self.max_order, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: TruncPoly) -> "USeries":
        if not isinstance(c, TruncPoly):
            c = TruncPoly(self.modulus, [c])
        return USeries(self.modulus, self.max_order, {k: v * c for k, v in self.coeffs.items()})

    def shift(self, s: int) -> "USeries":
        """Multiply by u^s."""
        return USeries(self.modulus, self.max_order + s, {k + s: v for k, v in self.coeffs.items()})

    def truncate(self, max_order: int) -> "USeries":
        return USeries(self.modulus, min(max_order, self.max_order), self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, USeries):
            return NotImplemented
        top = min(self.max_order, other.max_order)
        keys = {k for k in list(self.coeffs) + list(other.coeffs) if k <= top}
        return self.modulus == other.modulus and all(
            self.coefficient(k) == other.coefficient(k) for k in keys
        )

    def __repr__(self):
        body = ", ".join(f"u^{k}: {c}" for k, c in sorted(self.coeffs.items()))
        return f"USeries({{{body}}}, O(u^{self.max_order + 1}))"


def expand_at_one(num: LaurentPoly, denom_power: int, modulus: int, order_cap: int) -> USeries:
    """Expand num(X)/(1-X)^denom_power at X = 1 + u through u^order_cap."""
    if order_cap < 0:
        raise ValueError("order_cap must be non-negative")
    top = order_cap + denom_power
    if top < 0:
        return USeries(modulus, order_cap, {})
    c = num.substitute_one_plus(top)
    sign = -1 if denom_power % 2 else 1
    out = {}
    for j, a in enumerate(c):
        if a:
            out[j - denom_power] = TruncPoly(modulus, [sign * a])
    return USeries(modulus, order_cap, out)


# ---------------------------------------------------------------------------
# Hilbert series


class HilbertSeries:
    """numerator(X) / (1 - X)^denom_power, with optional stabilization record."""

    __slots__ = ("numerator", "denom_power", "cutoff", "window")

    def __init__(self, numerator: LaurentPoly, denom_power: int, cutoff=None, window=None):
        self.numerator = numerator
        self.denom_power = denom_power
        self.cutoff = cutoff
        self.window = window

    def dim(self, m: int) -> Fraction:
        """Coefficient of X^m in the expansion around X = 0."""
        k = self.denom_power
        total = Fraction(0)
        for a, c in self.numerator.terms.items():
            j = m - a
            if j >= 0:
                total += c * (comb(j + k - 1, k - 1) if k > 0 else (1 if j == 0 else 0))
        return total

    def rank(self) -> Fraction:
        """numerator(1): the rank of the module when denom_power is the ring dimension."""
        return sum(self.numerator.terms.values(), Fraction(0))

    def __add__(self, other):
        return _combine(self, other, 1)

    def __sub__(self, other):
        return _combine(self, other, -1)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        k = max(self.denom_power, other.denom_power)
        a = self.numerator * ONE_MINUS_X ** (k - self.denom_power)
        b = other.numerator * ONE_MINUS_X ** (k - other.denom_power)
        return a == b

    def __hash__(self):
        return hash((self.numerator, self.denom_power))

    def __repr__(self):
        return f"({self.numerator})/(1-X)^{self.denom_power}"


def _combine(a: HilbertSeries, b: HilbertSeries, sign: int) -> HilbertSeries:
    k = max(a.denom_power, b.denom_power)
    na = a.numerator * ONE_MINUS_X ** (k - a.denom_power)
    nb = b.numerator * ONE_MINUS_X ** (k - b.denom_power)
    return HilbertSeries(na + nb * sign, k)


def hilbert_series_free(twists: Iterable[int], n: int) -> HilbertSeries:
    """Hilbert series of the free module (+) S(a) over n+1 variables."""
    if n < 0:
        raise ValueError("n must be non-negative")
    num: dict[int, int] = {}
    for a in twists:
        num[-a] = num.get(-a, 0) + 1
    return HilbertSeries(LaurentPoly(num), n + 1)


# ---------------------------------------------------------------------------
# dense rational matrices


class RatMatrix:
    """Dense rectangular matrix of rationals."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        ent = tuple(tuple(as_rat(x) for x in row) for row in entries)
        if cols is None:
            cols = len(ent[0]) if ent else 0
        if any(len(r) != cols for r in ent):
            raise ValueError("ragged matrix")
        self.rows = len(ent)
        self.cols = cols
        self.entries = ent

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        return rref([list(r) for r in self.entries], self.cols)

    def rank(self) -> int:
        return len(self.rref()[1])

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum((a * as_rat(b) for a, b in zip(row, v)), Fraction(0)) for row in self.entries]

    def transpose(self) -> "RatMatrix":
        return RatMatrix([list(c) for c in zip(*self.entries)] if self.rows else [], self.rows)

    def __repr__(self):
        return f"RatMatrix({self.rows}x{self.cols})"


def rref(rows: list[list[Fraction]], cols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form (in place on a copy); returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        pr = m[r]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(M: RatMatrix) -> list[list[Fraction]]:
    """Basis of the right null space, one vector per free column.

    Vectors are normalized so that the free column carries 1 and every other
    free column carries 0; ordered by free column.
    """
    red, pivots = M.rref()
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return rref(basis, M.cols)[0] if basis else []
