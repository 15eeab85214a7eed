"""Degreewise linear algebra for the modules D^p(A) and Omega^p(A).

Grading: the symbols d/dx_i and dx_i have degree 0, so a p-derivation of degree
m has coefficients of degree m, and a form eta/Q of degree m has numerator
coefficients of degree m + d.  The Euler derivation sits in degree 1 and dQ/Q
in degree -1.

Membership is tested hyperplane by hyperplane.  Q is a product of distinct
primes, so theta(Q, f_2, ..., f_p) lies in (Q) iff theta(alpha, f_2, ...) lies
in (alpha) for every defining form alpha; by the Leibniz rule the f_i may be
taken from a basis {alpha} + {x_j : j != pivot(alpha)}.  On the form side,
d(eta/Q) has a pole of order one along H iff d(alpha) ^ eta vanishes modulo
alpha.  "Vanishes modulo alpha" is imposed by restricting to the hyperplane.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .arrangement import (
    Arrangement,
    Lattice,
    essentialize,
    intersection_lattice,
    localize,
    poincare_poly,
)
from .errors import CutoffTooSmall, HypothesisFailed
from .exact import (
    ONE_MINUS_X,
    HilbertSeries,
    LaurentPoly,
    MPoly,
    dim_S,
    monomial_index,
    monomials,
)
from .linalg import EXACT, Field, stack

DER = "der"
FORM = "form"


@dataclass(frozen=True)
class ModuleSelector:
    arrangement: Arrangement
    side: str
    p: int
    euler_complement: bool = False

    def __post_init__(self):
        if self.side not in (DER, FORM):
            raise ValueError(f"side must be {DER!r} or {FORM!r}")
        if not 0 <= self.p <= self.arrangement.n_vars:
            raise ValueError("invalid exterior degree")
        if self.euler_complement and (self.side, self.p) != (DER, 1):
            raise ValueError("the Euler complement is defined for D^1 only")

    @property
    def label(self) -> str:
        base = "D" if self.side == DER else "Omega"
        return f"{base}^{self.p}" + ("_0" if self.euler_complement else "")

    @property
    def min_degree(self) -> int:
        return 0 if self.side == DER else -self.arrangement.d


# ---------------------------------------------------------------------------
# free ambient modules


class FreeAmbient:
    """(+)_j S(-shift_j); a degree-m element has component j of degree m - shift_j."""

    def __init__(self, n_vars: int, shifts: Sequence[int]):
        self.n_vars = n_vars
        self.shifts = tuple(shifts)

    @lru_cache(maxsize=None)
    def offsets(self, m: int) -> tuple[tuple[int, ...], int]:
        offs = []
        total = 0
        for s in self.shifts:
            offs.append(total)
            total += dim_S(self.n_vars, m - s)
        return tuple(offs), total

    def size(self, m: int) -> int:
        return self.offsets(m)[1]

    @lru_cache(maxsize=None)
    def columns(self, m: int) -> tuple[tuple[int, tuple[int, ...]], ...]:
        """column index -> (component, exponent vector)."""
        out = []
        for j, s in enumerate(self.shifts):
            out.extend((j, e) for e in monomials(self.n_vars, m - s))
        return tuple(out)

    def column(self, m: int, comp: int, exp: tuple[int, ...]) -> int:
        offs, _ = self.offsets(m)
        return offs[comp] + monomial_index(self.n_vars, m - self.shifts[comp])[exp]

    def encode(self, elem: Sequence[MPoly], m: int) -> dict[int, Fraction]:
        out = {}
        for j, poly in enumerate(elem):
            for e, c in poly.terms.items():
                out[self.column(m, j, e)] = c
        return out

    def decode(self, vec: dict[int, object] | Sequence, m: int) -> tuple[MPoly, ...]:
        cols = self.columns(m)
        terms: list[dict] = [{} for _ in self.shifts]
        items = vec.items() if isinstance(vec, dict) else enumerate(vec)
        for c, v in items:
            if v:
                j, e = cols[c]
                terms[j][e] = v
        return tuple(MPoly(self.n_vars, t) for t in terms)

    def shift_vector(self, vec: dict[int, object], m: int, mono: tuple[int, ...]) -> dict[int, object]:
        """Multiply a degree-m element by the monomial x^mono."""
        cols = self.columns(m)
        target = m + sum(mono)
        offs, _ = self.offsets(target)
        out = {}
        for c, v in vec.items():
            j, e = cols[c]
            ne = tuple(a + b for a, b in zip(e, mono))
            out[offs[j] + monomial_index(self.n_vars, target - self.shifts[j])[ne]] = v
        return out


# ---------------------------------------------------------------------------
# restriction to a hyperplane


@lru_cache(maxsize=None)
def restriction(form: tuple[int, ...], deg: int) -> tuple[int, tuple[dict[int, int], ...]]:
    """Scaled restriction S_deg -> S_deg(H) along x_k = -(sum_{j != k} a_j x_j) / a_k.

    Returns the pivot k and, for each source monomial, its image as a sparse
    integer vector; images are multiplied by a_k^deg so everything stays integral.
    """
    n1 = len(form)
    k = next(i for i, a in enumerate(form) if a)
    ak = form[k]
    others = [i for i in range(n1) if i != k]
    n = n1 - 1
    lin = MPoly(n, {tuple(int(t == j) for t in range(n)): -form[i] for j, i in enumerate(others) if form[i]})
    pows = [MPoly.const(n, 1)]
    for _ in range(deg):
        pows.append(pows[-1] * lin)
    idx = monomial_index(n, deg)
    cols = []
    for e in monomials(n1, deg):
        ek = e[k]
        rest = tuple(e[i] for i in others)
        scale = ak ** (deg - ek)
        col = {}
        for f, c in pows[ek].terms.items():
            g = tuple(x + y for x, y in zip(rest, f))
            col[idx[g]] = int(c) * scale
        cols.append(col)
    return k, tuple(cols)


def _sign(pos: int) -> int:
    return -1 if pos % 2 else 1


# ---------------------------------------------------------------------------
# graded modules given degreewise as kernels


class GradedModule:
    """A graded submodule of a free ambient module, known degree by degree."""

    ambient: FreeAmbient
    field: Field
    min_degree: int

    def __init__(self):
        self._basis: dict[int, object] = {}

    @property
    def n_vars(self) -> int:
        return self.ambient.n_vars

    def _compute_basis(self, m: int):
        raise NotImplementedError

    def basis(self, m: int):
        """Matrix whose rows form a basis of the degree-m part."""
        if m not in self._basis:
            if m < self.min_degree:
                self._basis[m] = self.field.zeros(0, self.ambient.size(m))
            else:
                self._basis[m] = self._compute_basis(m)
        return self._basis[m]

    def dim(self, m: int) -> int:
        return self.basis(m).nrows()


class LogModule(GradedModule):
    """D^p(A), Omega^p(A) or D^1_0(A) for a fixed selector."""

    def __init__(self, sel: ModuleSelector, field: Field = EXACT):
        super().__init__()
        self.selector = sel
        self.field = field
        A = sel.arrangement
        self.subsets = list(combinations(range(A.n_vars), sel.p))
        self.pos = {I: j for j, I in enumerate(self.subsets)}
        shift = 0 if sel.side == DER else -A.d
        self.ambient = FreeAmbient(A.n_vars, [shift] * len(self.subsets))
        self.min_degree = sel.min_degree

    def constraint_rows(self, m: int) -> list[dict[int, int]]:
        sel = self.selector
        A = sel.arrangement
        N = A.n_vars
        deg = m if sel.side == DER else m + A.d
        if deg < 0 or (sel.side == DER and sel.p == 0):
            return []
        offs, _ = self.ambient.offsets(m)
        rows: list[dict[int, int]] = []
        for a in A.forms:
            k, res = restriction(a, deg)
            others = [i for i in range(N) if i != k]
            nr = dim_S(N - 1, deg)
            if sel.side == DER:
                blocks = []
                for J in combinations(others, sel.p - 1):
                    terms = []
                    for i in range(N):
                        if i in J or not a[i]:
                            continue
                        I = tuple(sorted(J + (i,)))
                        terms.append((self.pos[I], _sign(I.index(i)) * a[i]))
                    blocks.append(terms)
            else:
                blocks = []
                for L in combinations(others, sel.p):
                    K = tuple(sorted(L + (k,)))
                    terms = []
                    for pos_j, j in enumerate(K):
                        if a[j]:
                            terms.append((self.pos[K[:pos_j] + K[pos_j + 1:]], _sign(pos_j) * a[j]))
                    blocks.append(terms)
            for terms in blocks:
                block = [dict() for _ in range(nr)]
                for comp, coef in terms:
                    off = offs[comp]
                    for src, col in enumerate(res):
                        for t, v in col.items():
                            r = block[t]
                            key = off + src
                            r[key] = r.get(key, 0) + coef * v
                rows.extend(r for r in block if r)
        if sel.euler_complement:
            rows.extend(self._euler_rows(m))
        return rows

    def _euler_rows(self, m: int) -> list[dict[int, Fraction]]:
        # For theta in D^1, theta(Q) = g Q and g = 0 iff the coefficients of
        # theta(Q) at LM(Q) * mu vanish for all mu of degree m - 1: that map
        # g -> those coefficients is triangular with diagonal LC(Q).
        A = self.selector.arrangement
        N = A.n_vars
        Q = A.Q
        lm, _ = Q.leading_term()
        partials = [Q.diff(j).terms for j in range(N)]
        idx = monomial_index(N, m)
        offs, _ = self.ambient.offsets(m)
        rows = []
        for mu in monomials(N, m - 1):
            target = tuple(a + b for a, b in zip(lm, mu))
            row = {}
            for j in range(N):
                pj = partials[j]
                for nu, i in idx.items():
                    e = tuple(a - b for a, b in zip(target, nu))
                    if min(e) < 0:
                        continue
                    c = pj.get(e)
                    if c:
                        row[offs[j] + i] = c
            if row:
                rows.append(row)
        return rows

    def _compute_basis(self, m: int):
        size = self.ambient.size(m)
        rows = self.constraint_rows(m)
        M = self.field.sparse(rows, size)
        return self.field.nullspace(M, size)


class SyzygyModule(GradedModule):
    """Kernel of the map from the free module on given generators to their ambient."""

    def __init__(self, parent: FreeAmbient, gens: Sequence[tuple[int, dict]], field: Field = EXACT):
        super().__init__()
        self.parent = parent
        self.gens = list(gens)
        self.field = field
        self.ambient = FreeAmbient(parent.n_vars, [g for g, _ in self.gens])
        self.min_degree = min((g for g, _ in self.gens), default=0)

    def image_rows(self, m: int) -> list[dict]:
        return generator_image_rows(self.parent, self.gens, m)

    def _compute_basis(self, m: int):
        src = self.ambient.size(m)
        tgt = self.parent.size(m)
        rows = self.image_rows(m)
        # left kernel of the (src x tgt) image matrix
        tr = [dict() for _ in range(tgt)]
        for i, r in enumerate(rows):
            for c, v in r.items():
                tr[c][i] = v
        M = self.field.sparse(tr, src)
        return self.field.nullspace(M, src)


def generator_image_rows(ambient: FreeAmbient, gens: Sequence[tuple[int, dict]], m: int) -> list[dict]:
    """Rows mu * g for every generator g and every monomial mu landing in degree m."""
    rows = []
    for deg, vec in gens:
        for mu in monomials(ambient.n_vars, m - deg):
            rows.append(ambient.shift_vector(vec, deg, mu))
    return rows


_MODULES: dict = {}


def log_module(sel: ModuleSelector, field: Field = EXACT) -> LogModule:
    key = (sel, field)
    if key not in _MODULES:
        _MODULES[key] = LogModule(sel, field)
    return _MODULES[key]


def clear_caches():
    _MODULES.clear()


# ---------------------------------------------------------------------------
# dimensions and Hilbert series


def graded_dim(sel: ModuleSelector, m: int, field: Field = EXACT) -> int:
    return log_module(sel, field).dim(m)


@dataclass
class GradedDimTable:
    label: str
    dims: dict[int, int]
    probabilistic: bool = False

    @property
    def window(self) -> tuple[int, int]:
        return min(self.dims), max(self.dims)

    def to_json(self) -> dict:
        lo, hi = self.window
        return {
            "module": self.label,
            "window": [lo, hi],
            "dims": [self.dims[m] for m in range(lo, hi + 1)],
            "probabilistic": self.probabilistic,
        }


def graded_dim_table(sel: ModuleSelector, lo: int, hi: int, field: Field = EXACT) -> GradedDimTable:
    mod = log_module(sel, field)
    return GradedDimTable(sel.label, {m: mod.dim(m) for m in range(lo, hi + 1)}, field.probabilistic)


def series_from_dims(dims: dict[int, int], n_vars: int, cutoff: int, label: str = "") -> HilbertSeries:
    """Numerator of sum dim_m X^m over (1-X)^n_vars, accepted after n_vars + 1 trailing zeros."""
    window = n_vars + 1
    gen = LaurentPoly(dims)
    num = gen * ONE_MINUS_X ** n_vars
    trunc = {k: c for k, c in num.terms.items() if k <= cutoff}
    tail = [k for k in trunc if k > cutoff - window]
    if tail:
        raise CutoffTooSmall(
            f"{label or 'series'}: numerator not stable at cutoff {cutoff} "
            f"(nonzero coefficient at X^{max(tail)})",
            partial=dict(dims),
            cutoff=cutoff,
        )
    return HilbertSeries(LaurentPoly(trunc), n_vars, cutoff=cutoff, window=window)


def module_series(mod: GradedModule, cutoff: int, label: str = "") -> HilbertSeries:
    dims = {m: mod.dim(m) for m in range(mod.min_degree, cutoff + 1)}
    return series_from_dims(dims, mod.n_vars, cutoff, label)


def hilbert_series(sel: ModuleSelector, cutoff: int, field: Field = EXACT) -> HilbertSeries:
    return module_series(log_module(sel, field), cutoff, sel.label)


def stable_hilbert_series(sel: ModuleSelector, max_cutoff: int, field: Field = EXACT) -> HilbertSeries:
    """Smallest cutoff <= max_cutoff at which the numerator stabilizes.

    Degree pieces are cached, so each extra attempt costs one new degree.
    """
    mod = log_module(sel, field)
    # a logarithmic module is never zero; the window only counts once it has started
    start = mod.min_degree
    while mod.dim(start) == 0:
        start += 1
    cutoff = start + mod.n_vars + 1
    while True:
        try:
            return module_series(mod, cutoff, sel.label)
        except CutoffTooSmall:
            if cutoff >= max_cutoff:
                raise
            cutoff += 1


# ---------------------------------------------------------------------------
# minimal generators


@dataclass
class GeneratorSet:
    label: str
    ambient: FreeAmbient
    gens: list[tuple[int, dict]]  # (degree, sparse vector in ambient coordinates)
    cutoff: int
    field: Field = field(default=EXACT, repr=False)

    @property
    def degrees(self) -> list[int]:
        return [g for g, _ in self.gens]

    def elements(self) -> list[tuple[MPoly, ...]]:
        if self.field.probabilistic:
            raise ValueError("explicit generators need the exact backend")
        return [self.ambient.decode(v, g) for g, v in self.gens]

    def to_json(self) -> dict:
        return {"module": self.label, "degrees": self.degrees, "cutoff": self.cutoff}


def _multiply_by_variables(field: Field, ambient: FreeAmbient, B, m: int):
    """Rows x_j * b for every basis row b of degree m - 1, as a degree-m matrix."""
    size = ambient.size(m)
    if B.nrows() == 0:
        return field.zeros(0, size)
    units = [tuple(int(i == j) for i in range(ambient.n_vars)) for j in range(ambient.n_vars)]
    rows = []
    for r in B.tolist():
        vec = {c: v for c, v in enumerate(r) if v != 0}
        for u in units:
            rows.append(ambient.shift_vector(vec, m - 1, u))
    return field.sparse(rows, size)


def new_generators(mod: GradedModule, m: int) -> list[dict]:
    """Vectors of degree m completing S_1 * M_{m-1} to M_m, in reduced form."""
    fld = mod.field
    B = mod.basis(m)
    if B.nrows() == 0:
        return []
    P = _multiply_by_variables(fld, mod.ambient, mod.basis(m - 1), m)
    E, piv = fld.rref(P)
    if len(piv) == B.nrows():
        return []
    if piv:
        Bpiv = fld.dense([[r[p] for p in piv] for r in B.tolist()], len(piv))
        Emat = fld.dense(E, B.ncols())
        B = B - Bpiv * Emat
    red, _ = fld.rref(B)
    out = []
    for r in red:
        out.append({c: (fld.to_python(v)) for c, v in enumerate(r) if v != 0})
    expected = mod.dim(m) - len(piv)
    assert len(out) == expected, (len(out), expected)
    return out


def module_generators(mod: GradedModule, cutoff: int, label: str = "") -> GeneratorSet:
    gens = []
    for m in range(mod.min_degree, cutoff + 1):
        gens.extend((m, v) for v in new_generators(mod, m))
    return GeneratorSet(label, mod.ambient, gens, cutoff, mod.field)


def minimal_generators(sel: ModuleSelector, cutoff: int, field: Field = EXACT) -> GeneratorSet:
    return module_generators(log_module(sel, field), cutoff, sel.label)


# ---------------------------------------------------------------------------
# Betti tables by degreewise syzygies


@dataclass
class BettiTable:
    label: str
    entries: dict[tuple[int, int], int]  # (homological index, j) -> multiplicity of S(-j)
    gen_cutoff: int
    syz_cutoff: int
    complete: bool
    probabilistic: bool = False
    series: HilbertSeries | None = None
    method: str = "exact"

    @property
    def pdim(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def row(self, i: int) -> dict[int, int]:
        return {j: c for (k, j), c in sorted(self.entries.items()) if k == i}

    def twists(self, i: int) -> list[int]:
        """Twists a of the free summands S(a) in homological index i."""
        out = []
        for j, c in self.row(i).items():
            out.extend([-j] * c)
        return out

    def euler_numerator(self) -> LaurentPoly:
        return LaurentPoly({}) + sum(
            (LaurentPoly({j: (-1) ** i * c}) for (i, j), c in self.entries.items()), LaurentPoly({})
        )

    def to_json(self) -> dict:
        return {
            "module": self.label,
            "entries": [[i, j, c] for (i, j), c in sorted(self.entries.items())],
            "pdim": self.pdim,
            "complete": self.complete,
            "gen_cutoff": self.gen_cutoff,
            "syz_cutoff": self.syz_cutoff,
            "probabilistic": self.probabilistic,
            "method": self.method,
        }


def is_tight(entries: dict[tuple[int, int], int]) -> bool:
    """No internal degree carries two homological indices."""
    seen: dict[int, int] = {}
    for (i, j), c in entries.items():
        if c and seen.setdefault(j, i) != i:
            return False
    return True


def check_generation(parent: GradedModule, syz: SyzygyModule, cutoff: int, label: str):
    """The generators span the parent in every degree up to cutoff."""
    for m in range(min(parent.min_degree, syz.min_degree), cutoff + 1):
        image = syz.ambient.size(m) - syz.dim(m)
        if image != parent.dim(m):
            raise CutoffTooSmall(
                f"{label}: generators miss part of degree {m} "
                f"(image {image} < dimension {parent.dim(m)})",
                cutoff=cutoff,
            )


def module_betti(
    mod: GradedModule,
    label: str,
    gen_cutoff: int,
    syz_cutoff: int,
    max_index: int,
    gens: GeneratorSet | None = None,
) -> BettiTable:
    if syz_cutoff < gen_cutoff:
        raise ValueError("syzygy cutoff below generator cutoff")
    series = module_series(mod, syz_cutoff, label)
    if gens is None:
        gens = module_generators(mod, gen_cutoff, label)
    entries: dict[tuple[int, int], int] = {}
    current = mod
    index = 0
    complete = False
    while True:
        for g in gens.degrees:
            entries[(index, g)] = entries.get((index, g), 0) + 1
        if not gens.gens:
            complete = True
            break
        syz = SyzygyModule(current.ambient, gens.gens, current.field)
        check_generation(current, syz, syz_cutoff, f"{label} stage {index}")
        module_series(syz, syz_cutoff, f"{label} syzygies {index + 1}")
        if index == max_index:
            complete = all(syz.dim(m) == 0 for m in range(syz.min_degree, syz_cutoff + 1))
            break
        gens = module_generators(syz, syz_cutoff, f"{label} syzygies {index + 1}")
        current = syz
        index += 1
    return BettiTable(label, entries, gen_cutoff, syz_cutoff, complete, mod.field.probabilistic, series)


def _reduce_gens(gens: GeneratorSet, fld: Field) -> GeneratorSet:
    out = [(g, {c: fld.to_python(fld._coerce(v)) for c, v in vec.items()}) for g, vec in gens.gens]
    return GeneratorSet(gens.label, gens.ambient, out, gens.cutoff, fld)


def _certified_betti(sel: ModuleSelector, gen_cutoff: int, syz_cutoff: int, max_index: int, field: Field):
    """Exact minimal generators, syzygy stages modulo a prime; None when not certified.

    The exact generators are only needed up to the top degree the modular
    search finds. Their reductions then pass the stage-0 generation check
    modulo p in every degree through the syzygy cutoff, which pins the
    rational dimensions: dim_Q >= rank_Q >= rank_p = dim_p >= dim_Q. So the
    modular module is the reduction of the integral lattice, the exact
    generators generate over Q with nothing new above their top degree, and
    the first syzygy modules have equal Hilbert functions. Further modular
    Betti numbers bound the rational ones from above with the same Hilbert
    series; when no internal degree carries two homological indices there is
    no room for a cancelling pair and the two tables coincide.
    """
    fast = Field("modular")
    fast_mod = log_module(sel, fast)
    exact_mod = log_module(sel, field)
    try:
        top = max(module_generators(fast_mod, gen_cutoff).degrees, default=sel.min_degree)
        exact_gens = module_generators(exact_mod, top, sel.label)
        reduced = _reduce_gens(exact_gens, fast)
        table = module_betti(fast_mod, sel.label, gen_cutoff, syz_cutoff, max_index, gens=reduced)
    except (CutoffTooSmall, ValueError, ZeroDivisionError):
        return None
    if not is_tight(table.entries):
        return None
    table.probabilistic = False
    table.method = "modular-certified"
    return table


def betti_probe(
    sel: ModuleSelector,
    gen_cutoff: int,
    syz_cutoff: int,
    max_index: int | None = None,
    field: Field = EXACT,
    certify: bool = True,
) -> BettiTable:
    """Betti table of a logarithmic module up to the given cutoffs.

    With the exact backend and ``certify`` on, only the minimal generators
    are found over the rationals; the syzygy stages run modulo a large prime
    and are accepted when the certificate in ``_certified_betti`` holds.
    Otherwise every stage is recomputed over the rationals.
    """
    if max_index is None:
        max_index = sel.arrangement.n_vars + 1
    if certify and not field.probabilistic:
        table = _certified_betti(sel, gen_cutoff, syz_cutoff, max_index, field)
        if table is not None:
            return table
    return module_betti(log_module(sel, field), sel.label, gen_cutoff, syz_cutoff, max_index)


# ---------------------------------------------------------------------------
# polynomial determinants and wedges


def det(matrix: Sequence[Sequence[MPoly]], n_vars: int) -> MPoly:
    size = len(matrix)
    if size == 0:
        return MPoly.const(n_vars, 1)
    if size == 1:
        return matrix[0][0]
    total = MPoly.zero(n_vars)
    for j in range(size):
        entry = matrix[0][j]
        if entry.is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = entry * det(minor, n_vars)
        total = total + term if j % 2 == 0 else total - term
    return total


def wedge(elements: Sequence[Sequence[MPoly]], n_vars: int) -> tuple[MPoly, ...]:
    """Wedge of 1-vectors given by coefficient tuples; coefficients indexed by p-subsets."""
    p = len(elements)
    out = []
    for I in combinations(range(n_vars), p):
        out.append(det([[e[i] for i in I] for e in elements], n_vars))
    return tuple(out)


# ---------------------------------------------------------------------------
# freeness


@dataclass
class FreenessReport:
    free: bool
    exponents: tuple[int, ...] | None
    certificate: Fraction | None
    witness: dict | None
    n_vars: int
    d: int

    def to_json(self) -> dict:
        return {
            "free": self.free,
            "exponents": list(self.exponents) if self.exponents is not None else None,
            "certificate": str(self.certificate) if self.certificate is not None else None,
            "witness": self.witness,
            "n_vars": self.n_vars,
            "d": self.d,
        }


def integer_factorization(pi: Sequence[int]) -> tuple[int, ...] | None:
    """Nonnegative integers a_i with pi(t) = prod(1 + a_i t), or None."""
    c = list(pi)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    if c[0] != 1:
        return None
    roots: list[int] = []
    while len(c) > 1:
        top = abs(c[-1])
        found = None
        for a in range(1, top + 1):
            if top % a:
                continue
            # divide by (1 + a t)
            q = [0] * (len(c) - 1)
            rem = c[:]
            for k in range(len(c) - 1, 0, -1):
                if rem[k] % a:
                    break
                q[k - 1] = rem[k] // a
                rem[k - 1] -= q[k - 1]
                rem[k] = 0
            else:
                if rem[0] == 0 and all(x == 0 for x in rem[1:]):
                    found = (a, q)
                    break
            if found:
                break
        if not found:
            return None
        roots.append(found[0])
        c = found[1]
        if c[0] != 1:
            return None
    return tuple(sorted(roots))


def saito_certificate(elems: Sequence[Sequence[MPoly]], Q: MPoly, n_vars: int) -> Fraction | None:
    """c with det(coefficients) = c * Q, c != 0; None if no such c."""
    D = det([list(e) for e in elems], n_vars)
    if D.is_zero():
        return None
    lm, lc = Q.leading_term()
    c = D.terms.get(lm)
    if not c:
        return None
    c = c / lc
    return c if D == Q.scale(c) else None


def freeness_test(A: Arrangement) -> FreenessReport:
    E, _ = essentialize(A)
    r, d = E.n_vars, E.d
    if d == 0:
        return FreenessReport(True, (), Fraction(1), None, r, d)
    pi = poincare_poly(E)
    if integer_factorization(pi) is None:
        return FreenessReport(
            False, None, None,
            {"reason": "poincare polynomial has no factorization prod(1 + a_i t)", "poincare": list(pi)},
            r, d,
        )
    # exponents of an essential free arrangement are >= 1 and sum to d
    bound = d - r + 1
    sel = ModuleSelector(E, DER, 1)
    gs = minimal_generators(sel, bound)
    elems = gs.elements()
    degs = gs.degrees
    for sub in combinations(range(len(elems)), r):
        if sum(degs[i] for i in sub) != d:
            continue
        c = saito_certificate([elems[i] for i in sub], E.Q, r)
        if c is not None:
            return FreenessReport(True, tuple(sorted(degs[i] for i in sub)), c, None, r, d)
    return FreenessReport(
        False, None, None,
        {"reason": "no Saito certificate among minimal generators", "generator_degrees": degs, "cutoff": bound},
        r, d,
    )


@dataclass
class LocalFreenessReport:
    locally_free: bool
    verdicts: list[dict]
    witness: dict | None

    def to_json(self) -> dict:
        return {"locally_free": self.locally_free, "verdicts": self.verdicts, "witness": self.witness}


def _element_json(X) -> dict:
    return {
        "rank": X.rank,
        "hyperplanes": sorted(X.members),
        "basis": [[str(x) for x in row] for row in X.basis],
    }


def local_freeness_test(A: Arrangement, lattice: Lattice | None = None) -> LocalFreenessReport:
    E = A if A.essential else essentialize(A)[0]
    L = lattice if (lattice is not None and E is A) else intersection_lattice(E)
    verdicts = []
    witness = None
    memo: dict = {}
    # rank is measured against the original ambient space: for a non-essential
    # arrangement the center itself is a proper element
    for X in L:
        if not 1 <= X.rank < A.n_vars:
            continue
        sub, _ = localize(E, X)
        ess, _ = essentialize(sub)
        if ess.forms not in memo:
            memo[ess.forms] = freeness_test(ess)
        rep = memo[ess.forms]
        entry = _element_json(X)
        entry.update(free=rep.free, exponents=list(rep.exponents) if rep.exponents else None)
        verdicts.append(entry)
        if not rep.free and witness is None:
            witness = dict(entry, reason=rep.witness)
    return LocalFreenessReport(witness is None, verdicts, witness)


# ---------------------------------------------------------------------------
# wedge images and duality


def lowest_degree(sel: ModuleSelector, field: Field = EXACT, limit: int | None = None) -> int:
    mod = log_module(sel, field)
    top = limit if limit is not None else sel.min_degree + sel.arrangement.d + 2 * sel.arrangement.n_vars + 2
    for m in range(sel.min_degree, top + 1):
        if mod.dim(m):
            return m
    raise CutoffTooSmall(f"{sel.label} vanishes up to degree {top}", cutoff=top)


def wedge_image_dim(A: Arrangement, p: int, m: int, side: str) -> int:
    sel1 = ModuleSelector(A, side, 1)
    low = lowest_degree(sel1)
    gs = minimal_generators(sel1, m - (p - 1) * low)
    elems = gs.elements()
    degs = gs.degrees
    amb = log_module(ModuleSelector(A, side, p)).ambient
    N = A.n_vars
    Qpow = A.Q ** (p - 1) if side == FORM else None
    rows = []
    for sub in combinations(range(len(elems)), p):
        deg = sum(degs[i] for i in sub)
        if deg > m:
            continue
        w = wedge([elems[i] for i in sub], N)
        if Qpow is not None:
            w = tuple(c.divide_exact(Qpow) for c in w)
        vec = amb.encode(w, deg)
        for mu in monomials(N, m - deg):
            rows.append(amb.shift_vector(vec, deg, mu))
    return EXACT.rank(EXACT.sparse(rows, amb.size(m)))


def wedge_compare(A: Arrangement, p: int, m: int, side: str = DER) -> tuple[int, int]:
    """(dim of the span of p-fold wedges of degree-m, dim of the degree-m part of D^p / Omega^p)."""
    return wedge_image_dim(A, p, m, side), graded_dim(ModuleSelector(A, side, p), m)


def duality_check_free(A: Arrangement, p: int) -> bool:
    rep = freeness_test(A)
    if not rep.free:
        raise HypothesisFailed("arrangement is not free", rep.witness)
    _, empty = essentialize(A)
    exps = list(rep.exponents) + [0] * empty
    sums = sorted(sum(s) for s in combinations(exps, p))
    hi = max(sums) if sums else 0
    lo = min(sums) if sums else 0
    dgen = minimal_generators(ModuleSelector(A, DER, p), hi).degrees
    fgen = minimal_generators(ModuleSelector(A, FORM, p), -lo).degrees
    if sorted(dgen) != sums or sorted(-g for g in fgen) != sums:
        return False
    for m in range(-hi - 1, hi + 2):
        d_expected = sum(dim_S(A.n_vars, m - a) for a in sums)
        f_expected = sum(dim_S(A.n_vars, m + a) for a in sums)
        if graded_dim(ModuleSelector(A, DER, p), m) != d_expected:
            return False
        if graded_dim(ModuleSelector(A, FORM, p), m) != f_expected:
            return False
    return True
