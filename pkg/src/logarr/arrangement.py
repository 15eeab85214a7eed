"""Central arrangements, their intersection lattices and Poincare polynomials."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product as iproduct
from math import gcd, lcm
from typing import Iterable, Sequence

from .exact import MPoly, as_rat, product, rref


class ArrangementError(ValueError):
    pass


def normalize_form(vec: Sequence) -> tuple[int, ...]:
    """Primitive integer vector with positive first nonzero entry."""
    fr = [as_rat(x) for x in vec]
    if not any(fr):
        raise ArrangementError("degenerate form")
    den = lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, x)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def matrix_rank(rows: Sequence[Sequence]) -> int:
    if not rows:
        return 0
    return len(rref([[as_rat(x) for x in r] for r in rows], len(rows[0]))[1])


@dataclass(frozen=True)
class Arrangement:
    n_vars: int
    forms: tuple[tuple[int, ...], ...]
    name: str | None = field(default=None, compare=False)

    @property
    def d(self) -> int:
        return len(self.forms)

    @property
    def n(self) -> int:
        """Projective dimension: V has dimension n + 1."""
        return self.n_vars - 1

    @cached_property
    def rank(self) -> int:
        return matrix_rank(self.forms)

    @property
    def essential(self) -> bool:
        return self.rank == self.n_vars

    @cached_property
    def Q(self) -> MPoly:
        return product((MPoly.linear(f) for f in self.forms), self.n_vars)

    def linear_form(self, i: int) -> MPoly:
        return MPoly.linear(self.forms[i])

    def to_json(self) -> dict:
        out = {"n_vars": self.n_vars, "forms": [list(f) for f in self.forms]}
        if self.name:
            out["name"] = self.name
        return out

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<Arrangement{label}: {self.d} hyperplanes in k^{self.n_vars}>"


def make_arrangement(n_vars: int, forms: Iterable[Sequence], name: str | None = None) -> Arrangement:
    if n_vars < 1:
        raise ArrangementError("n_vars must be at least 1")
    seen: dict[tuple[int, ...], int] = {}
    out = []
    for i, f in enumerate(forms):
        if len(f) != n_vars:
            raise ArrangementError(f"form {i} has length {len(f)}, expected {n_vars}")
        v = normalize_form(f)
        if v in seen:
            raise ArrangementError(f"duplicate hyperplane: forms {seen[v]} and {i} are proportional")
        seen[v] = i
        out.append(v)
    return Arrangement(n_vars, tuple(out), name)


def load_arrangement(path) -> Arrangement:
    with open(path) as fh:
        data = json.load(fh)
    return make_arrangement(int(data["n_vars"]), data["forms"], data.get("name"))


def dump_arrangement(A: Arrangement) -> str:
    return json.dumps(A.to_json(), sort_keys=True)


# ---------------------------------------------------------------------------
# built-in families


def boolean(m: int) -> Arrangement:
    return make_arrangement(m, [[int(i == j) for j in range(m)] for i in range(m)], f"boolean:{m}")


def braid(m: int) -> Arrangement:
    forms = []
    for i, j in combinations(range(m), 2):
        v = [0] * m
        v[i], v[j] = 1, -1
        forms.append(v)
    return make_arrangement(m, forms, f"braid:{m}")


def is_generic(n_vars: int, forms: Sequence[Sequence]) -> tuple[bool, tuple[int, ...] | None]:
    """Every subset of at most n_vars forms is independent; else a dependent subset."""
    top = min(n_vars, len(forms))
    # a dependent small subset extends to a dependent subset of size top
    for sub in combinations(range(len(forms)), top):
        if matrix_rank([forms[i] for i in sub]) < top:
            for k in range(2, top + 1):
                for s in combinations(sub, k):
                    if matrix_rank([forms[i] for i in s]) < k:
                        return False, s
    return True, None


def generic(n: int, d: int, seed: int = 0) -> Arrangement:
    """d seeded random integer forms in k^(n+1), every <= n+1 of them independent."""
    n_vars = n + 1
    if d < n_vars:
        raise ArrangementError(f"generic({n},{d}) cannot be essential: need d >= {n_vars}")
    rng = random.Random(seed)
    while True:
        forms = []
        seen = set()
        while len(forms) < d:
            v = [rng.randint(-9, 9) for _ in range(n_vars)]
            if not any(v):
                continue
            nv = normalize_form(v)
            if nv in seen:
                continue
            seen.add(nv)
            forms.append(nv)
        if is_generic(n_vars, forms)[0]:
            return make_arrangement(n_vars, forms, f"generic:{n},{d},{seed}")


def edelman_reiner() -> Arrangement:
    forms = [v for v in iproduct((0, 1), repeat=4) if any(v)]
    forms.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
    return make_arrangement(4, forms, "edelman-reiner")


def nlf_demo() -> Arrangement:
    forms = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [1, 1, 1, 0], [0, 0, 0, 1]]
    return make_arrangement(4, forms, "nlf-demo")


FAMILIES = {
    "boolean": boolean,
    "braid": braid,
    "generic": generic,
    "edelman_reiner": edelman_reiner,
    "nlf_demo": nlf_demo,
}


def family(name: str, *params) -> Arrangement:
    key = name.replace("-", "_").lower()
    if key not in FAMILIES:
        raise ArrangementError(f"unknown family {name!r}")
    try:
        params = [int(p) for p in params]
        return FAMILIES[key](*params)
    except TypeError as exc:
        raise ArrangementError(f"invalid parameters for family {name!r}: {params}") from exc


def parse_family(spec: str) -> Arrangement:
    """'boolean:3', 'generic:2,4,7', 'edelman-reiner' ..."""
    name, _, rest = spec.partition(":")
    params = [p for p in rest.split(",") if p.strip()] if rest else []
    return family(name, *params)


# ---------------------------------------------------------------------------
# the intersection lattice


@dataclass(frozen=True)
class LatticeElement:
    basis: tuple[tuple[Fraction, ...], ...]  # reduced echelon basis of the defining forms
    members: frozenset[int]

    @property
    def rank(self) -> int:
        return len(self.basis)

    def key(self):
        return self.basis

    def __repr__(self):
        return f"<X rank {self.rank} on hyperplanes {sorted(self.members)}>"


def _canonical(rows: list[Sequence], n_vars: int) -> tuple[tuple[Fraction, ...], ...]:
    red, _ = rref([[as_rat(x) for x in r] for r in rows], n_vars)
    return tuple(tuple(r) for r in red)


def _in_span(basis, pivots, vec) -> bool:
    v = [as_rat(x) for x in vec]
    for row, p in zip(basis, pivots):
        c = v[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    return not any(v)


def _pivots(basis) -> list[int]:
    return [next(j for j, x in enumerate(r) if x) for r in basis]


class Lattice:
    """Intersection poset of a central arrangement, ordered by reverse inclusion."""

    def __init__(self, arrangement: Arrangement, elements: list[LatticeElement]):
        self.arrangement = arrangement
        self.elements = sorted(elements, key=lambda X: (X.rank, sorted(X.members)))
        self.index = {X.key(): i for i, X in enumerate(self.elements)}
        self.mobius: dict[LatticeElement, int] = {}
        for X in self.elements:
            if X.rank == 0:
                self.mobius[X] = 1
            else:
                self.mobius[X] = -sum(self.mobius[Y] for Y in self.below(X))

    @property
    def bottom(self) -> LatticeElement:
        return self.elements[0]

    @property
    def top_rank(self) -> int:
        return max(X.rank for X in self.elements)

    def leq(self, X: LatticeElement, Y: LatticeElement) -> bool:
        return X.members <= Y.members

    def below(self, X: LatticeElement) -> list[LatticeElement]:
        """All Y < X."""
        return [Y for Y in self.elements if Y.rank < X.rank and Y.members <= X.members]

    def by_rank(self, r: int) -> list[LatticeElement]:
        return [X for X in self.elements if X.rank == r]

    def rank_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for X in self.elements:
            out[X.rank] = out.get(X.rank, 0) + 1
        return out

    def find(self, X: LatticeElement | Sequence) -> LatticeElement:
        key = X.key() if isinstance(X, LatticeElement) else _canonical(list(X), self.arrangement.n_vars)
        if key not in self.index:
            raise KeyError("unknown element")
        return self.elements[self.index[key]]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def intersection_lattice(A: Arrangement) -> Lattice:
    n_vars = A.n_vars
    bottom = LatticeElement((), frozenset())
    found = {bottom.key(): bottom}
    layer = [bottom]
    while layer:
        nxt = {}
        for X in layer:
            for i in range(A.d):
                if i in X.members:
                    continue
                rows = [list(r) for r in X.basis] + [list(A.forms[i])]
                key = _canonical(rows, n_vars)
                if key in found or key in nxt:
                    continue
                piv = _pivots(key)
                members = frozenset(j for j in range(A.d) if _in_span(key, piv, A.forms[j]))
                nxt[key] = LatticeElement(key, members)
        found.update(nxt)
        layer = list(nxt.values())
    return Lattice(A, list(found.values()))


# ---------------------------------------------------------------------------
# Poincare and characteristic polynomials (coefficient lists, lowest degree first)


def poincare_poly(A: Arrangement, lattice: Lattice | None = None) -> tuple[int, ...]:
    L = lattice or intersection_lattice(A)
    top = L.top_rank
    c = [0] * (top + 1)
    for X in L:
        c[X.rank] += L.mobius[X] * (-1) ** X.rank
    return tuple(c)


def characteristic_poly(A: Arrangement, lattice: Lattice | None = None) -> tuple[int, ...]:
    L = lattice or intersection_lattice(A)
    c = [0] * (A.n_vars + 1)
    for X in L:
        c[A.n_vars - X.rank] += L.mobius[X]
    return tuple(c)


def char_from_poincare(pi: Sequence[int], n_vars: int) -> tuple[int, ...]:
    """chi(t) = t^(n+1) pi(-1/t)."""
    c = [0] * (n_vars + 1)
    for k, a in enumerate(pi):
        c[n_vars - k] += a * (-1) ** k
    return tuple(c)


def poly_eval(coeffs: Sequence, t):
    return sum(c * t**k for k, c in enumerate(coeffs))


def mu_multiset(A: Arrangement, r: int, lattice: Lattice | None = None) -> tuple[int, ...]:
    L = lattice or intersection_lattice(A)
    return tuple(sorted((L.mobius[X] for X in L.by_rank(r)), reverse=True))


def rank_profile(A: Arrangement, r: int, lattice: Lattice | None = None) -> dict[tuple[int, tuple[int, ...]], int]:
    """Rank-r elements grouped by (hyperplane count, mu values of the rank r-1 elements below)."""
    L = lattice or intersection_lattice(A)
    out: dict[tuple[int, tuple[int, ...]], int] = {}
    for X in L.by_rank(r):
        mus = tuple(sorted((L.mobius[Y] for Y in L.below(X) if Y.rank == r - 1), reverse=True))
        key = (len(X.members), mus)
        out[key] = out.get(key, 0) + 1
    return dict(sorted(out.items()))


# ---------------------------------------------------------------------------
# localization and essentialization


def localize(A: Arrangement, X: LatticeElement, lattice: Lattice | None = None) -> tuple[Arrangement, tuple[int, ...]]:
    """A_X: the hyperplanes containing X, with their indices in A."""
    if lattice is not None:
        try:
            lattice.find(X)
        except KeyError:
            raise ArrangementError("unknown element") from None
    else:
        piv = _pivots(X.basis)
        if X.members != frozenset(j for j in range(A.d) if _in_span(X.basis, piv, A.forms[j])):
            raise ArrangementError("unknown element")
    idx = tuple(sorted(X.members))
    name = f"{A.name}|X" if A.name else None
    return Arrangement(A.n_vars, tuple(A.forms[i] for i in idx), name), idx


def essentialize(A: Arrangement) -> tuple[Arrangement, int]:
    """Induced essential arrangement on span(forms), and the empty-factor dimension.

    With the echelon basis b_1..b_r of the span of the forms, every form is
    sum_k c_k b_k with c_k its entry at the k-th pivot column; the coordinates
    y_k = b_k . x extend to an invertible change of coordinates.
    """
    if A.d == 0:
        return Arrangement(0, (), A.name), A.n_vars
    basis, piv = rref([[as_rat(x) for x in f] for f in A.forms], A.n_vars)
    r = len(basis)
    forms = [[f[p] for p in piv] for f in A.forms]
    return make_arrangement(r, forms, A.name), A.n_vars - r


def change_coordinates(A: Arrangement, M: Sequence[Sequence]) -> Arrangement:
    """Forms l o M^T: the arrangement pulled back along x -> M x (M invertible)."""
    n = A.n_vars
    if matrix_rank(M) != n:
        raise ArrangementError("change of coordinates is not invertible")
    forms = [[sum(as_rat(f[i]) * as_rat(M[i][j]) for i in range(n)) for j in range(n)] for f in A.forms]
    return make_arrangement(n, forms, A.name)
