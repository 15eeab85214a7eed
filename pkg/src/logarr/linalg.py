"""Sparse-to-dense exact linear algebra over Q, or over F_p as an accelerator.

The heavy graded-piece computations go through FLINT matrices. ``Field("exact")``
works over the rationals; ``Field("modular")`` works modulo a word-sized prime
and marks every result derived from it as probabilistic.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

import flint

SparseRow = dict  # column index -> int | Fraction


def _random_prime(seed: int) -> int:
    rng = random.Random(seed)
    p = rng.randrange(2**61, 2**62) | 1
    while not flint.fmpz(p).is_prime():
        p += 2
    return p


class Field:
    """Coefficient field for the large linear-algebra kernels."""

    def __init__(self, backend: str = "exact", seed: int = 0):
        if backend not in ("exact", "modular"):
            raise ValueError(f"unknown backend {backend!r}")
        self.backend = backend
        self.prime = _random_prime(seed) if backend == "modular" else None

    @property
    def probabilistic(self) -> bool:
        return self.backend == "modular"

    def __repr__(self):
        return "Field(exact)" if self.prime is None else f"Field(modular, p={self.prime})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.backend, self.prime) == (other.backend, other.prime)

    def __hash__(self):
        return hash((self.backend, self.prime))

    # -- construction -----------------------------------------------------

    def _coerce(self, x):
        if self.prime is None:
            if isinstance(x, Fraction):
                return flint.fmpq(x.numerator, x.denominator)
            return x
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.prime) % self.prime
        return int(x) % self.prime

    def zeros(self, rows: int, cols: int):
        if self.prime is None:
            return flint.fmpq_mat(rows, cols)
        return flint.nmod_mat(rows, cols, self.prime)

    def dense(self, rows: Sequence[Sequence], cols: int):
        if not rows or not cols:
            return self.zeros(len(rows), cols)
        flat = [self._coerce(x) for r in rows for x in r]
        if self.prime is None:
            return flint.fmpq_mat(len(rows), cols, flat)
        return flint.nmod_mat(len(rows), cols, flat, self.prime)

    def sparse(self, rows: Iterable[SparseRow], cols: int):
        rows = list(rows)
        if not rows or not cols:
            return self.zeros(len(rows), cols)
        flat = [0] * (len(rows) * cols)
        for i, r in enumerate(rows):
            base = i * cols
            for c, v in r.items():
                if v:
                    flat[base + c] = self._coerce(v)
        if self.prime is None:
            return flint.fmpq_mat(len(rows), cols, flat)
        return flint.nmod_mat(len(rows), cols, flat, self.prime)

    # -- elimination ------------------------------------------------------

    def rref(self, M):
        """(list of nonzero reduced rows as python lists, pivot columns)."""
        if M.nrows() == 0 or M.ncols() == 0:
            return [], []
        R, rank = M.rref()
        rows = [list(r) for r in R.tolist()[:rank]]
        pivots = []
        for r in rows:
            for j, x in enumerate(r):
                if x != 0:
                    pivots.append(j)
                    break
        return rows, pivots

    def rank(self, M) -> int:
        if M.nrows() == 0 or M.ncols() == 0:
            return 0
        return M.rank()

    def nullspace(self, M, ncols: int | None = None):
        """Kernel basis as a matrix whose rows are the basis vectors.

        Row k is the vector that is 1 at the k-th free column, 0 at the other
        free columns, solved at the pivot columns.
        """
        cols = M.ncols() if ncols is None else ncols
        if M.nrows() == 0 or cols == 0:
            out = self.zeros(cols, cols)
            for i in range(cols):
                out[i, i] = 1
            return out
        R, rank = M.rref()
        red = R.tolist()[:rank]
        pivots = []
        for r in red:
            pivots.append(next(j for j, x in enumerate(r) if x != 0))
        pivset = set(pivots)
        free = [j for j in range(cols) if j not in pivset]
        nf = len(free)
        if nf == 0:
            return self.zeros(0, cols)
        flat = [0] * (nf * cols)
        for k, f in enumerate(free):
            flat[k * cols + f] = 1
        for row, p in zip(red, pivots):
            for k, f in enumerate(free):
                v = row[f]
                if v != 0:
                    flat[k * cols + p] = -v
        if self.prime is None:
            return flint.fmpq_mat(nf, cols, flat)
        return flint.nmod_mat(nf, cols, flat, self.prime)

    def to_python(self, x):
        if self.prime is None:
            return Fraction(int(x.p), int(x.q))
        return int(x)

    def rows_python(self, M) -> list[list]:
        return [[self.to_python(x) for x in r] for r in M.tolist()]


EXACT = Field("exact")


def stack(field: Field, mats: Sequence, cols: int):
    """Vertical concatenation of matrices with a common column count."""
    mats = [m for m in mats if m.nrows()]
    total = sum(m.nrows() for m in mats)
    if not mats:
        return field.zeros(0, cols)
    if len(mats) == 1:
        return mats[0]
    flat = []
    for m in mats:
        flat.extend(m.entries())
    if field.prime is None:
        return flint.fmpq_mat(total, cols, flat)
    return flint.nmod_mat(total, cols, flat, field.prime)
