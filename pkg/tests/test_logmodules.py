from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logarr.arrangement import boolean, braid, edelman_reiner, essentialize, generic, make_arrangement, nlf_demo
from logarr.errors import HypothesisFailed
from logarr.exact import LaurentPoly, MPoly, RatMatrix, dim_S, kernel_basis, monomials
from logarr.linalg import Field
from logarr.logmodules import (
    DER,
    FORM,
    ModuleSelector,
    betti_probe,
    duality_check_free,
    freeness_test,
    graded_dim,
    hilbert_series,
    integer_factorization,
    is_tight,
    local_freeness_test,
    minimal_generators,
    stable_hilbert_series,
    wedge_compare,
)

from test_arrangement import arrangements

THREE_LINES = make_arrangement(2, [[1, 0], [0, 1], [1, 1]])


def _pos_sign(i, K):
    return -1 if sorted(K).index(i) % 2 else 1


def literal_dim(A, side, p, m):
    """Dimension of the degree-m piece straight from the defining divisibility.

    Unknowns are the coefficient polynomials plus the quotients by Q; the
    module piece is the projection of the solution space, which is injective
    because Q is a nonzero divisor.
    """
    n, Q, d = A.n_vars, A.Q, A.d
    dQ = [Q.diff(i) for i in range(n)]
    cdeg = m if side == DER else m + d
    if cdeg < 0:
        return 0
    comps = list(combinations(range(n), p))
    mons = monomials(n, cdeg)
    if side == DER:
        conds = list(combinations(range(n), p - 1)) if p >= 1 else []
    else:
        conds = list(combinations(range(n), p + 1))
    qdeg = cdeg + d - 1 - d
    qmons = monomials(n, qdeg) if qdeg >= 0 else ()
    n_f = len(comps) * len(mons)
    cols = n_f + len(conds) * len(qmons)
    out_mons = {e: k for k, e in enumerate(monomials(n, cdeg + d - 1))}
    rows = {}

    def put(cond_idx, poly, col):
        for e, c in poly.terms.items():
            key = (cond_idx, out_mons[e])
            rows.setdefault(key, [0] * cols)[col] += c

    for ci, K in enumerate(conds):
        for a, I in enumerate(comps):
            if side == DER:
                extra = [i for i in I if i not in K]
                if not set(K) <= set(I):
                    continue
                i = extra[0]
            else:
                if not set(I) <= set(K):
                    continue
                (i,) = [k for k in K if k not in I]
            sign = _pos_sign(i, I if side == DER else K)
            for b, e in enumerate(mons):
                put(ci, dQ[i] * MPoly(n, {e: sign}), a * len(mons) + b)
        for b, e in enumerate(qmons):
            put(ci, Q * MPoly(n, {e: -1}), n_f + ci * len(qmons) + b)
    if not rows:
        return n_f
    return len(kernel_basis(RatMatrix(list(rows.values()), cols)))


SMALL = [boolean(2), THREE_LINES, braid(3), boolean(3), generic(2, 4, 0)]


@pytest.mark.parametrize("A", SMALL, ids=lambda A: A.name or "lines")
@pytest.mark.parametrize("side", [DER, FORM])
def test_dims_match_literal_definition(A, side):
    for p in range(A.n_vars + 1):
        lo = 0 if side == DER else -A.d
        for m in range(lo, lo + 3):
            assert graded_dim(ModuleSelector(A, side, p), m) == literal_dim(A, side, p, m), (p, m)


@settings(max_examples=12, deadline=None)
@given(arrangements(max_vars=3, max_d=4, entry=2), st.integers(0, 3), st.integers(0, 2))
def test_random_dims_match_literal_definition(A, p, k):
    p = min(p, A.n_vars)
    for side in (DER, FORM):
        m = k if side == DER else k - A.d
        assert graded_dim(ModuleSelector(A, side, p), m) == literal_dim(A, side, p, m)


def test_graded_dim_examples():
    B2 = boolean(2)
    assert graded_dim(ModuleSelector(B2, DER, 1), 1) == 2
    assert graded_dim(ModuleSelector(B2, DER, 2), 2) == 1
    assert graded_dim(ModuleSelector(B2, DER, 2), 1) == 0
    assert graded_dim(ModuleSelector(edelman_reiner(), DER, 1), 5) == 39


def test_invalid_degree():
    with pytest.raises(ValueError, match="invalid exterior degree"):
        ModuleSelector(boolean(2), DER, 3)


@pytest.mark.parametrize("A", SMALL[:4], ids=lambda A: A.name or "lines")
def test_euler_complement_splits_off(A):
    for m in range(0, 5):
        full = graded_dim(ModuleSelector(A, DER, 1), m)
        rest = graded_dim(ModuleSelector(A, DER, 1, euler_complement=True), m)
        assert full == rest + dim_S(A.n_vars, m - 1)


def test_modular_backend_agrees():
    A = generic(2, 5, 1)
    fld = Field("modular", seed=3)
    for side in (DER, FORM):
        for m in range(-5, 4):
            sel = ModuleSelector(A, side, 1)
            assert graded_dim(sel, m, fld) == graded_dim(sel, m)


def test_hilbert_series_examples():
    h = hilbert_series(ModuleSelector(boolean(2), DER, 1), 6)
    assert h.numerator == LaurentPoly({1: 2}) and h.denom_power == 2
    h = stable_hilbert_series(ModuleSelector(generic(2, 4, 0), FORM, 1), 8)
    assert h.numerator == LaurentPoly({-1: 4, 0: -1})


def test_minimal_generator_examples():
    assert minimal_generators(ModuleSelector(boolean(2), DER, 1), 3).degrees == [1, 1]
    assert minimal_generators(ModuleSelector(generic(2, 4, 0), FORM, 1), 2).degrees == [-1] * 4


def test_generators_are_log_derivations():
    A = THREE_LINES
    for theta in minimal_generators(ModuleSelector(A, DER, 1), 3).elements():
        image = sum((t * A.Q.diff(i) for i, t in enumerate(theta)), MPoly.zero(2))
        image.divide_exact(A.Q)  # raises if Q does not divide theta(Q)


def test_freeness_examples():
    rep = freeness_test(boolean(3))
    assert rep.free and rep.exponents == (1, 1, 1) and rep.certificate
    rep = freeness_test(essentialize(braid(3))[0])
    assert rep.free and rep.exponents == (1, 2)
    rep = freeness_test(braid(4))
    assert rep.free and rep.exponents == (1, 2, 3)
    assert not freeness_test(edelman_reiner()).free
    assert not freeness_test(generic(2, 4, 0)).free


def test_integer_factorization():
    assert integer_factorization([1, 6, 11, 6]) == (1, 2, 3)
    assert integer_factorization([1, 4, 6, 3]) is None
    assert integer_factorization([1, 15, 80, 170, 104]) is None


def test_local_freeness():
    assert local_freeness_test(generic(2, 5, 0)).locally_free
    assert local_freeness_test(boolean(3)).locally_free
    rep = local_freeness_test(nlf_demo())
    assert not rep.locally_free
    assert rep.witness["rank"] == 3 and rep.witness["hyperplanes"] == [0, 1, 2, 3]


def test_betti_examples():
    b = betti_probe(ModuleSelector(boolean(2), DER, 1), 2, 5)
    assert b.entries == {(0, 1): 2} and b.pdim == 0 and b.complete
    b = betti_probe(ModuleSelector(generic(2, 4, 0), FORM, 1), 0, 4)
    assert b.entries == {(0, -1): 4, (1, 0): 1} and b.pdim == 1


def test_betti_certified_and_exact_paths_agree():
    sel = ModuleSelector(generic(2, 5, 2), FORM, 1)
    fast = betti_probe(sel, 0, 4)
    slow = betti_probe(sel, 0, 4, certify=False)
    assert fast.method == "modular-certified" and slow.method == "exact"
    assert fast.entries == slow.entries and not fast.probabilistic
    mod = betti_probe(sel, 0, 4, field=Field("modular"))
    assert mod.probabilistic and mod.entries == slow.entries


def test_is_tight():
    assert is_tight({(0, 5): 4, (1, 6): 1})
    assert not is_tight({(0, 5): 4, (1, 5): 1})


def test_wedge_compare_examples():
    A = generic(2, 4, 0)
    assert wedge_compare(A, 2, -2, FORM) == (6, 6)
    assert wedge_compare(A, 2, -1, FORM) == (14, 14)
    for m in range(0, 3):
        a, b = wedge_compare(THREE_LINES, 1, m, DER)
        assert a == b


def test_duality_on_free_arrangements():
    assert duality_check_free(boolean(2), 1)
    assert duality_check_free(boolean(3), 2)
    assert duality_check_free(essentialize(braid(3))[0], 1)
    with pytest.raises(HypothesisFailed):
        duality_check_free(generic(2, 4, 0), 1)
