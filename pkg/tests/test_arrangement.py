import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from logarr.arrangement import (
    ArrangementError,
    boolean,
    braid,
    char_from_poincare,
    characteristic_poly,
    dump_arrangement,
    edelman_reiner,
    essentialize,
    generic,
    intersection_lattice,
    is_generic,
    load_arrangement,
    localize,
    make_arrangement,
    mu_multiset,
    nlf_demo,
    normalize_form,
    parse_family,
    poincare_poly,
    poly_eval,
    rank_profile,
)


@st.composite
def arrangements(draw, max_vars=3, max_d=6, entry=3):
    n_vars = draw(st.integers(2, max_vars))
    raw = draw(st.lists(st.lists(st.integers(-entry, entry), min_size=n_vars, max_size=n_vars), min_size=1, max_size=max_d))
    forms, seen = [], set()
    for v in raw:
        if any(v) and normalize_form(v) not in seen:
            seen.add(normalize_form(v))
            forms.append(v)
    if not forms:
        forms = [[1] + [0] * (n_vars - 1)]
    return make_arrangement(n_vars, forms)


def count_complement(A, q):
    """Points of F_q^(n+1) avoiding every hyperplane; equals chi(A, q) for good q."""
    grids = np.meshgrid(*[np.arange(q, dtype=np.int64)] * A.n_vars, indexing="ij")
    alive = np.ones(grids[0].shape, dtype=bool)
    for f in A.forms:
        val = sum(int(c) * g for c, g in zip(f, grids)) % q
        alive &= val != 0
    return int(alive.sum())


def test_make_arrangement_examples():
    B2 = make_arrangement(2, [[1, 0], [0, 1]])
    assert B2.d == 2 and B2.essential
    A = make_arrangement(2, [[1, 0], [0, 1], [1, 1]])
    x, y = A.linear_form(0), A.linear_form(1)
    assert A.Q == x * y * (x + y)
    with pytest.raises(ArrangementError, match="duplicate hyperplane"):
        make_arrangement(4, [[1, 0, 0, 0], [2, 0, 0, 0]])


def test_families():
    ER = edelman_reiner()
    assert (ER.d, ER.n_vars, ER.essential) == (15, 4, True)
    B3 = boolean(3)
    assert B3.Q == B3.linear_form(0) * B3.linear_form(1) * B3.linear_form(2)
    assert braid(3).d == 3 and not braid(3).essential
    assert parse_family("generic:2,4,7") == generic(2, 4, 7)
    assert parse_family("edelman-reiner") == ER
    with pytest.raises(ArrangementError):
        parse_family("nosuch")


def test_file_round_trip(tmp_path):
    A = generic(2, 5, 3)
    path = tmp_path / "a.json"
    path.write_text(dump_arrangement(A))
    assert load_arrangement(path) == A
    assert json.loads(dump_arrangement(A)) == json.loads(dump_arrangement(load_arrangement(path)))


def test_boolean_lattice():
    L = intersection_lattice(boolean(2))
    assert len(L) == 4
    assert sorted(L.mobius[X] for X in L) == [-1, -1, 1, 1]


def test_generic_lattice():
    L = intersection_lattice(generic(2, 4, 0))
    assert L.rank_census() == {0: 1, 1: 4, 2: 6, 3: 1}
    assert L.mobius[L.by_rank(3)[0]] == -3


def test_poincare_examples():
    assert poincare_poly(edelman_reiner()) == (1, 15, 80, 170, 104)
    for m in range(1, 5):
        pi = poincare_poly(boolean(m))
        assert pi == tuple(np.polynomial.polynomial.polypow([1, 1], m).astype(int))
    A = make_arrangement(2, [[1, 0], [0, 1], [1, 1]])
    assert poincare_poly(A) == (1, 3, 2)
    assert characteristic_poly(A) == (2, -3, 1)
    assert poincare_poly(braid(4)) == (1, 6, 11, 6)


def test_edelman_reiner_census():
    A = edelman_reiner()
    L = intersection_lattice(A)
    assert L.rank_census()[3] == 45
    prof = rank_profile(A, 3, L)
    assert prof == {
        (3, (1, 1, 1)): 20,
        (5, (2, 2, 1, 1, 1, 1)): 15,
        (7, (2, 2, 2, 2, 2, 2, 1, 1, 1)): 10,
    }
    # the same mu multisets appear on the essentialized localizations
    seen = {}
    for X in L.by_rank(3):
        sub, _ = localize(A, X, L)
        E, _ = essentialize(sub)
        seen[E.d] = mu_multiset(E, 2)
    assert seen == {3: (1, 1, 1), 5: (2, 2, 1, 1, 1, 1), 7: (2, 2, 2, 2, 2, 2, 1, 1, 1)}


def test_localize_and_essentialize():
    E, k = essentialize(braid(3))
    assert (E.n_vars, E.d, k, E.essential) == (2, 3, 1, True)
    A = boolean(3)
    L = intersection_lattice(A)
    sub, idx = localize(A, L.bottom, L)
    assert sub.d == 0 and idx == () and poincare_poly(sub) == (1,)


def test_nlf_demo_is_not_generic():
    ok, witness = is_generic(4, nlf_demo().forms)
    assert not ok and len(witness) == 4


@settings(max_examples=60, deadline=None)
@given(arrangements())
def test_global_identities(A):
    pi = poincare_poly(A)
    chi = characteristic_poly(A)
    assert poly_eval(pi, -1) == 0
    assert chi == char_from_poincare(pi, A.n_vars)
    assert pi[1] == A.d


@settings(max_examples=15, deadline=None)
@given(arrangements(max_vars=3, max_d=5, entry=2))
def test_finite_field_count(A):
    # every minor of a 3x3 matrix with entries |a| <= 2 is below 50 < 53
    q = 53
    assert count_complement(A, q) == poly_eval(characteristic_poly(A), q)
