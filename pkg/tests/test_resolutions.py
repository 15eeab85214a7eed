import pytest
from hypothesis import given
from hypothesis import strategies as st

from logarr.arrangement import boolean, generic, nlf_demo
from logarr.errors import GenericityViolated, HypothesisFailed
from logarr.exact import MPoly, dim_S
from logarr.logmodules import FORM, ModuleSelector, betti_probe, graded_dim
from logarr.resolutions import lebelt_check, lebelt_terms, one_step_resolution, ziegler_check, ziegler_matrix


def test_ziegler_matrix_shape():
    z = ziegler_matrix(generic(2, 4, 0))
    assert len(z.tau) == 4 and all(len(row) == 1 for row in z.tau)
    assert z.source_twists == [0] and z.target_twists == [1] * 4
    # first n+1 rows are a_{i,j} x_j, the last is -l
    for j in range(3):
        assert z.tau[j][0].homogeneous_degree() == 1
    assert ziegler_matrix(boolean(3)).source_twists == []


def test_ziegler_matrix_rejects_dependent_forms():
    with pytest.raises(GenericityViolated, match="genericity violated"):
        ziegler_matrix(nlf_demo())


def test_ziegler_counts_small():
    A = generic(2, 4, 0)
    sel = ModuleSelector(A, FORM, 1)
    assert graded_dim(sel, -1) == 4
    assert graded_dim(sel, 0) == 11
    rep = ziegler_check(A, (-2, 4))
    assert rep.passed and rep.composition_zero


def test_ziegler_free_case():
    A = boolean(3)
    for m in range(-2, 3):
        assert graded_dim(ModuleSelector(A, FORM, 1), m) == 3 * dim_S(3, m + 1)
    assert ziegler_check(A, (-2, 3)).passed


def test_lebelt_terms_examples():
    t = lebelt_terms([1, 1, 1, 1], [0], 2)
    assert [(x.index, x.rank) for x in t.terms] == [(0, 6), (1, 4), (2, 1)]
    assert t.terms[0].twists == [2] * 6 and t.terms[1].twists == [1] * 4 and t.terms[2].twists == [0]
    t = lebelt_terms([0], [-6, -7], 2)
    assert t.terms[2].twists == [-12, -13, -14]
    t = lebelt_terms([1, 1, 1], [0], 1)
    assert [x.twists for x in t.terms] == [[1, 1, 1], [0]]


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=5), st.lists(st.integers(-3, 3), max_size=3), st.integers(1, 3))
def test_lebelt_ranks(F0, F1, p):
    from math import comb

    t = lebelt_terms(F0, F1, p)
    for term in t.terms:
        i = term.index
        divided = comb(len(F1) + i - 1, i) if F1 else int(i == 0)
        assert term.rank == divided * comb(len(F0), p - i)


def test_lebelt_small_generic():
    rep = lebelt_check(generic(2, 4, 0), 1)
    assert rep.passed and rep.pdim == 1 and rep.top_pdim == 0
    with pytest.raises(HypothesisFailed):
        lebelt_check(generic(2, 4, 0), 2)
    with pytest.raises(HypothesisFailed, match="not locally free"):
        lebelt_check(nlf_demo(), 1)


def test_one_step_resolution_of_generic():
    b = one_step_resolution(generic(2, 5, 1))
    assert b.entries == {(0, -1): 5, (1, 0): 2}


def test_top_exterior_power_is_free():
    A = generic(2, 4, 0)
    b = betti_probe(ModuleSelector(A, FORM, 3), -4, 0, max_index=1)
    assert b.entries == {(0, -4): 1} and b.pdim == 0
