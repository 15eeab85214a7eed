"""Acceptance criteria 1-10, one PASS/FAIL line each (shown in the terminal summary)."""

import random
import time
from contextlib import contextmanager

import pytest

from conftest import ACCEPTANCE_LINES
from logarr.arrangement import (
    boolean,
    braid,
    char_from_poincare,
    characteristic_poly,
    edelman_reiner,
    essentialize,
    generic,
    intersection_lattice,
    make_arrangement,
    localize,
    mu_multiset,
    nlf_demo,
    normalize_form,
    poincare_poly,
    poly_eval,
    rank_profile,
)
from logarr.chern import (
    ChernPoly,
    HilbertPolynomial,
    RInput,
    assemble_R,
    chern_from_betti,
    chern_split,
    chi_twist_poly_p3_rank3,
    dual_chern,
    hilbert_poly_from_series,
    limit_at_one,
    poly_mul,
    solomon_terao,
    top_chern_checks,
    verify_main_theorem,
)
from logarr.errors import HypothesisFailed, LimitDoesNotExist
from logarr.logmodules import (
    DER,
    FORM,
    ModuleSelector,
    betti_probe,
    freeness_test,
    local_freeness_test,
    wedge_compare,
)
from logarr.resolutions import lebelt_check, ziegler_check

ER_PI = (1, 15, 80, 170, 104)
ER_HILBERT = HilbertPolynomial(["-6", "57/6", "-4", "1/2"])

# every arrangement touched here feeds criterion 10
SEEN: dict[str, object] = {}


def seen(name, A):
    SEEN[name] = A
    return A


@contextmanager
def criterion(number: int, title: str, budget: float):
    start = time.time()
    status, detail = "FAIL", ""
    try:
        yield
        elapsed = time.time() - start
        if elapsed > budget:
            detail = f"over budget: {elapsed:.1f}s > {budget:.0f}s"
            raise AssertionError(detail)
        status, detail = "PASS", f"{elapsed:.1f}s"
    except BaseException as exc:
        detail = detail or f"{type(exc).__name__}: {exc}"[:200]
        raise
    finally:
        ACCEPTANCE_LINES.append(f"criterion {number:2d} [{status}] {title} ({detail})")


@pytest.fixture(scope="module")
def er():
    return seen("edelman-reiner", edelman_reiner())


@pytest.fixture(scope="module")
def er_betti(er):
    return betti_probe(ModuleSelector(er, DER, 1, euler_complement=True), 6, 11)


def test_criterion_01_er_combinatorics(er):
    with criterion(1, "Edelman-Reiner Poincare polynomial and rank-3 census", 60):
        L = intersection_lattice(er)
        assert poincare_poly(er, L) == ER_PI
        assert L.rank_census()[3] == 45
        prof = rank_profile(er, 3, L)
        assert prof == {
            (3, (1, 1, 1)): 20,
            (5, (2, 2, 1, 1, 1, 1)): 15,
            (7, (2, 2, 2, 2, 2, 2, 1, 1, 1)): 10,
        }
        for X in L.by_rank(3):
            sub = essentialize(localize(er, X, L)[0])[0]
            assert mu_multiset(sub, 2) in {(1, 1, 1), (2, 2, 1, 1, 1, 1), (2, 2, 2, 2, 2, 2, 1, 1, 1)}


def test_criterion_02_er_local_freeness(er):
    with criterion(2, "Edelman-Reiner is locally free", 300):
        rep = local_freeness_test(er)
        assert rep.locally_free
        rank3 = [v for v in rep.verdicts if v["rank"] == 3]
        assert len(rank3) == 45 and all(v["free"] for v in rep.verdicts)


def test_criterion_03_er_betti(er, er_betti):
    with criterion(3, "Betti table of D^1_0 for Edelman-Reiner", 900):
        assert er_betti.entries == {(0, 5): 4, (1, 6): 1}
        assert er_betti.pdim == 1 and er_betti.complete and not er_betti.probabilistic
        # the same table with every syzygy stage over the rationals
        slow = betti_probe(ModuleSelector(er, DER, 1, euler_complement=True), 6, 11, certify=False)
        assert slow.method == "exact" and slow.entries == er_betti.entries


def test_criterion_04_er_chern_chain(er, er_betti):
    with criterion(4, "Edelman-Reiner Chern chain and Hilbert polynomial", 60):
        n = 3
        c_der0 = chern_from_betti(er_betti, n)
        c_omega0 = dual_chern(c_der0)
        assert c_omega0 == [1, 14, 66, 104]
        c_omega = c_omega0 * ChernPoly.from_coeffs(n, [1, 1])
        assert c_omega == list(ER_PI[:4])
        assert poly_mul([1, 1], c_omega0.coeffs) == list(ER_PI)
        rep = verify_main_theorem(er, "betti", gen_cutoff=6, syz_cutoff=11)
        assert rep.verified and rep.c_omega == list(ER_PI[:4])
        assert hilbert_poly_from_series(er_betti.series) == ER_HILBERT
        assert chi_twist_poly_p3_rank3(-14, 66, -104) == ER_HILBERT
        assert ER_HILBERT(0) == -6


def small_suite():
    return {
        "boolean:2": boolean(2),
        "three lines": make_arrangement(2, [[1, 0], [0, 1], [1, 1]]),
        "four lines": make_arrangement(2, [[1, 0], [0, 1], [1, 1], [1, -1]]),
        "boolean:3": boolean(3),
        "braid:3 essential": essentialize(braid(3))[0],
        "braid:4 essential": essentialize(braid(4))[0],
        "generic:1,5": generic(1, 5, 0),
        "generic:2,4": generic(2, 4, 0),
        "generic:2,5": generic(2, 5, 0),
        "generic:2,6": generic(2, 6, 0),
        "near pencil": make_arrangement(3, [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 1, 0]]),
        "deleted braid": make_arrangement(3, [[1, -1, 0], [1, 0, -1], [0, 1, -1], [1, 0, 0], [0, 1, 0]]),
    }


def test_criterion_05_solomon_terao():
    with criterion(5, "Solomon-Terao recovers chi on 12 small arrangements", 300):
        suite = small_suite()
        non_factoring = 0
        for name, A in suite.items():
            seen(name, A)
            assert A.n_vars <= 3 and A.d <= 6
            assert solomon_terao(A) == list(characteristic_poly(A)), name
            non_factoring += freeness_test(A).exponents is None
        assert len(suite) >= 10 and non_factoring >= 1


def test_criterion_06_split_bundles():
    with criterion(6, "split-bundle limits and top Chern identities", 60):
        rng = random.Random(20261016)
        count = 0
        top_poly_checked = 0
        while count < 150:
            n = rng.randint(1, 4)
            r = rng.randint(1, 6)
            tw = [rng.randint(-5, 5) for _ in range(r)]
            assert limit_at_one(assemble_R(RInput.split(tw, n))) == chern_split(tw, n), (tw, n)
            if r >= n:
                rep = top_chern_checks(tw, n)
                assert rep.top_identity, (tw, n)
                assert rep.poly_identity is not False, (tw, n)
                top_poly_checked += rep.poly_identity is True
            count += 1
        # the iX identity lives on rank r = n; make sure it was exercised
        for n in range(1, 5):
            for _ in range(10):
                tw = [rng.randint(-5, 5) for _ in range(n)]
                assert top_chern_checks(tw, n).poly_identity
                top_poly_checked += 1
        assert top_poly_checked >= 40


def test_criterion_07_terao_factorization():
    with criterion(7, "free arrangements factor their Poincare polynomial", 60):
        pool = dict(small_suite())
        pool["braid:4"] = braid(4)
        pool["boolean:4"] = boolean(4)
        free_count = 0
        for name, A in pool.items():
            seen(name, A)
            rep = freeness_test(A)
            if not rep.free:
                continue
            free_count += 1
            pi = poincare_poly(A)
            exps = [a for a in rep.exponents if a]
            prod = [1]
            for a in exps:
                prod = poly_mul(prod, [1, a])
            assert list(pi) == prod and sum(exps) == A.d, name
            assert rep.certificate, name
        E = essentialize(braid(4))[0]
        rep = freeness_test(E)
        assert rep.free and rep.exponents == (1, 2, 3) and rep.certificate
        assert poincare_poly(E) == (1, 6, 11, 6)
        assert free_count >= 6


GENERIC_CASES = [(2, 4), (2, 5), (3, 5), (3, 6)]


def test_criterion_08_ziegler_lebelt():
    with criterion(8, "Ziegler and Lebelt resolutions of generic arrangements", 600):
        for n, d in GENERIC_CASES:
            A = seen(f"generic:{n},{d}", generic(n, d, 0))
            z = ziegler_check(A, (-1, 4))
            assert z.passed and z.window[1] - z.window[0] + 1 >= 6
            for p in range(1, n):
                rep = lebelt_check(A, p)
                assert rep.passed, (n, d, p, rep.failures)
                assert rep.pdim == p and rep.top_pdim == 0 and rep.wedge_ok
            lo = -d
            top = betti_probe(ModuleSelector(A, FORM, n + 1), lo, lo + A.n_vars + 1, max_index=1)
            assert top.pdim == 0
            # the p = 1 wedge comparison is the identity
            for m in range(-1, 2):
                a, b = wedge_compare(A, 1, m, FORM)
                assert a == b


def test_criterion_09_negative_control():
    with criterion(9, "nlf_demo is refused by the main-theorem pipeline", 120):
        A = seen("nlf-demo", nlf_demo())
        rep = local_freeness_test(A)
        assert not rep.locally_free
        assert rep.witness["rank"] == 3 and rep.witness["hyperplanes"] == [0, 1, 2, 3]
        for strategy in ("limit", "betti"):
            with pytest.raises((HypothesisFailed, LimitDoesNotExist)) as info:
                verify_main_theorem(A, strategy)
            assert "hypothesis failed" in str(info.value) or "limit does not exist" in str(info.value)


def test_criterion_10_global_identities():
    with criterion(10, "pi(-1) = 0 and chi = t^(n+1) pi(-1/t) on every arrangement above", 120):
        pool = dict(SEEN)
        pool.update(small_suite())
        pool.setdefault("edelman-reiner", edelman_reiner())
        pool.setdefault("nlf-demo", nlf_demo())
        rng = random.Random(7)
        for k in range(20):
            n_vars = rng.randint(2, 4)
            forms, keys = [], set()
            while len(forms) < rng.randint(1, 6):
                v = [rng.randint(-2, 2) for _ in range(n_vars)]
                if any(v) and normalize_form(v) not in keys:
                    keys.add(normalize_form(v))
                    forms.append(v)
            pool[f"random {k}"] = make_arrangement(n_vars, forms)
        for name, A in pool.items():
            pi = poincare_poly(A)
            assert poly_eval(pi, -1) == 0, name
            assert characteristic_poly(A) == char_from_poincare(pi, A.n_vars), name
        assert len(pool) >= 30
