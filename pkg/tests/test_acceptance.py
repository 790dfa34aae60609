"""The ten acceptance criteria, one test each.

A summary line per criterion is printed at the end of the pytest run
(see ``conftest.py``).
"""

import contextlib
import io
import json
import random
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

import pytest
import sympy

from crnreal import (MassActionSystem, Status, check_dynamical_equivalence, check_flux_equivalence, classify_flux,
                     classify_state, deficiency, dynamical_problem, eliminate_virtual_source_flux_cb,
                     eliminate_virtual_source_flux_db, eliminate_virtual_source_ma_rev,
                     eliminate_virtual_source_ma_wr, flux_cb_problem, flux_from_state, is_reversible,
                     is_weakly_reversible, load, potentials, realize_flux_cb, realize_ma_cb_search, realize_ma_wr,
                     scaling_certificate, source_vertices, stoichiometric_subspace_dim, toric_consistent)
from crnreal.cli import main
from crnreal.exactla import fm_oracle, solve_feasibility
from crnreal.network import flux_from_monomials
from cli_cases import CASES
from named_systems import DATA, FIG3_STATE, SQUARE_SOURCES, fig3_ma, fig3_flux, square, square_flux
from randomgen import (cb_flux, db_flux, equivalent_variant, perturbed_variant, random_mass_action,
                       random_problem, random_state, rev_mass_action, wr_mass_action)

HERE = Path(__file__).parent


def _net(name):
    sys_ = load(DATA / name).system
    return getattr(sys_, "network", sys_)


def deficiency_oracle(G) -> int:
    """dim(ker Y cap im I_G), via sympy ranks."""
    inc = sympy.zeros(len(G.vertices), len(G.edges))
    for k, (s, t) in enumerate(G.edges):
        inc[s, k], inc[t, k] = -1, 1
    Y = sympy.Matrix([[sympy.Rational(v[i].numerator, v[i].denominator) for v in G.vertices]
                      for i in range(G.dimension)])
    return inc.rank() - (Y * inc).rank()


# ------------------------------------------------------------------ 1

@pytest.mark.criterion(1, "structural fixtures")
def test_criterion_01_structure():
    t0 = time.perf_counter()
    lv = _net("lotka-network.crn")
    assert stoichiometric_subspace_dim(lv) == 2
    assert not is_reversible(lv) and not is_weakly_reversible(lv)
    b, c, a = _net("fig2b.crn"), _net("fig2c.crn"), _net("fig2a.crn")
    assert is_reversible(b) and is_weakly_reversible(b)
    assert is_weakly_reversible(c)
    assert not is_reversible(a) and not is_weakly_reversible(a)
    assert time.perf_counter() - t0 < 1


# ------------------------------------------------------------------ 2

@pytest.mark.criterion(2, "deficiency values")
def test_criterion_02_deficiency():
    t0 = time.perf_counter()
    for name, delta in (("lotka-network.crn", 1), ("fig2a.crn", 2), ("fig2b.crn", 1)):
        G = _net(name)
        assert deficiency(G) == delta
        assert deficiency_oracle(G) == delta
    assert time.perf_counter() - t0 < 1


# ------------------------------------------------------------------ 3

@pytest.mark.criterion(3, "Figure 3 flux and the matching mass-action state")
def test_criterion_03_fig3():
    c = classify_flux(fig3_flux())
    assert c.is_complex_balanced and not c.is_detailed_balanced
    assert classify_flux(load(DATA / "fig3-flux.crn").system) == c
    assert classify_state(fig3_ma(), FIG3_STATE).is_complex_balanced
    assert classify_state(load(DATA / "fig3-ma.crn").system, FIG3_STATE).is_complex_balanced


# ------------------------------------------------------------------ 4

GRID = [Fraction(v) for v in (1, 2, 3, 4, 5, 6, 7, 8, 10)]
PERTURBED = [(2, 1, 3, 1), (1, 2, 1, 3), (4, 1, 5, 2)]


def square_flux_problem(J):
    return flux_cb_problem(square_flux(J)).problem


@lru_cache(maxsize=None)
def _criterion_4_results():
    grid = {}
    for J1 in GRID:
        for J2 in GRID:
            J = (J1, J2, J1, J2)
            grid[J] = realize_flux_cb(square_flux(J))
    perturbed = {J: realize_flux_cb(square_flux(J)) for J in PERTURBED}
    return grid, perturbed


@pytest.mark.criterion(4, "square flux region on a 9x9 grid")
def test_criterion_04_region():
    t0 = time.perf_counter()
    grid, perturbed = _criterion_4_results()
    ratios = {J[0] / J[1] for J in grid}
    assert min(ratios) == Fraction(1, 10) and max(ratios) == 10
    assert Fraction(1, 5) in ratios and 5 in ratios
    for J, res in grid.items():
        expected = fm_oracle(square_flux_problem(J)).feasible
        assert expected == (Fraction(1, 5) <= J[0] / J[1] <= 5)
        assert res.status is (Status.FOUND if expected else Status.INFEASIBLE), J
    for J, res in perturbed.items():
        assert res.status is Status.INFEASIBLE
        assert not fm_oracle(square_flux_problem(J)).feasible
    assert time.perf_counter() - t0 < 10


# ------------------------------------------------------------------ 5

def _criterion_5_rates():
    """20 rate vectors with k1 k3 / (k2 k4) = r^2 in [1/25, 25], both ends included.

    r is rational so that the balanced states have rational monomial values
    and an exact witness can exist.
    """
    rng = random.Random(5)
    out = []
    for i in range(20):
        k2, k3, k4 = (Fraction(rng.randint(1, 12), rng.randint(1, 4)) for _ in range(3))
        if i == 0:
            r = Fraction(5)
        elif i == 1:
            r = Fraction(1, 5)
        else:
            while True:
                r = Fraction(rng.randint(1, 25), rng.randint(1, 25))
                if Fraction(1, 5) <= r <= 5:
                    break
        out.append((r * r * k2 * k4 / k3, k2, k3, k4))
    return out


@lru_cache(maxsize=None)
def _criterion_5_results():
    found = [(k, realize_ma_cb_search(square(k))) for k in _criterion_5_rates()]
    unknown = realize_ma_cb_search(square((26, 1, 1, 1)))
    return found, unknown


def _reverify(M, res):
    W = res.system
    assert check_dynamical_equivalence(M, W)
    if res.state is not None:
        assert classify_state(W, res.state).is_complex_balanced
    else:
        # irrational state: verify through the exact monomial values x^y
        assert toric_consistent(SQUARE_SOURCES, res.monomials)
        G = W.network
        mons = {i: res.monomials[G.vertices[i]] for i in source_vertices(G)}
        assert classify_flux(flux_from_monomials(W, mons)).is_complex_balanced
        for y, m in res.monomials.items():
            approx = 1.0
            for xi, yi in zip(res.state_approx, y):
                approx *= xi ** float(yi)
            assert abs(approx - float(m)) <= 1e-9 * float(m)


@pytest.mark.criterion(5, "state search on the feasible side, Unknown beyond it")
def test_criterion_05_search():
    t0 = time.perf_counter()
    found, unknown = _criterion_5_results()
    ratios = [k[0] * k[2] / (k[1] * k[3]) for k, _ in found]
    assert len(found) == 20 and Fraction(25) in ratios and Fraction(1, 25) in ratios
    assert all(Fraction(1, 25) <= q <= 25 for q in ratios)
    for k, res in found:
        assert res.status is Status.FOUND, k
        _reverify(square(k), res)
    assert unknown.status is Status.UNKNOWN
    assert time.perf_counter() - t0 < 60


# ------------------------------------------------------------------ 6

N_ELIM = 1000


@pytest.mark.criterion(6, "elimination property suite, 1000 instances per variant")
def test_criterion_06_elimination():
    t0 = time.perf_counter()
    for seed in range(N_ELIM):
        for gen, fn, db in ((cb_flux, eliminate_virtual_source_flux_cb, False),
                            (db_flux, eliminate_virtual_source_flux_db, True)):
            F, ystar = gen(random.Random(seed))
            assert F.network.dimension <= 4 and len(F.network.vertices) <= 8
            out, _ = fn(F, ystar)
            assert check_flux_equivalence(F, out)
            assert classify_flux(out).is_complex_balanced
            assert not db or classify_flux(out).is_detailed_balanced
            before = {F.network.vertices[i]: p for i, p in potentials(F).items()}
            assert all(before[out.network.vertices[i]] == p for i, p in potentials(out).items())
        M, ystar = wr_mass_action(random.Random(seed))
        assert M.network.dimension <= 4 and len(M.network.vertices) <= 8
        out, _ = eliminate_virtual_source_ma_wr(M, ystar)
        assert check_dynamical_equivalence(M, out) and is_weakly_reversible(out)
        assert deficiency(out) == deficiency(M) - 1
        M, ystar = rev_mass_action(random.Random(seed))
        assert M.network.dimension <= 4 and len(M.network.vertices) <= 8
        out, _ = eliminate_virtual_source_ma_rev(M, ystar)
        assert check_dynamical_equivalence(M, out) and is_reversible(out)
    assert time.perf_counter() - t0 < 60


# ------------------------------------------------------------------ 7

@pytest.mark.criterion(7, "dynamical equivalence iff flux equivalence at one state")
def test_criterion_07_equivalence():
    t0 = time.perf_counter()
    rng = random.Random(7)
    agree = {True: 0, False: 0}
    for _ in range(500):
        M = random_mass_action(rng)
        M2 = equivalent_variant(rng, M) if rng.random() < 0.5 else perturbed_variant(rng, M)
        x = random_state(rng, M.network.dimension)
        dyn = check_dynamical_equivalence(M, M2)
        assert dyn == check_flux_equivalence(flux_from_state(M, x), flux_from_state(M2, x))
        agree[dyn] += 1
    assert min(agree.values()) > 100  # both sides exercised
    assert time.perf_counter() - t0 < 10


# ------------------------------------------------------------------ 8

@pytest.mark.criterion(8, "exact simplex agrees with Fourier-Motzkin")
def test_criterion_08_lp_cross_validation():
    t0 = time.perf_counter()
    rng = random.Random(8)
    for _ in range(1000):
        p = random_problem(rng)
        assert p.nvars <= 12
        assert solve_feasibility(p).feasible == fm_oracle(p).feasible
    grid, perturbed = _criterion_4_results()
    found, unknown = _criterion_5_results()
    problems = [r.problem for r in list(grid.values()) + list(perturbed.values())]
    problems += [r.problem for _, r in found]
    problems += [dynamical_problem(square(k)).problem for k, _ in found]
    problems.append(dynamical_problem(square((26, 1, 1, 1))).problem)
    checked = 0
    for p in problems:
        if p is not None and p.nvars <= 12:
            assert solve_feasibility(p).feasible == fm_oracle(p).feasible
            checked += 1
    assert checked == len(problems) == 81 + 3 + 20 + 20 + 1
    assert time.perf_counter() - t0 < 60


# ------------------------------------------------------------------ 9

@pytest.mark.criterion(9, "weakly reversible realizations of Figure 2(a)")
def test_criterion_09_wr():
    t0 = time.perf_counter()
    rng = random.Random(9)
    for _ in range(10):
        k = tuple(Fraction(rng.randint(1, 30), rng.randint(1, 10)) for _ in range(4))
        M = square(k)
        res = realize_ma_wr(M)
        assert res.status is Status.FOUND
        W = res.system
        assert check_dynamical_equivalence(M, W) and is_weakly_reversible(W)
        alpha = scaling_certificate(W)
        assert alpha is not None and all(a >= 1 for a in alpha.values())
        scaled = MassActionSystem.from_weight_map(W.species, {e: W.weight_map()[e] * a for e, a in alpha.items()})
        assert all(p == 0 for p in potentials(flux_from_state(scaled, (1, 1))).values())
    assert time.perf_counter() - t0 < 30


# ------------------------------------------------------------------ 10

def _run_cli(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        try:
            code = main(argv)
        except SystemExit as exc:  # argparse --help and friends
            code = int(exc.code or 0)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.criterion(10, "CLI golden outputs and exit codes")
def test_criterion_10_cli(monkeypatch):
    monkeypatch.chdir(HERE)
    monkeypatch.delenv("CRN_REALIZE_THREADS", raising=False)
    status_exit = {"ok": 0, "true": 0, "Found": 0, "false": 1, "Infeasible": 1, "Unknown": 2}
    for name, argv in CASES.items():
        first, second = _run_cli(argv), _run_cli(argv)
        assert first == second, name
        code, out, err = first
        golden = (HERE / "golden" / f"{name}.txt").read_text(encoding="utf-8")
        assert golden == f"$ exit {code}\n--- stdout\n{out}--- stderr\n{err}", name
        if name != "error-unknown-command":
            jcode, jout, _ = _run_cli(argv + ["--json"])
            rep = json.loads(jout)
            assert jcode == code == rep["exit_code"]
            if rep["status"] != "error":
                assert code == status_exit[rep["status"]]
            else:
                assert code in (64, 65)
