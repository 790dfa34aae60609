import random
import warnings
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from crnreal.network import (DomainError, FluxSystem, MassActionSystem, NetworkError, ReactionNetwork,
                             classify_flux, classify_state, deficiency, eval_rhs, flux_from_state, is_reversible,
                             is_weakly_reversible,
                             kinetic_subspace_dim, linkage_classes, lint, monomial, potential, potentials,
                             rational_power, source_monomials, source_vertices, stoichiometric_matrix,
                             stoichiometric_subspace_dim, to_rational)
from named_systems import (FIG3_FLUX, FIG3_STATE, XY, fig1a, fig1b, fig3_flux, fig3_ma, line_cb, lotka, square,
                           square_complete, square_star)
from randomgen import random_mass_action, random_state


def deficiency_oracle(G: ReactionNetwork) -> int:
    """dim(ker Y cap im I_G) = rank(I_G) - rank(Y I_G), computed with sympy."""
    V, E = len(G.vertices), len(G.edges)
    inc = sympy.zeros(V, E)
    for k, (s, t) in enumerate(G.edges):
        inc[s, k], inc[t, k] = -1, 1
    Y = sympy.Matrix([[sympy.Rational(v[i].numerator, v[i].denominator) for v in G.vertices]
                      for i in range(G.dimension)])
    return inc.rank() - (Y * inc).rank()


# ------------------------------------------------------------ construction

def test_rationals_are_exact():
    assert to_rational("3/4") == Fraction(3, 4)
    assert to_rational("0.25") == Fraction(1, 4)
    with pytest.raises(TypeError):
        to_rational(0.25)
    with pytest.raises(TypeError):
        to_rational(True)


def test_network_rejects_bad_input():
    with pytest.raises(NetworkError):
        ReactionNetwork.from_reactions(XY, [((1, 0), (1, 0))])
    with pytest.raises(NetworkError):
        ReactionNetwork.from_reactions(XY, [((1, 0), (0, 1)), ((1, 0), (0, 1))])
    with pytest.raises(NetworkError):
        ReactionNetwork.from_reactions(XY, [((1,), (0, 1))])
    with pytest.raises(NetworkError):
        ReactionNetwork(("X", "X"), [], [])
    with pytest.raises(NetworkError):
        MassActionSystem.from_reactions(XY, [((1, 0), (0, 1), 0)])
    with pytest.raises(NetworkError):
        FluxSystem.from_reactions(XY, [((1, 0), (0, 1), -1)])


def test_isolated_vertices_warn_or_fail():
    with pytest.warns(UserWarning):
        ReactionNetwork(XY, [(0, 0), (1, 0), (0, 1)], [(0, 1)])
    with pytest.raises(NetworkError):
        ReactionNetwork(XY, [(0, 0), (1, 0), (0, 1)], [(0, 1)], allow_isolated=False)


def test_duplicate_vertices_merge():
    G = ReactionNetwork(XY, [(0, 0), (1, 0), (0, 0)], [(0, 1), (1, 2)])
    assert len(G.vertices) == 2 and G.edges == ((0, 1), (1, 0))


def test_immutable():
    M = lotka()
    with pytest.raises(AttributeError):
        M.weights = ()
    with pytest.raises(AttributeError):
        M.network.edges = ()


def test_weight_lookup_and_map_constructor():
    M = lotka((1, 2, 3))
    assert M.weight((1, 1), (0, 2)) == 2
    assert M.weight((0, 2), (1, 1)) == 0
    assert MassActionSystem.from_weight_map(XY, M.weight_map()) == M
    assert MassActionSystem(M.network, {((1, 0), (2, 0)): 1, ((1, 1), (0, 2)): 2, ((0, 1), (0, 0)): 3}) == M
    with pytest.raises(NetworkError):
        MassActionSystem(M.network, {((1, 0), (2, 0)): 1})


def test_negative_coordinates_are_linted():
    G = ReactionNetwork.from_reactions(XY, [((0, 0), (-1, 0))])
    assert len(lint(G)) == 1 and lint(lotka()) == []


# ------------------------------------------------------------ structure

def test_lotka_structure():
    G = lotka().network
    assert len(G.vertices) == 6
    assert len(linkage_classes(G)) == 3
    assert stoichiometric_subspace_dim(G) == 2
    assert not is_reversible(G) and not is_weakly_reversible(G)
    assert deficiency(G) == 1
    assert [[G.vertices[i] for i in lc] for lc in linkage_classes(G)][0] == [(1, 0), (2, 0)]


@pytest.mark.parametrize("G, rev, wr, delta", [
    (square().network, False, False, 2),
    (square_complete(), True, True, 1),
    (square_star(), False, True, 3),
    (fig3_flux().network, False, True, 1),
    (lotka().network, False, False, 1),
    (fig1a().network, False, False, 0),
    (line_cb().network, False, True, 1),
])
def test_structure_table(G, rev, wr, delta):
    assert is_reversible(G) is rev
    assert is_weakly_reversible(G) is wr
    assert deficiency(G) == delta == deficiency_oracle(G)


def test_source_vertices_and_stoichiometric_matrix():
    G = lotka().network
    assert sorted(G.vertices[i] for i in source_vertices(G)) == [(0, 1), (1, 0), (1, 1)]
    S = stoichiometric_matrix(G)
    assert S == [[1, -1, 0], [0, 1, -1]]


def test_kinetic_dim_can_be_smaller_than_stoichiometric():
    # two cancelling reactions from one source leave no dynamics at all
    M = MassActionSystem.from_reactions(("X",), [((1,), (2,), 1), ((1,), (0,), 1)])
    assert stoichiometric_subspace_dim(M.network) == 1
    assert kinetic_subspace_dim(M) == 0
    assert kinetic_subspace_dim(lotka()) == 2


# ------------------------------------------------------------ monomials and the ODE

def test_rational_powers():
    assert rational_power(Fraction(4, 9), Fraction(1, 2)) == Fraction(2, 3)
    assert rational_power(Fraction(8), Fraction(-2, 3)) == Fraction(1, 4)
    assert rational_power(Fraction(2), Fraction(1, 2)) is None
    assert monomial((4, 27), (Fraction(1, 2), Fraction(1, 3))) == 6
    assert monomial((2, 1), (Fraction(1, 2), 0)) is None


def test_lotka_rhs():
    k = (2, 3, 5)
    M = lotka(k)
    for x in [(1, 1), (2, 3), (Fraction(1, 2), 7)]:
        X, Y = map(Fraction, x)
        assert eval_rhs(M, x) == (k[0] * X - k[1] * X * Y, k[1] * X * Y - k[2] * Y)


def test_rhs_falls_back_to_float_for_irrational_monomials():
    M = MassActionSystem.from_reactions(("X",), [((Fraction(1, 2),), (0,), 1)])
    (v,) = eval_rhs(M, (2,))
    assert isinstance(v, float) and v == pytest.approx(-2 ** 0.5 / 2)
    with pytest.raises(DomainError):
        source_monomials(M, (2,))


def test_states_must_be_positive():
    with pytest.raises(DomainError):
        eval_rhs(lotka(), (0, 1))
    with pytest.raises(DomainError):
        eval_rhs(lotka(), (1,))
    with pytest.raises(DomainError):
        flux_from_state(lotka(), (1.0, 1.0))


def test_fig1_systems():
    assert eval_rhs(fig1a(), (1, 1)) == (-1, 1)
    # the extra pair Y -> 0, Y -> 2Y cancels out in fig1b
    assert eval_rhs(fig1b(), (3, 5)) == eval_rhs(fig1a(), (3, 5))


# ------------------------------------------------------------ balance

def test_fig3_flux_classification():
    F = fig3_flux()
    c = classify_flux(F)
    assert c.is_complex_balanced and c.is_steady_state and not c.is_detailed_balanced
    assert all(p == 0 for p in potentials(F).values())


def test_fig3_state_gives_fig3_fluxes():
    F = flux_from_state(fig3_ma(), FIG3_STATE)
    assert F.fluxes == FIG3_FLUX
    c = classify_state(fig3_ma(), FIG3_STATE)
    assert c.is_complex_balanced and not c.is_detailed_balanced


def test_potentials_example():
    F = FluxSystem.from_reactions(XY, [((0, 0), (1, 0), 2), ((1, 0), (0, 1), 3)])
    assert potential(F, (0, 0)) == -2 and potential(F, (1, 0)) == -1 and potential(F, (0, 1)) == 3
    assert potential(F, (5, 5)) == 0
    assert not classify_flux(F).is_complex_balanced


def test_detailed_balance_needs_reverse_edges():
    F = FluxSystem.from_reactions(("A", "B"), [((1, 0), (0, 1), 2), ((0, 1), (1, 0), 2)])
    assert classify_flux(F).is_detailed_balanced
    F = FluxSystem.from_reactions(("A", "B"), [((1, 0), (0, 1), 2), ((0, 1), (1, 0), 3)])
    c = classify_flux(F)
    assert not c.is_detailed_balanced and not c.is_complex_balanced and not c.is_steady_state


# ------------------------------------------------------------ properties

@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_deficiency_matches_oracle_and_is_nonnegative(seed):
    G = random_mass_action(random.Random(seed)).network
    d = deficiency(G)
    assert d >= 0 and d == deficiency_oracle(G)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_potentials_sum_to_zero(seed):
    rng = random.Random(seed)
    M = random_mass_action(rng)
    F = flux_from_state(M, random_state(rng, M.network.dimension))
    assert sum(potentials(F).values()) == 0


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_balance_implications(seed):
    """DB implies CB implies steady state."""
    rng = random.Random(seed)
    M = random_mass_action(rng)
    c = classify_state(M, random_state(rng, M.network.dimension))
    assert not c.is_detailed_balanced or c.is_complex_balanced
    assert not c.is_complex_balanced or c.is_steady_state


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_reversible_implies_weakly_reversible(seed):
    G = random_mass_action(random.Random(seed)).network
    assert not is_reversible(G) or is_weakly_reversible(G)
    # adding every reverse edge always gives a reversible network
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        both = ReactionNetwork.from_reactions(G.species, sorted(set(G.reactions())
                                                                | {(t, s) for s, t in G.reactions()}))
    assert is_reversible(both) and is_weakly_reversible(both)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2 ** 32))
def test_rhs_is_the_flux_weighted_sum(seed):
    rng = random.Random(seed)
    M = random_mass_action(rng)
    x = random_state(rng, M.network.dimension)
    F = flux_from_state(M, x)
    G = F.network
    total = [Fraction(0)] * G.dimension
    for e, J in zip(G.edges, F.fluxes):
        total = [a + J * r for a, r in zip(total, G.reaction_vector(e))]
    assert tuple(total) == eval_rhs(M, x)
