"""Symbolic powers, localizations, and the two power-comparison routes."""

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from monideal.errors import DomainError
from monideal.decomposition import MonomialPrime, embedded_primes, minimal_primes
from monideal.fixtures import (
    PATH_MIDDLE,
    PATH_MIDDLE_LOCALIZED_13,
    PATH_MIDDLE_LOCALIZED_23,
    PATH_MIDDLE_MAX_ASS_SUPPORTS,
    PATH_MIDDLE_SQUARE_WITNESSES,
    PATH_MIDDLE_SYMBOLIC_SQUARE,
    TRIANGLE_CYCLE,
    TRIANGLE_CYCLE_SQUARE_WITNESSES,
    TRIANGLE_CYCLE_SYMBOLIC_SQUARE,
    TRIANGLE_NONSINK,
    TRIANGLE_NONSINK_SQUARE_WITNESS,
    TRIANGLE_SINK,
    TRIANGLE_SINK_SQUARE_WITNESS,
    FOUR_CYCLE_SINKS,
)
from monideal.graphs import edge_ideal
from monideal.ideals import parse_ideal
from monideal.symbolic import (
    compare_powers,
    is_ntf_up_to,
    localize,
    max_ass,
    symbolic_power_ass,
    symbolic_power_min,
)

from conftest import ideals


def test_localize_drops_foreign_variables():
    I = edge_ideal(PATH_MIDDLE.graph)
    p23 = MonomialPrime(3, frozenset({2, 3}))
    p13 = MonomialPrime(3, frozenset({1, 3}))
    assert localize(I, p23).gens == PATH_MIDDLE_LOCALIZED_23
    assert localize(I, p13).gens == PATH_MIDDLE_LOCALIZED_13


def test_localize_at_non_ass_prime_can_blow_up():
    I = parse_ideal("(t1)", num_vars=2)
    assert localize(I, MonomialPrime(2, frozenset({2}))).is_unit()


def test_max_ass_on_path():
    I = edge_ideal(PATH_MIDDLE.graph)
    assert {p.support for p in max_ass(I)} == PATH_MIDDLE_MAX_ASS_SUPPORTS


def test_symbolic_square_of_path():
    I = edge_ideal(PATH_MIDDLE.graph)
    assert symbolic_power_min(I, 2).gens == PATH_MIDDLE_SYMBOLIC_SQUARE
    report = compare_powers(I, 2)
    assert not report.equal_min
    assert report.witnesses == PATH_MIDDLE_SQUARE_WITNESSES
    assert report.equal_ass


def test_symbolic_square_of_weighted_triangle():
    I = edge_ideal(TRIANGLE_CYCLE.graph)
    assert symbolic_power_min(I, 2).gens == TRIANGLE_CYCLE_SYMBOLIC_SQUARE
    assert compare_powers(I, 2).witnesses == TRIANGLE_CYCLE_SQUARE_WITNESSES


def test_single_square_witnesses_on_triangles():
    for named, witness in (
        (TRIANGLE_NONSINK, TRIANGLE_NONSINK_SQUARE_WITNESS),
        (TRIANGLE_SINK, TRIANGLE_SINK_SQUARE_WITNESS),
    ):
        I = edge_ideal(named.graph)
        assert symbolic_power_min(I, 2).contains(witness)
        assert not (I ** 2).contains(witness)


def test_symbolic_power_validates_n():
    I = parse_ideal("(t1)")
    with pytest.raises(DomainError):
        symbolic_power_min(I, 0)
    with pytest.raises(DomainError):
        symbolic_power_ass(I, -1)


@given(ideals(max_vars=3, max_gens=4), st.integers(min_value=1, max_value=3))
@settings(max_examples=25)
def test_power_chain_inclusions(I, n):
    """I^n is inside I<n> is inside I^(n), always."""
    ordinary = I ** n
    via_ass = symbolic_power_ass(I, n)
    via_min = symbolic_power_min(I, n)
    assert ordinary <= via_ass
    assert via_ass <= via_min


@given(ideals(max_vars=3, max_gens=4), st.integers(min_value=1, max_value=3))
@settings(max_examples=25)
def test_localization_commutes_with_powers(I, n):
    for p in minimal_primes(I):
        assert localize(I ** n, p) == localize(I, p) ** n


@given(ideals(max_vars=4, max_gens=5))
@settings(max_examples=30)
def test_first_symbolic_power_detects_embedded_primes(I):
    """I^(1) == I exactly when I has no embedded primes."""
    assert (symbolic_power_min(I, 1) == I) == (not embedded_primes(I))
    assert symbolic_power_ass(I, 1) == I


@given(ideals(max_vars=3, max_gens=4), st.integers(min_value=1, max_value=2))
@settings(max_examples=25)
def test_max_ass_route_equals_full_ass_intersection(I, n):
    """Intersecting over all associated primes changes nothing: the
    localizations at non-maximal members are redundant."""
    from monideal.decomposition import associated_primes
    from monideal.ideals import intersect_all

    full = intersect_all(
        [localize(I ** n, p) for p in associated_primes(I)], I.num_vars
    )
    assert full == symbolic_power_ass(I, n)


@given(ideals(max_vars=3, max_gens=4))
@settings(max_examples=20)
def test_full_support_max_ass_makes_routes_agree(I):
    full = frozenset(range(1, I.num_vars + 1))
    if {p.support for p in max_ass(I)} == {full}:
        for n in (1, 2):
            assert symbolic_power_ass(I, n) == I ** n


def test_ntf_report_small_cases():
    I = edge_ideal(TRIANGLE_NONSINK.graph)
    report = is_ntf_up_to(I, 2)
    assert not report.holds
    assert report.bound == 2
    by_power = dict(report.ass_by_power)
    assert by_power[2] - by_power[1] == {MonomialPrime(3, frozenset({1, 2, 3}))}

    J = edge_ideal(FOUR_CYCLE_SINKS.graph)
    assert is_ntf_up_to(J, 3).holds
    with pytest.raises(DomainError):
        is_ntf_up_to(J, 0)


@given(ideals(max_vars=3, max_gens=3))
@settings(max_examples=15)
def test_ntf_at_bound_one_is_trivially_true(I):
    assert is_ntf_up_to(I, 1).holds
