import random
from fractions import Fraction
from math import gcd

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dbraid.centre import ContextMismatch, TorusCharacter, character_value, characters, presentation
from dbraid.nctorus import IrrationalAngle, nc_parameters, projectors, two_colour_theta, verify_projectors
from dbraid.scheme import cycle_scheme, edge_scheme, validate_scheme
from dbraid.tables import FIG10_EDGES


def assert_invariants(P, scheme):
    n = 2 * P.genus
    for i in range(P.dimension):
        for j in range(P.dimension):
            a, b = divmod(i, n)[0] + 1, divmod(j, n)[0] + 1
            x = P.theta[i][j]
            assert 0 <= x < 1
            assert x == (-P.theta[j][i]) % 1
            if a == b or not scheme.has_edge(a, b):
                assert x == 0


def test_edge_graph_example():
    s = edge_scheme(2, 4)
    sign = list(characters(presentation(s).group))[1]
    P = nc_parameters(s, 1, sign)
    assert P.entry(1, 1, 2, 2) == Fraction(1, 2)
    assert P.entry(1, 1, 1, 2) == 0
    assert P.to_json()["theta"][0][3] == "1/2"


def test_trivial_character_is_commutative():
    s = cycle_scheme([2, 3, 4, 6, 2])
    chi = TorusCharacter(presentation(s).group, (0,) * len(presentation(s).group.invariant_factors))
    P = nc_parameters(s, 2, chi)
    assert all(x == 0 for row in P.theta for x in row)


def test_five_cycle_characters():
    s = validate_scheme(5, [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)], [2, 3, 5, 7, 11])
    G = presentation(s).group
    rng = random.Random(0)
    for j in rng.sample(range(4620), 25):
        assert_invariants(nc_parameters(s, 1, TorusCharacter(G, (j,))), s)


@pytest.mark.parametrize("k1,k2", [(2, 2), (4, 6), (6, 9), (12, 8)])
@pytest.mark.parametrize("g", [1, 2, 3])
def test_two_colour_closed_form(k1, k2, g):
    s = edge_scheme(k1, k2)
    ctx = presentation(s)
    k = gcd(k1, k2)
    seen = set()
    for chi in characters(ctx.group):
        j = int(character_value(chi, ctx.generator(1, 2)) * k)
        seen.add(j)
        P = nc_parameters(s, g, chi)
        assert [list(r) for r in P.theta] == two_colour_theta(j, k, g)
    assert seen == set(range(k))


@given(st.integers(0, 10**6))
@settings(max_examples=40)
def test_additivity(seed):
    rng = random.Random(seed)
    s = cycle_scheme([rng.choice([2, 3, 4, 6]) for _ in range(5)])
    G = presentation(s).group
    chi = TorusCharacter(G, tuple(rng.randrange(d) for d in G.invariant_factors))
    psi = TorusCharacter(G, tuple(rng.randrange(d) for d in G.invariant_factors))
    A, B, C = (nc_parameters(s, 1, c).theta for c in (chi, psi, chi + psi))
    assert all(C[i][j] == (A[i][j] + B[i][j]) % 1 for i in range(len(A)) for j in range(len(A)))


def test_free_part_needs_rational_angles():
    s = validate_scheme(8, FIG10_EDGES["i"], [3, 5, 7, 11, 13, 17, 19, 23])
    G = presentation(s).group
    P = nc_parameters(s, 1, TorusCharacter(G, (), (Fraction(1, 2), Fraction(1, 3), Fraction(0))))
    assert_invariants(P, s)
    with pytest.raises(IrrationalAngle):
        nc_parameters(s, 1, TorusCharacter(G, (), (0.5, 0.0, 0.0)))


def test_context_mismatch():
    chi = list(characters(presentation(edge_scheme(2, 4)).group))[1]
    with pytest.raises(ContextMismatch):
        nc_parameters(edge_scheme(3, 6), 1, chi)


def test_projectors_small():
    (p,) = projectors(1)
    assert np.allclose(p, [1])
    b0, b1 = projectors(2)
    assert np.allclose(b0, [0.5, 0.5]) and np.allclose(b1, [0.5, -0.5])
    assert verify_projectors(2).ok and verify_projectors(12).ok
    with pytest.raises(ValueError):
        verify_projectors(0)


def test_projector_check_has_teeth():
    rep = verify_projectors(5, tolerance=0.0)
    assert not rep.ok or max(rep.idempotent_error, rep.orthogonality_error, rep.completeness_error) == 0
