import random
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import schemes
from dbraid.centre import (
    ContextMismatch,
    NotConnected,
    TorusCharacter,
    centre_group,
    centre_rank_formula,
    character_value,
    characters,
    cross_check_torsion,
    pentagon_order_formula,
    presentation,
    relation_matrix,
    torsion_via_diophantine,
)
from dbraid.scheme import analyze_graph, complete_scheme, disjoint_union, edge_scheme, random_scheme, validate_scheme
from dbraid.tables import FIG10_EDGES, PENTAGON_EDGES, TREE_EDGES
from dbraid.zlinalg import abelian_group


def group(scheme):
    G = centre_group(scheme)
    return G.rank, G.invariant_factors


def test_relation_matrix_rows():
    s = validate_scheme(3, [(1, 2), (2, 3)], [2, 3, 5])
    assert relation_matrix(s) == [[3, 2, 0], [0, 5, 3]]


@pytest.mark.parametrize("k1,k2", [(4, 6), (2, 3), (5, 5), (1, 7), (12, 18)])
def test_two_colours(k1, k2):
    g = gcd(k1, k2)
    assert group(edge_scheme(k1, k2)) == (0, (g,) if g > 1 else ())


def test_named_examples():
    assert group(validate_scheme(5, [(1, 2), (1, 3), (2, 4), (3, 5), (4, 5)], [2, 3, 5, 7, 11])) == (0, (4620,))
    assert group(validate_scheme(7, TREE_EDGES, [2, 3, 5, 7, 11, 13, 17])) == (0, (17, 510))
    assert group(complete_scheme([1, 1, 1])) == (0, (2,))
    assert group(validate_scheme(1, [], [5])) == (0, ())


def test_rank_examples():
    k8 = [2] * 8
    assert centre_rank_formula(validate_scheme(8, FIG10_EDGES["i"], k8)) == 3
    assert centre_rank_formula(validate_scheme(8, FIG10_EDGES["ii"], k8)) == 2
    assert centre_rank_formula(validate_scheme(8, FIG10_EDGES["iii"], k8)) == 2
    assert centre_rank_formula(validate_scheme(7, TREE_EDGES, [2] * 7)) == 0


@given(schemes(r_max=7, connected=True))
@settings(max_examples=200)
def test_rank_formula(s):
    assert centre_group(s).rank == centre_rank_formula(s)


def test_rank_formula_disconnected():
    s = disjoint_union(edge_scheme(2, 4), validate_scheme(3, [(1, 2), (2, 3), (1, 3)], [2, 2, 2]))
    assert centre_group(s).rank == centre_rank_formula(s) == 1 - 2 + 1 + 3 - 3 + 0


def test_central_elements():
    ctx = presentation(edge_scheme(2, 4))
    b = ctx.generator(1, 2)
    assert b.coordinates == (1,)
    assert (b + b).is_zero()
    assert ctx.generator(2, 1) == b
    assert ctx.element([7]) == b
    assert (3 * b) == b and (b - b) == ctx.zero()
    other = presentation(edge_scheme(2, 6))
    with pytest.raises(ContextMismatch):
        _ = b + other.generator(1, 2)


def test_relations_vanish():
    s = validate_scheme(5, PENTAGON_EDGES, [2, 2, 2, 3, 3])
    ctx = presentation(s)
    for mu in range(1, 6):
        assert ctx.element(ctx.relation(mu)).is_zero()


# Diophantine route


def test_diophantine_examples():
    for k in [(2, 2), (2, 4)]:
        assert torsion_via_diophantine(edge_scheme(*k), 2).invariant_factors == (2,)
    s = validate_scheme(5, PENTAGON_EDGES, [2, 2, 2, 3, 3])
    rep = cross_check_torsion(s)
    assert rep.agree and rep.snf_torsion.invariant_factors == (2, 72)
    rep = cross_check_torsion(validate_scheme(7, TREE_EDGES, [3] * 7))
    assert rep.agree and rep.snf_torsion.invariant_factors == (3,) * 6
    assert cross_check_torsion(validate_scheme(1, [], [4])).agree
    with pytest.raises(NotConnected):
        torsion_via_diophantine(disjoint_union(edge_scheme(2, 2), edge_scheme(2, 2)), 2)


def test_diophantine_grid_bruteforce():
    # enumerate x in (Z/N)^2 directly for the two-colour graph
    for k1, k2 in [(2, 2), (2, 4), (4, 6), (6, 9)]:
        N = 2 * gcd(k1, k2)
        pts = [(x, y) for x in range(N) for y in range(N) if (k2 * x + k1 * y) % N == 0]
        g = gcd(k1, k2)
        line = {((k1 // g) * t % N, -(k2 // g) * t % N) for t in range(N)}
        assert len(pts) // len(line) == torsion_via_diophantine(edge_scheme(k1, k2), N).order == g


@given(schemes(r_max=6, k_min=2, connected=True))
@settings(max_examples=150)
def test_cross_check_random(s):
    rep = cross_check_torsion(s)
    assert rep.agree, rep.to_json()


@given(schemes(r_max=4), schemes(r_max=4))
@settings(max_examples=100)
def test_direct_sum(a, b):
    Ga, Gb, G = centre_group(a), centre_group(b), centre_group(disjoint_union(a, b))
    assert G.rank == Ga.rank + Gb.rank
    assert G.same_structure(abelian_group(Ga.invariant_factors + Gb.invariant_factors, Ga.rank + Gb.rank))


# characters


def test_character_enumeration():
    assert len(list(characters(abelian_group([2])))) == 2
    assert len(list(characters(abelian_group([6])))) == 6
    assert len(list(characters(abelian_group([2, 4])))) == 8


def test_character_values():
    ctx = presentation(edge_scheme(2, 4))
    G = ctx.group
    triv, sign = characters(G)
    assert character_value(triv, ctx.generator(1, 2)) == 0
    assert character_value(sign, ctx.generator(1, 2)) == Fraction(1, 2)
    with pytest.raises(ContextMismatch):
        TorusCharacter(G, (1, 1))
    with pytest.raises(ContextMismatch):
        character_value(sign, presentation(edge_scheme(3, 6)).generator(1, 2))


@given(st.integers(0, 10**6), st.lists(st.integers(-50, 50), min_size=5, max_size=5))
@settings(max_examples=100)
def test_character_homomorphism(seed, raw):
    rng = random.Random(seed)
    s = validate_scheme(5, PENTAGON_EDGES, [rng.choice([2, 3, 4, 6]) for _ in range(5)])
    ctx = presentation(s)
    G = ctx.group
    chi = TorusCharacter(G, tuple(rng.randrange(d) for d in G.invariant_factors))
    psi = TorusCharacter(G, tuple(rng.randrange(d) for d in G.invariant_factors))
    x, y = ctx.element(raw), ctx.element(raw[::-1])
    assert character_value(chi, x + y) == (character_value(chi, x) + character_value(chi, y)) % 1
    assert character_value(chi + psi, x) == (character_value(chi, x) + character_value(psi, x)) % 1


def test_free_part_angles():
    s = validate_scheme(8, FIG10_EDGES["i"], [3, 5, 7, 11, 13, 17, 19, 23])
    ctx = presentation(s)
    chi = TorusCharacter(ctx.group, (), (Fraction(1, 3), Fraction(0), Fraction(1, 2)))
    for e in s.edges:
        v = character_value(chi, ctx.generator(*e))
        assert 0 <= v < 1


def test_pentagon_formula_is_advisory():
    assert pentagon_order_formula([2, 3, 5, 7, 11]) == 4620
    # equal degrees: the listed group Z_2a + Z_a^4 has order 2a^5, the formula 2a^6
    for a in range(2, 7):
        s = validate_scheme(5, PENTAGON_EDGES, [a] * 5)
        assert centre_group(s).order == 2 * a**5 != pentagon_order_formula([a] * 5)


def test_random_generator_connected():
    rng = random.Random(3)
    for _ in range(50):
        s = random_scheme(rng, connected=True)
        assert analyze_graph(s).connected and len(s.edges) <= max(12, s.r - 1)
