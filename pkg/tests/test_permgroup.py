import math

from hypothesis import given, settings, strategies as st

from gmet.groups import permutation_closure
from gmet.permgroup import PermGroup, compose, cycle_perm, invert


def test_symmetric_and_alternating_orders():
    for n in range(2, 9):
        S = PermGroup(n, [cycle_perm(n, [0, 1]), cycle_perm(n, list(range(n)))])
        assert S.order == math.factorial(n)
    A = PermGroup(6, [cycle_perm(6, [i, i + 1, i + 2]) for i in range(4)])
    assert A.order == 360
    assert not A.contains(cycle_perm(6, [0, 1]))


def test_transitivity_and_orbits():
    G = PermGroup(6, [cycle_perm(6, [0, 1, 2]), cycle_perm(6, [3, 4])])
    assert G.order == 6
    assert G.orbit(0) == {0, 1, 2} and G.orbit(5) == {5}
    assert not G.is_transitive()


def test_dict_round_trip():
    G = PermGroup(5, [cycle_perm(5, [0, 1, 2, 3, 4]), cycle_perm(5, [1, 4], [2, 3])])
    H = PermGroup.from_dict(G.to_dict())
    assert H.order == 10 and H.same_group(G)


perms6 = st.permutations(list(range(6))).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.lists(perms6, min_size=1, max_size=3), perms6)
def test_chain_agrees_with_closure(gens, probe):
    G = PermGroup(6, gens)
    elements = set(permutation_closure(gens, 6))
    assert G.order == len(elements)
    assert set(G.elements()) == elements
    assert G.contains(probe) == (probe in elements)
    for g in gens:
        assert G.contains(invert(g)) and G.contains(compose(g, g))
