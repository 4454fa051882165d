import random

import pytest

from gmet.groups import from_cayley_table
from gmet.isomorphism import find_isomorphism, is_isomorphic

from conftest import GROUPS_UP_TO_12


def relabelled(G, seed):
    """The same group with its non-identity elements shuffled."""
    rng = random.Random(seed)
    perm = [0] + rng.sample(range(1, G.order), G.order - 1)  # new index i is old perm[i]
    pos = {old: new for new, old in enumerate(perm)}
    table = [[pos[G.mul(perm[i], perm[j])] for j in range(G.order)] for i in range(G.order)]
    return from_cayley_table(table)


@pytest.mark.parametrize("spec", GROUPS_UP_TO_12)
def test_relabelled_copies_are_isomorphic(groups, spec):
    G = groups(spec)
    H = relabelled(G, 7)
    phi = find_isomorphism(G, H)
    assert phi is not None
    for x in range(G.order):
        for y in range(G.order):
            assert phi[G.mul(x, y)] == H.mul(phi[x], phi[y])


def test_distinct_groups_of_same_order_are_not_isomorphic(groups):
    same_order = {}
    for spec in GROUPS_UP_TO_12:
        same_order.setdefault(groups(spec).order, []).append(spec)
    for specs in same_order.values():
        for i, a in enumerate(specs):
            for b in specs[i + 1:]:
                assert not is_isomorphic(groups(a), groups(b)), (a, b)
