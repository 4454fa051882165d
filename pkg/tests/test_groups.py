import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gmet import groups as g
from gmet.errors import NotAGroup, NotAHomomorphism, NotAnAutomorphism, OrderCapExceeded

from conftest import GROUPS_UP_TO_12


def brute_classes(G):
    seen, classes = set(), []
    for x in range(G.order):
        if x not in seen:
            cls = {G.conj(h, x) for h in range(G.order)}
            seen |= cls
            classes.append(cls)
    return classes


@pytest.mark.parametrize("spec", GROUPS_UP_TO_12)
def test_tables_are_groups_with_identity_first(groups, spec):
    G = groups(spec)
    g.validate_table(G.table)
    assert list(G.table[0]) == list(range(G.order))
    for x in range(G.order):
        assert G.mul(x, G.inv(x)) == 0


@pytest.mark.parametrize("spec", GROUPS_UP_TO_12)
def test_conjugacy_data_matches_brute_force(groups, spec):
    G = groups(spec)
    classes = brute_classes(G)
    assert G.conjugacy.count == len(classes)
    real = [c for c in classes if {G.inv(x) for x in c} == c]
    assert G.conjugacy.real_count == len(real)
    assert g.involution_count(G) == sum(1 for x in range(G.order) if G.mul(x, x) == 0)
    assert G.center == frozenset(x for x in range(G.order)
                                 if all(G.mul(x, y) == G.mul(y, x) for y in range(G.order)))


def test_rejects_non_groups():
    with pytest.raises(NotAGroup):
        g.from_cayley_table([[0, 1], [1, 1]])  # not a Latin square
    with pytest.raises(NotAGroup):
        g.from_cayley_table([[0, 1, 2], [1, 2, 0], [2, 1, 0]])  # column not a permutation
    # a Latin square with identity 0 that is not associative (order 5 loop)
    loop = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(NotAGroup) as info:
        g.from_cayley_table(loop)
    assert info.value.triple is not None


def test_identity_is_relocated_to_index_0():
    G = g.from_cayley_table([[1, 0], [0, 1]], names=["a", "e"])
    assert G.names == ("e", "a")
    assert G.table.tolist() == [[0, 1], [1, 0]]


def test_named_families_have_expected_shape():
    assert g.dihedral(5).order == 10 and not g.dihedral(5).is_abelian
    assert g.dicyclic(2).order == 8 and g.involution_count(g.dicyclic(2)) == 2
    assert g.quasidihedral(4, "-").order == 16
    assert g.symmetric(4).conjugacy.count == 5
    assert g.alternating(5).conjugacy.count == 5
    assert g.sl2(3).order == 24 and g.involution_count(g.sl2(3)) == 2
    assert g.generalized_dihedral(g.cyclic(5)).order == 10


def test_semidirect_product_checks_phi():
    C3, C2 = g.cyclic(3), g.cyclic(2)
    S3 = g.semidirect_product(C3, C2, [[0, 1, 2], [0, 2, 1]])
    assert S3.order == 6 and not S3.is_abelian
    with pytest.raises(NotAnAutomorphism):
        g.semidirect_product(C3, C2, [[0, 1, 2], [0, 1, 1]])
    C4 = g.cyclic(4)
    with pytest.raises(NotAHomomorphism):  # generator of C2 acting by an order-4 automorphism
        g.semidirect_product(g.cyclic(5), C2, [[0, 1, 2, 3, 4], [0, 2, 4, 1, 3]])
    assert C4.order == 4


def test_symmetric_degree_cap():
    with pytest.raises(OrderCapExceeded):
        g.symmetric(9)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(1, 5), min_size=1, max_size=3))
def test_direct_product_counts(ns):
    factors = [g.cyclic(n) for n in ns]
    G = g.direct_product(*factors)
    assert G.order == int(np.prod(ns))
    assert G.is_abelian
    assert g.involution_count(G) == int(np.prod([g.involution_count(F) for F in factors]))
    # lexicographic indexing
    for a, b in itertools.product(range(G.order), repeat=2):
        assert G.mul(a, b) == G.mul(b, a)
        break


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(GROUPS_UP_TO_12), st.data())
def test_inverses_and_associativity_sampled(spec, data):
    from gmet.spec import build_group
    G = build_group(spec)
    x, y, z = (data.draw(st.integers(0, G.order - 1)) for _ in range(3))
    assert G.mul(G.mul(x, y), z) == G.mul(x, G.mul(y, z))
    assert G.inv(G.mul(x, y)) == G.mul(G.inv(y), G.inv(x))
