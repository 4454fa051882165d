import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gmet.errors import ContainsIdentity, NotAnAutomorphism, NotSymmetricSet, NotUnitarySymmetric
from gmet.partitions import (
    BlockPartition,
    coarsen,
    enumerate_conjugate_partitions,
    enumerate_unitary_symmetric_partitions,
    finest_conjugate_partition,
    hamming_partition,
    lee_partition,
)
from gmet.permgroup import PermGroup
from gmet.spec import build_group
from gmet.symmetry import (
    ColoredGraph,
    automorphism_group,
    automorphisms,
    cayley_graph,
    cayley_intersection,
    classify_automorphism,
    colored_automorphism_group,
    dihedral_extension,
    distance_graph,
    export_dot,
    identify_group,
    inner_automorphisms,
    right_regular_embedding,
    symmetry_group,
)

from conftest import GROUPS_UP_TO_8, GROUPS_UP_TO_12, brute_force_automorphisms


def graph_from_edges(n, edges):
    color = np.full((n, n), 2, dtype=np.int64)
    np.fill_diagonal(color, 0)
    for a, b in edges:
        color[a, b] = color[b, a] = 1
    return ColoredGraph(color)


def petersen():
    pairs = list(itertools.combinations(range(5), 2))
    edges = [(i, j) for i, j in itertools.combinations(range(10), 2)
             if not set(pairs[i]) & set(pairs[j])]
    return graph_from_edges(10, edges)


def test_search_on_standard_graphs():
    assert colored_automorphism_group(petersen()).order == 120
    cycle = graph_from_edges(9, [(i, (i + 1) % 9) for i in range(9)])
    assert colored_automorphism_group(cycle).order == 18
    cube = graph_from_edges(8, [(a, b) for a in range(8) for b in range(a) if bin(a ^ b).count("1") == 1])
    assert colored_automorphism_group(cube).order == 48
    # the rook graph K4 x K4 has automorphism group S4 wr S2
    rook = graph_from_edges(16, [(a, b) for a in range(16) for b in range(a)
                                 if (a // 4 == b // 4) != (a % 4 == b % 4)])
    assert colored_automorphism_group(rook).order == 1152


def test_search_matches_brute_force_on_random_colorings():
    rng = np.random.default_rng(5)
    for _ in range(40):
        n = int(rng.integers(2, 7))
        upper = np.triu(rng.integers(1, 3, size=(n, n)), 1)
        color = upper + upper.T
        found = colored_automorphism_group(ColoredGraph(color))
        brute = brute_force_automorphisms(color)
        assert found.order == len(brute)
        assert all(found.contains(p) for p in brute)


def test_graph_constructors_validate():
    G = build_group("C6")
    with pytest.raises(ContainsIdentity):
        cayley_graph(G, [0, 1, 5])
    with pytest.raises(NotSymmetricSet):
        cayley_graph(G, [1, 2])
    with pytest.raises(NotUnitarySymmetric):
        distance_graph(G, BlockPartition.from_blocks([[0], [1, 2], [3, 4, 5]]))
    with pytest.raises(ValueError):
        ColoredGraph(np.array([[0, 1], [2, 0]]))


@pytest.mark.parametrize("spec", GROUPS_UP_TO_8)
def test_gamma_equals_intersection_of_cayley_graph_groups(groups, spec):
    G = groups(spec)
    for P in enumerate_unitary_symmetric_partitions(G):
        Gamma = symmetry_group(G, P)
        common = cayley_intersection(G, P)
        assert Gamma.order == len(common)
        assert all(Gamma.contains(p) for p in common)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS_UP_TO_12), st.randoms(use_true_random=False))
def test_structural_subgroups_of_gamma(spec, rnd):
    G = build_group(spec)
    base = lee_partition(G)
    P = coarsen(base, [rnd.randrange(base.size) for _ in range(base.size - 1)])
    Gamma = symmetry_group(G, P)
    for g in right_regular_embedding(G).generators:
        assert Gamma.contains(g)
    if G.is_abelian:
        assert all(Gamma.contains(g) for g in dihedral_extension(G).generators)
    cbase = finest_conjugate_partition(G)
    Q = coarsen(cbase, [rnd.randrange(cbase.size) for _ in range(cbase.size - 1)])
    GammaQ = symmetry_group(G, Q)
    assert all(GammaQ.contains(a) for a in inner_automorphisms(G))
    assert all(GammaQ.contains(tuple(int(v) for v in G.table[h])) for h in range(G.order))
    assert symmetry_group(G, P).order % G.order == 0


def test_refinement_order_is_monotone(groups):
    G = groups("D4")
    gam = {P: symmetry_group(G, P) for P in enumerate_unitary_symmetric_partitions(G)}
    for P, Q in itertools.product(gam, repeat=2):
        if P != Q and P.refines(Q):
            assert all(gam[Q].contains(g) for g in gam[P].generators)


def test_automorphisms_and_classification(groups):
    S3 = groups("S3")
    assert len(automorphisms(S3)) == 6
    assert all(classify_automorphism(S3, a) == "inner" for a in automorphisms(S3))
    C5 = groups("C5")
    kinds = sorted(classify_automorphism(C5, a) for a in automorphisms(C5))
    assert kinds == ["class_inverting", "general", "general", "inner"]
    assert automorphism_group(groups("C2^3")).order == 168
    assert automorphism_group(groups("Q8")).order == 24
    with pytest.raises(NotAnAutomorphism) as info:
        classify_automorphism(C5, (0, 2, 1, 3, 4))
    assert info.value.witness is not None


def test_identification(groups):
    assert identify_group(symmetry_group(groups("C4"), lee_partition(groups("C4")))) == "D4"
    assert identify_group(symmetry_group(groups("C5"), hamming_partition(groups("C5")))) == "S5"
    assert identify_group(PermGroup(3)) == "C1"
    assert identify_group(right_regular_embedding(groups("Q8"))) == "Q8"
    assert identify_group(right_regular_embedding(groups("C4xC2"))) == "C4xC2"
    assert identify_group(right_regular_embedding(groups("A4"))) == "A4"
    assert identify_group(PermGroup(4, [(1, 0, 2, 3)]), candidates=["C3"]) is None


def test_dot_export(groups):
    G = groups("C4")
    text = export_dot(distance_graph(G, lee_partition(G)), G.names)
    assert text.startswith("graph G {") and text.rstrip().endswith("}")
    assert text.count(" -- ") == 6
    assert '0 -- 2 [color_index=2' in text
