"""Symmetry groups of invariant metrics via colored graphs.

An invariant metric on G is recorded, up to inducing the same partition,
by the complete graph on G whose edge {x, y} carries the index of the
block containing x y^-1.  Its color-preserving vertex permutations form
the isometry group of the metric; they are found by a backtracking search
with color-degree partition refinement.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ContainsIdentity,
    NotAbelian,
    NotAnAutomorphism,
    NotSymmetricSet,
    NotUnitarySymmetric,
    OrderCapExceeded,
    SearchCapExceeded,
)
from .groups import Group, group_from_permutations
from .isomorphism import is_isomorphic, iter_isomorphisms, ISOMORPHISM_CAP
from .partitions import BlockPartition, is_unitary_symmetric
from .permgroup import Perm, PermGroup, identity_perm
from .spec import build_group, spec_order

SEARCH_CAP = 24
AUTOMORPHISM_CAP = 24


@dataclass(frozen=True)
class ColoredGraph:
    """A complete graph on 0..n-1 with symmetric integer edge colors.

    ``color[x, y]`` is the color of the edge {x, y}; the diagonal holds the
    sentinel 0.  A plain graph uses colors 0 (no edge) and 1 (edge).
    """

    color: np.ndarray
    names: tuple[str, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        c = np.array(self.color, dtype=np.int64)
        if c.ndim != 2 or c.shape[0] != c.shape[1]:
            raise ValueError("color matrix must be square")
        if not np.array_equal(c, c.T):
            raise ValueError("color matrix must be symmetric")
        if (np.diagonal(c) != 0).any():
            raise ValueError("diagonal colors must be 0")
        c.setflags(write=False)
        object.__setattr__(self, "color", c)

    @property
    def n(self) -> int:
        return self.color.shape[0]

    @property
    def colors(self) -> int:
        """Largest color value in use."""
        return int(self.color.max()) if self.n else 0

    def edges(self, c: int) -> list[tuple[int, int]]:
        """Unordered pairs x < y of color c."""
        xs, ys = np.nonzero(np.triu(self.color == c, 1))
        return list(zip(xs.tolist(), ys.tolist()))

    def is_automorphism(self, p: Sequence[int]) -> bool:
        p = np.asarray(p)
        return bool(np.array_equal(self.color[np.ix_(p, p)], self.color))


def _quotients(G: Group) -> np.ndarray:
    """quot[x, y] = x y^-1."""
    return G.table[:, G.inverse]


def cayley_graph(G: Group, S: Iterable[int]) -> ColoredGraph:
    """Undirected Cayley graph: x ~ y iff x y^-1 lies in S."""
    S = {int(s) for s in S}
    if 0 in S:
        raise ContainsIdentity("the connection set contains the identity")
    if any(int(G.inverse[s]) not in S for s in S):
        raise NotSymmetricSet("the connection set is not closed under inversion")
    member = np.zeros(G.order, dtype=np.int64)
    member[list(S)] = 1
    return ColoredGraph(member[_quotients(G)], G.names)


def distance_graph(G: Group, P: BlockPartition) -> ColoredGraph:
    """Complete graph with edge {x, y} colored by the block of x y^-1."""
    if not is_unitary_symmetric(G, P):
        raise NotUnitarySymmetric(f"{P.blocks} is not unitary symmetric")
    block = np.array(P.block_of, dtype=np.int64)
    return ColoredGraph(block[_quotients(G)], G.names)


# --------------------------------------------------------------------------
# refinement search


def _refine(cells: list[list[int]], color: np.ndarray, ncolors: int) -> tuple[list[list[int]], list]:
    """Split cells by color-degree vectors until the partition is equitable.

    Each vertex's vector counts, for every (color, cell) pair, its
    neighbours of that color in that cell.  Cells split in place, the new
    pieces ordered by their vector, so equivalent inputs give equivalent
    outputs; the returned trace summarises every pass for comparison.
    """
    n = color.shape[0]
    trace = []
    rows = np.arange(n)[:, None]
    while True:
        k = len(cells)
        cell_id = np.empty(n, dtype=np.int64)
        for i, c in enumerate(cells):
            cell_id[c] = i
        width = ncolors * k
        code = color * k + cell_id[None, :] + rows * width
        counts = np.bincount(code.ravel(), minlength=n * width).reshape(n, width)
        new_cells: list[list[int]] = []
        summary = []
        split = False
        for c in cells:
            sub = counts[c]
            if len(c) == 1:
                new_cells.append(c)
                summary.append(sub.tobytes())
                continue
            uniq, inverse, mult = np.unique(sub, axis=0, return_inverse=True, return_counts=True)
            summary.append(uniq.tobytes() + mult.tobytes())
            if len(uniq) == 1:
                new_cells.append(c)
                continue
            split = True
            inverse = np.asarray(inverse).ravel()
            for u in range(len(uniq)):
                new_cells.append([v for v, lab in zip(c, inverse) if lab == u])
        trace.append(tuple(summary))
        cells = new_cells
        if not split:
            return cells, trace


def _target_cell(cells: list[list[int]]) -> int:
    """Index of the first smallest non-singleton cell."""
    best = None
    for i, c in enumerate(cells):
        if len(c) > 1 and (best is None or len(c) < len(cells[best])):
            best = i
    return best


def _individualize(cells: list[list[int]], i: int, v: int) -> list[list[int]]:
    rest = [u for u in cells[i] if u != v]
    return cells[:i] + [[v], rest] + cells[i + 1:]


class _Search:
    def __init__(self, color: np.ndarray):
        self.color = color
        self.n = color.shape[0]
        self.ncolors = int(color.max()) + 1 if self.n else 1

    def refine(self, cells):
        return _refine(cells, self.color, self.ncolors)

    def match(self, left, right) -> Perm | None:
        """An automorphism carrying the left ordered partition to the right."""
        i = _target_cell(left)
        if i is None:
            perm = [0] * self.n
            for a, b in zip(left, right):
                perm[a[0]] = b[0]
            p = np.array(perm)
            if np.array_equal(self.color[np.ix_(p, p)], self.color):
                return tuple(perm)
            return None
        u = left[i][0]
        left_next, left_trace = self.refine(_individualize(left, i, u))
        for w in right[i]:
            right_next, right_trace = self.refine(_individualize(right, i, w))
            if right_trace != left_trace:
                continue
            found = self.match(left_next, right_next)
            if found is not None:
                return found
        return None


def _orbit(point: int, gens: list[Perm]) -> set[int]:
    seen = {point}
    frontier = [point]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = g[p]
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


def _symmetric_generators(n: int) -> list[Perm]:
    if n < 2:
        return []
    swap = tuple([1, 0] + list(range(2, n)))
    cycle = tuple((x + 1) % n for x in range(n))
    return [swap] if n == 2 else [swap, cycle]


def colored_automorphism_group(g: ColoredGraph, cap: int = SEARCH_CAP) -> PermGroup:
    """All vertex permutations preserving every edge color.

    The leftmost path of the search tree fixes base points b_0, b_1, ...;
    working from the deepest level up, each level's orbit of b_i is
    completed by searching for an automorphism to every vertex of its cell
    not yet reached by the generators found so far.  The group order is the
    product of these orbit lengths, and must agree with the stabilizer
    chain built from the generators.
    """
    n = g.n
    off = g.color[~np.eye(n, dtype=bool)]
    if n <= 1 or (off == off[0]).all():
        return PermGroup(n, _symmetric_generators(n))
    if n > cap:
        raise SearchCapExceeded(f"colored graph search limited to {cap} vertices, got {n}")
    search = _Search(g.color)
    cells, _ = search.refine([list(range(n))])
    path = [cells]
    base: list[tuple[int, int]] = []
    while (i := _target_cell(cells)) is not None:
        b = cells[i][0]
        base.append((i, b))
        cells, _ = search.refine(_individualize(cells, i, b))
        path.append(cells)

    gens: list[Perm] = []
    order = 1
    for level in range(len(base) - 1, -1, -1):
        i, b = base[level]
        fixed = [pt for _, pt in base[:level]]
        parent = path[level]
        left = path[level + 1]
        level_gens = [s for s in gens if all(s[x] == x for x in fixed)]
        orbit = _orbit(b, level_gens)
        for v in parent[i]:
            if v in orbit:
                continue
            right, _ = search.refine(_individualize(parent, i, v))
            found = search.match(left, right) if _same_shape(left, right) else None
            if found is not None:
                gens.append(found)
                level_gens.append(found)
                orbit = _orbit(b, level_gens)
        order *= len(orbit)
    group = PermGroup(n, gens)
    if group.order != order:
        raise AssertionError(f"search found order {order} but generators give {group.order}")
    return group


def _same_shape(a, b) -> bool:
    return len(a) == len(b) and all(len(x) == len(y) for x, y in zip(a, b))


def symmetry_group(G: Group, P: BlockPartition, cap: int = SEARCH_CAP) -> PermGroup:
    """The isometry group of any metric on G inducing the partition P."""
    return colored_automorphism_group(distance_graph(G, P), cap)


def cayley_intersection(G: Group, P: BlockPartition) -> list[Perm]:
    """Elements common to the automorphism groups of every color-class Cayley graph.

    Enumerates the smallest of the per-block groups and keeps the
    permutations that preserve all the other graphs.
    """
    graphs = [cayley_graph(G, block) for block in P.blocks[1:]]
    if not graphs:
        return [identity_perm(G.order)]
    groups = [colored_automorphism_group(c) for c in graphs]
    smallest = min(range(len(groups)), key=lambda k: groups[k].order)
    return sorted(p for p in groups[smallest].elements()
                  if all(c.is_automorphism(p) for c in graphs))


# --------------------------------------------------------------------------
# translations, inversion and automorphisms


def right_regular_embedding(G: Group) -> PermGroup:
    """G_R: the right translations x -> x g, as permutations of indices."""
    return PermGroup(G.order, [tuple(int(v) for v in G.table[:, h]) for h in G.generators])


def dihedral_extension(G: Group) -> PermGroup:
    """The group generated by right translations and inversion, for abelian G."""
    if not G.is_abelian:
        raise NotAbelian(f"{G.label or 'the group'} is not abelian")
    gens = [tuple(int(v) for v in G.table[:, h]) for h in G.generators]
    gens.append(tuple(int(v) for v in G.inverse))
    return PermGroup(G.order, gens)


def is_automorphism(G: Group, sigma: Sequence[int]) -> bool:
    s = np.asarray(sigma)
    if sorted(s.tolist()) != list(range(G.order)):
        return False
    return bool(np.array_equal(s[G.table], G.table[np.ix_(s, s)]))


def inner_automorphisms(G: Group) -> list[Perm]:
    """Distinct maps x -> h x h^-1, in order of first h producing them."""
    seen: dict[Perm, None] = {}
    for h in range(G.order):
        seen.setdefault(tuple(G.conj(h, x) for x in range(G.order)), None)
    return list(seen)


def automorphisms(G: Group, cap: int = AUTOMORPHISM_CAP) -> list[Perm]:
    """Every automorphism of G, found by backtracking on generator images."""
    if G.order > cap:
        raise OrderCapExceeded(f"automorphism search limited to order {cap}")
    return [tuple(phi) for phi in iter_isomorphisms(G, G)]


def automorphism_group(G: Group, cap: int = AUTOMORPHISM_CAP) -> PermGroup:
    """Aut(G) as permutations of element indices."""
    gens: list[Perm] = []
    group = PermGroup(G.order)
    for phi in automorphisms(G, cap):
        if not group.contains(phi):
            gens.append(phi)
            group = PermGroup(G.order, gens)
    return group


def classify_automorphism(G: Group, sigma: Sequence[int]) -> str:
    """The smallest of inner, class_preserving, class_inverting, ecp, general.

    class_preserving: sigma(g) is conjugate to g for every g.
    class_inverting: sigma(g) is conjugate to g^-1 for every g.
    ecp: sigma(g) is conjugate to g or to g^-1, element by element.
    """
    sigma = tuple(int(v) for v in sigma)
    if not is_automorphism(G, sigma):
        raise NotAnAutomorphism(sigma, _automorphism_witness(G, sigma))
    if sigma in set(inner_automorphisms(G)):
        return "inner"
    cls = G.conjugacy.class_of
    inv = G.inverse
    same = [cls[sigma[x]] == cls[x] for x in range(G.order)]
    flipped = [cls[sigma[x]] == cls[int(inv[x])] for x in range(G.order)]
    if all(same):
        return "class_preserving"
    if all(flipped):
        return "class_inverting"
    if all(a or b for a, b in zip(same, flipped)):
        return "ecp"
    return "general"


def _automorphism_witness(G: Group, sigma: Sequence[int]):
    n = G.order
    if sorted(sigma) != list(range(n)):
        return None
    for x in range(n):
        for y in range(n):
            if sigma[G.mul(x, y)] != G.mul(sigma[x], sigma[y]):
                return (x, y)
    return None


# --------------------------------------------------------------------------
# identification


def _abelian_specs(n: int) -> list[str]:
    """Non-cyclic abelian groups of order n, as invariant-factor products."""
    def factorizations(m: int, bound: int, divides_next: int | None) -> list[list[int]]:
        # invariant factors d_1 | d_2 | ... listed largest first
        if m == 1:
            return [[]]
        out = []
        for d in range(min(m, bound), 1, -1):
            if m % d == 0 and (divides_next is None or divides_next % d == 0):
                for rest in factorizations(m // d, d, d):
                    out.append([d] + rest)
        return out

    specs = []
    for fs in factorizations(n, n, None):
        if len(fs) > 1:
            specs.append("x".join(f"C{d}" for d in fs))
    return specs


def default_catalog(order: int) -> list[str]:
    """Candidate spec strings of the given order, in priority order.

    Cyclic, then non-cyclic abelian, symmetric, alternating, dihedral,
    dicyclic, the wreath products D_a wr S_b, S_a wr S_b and C2 wr H, and
    finally generalized dihedral groups of non-cyclic abelian groups.
    """
    if order == 1:
        return ["C1"]
    out = [f"C{order}"] + _abelian_specs(order)
    for m in range(3, 10):
        if math.factorial(m) == order:
            out.append(f"S{m}")
        if m >= 4 and math.factorial(m) // 2 == order:
            out.append(f"A{m}")
    if order % 2 == 0 and order >= 6:
        out.append(f"D{order // 2}")
    if order % 4 == 0 and order >= 8:
        out.append(f"Q{order}")
    for b in range(2, 7):
        for a in range(2, 8):
            if math.factorial(a) ** b * math.factorial(b) == order:
                out.append(f"W(S{a},{b},S{b})")
            if a >= 3 and (2 * a) ** b * math.factorial(b) == order:
                out.append(f"W(D{a},{b},S{b})")
    for m, actions in ((2, ["C2"]), (3, ["C3", "S3"]), (4, ["C4", "C2xC2", "D4", "A4", "S4"])):
        for h in actions:
            spec = f"W(C2,{m},{h})"
            if spec_order(spec) == order:
                out.append(spec)
    if order % 2 == 0:
        for a in _abelian_specs(order // 2):
            if not all(part == "C2" for part in a.split("x")):
                out.append(f"GD({a})")
    seen: dict[str, None] = {}
    for s in out:
        seen.setdefault(s, None)
    return list(seen)


def regular_representation(P: PermGroup, cap: int = ISOMORPHISM_CAP) -> Group:
    """The abstract group of P, from its enumerated elements."""
    if P.order > cap:
        raise OrderCapExceeded(f"group of order {P.order} exceeds cap {cap}")
    ident = identity_perm(P.degree)
    elems = [ident] + sorted(p for p in P.elements() if p != ident)
    return group_from_permutations(elems)


def identify_group(P: PermGroup, candidates: Sequence[str] | None = None,
                   cap: int = ISOMORPHISM_CAP) -> str | None:
    """The first candidate spec isomorphic to P, or None.

    Without an explicit list the default catalog for |P| is used; a group
    of degree n and order n! (or n!/2, for n >= 4) is recognised as S_n
    (A_n) without an isomorphism test when it is too large to test.
    """
    order = P.order
    if candidates is None:
        if order == 1:
            return "C1"
        n = P.degree
        if order > cap:
            if order == math.factorial(n):
                return f"S{n}"
            if n >= 4 and 2 * order == math.factorial(n):
                return f"A{n}"
        candidates = default_catalog(order)
    if order > cap:
        raise OrderCapExceeded(f"group of order {order} exceeds identification cap {cap}")
    abstract = regular_representation(P, cap)
    for spec in candidates:
        known = spec_order(spec)
        if known is not None and known != order:
            continue
        candidate = build_group(spec)
        if candidate.order == order and is_isomorphic(abstract, candidate, cap):
            return spec
    return None


# --------------------------------------------------------------------------
# Graphviz export

PALETTE = ("black", "red", "blue", "darkgreen", "orange", "purple", "brown",
           "cyan", "magenta", "gold", "gray", "pink")


def export_dot(g: ColoredGraph, names: Sequence[str] | None = None) -> str:
    """Graphviz text: one edge per unordered pair, tagged with its color."""
    names = list(names if names is not None else (g.names or [str(i) for i in range(g.n)]))
    lines = ["graph G {"]
    for v, name in enumerate(names):
        label = name.replace("\\", "\\\\").replace('"', '\\"')
        lines.append(f'  {v} [label="{label}"];')
    for x in range(g.n):
        for y in range(x + 1, g.n):
            c = int(g.color[x, y])
            hue = PALETTE[(c - 1) % len(PALETTE)] if c > 0 else "white"
            lines.append(f'  {x} -- {y} [color_index={c}, color="{hue}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
