"""Isomorphism testing between small groups given by tables.

A generating set of the first group is mapped onto candidate images in
the second, filtered by element order and conjugacy-class size; each
partial assignment is extended to the subgroup it generates and checked
for consistency, so dead branches are cut as early as possible.
"""
from __future__ import annotations

from collections import Counter
from typing import Iterator

from .errors import OrderCapExceeded
from .groups import Group, involution_count

ISOMORPHISM_CAP = 128


def fingerprint(G: Group) -> tuple:
    """Cheap isomorphism invariants: equal for isomorphic groups."""
    orders = tuple(sorted(Counter(G.element_orders.tolist()).items()))
    return (
        G.order,
        G.is_abelian,
        orders,
        len(G.center),
        G.conjugacy.count,
        G.conjugacy.real_count,
        involution_count(G),
    )


def _element_signature(G: Group) -> list[tuple[int, int]]:
    sizes = [len(c) for c in G.conjugacy.classes]
    return [(int(G.element_orders[x]), sizes[G.conjugacy.class_of[x]]) for x in range(G.order)]


def iter_isomorphisms(G: Group, H: Group) -> Iterator[list[int]]:
    """Yield every isomorphism G -> H as a list mapping indices of G to H."""
    if G.order != H.order or fingerprint(G) != fingerprint(H):
        return
    n = G.order
    if n == 1:
        yield [0]
        return
    gens = list(G.generators)
    sig_g = _element_signature(G)
    sig_h = _element_signature(H)
    candidates = [[y for y in range(n) if sig_h[y] == sig_g[g]] for g in gens]
    gt, ht = G.rows, H.rows
    phi = [-1] * n
    used = [False] * n
    phi[0] = 0
    used[0] = True

    def extend(level: int) -> list[int] | None:
        """Close the map under right multiplication by gens[:level+1]."""
        added: list[int] = []
        active = gens[: level + 1]
        queue = [x for x in range(n) if phi[x] >= 0]
        i = 0
        while i < len(queue):
            x = queue[i]
            i += 1
            px = phi[x]
            for g in active:
                y = gt[x][g]
                image = ht[px][phi[g]]
                if phi[y] < 0:
                    if used[image]:
                        _undo(added)
                        return None
                    phi[y] = image
                    used[image] = True
                    added.append(y)
                    queue.append(y)
                elif phi[y] != image:
                    _undo(added)
                    return None
        return added

    def _undo(added: list[int]) -> None:
        for y in added:
            used[phi[y]] = False
            phi[y] = -1

    def search(level: int) -> Iterator[list[int]]:
        if level == len(gens):
            yield list(phi)
            return
        g = gens[level]
        for image in candidates[level]:
            if used[image]:
                continue
            phi[g] = image
            used[image] = True
            added = extend(level)
            if added is not None:
                yield from search(level + 1)
                _undo(added)
            phi[g] = -1
            used[image] = False

    yield from search(0)


def find_isomorphism(G: Group, H: Group, cap: int = ISOMORPHISM_CAP) -> list[int] | None:
    if max(G.order, H.order) > cap:
        raise OrderCapExceeded(f"isomorphism test limited to order {cap}")
    return next(iter_isomorphisms(G, H), None)


def is_isomorphic(G: Group, H: Group, cap: int = ISOMORPHISM_CAP) -> bool:
    """True iff a bijective homomorphism G -> H exists."""
    if G.order != H.order:
        return False
    return find_isomorphism(G, H, cap) is not None
