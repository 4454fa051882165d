"""Permutation groups with a deterministic Schreier-Sims stabilizer chain.

Permutations are tuples in one-line notation, ``p[x]`` the image of ``x``,
and compose as ``(s * t)(x) = s(t(x))``.
"""
from __future__ import annotations

import math
from functools import cached_property
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def compose(s: Perm, t: Perm) -> Perm:
    """s * t, i.e. x -> s(t(x))."""
    return tuple(s[x] for x in t)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y] = x
    return tuple(out)


def is_permutation(p: Sequence[int], n: int) -> bool:
    return len(p) == n and sorted(p) == list(range(n))


def cycle_perm(n: int, *cycles: Sequence[int]) -> Perm:
    """Build a permutation of 0..n-1 from disjoint cycles."""
    out = list(range(n))
    for c in cycles:
        for a, b in zip(c, list(c[1:]) + [c[0]]):
            out[a] = b
    return tuple(out)


class _Level:
    __slots__ = ("point", "transversal")

    def __init__(self, point: int):
        self.point = point
        self.transversal: dict[int, Perm] = {}


class PermGroup:
    """A permutation group on 0..degree-1 given by generators.

    The stabilizer chain is built on first use; the group value itself is
    immutable.  Generators are kept exactly as given (identity removed).
    """

    def __init__(self, degree: int, generators: Iterable[Sequence[int]] = ()):
        gens = []
        ident = identity_perm(degree)
        for g in generators:
            g = tuple(int(v) for v in g)
            if not is_permutation(g, degree):
                raise ValueError(f"{g} is not a permutation of 0..{degree - 1}")
            if g != ident and g not in gens:
                gens.append(g)
        self.degree = degree
        self.generators: tuple[Perm, ...] = tuple(gens)

    def __repr__(self) -> str:
        return f"<PermGroup degree {self.degree}, {len(self.generators)} generators, order {self.order}>"

    # -- stabilizer chain -------------------------------------------------

    @cached_property
    def _chain(self) -> tuple[list[_Level], list[Perm]]:
        n = self.degree
        ident = identity_perm(n)
        strong: list[Perm] = list(self.generators)
        levels: list[_Level] = []

        def ensure_moved(h: Perm) -> None:
            if all(h[lv.point] == lv.point for lv in levels):
                levels.append(_Level(next(x for x in range(n) if h[x] != x)))

        def level_gens(k: int) -> list[Perm]:
            return [s for s in strong if all(s[levels[j].point] == levels[j].point for j in range(k))]

        def rebuild(k: int) -> None:
            lv = levels[k]
            gens = level_gens(k)
            lv.transversal = {lv.point: ident}
            frontier = [lv.point]
            while frontier:
                nxt = []
                for p in frontier:
                    u = lv.transversal[p]
                    for s in gens:
                        q = s[p]
                        if q not in lv.transversal:
                            lv.transversal[q] = compose(s, u)
                            nxt.append(q)
                frontier = nxt

        def sift(h: Perm, start: int) -> tuple[Perm, int]:
            for j in range(start, len(levels)):
                lv = levels[j]
                q = h[lv.point]
                if q not in lv.transversal:
                    return h, j
                h = compose(invert(lv.transversal[q]), h)
            return h, len(levels)

        for g in strong:
            ensure_moved(g)
        for k in range(len(levels)):
            rebuild(k)

        i = len(levels) - 1
        while i >= 0:
            lv = levels[i]
            found = None
            for p, u in list(lv.transversal.items()):
                for s in level_gens(i):
                    schreier = compose(invert(lv.transversal[s[p]]), compose(s, u))
                    if schreier == ident:
                        continue
                    h, j = sift(schreier, i + 1)
                    if h != ident:
                        found = (h, j)
                        break
                if found:
                    break
            if found is None:
                i -= 1
                continue
            h, j = found
            strong.append(h)
            if j == len(levels):
                ensure_moved(h)
            for k in range(i + 1, len(levels)):
                rebuild(k)
            i = j if j < len(levels) else len(levels) - 1
        return levels, strong

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lv.point for lv in self._chain[0])

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        return tuple(self._chain[1])

    @cached_property
    def order(self) -> int:
        return math.prod(len(lv.transversal) for lv in self._chain[0])

    def contains(self, p: Sequence[int]) -> bool:
        """Membership by sifting through the stabilizer chain."""
        h = tuple(int(v) for v in p)
        if not is_permutation(h, self.degree):
            return False
        for lv in self._chain[0]:
            q = h[lv.point]
            u = lv.transversal.get(q)
            if u is None:
                return False
            h = compose(invert(u), h)
        return h == identity_perm(self.degree)

    def __contains__(self, p) -> bool:
        return self.contains(p)

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once, from products of transversal elements."""
        levels = self._chain[0]
        ident = identity_perm(self.degree)

        def walk(k: int, acc: Perm) -> Iterator[Perm]:
            if k < 0:
                yield acc
                return
            for u in levels[k].transversal.values():
                yield from walk(k - 1, compose(u, acc))

        if not levels:
            yield ident
            return
        yield from walk(len(levels) - 1, ident)

    def orbit(self, point: int) -> set[int]:
        seen = {point}
        frontier = [point]
        while frontier:
            nxt = []
            for p in frontier:
                for g in self.generators:
                    if g[p] not in seen:
                        seen.add(g[p])
                        nxt.append(g[p])
            frontier = nxt
        return seen

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree

    def same_group(self, other: "PermGroup") -> bool:
        """True if both generate the same subgroup of S_degree."""
        return (self.degree == other.degree and self.order == other.order
                and all(other.contains(g) for g in self.generators))

    def to_dict(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [list(g) for g in self.generators],
            "order": str(self.order),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PermGroup":
        group = cls(int(data["degree"]), data["generators"])
        if "order" in data and int(data["order"]) != group.order:
            raise ValueError(f"stated order {data['order']} differs from computed {group.order}")
        return group


def perm_group_order(P: PermGroup) -> int:
    return P.order


def contains(P: PermGroup, p: Sequence[int]) -> bool:
    return P.contains(p)
