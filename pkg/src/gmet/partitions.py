"""Unitary symmetric (and conjugate) partitions of a group, and Bell numbers.

Invariant metrics on a finite group correspond, up to inducing the same
partition, to partitions of the group that keep the identity alone and are
closed under inversion.  Such partitions are exactly the coarsenings of
the Lee partition {{x, x^-1}}, so they are enumerated here as set
partitions of the nonidentity Lee blocks.  Bi-invariant metrics likewise
correspond to coarsenings of the partition into the sets C_g U C_{g^-1}.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationCapExceeded
from .groups import Group, involution_count

DEFAULT_ENUMERATION_CAP = 12


@dataclass(frozen=True)
class BlockPartition:
    """A partition of 0..n-1 kept in canonical form.

    Blocks are sorted tuples, ordered by their smallest element; so when
    the partition is unitary, block 0 is ``(0,)``.  Two partitions are
    equal exactly when their canonical blocks are.
    """

    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "BlockPartition":
        canon = tuple(sorted(b for b in (tuple(sorted(int(x) for x in blk)) for blk in blocks) if b))
        seen = [x for b in canon for x in b]
        if len(seen) != len(set(seen)):
            raise ValueError("blocks are not disjoint")
        size = len(seen) if n is None else n
        if sorted(seen) != list(range(size)):
            raise ValueError(f"blocks do not cover 0..{size - 1}")
        return cls(canon)

    canonical = True

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    @property
    def size(self) -> int:
        """Number of blocks, including the identity block."""
        return len(self.blocks)

    @cached_property
    def block_of(self) -> tuple[int, ...]:
        out = [0] * self.n
        for i, b in enumerate(self.blocks):
            for x in b:
                out[x] = i
        return tuple(out)

    def refines(self, other: "BlockPartition") -> bool:
        """True if every block of self lies inside a block of other."""
        return all(len({other.block_of[x] for x in b}) == 1 for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)


def hamming_partition(G: Group) -> BlockPartition:
    if G.order == 1:
        return BlockPartition(((0,),))
    return BlockPartition(((0,), tuple(range(1, G.order))))


def is_unitary_symmetric(G: Group, P: BlockPartition) -> bool:
    """{e} is a block and every block is closed under inversion."""
    if P.n != G.order or not P.blocks or P.blocks[0] != (0,):
        return False
    inv = G.inverse
    return all(P.block_of[int(inv[x])] == i for i, b in enumerate(P.blocks) for x in b)


def is_conjugate_partition(G: Group, P: BlockPartition) -> bool:
    """Unitary symmetric with every block a union of conjugacy classes."""
    if not is_unitary_symmetric(G, P):
        return False
    return all(len({P.block_of[x] for x in c}) == 1 for c in G.conjugacy.classes)


def lee_partition(G: Group) -> BlockPartition:
    """The finest unitary symmetric partition, with blocks {x, x^-1}."""
    inv = G.inverse
    return BlockPartition.from_blocks(({x, int(inv[x])} for x in range(G.order)
                                       if x <= int(inv[x])), G.order)


def finest_conjugate_partition(G: Group) -> BlockPartition:
    """Blocks C_g U C_{g^-1}: the finest unitary symmetric conjugate partition."""
    conj = G.conjugacy
    inv = G.inverse
    blocks = {}
    for c, cls in enumerate(conj.classes):
        partner = conj.class_of[int(inv[cls[0]])]
        key = min(c, partner)
        blocks.setdefault(key, set()).update(cls)
    return BlockPartition.from_blocks(blocks.values(), G.order)


def k_invariant(G: Group) -> int:
    """k(G) = (n + k2(G))/2 - 1; equals the number of nonidentity Lee blocks."""
    total = G.order + involution_count(G)
    k = total // 2 - 1
    assert total % 2 == 0 and k == lee_partition(G).size - 1
    return k


def k_bi_invariant(G: Group) -> int:
    """k*(G) = (c(G) + c2(G))/2 - 1; equals the nonidentity conjugate-Lee block count."""
    total = G.conjugacy.count + G.conjugacy.real_count
    k = total // 2 - 1
    assert total % 2 == 0 and k == finest_conjugate_partition(G).size - 1
    return k


_bell_cache: list[int] = [1]
_bell_row: list[int] = [1]


def bell(k: int) -> int:
    """The k-th Bell number, from the Bell triangle (memoized)."""
    global _bell_row
    if k < 0:
        raise ValueError("bell(k) needs k >= 0")
    while len(_bell_cache) <= k:
        row = [_bell_row[-1]]
        for v in _bell_row:
            row.append(row[-1] + v)
        _bell_row = row
        _bell_cache.append(row[0])
    return _bell_cache[k]


def count_invariant_metrics(G: Group) -> int:
    """M(G) = B_{k(G)}."""
    return bell(k_invariant(G))


def count_bi_invariant_metrics(G: Group) -> int:
    """M*(G) = B_{k*(G)}."""
    return bell(k_bi_invariant(G))


def restricted_growth_strings(k: int) -> Iterator[tuple[int, ...]]:
    """All restricted growth strings of length k, in lexicographic order.

    a[0] = 0 and a[i] <= 1 + max(a[:i]); there are B_k of them.
    """
    if k == 0:
        yield ()
        return
    a = [0] * k
    prefix_max = [0] * k  # prefix_max[i] = max(a[:i])
    while True:
        yield tuple(a)
        i = k - 1
        while i > 0 and a[i] == prefix_max[i] + 1:
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, k):
            a[j] = 0
            prefix_max[j] = max(prefix_max[j - 1], a[j - 1])


def coarsen(base: BlockPartition, labels: Sequence[int]) -> BlockPartition:
    """Merge the nonidentity blocks of ``base`` according to ``labels``."""
    groups: dict[int, list[int]] = {}
    for block, label in zip(base.blocks[1:], labels):
        groups.setdefault(label, []).extend(block)
    merged = [tuple(sorted(v)) for _, v in sorted(groups.items())]
    return BlockPartition(tuple([base.blocks[0]] + sorted(merged)))


def _coarsenings(base: BlockPartition, cap: int | None) -> Iterator[BlockPartition]:
    k = base.size - 1
    if cap is not None and k > cap:
        raise EnumerationCapExceeded(f"{k} blocks to merge exceeds the enumeration cap {cap}")
    return (coarsen(base, labels) for labels in restricted_growth_strings(k))


def enumerate_unitary_symmetric_partitions(
    G: Group, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> Iterator[BlockPartition]:
    """Every unitary symmetric partition of G, exactly once; B_{k(G)} in total."""
    return _coarsenings(lee_partition(G), cap)


def enumerate_conjugate_partitions(
    G: Group, cap: int | None = DEFAULT_ENUMERATION_CAP
) -> Iterator[BlockPartition]:
    """Every unitary symmetric conjugate partition of G; B_{k*(G)} in total."""
    return _coarsenings(finest_conjugate_partition(G), cap)
