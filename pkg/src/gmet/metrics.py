"""Weight functions and the invariant metrics they define.

A weight ``w`` on a group is positive off the identity, invariant under
inversion and subadditive; ``d(x, y) = w(x y^-1)`` is then a right
invariant metric.  All values are exact ``Fraction`` objects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    InvalidWeight,
    NotADivisor,
    NotAPartialOrder,
    NotAscending,
    NotASubgroup,
    NotUnitarySymmetric,
    ScaleNonPositive,
)
from .groups import Group, cyclic, direct_product, is_subgroup
from .partitions import BlockPartition, is_unitary_symmetric


@dataclass(frozen=True)
class WeightFunction:
    group: Group
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.values) != self.group.order:
            raise InvalidWeight(f"{len(self.values)} values for a group of order {self.group.order}")
        object.__setattr__(self, "values", tuple(Fraction(v) for v in self.values))

    def __getitem__(self, x: int) -> Fraction:
        return self.values[x]

    def __eq__(self, other) -> bool:
        return (isinstance(other, WeightFunction) and other.values == self.values
                and (other.group is self.group
                     or np.array_equal(other.group.table, self.group.table)))

    def __hash__(self) -> int:
        return hash(self.values)


@dataclass(frozen=True)
class MetricView:
    """The right invariant metric d(x, y) = w(x y^-1) of a weight."""

    weight: WeightFunction

    def distance(self, x: int, y: int) -> Fraction:
        G = self.weight.group
        return self.weight.values[G.mul(x, G.inv(y))]

    def table(self) -> np.ndarray:
        """Full n x n distance table (object array of Fractions)."""
        G = self.weight.group
        quot = G.table[:, G.inverse]  # quot[x, y] = x y^-1
        vals = np.array(self.weight.values, dtype=object)
        return vals[quot]


def metric_from_weight(w: WeightFunction) -> MetricView:
    return MetricView(w)


@dataclass
class AxiomReport:
    positivity: bool
    symmetry: bool
    triangle: bool
    witnesses: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.positivity and self.symmetry and self.triangle


def _as_integers(values: Sequence[Fraction]) -> np.ndarray:
    den = reduce(math.lcm, (v.denominator for v in values), 1)
    ints = [int(v * den) for v in values]
    if max(abs(v) for v in ints) < 2 ** 61:
        return np.array(ints, dtype=np.int64)
    return np.array(ints, dtype=object)


def verify_weight_axioms(G: Group, w: WeightFunction | Sequence) -> AxiomReport:
    """Check positivity, symmetry and subadditivity exhaustively.

    The first witness of each failing axiom is recorded in ``witnesses``.
    """
    values = w.values if isinstance(w, WeightFunction) else tuple(Fraction(v) for v in w)
    report = AxiomReport(True, True, True)
    if values[0] != 0:
        report.positivity = False
        report.witnesses["positivity"] = 0
    else:
        bad = [x for x in range(1, G.order) if values[x] <= 0]
        if bad:
            report.positivity = False
            report.witnesses["positivity"] = bad[0]
    bad = [x for x in range(G.order) if values[x] != values[int(G.inverse[x])]]
    if bad:
        report.symmetry = False
        report.witnesses["symmetry"] = bad[0]
    ints = _as_integers(values)
    violation = ints[G.table] > ints[:, None] + ints[None, :]
    if violation.any():
        x, y = (int(v) for v in np.argwhere(violation)[0])
        report.triangle = False
        report.witnesses["triangle"] = (x, y)
    return report


def check_weight(w: WeightFunction) -> WeightFunction:
    report = verify_weight_axioms(w.group, w)
    if not report.ok:
        raise InvalidWeight(f"weight axioms fail: {report.witnesses}")
    return w


def invariance_class(G: Group, d) -> str:
    """Classify a full distance table as 'bi', 'right', 'left' or 'none'."""
    d = np.asarray(d, dtype=object)
    right = all((d[np.ix_(G.table[:, h], G.table[:, h])] == d).all() for h in range(G.order))
    left = all((d[np.ix_(G.table[h, :], G.table[h, :])] == d).all() for h in range(G.order))
    if right and left:
        return "bi"
    return "right" if right else "left" if left else "none"


def level_partition(G: Group, values: Sequence) -> BlockPartition:
    """Partition of G into the level sets of ``values`` (no axiom check)."""
    levels: dict[Fraction, list[int]] = {}
    for x, v in enumerate(values):
        levels.setdefault(Fraction(v), []).append(x)
    return BlockPartition.from_blocks(levels.values(), G.order)


def induced_partition(G: Group, w: WeightFunction) -> BlockPartition:
    """The unitary symmetric partition of level sets of a valid weight."""
    check_weight(w)
    return level_partition(G, w.values)


def p_equivalent(G: Group, w1: WeightFunction, w2: WeightFunction) -> bool:
    """True iff the two weights induce the same partition."""
    return induced_partition(G, w1) == induced_partition(G, w2)


def weight_from_partition(G: Group, P: BlockPartition) -> WeightFunction:
    """Canonical integral weight: the i-th nonidentity block gets s + i.

    All nonzero values lie in [s+1, 2s], so the largest is at most twice the
    smallest and subadditivity holds automatically.
    """
    if not is_unitary_symmetric(G, P):
        raise NotUnitarySymmetric(f"{P.blocks} is not unitary symmetric")
    s = P.size - 1
    values = [0] * G.order
    for i, block in enumerate(P.blocks[1:], start=1):
        for x in block:
            values[x] = s + i
    return WeightFunction(G, tuple(Fraction(v) for v in values))


def add_weights(w1: WeightFunction, w2: WeightFunction) -> WeightFunction:
    if w1.group is not w2.group and w1.group.order != w2.group.order:
        raise InvalidWeight("weights live on different groups")
    return check_weight(WeightFunction(w1.group, tuple(a + b for a, b in zip(w1.values, w2.values))))


def scale_weight(w: WeightFunction, alpha) -> WeightFunction:
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ScaleNonPositive(f"scale factor {alpha} is not positive")
    return check_weight(WeightFunction(w.group, tuple(alpha * v for v in w.values)))


def combine_weights(op: str, w1: WeightFunction, w2: WeightFunction | None = None,
                    *, alpha=None) -> WeightFunction:
    """Pointwise 'add' of two weights or 'scale' of one by alpha > 0."""
    if op == "add":
        if w2 is None:
            raise ValueError("add needs two weights")
        return add_weights(w1, w2)
    if op == "scale":
        return scale_weight(w1, alpha)
    raise ValueError(f"unknown operation {op!r}")


# --------------------------------------------------------------------------
# named families


def hamming_weight(G: Group) -> WeightFunction:
    return WeightFunction(G, tuple(Fraction(int(x != 0)) for x in range(G.order)))


def coordinates(factors: Sequence[Group]) -> list[tuple[int, ...]]:
    """Coordinate tuples of the lexicographically indexed direct product."""
    out = [()]
    for F in factors:
        out = [c + (i,) for c in out for i in range(F.order)]
    return out


def product_hamming_weight(factors: Sequence[Group]) -> WeightFunction:
    """Number of nonidentity coordinates, on direct_product(*factors)."""
    G = direct_product(*factors)
    return WeightFunction(G, tuple(Fraction(sum(1 for c in cs if c)) for cs in coordinates(factors)))


def lee_weight(m: int) -> WeightFunction:
    return WeightFunction(cyclic(m), tuple(Fraction(min(x, m - x)) for x in range(m)))


def extended_lee_weight(m: int, n: int) -> WeightFunction:
    """w(x) = min(x, m - x, n) on Z_m, for n | m and 1 <= n <= m/2."""
    if n < 1 or m % n or 2 * n > m:
        raise NotADivisor(f"extended Lee weight needs n | m and 1 <= n <= m/2, got m={m}, n={n}")
    return WeightFunction(cyclic(m), tuple(Fraction(min(x, m - x, n)) for x in range(m)))


def chain_weight(G: Group, chain: Sequence[Iterable[int]]) -> WeightFunction:
    """w(x) = least i with x in H_i, for {e} = H_0 < H_1 < ... < H_k = G."""
    subgroups = [frozenset(int(x) for x in H) for H in chain]
    for H in subgroups:
        if not is_subgroup(G, H):
            raise NotASubgroup(f"{sorted(H)} is not a subgroup")
    if not subgroups or subgroups[0] != {0} or subgroups[-1] != frozenset(range(G.order)):
        raise NotAscending("chain must start at {e} and end at G")
    for a, b in zip(subgroups, subgroups[1:]):
        if not a < b:
            raise NotAscending(f"{sorted(a)} is not strictly inside {sorted(b)}")
    values = [next(i for i, H in enumerate(subgroups) if x in H) for x in range(G.order)]
    return check_weight(WeightFunction(G, tuple(Fraction(v) for v in values)))


def _partial_order(k: int, relation: Iterable[tuple[int, int]]) -> list[set[int]]:
    """below[j] = {i : i <= j}; relation pairs (i, j) mean i <= j, 0-based."""
    below = [{j} for j in range(k)]
    for i, j in relation:
        if not (0 <= i < k and 0 <= j < k):
            raise NotAPartialOrder(f"pair {(i, j)} outside 0..{k - 1}")
        below[j].add(i)
    for j in range(k):
        for i in below[j]:
            if i != j and j in below[i]:
                raise NotAPartialOrder(f"{i} and {j} are mutually below each other")
            if not below[i] <= below[j]:
                raise NotAPartialOrder(f"relation is not transitive at {(i, j)}")
    return below


def poset_weight(factors: Sequence[Group], relation: Iterable[tuple[int, int]]) -> WeightFunction:
    """Size of the down-closure of the support, on direct_product(*factors).

    ``relation`` lists pairs (i, j), 0-based, meaning coordinate i lies
    below coordinate j; reflexive pairs are implied.  The relation must
    already be transitive and antisymmetric.
    """
    below = _partial_order(len(factors), relation)
    G = direct_product(*factors)
    values = []
    for cs in coordinates(factors):
        ideal = set()
        for j, c in enumerate(cs):
            if c:
                ideal |= below[j]
        values.append(Fraction(len(ideal)))
    return check_weight(WeightFunction(G, tuple(values)))


def _principal_ideal_mobius(n: int) -> dict[int, int]:
    """mu({0}, dZ_n) for every divisor d of n, by the poset recursion.

    The principal ideals of Z_n are dZ_n for d | n, with dZ_n inside eZ_n
    iff e | d; the zero ideal is nZ_n.
    """
    divisors = [d for d in range(1, n + 1) if n % d == 0]
    mu: dict[int, int] = {}
    for d in sorted(divisors, reverse=True):  # from the zero ideal upwards
        if d == n:
            mu[d] = 1
        else:
            mu[d] = -sum(mu[e] for e in divisors if e != d and e % d == 0)
    return mu


def homogeneous_weight_zn(n: int, lam=1) -> WeightFunction:
    """w(x) = lam * (1 - mu(0, xZ_n) / |units * x|) on Z_n.

    This weight is not subadditive for every n (on Z_6 it fails at 1 + 1),
    so no axiom check is applied; use verify_weight_axioms to inspect it.
    """
    if n < 2:
        raise ValueError("homogeneous_weight_zn needs n >= 2")
    lam = Fraction(lam)
    mu = _principal_ideal_mobius(n)
    gcds = [math.gcd(x, n) for x in range(n)]
    associates = {d: gcds.count(d) for d in mu}
    values = tuple(lam * (1 - Fraction(mu[g], associates[g])) for g in gcds)
    return WeightFunction(cyclic(n), values)
