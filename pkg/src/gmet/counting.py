"""Closed-form counts of invariant and bi-invariant metrics.

``k(G)`` and ``k*(G)`` are the Bell indices of the number of invariant and
bi-invariant metrics; this module evaluates their closed forms for the
standard families, the partition-function helpers they need, and the
bi-invariance and commutativity degrees.  Every result is exact.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import (
    ElementaryAbelianTwoGroup,
    InconsistentParity,
    NonIntegralResult,
    NotAbelian,
    NotAmbivalent,
    OutOfRange,
)
from .groups import Group, cyclic, direct_product, dicyclic, involution_count, is_ambivalent
from .isomorphism import is_isomorphic
from .partitions import k_bi_invariant, k_invariant


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralResult(f"{what} evaluated to {value}")
    return int(value)


def abelian_k(n: int, s: int) -> int:
    """k of an abelian group of order n with s cyclic 2-power factors."""
    if n < 1 or s < 0 or (s == 0) != (n % 2 == 1) or (s and n % 2 ** s):
        raise InconsistentParity(f"order {n} is incompatible with {s} cyclic 2-factors")
    if s == 0:
        return (n - 1) // 2
    return n // 2 + 2 ** (s - 1) - 1


# --------------------------------------------------------------------------
# dihedral, dicyclic and quasidihedral families


def dihedral_k(n: int) -> int:
    """k(D_n) for the dihedral group of order 2n: 3m+1 for n = 2m+1, 3m for n = 2m."""
    if n < 3:
        raise OutOfRange(f"dihedral_k needs n >= 3, got {n}")
    m = n // 2
    return 3 * m + 1 if n % 2 else 3 * m


def dihedral_kstar(n: int) -> int:
    if n < 3:
        raise OutOfRange(f"dihedral_kstar needs n >= 3, got {n}")
    return (n + 1) // 2 if n % 2 else (n + 4) // 2


def dicyclic_k(n: int) -> int:
    """k(Q_4n) = 2n."""
    if n < 2:
        raise OutOfRange(f"dicyclic_k needs n >= 2, got {n}")
    return 2 * n


def dicyclic_kstar(n: int) -> int:
    """n + 2 for even n (ambivalent), n + 1 for odd n."""
    if n < 2:
        raise OutOfRange(f"dicyclic_kstar needs n >= 2, got {n}")
    return n + 2 if n % 2 == 0 else n + 1


def _check_qd(n: int, sign: str) -> None:
    if n < 4:
        raise OutOfRange(f"quasidihedral groups need n >= 4, got {n}")
    if sign not in "+-" or len(sign) != 1:
        raise OutOfRange(f"sign must be '+' or '-', got {sign!r}")


def quasidihedral_k(n: int, sign: str) -> int:
    """5 * 2^(n-3) for QD_n^-, 2^(n-1) + 1 for QD_n^+."""
    _check_qd(n, sign)
    return 5 * 2 ** (n - 3) if sign == "-" else 2 ** (n - 1) + 1


def quasidihedral_kstar(n: int, sign: str) -> int:
    """3 * 2^(n-4) + 2 for QD_n^-, 5 * 2^(n-4) + 1 for QD_n^+."""
    _check_qd(n, sign)
    return 3 * 2 ** (n - 4) + 2 if sign == "-" else 5 * 2 ** (n - 4) + 1


# --------------------------------------------------------------------------
# symmetric and alternating groups


def _involution_sum(n: int, even_only: bool) -> Fraction:
    return sum((Fraction(1, 2 ** k * math.factorial(k) * math.factorial(n - 2 * k))
                for k in range(n // 2 + 1) if not even_only or k % 2 == 0), Fraction(0))


def sn_rational(n: int) -> Fraction:
    """s_n, with n! s_n the number of solutions of x^2 = e in S_n."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    return _involution_sum(n, False)


def an_rational(n: int) -> Fraction:
    """a_n, with n! a_n the number of solutions of x^2 = e in A_n."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    return _involution_sum(n, True)


def symmetric_k(n: int) -> int:
    """k(S_n) = n! (s_n + 1) / 2 - 1."""
    if n < 3:
        raise OutOfRange(f"symmetric_k needs n >= 3, got {n}")
    return _integral(Fraction(math.factorial(n)) * (sn_rational(n) + 1) / 2 - 1, f"k(S{n})")


def alternating_k(n: int) -> int:
    """k(A_n) = n! (a_n + 1/2) / 2 - 1."""
    if n < 4:
        raise OutOfRange(f"alternating_k needs n >= 4, got {n}")
    value = Fraction(math.factorial(n)) * (an_rational(n) + Fraction(1, 2)) / 2 - 1
    return _integral(value, f"k(A{n})")


@lru_cache(maxsize=None)
def _partition_table(n: int) -> tuple[int, ...]:
    """p(0..n) by Euler's pentagonal number recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p[m] = total
    return tuple(p)


def partition_number(n: int) -> int:
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    return _partition_table(n)[n]


@lru_cache(maxsize=None)
def self_conjugate_count(n: int) -> int:
    """Self-conjugate partitions of n, counted as partitions into distinct odd parts."""
    if n < 0:
        raise OutOfRange("n must be nonnegative")
    ways = [1] + [0] * n
    for part in range(1, n + 1, 2):
        for total in range(n, part - 1, -1):
            ways[total] += ways[total - part]
    return ways[n]


def symmetric_kstar(n: int) -> int:
    """k*(S_n) = p(n) - 1 (S_n is ambivalent with p(n) classes)."""
    if n < 1:
        raise OutOfRange(f"symmetric_kstar needs n >= 1, got {n}")
    return partition_number(n) - 1


def alternating_class_count(n: int) -> int:
    """c(A_n) = 2 f_n + (p(n) - f_n) / 2, and c(A_1) = 1."""
    if n < 1:
        raise OutOfRange(f"alternating_class_count needs n >= 1, got {n}")
    if n == 1:
        return 1
    f = self_conjugate_count(n)
    return _integral(2 * f + Fraction(partition_number(n) - f, 2), f"c(A{n})")


ALTERNATING_AMBIVALENT = frozenset({1, 2, 5, 6, 10, 14})


def alternating_is_ambivalent(n: int) -> bool:
    return n in ALTERNATING_AMBIVALENT


def alternating_kstar(n: int) -> int:
    """k*(A_n) = c(A_n) - 1, available only where A_n is ambivalent."""
    if not alternating_is_ambivalent(n):
        raise NotAmbivalent(f"A{n} is not ambivalent; k* needs its real class count")
    return alternating_class_count(n) - 1


# --------------------------------------------------------------------------
# special linear groups


def _odd_prime_power(q: int) -> bool:
    if q < 3 or q % 2 == 0:
        return False
    p = next(d for d in range(2, q + 1) if q % d == 0)
    while q % p == 0:
        q //= p
    return q == 1


def sl2_k(q: int) -> int:
    """k(SL_2(F_q)) = (q^3 - q) / 2 for odd q (-I is the only involution)."""
    if not _odd_prime_power(q):
        raise OutOfRange(f"sl2_k needs an odd prime power, got {q}")
    return (q ** 3 - q) // 2


def sl2_kstar(q: int) -> int:
    """k*(SL_2(F_q)) = c - 1 = q + 3 for q = 1 mod 4, where the group is ambivalent."""
    if not _odd_prime_power(q) or q % 4 != 1:
        raise OutOfRange(f"sl2_kstar needs an odd prime power q = 1 mod 4, got {q}")
    return q + 3


# --------------------------------------------------------------------------
# products and semidirect products


def product_k(G: Group, H: Group) -> int:
    """k(G x H) = (|G||H| + k2(G) k2(H)) / 2 - 1."""
    total = Fraction(G.order * H.order + involution_count(G) * involution_count(H), 2) - 1
    return _integral(total, "k of a direct product")


def product_kstar_with_ambivalent(G: Group, A: Group) -> int:
    """k*(G x A) = c(A) (k*(G) + 1) - 1, for an ambivalent group A.

    With every class of A real, c(A) = k*(A) + 1; for A = C2^r this is
    2^r (k*(G) + 1) - 1.
    """
    if not is_ambivalent(A):
        raise NotAmbivalent(f"{A.label or 'the second factor'} is not ambivalent")
    return (k_bi_invariant(A) + 1) * (k_bi_invariant(G) + 1) - 1


def semidirect_k_bounds(G: Group, H: Group) -> tuple[Fraction, Fraction]:
    """|G|(|H| - 1)/2 + k(G) <= k(G x| H) <= k(H)|G| + k(G), as exact rationals."""
    kg = k_invariant(G)
    lower = Fraction(G.order * (H.order - 1), 2) + kg
    upper = Fraction(k_invariant(H) * G.order + kg)
    return lower, upper


def semidirect_k_odd_H(G: Group, H: Group) -> int:
    """The exact value |G|(|H| - 1)/2 + k(G) when |H| is odd."""
    if H.order % 2 == 0:
        raise OutOfRange("the exact semidirect formula needs |H| odd")
    return _integral(semidirect_k_bounds(G, H)[0], "semidirect k")


def generalized_dihedral_k(G: Group) -> int:
    """k(GD(G)) = (3|G| + k2(G)) / 2 - 1 for abelian G not elementary 2-abelian."""
    if not G.is_abelian:
        raise NotAbelian(f"{G.label or 'the group'} is not abelian")
    if involution_count(G) == G.order:
        raise ElementaryAbelianTwoGroup("G is an elementary abelian 2-group")
    return _integral(Fraction(3 * G.order + involution_count(G), 2) - 1, "k(GD(G))")


# --------------------------------------------------------------------------
# degrees and the k = k* classification


def bi_invariance_degree(G: Group) -> Fraction:
    """b(G) = k*(G) / k(G); taken as 1 for the trivial group."""
    k = k_invariant(G)
    return Fraction(1) if k == 0 else Fraction(k_bi_invariant(G), k)


def commutativity_degree(G: Group) -> Fraction:
    """d(G) = c(G) / |G|."""
    return Fraction(G.conjugacy.count, G.order)


def all_invariant_are_bi(G: Group) -> bool:
    return k_invariant(G) == k_bi_invariant(G)


def classify_b1(G: Group) -> str:
    """'abelian', 'q8_times_elementary_2' (Q8 x C2^r) or 'neither'.

    The classification is structural, by an isomorphism test against
    Q8 x C2^r, so it can be checked against all_invariant_are_bi.
    """
    if G.is_abelian:
        return "abelian"
    r = G.order.bit_length() - 4
    if G.order >= 8 and G.order == 8 * 2 ** r:
        target = direct_product(dicyclic(2), *([cyclic(2)] * r)) if r else dicyclic(2)
        if is_isomorphic(G, target):
            return "q8_times_elementary_2"
    return "neither"
