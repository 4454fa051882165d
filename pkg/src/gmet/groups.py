"""Finite groups as validated multiplication tables.

A :class:`Group` stores an ``n x n`` numpy array ``table`` with
``table[i, j]`` the index of the product ``x_i * x_j``.  Index 0 is always
the identity.  Every constructor in this module returns a ``Group``; all of
them are immutable after construction and safe to share.

Permutations follow the convention ``(s * t)(x) = s(t(x))`` throughout.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    MissingFieldTable,
    NotAbelian,
    NotAGroup,
    NotAHomomorphism,
    NotAnAutomorphism,
    NotASubgroup,
    NotPrimePower,
    OrderCapExceeded,
)

DEFAULT_ORDER_CAP = 4096
FULL_ASSOCIATIVITY_LIMIT = 256
ASSOCIATIVITY_SAMPLES = 1_000_000
SYMMETRIC_DEGREE_LIMIT = 7


def order_cap() -> int:
    """Return the group order cap, honouring the GMET_ORDER_CAP variable."""
    raw = os.environ.get("GMET_ORDER_CAP")
    if raw:
        return int(raw)
    return DEFAULT_ORDER_CAP


def _check_cap(order: int, what: str) -> None:
    cap = order_cap()
    if order > cap:
        raise OrderCapExceeded(f"{what} has order {order}, above the cap {cap}")


def _index_dtype(n: int):
    return np.int16 if n <= np.iinfo(np.int16).max else np.int32


@dataclass(frozen=True)
class ConjugacyData:
    """Conjugacy classes of a group.

    ``classes`` are sorted tuples of element indices ordered by their
    smallest element, so class 0 is the identity class.  ``class_of`` maps
    an element to its class and ``real_flags[c]`` says whether class ``c``
    is closed under inversion.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    real_flags: tuple[bool, ...]

    @property
    def count(self) -> int:
        return len(self.classes)

    @property
    def real_count(self) -> int:
        return sum(self.real_flags)


class Group:
    """A finite group given by its multiplication table.

    Build instances with :func:`from_cayley_table` or one of the named
    constructors rather than calling this class directly.
    """

    __slots__ = ("table", "names", "label", "inverse", "__dict__")

    def __init__(self, table: np.ndarray, names: Sequence[str], label: str = ""):
        table = np.ascontiguousarray(table, dtype=_index_dtype(len(table)))
        table.setflags(write=False)
        self.table = table
        self.names = tuple(names)
        self.label = label
        inverse = np.argmin(table, axis=1).astype(table.dtype)
        inverse.setflags(write=False)
        self.inverse = inverse

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def identity(self) -> int:
        return 0

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        tag = f" {self.label}" if self.label else ""
        return f"<Group{tag} of order {self.order}>"

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def inv(self, x: int) -> int:
        return int(self.inverse[x])

    def conj(self, g: int, x: int) -> int:
        """Return g x g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    @cached_property
    def rows(self) -> list[list[int]]:
        """The table as nested Python lists, for tight scalar loops."""
        return self.table.tolist()

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        power = np.arange(n)
        idx = np.arange(n)
        k = 1
        while True:
            fresh = (power == 0) & (orders == 0)
            orders[fresh] = k
            if orders.all():
                break
            power = self.table[power, idx]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def squares(self) -> np.ndarray:
        return self.table[np.arange(self.order), np.arange(self.order)]

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        if self.order == 1:
            return ()
        ranked = sorted(range(1, self.order), key=lambda x: (-int(self.element_orders[x]), x))
        gens: list[int] = []
        inside = np.zeros(self.order, dtype=bool)
        inside[0] = True
        for x in ranked:
            if inside[x]:
                continue
            gens.append(x)
            inside[:] = False
            inside[subgroup_generated(self, gens)] = True
            if inside.all():
                break
        return tuple(gens)

    @cached_property
    def conjugacy(self) -> ConjugacyData:
        n = self.order
        parent = list(range(n))

        def find(a: int) -> int:
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        xs = np.arange(n)
        for g in self.generators:
            image = self.table[self.table[g, xs], self.inverse[g]]
            for x, y in zip(xs.tolist(), image.tolist()):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
        buckets: dict[int, list[int]] = {}
        for x in range(n):
            buckets.setdefault(find(x), []).append(x)
        classes = tuple(sorted(tuple(b) for b in buckets.values()))
        class_of = [0] * n
        for c, block in enumerate(classes):
            for x in block:
                class_of[x] = c
        real = tuple(class_of[int(self.inverse[block[0]])] == c for c, block in enumerate(classes))
        return ConjugacyData(classes, tuple(class_of), real)

    @cached_property
    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(int(x) for x in np.flatnonzero((t == t.T).all(axis=1)))


# --------------------------------------------------------------------------
# validation


def validate_table(raw, *, samples: int = ASSOCIATIVITY_SAMPLES) -> np.ndarray:
    """Check the group axioms on a raw table and return it with identity at 0.

    Raises NotAGroup with the first violating triple.
    """
    return _validated(raw, samples)[0]


def _validated(raw, samples: int = ASSOCIATIVITY_SAMPLES) -> tuple[np.ndarray, int]:
    table = np.asarray(raw)
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
        raise NotAGroup("table must be a non-empty square array")
    n = table.shape[0]
    if not np.issubdtype(table.dtype, np.integer):
        raise NotAGroup("table entries must be integers")
    if table.min() < 0 or table.max() >= n:
        bad = np.argwhere((table < 0) | (table >= n))[0]
        raise NotAGroup("entry out of range", (int(bad[0]), int(bad[1]), int(table[bad[0], bad[1]])))
    table = table.astype(_index_dtype(n))
    expected = np.arange(n)
    for axis in (1, 0):
        ordered = np.sort(table, axis=axis)
        ok = ordered == (expected[None, :] if axis == 1 else expected[:, None])
        if not ok.all():
            i, j = (int(v) for v in np.argwhere(~ok)[0])
            line = i if axis == 1 else j
            kind = "row" if axis == 1 else "column"
            raise NotAGroup(f"{kind} {line} is not a permutation (not a Latin square)", (i, j, int(ordered[i, j])))

    ids = [e for e in range(n) if (table[e] == expected).all() and (table[:, e] == expected).all()]
    if not ids:
        raise NotAGroup("no two-sided identity element")
    e = ids[0]
    if e != 0:
        table = _relabel(table, _swap_perm(n, 0, e))

    _check_associative(table, samples)

    inverse = np.argmin(table, axis=1)
    back = table[inverse, np.arange(n)]
    if (back != 0).any():
        x = int(np.flatnonzero(back != 0)[0])
        raise NotAGroup("left and right inverses differ", (x, int(inverse[x]), int(back[x])))
    return table, e


def _swap_perm(n: int, a: int, b: int) -> np.ndarray:
    p = np.arange(n)
    p[a], p[b] = b, a
    return p


def _relabel(table: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Relabel so that new index i stands for old element p[i]."""
    pinv = np.empty_like(p)
    pinv[p] = np.arange(len(p))
    return pinv[table[np.ix_(p, p)]].astype(table.dtype)


def _check_associative(table: np.ndarray, samples: int) -> None:
    n = table.shape[0]
    if n <= FULL_ASSOCIATIVITY_LIMIT:
        ks = np.arange(n)
        chunk = max(1, 2_000_000 // (n * n))
        for start in range(0, n, chunk):
            i = np.arange(start, min(n, start + chunk))
            left = table[table[i, :][:, :, None], ks[None, None, :]]
            right = table[i[:, None, None], table[None, :, :]]
            bad = left != right
            if bad.any():
                a, b, c = (int(v) for v in np.argwhere(bad)[0])
                raise NotAGroup("associativity fails", (int(i[a]), b, c))
        return
    rng = np.random.default_rng(0)
    done = 0
    while done < samples:
        m = min(200_000, samples - done)
        i, j, k = rng.integers(0, n, size=(3, m))
        bad = table[table[i, j], k] != table[i, table[j, k]]
        if bad.any():
            t = int(np.flatnonzero(bad)[0])
            raise NotAGroup("associativity fails", (int(i[t]), int(j[t]), int(k[t])))
        done += m


def from_cayley_table(raw, names: Sequence[str] | None = None, label: str = "") -> Group:
    """Validate a raw table and wrap it as a Group.

    If the identity is not at index 0 the elements are relabelled by
    swapping it with element 0 (names follow their elements).
    """
    table = np.asarray(raw)
    n = table.shape[0] if table.ndim == 2 else 0
    if names is None:
        names = [str(i) for i in range(n)]
    names = list(names)
    if len(names) != n:
        raise NotAGroup(f"{len(names)} names given for a table of order {n}")
    _check_cap(n, "table")
    checked, e = _validated(table)
    names[0], names[e] = names[e], names[0]
    return Group(checked, names, label)


# --------------------------------------------------------------------------
# subgroups and orders


def element_order(G: Group, x: int) -> int:
    return int(G.element_orders[x])


def involution_count(G: Group) -> int:
    """Number of x with x^2 = e, including the identity."""
    return int((G.squares == 0).sum())


def conjugacy(G: Group) -> ConjugacyData:
    return G.conjugacy


def class_count(G: Group) -> int:
    return G.conjugacy.count


def real_class_count(G: Group) -> int:
    return G.conjugacy.real_count


def center(G: Group) -> frozenset[int]:
    return G.center


def is_abelian(G: Group) -> bool:
    return G.is_abelian


def is_ambivalent(G: Group) -> bool:
    return all(G.conjugacy.real_flags)


def subgroup_generated(G: Group, elements: Iterable[int]) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``elements``."""
    gens = [int(g) for g in elements]
    inside = np.zeros(G.order, dtype=bool)
    inside[0] = True
    frontier = np.array([0])
    while frontier.size:
        products = G.table[np.ix_(frontier, gens)].ravel() if gens else np.array([], dtype=int)
        fresh = np.unique(products[~inside[products]])
        inside[fresh] = True
        frontier = fresh
    return np.flatnonzero(inside)


def is_subgroup(G: Group, elements: Iterable[int]) -> bool:
    s = sorted(set(int(x) for x in elements))
    if not s or s[0] != 0:
        return False
    arr = np.array(s)
    products = G.table[np.ix_(arr, arr)]
    return bool(np.isin(products, arr).all())


def check_subgroup(G: Group, elements: Iterable[int]) -> frozenset[int]:
    s = frozenset(int(x) for x in elements)
    if not is_subgroup(G, s):
        raise NotASubgroup(f"{sorted(s)} is not a subgroup")
    return s


# --------------------------------------------------------------------------
# constructors


def cyclic(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic(n) needs n >= 1")
    _check_cap(n, f"C{n}")
    i = np.arange(n)
    return Group((i[:, None] + i[None, :]) % n, [str(k) for k in range(n)], f"C{n}")


def direct_product(*factors: Group) -> Group:
    """Direct product with lexicographic indexing (first factor most significant)."""
    if not factors:
        return cyclic(1)
    result = factors[0]
    for H in factors[1:]:
        result = _direct_pair(result, H)
    if len(factors) > 1:
        result = Group(result.table, result.names, "x".join(f.label or "?" for f in factors))
    return result


def _direct_pair(G: Group, H: Group) -> Group:
    n, m = G.order, H.order
    _check_cap(n * m, "direct product")
    gt = G.table.astype(np.int64)
    ht = H.table.astype(np.int64)
    t = gt[:, None, :, None] * m + ht[None, :, None, :]
    names = [_pair_name(a, b) for a in G.names for b in H.names]
    return Group(t.reshape(n * m, n * m), names, f"{G.label}x{H.label}")


def _pair_name(a: str, b: str) -> str:
    inner_a = a[1:-1] if a.startswith("(") and a.endswith(")") and "," in a else a
    return f"({inner_a},{b})"


def _power_name(base: str, k: int) -> str:
    return "" if k == 0 else base if k == 1 else f"{base}^{k}"


def dihedral(n: int) -> Group:
    """Dihedral group of order 2n: a^k at index k, a^k b at index n + k."""
    if n < 1:
        raise ValueError("dihedral(n) needs n >= 1")
    _check_cap(2 * n, f"D{n}")
    idx = np.arange(2 * n)
    k, j = idx % n, idx // n
    sign = np.where(j == 1, -1, 1)
    kk = (k[:, None] + sign[:, None] * k[None, :]) % n
    jj = (j[:, None] + j[None, :]) % 2
    names = [(_power_name("a", k) + ("b" if j else "")) or "e" for j in (0, 1) for k in range(n)]
    return Group(jj * n + kk, names, f"D{n}")


def dicyclic(n: int) -> Group:
    """Dicyclic group of order 4n on the normal form a^k b^j (index j*2n + k)."""
    if n < 2:
        raise ValueError("dicyclic(n) needs n >= 2")
    m = 2 * n
    _check_cap(2 * m, f"Q{4 * n}")
    idx = np.arange(2 * m)
    k, j = idx % m, idx // m
    k1, j1 = k[:, None], j[:, None]
    k2, j2 = k[None, :], j[None, :]
    kk = np.where(j1 == 0, k1 + k2, k1 - k2 + n * j2)
    jj = np.where(j1 == 0, j2, 1 - j2)
    jj = np.broadcast_to(jj, kk.shape)
    names = [(_power_name("a", k) + ("b" if j else "")) or "e" for j in (0, 1) for k in range(m)]
    return Group(jj * m + kk % m, names, f"Q{4 * n}")


def _automorphism_rows(phi, G: Group, H: Group) -> np.ndarray:
    rows = np.asarray(phi, dtype=np.int64)
    if rows.shape != (H.order, G.order):
        raise ValueError(f"phi table must have shape {(H.order, G.order)}, got {rows.shape}")
    for h in range(H.order):
        r = rows[h]
        if sorted(r.tolist()) != list(range(G.order)):
            raise NotAnAutomorphism(h, (0, 0))
        bad = r[G.table] != G.table[np.ix_(r, r)]
        if bad.any():
            x, y = (int(v) for v in np.argwhere(bad)[0])
            raise NotAnAutomorphism(h, (x, y))
    for h1 in range(H.order):
        composed = rows[h1][rows]
        bad = (composed != rows[H.table[h1]]).any(axis=1)
        if bad.any():
            raise NotAHomomorphism(h1, int(np.flatnonzero(bad)[0]))
    return rows


def semidirect_product(G: Group, H: Group, phi, label: str = "") -> Group:
    """G x| H with (g1,h1)(g2,h2) = (g1 phi_h1(g2), h1 h2).

    ``phi[h]`` is the permutation of G's indices giving the automorphism
    attached to h.  Both the automorphism property and the homomorphism
    property are checked exhaustively.  Elements are indexed g*|H| + h.
    """
    n, m = G.order, H.order
    _check_cap(n * m, "semidirect product")
    rows = _automorphism_rows(phi, G, H)
    idx = np.arange(n * m)
    g, h = idx // m, idx % m
    gpart = G.table.astype(np.int64)[g[:, None], rows[h[:, None], g[None, :]]]
    hpart = H.table.astype(np.int64)[h[:, None], h[None, :]]
    names = [_pair_name(a, b) for a in G.names for b in H.names]
    return Group(gpart * m + hpart, names, label or f"{G.label}:{H.label}")


def cyclic_action(G: Group, m: int, automorphism: Sequence[int]) -> np.ndarray:
    """The phi table for Z_m acting on G through the powers of one automorphism."""
    a = np.asarray(automorphism, dtype=np.int64)
    rows = [np.arange(G.order)]
    for _ in range(1, m):
        rows.append(a[rows[-1]])
    return np.array(rows)


def multiplier_automorphism(n: int, r: int) -> list[int]:
    """The map x -> r x on Z_n as an index permutation."""
    if math.gcd(r, n) != 1:
        raise NotAnAutomorphism(1, (1, 1))
    return [(r * x) % n for x in range(n)]


def quasidihedral(n: int, sign: str) -> Group:
    """Order 2^n group Z_{2^(n-1)} x| Z_2 with y x y = x^(2^(n-2) +- 1)."""
    if n < 4 or sign not in "+-" or len(sign) != 1:
        raise ValueError("quasidihedral(n, sign) needs n >= 4 and sign in {'+', '-'}")
    m = 2 ** (n - 1)
    r = 2 ** (n - 2) + (1 if sign == "+" else -1)
    base = cyclic(m)
    G = semidirect_product(base, cyclic(2), cyclic_action(base, 2, multiplier_automorphism(m, r)))
    names = [(_power_name("x", k) + ("y" if j else "")) or "e" for k in range(m) for j in (0, 1)]
    return Group(G.table, names, f"QD{n}{sign}")


def _perm_code(perms: np.ndarray, n: int) -> np.ndarray:
    weights = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return perms.astype(np.int64) @ weights


def _permutation_group(perms: np.ndarray, n: int, label: str) -> Group:
    """Group from a sorted list of one-line permutations under s*t = s o t."""
    codes = _perm_code(perms, n)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((len(perms), len(perms)), dtype=_index_dtype(len(perms)))
    for i, p in enumerate(perms):
        composed = p[perms]
        pos = np.searchsorted(sorted_codes, _perm_code(composed, n))
        table[i] = order[pos]
    names = [cycle_notation(p) for p in perms]
    return Group(table, names, label)


def cycle_notation(p: Sequence[int]) -> str:
    """1-based cycle notation, e.g. (1 2 3)(4 5); the identity is ()."""
    p = [int(v) for v in p]
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start] or p[start] == start:
            continue
        cycle, x = [], start
        while not seen[x]:
            seen[x] = True
            cycle.append(str(x + 1))
            x = p[x]
        out.append("(" + " ".join(cycle) + ")")
    return "".join(out) or "()"


def _check_symmetric_degree(n: int, order: int, what: str) -> None:
    if n > SYMMETRIC_DEGREE_LIMIT and order > order_cap():
        raise OrderCapExceeded(f"{what}: degree {n} exceeds the limit {SYMMETRIC_DEGREE_LIMIT}")


def symmetric(n: int) -> Group:
    """S_n on permutations in lexicographic one-line order."""
    if n < 1:
        raise ValueError("symmetric(n) needs n >= 1")
    _check_symmetric_degree(n, math.factorial(n), f"S{n}")
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(-1, n)
    return _permutation_group(perms, n, f"S{n}")


def _is_even(p: Sequence[int]) -> bool:
    seen = [False] * len(p)
    parity = 0
    for s in range(len(p)):
        if seen[s]:
            continue
        length, x = 0, s
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity == 0


def alternating(n: int) -> Group:
    """A_n on the even permutations, in lexicographic one-line order."""
    if n < 1:
        raise ValueError("alternating(n) needs n >= 1")
    _check_symmetric_degree(n, max(1, math.factorial(n) // 2), f"A{n}")
    perms = [p for p in itertools.permutations(range(n)) if _is_even(p)]
    return _permutation_group(np.array(perms, dtype=np.int64).reshape(-1, n), n, f"A{n}")


def _prime_power(q: int) -> tuple[int, int] | None:
    if q < 2:
        return None
    p = next(d for d in range(2, q + 1) if q % d == 0)
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    return (p, e) if r == 1 else None


def sl2(q: int, field: dict | None = None) -> Group:
    """SL_2(F_q); q prime, or a prime power with ``field={"add":..., "mul":...}``.

    Field tables index the q field elements with 0 the zero and 1 the one.
    Elements are ordered with the identity first, then the remaining
    matrices (a, b, c, d) in lexicographic order.
    """
    pp = _prime_power(q)
    if pp is None:
        raise NotPrimePower(f"{q} is not a prime power")
    if field is None:
        if pp[1] != 1:
            raise MissingFieldTable(f"SL2({q}) needs an explicit field table")
        r = np.arange(q)
        add = (r[:, None] + r[None, :]) % q
        mul = (r[:, None] * r[None, :]) % q
    else:
        add = np.asarray(field["add"])
        mul = np.asarray(field["mul"])
        if add.shape != (q, q) or mul.shape != (q, q):
            raise MissingFieldTable(f"field table for q={q} has the wrong shape")
    _check_cap(q ** 3 - q, f"SL2({q})")
    neg = np.argmin(add, axis=1)  # additive inverse: the column holding 0

    def sub(x, y):
        return add[x, neg[y]]

    mats = [m for m in itertools.product(range(q), repeat=4)
            if sub(mul[m[0], m[3]], mul[m[1], m[2]]) == 1]
    ident = (1, 0, 0, 1)
    mats.remove(ident)
    mats.insert(0, ident)
    arr = np.array(mats)
    a, b, c, d = arr.T
    n = len(mats)
    codes = ((arr[:, 0] * q + arr[:, 1]) * q + arr[:, 2]) * q + arr[:, 3]
    lookup = np.full(q ** 4, -1, dtype=np.int64)
    lookup[codes] = np.arange(n)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        pa = add[mul[a[i], a], mul[b[i], c]]
        pb = add[mul[a[i], b], mul[b[i], d]]
        pc = add[mul[c[i], a], mul[d[i], c]]
        pd = add[mul[c[i], b], mul[d[i], d]]
        table[i] = lookup[((pa * q + pb) * q + pc) * q + pd]
    names = [f"[[{m[0]},{m[1]}],[{m[2]},{m[3]}]]" for m in mats]
    return Group(table, names, f"SL2({q})")


def inversion_map(G: Group) -> list[int]:
    return [int(v) for v in G.inverse]


def generalized_dihedral(G: Group) -> Group:
    """G x| <inversion> for abelian G; always of order 2|G|."""
    if not G.is_abelian:
        raise NotAbelian(f"{G!r} is not abelian")
    phi = [list(range(G.order)), inversion_map(G)]
    return semidirect_product(G, cyclic(2), phi, label=f"GD({G.label})")


def permutation_closure(generators: Sequence[Sequence[int]], degree: int) -> list[tuple[int, ...]]:
    """All elements of the permutation group generated, identity first, rest sorted."""
    ident = tuple(range(degree))
    gens = [tuple(int(v) for v in g) for g in generators]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = tuple(p[g[x]] for x in range(degree))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    rest = sorted(seen - {ident})
    return [ident] + rest


def group_from_permutations(perms: Sequence[Sequence[int]], label: str = "") -> Group:
    """Group on an explicit closed list of permutations; perms[0] must be the identity.

    Element i of the result is perms[i]; products use s*t = s o t.
    """
    arr = np.array([list(p) for p in perms], dtype=np.int64)
    degree = arr.shape[1] if arr.ndim == 2 else 0
    if degree == 0:
        return Group(np.zeros((1, 1), dtype=np.int64), ["()"], label)
    codes = _perm_code(arr, degree)
    order = np.argsort(codes)
    sorted_codes = codes[order]
    table = np.empty((len(arr), len(arr)), dtype=np.int64)
    for i, p in enumerate(arr):
        c = _perm_code(p[arr], degree)
        pos = np.searchsorted(sorted_codes, c)
        if (pos >= len(arr)).any() or (sorted_codes[np.minimum(pos, len(arr) - 1)] != c).any():
            raise NotAGroup("permutation list is not closed under composition")
        table[i] = order[pos]
    return Group(table, [cycle_notation(p) for p in arr], label)


def wreath_product(G: Group, m: int, action: Sequence[Sequence[int]], label: str = "") -> Group:
    """G wr H = G^m x| H, where H is generated by ``action`` (permutations of 0..m-1).

    An element h of H sends coordinate i to coordinate h(i).
    """
    acting = permutation_closure(action, m) if action else [tuple(range(m))]
    _check_cap(G.order ** m * len(acting), "wreath product")
    H = group_from_permutations(acting)
    base = direct_product(*([G] * m)) if m > 0 else cyclic(1)
    n = G.order
    digits = np.array(list(itertools.product(range(n), repeat=m)), dtype=np.int64).reshape(-1, m)
    weights = n ** np.arange(m - 1, -1, -1, dtype=np.int64)
    phi = []
    for h in acting:
        hinv = np.argsort(h)
        phi.append(digits[:, hinv] @ weights)
    name = label or f"{G.label}wr{H.order}"
    return semidirect_product(base, H, phi, label=name)
