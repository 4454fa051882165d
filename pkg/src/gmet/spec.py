"""The group-spec mini language.

Grammar (whitespace is ignored outside file paths)::

    expr    := term ("x" term)*
    term    := primary ("^" int)?
    primary := atom | "GD(" expr ")" | "W(" expr "," int "," expr ")"
             | "SD(" expr "," expr "," phi ")" | "(" expr ")"
    atom    := "C" int | "D" int | "Q" int | "QD" int ("+"|"-") | "S" int
             | "A" int | "SL2(" int ")" | "file:" path
    phi     := int | "[" int ("," int)* "]" | "file:" path

``Dn`` is the dihedral group of order 2n, ``Qn`` the dicyclic group of
order n (so ``Q8`` is the quaternion group) and ``QDn+`` / ``QDn-`` the
order 2^n quasidihedral groups.  ``W(G, m, H)`` is the wreath product of G
by H acting on m points: naturally when H is ``Cm``, ``Dm``, ``Sm`` or
``Am``, otherwise by its regular action (which needs |H| = m).
``SD(G, H, phi)`` is a semidirect product; an integer phi r means the
generator of a cyclic H acts on a cyclic G by x -> r x, a bracketed list
gives that generator's action as a permutation of G's indices, and
``file:`` names a JSON phi table (one permutation of G per element of H).
A file path runs up to the next "," or ")" or the end of the text.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import ParseError
from . import groups as g


@dataclass(frozen=True)
class Cyclic:
    n: int


@dataclass(frozen=True)
class Dihedral:
    n: int


@dataclass(frozen=True)
class Dicyclic:
    order: int


@dataclass(frozen=True)
class Quasidihedral:
    n: int
    sign: str


@dataclass(frozen=True)
class Symmetric:
    n: int


@dataclass(frozen=True)
class Alternating:
    n: int


@dataclass(frozen=True)
class SL2:
    q: int


@dataclass(frozen=True)
class FromFile:
    path: str


@dataclass(frozen=True)
class DirectProduct:
    factors: tuple


@dataclass(frozen=True)
class GeneralizedDihedral:
    inner: object


@dataclass(frozen=True)
class WreathProduct:
    base: object
    m: int
    action: object


@dataclass(frozen=True)
class Multiplier:
    r: int


@dataclass(frozen=True)
class GeneratorImage:
    perm: tuple[int, ...]


@dataclass(frozen=True)
class PhiFile:
    path: str


@dataclass(frozen=True)
class SemidirectProduct:
    normal: object
    acting: object
    phi: Union[Multiplier, GeneratorImage, PhiFile]


GroupSpec = Union[Cyclic, Dihedral, Dicyclic, Quasidihedral, Symmetric, Alternating, SL2,
                  FromFile, DirectProduct, GeneralizedDihedral, WreathProduct, SemidirectProduct]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, *expected: str) -> ParseError:
        offset = len(self.text[:self.pos].encode("utf-8"))
        return ParseError(offset, set(expected), self.text)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, token: str) -> bool:
        self.skip()
        return self.text.startswith(token, self.pos)

    def take(self, token: str) -> bool:
        if self.peek(token):
            self.pos += len(token)
            return True
        return False

    def expect(self, token: str) -> None:
        if not self.take(token):
            raise self.error(repr(token))

    def integer(self) -> int:
        self.skip()
        start = self.pos
        neg = self.text.startswith("-", self.pos)
        if neg:
            self.pos += 1
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            self.pos = start
            raise self.error("integer")
        return int(self.text[start:self.pos])

    def natural(self) -> int:
        self.skip()
        if self.peek("-"):
            raise self.error("integer")
        return self.integer()

    def path(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] not in ",)":
            self.pos += 1
        raw = self.text[start:self.pos].strip()
        if not raw:
            self.pos = start
            raise self.error("path")
        return raw

    def parse(self) -> GroupSpec:
        spec = self.expr()
        self.skip()
        if self.pos != len(self.text):
            raise self.error("'x'", "'^'", "end of input")
        return spec

    def expr(self) -> GroupSpec:
        factors = list(self.term())
        while self.take("x"):
            factors.extend(self.term())
        return factors[0] if len(factors) == 1 else DirectProduct(tuple(factors))

    def term(self) -> list:
        base = self.primary()
        if self.take("^"):
            k = self.natural()
            if k < 1:
                raise self.error("positive exponent")
            return [base] * k
        return [base]

    def primary(self) -> GroupSpec:
        self.skip()
        if self.take("("):
            inner = self.expr()
            self.expect(")")
            return inner
        if self.take("GD("):
            inner = self.expr()
            self.expect(")")
            return GeneralizedDihedral(inner)
        if self.take("W("):
            base = self.expr()
            self.expect(",")
            m = self.natural()
            self.expect(",")
            action = self.expr()
            self.expect(")")
            return WreathProduct(base, m, action)
        if self.take("SD("):
            normal = self.expr()
            self.expect(",")
            acting = self.expr()
            self.expect(",")
            phi = self.phi()
            self.expect(")")
            return SemidirectProduct(normal, acting, phi)
        if self.take("SL2("):
            q = self.natural()
            self.expect(")")
            return SL2(q)
        if self.take("file:"):
            return FromFile(self.path())
        if self.take("QD"):
            n = self.natural()
            for sign in "+-":
                if self.take(sign):
                    return Quasidihedral(n, sign)
            raise self.error("'+'", "'-'")
        for letter, node in (("C", Cyclic), ("D", Dihedral), ("Q", Dicyclic),
                             ("S", Symmetric), ("A", Alternating)):
            if self.take(letter):
                return node(self.natural())
        raise self.error("'C'", "'D'", "'Q'", "'QD'", "'S'", "'A'", "'SL2('", "'file:'",
                         "'GD('", "'W('", "'SD('", "'('")

    def phi(self):
        if self.take("file:"):
            return PhiFile(self.path())
        if self.take("["):
            values = [self.natural()]
            while self.take(","):
                values.append(self.natural())
            self.expect("]")
            return GeneratorImage(tuple(values))
        self.skip()
        if self.pos < len(self.text) and (self.text[self.pos].isdigit() or self.text[self.pos] == "-"):
            return Multiplier(self.integer())
        raise self.error("integer", "'['", "'file:'")


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a group spec string; raises ParseError(position, expected)."""
    return _Parser(text).parse()


# --------------------------------------------------------------------------
# rendering


def format_spec(spec: GroupSpec) -> str:
    """Canonical text for a parsed spec (parses back to an equal spec)."""
    if isinstance(spec, Cyclic):
        return f"C{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Dicyclic):
        return f"Q{spec.order}"
    if isinstance(spec, Quasidihedral):
        return f"QD{spec.n}{spec.sign}"
    if isinstance(spec, Symmetric):
        return f"S{spec.n}"
    if isinstance(spec, Alternating):
        return f"A{spec.n}"
    if isinstance(spec, SL2):
        return f"SL2({spec.q})"
    if isinstance(spec, FromFile):
        return f"file:{spec.path}"
    if isinstance(spec, DirectProduct):
        return "x".join(_wrapped(f) for f in spec.factors)
    if isinstance(spec, GeneralizedDihedral):
        return f"GD({format_spec(spec.inner)})"
    if isinstance(spec, WreathProduct):
        return f"W({format_spec(spec.base)},{spec.m},{format_spec(spec.action)})"
    if isinstance(spec, SemidirectProduct):
        phi = spec.phi
        if isinstance(phi, Multiplier):
            text = str(phi.r)
        elif isinstance(phi, GeneratorImage):
            text = "[" + ",".join(map(str, phi.perm)) + "]"
        else:
            text = f"file:{phi.path}"
        return f"SD({format_spec(spec.normal)},{format_spec(spec.acting)},{text})"
    raise TypeError(f"not a group spec: {spec!r}")


def _wrapped(spec) -> str:
    text = format_spec(spec)
    return f"({text})" if isinstance(spec, DirectProduct) or text.startswith("file:") else text


def display_name(spec: GroupSpec | str) -> str:
    """Short human name; wreath products render as 'GwrH'."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, WreathProduct):
        action = format_spec(spec.action)
        if isinstance(spec.action, DirectProduct):
            action = f"({action})"
        return f"{format_spec(spec.base)}wr{action}"
    return format_spec(spec)


# --------------------------------------------------------------------------
# construction


def natural_action(spec: GroupSpec) -> list[tuple[int, ...]] | None:
    """Generators of the natural permutation action of a named atom, if any."""
    if isinstance(spec, Cyclic):
        n = spec.n
        return [tuple((x + 1) % n for x in range(n))] if n > 1 else []
    if isinstance(spec, Dihedral) and spec.n >= 3:
        n = spec.n
        return [tuple((x + 1) % n for x in range(n)), tuple((-x) % n for x in range(n))]
    if isinstance(spec, Symmetric):
        n = spec.n
        if n < 2:
            return []
        return [tuple([1, 0] + list(range(2, n))), tuple((x + 1) % n for x in range(n))]
    if isinstance(spec, Alternating):
        n = spec.n
        gens = []
        for i in range(2, n):
            p = list(range(n))
            p[0], p[1], p[i] = 1, i, 0
            gens.append(tuple(p))
        return gens
    return None


def _natural_degree(spec) -> int | None:
    if isinstance(spec, (Cyclic, Symmetric, Alternating)):
        return spec.n
    if isinstance(spec, Dihedral) and spec.n >= 3:
        return spec.n
    return None


def regular_action(H: g.Group) -> list[tuple[int, ...]]:
    """Left-regular permutations h -> (x -> h x) for a generating set of H."""
    return [tuple(int(v) for v in H.table[h]) for h in H.generators]


def _load_json(path: str, base_dir: Path | None) -> dict:
    p = Path(path)
    if not p.is_absolute() and base_dir is not None:
        p = base_dir / p
    with open(p) as fh:
        return json.load(fh)


def build_group(spec: GroupSpec | str, base_dir: str | Path | None = None) -> g.Group:
    """Construct the Group described by a spec (string or parsed)."""
    if isinstance(spec, str):
        text = spec
        spec = parse_group_spec(spec)
    else:
        text = format_spec(spec)
    base = Path(base_dir) if base_dir is not None else None
    G = _build(spec, base)
    return g.Group(G.table, G.names, text)


def _build(spec, base: Path | None) -> g.Group:
    if isinstance(spec, Cyclic):
        return g.cyclic(spec.n)
    if isinstance(spec, Dihedral):
        return g.dihedral(spec.n)
    if isinstance(spec, Dicyclic):
        if spec.order % 4 or spec.order < 8:
            raise ValueError(f"Q{spec.order}: dicyclic orders are multiples of 4, at least 8")
        return g.dicyclic(spec.order // 4)
    if isinstance(spec, Quasidihedral):
        return g.quasidihedral(spec.n, spec.sign)
    if isinstance(spec, Symmetric):
        return g.symmetric(spec.n)
    if isinstance(spec, Alternating):
        return g.alternating(spec.n)
    if isinstance(spec, SL2):
        return g.sl2(spec.q)
    if isinstance(spec, FromFile):
        from .io import group_from_dict  # local import: io depends on this module
        return group_from_dict(_load_json(spec.path, base))
    if isinstance(spec, DirectProduct):
        return g.direct_product(*(_build(f, base) for f in spec.factors))
    if isinstance(spec, GeneralizedDihedral):
        return g.generalized_dihedral(_build(spec.inner, base))
    if isinstance(spec, WreathProduct):
        G = _build(spec.base, base)
        degree = _natural_degree(spec.action)
        if degree == spec.m:
            action = natural_action(spec.action)
        else:
            H = _build(spec.action, base)
            if H.order != spec.m:
                raise ValueError(f"{format_spec(spec.action)} has no action on {spec.m} points")
            action = regular_action(H)
        return g.wreath_product(G, spec.m, action)
    if isinstance(spec, SemidirectProduct):
        G = _build(spec.normal, base)
        H = _build(spec.acting, base)
        phi = spec.phi
        if isinstance(phi, PhiFile):
            data = _load_json(phi.path, base)
            rows = data["phi"] if isinstance(data, dict) else data
            if isinstance(rows, dict):
                rows = [rows[str(h)] for h in range(H.order)]
            return g.semidirect_product(G, H, rows)
        if not isinstance(spec.acting, Cyclic):
            raise ValueError("integer or bracketed phi needs a cyclic acting group")
        if isinstance(phi, Multiplier):
            if not isinstance(spec.normal, Cyclic):
                raise ValueError("integer phi needs a cyclic normal subgroup")
            n = spec.normal.n
            image = g.multiplier_automorphism(n, phi.r % n if n > 1 else 0) if n > 1 else [0]
        else:
            image = list(phi.perm)
            if len(image) != G.order:
                raise ValueError(f"phi image has {len(image)} entries, expected {G.order}")
        return g.semidirect_product(G, H, g.cyclic_action(G, H.order, image))
    raise TypeError(f"not a group spec: {spec!r}")


def spec_order(spec: GroupSpec | str) -> int | None:
    """Order of the described group without building it (None for files)."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    if isinstance(spec, (Cyclic,)):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Dicyclic):
        return spec.order
    if isinstance(spec, Quasidihedral):
        return 2 ** spec.n
    if isinstance(spec, Symmetric):
        return math.factorial(spec.n)
    if isinstance(spec, Alternating):
        return max(1, math.factorial(spec.n) // 2)
    if isinstance(spec, SL2):
        return spec.q ** 3 - spec.q
    if isinstance(spec, DirectProduct):
        orders = [spec_order(f) for f in spec.factors]
        return None if None in orders else math.prod(orders)
    if isinstance(spec, GeneralizedDihedral):
        inner = spec_order(spec.inner)
        return None if inner is None else 2 * inner
    if isinstance(spec, WreathProduct):
        b = spec_order(spec.base)
        if b is None:
            return None
        if _natural_degree(spec.action) == spec.m:
            acting = len(g.permutation_closure(natural_action(spec.action), spec.m))
        else:
            acting = spec_order(spec.action)
            if acting is None:
                return None
        return b ** spec.m * acting
    if isinstance(spec, SemidirectProduct):
        a, b = spec_order(spec.normal), spec_order(spec.acting)
        return None if None in (a, b) else a * b
    return None
