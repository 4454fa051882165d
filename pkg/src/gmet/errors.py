"""Exception types raised by gmet."""
from __future__ import annotations


class GmetError(Exception):
    """Base class for every error raised by this package."""


class NotAGroup(GmetError):
    """A multiplication table failed validation.

    ``triple`` holds the first violating index tuple found by the validator.
    """

    def __init__(self, message: str, triple: tuple[int, ...] | None = None):
        super().__init__(message if triple is None else f"{message} at {triple}")
        self.triple = triple


class OrderCapExceeded(GmetError):
    """A construction or search would exceed the configured size cap."""


class NotAnAutomorphism(GmetError):
    """A map offered as an automorphism is not one."""

    def __init__(self, h: int, witness: tuple[int, int]):
        super().__init__(f"phi({h}) is not an automorphism; witness pair {witness}")
        self.h = h
        self.witness = witness


class NotAHomomorphism(GmetError):
    """The action map H -> Aut(G) fails phi(h1 h2) = phi(h1) phi(h2)."""

    def __init__(self, h1: int, h2: int):
        super().__init__(f"phi is not a homomorphism at ({h1}, {h2})")
        self.pair = (h1, h2)


class NotAbelian(GmetError):
    """An operation requiring an abelian group got a non-abelian one."""


class NotPrimePower(GmetError):
    """A field size is not a prime power."""


class MissingFieldTable(GmetError):
    """A prime-power field size needs an explicit field table."""


class EnumerationCapExceeded(GmetError):
    """A partition enumeration would exceed the enumeration cap."""


class NotUnitarySymmetric(GmetError):
    """A partition is not unitary symmetric."""


class InvalidWeight(GmetError):
    """A weight function violates positivity, symmetry or subadditivity."""


class ScaleNonPositive(GmetError):
    """A weight was scaled by a non-positive factor."""


class NotADivisor(GmetError):
    """An extended Lee weight parameter does not divide the modulus."""


class NotASubgroup(GmetError):
    """An element set is not a subgroup."""


class NotAscending(GmetError):
    """A subgroup chain is not strictly ascending from {e} to G."""


class NotAPartialOrder(GmetError):
    """A relation offered as a partial order is not one."""


class NotSymmetricSet(GmetError):
    """A Cayley-graph connection set is not closed under inversion."""


class ContainsIdentity(GmetError):
    """A Cayley-graph connection set contains the identity."""


class SearchCapExceeded(GmetError):
    """An automorphism search was requested on too many vertices."""


class OutOfRange(GmetError):
    """A closed-form counting formula was called outside its range."""


class NonIntegralResult(GmetError):
    """A closed form that must be integral evaluated to a non-integer."""


class InconsistentParity(GmetError):
    """The number of 2-power cyclic factors contradicts the order's parity."""


class NotAmbivalent(GmetError):
    """A group required to be ambivalent has a non-real class."""


class ElementaryAbelianTwoGroup(GmetError):
    """A formula excluding elementary abelian 2-groups was given one."""


class ParseError(GmetError):
    """A group spec string failed to parse.

    ``position`` is the offset into the input, ``expected`` the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, position: int, expected: set[str] | frozenset[str], text: str = ""):
        self.position = position
        self.expected = frozenset(expected)
        shown = ", ".join(sorted(self.expected))
        super().__init__(f"parse error at offset {position}: expected one of {{{shown}}}"
                         + (f" in {text!r}" if text else ""))
