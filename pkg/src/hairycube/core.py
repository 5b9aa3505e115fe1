"""Carrier algebra of the three-element Boolean semiring S = {0, h, 1}.

The primary view is the bounded distributive chain 0 < h < 1 whose upper
interval [h, 1] is a two-element Boolean algebra.  `bar` is the derived
unary operation x |-> (x v h)' and `semiring_add` the derived addition
pulled back along the embedding of S into 2 x Z_2.  Operation tables on
powers of S are stored as flat entry tuples (`TritTable`).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum
from functools import lru_cache
from itertools import product
from typing import Callable


class Element(IntEnum):
    """Carrier values; the int codes 0, 1, 2 realise the chain order."""

    ZERO = 0
    H = 1
    ONE = 2

    def __str__(self) -> str:
        return "0h1"[int(self)]

    @classmethod
    def from_char(cls, ch: str) -> "Element":
        try:
            return cls("0h1".index(ch))
        except ValueError:
            raise ValueError(f"unknown element character {ch!r}") from None


ZERO = Element.ZERO
H = Element.H
ONE = Element.ONE

ELEMENTS: tuple[Element, Element, Element] = (ZERO, H, ONE)


def meet(a: Element, b: Element) -> Element:
    return a if a <= b else b


def join(a: Element, b: Element) -> Element:
    return a if a >= b else b


def complement_upper(a: Element) -> Element:
    """Boolean complement inside the interval [h, 1]; undefined at 0."""
    if a == ZERO:
        raise ValueError("complement_upper is only defined on [h, 1]")
    return ONE if a == H else H


def bar(a: Element) -> Element:
    """Derived unary operation: the complement of a v h taken in [h, 1]."""
    return complement_upper(join(a, H))


def nu_term(x: Element, y: Element, z: Element) -> Element:
    """Ternary near-unanimity term xy + yz + xz, the median on the chain."""
    return join(join(meet(x, y), meet(y, z)), meet(x, z))


# S embeds into the product of the two-element lattice and the two-element
# Boolean ring via 0 -> (0,0), h -> (1,0), 1 -> (1,1).  Addition there is
# (or, xor); the image is closed under it, so addition pulls back.
_EMBED = {ZERO: (0, 0), H: (1, 0), ONE: (1, 1)}
_UNEMBED = {pair: elem for elem, pair in _EMBED.items()}


def semiring_add(a: Element, b: Element) -> Element:
    (p, q), (r, s) = _EMBED[a], _EMBED[b]
    return _UNEMBED[(p | r, q ^ s)]


_BAR = (ONE, ONE, H)  # bar by element code


def tuple_meet(x: tuple[Element, ...], y: tuple[Element, ...]) -> tuple[Element, ...]:
    return tuple(map(min, x, y))


def tuple_join(x: tuple[Element, ...], y: tuple[Element, ...]) -> tuple[Element, ...]:
    return tuple(map(max, x, y))


def tuple_bar(x: tuple[Element, ...]) -> tuple[Element, ...]:
    return tuple(_BAR[v] for v in x)


def tuple_leq(x: tuple[Element, ...], y: tuple[Element, ...]) -> bool:
    return all(a <= b for a, b in zip(x, y))


@lru_cache(maxsize=None)
def all_tuples(arity: int) -> tuple[tuple[Element, ...], ...]:
    """All of S^arity in canonical (big-endian code) order."""
    if arity < 0:
        raise ValueError("arity must be nonnegative")
    return tuple(product(ELEMENTS, repeat=arity))


def tuple_index(args: tuple[Element, ...]) -> int:
    """Canonical index of a tuple: first coordinate is the most significant trit."""
    idx = 0
    for a in args:
        idx = idx * 3 + int(a)
    return idx


@dataclass(frozen=True, order=True)
class TritTable:
    """Total map S^arity -> S as 3^arity entries in canonical tuple order."""

    arity: int
    entries: tuple[Element, ...]

    def __post_init__(self) -> None:
        if self.arity < 0:
            raise ValueError("arity must be nonnegative")
        if len(self.entries) != 3 ** self.arity:
            raise ValueError(
                f"arity {self.arity} needs {3 ** self.arity} entries, got {len(self.entries)}"
            )

    @classmethod
    def constant(cls, arity: int, value: Element) -> "TritTable":
        return cls(arity, (value,) * (3 ** arity))

    @classmethod
    def projection(cls, arity: int, i: int) -> "TritTable":
        """The i-th projection, 1-based."""
        if not 1 <= i <= arity:
            raise ValueError(f"projection index {i} out of range for arity {arity}")
        return cls(arity, tuple(args[i - 1] for args in all_tuples(arity)))

    @classmethod
    def from_function(cls, arity: int, fn: Callable[..., Element]) -> "TritTable":
        return cls(arity, tuple(fn(*args) for args in all_tuples(arity)))

    @classmethod
    def from_string(cls, text: str) -> "TritTable":
        entries = tuple(Element.from_char(ch) for ch in text)
        arity = 0
        while 3 ** arity < len(entries):
            arity += 1
        return cls(arity, entries)

    def __call__(self, *args: Element) -> Element:
        if len(args) != self.arity:
            raise ValueError(f"expected {self.arity} arguments, got {len(args)}")
        return self.entries[tuple_index(args)]

    def __str__(self) -> str:
        return "".join(str(e) for e in self.entries)

    def meet(self, other: "TritTable") -> "TritTable":
        self._same_arity(other)
        return TritTable(self.arity, tuple_meet(self.entries, other.entries))

    def join(self, other: "TritTable") -> "TritTable":
        self._same_arity(other)
        return TritTable(self.arity, tuple_join(self.entries, other.entries))

    def bar(self) -> "TritTable":
        return TritTable(self.arity, tuple_bar(self.entries))

    def meet_h(self) -> "TritTable":
        return self.meet(TritTable.constant(self.arity, H))

    def leq(self, other: "TritTable") -> bool:
        self._same_arity(other)
        return tuple_leq(self.entries, other.entries)

    def _same_arity(self, other: "TritTable") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} vs {other.arity}")
