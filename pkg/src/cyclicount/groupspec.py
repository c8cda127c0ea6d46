"""Descriptions of finite abelian groups and their canonical per-prime form.

``parse_spec`` accepts the grammar::

    spec    :=  factor ( sep factor )*
    sep     :=  "x" | "X" | "*" | "×"
    factor  :=  atom [ "^" count ]
    atom    :=  "Z" digits | "Z_" digits | "C" digits | digits

The Z/C letters are case-insensitive, whitespace may appear between any two
tokens, and ``^count`` repeats the factor that many times (count may be 0,
which contributes nothing).  Examples of equivalent inputs:
``"Z2 x Z12 x Z72"``, ``"z2*c12*z_72"``, ``"2 x 12 x 72"``.

``normalize`` turns a factor list into the canonical form used everywhere
else in the package: each order is split into prime-power cyclic factors
(Chinese remainder theorem), and for each prime the exponents are recorded
in ascending order.  Order-1 factors vanish; the trivial group is the empty
decomposition.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .arith import Factorization, factorize, is_prime
from .errors import ParseError


@dataclass(frozen=True)
class GroupSpec:
    """A direct product of cyclic groups, one entry per factor order."""

    factor_orders: tuple[int, ...] = ()

    def __post_init__(self):
        for n in self.factor_orders:
            if n < 1:
                raise ValueError(f"cyclic factor orders must be >= 1, got {n}")

    def order(self) -> int:
        return math.prod(self.factor_orders)


@dataclass(frozen=True)
class PrimaryDecomposition:
    """Canonical form of a finite abelian group.

    ``components`` maps each prime (ascending) to the ascending exponent
    tuple of its cyclic prime-power factors; the trivial group is ``()``.
    """

    components: tuple[tuple[int, tuple[int, ...]], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, exps in self.components:
            if p <= prev:
                raise ValueError(f"primes must be distinct and ascending: {self.components}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            if not exps:
                raise ValueError(f"prime {p} has an empty exponent list")
            if any(a < 1 for a in exps) or list(exps) != sorted(exps):
                raise ValueError(f"exponents of {p} must be >= 1 and ascending, got {exps}")
            prev = p

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.components)

    def as_dict(self) -> dict[int, tuple[int, ...]]:
        return {p: exps for p, exps in self.components}

    def __str__(self) -> str:
        if not self.components:
            return "Z1"
        return " x ".join(f"Z{p**a}" for p, exps in self.components for a in exps)


_ATOM_RE = re.compile(r"(?:[zZ]_?|[cC])(\d+)|(\d+)")
_COUNT_RE = re.compile(r"\d+")
_SEPARATORS = frozenset("xX*×")


def _skip_ws(text: str, i: int) -> int:
    while i < len(text) and text[i].isspace():
        i += 1
    return i


def parse_spec(text: str) -> GroupSpec:
    """Parse a group description string into a :class:`GroupSpec`.

    >>> parse_spec("Z2 x Z12 x Z72").factor_orders
    (2, 12, 72)
    >>> parse_spec("Z6^2 * 5").factor_orders
    (6, 6, 5)
    """
    i = _skip_ws(text, 0)
    if i == len(text):
        raise ParseError("empty group spec", text, 0)
    orders: list[int] = []
    while True:
        m = _ATOM_RE.match(text, i)
        if m is None:
            raise ParseError("expected a cyclic factor like 'Z12', 'C8' or '12'", text, i)
        digits = m.group(1) or m.group(2)
        order = int(digits)
        if order == 0:
            raise ParseError("cyclic factor of order 0", text, i)
        i = _skip_ws(text, m.end())
        repeat = 1
        if i < len(text) and text[i] == "^":
            i = _skip_ws(text, i + 1)
            c = _COUNT_RE.match(text, i)
            if c is None:
                raise ParseError("expected a repeat count after '^'", text, i)
            repeat = int(c.group())
            i = _skip_ws(text, c.end())
        orders.extend([order] * repeat)
        if i == len(text):
            break
        if text[i] not in _SEPARATORS:
            raise ParseError("expected 'x', '*' or '×' between factors", text, i)
        i = _skip_ws(text, i + 1)
    return GroupSpec(tuple(orders))


def normalize(spec: GroupSpec | Iterable[int]) -> PrimaryDecomposition:
    """Split every factor order into prime powers and collect per prime.

    Accepts a :class:`GroupSpec` or a bare iterable of factor orders.

    >>> normalize([2, 12, 72]).as_dict()
    {2: (1, 2, 3), 3: (1, 2)}
    >>> normalize([1]).components
    ()
    """
    if not isinstance(spec, GroupSpec):
        spec = GroupSpec(tuple(spec))
    collected: dict[int, list[int]] = {}
    for order in spec.factor_orders:
        for p, e in factorize(order):
            collected.setdefault(p, []).append(e)
    return PrimaryDecomposition(
        tuple((p, tuple(sorted(collected[p]))) for p in sorted(collected))
    )


def exponent_of(d: PrimaryDecomposition) -> Factorization:
    """Exponent of the group (largest order of an element), as a factorization.

    >>> str(exponent_of(normalize([2, 12, 72])))
    '2^3 * 3^2'
    """
    return Factorization(tuple((p, exps[-1]) for p, exps in d.components))


def order_of(d: PrimaryDecomposition) -> int:
    """Number of elements of the group.

    >>> order_of(normalize([2, 12, 72]))
    1728
    """
    return math.prod(p**a for p, exps in d.components for a in exps)
