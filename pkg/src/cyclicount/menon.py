"""Menon's identity and its per-prime factored form.

The identity states that for every positive integer n,

    sum over units a mod n of gcd(a - 1, n)  =  phi(n) * tau(n).

``menon_lhs`` evaluates the left side literally.  ``menon_factored_lhs``
evaluates it as a product over the primes of n of single-exponent local
sums (the unit group of Z_n splits across prime powers by the Chinese
remainder theorem); the two must always agree, and both must equal the
right side.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .arith import Factorization, euler_phi, factorize, tau
from .counting import DEFAULT_ITERATION_BUDGET, local_sum_naive
from .errors import ResourceLimitError

# Above this the vectorized unit scan could overflow int64; fall back to
# plain Python integers (n <= 2**31 keeps every product and sum under 2**63).
_VECTOR_LIMIT = 2**31


@dataclass(frozen=True)
class MenonCheck:
    """Both sides of Menon's identity for one n.

    ``holds`` is lhs == rhs; it is True for every n unless the arithmetic
    underneath is broken.
    """

    n: int
    lhs: int
    rhs: int
    holds: bool


def menon_lhs(n: int, *, budget: int = DEFAULT_ITERATION_BUDGET) -> int:
    """Sum of gcd(a - 1, n) over the units 1 <= a <= n of Z_n.

    >>> menon_lhs(6)
    8
    """
    if n < 1:
        raise ValueError(f"menon_lhs requires n >= 1, got {n}")
    if n > budget:
        raise ResourceLimitError(f"menon_lhs({n}) exceeds the iteration budget of {budget}")
    if n == 1:
        return 1  # the single unit a = 1 contributes gcd(0, 1) = 1
    if n <= _VECTOR_LIMIT:
        a = np.arange(1, n, dtype=np.int64)
        units = np.gcd(a, n) == 1
        return int(np.gcd(a - 1, n)[units].sum())
    gcd = math.gcd
    return sum(gcd(a - 1, n) for a in range(1, n) if gcd(a, n) == 1)


def menon_factored_lhs(n: Factorization, *, budget: int = DEFAULT_ITERATION_BUDGET) -> int:
    """The Menon sum evaluated per prime power of n and multiplied.

    >>> menon_factored_lhs(factorize(12))
    24
    """
    return math.prod(
        local_sum_naive(p, (a,), budget=budget, include_terms=False).sum for p, a in n
    )


def menon_check(n: int, *, budget: int = DEFAULT_ITERATION_BUDGET) -> MenonCheck:
    """Evaluate both sides of Menon's identity for n.

    >>> menon_check(72)
    MenonCheck(n=72, lhs=288, rhs=288, holds=True)
    """
    lhs = menon_lhs(n, budget=budget)
    f = factorize(n)
    rhs = euler_phi(f) * tau(f)
    return MenonCheck(n, lhs, rhs, lhs == rhs)
