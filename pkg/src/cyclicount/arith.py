"""Exact arithmetic on unbounded non-negative integers.

Everything here works with Python's native big integers; no floats, no
fixed-width words.  The gcd convention is the zero-friendly one,
gcd(0, b) = b, which the counting formulas rely on for their m = 1 term
(gcd(0, p^a) = p^a).

Factorization runs trial division by the primes below 1000, then Pollard's
rho (Brent's cycle finding) with Miller-Rabin primality testing.  The
Miller-Rabin base set is deterministic for n < 3.3e24, which covers every
64-bit input; beyond that a fixed-seed randomized fallback keeps the output
deterministic.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .errors import ResourceLimitError

#: Wall-clock budget (seconds) for factoring inputs wider than 64 bits.
#: Inputs below 2**64 are always factored to completion.
DEFAULT_FACTOR_TIME_BUDGET = 10.0

_TRIAL_LIMIT = 1000


def _sieve(limit: int) -> tuple[int, ...]:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(flags[i * i :: i]))
    return tuple(i for i, f in enumerate(flags) if f)


_TRIAL_PRIMES = _sieve(_TRIAL_LIMIT)

# Smallest composite that fools this base set is > 3.3e24 (covers 64 bits).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_EXTRA_ROUNDS = 24


def _is_witness(a: int, d: int, s: int, n: int) -> bool:
    # True if a proves n composite.
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test; deterministic for n < 3.3e24.

    >>> is_prime(97)
    True
    >>> is_prime(9991)
    False
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = ((d & -d).bit_length()) - 1
    d >>= s
    if any(_is_witness(a, d, s, n) for a in _MR_BASES):
        return False
    if n >= _MR_DETERMINISTIC_BOUND:
        rng = random.Random(n)
        extras = (rng.randrange(2, n - 1) for _ in range(_MR_EXTRA_ROUNDS))
        if any(_is_witness(a, d, s, n) for a in extras):
            return False
    return True


@dataclass(frozen=True)
class Factorization:
    """A prime factorization as ``((prime, exponent), ...)``.

    Primes are strictly increasing and each exponent is at least 1; the
    factorization of 1 is the empty tuple.
    """

    factors: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for p, e in self.factors:
            if p <= prev:
                raise ValueError(f"primes must be distinct and ascending: {self.factors}")
            if e < 1:
                raise ValueError(f"exponent of {p} must be >= 1, got {e}")
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
            prev = p

    def value(self) -> int:
        """The integer this factorization represents."""
        return math.prod(p**e for p, e in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def _check_deadline(deadline: float | None) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise ResourceLimitError("factorization time budget exhausted")


def _pollard_rho(n: int, rng: random.Random, deadline: float | None) -> int:
    # Brent's variant.  n is odd, composite, and has no factor <= 1000.
    while True:
        _check_deadline(deadline)
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        batch = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                _check_deadline(deadline)
                ys = y
                for _ in range(min(batch, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += batch
            r <<= 1
        if g == n:
            # the batched gcd overshot; replay one step at a time
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(
    n: int,
    *,
    digit_limit: int | None = None,
    time_budget: float | None = DEFAULT_FACTOR_TIME_BUDGET,
) -> Factorization:
    """Factor a positive integer into its prime factorization.

    The output is deterministic.  Inputs that fit in 64 bits are always
    factored to completion; wider inputs run under ``time_budget`` seconds
    and raise :class:`ResourceLimitError` when it runs out.  An optional
    ``digit_limit`` rejects inputs with more decimal digits outright.

    >>> factorize(72).factors
    ((2, 3), (3, 2))
    >>> factorize(1).factors
    ()
    """
    if n < 1:
        raise ValueError(f"factorize requires n >= 1, got {n}")
    if digit_limit is not None and n >= 10**digit_limit:
        raise ValueError(f"{n.bit_length()}-bit input exceeds the {digit_limit}-digit limit")
    counts: dict[int, int] = {}
    m = n
    for p in _TRIAL_PRIMES:
        if p * p > m:
            break
        while m % p == 0:
            counts[p] = counts.get(p, 0) + 1
            m //= p
    if m > 1:
        deadline = None
        if n >= 1 << 64 and time_budget is not None:
            deadline = time.monotonic() + time_budget
        rng = random.Random(n)
        stack = [m]
        while stack:
            v = stack.pop()
            if is_prime(v):
                counts[v] = counts.get(v, 0) + 1
                continue
            d = _pollard_rho(v, rng, deadline)
            stack.append(d)
            stack.append(v // d)
    return Factorization(tuple(sorted(counts.items())))


def gcd_nat(a: int, b: int) -> int:
    """Greatest common divisor on naturals, with gcd(0, b) = b and gcd(0, 0) = 0.

    >>> gcd_nat(0, 8)
    8
    >>> gcd_nat(6, 4)
    2
    """
    if a < 0 or b < 0:
        raise ValueError(f"gcd_nat is defined on naturals, got ({a}, {b})")
    return math.gcd(a, b)


def lcm_nat(a: int, b: int) -> int:
    """Least common multiple on naturals; lcm(0, b) = 0."""
    if a < 0 or b < 0:
        raise ValueError(f"lcm_nat is defined on naturals, got ({a}, {b})")
    return math.lcm(a, b)


def euler_phi(f: Factorization) -> int:
    """Euler's totient from a factorization: prod (p-1) * p^(e-1); phi(1) = 1.

    >>> euler_phi(factorize(72))
    24
    """
    return math.prod((p - 1) * p ** (e - 1) for p, e in f.factors)


def tau(f: Factorization) -> int:
    """Number of divisors from a factorization: prod (e + 1); tau(1) = 1.

    >>> tau(factorize(72))
    12
    """
    return math.prod(e + 1 for p, e in f.factors)


def p_valuation(n: int, p: int) -> int:
    """Largest v with p^v dividing n (n >= 1, p prime).

    >>> p_valuation(72, 3)
    2
    >>> p_valuation(7, 2)
    0
    """
    if n < 1:
        raise ValueError(f"p_valuation requires n >= 1, got {n}")
    if p < 2:
        raise ValueError(f"p_valuation requires p >= 2, got {p}")
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v
