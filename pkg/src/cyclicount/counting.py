"""Closed-form counting of cyclic subgroups of a finite abelian group.

For a group given in primary form (prime p with ascending exponents
a_1 <= ... <= a_r per prime), the count of cyclic subgroups is

    prod_p S_p  /  phi(exp G),    where
    S_p = sum over 1 <= m <= p^a_r with p not dividing m
          of  prod_j gcd(m - 1, p^a_j).

Two evaluation paths are provided.  The naive path iterates every m
literally and is the ground truth.  The fast path groups the m-range by the
p-adic valuation v of m - 1: each m with valuation exactly v contributes
prod_j p^min(v, a_j), and the number of such m is

    1                          for v >= a_r  (the m = 1 term alone),
    p^(a_r-v) - p^(a_r-v-1)    for 1 <= v < a_r,
    p^a_r - 2*p^(a_r-1)        for v = 0     (zero when p = 2),

so S_p costs O(a_r * r) arithmetic operations instead of O(p^a_r).

The rank-2 and homocyclic counters evaluate their own specialized sums
independently (not by delegating to the general path), so agreement between
them and the general count is a genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import Factorization, euler_phi, factorize, p_valuation, tau
from .errors import InexactDivisionError, ResourceLimitError
from .groupspec import PrimaryDecomposition, exponent_of

#: Upper bound on p^a_r for the naive per-m loop (and kindred direct sums).
DEFAULT_ITERATION_BUDGET = 10_000_000

METHOD_FORMULA_FAST = "formula-fast"
METHOD_FORMULA_NAIVE = "formula-naive"
METHOD_BURNSIDE = "burnside-oracle"
METHOD_ENUMERATION = "enumeration-oracle"


@dataclass(frozen=True)
class LocalSumReport:
    """One prime's inner sum S_p, with the per-m terms when available.

    ``terms`` is populated by the naive path only; each entry is
    ``(m, prod_j gcd(m - 1, p^a_j))``.
    """

    prime: int
    exponents: tuple[int, ...]
    sum: int
    terms: tuple[tuple[int, int], ...] | None = None


@dataclass(frozen=True)
class CountReport:
    """A cyclic-subgroup count plus the provenance needed to audit it."""

    count: int
    exponent: int
    phi_exponent: int
    local_sums: tuple[LocalSumReport, ...]
    method: str


def _exact_div(numerator: int, divisor: int, context: str) -> int:
    q, r = divmod(numerator, divisor)
    if r:
        raise InexactDivisionError(f"{context}: {numerator} is not divisible by {divisor}")
    return q


def _check_exponents(exponents: Sequence[int]) -> tuple[int, ...]:
    exps = tuple(exponents)
    if not exps or any(a < 1 for a in exps) or list(exps) != sorted(exps):
        raise ValueError(f"exponents must be a nonempty ascending sequence of naturals >= 1, got {exps}")
    return exps


def local_sum_naive(
    p: int,
    exponents: Sequence[int],
    *,
    budget: int = DEFAULT_ITERATION_BUDGET,
    include_terms: bool = True,
) -> LocalSumReport:
    """Evaluate S_p by iterating every m in 1..p^a_r with p not dividing m.

    Raises :class:`ResourceLimitError` when p^a_r exceeds ``budget``.

    >>> local_sum_naive(2, [1, 2, 3]).sum
    112
    >>> local_sum_naive(3, [1, 2]).terms
    ((1, 27), (2, 1), (4, 9), (5, 1), (7, 9), (8, 1))
    """
    exps = _check_exponents(exponents)
    top = p ** exps[-1]
    if top > budget:
        raise ResourceLimitError(
            f"naive local sum for p={p} needs {top} iterations, over the budget of {budget}"
        )
    gcd = math.gcd
    first = p ** exps[0]
    rest = [p**a for a in exps[1:]]
    terms: list[tuple[int, int]] | None = [] if include_terms else None
    total = 0
    if p == 2:
        m_iter = range(1, top + 1, 2)
    else:
        m_iter = (m for base in range(0, top, p) for m in range(base + 1, base + p))
    for m in m_iter:
        d = m - 1
        t = gcd(d, first)
        for q in rest:
            t *= gcd(d, q)
        total += t
        if terms is not None:
            terms.append((m, t))
    return LocalSumReport(p, exps, total, tuple(terms) if terms is not None else None)


def local_sum_fast(p: int, exponents: Sequence[int]) -> LocalSumReport:
    """Evaluate S_p by aggregating m over the valuation of m - 1.

    Always agrees with :func:`local_sum_naive`; costs O(a_r * r) arithmetic
    operations regardless of p.

    >>> local_sum_fast(2, [1, 2, 3]).sum
    112
    """
    exps = _check_exponents(exponents)
    a_r = exps[-1]
    # v >= a_r happens for m = 1 only; gcd(0, p^a) = p^a.
    total = math.prod(p**a for a in exps)
    for v in range(1, a_r):
        multiplicity = p ** (a_r - v) - p ** (a_r - v - 1)
        total += multiplicity * math.prod(p ** min(v, a) for a in exps)
    # v = 0: m not congruent to 0 or 1 mod p; every gcd factor is 1.
    total += p**a_r - 2 * p ** (a_r - 1)
    return LocalSumReport(p, exps, total, None)


def count_cyclic_subgroups(
    d: PrimaryDecomposition,
    path: str = "fast",
    *,
    budget: int = DEFAULT_ITERATION_BUDGET,
) -> CountReport:
    """Count the cyclic subgroups of the group with primary decomposition ``d``.

    ``path`` selects the local-sum evaluation: ``"fast"`` (default) or
    ``"naive"``.  The division by phi(exp G) is asserted exact; a remainder
    would mean an arithmetic bug, never bad input.

    >>> from .groupspec import normalize
    >>> count_cyclic_subgroups(normalize([2, 12, 72])).count
    224
    """
    if path == "fast":
        reports = tuple(local_sum_fast(p, exps) for p, exps in d.components)
        method = METHOD_FORMULA_FAST
    elif path == "naive":
        reports = tuple(local_sum_naive(p, exps, budget=budget) for p, exps in d.components)
        method = METHOD_FORMULA_NAIVE
    else:
        raise ValueError(f"path must be 'fast' or 'naive', got {path!r}")
    exp_f = exponent_of(d)
    phi = euler_phi(exp_f)
    product = math.prod(r.sum for r in reports)
    count = _exact_div(product, phi, "cyclic subgroup count")
    return CountReport(count, exp_f.value(), phi, reports, method)


def count_cyclic_subgroups_cyclic(n: Factorization) -> int:
    """Cyclic-subgroup count of the cyclic group Z_n: the divisor count tau(n).

    A cyclic group has exactly one subgroup per divisor; this is the special
    case that reduces the general formula to Menon's identity.
    """
    return tau(n)


def count_rank2(m: int, n: int, *, budget: int | None = None) -> CountReport:
    """Count the cyclic subgroups of Z_m x Z_n via the rank-2 sum.

    For each prime p of l = lcm(m, n), with a = v_p(m) and b = v_p(n)
    (either may be zero, contributing gcd(., p^0) = gcd(., 1) = 1):

        S_p = sum over 1 <= u <= p^max(a,b), p not dividing u,
              of gcd(u - 1, p^a) * gcd(u - 1, p^b)

    and the count is prod_p S_p / phi(l).  Evaluated directly, not by
    delegating to :func:`count_cyclic_subgroups`.

    >>> count_rank2(4, 6).count
    12
    """
    if m < 1 or n < 1:
        raise ValueError(f"count_rank2 requires positive integers, got ({m}, {n})")
    l = math.lcm(m, n)
    if l == 1:
        return CountReport(1, 1, 1, (), METHOD_FORMULA_NAIVE)
    l_f = factorize(l)
    gcd = math.gcd
    reports = []
    for p, _ in l_f:
        a = p_valuation(m, p)
        b = p_valuation(n, p)
        pa, pb = p**a, p**b
        top = max(pa, pb)
        if budget is not None and top > budget:
            raise ResourceLimitError(
                f"rank-2 local sum for p={p} needs {top} iterations, over the budget of {budget}"
            )
        s = 0
        for u in range(1, top + 1):
            if u % p == 0:
                continue
            d = u - 1
            s += gcd(d, pa) * gcd(d, pb)
        reports.append(LocalSumReport(p, tuple(sorted((a, b))), s, None))
    phi = euler_phi(l_f)
    product = math.prod(r.sum for r in reports)
    count = _exact_div(product, phi, "rank-2 cyclic subgroup count")
    return CountReport(count, l, phi, tuple(reports), METHOD_FORMULA_NAIVE)


def count_homocyclic(n: Factorization, r: int, *, budget: int | None = None) -> CountReport:
    """Count the cyclic subgroups of Z_n^r (r copies of Z_n).

    For each prime power p^a in n:

        S_p = sum over 1 <= u <= p^a, p not dividing u, of gcd(u - 1, p^a)^r

    and the count is prod_p S_p / phi(n).  Evaluated directly, not by
    delegating to :func:`count_cyclic_subgroups`.

    >>> from .arith import factorize
    >>> count_homocyclic(factorize(2), 2).count
    4
    """
    if r < 1:
        raise ValueError(f"count_homocyclic requires r >= 1, got {r}")
    value = n.value()
    if value == 1:
        return CountReport(1, 1, 1, (), METHOD_FORMULA_NAIVE)
    gcd = math.gcd
    reports = []
    for p, a in n:
        pa = p**a
        if budget is not None and pa > budget:
            raise ResourceLimitError(
                f"homocyclic local sum for p={p} needs {pa} iterations, over the budget of {budget}"
            )
        s = 0
        for u in range(1, pa + 1):
            if u % p == 0:
                continue
            s += gcd(u - 1, pa) ** r
        reports.append(LocalSumReport(p, (a,) * r, s, None))
    phi = euler_phi(n)
    product = math.prod(rep.sum for rep in reports)
    count = _exact_div(product, phi, "homocyclic cyclic subgroup count")
    return CountReport(count, value, phi, tuple(reports), METHOD_FORMULA_NAIVE)
