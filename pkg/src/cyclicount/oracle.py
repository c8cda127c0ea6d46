"""Brute-force oracles for the cyclic-subgroup count.

Two independent routes:

* enumeration — walk every element, build the cyclic subgroup it generates
  by repeated addition, and count the distinct subgroups;
* orbit counting — enumerate the power maps x -> m*x (one unit multiplier
  per prime component), sum their fixed-point counts, and divide by the
  number of maps.

Elements are plain tuples of residues, one coordinate per prime-power
cyclic factor, in the order the decomposition lists them (primes ascending,
exponents ascending within a prime).  A power map is a dict
``{prime: multiplier}`` with the multiplier a unit modulo the prime's
largest factor.

Both routes are capped: enumeration refuses groups above
``DEFAULT_ELEMENT_CAP`` elements and orbit counting refuses more than
``DEFAULT_POWER_MAP_CAP`` maps.
"""

from __future__ import annotations

import itertools
import math
from typing import Iterable, Iterator

import numpy as np

from .arith import euler_phi, factorize
from .counting import (
    METHOD_BURNSIDE,
    METHOD_ENUMERATION,
    CountReport,
    _exact_div,
)
from .errors import ResourceLimitError
from .groupspec import PrimaryDecomposition, exponent_of, order_of

DEFAULT_ELEMENT_CAP = 1_000_000
DEFAULT_POWER_MAP_CAP = 100_000

GroupElement = tuple[int, ...]
PowerMap = dict[int, int]


def moduli(d: PrimaryDecomposition) -> tuple[int, ...]:
    """The flattened cyclic factor orders, one per element coordinate."""
    return tuple(p**a for p, exps in d.components for a in exps)


def enumerate_elements(
    d: PrimaryDecomposition, *, cap: int = DEFAULT_ELEMENT_CAP
) -> Iterator[GroupElement]:
    """Yield every group element exactly once, in lexicographic order."""
    order = order_of(d)
    if order > cap:
        raise ResourceLimitError(f"group order {order} exceeds the element cap of {cap}")
    return itertools.product(*(range(m) for m in moduli(d)))


def _check_element(d: PrimaryDecomposition, g: GroupElement) -> tuple[int, ...]:
    mods = moduli(d)
    if len(g) != len(mods) or any(not 0 <= x < m for x, m in zip(g, mods)):
        raise ValueError(f"{g} is not an element of {d}")
    return mods


def cyclic_subgroup_of(d: PrimaryDecomposition, g: GroupElement) -> tuple[GroupElement, ...]:
    """The cyclic subgroup generated by ``g``, as a sorted element tuple.

    The sorted tuple is the canonical key: two elements generate the same
    subgroup exactly when their keys are equal.

    >>> from .groupspec import normalize
    >>> cyclic_subgroup_of(normalize([4, 2]), (1, 1))
    ((0, 0), (1, 1), (2, 0), (3, 1))
    """
    mods = _check_element(d, g)
    zero = (0,) * len(mods)
    members = [zero]
    x = g
    while x != zero:
        members.append(x)
        x = tuple((a + b) % m for a, b, m in zip(x, g, mods))
    return tuple(sorted(members))


def count_by_enumeration(
    d: PrimaryDecomposition, *, cap: int = DEFAULT_ELEMENT_CAP
) -> CountReport:
    """Count distinct cyclic subgroups by generating one from every element.

    Each subgroup is materialized once: after building <g> we mark all of
    its generators (the members j*g with gcd(j, |<g>|) = 1) as seen, so no
    later element rebuilds the same subgroup.

    >>> from .groupspec import normalize
    >>> count_by_enumeration(normalize([2, 2])).count
    4
    """
    mods = moduli(d)
    zero = (0,) * len(mods)
    gcd = math.gcd
    seen: set[GroupElement] = set()
    count = 0
    for g in enumerate_elements(d, cap=cap):
        if g in seen:
            continue
        members = [zero]
        x = g
        while x != zero:
            members.append(x)
            x = tuple((a + b) % m for a, b, m in zip(x, g, mods))
        size = len(members)
        for j in range(1, size):
            if gcd(j, size) == 1:
                seen.add(members[j])
        count += 1
    exp_f = exponent_of(d)
    return CountReport(count, exp_f.value(), euler_phi(exp_f), (), METHOD_ENUMERATION)


def enumerate_power_maps(
    d: PrimaryDecomposition, *, cap: int = DEFAULT_POWER_MAP_CAP
) -> Iterator[PowerMap]:
    """Yield every power map as ``{prime: multiplier}``, each exactly once.

    There are phi(exp G) maps: independently for each prime p with largest
    exponent a, the multiplier runs over the units 1 <= m <= p^a, p not
    dividing m.  The trivial group yields the single empty map.
    """
    total = euler_phi(exponent_of(d))
    if total > cap:
        raise ResourceLimitError(f"{total} power maps exceed the cap of {cap}")
    primes = d.primes()
    unit_ranges = [
        [m for m in range(1, p ** exps[-1] + 1) if m % p]
        for p, exps in d.components
    ]
    return (dict(zip(primes, combo)) for combo in itertools.product(*unit_ranges))


def apply_power_map(d: PrimaryDecomposition, f: PowerMap, g: GroupElement) -> GroupElement:
    """Image of ``g`` under the power map ``f`` (coordinatewise m*x)."""
    out = []
    i = 0
    for p, exps in d.components:
        m = f[p]
        for a in exps:
            out.append(m * g[i] % p**a)
            i += 1
    return tuple(out)


def fixed_point_count(d: PrimaryDecomposition, f: PowerMap) -> int:
    """Number of elements fixed by ``f``, by the gcd closed form.

    A coordinate x mod p^a is fixed exactly when (m - 1) * x = 0 mod p^a,
    which has gcd(m - 1, p^a) solutions, so the total is the product of
    those gcds over all coordinates.

    >>> from .groupspec import normalize
    >>> fixed_point_count(normalize([2, 4, 8]), {2: 3})
    8
    """
    total = 1
    for p, exps in d.components:
        m = f[p]
        for a in exps:
            total *= math.gcd(m - 1, p**a)
    return total


def fixed_points_by_scan(
    d: PrimaryDecomposition, f: PowerMap, *, cap: int = DEFAULT_ELEMENT_CAP
) -> int:
    """Number of elements fixed by ``f``, by scanning residues.

    Independent of the gcd closed form: for every coordinate it tests each
    residue x against (m - 1) * x = 0 mod p^a and multiplies the solution
    counts.  Refuses groups above the element cap.
    """
    order = order_of(d)
    if order > cap:
        raise ResourceLimitError(f"group order {order} exceeds the element cap of {cap}")
    total = 1
    for p, exps in d.components:
        m = f[p]
        for a in exps:
            mod = p**a
            if (m - 1) * (mod - 1) < 2**63:
                x = np.arange(mod, dtype=np.int64)
                total *= int(np.count_nonzero((m - 1) * x % mod == 0))
            else:
                total *= sum(1 for x in range(mod) if (m - 1) * x % mod == 0)
    return total


def count_by_burnside(
    d: PrimaryDecomposition, *, cap: int = DEFAULT_POWER_MAP_CAP
) -> CountReport:
    """Count cyclic subgroups as the orbit count of the power-map action.

    The orbit of an element is exactly the generator set of its cyclic
    subgroup, so the average fixed-point count over all power maps equals
    the number of cyclic subgroups.  The division is asserted exact.

    >>> from .groupspec import normalize
    >>> count_by_burnside(normalize([4])).count
    3
    """
    exp_f = exponent_of(d)
    phi = euler_phi(exp_f)
    total = 0
    for f in enumerate_power_maps(d, cap=cap):
        total += fixed_point_count(d, f)
    count = _exact_div(total, phi, "orbit count")
    return CountReport(count, exp_f.value(), phi, (), METHOD_BURNSIDE)


def _ascending_partitions(n: int, smallest: int = 1) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for k in range(smallest, n + 1):
        for rest in _ascending_partitions(n - k, k):
            yield (k,) + rest


def iter_abelian_groups(max_order: int) -> Iterator[PrimaryDecomposition]:
    """Yield the primary decomposition of every abelian group of order <= max_order.

    Groups of order n correspond to choices of one partition per prime
    exponent of n; orders come out ascending and the trivial group first.

    >>> sum(1 for _ in iter_abelian_groups(8))
    11
    """
    for n in range(1, max_order + 1):
        f = factorize(n)
        partition_choices = [list(_ascending_partitions(e)) for _, e in f]
        for combo in itertools.product(*partition_choices):
            yield PrimaryDecomposition(
                tuple((p, part) for (p, _), part in zip(f, combo))
            )
