"""Integral group homology from the normalized bar resolution, with oracles.

The engine computes H_n(G; Z) from the bar complex; homology with (trivially
acted-on) coefficients follows by universal coefficients.  Two independent
oracles — the 2-periodic resolution for cyclic groups and the Kunneth formula
for direct products — exist so the engine can be cross-checked, never trusted
on its own.
"""

from __future__ import annotations

import functools
import itertools

from .abelian import FgAbelianGroup, direct_sum_all, tensor, tor_product
from .errors import InsufficientDegrees, TooLarge
from .groups import FiniteGroup, cyclic
from .intlinalg import IntegerMatrix, homology_of_pair

DEFAULT_DEGREE_CAP = 4
DEFAULT_GENERATOR_LIMIT = 10**5


def bar_basis_dimension(G: FiniteGroup, n: int) -> int:
    return (G.order - 1) ** n


def _check_guards(G, n, degree_cap, generator_limit):
    if n > degree_cap:
        raise TooLarge(f"degree {n} exceeds the degree cap {degree_cap}")
    if bar_basis_dimension(G, n) > generator_limit:
        raise TooLarge(
            f"bar basis in degree {n} has {bar_basis_dimension(G, n)} generators, "
            f"over the limit {generator_limit}"
        )


def bar_boundary(
    G: FiniteGroup,
    n: int,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    generator_limit: int = DEFAULT_GENERATOR_LIMIT,
) -> IntegerMatrix:
    """Boundary matrix from degree n to degree n-1 of the normalized bar complex.

    Basis of degree k: k-tuples of non-identity elements in lexicographic
    order.  With trivial coefficients the outer faces drop the first or last
    entry; inner faces multiply neighbours, and any face that produces the
    identity is dropped by normalization.
    """
    if n < 1:
        raise ValueError("boundary defined for degree >= 1")
    # the (n+1)-st boundary is needed for H_n at the cap
    _check_guards(G, n, degree_cap + 1, generator_limit)
    nonid = range(1, G.order)
    lower = list(itertools.product(nonid, repeat=n - 1))
    lower_index = {t: k for k, t in enumerate(lower)}
    entries: dict[tuple[int, int], int] = {}

    def add(row_tuple, col, sign):
        if 0 in row_tuple:
            return  # normalization: faces through the identity vanish
        r = lower_index[row_tuple]
        v = entries.get((r, col), 0) + sign
        if v == 0:
            entries.pop((r, col), None)
        else:
            entries[(r, col)] = v

    for col, g in enumerate(itertools.product(nonid, repeat=n)):
        add(g[1:], col, 1)
        sign = -1
        for i in range(n - 1):
            merged = g[:i] + (G.mul(g[i], g[i + 1]),) + g[i + 2:]
            add(merged, col, sign)
            sign = -sign
        add(g[:-1], col, sign)
    return IntegerMatrix(len(lower), (G.order - 1) ** n, entries, entry_limit=None)


@functools.lru_cache(maxsize=None)
def _integral_homology_cached(G: FiniteGroup, n: int, degree_cap: int, generator_limit: int) -> FgAbelianGroup:
    if n == 0:
        return FgAbelianGroup.free(1)
    d_out = bar_boundary(G, n, degree_cap=degree_cap, generator_limit=generator_limit)
    d_in = bar_boundary(G, n + 1, degree_cap=degree_cap, generator_limit=generator_limit)
    return homology_of_pair(d_in, d_out)


def integral_homology(
    G: FiniteGroup,
    n: int,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    generator_limit: int = DEFAULT_GENERATOR_LIMIT,
) -> FgAbelianGroup:
    """H_n(G; Z) in canonical form."""
    if n < 0:
        raise ValueError("homology degree must be >= 0")
    if n > degree_cap:
        raise TooLarge(f"degree {n} exceeds the degree cap {degree_cap}")
    return _integral_homology_cached(G, n, degree_cap, generator_limit)


def homology_with_coefficients(
    G: FiniteGroup,
    n: int,
    coefficients: FgAbelianGroup,
    *,
    degree_cap: int = DEFAULT_DEGREE_CAP,
    generator_limit: int = DEFAULT_GENERATOR_LIMIT,
) -> FgAbelianGroup:
    """H_n(G; A) for trivially acted-on A, via universal coefficients:
    H_n(G; Z) (x) A  +  Tor(H_{n-1}(G; Z), A).
    """
    if coefficients.is_trivial():
        return FgAbelianGroup.trivial()
    hn = integral_homology(G, n, degree_cap=degree_cap, generator_limit=generator_limit)
    part = tensor(hn, coefficients)
    if n >= 1:
        hprev = integral_homology(G, n - 1, degree_cap=degree_cap, generator_limit=generator_limit)
        part = direct_sum_all([part, tor_product(hprev, coefficients)])
    return part


def cyclic_homology_oracle(m: int, n: int) -> FgAbelianGroup:
    """H_n(Z/m; Z) from the 2-periodic resolution (norm / difference maps).

    After tensoring down to trivial coefficients the difference map is 0 and
    the norm map is multiplication by m; the homology of that segment is
    computed honestly, not read from a table.
    """
    if m < 1:
        raise ValueError(f"cyclic order must be >= 1, got {m}")
    if n < 0:
        raise ValueError("degree must be >= 0")

    def boundary(k: int) -> IntegerMatrix:
        # degree k -> k-1, k >= 1: difference map in odd degrees, norm in even
        value = 0 if k % 2 == 1 else m
        return IntegerMatrix(1, 1, {(0, 0): value})

    d_in = boundary(n + 1)
    d_out = boundary(n) if n >= 1 else IntegerMatrix.zero(0, 1)
    return homology_of_pair(d_in, d_out)


def cyclic_homology_sequence(m: int, top: int) -> list[FgAbelianGroup]:
    return [cyclic_homology_oracle(m, n) for n in range(top + 1)]


def kunneth_oracle(hA, hB, n: int) -> FgAbelianGroup:
    """H_n of a product space from the factors' homology sequences:
    sum of tensors in total degree n plus Tor terms in total degree n-1.
    """
    if len(hA) <= n or len(hB) <= n:
        raise InsufficientDegrees(
            f"need homology through degree {n}, got lengths {len(hA)} and {len(hB)}"
        )
    parts = [tensor(hA[i], hB[n - i]) for i in range(n + 1)]
    parts += [tor_product(hA[i], hB[n - 1 - i]) for i in range(n)]
    return direct_sum_all(parts)


def clear_homology_cache():
    _integral_homology_cached.cache_clear()
