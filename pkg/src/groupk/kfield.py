"""K-theory of finite fields via Quillen's computation, plus prime-power checks."""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbelianGroup
from .errors import NotAPrimePower

_Q_GUARD = 2**64


@dataclass(frozen=True)
class PrimePower:
    """q = p^e with p prime."""

    q: int
    p: int
    e: int


def validate_prime_power(q: int) -> PrimePower:
    """Factor q as p^e or raise NotAPrimePower."""
    if q < 2:
        raise NotAPrimePower(f"field size must be >= 2, got {q}")
    if q > _Q_GUARD:
        raise NotAPrimePower(f"field size {q} exceeds the guard {_Q_GUARD}")
    n = q
    p = None
    d = 2
    while d * d <= n:
        if n % d == 0:
            p = d
            break
        d += 1 if d == 2 else 2
    if p is None:
        return PrimePower(q, q, 1)
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    if n != 1:
        raise NotAPrimePower(f"{q} is not a prime power")
    return PrimePower(q, p, e)


def k_finite_field(q: PrimePower, n: int) -> FgAbelianGroup:
    """K_n of the field with q elements.

    Z in degree 0; zero in negative and positive even degrees; cyclic of
    order q^i - 1 in degree n = 2i - 1.
    """
    if n < 0:
        return FgAbelianGroup.trivial()
    if n == 0:
        return FgAbelianGroup.free(1)
    if n % 2 == 0:
        return FgAbelianGroup.trivial()
    i = (n + 1) // 2
    return FgAbelianGroup.cyclic(q.q**i - 1)
