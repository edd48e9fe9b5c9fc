"""Semisimple structure of F_q[G]: Maschke check, component count, K-groups.

The number of simple components is the number of q-classes (conjugacy merged
with the q-power map); for abelian groups the orbit sizes of x -> x^q give
the degrees of the component fields, from which odd K-groups of the group
algebra follow by Morita invariance and the finite-field K-theory formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import FgAbelianGroup, direct_sum_all
from .errors import NotAbelian, NotSemisimple
from .groups import FiniteGroup
from .kfield import PrimePower


@dataclass(frozen=True)
class WedderburnSummary:
    """Shape of the Artin-Wedderburn decomposition of F_q[G]."""

    semisimple: bool
    d: int
    field_degrees: tuple[int, ...] | None
    method: str

    def to_json(self) -> dict:
        out = {"semisimple": self.semisimple, "d": self.d, "method": self.method}
        if self.field_degrees is not None:
            out["field_degrees"] = list(self.field_degrees)
        return out


def is_semisimple(G: FiniteGroup, q: PrimePower) -> bool:
    """Maschke: F_q[G] is semisimple iff p does not divide |G|."""
    return G.order % q.p != 0


def _require_semisimple(G, q):
    if not is_semisimple(G, q):
        raise NotSemisimple(
            f"characteristic {q.p} divides the group order {G.order}"
        )


def q_classes(G: FiniteGroup, q: PrimePower) -> list[list[int]]:
    """Partition of G under x ~ g x^(q^m) g^{-1}.

    The relation is generated by conjugation together with the q-power map,
    so a breadth-first closure over both suffices.
    """
    n = G.order
    seen = [False] * n
    classes = []
    for x in range(n):
        if seen[x]:
            continue
        block = []
        frontier = [x]
        seen[x] = True
        while frontier:
            y = frontier.pop()
            block.append(y)
            nbrs = {G.conj(g, y) for g in range(n)}
            nbrs.add(G.power(y, q.q))
            for z in nbrs:
                if not seen[z]:
                    seen[z] = True
                    frontier.append(z)
        classes.append(sorted(block))
    return classes


def component_count(G: FiniteGroup, q: PrimePower) -> int:
    """Number of simple components of F_q[G] (Berman's q-class count)."""
    _require_semisimple(G, q)
    return len(q_classes(G, q))


def _power_orbits(G: FiniteGroup, q: PrimePower) -> list[list[int]]:
    n = G.order
    seen = [False] * n
    orbits = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = []
        y = x
        while not seen[y]:
            seen[y] = True
            orbit.append(y)
            y = G.power(y, q.q)
        orbits.append(orbit)
    return orbits


def abelian_wedderburn(G: FiniteGroup, q: PrimePower) -> WedderburnSummary:
    """Component fields of F_q[G] for abelian G.

    The orbits of x -> x^q partition G; each orbit of size f contributes one
    component field with q^f elements, and the sizes sum to |G|.
    """
    if not G.is_abelian():
        raise NotAbelian("field degrees are only computed for abelian groups")
    _require_semisimple(G, q)
    degrees = tuple(sorted(len(o) for o in _power_orbits(G, q)))
    return WedderburnSummary(
        semisimple=True, d=len(degrees), field_degrees=degrees, method="q-classes"
    )


def wedderburn_summary(G: FiniteGroup, q: PrimePower) -> WedderburnSummary:
    """Component count for any G; field degrees included when G is abelian."""
    if not is_semisimple(G, q):
        return WedderburnSummary(semisimple=False, d=0, field_degrees=None, method="q-classes")
    if G.is_abelian():
        return abelian_wedderburn(G, q)
    return WedderburnSummary(
        semisimple=True, d=component_count(G, q), field_degrees=None, method="q-classes"
    )


def k_group_ring(G: FiniteGroup, q: PrimePower, n: int) -> FgAbelianGroup | None:
    """K_n(F_q[G]) for semisimple F_q[G].

    Morita invariance reduces each matrix component to its field, so even
    positive and all negative degrees vanish and K_0 is Z^d.  Odd degrees
    need the component field sizes, which are only computed for abelian G;
    nonabelian odd cases return None (unknown) rather than a guess.
    """
    _require_semisimple(G, q)
    if n < 0:
        return FgAbelianGroup.trivial()
    if n == 0:
        return FgAbelianGroup.free(component_count(G, q))
    if n % 2 == 0:
        return FgAbelianGroup.trivial()
    if not G.is_abelian():
        return None
    i = (n + 1) // 2
    degrees = abelian_wedderburn(G, q).field_degrees
    return direct_sum_all(
        FgAbelianGroup.cyclic(q.q ** (i * f) - 1) for f in degrees
    )
