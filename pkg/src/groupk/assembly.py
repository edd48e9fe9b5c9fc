"""The E^2 page of the Atiyah-Hirzebruch spectral sequence for H_*(BG; K(F)),
the low-degree survival record, and the non-injectivity certificate.

No differentials are ever computed: the survival of the low-degree terms and
of E^2_{2,0} is quoted from the literature (Lueck-Reich, "The Baum-Connes and
the Farrell-Jones conjectures", Lemma 2) and recorded as a cited assumption,
cleanly separated from the machine-verified quantities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import __version__
from .abelian import FgAbelianGroup
from .errors import InsufficientDegree
from .groups import FiniteGroup
from .grouprings import component_count, is_semisimple, k_group_ring
from .homology import (
    DEFAULT_GENERATOR_LIMIT,
    homology_with_coefficients,
    integral_homology,
)
from .kfield import PrimePower, k_finite_field

NOT_INJECTIVE = "NOT_INJECTIVE"
INCONCLUSIVE = "INCONCLUSIVE"

LOW_DEGREE_SURVIVAL = (
    "cited: E2_{0,0}, E2_{1,0}, E2_{0,1} survive; the assembly map is "
    "injective in degrees 0 and 1 (Lueck-Reich, Lemma 2)"
)
EDGE_SURVIVAL = (
    "cited: E2_{2,0} = H_2(G) survives to E-infinity because the surviving "
    "low-degree terms leave no differential into or out of it"
)
CITED_QUILLEN = (
    "Quillen: K_n of the field with q elements is Z for n = 0, zero for n < 0 "
    "and positive even n, and cyclic of order q^i - 1 for n = 2i - 1"
)
CITED_MASCHKE = "Maschke: F[G] is semisimple when char(F) does not divide |G|"
CITED_WEDDERBURN = (
    "Artin-Wedderburn: a finite semisimple ring is a direct product of matrix "
    "rings over finite fields"
)
CITED_MORITA = "Morita invariance: K_*(M_n(E)) = K_*(E)"
CITED_BERMAN = (
    "Berman: the number of simple components of a semisimple F_q[G] equals "
    "the number of q-classes of G"
)


@dataclass(frozen=True)
class E2Page:
    """E^2_{p,q} = H_p(BG; K_q(F)) for p >= 0, q >= 0, p + q <= N.

    Rows with negative q vanish (negative K-groups of a field are zero) and
    are stored implicitly.
    """

    group: FiniteGroup
    q: PrimePower
    max_total_degree: int
    entries: tuple  # ((p, q, FgAbelianGroup), ...) sorted by (q, p)

    def entry(self, p: int, qdeg: int) -> FgAbelianGroup:
        if qdeg < 0:
            return FgAbelianGroup.trivial()
        for ep, eq, val in self.entries:
            if (ep, eq) == (p, qdeg):
                return val
        raise KeyError((p, qdeg))


def e2_page(
    G: FiniteGroup,
    q: PrimePower,
    max_total_degree: int,
    *,
    generator_limit: int = DEFAULT_GENERATOR_LIMIT,
) -> E2Page:
    """Populate E^2_{p,q} = H_p(G; K_q(F_q)) for the triangle p + q <= N."""
    entries = []
    for qdeg in range(max_total_degree + 1):
        coeff = k_finite_field(q, qdeg)
        for p in range(max_total_degree - qdeg + 1):
            val = homology_with_coefficients(
                G, p, coeff,
                degree_cap=max_total_degree, generator_limit=generator_limit,
            )
            entries.append((p, qdeg, val))
    entries.sort(key=lambda t: (t[1], t[0]))
    return E2Page(G, q, max_total_degree, tuple(entries))


@dataclass(frozen=True)
class SurvivingTerm:
    p: int
    q: int
    justification: str

    def to_json(self) -> dict:
        return {"p": self.p, "q": self.q, "justification": self.justification}


def surviving_low_degree(page: E2Page) -> list[SurvivingTerm]:
    """The four E^2 positions whose survival the argument quotes.

    (0,0), (1,0), (0,1) survive because the assembly map is injective in
    degrees 0 and 1; (2,0) = H_2(G) survives by the same lemma's edge
    argument.  All four are cited facts, not computed ones.
    """
    if page.max_total_degree < 2:
        raise InsufficientDegree(
            f"page covers total degree {page.max_total_degree}, need >= 2"
        )
    return [
        SurvivingTerm(0, 0, LOW_DEGREE_SURVIVAL),
        SurvivingTerm(1, 0, LOW_DEGREE_SURVIVAL),
        SurvivingTerm(0, 1, LOW_DEGREE_SURVIVAL),
        SurvivingTerm(2, 0, EDGE_SURVIVAL),
    ]


@dataclass(frozen=True)
class NonInjectivityCertificate:
    """Structured verdict on injectivity of the assembly map for (G, q).

    NOT_INJECTIVE requires all three machine-verified facts: F_q[G]
    semisimple, H_2(G; Z) nonzero, K_2(F_q[G]) = 0.  INCONCLUSIVE means the
    criterion does not apply, never that the map is injective.
    """

    group: str
    q: int
    p: int
    e: int
    semisimple: bool
    d: int | None
    h2: FgAbelianGroup
    k2_group_ring: FgAbelianGroup | None
    surviving_terms: tuple[SurvivingTerm, ...]
    verdict: str
    reason: str | None
    witness: dict | None
    cited_assumptions: tuple[str, ...]
    tool_version: str = __version__

    def __post_init__(self):
        if self.verdict == NOT_INJECTIVE:
            if not self.semisimple:
                raise ValueError("NOT_INJECTIVE requires a semisimple group algebra")
            if self.h2.is_trivial():
                raise ValueError("NOT_INJECTIVE requires nontrivial H_2(G)")
            if self.k2_group_ring is None or not self.k2_group_ring.is_trivial():
                raise ValueError("NOT_INJECTIVE requires K_2(F_q[G]) = 0")
        if LOW_DEGREE_SURVIVAL not in self.cited_assumptions:
            raise ValueError("the low-degree survival fact must be cited")
        if self.d is not None and CITED_BERMAN not in self.cited_assumptions:
            raise ValueError("Berman's count must be cited when d is reported")

    def to_json_dict(self) -> dict:
        return {
            "group": self.group,
            "q": self.q,
            "p": self.p,
            "e": self.e,
            "semisimple": self.semisimple,
            "d": self.d,
            "h2": self.h2.to_json(),
            "k2_group_ring": None if self.k2_group_ring is None else self.k2_group_ring.to_json(),
            "surviving_terms": [t.to_json() for t in self.surviving_terms],
            "verdict": self.verdict,
            "reason": self.reason,
            "witness": self.witness,
            "cited_assumptions": list(self.cited_assumptions),
            "tool_version": self.tool_version,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"


def certify_noninjectivity(
    G: FiniteGroup,
    q: PrimePower,
    *,
    group_name: str | None = None,
    generator_limit: int = DEFAULT_GENERATOR_LIMIT,
) -> NonInjectivityCertificate:
    """Run the full obstruction pipeline for the pair (G, q).

    Verdict NOT_INJECTIVE when p does not divide |G| and H_2(G; Z) is
    nontrivial: then E^2_{2,0} = H_2(G) survives (cited) while K_2(F_q[G])
    vanishes (computed), so the assembly map has nonzero kernel in degree 2.
    """
    name = group_name or f"order-{G.order} group"
    h2 = integral_homology(G, 2, generator_limit=generator_limit)
    page = e2_page(G, q, 2, generator_limit=generator_limit)
    surviving = tuple(surviving_low_degree(page))
    semisimple = is_semisimple(G, q)
    cited = [LOW_DEGREE_SURVIVAL, EDGE_SURVIVAL]
    if not semisimple:
        return NonInjectivityCertificate(
            group=name, q=q.q, p=q.p, e=q.e,
            semisimple=False, d=None, h2=h2, k2_group_ring=None,
            surviving_terms=surviving,
            verdict=INCONCLUSIVE, reason="CharacteristicDividesOrder",
            witness=None, cited_assumptions=tuple(cited),
        )
    d = component_count(G, q)
    k2 = k_group_ring(G, q, 2)
    cited += [CITED_MASCHKE, CITED_WEDDERBURN, CITED_BERMAN, CITED_MORITA, CITED_QUILLEN]
    if h2.is_trivial():
        return NonInjectivityCertificate(
            group=name, q=q.q, p=q.p, e=q.e,
            semisimple=True, d=d, h2=h2, k2_group_ring=k2,
            surviving_terms=surviving,
            verdict=INCONCLUSIVE, reason="H2Trivial",
            witness=None, cited_assumptions=tuple(cited),
        )
    witness = {
        "degree": 2,
        "source": f"E2_{{2,0}} = H_2(G) = {h2}",
        "target": "K_2(F_q[G]) = 0",
    }
    return NonInjectivityCertificate(
        group=name, q=q.q, p=q.p, e=q.e,
        semisimple=True, d=d, h2=h2, k2_group_ring=k2,
        surviving_terms=surviving,
        verdict=NOT_INJECTIVE, reason=None,
        witness=witness, cited_assumptions=tuple(cited),
    )
