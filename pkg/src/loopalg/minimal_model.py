"""Minimal models of spaces whose cohomology is a complete intersection.

For a presentation ``Q[u_1..u_n] / (P_1..P_k)`` by a regular sequence, the
minimal model is ``Q[u] (x) Lambda(v_1..v_k)`` with ``deg v_j = deg P_j - 1``
and differential ``d(u_i) = 0``, ``d(v_j) = P_j``.  The regular-sequence
property itself is checked by degreewise dimension counting of the
commutative quotient, which also yields the graded dimensions of the
cohomology.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import linalg
from .gca import Derivation, GcaElement, GradedAlgebra
from .series import PoincareSeries


class CohomologyPresentation:
    """Degree-2 polynomial generators modulo homogeneous even relations."""

    def __init__(self, algebra: GradedAlgebra, relations: list[GcaElement]):
        for name, degree in algebra.generators:
            if degree != 2:
                raise ValueError(f"generator {name!r} must have degree 2")
        rels = tuple(relations)
        for r in rels:
            if not algebra.same_generators(r.algebra):
                raise ValueError("relation over a different generator set")
            if r.is_zero() or not r.is_homogeneous():
                raise ValueError("relations must be nonzero and homogeneous")
            if r.degree() % 2 or r.degree() < 4:
                raise ValueError("relations must have even degree >= 4")
        self.algebra = algebra
        self.relations = rels

    @property
    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(r.degree() for r in self.relations)

    def socle_degree(self) -> int:
        return sum(d - 2 for d in self.relation_degrees)


@dataclass(frozen=True)
class MinimalModel:
    algebra: GradedAlgebra
    even_names: tuple[str, ...]
    odd_names: tuple[str, ...]
    differential: Derivation
    presentation: CohomologyPresentation


def quotient_dimensions(c: CohomologyPresentation, max_degree: int) -> PoincareSeries:
    """Graded dimensions of the commutative quotient, by exact rank counts.

    Degree d of the quotient = (number of degree-d monomials) minus the rank
    of the matrix whose rows expand monomial * P_j over the degree-d basis.
    """
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    alg = c.algebra
    dims = []
    for d in range(max_degree + 1):
        monomials = alg.monomials_of_degree(d)
        if not monomials:
            dims.append(0)
            continue
        index = {m: i for i, m in enumerate(monomials)}
        elim = linalg.FractionFreeEliminator()
        for rel in c.relations:
            e = rel.degree()
            if e > d:
                continue
            for m in alg.monomials_of_degree(d - e):
                shifted = alg.element({m: Fraction(1)}) * rel
                scale = 1
                for coeff in shifted.terms.values():
                    scale = scale * coeff.denominator // gcd(scale, coeff.denominator)
                elim.add_row(
                    {
                        index[mono]: int(coeff * scale)
                        for mono, coeff in shifted.terms.items()
                    }
                )
        dims.append(len(monomials) - elim.rank)
    return PoincareSeries(tuple(dims))


def regular_sequence_check(c: CohomologyPresentation) -> bool:
    """Finite-dimensionality test for n relations in n variables.

    The quotient is generated in degree 2, so one vanishing even degree past
    the socle bound sum(deg P_j - 2) kills everything above it.
    """
    if len(c.relations) != len(c.algebra):
        raise ValueError("relation count differs from variable count")
    socle = c.socle_degree()
    dims = quotient_dimensions(c, socle + 2)
    return dims.coefficient(socle + 1) == 0 and dims.coefficient(socle + 2) == 0


def build_minimal_model(
    c: CohomologyPresentation,
    odd_names: list[str] | None = None,
    check_regular: bool = True,
) -> MinimalModel:
    """Minimal model with one odd generator per relation, d(v_j) = P_j."""
    if check_regular and not regular_sequence_check(c):
        raise ValueError("relations do not form a regular sequence")
    even = list(c.algebra.generators)
    if odd_names is None:
        odd_names = [f"v{j}" for j in range(1, len(c.relations) + 1)]
    if len(odd_names) != len(c.relations):
        raise ValueError("need one odd generator name per relation")
    odd = [(name, rel.degree() - 1) for name, rel in zip(odd_names, c.relations)]
    algebra = GradedAlgebra(even + odd)

    def embed(element: GcaElement) -> GcaElement:
        terms = {}
        for mono, coeff in element.terms.items():
            terms[tuple(mono) + (0,) * len(odd)] = coeff
        return algebra.element(terms)

    images = {name: algebra.zero() for name, _ in even}
    for (name, _), rel in zip(odd, c.relations):
        images[name] = embed(rel)
    differential = Derivation(algebra, images)
    return MinimalModel(
        algebra=algebra,
        even_names=tuple(n for n, _ in even),
        odd_names=tuple(n for n, _ in odd),
        differential=differential,
        presentation=c,
    )


def quadratic_part(m: MinimalModel) -> Derivation:
    """Word-length-2 component of the differential on every generator."""
    images = {
        name: m.differential.image_of(name).word_length_component(2)
        for name, _ in m.algebra.generators
    }
    return Derivation(m.algebra, images)


def derivation_square_check(m: MinimalModel) -> bool:
    """True iff d(d(g)) = 0 for every generator of the model."""
    return m.differential.squares_to_zero()
