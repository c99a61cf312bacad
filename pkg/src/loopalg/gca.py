"""Exact graded-commutative polynomial algebra with Koszul signs.

Elements live in a free graded-commutative algebra on a fixed, ordered list
of generators.  Even-degree generators commute and carry arbitrary
exponents; odd-degree generators square to zero and anticommute among
themselves.  Coefficients are exact rationals (`fractions.Fraction`); no
floating point appears anywhere in this package.

A monomial is stored as an exponent tuple over the generator list.  The
declaration order of the generators fixes the canonical monomial form, so
every operation is deterministic and elements can be compared literally.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Coefficient = Fraction
Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


def koszul_sign(permutation: Sequence[int], degrees: Sequence[int]) -> int:
    """Sign ``eps`` with ``v_{s(1)} ^ ... ^ v_{s(k)} = eps * v_1 ^ ... ^ v_k``.

    ``permutation`` lists ``s(1), ..., s(k)`` as 0-based indices and
    ``degrees[i]`` is the degree of the letter ``v_{i+1}``.  Each transposition
    of two odd-degree letters contributes a factor -1; transpositions
    involving an even letter contribute +1.
    """
    if len(permutation) != len(degrees):
        raise ValueError("permutation and degree sequence have different lengths")
    seq = list(permutation)
    if sorted(seq) != list(range(len(seq))):
        raise ValueError("argument is not a permutation of 0..k-1")
    sign = 1
    for sweep in range(len(seq)):
        for j in range(len(seq) - 1 - sweep):
            if seq[j] > seq[j + 1]:
                if degrees[seq[j]] % 2 == 1 and degrees[seq[j + 1]] % 2 == 1:
                    sign = -sign
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
    return sign


class GradedAlgebra:
    """A free graded-commutative algebra on named generators.

    Generators are ``(name, degree)`` pairs with positive integer degrees;
    names must be unique.  The instance only carries the generator data --
    elements are :class:`GcaElement` objects pointing back at it.
    """

    __slots__ = ("_gens", "_index", "_degrees", "_odd")

    def __init__(self, generators: Iterable[tuple[str, int]]):
        gens = tuple((str(name), int(degree)) for name, degree in generators)
        names = [g[0] for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        for name, degree in gens:
            if degree <= 0:
                raise ValueError(f"generator {name!r} has non-positive degree {degree}")
        self._gens = gens
        self._index = {name: i for i, (name, _) in enumerate(gens)}
        self._degrees = tuple(d for _, d in gens)
        self._odd = tuple(i for i, d in enumerate(self._degrees) if d % 2 == 1)

    @property
    def generators(self) -> tuple[tuple[str, int], ...]:
        return self._gens

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self._gens)

    def __len__(self) -> int:
        return len(self._gens)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def degree_of(self, name: str) -> int:
        return self._degrees[self.index(name)]

    def is_odd(self, i: int) -> bool:
        return self._degrees[i] % 2 == 1

    def same_generators(self, other: "GradedAlgebra") -> bool:
        return self is other or self._gens == other._gens

    # -- element constructors ------------------------------------------------

    def zero(self) -> "GcaElement":
        return GcaElement(self, {})

    def one(self) -> "GcaElement":
        return GcaElement(self, {(0,) * len(self._gens): Fraction(1)})

    def gen(self, name: str) -> "GcaElement":
        mono = [0] * len(self._gens)
        mono[self.index(name)] = 1
        return GcaElement(self, {tuple(mono): Fraction(1)})

    def element(self, terms: Mapping[Monomial, Scalar]) -> "GcaElement":
        return GcaElement(self, {tuple(m): _as_fraction(c) for m, c in terms.items()})

    def monomial(self, letters: Sequence[str]) -> "GcaElement":
        """Product of the named generators, in the given order (with sign)."""
        out = self.one()
        for name in letters:
            out = out * self.gen(name)
        return out

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, d in zip(mono, self._degrees))

    def monomials_of_degree(self, degree: int) -> list[Monomial]:
        """All canonical monomials of the given total degree (lex order)."""
        out: list[Monomial] = []

        def extend(i: int, remaining: int, prefix: list[int]) -> None:
            if i == len(self._gens):
                if remaining == 0:
                    out.append(tuple(prefix))
                return
            d = self._degrees[i]
            cap = 1 if d % 2 == 1 else remaining // d
            for e in range(min(cap, remaining // d) + 1):
                prefix.append(e)
                extend(i + 1, remaining - e * d, prefix)
                prefix.pop()

        if degree >= 0:
            extend(0, degree, [])
        return out

    def _mul_monomials(self, m1: Monomial, m2: Monomial):
        """Return ``(sign, product)`` or ``None`` when an odd square occurs."""
        sign = 1
        for j in self._odd:
            if m2[j]:
                if m1[j]:
                    return None
                crossings = 0
                for i in self._odd:
                    if i > j and m1[i]:
                        crossings += 1
                if crossings % 2:
                    sign = -sign
        return sign, tuple(a + b for a, b in zip(m1, m2))


class GcaElement:
    """An element of a :class:`GradedAlgebra`: a monomial-to-coefficient map.

    Immutable by convention; all operations return fresh elements.  Zero
    coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, Fraction]):
        self.algebra = algebra
        self.terms = {m: c for m, c in terms.items() if c != 0}

    # -- ring structure -------------------------------------------------------

    def _check_compatible(self, other: "GcaElement") -> None:
        if not self.algebra.same_generators(other.algebra):
            raise ValueError("mismatched generator sets")

    def __add__(self, other: "GcaElement") -> "GcaElement":
        self._check_compatible(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return GcaElement(self.algebra, terms)

    def __sub__(self, other: "GcaElement") -> "GcaElement":
        return self + (-other)

    def __neg__(self) -> "GcaElement":
        return GcaElement(self.algebra, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return GcaElement(self.algebra, {m: v * c for m, v in self.terms.items()})
        self._check_compatible(other)
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                hit = self.algebra._mul_monomials(m1, m2)
                if hit is None:
                    continue
                sign, mono = hit
                acc[mono] = acc.get(mono, Fraction(0)) + sign * c1 * c2
        return GcaElement(self.algebra, acc)

    def __rmul__(self, scalar: Scalar) -> "GcaElement":
        return self * scalar

    def __pow__(self, exponent: int) -> "GcaElement":
        if exponent < 0:
            raise ValueError("negative powers are not defined here")
        out = self.algebra.one()
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GcaElement)
            and self.algebra.same_generators(other.algebra)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- grading ---------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        degrees = {self.algebra.monomial_degree(m) for m in self.terms}
        return len(degrees) <= 1

    def degree(self):
        """Degree of a homogeneous element; None for zero."""
        degrees = {self.algebra.monomial_degree(m) for m in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError("element is not homogeneous")
        return degrees.pop()

    def homogeneous_component(self, degree: int) -> "GcaElement":
        return GcaElement(
            self.algebra,
            {m: c for m, c in self.terms.items() if self.algebra.monomial_degree(m) == degree},
        )

    def word_length_component(self, length: int) -> "GcaElement":
        return GcaElement(
            self.algebra, {m: c for m, c in self.terms.items() if sum(m) == length}
        )

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def letters(self, mono: Monomial) -> list[int]:
        """Expand a monomial into its generator indices, canonical order."""
        out: list[int] = []
        for i, e in enumerate(mono):
            out.extend([i] * e)
        return out

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        names = self.algebra.names
        parts = []
        for mono in sorted(self.terms):
            c = self.terms[mono]
            factors = [
                f"{names[i]}^{e}" if e > 1 else names[i] for i, e in enumerate(mono) if e
            ]
            body = "*".join(factors) if factors else "1"
            parts.append(f"({c})*{body}")
        return " + ".join(parts)


def gca_multiply(p: GcaElement, q: GcaElement) -> GcaElement:
    """Product in the graded-commutative algebra (canonical form, exact)."""
    return p * q


class Derivation:
    """A degree +1 derivation, determined by its images on generators.

    The image of a degree-``k`` generator must be homogeneous of degree
    ``k + 1`` (the zero element is allowed); the extension to products follows
    the graded Leibniz rule.
    """

    degree_shift = 1

    def __init__(self, algebra: GradedAlgebra, images: Mapping[str, GcaElement]):
        self.algebra = algebra
        table: list[GcaElement] = [algebra.zero() for _ in range(len(algebra))]
        for name, image in images.items():
            i = algebra.index(name)
            if not algebra.same_generators(image.algebra):
                raise ValueError("mismatched generator sets")
            if not image.is_zero():
                if not image.is_homogeneous():
                    raise ValueError(f"image of {name!r} is not homogeneous")
                expected = algebra.generators[i][1] + self.degree_shift
                if image.degree() != expected:
                    raise ValueError(
                        f"image of {name!r} has degree {image.degree()}, expected {expected}"
                    )
            table[i] = image
        self._images = table

    def image_of(self, name: str) -> GcaElement:
        return self._images[self.algebra.index(name)]

    def images(self) -> dict[str, GcaElement]:
        return {name: self._images[i] for i, (name, _) in enumerate(self.algebra.generators)}

    def __call__(self, element: GcaElement) -> GcaElement:
        if not self.algebra.same_generators(element.algebra):
            raise ValueError("unknown generator: element lives over a different algebra")
        alg = self.algebra
        result = alg.zero()
        degrees = [d for _, d in alg.generators]
        for mono, coeff in element.terms.items():
            letters = element.letters(mono)
            if all(self._images[g].is_zero() for g in letters):
                continue
            prefix_degree = 0
            for pos, g in enumerate(letters):
                image = self._images[g]
                if not image.is_zero():
                    sign = -1 if prefix_degree % 2 else 1
                    left = _monomial_from_letters(alg, letters[:pos])
                    right = _monomial_from_letters(alg, letters[pos + 1 :])
                    result = result + left * image * right * (sign * coeff)
                prefix_degree += degrees[g]
        return result

    def squares_to_zero(self) -> bool:
        return all(self(self._images[i]).is_zero() for i in range(len(self.algebra)))


def _monomial_from_letters(alg: GradedAlgebra, letters: Sequence[int]) -> GcaElement:
    mono = [0] * len(alg)
    for g in letters:
        mono[g] += 1
    return GcaElement(alg, {tuple(mono): Fraction(1)})


def derivation_apply(d: Derivation, e: GcaElement) -> GcaElement:
    """Apply a derivation to an element (graded Leibniz extension)."""
    return d(e)
