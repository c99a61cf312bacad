"""Finitely presented graded associative algebras and their graded sizes.

The main objects are :class:`RingPresentation` (generators plus homogeneous
noncommutative relations, over exact rationals or integers) and the two
degreewise engines that measure the quotient algebra:

* over Q, the graded dimension of each degree component;
* over Z, the rank and the Smith invariant factors (torsion) of each degree
  component.

Both engines work degree by degree.  Writing ``A = T(G)/I`` and letting
``A_e`` denote the already-computed lower components, every element of
``A_d`` is a combination of symbols ``g * w`` with ``g`` a generator and
``w`` a basis element of ``A_{d - deg g}``; the kernel of that covering is
spanned by the rows ``r * w`` for the defining relations ``r`` (any ideal
element with a nonempty left factor falls into ``g * I`` and is already
zero in the lower quotient).  This keeps every matrix at the size of the
quotient, not of the free algebra, while computing exactly the same
dimensions as elimination over the full word basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Union

from . import linalg, series
from .series import PoincareSeries

Word = tuple[str, ...]
Scalar = Union[int, Fraction]

DEFAULT_WORD_BUDGET = 200_000


class BudgetExceededError(RuntimeError):
    """Raised when a degree would need more symbols/rows than the budget."""

    def __init__(self, degree: int, size: int, budget: int):
        super().__init__(
            f"degree {degree} needs {size} basis symbols/rows, over the budget of {budget}"
        )
        self.degree = degree
        self.size = size
        self.budget = budget


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected int or Fraction, got {type(value).__name__}")


class FreeGradedAlgebra:
    """Free associative algebra on named generators with positive degrees."""

    def __init__(self, generators: Iterable[tuple[str, int]]):
        gens = tuple((str(n), int(d)) for n, d in generators)
        names = [n for n, _ in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if any(d <= 0 for _, d in gens):
            raise ValueError("generator degrees must be positive")
        self.generators = gens
        self._degree = dict(gens)

    def degree_of_word(self, word: Word) -> int:
        return sum(self._degree[name] for name in word)

    def degree_of(self, name: str) -> int:
        return self._degree[name]

    def zero(self) -> "NcElement":
        return NcElement(self, {})

    def one(self) -> "NcElement":
        return NcElement(self, {(): Fraction(1)})

    def gen(self, name: str) -> "NcElement":
        if name not in self._degree:
            raise KeyError(f"unknown generator {name!r}")
        return NcElement(self, {(name,): Fraction(1)})

    def element(self, terms: Mapping[Word, Scalar]) -> "NcElement":
        return NcElement(self, {tuple(w): _as_fraction(c) for w, c in terms.items()})

    def same_generators(self, other: "FreeGradedAlgebra") -> bool:
        return self is other or self.generators == other.generators


class NcElement:
    """A noncommutative polynomial: word -> coefficient, zeros dropped."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FreeGradedAlgebra, terms: Mapping[Word, Fraction]):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if c != 0}

    def _check(self, other: "NcElement") -> None:
        if not self.algebra.same_generators(other.algebra):
            raise ValueError("mismatched generator sets")

    def __add__(self, other: "NcElement") -> "NcElement":
        self._check(other)
        terms = dict(self.terms)
        for w, c in other.terms.items():
            terms[w] = terms.get(w, Fraction(0)) + c
        return NcElement(self.algebra, terms)

    def __sub__(self, other: "NcElement") -> "NcElement":
        return self + (-other)

    def __neg__(self) -> "NcElement":
        return NcElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return NcElement(self.algebra, {w: v * c for w, v in self.terms.items()})
        self._check(other)
        acc: dict[Word, Fraction] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, Fraction(0)) + c1 * c2
        return NcElement(self.algebra, acc)

    def __rmul__(self, scalar: Scalar) -> "NcElement":
        return self * scalar

    def __pow__(self, n: int) -> "NcElement":
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NcElement)
            and self.algebra.same_generators(other.algebra)
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({self.algebra.degree_of_word(w) for w in self.terms}) <= 1

    def degree(self):
        degrees = {self.algebra.degree_of_word(w) for w in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError("element is not homogeneous")
        return degrees.pop()

    def content_normalized(self) -> "NcElement":
        """Scale to primitive integer coefficients with positive leading term."""
        if not self.terms:
            return self
        denominators = [c.denominator for c in self.terms.values()]
        lcm = 1
        for d in denominators:
            lcm = lcm * d // gcd(lcm, d)
        numerators = [abs(c.numerator * (lcm // c.denominator)) for c in self.terms.values()]
        g = 0
        for n in numerators:
            g = gcd(g, n)
        scale = Fraction(lcm, g if g else 1)
        lead = min(self.terms)
        if self.terms[lead] * scale < 0:
            scale = -scale
        return NcElement(self.algebra, {w: c * scale for w, c in self.terms.items()})

    def __repr__(self) -> str:
        return relation_string(self) if self.terms else "0"


def relation_string(element: NcElement) -> str:
    """Serialize as integer-coefficient terms "c*g1.g2", words in lex order."""
    norm = element.content_normalized()
    if not norm.terms:
        return "0"
    parts = []
    for word in sorted(norm.terms, key=lambda w: (norm.algebra.degree_of_word(w), w)):
        c = norm.terms[word]
        body = ".".join(word) if word else "1"
        text = f"{abs(int(c))}*{body}"
        if not parts:
            parts.append(text if c > 0 else f"-{text}")
        else:
            parts.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(parts)


class RingPresentation:
    """A finitely presented graded algebra over Q or Z.

    ``domain`` is "rational" or "integer"; integer presentations must have
    integral relation coefficients (they are never silently rescaled).
    """

    def __init__(
        self,
        algebra: FreeGradedAlgebra,
        relations: Iterable[NcElement],
        domain: str = "rational",
    ):
        if domain not in ("rational", "integer"):
            raise ValueError("domain must be 'rational' or 'integer'")
        rels = tuple(relations)
        for r in rels:
            if not algebra.same_generators(r.algebra):
                raise ValueError("relation over a different generator set")
            if r.is_zero():
                raise ValueError("zero relation")
            if not r.is_homogeneous():
                raise ValueError(f"inhomogeneous relation: {r!r}")
            if r.degree() < 1:
                raise ValueError("relations must have positive degree")
            if domain == "integer" and any(c.denominator != 1 for c in r.terms.values()):
                raise ValueError("integer presentation with non-integral coefficient")
        self.algebra = algebra
        self.relations = rels
        self.domain = domain
        self._engines: dict[tuple[str, int | None], object] = {}

    @property
    def generators(self) -> tuple[tuple[str, int], ...]:
        return self.algebra.generators

    def engine(self, budget: int | None = DEFAULT_WORD_BUDGET):
        key = (self.domain, budget)
        if key not in self._engines:
            if self.domain == "rational":
                self._engines[key] = RationalQuotient(self, budget)
            else:
                self._engines[key] = IntegerQuotient(self, budget)
        return self._engines[key]


# ---------------------------------------------------------------------------
# graded quotient engines
# ---------------------------------------------------------------------------


class _QuotientBase:
    def __init__(self, presentation: RingPresentation, budget: int | None):
        self.presentation = presentation
        self.budget = budget
        alg = presentation.algebra
        self._gen_names = [n for n, _ in alg.generators]
        self._gen_index = {n: i for i, n in enumerate(self._gen_names)}
        self._gen_degrees = [d for _, d in alg.generators]
        self._relations = [
            (r.degree(), list(r.terms.items())) for r in presentation.relations
        ]

    def _check_budget(self, degree: int, size: int) -> None:
        if self.budget is not None and size > self.budget:
            raise BudgetExceededError(degree, size, self.budget)


class RationalQuotient(_QuotientBase):
    """Graded dimensions of T(G)/I over Q, one exact RREF per degree."""

    def __init__(self, presentation: RingPresentation, budget: int | None = None):
        super().__init__(presentation, budget)
        self._dims: list[int] = [1]
        # per degree: offsets[g] of the symbol block (g, w); expansion of each
        # symbol over the chosen basis of that degree
        self._offsets: list[dict[int, int]] = [{}]
        self._expand: list[list[dict[int, Fraction]]] = [[]]

    def dimension(self, degree: int) -> int:
        if degree < 0:
            raise ValueError("negative degree")
        self._ensure(degree)
        return self._dims[degree]

    def dimensions(self, max_degree: int) -> PoincareSeries:
        self._ensure(max_degree)
        return PoincareSeries(tuple(self._dims[: max_degree + 1]))

    def _ensure(self, degree: int) -> None:
        while len(self._dims) <= degree:
            self._build(len(self._dims))

    def _leftmul(self, gen_index: int, vec: dict[int, Fraction], src_degree: int):
        """Image of a basis vector of A_src under left multiplication."""
        target = src_degree + self._gen_degrees[gen_index]
        offset = self._offsets[target][gen_index]
        out: dict[int, Fraction] = {}
        for w, c in vec.items():
            for b, v in self._expand[target][offset + w].items():
                nv = out.get(b, Fraction(0)) + c * v
                if nv:
                    out[b] = nv
                else:
                    out.pop(b, None)
        return out

    def _build(self, degree: int) -> None:
        offsets: dict[int, int] = {}
        nsym = 0
        for g, d in enumerate(self._gen_degrees):
            lower = degree - d
            if lower >= 0 and self._dims[lower] > 0:
                offsets[g] = nsym
                nsym += self._dims[lower]
        self._check_budget(degree, nsym)

        rref = linalg.FractionRREF()
        nrows = 0
        for rel_degree, terms in self._relations:
            lower = degree - rel_degree
            if lower < 0 or self._dims[lower] == 0:
                continue
            for w in range(self._dims[lower]):
                row: dict[int, Fraction] = {}
                for word, coeff in terms:
                    vec = {w: coeff}
                    deg = lower
                    for name in reversed(word[1:]):
                        g = self._gen_index[name]
                        vec = self._leftmul(g, vec, deg)
                        deg += self._gen_degrees[g]
                        if not vec:
                            break
                    if not vec:
                        continue
                    g0 = self._gen_index[word[0]]
                    base = offsets[g0]
                    for pos, c in vec.items():
                        col = base + pos
                        nv = row.get(col, Fraction(0)) + c
                        if nv:
                            row[col] = nv
                        else:
                            row.pop(col, None)
                nrows += 1
                self._check_budget(degree, nrows)
                rref.add_row(row)

        pivots = rref.pivot_columns
        basis_pos: dict[int, int] = {}
        for sym in range(nsym):
            if sym not in pivots:
                basis_pos[sym] = len(basis_pos)
        expand: list[dict[int, Fraction]] = []
        for sym in range(nsym):
            raw = rref.expansion(sym)
            expand.append({basis_pos[c]: v for c, v in raw.items()})
        self._dims.append(len(basis_pos))
        self._offsets.append(offsets)
        self._expand.append(expand)


@dataclass(frozen=True)
class SmithEntry:
    """Degree component of an integer quotient: free rank + invariant factors."""

    degree: int
    rank: int
    torsion: tuple[int, ...]


@dataclass(frozen=True)
class GradedSmithReport:
    entries: tuple[SmithEntry, ...]

    def ranks(self) -> tuple[int, ...]:
        return tuple(e.rank for e in self.entries)

    def torsion_lists(self) -> tuple[tuple[int, ...], ...]:
        return tuple(e.torsion for e in self.entries)

    def torsion_free(self) -> bool:
        return all(not e.torsion for e in self.entries)


class IntegerQuotient(_QuotientBase):
    """Ranks and torsion of T(G)/I over Z, degreewise Smith normal form."""

    def __init__(self, presentation: RingPresentation, budget: int | None = None):
        if presentation.domain != "integer":
            raise ValueError("integer engine requires an integer presentation")
        super().__init__(presentation, budget)
        self._int_relations = [
            (deg, [(w, int(c)) for w, c in terms])
            for deg, terms in self._relations
        ]
        # per degree: invariants of the chosen generators (0 free, s>=2 torsion),
        # symbol block offsets, expansion of each symbol over the generators
        self._invariants: list[list[int]] = [[0]]
        self._offsets: list[dict[int, int]] = [{}]
        self._expand: list[list[dict[int, int]]] = [[]]

    def entry(self, degree: int) -> SmithEntry:
        if degree < 0:
            raise ValueError("negative degree")
        self._ensure(degree)
        inv = self._invariants[degree]
        return SmithEntry(
            degree=degree,
            rank=sum(1 for s in inv if s == 0),
            torsion=tuple(s for s in inv if s > 1),
        )

    def report(self, max_degree: int) -> GradedSmithReport:
        self._ensure(max_degree)
        return GradedSmithReport(tuple(self.entry(d) for d in range(max_degree + 1)))

    def _ensure(self, degree: int) -> None:
        while len(self._invariants) <= degree:
            self._build(len(self._invariants))

    def _leftmul(self, gen_index: int, vec: dict[int, int], src_degree: int):
        target = src_degree + self._gen_degrees[gen_index]
        offset = self._offsets[target][gen_index]
        out: dict[int, int] = {}
        for w, c in vec.items():
            for b, v in self._expand[target][offset + w].items():
                nv = out.get(b, 0) + c * v
                if nv:
                    out[b] = nv
                else:
                    out.pop(b, None)
        return self._normalize(out, target)

    def _normalize(self, vec: dict[int, int], degree: int) -> dict[int, int]:
        inv = self._invariants[degree]
        out: dict[int, int] = {}
        for g, v in vec.items():
            s = inv[g]
            if s > 1:
                v %= s
            if v:
                out[g] = v
        return out

    def _build(self, degree: int) -> None:
        offsets: dict[int, int] = {}
        nsym = 0
        for g, d in enumerate(self._gen_degrees):
            lower = degree - d
            if lower >= 0 and self._invariants[lower]:
                offsets[g] = nsym
                nsym += len(self._invariants[lower])
        self._check_budget(degree, nsym)

        rows: list[dict[int, int]] = []
        # torsion of the lower components becomes diagonal presentation rows
        for g, base in offsets.items():
            lower = degree - self._gen_degrees[g]
            for w, s in enumerate(self._invariants[lower]):
                if s > 1:
                    rows.append({base + w: s})
        for rel_degree, terms in self._int_relations:
            lower = degree - rel_degree
            if lower < 0 or not self._invariants[lower]:
                continue
            for w in range(len(self._invariants[lower])):
                row: dict[int, int] = {}
                for word, coeff in terms:
                    vec = {w: coeff}
                    deg = lower
                    for name in reversed(word[1:]):
                        g = self._gen_index[name]
                        vec = self._leftmul(g, vec, deg)
                        deg += self._gen_degrees[g]
                        if not vec:
                            break
                    if not vec:
                        continue
                    g0 = self._gen_index[word[0]]
                    base = offsets[g0]
                    for pos, c in vec.items():
                        col = base + pos
                        nv = row.get(col, 0) + c
                        if nv:
                            row[col] = nv
                        else:
                            row.pop(col, None)
                if row:
                    rows.append(row)
        self._check_budget(degree, len(rows))

        result = linalg.coker_normalize(rows, nsym)
        self._invariants.append(result.invariants)
        self._offsets.append(offsets)
        self._expand.append(result.expansions)


# ---------------------------------------------------------------------------
# the envelop operations
# ---------------------------------------------------------------------------


def uea_presentation(L) -> RingPresentation:
    """Universal enveloping presentation of a graded Lie algebra.

    One relation per unordered basis pair (including x = x for odd x):
    ``x y - (-1)^{deg x deg y} y x - [x, y]``, content-normalized.
    """
    from .homotopy_lie import graded_lie_axioms_check

    if not graded_lie_axioms_check(L):
        raise ValueError("graded Lie axiom check failed")
    algebra = FreeGradedAlgebra([(b.name, b.degree) for b in L.basis])
    relations = []
    for i, x in enumerate(L.basis):
        for j in range(i, len(L.basis)):
            y = L.basis[j]
            if i == j and x.degree % 2 == 0:
                continue
            sign = -1 if (x.degree * y.degree) % 2 else 1
            rel = algebra.gen(x.name) * algebra.gen(y.name) - sign * (
                algebra.gen(y.name) * algebra.gen(x.name)
            )
            for z, c in L.bracket(x.name, y.name).items():
                rel = rel - c * algebra.gen(z)
            if rel.is_zero():
                continue
            relations.append(rel.content_normalized())
    return RingPresentation(algebra, relations, domain="rational")


def graded_dimension(
    p: RingPresentation, d: int, budget: int | None = DEFAULT_WORD_BUDGET
) -> int:
    """Dimension over Q of the degree-d component of the quotient algebra."""
    if p.domain != "rational":
        raise ValueError("graded_dimension expects a rational presentation")
    return p.engine(budget).dimension(d)


def graded_dimensions(
    p: RingPresentation, max_degree: int, budget: int | None = DEFAULT_WORD_BUDGET
) -> PoincareSeries:
    if p.domain != "rational":
        raise ValueError("graded_dimensions expects a rational presentation")
    return p.engine(budget).dimensions(max_degree)


def pbw_series(L, max_degree: int) -> PoincareSeries:
    """Graded dimensions of the enveloping algebra from the PBW basis count."""
    odd = [b.degree for b in L.basis if b.degree % 2 == 1]
    even = [b.degree for b in L.basis if b.degree % 2 == 0]
    return PoincareSeries(tuple(series.pbw_coefficients(odd, even, max_degree)))


def graded_smith(
    p: RingPresentation, d: int, budget: int | None = DEFAULT_WORD_BUDGET
) -> SmithEntry:
    """Rank and invariant factors of the degree-d component over Z."""
    if p.domain != "integer":
        raise ValueError("graded_smith expects an integer presentation")
    return p.engine(budget).entry(d)


def graded_smith_report(
    p: RingPresentation, max_degree: int, budget: int | None = DEFAULT_WORD_BUDGET
) -> GradedSmithReport:
    if p.domain != "integer":
        raise ValueError("graded_smith_report expects an integer presentation")
    return p.engine(budget).report(max_degree)


def torsion_free_check(
    p: RingPresentation, max_degree: int, budget: int | None = DEFAULT_WORD_BUDGET
) -> bool:
    """True iff no degree component up to max_degree has torsion."""
    return graded_smith_report(p, max_degree, budget).torsion_free()


def series_equal(a: PoincareSeries, b: PoincareSeries, max_degree: int) -> bool:
    if a.max_degree < max_degree or b.max_degree < max_degree:
        raise ValueError("insufficient truncation for the requested comparison")
    return a.prefix(max_degree) == b.prefix(max_degree)
