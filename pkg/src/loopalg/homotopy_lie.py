"""The homotopy Lie algebra dual to a minimal model.

The basis is dual to the model's generators with degrees shifted down by
one.  Structure constants come from the quadratic part of the differential
through the pairing

    < v_1 ^ ... ^ v_k ; s x_1, ..., s x_k >
        = sum over permutations s of eps_s * prod < v_{s(i)} ; s x_i >

where the dual basis is normalized so that a generator pairs to +1 against
its own dual (this fixes the signs of all structure constants; the
catalog's expected bracket tables pin them).  The bracket is then read off
from

    < v ; s [x, y] > = (-1)^{deg y + 1} < d1 v ; s x, s y >.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Mapping, Sequence

from .gca import GcaElement, koszul_sign
from .minimal_model import MinimalModel, quadratic_part


@dataclass(frozen=True)
class LieBasisElement:
    name: str
    degree: int
    dual_to: str


Bracket = dict[str, Fraction]


class HomotopyLieAlgebra:
    """A graded vector space with sparsely stored brackets.

    ``brackets[(x, y)]`` maps basis names to coefficients; a missing pair
    means the bracket vanishes.
    """

    def __init__(
        self,
        basis: Sequence[LieBasisElement],
        brackets: Mapping[tuple[str, str], Bracket],
    ):
        self.basis = tuple(basis)
        self._degree = {b.name: b.degree for b in self.basis}
        if len(self._degree) != len(self.basis):
            raise ValueError("basis names must be unique")
        cleaned: dict[tuple[str, str], Bracket] = {}
        for (x, y), combo in brackets.items():
            if x not in self._degree or y not in self._degree:
                raise ValueError(f"bracket on unknown basis elements ({x}, {y})")
            kept = {z: Fraction(c) for z, c in combo.items() if c}
            for z in kept:
                if z not in self._degree:
                    raise ValueError(f"bracket value on unknown basis element {z}")
            if kept:
                cleaned[(x, y)] = kept
        self.brackets = cleaned

    def degree(self, name: str) -> int:
        return self._degree[name]

    def bracket(self, x: str, y: str) -> Bracket:
        return dict(self.brackets.get((x, y), {}))

    def bracket_on_combination(self, x: str, combo: Bracket) -> Bracket:
        out: Bracket = {}
        for z, c in combo.items():
            for t, v in self.bracket(x, z).items():
                nv = out.get(t, Fraction(0)) + c * v
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out


def _default_dual_name(name: str) -> str:
    if name.startswith("u"):
        return "a" + name[1:]
    if name.startswith("v"):
        return "b" + name[1:]
    return name + "'"


def dual_basis(
    m: MinimalModel, names: Mapping[str, str] | None = None
) -> tuple[LieBasisElement, ...]:
    """One basis element per model generator, degree shifted down by one."""
    out = []
    for gen_name, degree in m.algebra.generators:
        dual = names[gen_name] if names else _default_dual_name(gen_name)
        out.append(LieBasisElement(name=dual, degree=degree - 1, dual_to=gen_name))
    return tuple(out)


def pairing(w: GcaElement, args: Sequence[LieBasisElement]) -> Fraction:
    """Evaluate a word-length-k element against k suspended basis elements."""
    k = len(args)
    total = Fraction(0)
    algebra = w.algebra
    degrees_of = [d for _, d in algebra.generators]
    names_of = algebra.names
    for mono, coeff in w.terms.items():
        letters = w.letters(mono)
        if len(letters) != k:
            raise ValueError(
                f"length mismatch: monomial has word length {len(letters)}, got {k} arguments"
            )
        letter_degrees = [degrees_of[g] for g in letters]
        letter_names = [names_of[g] for g in letters]
        acc = 0
        for sigma in permutations(range(k)):
            if all(letter_names[sigma[i]] == args[i].dual_to for i in range(k)):
                acc += koszul_sign(sigma, letter_degrees)
        if acc:
            total += coeff * acc
    return total


def brackets_from_d1(
    m: MinimalModel, dual_names: Mapping[str, str] | None = None
) -> HomotopyLieAlgebra:
    """Lie algebra on the dual basis with brackets read off the quadratic part.

    Brackets not forced by d1 are zero.
    """
    basis = dual_basis(m, dual_names)
    dual_of = {b.dual_to: b.name for b in basis}
    d1 = quadratic_part(m)
    images = {name: d1.image_of(name) for name, _ in m.algebra.generators}
    brackets: dict[tuple[str, str], Bracket] = {}
    for x in basis:
        for y in basis:
            target = x.degree + y.degree + 1
            combo: Bracket = {}
            for gen_name, gen_degree in m.algebra.generators:
                if gen_degree != target or images[gen_name].is_zero():
                    continue
                value = pairing(images[gen_name], [x, y])
                if value:
                    sign = 1 if (y.degree + 1) % 2 == 0 else -1
                    combo[dual_of[gen_name]] = sign * value
            if combo:
                brackets[(x.name, y.name)] = combo
    return HomotopyLieAlgebra(basis, brackets)


def graded_lie_axioms_check(L: HomotopyLieAlgebra) -> bool:
    """Graded antisymmetry, degree additivity and the graded Jacobi identity."""
    names = [b.name for b in L.basis]
    for x in names:
        for y in names:
            dx, dy = L.degree(x), L.degree(y)
            xy = L.bracket(x, y)
            for z, c in xy.items():
                if L.degree(z) != dx + dy:
                    return False
            sign = -1 if (dx * dy) % 2 == 0 else 1
            yx = L.bracket(y, x)
            flipped = {z: sign * c for z, c in yx.items() if c}
            if xy != flipped:
                return False
    # Jacobi in Leibniz form: [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    for x in names:
        for y in names:
            for z in names:
                left = L.bracket_on_combination(x, L.bracket(y, z))
                right: Bracket = {}
                for t, c in L.bracket(x, y).items():
                    for s, v in L.bracket(t, z).items():
                        nv = right.get(s, Fraction(0)) + c * v
                        if nv:
                            right[s] = nv
                        else:
                            right.pop(s, None)
                sign = -1 if (L.degree(x) * L.degree(y)) % 2 else 1
                for t, c in L.bracket_on_combination(y, L.bracket(x, z)).items():
                    nv = right.get(t, Fraction(0)) + sign * c
                    if nv:
                        right[t] = nv
                    else:
                        right.pop(t, None)
                if left != right:
                    return False
    return True
