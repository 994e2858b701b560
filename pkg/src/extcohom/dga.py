"""Exterior differential graded algebras on degree-1 generators.

A model is a finite list of named degree-1 generators together with a
differential assignment per generator whose image is homogeneous of degree 2;
the differential extends to the whole exterior algebra by the graded Leibniz
rule and must square to zero.  Elements are exact-rational linear combinations
of strictly increasing wedge monomials, so equality is structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .errors import (
    DifferentialSquareViolation,
    NonHomogeneousDifferential,
    NotHomogeneous,
    ValidationError,
)
from .linalg import Vector, vector

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class Generator:
    name: str
    index: int
    degree: int = 1


def _merge_monomials(m1: Monomial, m2: Monomial) -> Optional[tuple[int, Monomial]]:
    """Merge two strictly increasing index tuples, tracking the Koszul sign.

    Returns (sign, merged) or None when an index repeats (g ^ g = 0 for
    degree-1 generators).  The sign is the parity of the permutation that
    sorts the concatenation: each element taken from m2 hops over the
    elements of m1 not yet consumed.
    """
    i, j = 0, 0
    inversions = 0
    merged: list[int] = []
    while i < len(m1) and j < len(m2):
        a, b = m1[i], m2[j]
        if a == b:
            return None
        if a < b:
            merged.append(a)
            i += 1
        else:
            merged.append(b)
            inversions += len(m1) - i
            j += 1
    merged.extend(m1[i:])
    merged.extend(m2[j:])
    return (-1 if inversions % 2 else 1, tuple(merged))


class Element:
    """A finite linear combination of wedge monomials with Fraction coefficients.

    Monomials are strictly increasing tuples of generator indices; the empty
    tuple is the unit.  Zero coefficients are never stored, so two elements
    are equal exactly when their term maps are equal.  Instances are immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Optional[Mapping[Monomial, object]] = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if any(mono[i] >= mono[i + 1] for i in range(len(mono) - 1)):
                    raise ValueError(f"monomial {mono} is not strictly increasing")
                if any(not isinstance(i, int) or i < 0 for i in mono):
                    raise ValueError(f"monomial {mono} has invalid generator indices")
                c = Fraction(coeff)
                if c != 0:
                    clean[mono] = clean.get(mono, Fraction(0)) + c
                    if clean[mono] == 0:
                        del clean[mono]
        object.__setattr__(self, "_terms", clean)

    @staticmethod
    def zero() -> "Element":
        return Element()

    @staticmethod
    def unit(coeff=1) -> "Element":
        return Element({(): coeff})

    @staticmethod
    def monomial(indices: Iterable[int], coeff=1) -> "Element":
        return Element({tuple(indices): coeff})

    @staticmethod
    def from_word(indices: Iterable[int], coeff=1) -> "Element":
        """Build from a possibly unsorted word of indices, absorbing the sort
        sign into the coefficient; a repeated index gives zero."""
        result = Element.unit(coeff)
        for i in indices:
            result = wedge(result, Element.monomial((i,)))
        return result

    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> tuple[int, ...]:
        return tuple(sorted({len(m) for m in self._terms}))

    def degree(self) -> Optional[int]:
        """The common degree of all terms; None for the zero element.
        Raises NotHomogeneous on a mixed element."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise NotHomogeneous(f"element mixes degrees {list(degs)}")
        return degs[0]

    def is_homogeneous(self, k: Optional[int] = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if k is None:
            return len(degs) == 1
        return degs == (k,)

    def homogeneous_part(self, k: int) -> "Element":
        return Element({m: c for m, c in self._terms.items() if len(m) == k})

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return Element(out)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element({m: -c for m, c in self._terms.items()})

    def __mul__(self, scalar) -> "Element":
        if isinstance(scalar, Element):
            return NotImplemented
        s = Fraction(scalar)
        return Element({m: c * s for m, c in self._terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "Element") -> "Element":
        """a ^ b is the wedge product, mirroring the expression syntax."""
        if not isinstance(other, Element):
            return NotImplemented
        return wedge(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __repr__(self) -> str:
        if self.is_zero:
            return "Element(0)"
        parts = []
        for mono in sorted(self._terms, key=lambda m: (len(m), m)):
            word = "^".join(f"g{i}" for i in mono) if mono else "1"
            parts.append(f"{self._terms[mono]}*{word}")
        return f"Element({' + '.join(parts)})"


def wedge(a: Element, b: Element) -> Element:
    """Bilinear wedge product with Koszul signs from monomial merges."""
    out: dict[Monomial, Fraction] = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            merged = _merge_monomials(m1, m2)
            if merged is None:
                continue
            sign, mono = merged
            out[mono] = out.get(mono, Fraction(0)) + sign * c1 * c2
    return Element(out)


class DGA:
    """A finite exterior algebra with a degree +1 differential.

    The differential is given on generators only (degree-2 images, default
    zero) and extended by the graded Leibniz rule; d(d(g)) = 0 is checked for
    every generator at construction.  Instances are immutable once built.
    """

    def __init__(self, names: Sequence[str], differentials: Optional[Mapping[str, Element]] = None):
        names = tuple(names)
        seen = set()
        for name in names:
            if not name or not isinstance(name, str):
                raise ValidationError(f"invalid generator name {name!r}")
            if name in seen:
                raise ValidationError(f"duplicate generator {name!r}", generator=name)
            seen.add(name)
        self._generators = tuple(Generator(name, i) for i, name in enumerate(names))
        self._index = {name: i for i, name in enumerate(names)}
        diff = [Element.zero()] * len(names)
        for name, image in (differentials or {}).items():
            if name not in self._index:
                raise ValidationError(f"differential assigned to unknown generator {name!r}", generator=name)
            diff[self._index[name]] = image
        self._diff = tuple(diff)
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}
        self._basis_pos_cache: dict[int, dict[Monomial, int]] = {}
        self.validate()

    @property
    def generators(self) -> tuple[Generator, ...]:
        return self._generators

    @property
    def ngens(self) -> int:
        return len(self._generators)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self._generators)

    def index_of(self, name: str) -> int:
        if name not in self._index:
            raise KeyError(f"unknown generator {name!r}")
        return self._index[name]

    def gen(self, name: str) -> Element:
        """The generator with this name, as a degree-1 element."""
        return Element.monomial((self.index_of(name),))

    def generator_differential(self, index: int) -> Element:
        return self._diff[index]

    def validate(self) -> None:
        """Check the differential assignment; raise on the first violation.

        Images must use known generators, be homogeneous of degree 2, and the
        Leibniz extension must satisfy d(d(g)) = 0 for every generator.
        """
        n = self.ngens
        for g in self._generators:
            image = self._diff[g.index]
            for mono in image.terms():
                if any(i >= n for i in mono):
                    raise ValidationError(
                        f"d {g.name} uses an undeclared generator index", generator=g.name
                    )
            if not image.is_homogeneous(2):
                raise NonHomogeneousDifferential(
                    f"d {g.name} is not homogeneous of degree 2 (degrees {list(image.degrees())})",
                    generator=g.name,
                )
        for g in self._generators:
            dd = self.differential(self._diff[g.index])
            if not dd.is_zero:
                raise DifferentialSquareViolation(
                    f"d(d {g.name}) = {dd!r} is nonzero", generator=g.name
                )

    def differential(self, a: Element) -> Element:
        """Extend d to any element by linearity and the graded Leibniz rule.

        On a monomial g_1^...^g_k this is the alternating sum of terms with
        one factor replaced by its differential; every factor has degree 1,
        so the j-th term carries sign (-1)**(j-1).
        """
        n = self.ngens
        total = Element.zero()
        for mono, coeff in a.items():
            if any(i >= n for i in mono):
                raise ValueError(f"element uses generator index out of range for this algebra: {mono}")
            for j, idx in enumerate(mono):
                image = self._diff[idx]
                if image.is_zero:
                    continue
                sign = -1 if j % 2 else 1
                term = wedge(
                    Element.monomial(mono[:j], coeff * sign),
                    wedge(image, Element.monomial(mono[j + 1 :])),
                )
                total = total + term
        return total

    def basis_monomials(self, k: int) -> tuple[Monomial, ...]:
        """All strictly increasing k-subsets of the generator indices, in
        lexicographic order.  This order fixes the coordinates used by the
        cohomology module.  Empty outside 0 <= k <= ngens."""
        if k < 0:
            return ()
        if k not in self._basis_cache:
            self._basis_cache[k] = tuple(itertools.combinations(range(self.ngens), k))
        return self._basis_cache[k]

    def _basis_positions(self, k: int) -> dict[Monomial, int]:
        if k not in self._basis_pos_cache:
            self._basis_pos_cache[k] = {m: i for i, m in enumerate(self.basis_monomials(k))}
        return self._basis_pos_cache[k]

    def dim(self, k: int) -> int:
        return len(self.basis_monomials(k))

    def to_vector(self, a: Element, k: int) -> Vector:
        """Coordinates of a degree-k element in the lexicographic monomial
        basis.  Raises NotHomogeneous when a term of another degree appears."""
        positions = self._basis_positions(k)
        coords = [Fraction(0)] * len(positions)
        for mono, coeff in a.items():
            if len(mono) != k:
                raise NotHomogeneous(
                    f"expected a homogeneous element of degree {k}, found a degree-{len(mono)} term"
                )
            coords[positions[mono]] = coeff
        return tuple(coords)

    def from_vector(self, v: Sequence, k: int) -> Element:
        basis = self.basis_monomials(k)
        w = vector(v)
        if len(w) != len(basis):
            raise ValueError(f"expected {len(basis)} coordinates for degree {k}, got {len(w)}")
        return Element({m: c for m, c in zip(basis, w) if c != 0})

    def format_element(self, a: Element) -> str:
        return format_element(self, a)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DGA):
            return NotImplemented
        return self.names == other.names and self._diff == other._diff

    def __repr__(self) -> str:
        return f"DGA(generators={list(self.names)})"


def format_element(dga: DGA, a: Element) -> str:
    """Render an element in the expression grammar, e.g. '3/2 x^y - y^w'.

    Terms are ordered by degree then lexicographically; unit coefficients are
    omitted on nonempty monomials.  Printing then parsing is the identity.
    """
    if a.is_zero:
        return "0"
    parts: list[str] = []
    for mono in sorted(a.terms(), key=lambda m: (len(m), m)):
        coeff = a.coefficient(mono)
        mag = -coeff if coeff < 0 else coeff
        word = "^".join(dga.generators[i].name for i in mono)
        if not word:
            body = str(mag)
        elif mag == 1:
            body = word
        else:
            body = f"{mag} {word}"
        if not parts:
            parts.append(f"-{body}" if coeff < 0 else body)
        else:
            parts.append(f"- {body}" if coeff < 0 else f"+ {body}")
    return " ".join(parts)


def heisenberg() -> DGA:
    """The degree-1 minimal model with generators x, y, w and d w = x^y."""
    return DGA(("x", "y", "w"), {"w": Element.monomial((0, 1))})
