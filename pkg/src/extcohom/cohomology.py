"""Cocycles, coboundaries, and cohomology of an exterior DGA, exactly.

For each degree k the differential is a matrix in the lexicographic monomial
bases; Z^k is its kernel, B^k the image of the previous differential, and
H^k = Z^k / B^k is carried as a quotient of the Z^k coordinate space.  The
chosen representative for each quotient basis vector is itself a cocycle, so
every class comes with a concrete witness.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional, Sequence

from .dga import DGA, Element, format_element, wedge
from .errors import NonUniqueLift, NotACocycle, NotHomogeneous
from .linalg import (
    Matrix,
    QuotientSpace,
    Subspace,
    Vector,
    kernel,
    project,
    quotient,
    vector,
)


class CohomologyClass:
    """A degree, coordinates in the chosen H^k basis, and a cocycle witness."""

    __slots__ = ("ring", "degree", "coords", "representative")

    def __init__(self, ring: "CohomologyRing", degree: int, coords: Vector, representative: Element):
        self.ring = ring
        self.degree = degree
        self.coords = vector(coords)
        self.representative = representative

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        if other.ring is not self.ring or other.degree != self.degree:
            raise ValueError("cannot add classes of different rings or degrees")
        return CohomologyClass(
            self.ring,
            self.degree,
            tuple(a + b for a, b in zip(self.coords, other.coords)),
            self.representative + other.representative,
        )

    def __sub__(self, other: "CohomologyClass") -> "CohomologyClass":
        return self + (-1) * other

    def __mul__(self, scalar) -> "CohomologyClass":
        if isinstance(scalar, CohomologyClass):
            return NotImplemented
        s = Fraction(scalar)
        return CohomologyClass(
            self.ring,
            self.degree,
            tuple(s * c for c in self.coords),
            s * self.representative,
        )

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.degree == other.degree
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash((id(self.ring), self.degree, self.coords))

    def __repr__(self) -> str:
        rep = format_element(self.ring.dga, self.representative)
        return f"CohomologyClass(degree={self.degree}, coords={list(self.coords)}, rep=[{rep}])"


class _DegreeData:
    __slots__ = ("cocycles", "coboundaries", "quotient", "representatives")

    def __init__(self, cocycles, coboundaries, quot, representatives):
        self.cocycles = cocycles
        self.coboundaries = coboundaries
        self.quotient = quot
        self.representatives = representatives


class CohomologyRing:
    """All cohomological data of a DGA, computed once and then read-only."""

    def __init__(self, dga: DGA):
        self.dga = dga
        n = dga.ngens
        self._d_matrix: list[Matrix] = []
        for k in range(n + 1):
            source = dga.basis_monomials(k)
            target_dim = dga.dim(k + 1)
            columns = [dga.to_vector(dga.differential(Element.monomial(m)), k + 1) for m in source]
            rows = [tuple(col[i] for col in columns) for i in range(target_dim)]
            self._d_matrix.append(Matrix.from_rows(rows, cols=len(source)))
        self._degrees: list[_DegreeData] = []
        for k in range(n + 1):
            z = kernel(self._d_matrix[k])
            if k == 0:
                b = Subspace.zero(dga.dim(0))
            else:
                b = Subspace.spanned_by(
                    dga.dim(k),
                    [self._d_matrix[k - 1].column(j) for j in range(self._d_matrix[k - 1].cols)],
                )
            if not b.is_subspace_of(z):
                raise RuntimeError(f"coboundaries escape cocycles in degree {k}; differential is inconsistent")
            b_in_z = Subspace.spanned_by(z.dim, [self._z_coordinates(z, row) for row in b.basis.entries])
            quot = quotient(z.dim, b_in_z)
            reps = tuple(
                dga.from_vector(z.basis.row(f), k) for f in quot.free_columns
            )
            self._degrees.append(_DegreeData(z, b, quot, reps))

    @staticmethod
    def _z_coordinates(z: Subspace, v: Sequence) -> Vector:
        # For v in the row space of an RREF basis, the coefficients are just
        # the entries of v at the pivot columns.
        w = vector(v)
        return tuple(w[p] for p in z.pivots)

    @property
    def top_degree(self) -> int:
        return self.dga.ngens

    def differential_matrix(self, k: int) -> Matrix:
        """The matrix of d from degree k to degree k+1 in the monomial bases."""
        self._check_degree(k)
        return self._d_matrix[k]

    def _check_degree(self, k: int) -> None:
        if not 0 <= k <= self.top_degree:
            raise ValueError(f"degree {k} outside 0..{self.top_degree}")

    def cocycles(self, k: int) -> Subspace:
        self._check_degree(k)
        return self._degrees[k].cocycles

    def coboundaries(self, k: int) -> Subspace:
        self._check_degree(k)
        return self._degrees[k].coboundaries

    def betti(self, k: int) -> int:
        if not 0 <= k <= self.top_degree:
            return 0
        return self._degrees[k].quotient.dim

    def betti_numbers(self) -> tuple[int, ...]:
        return tuple(self.betti(k) for k in range(self.top_degree + 1))

    def zero_class(self, k: int) -> CohomologyClass:
        return CohomologyClass(self, k, (Fraction(0),) * self.betti(k), Element.zero())

    def basis_classes(self, k: int) -> tuple[CohomologyClass, ...]:
        """The classes of the canonical quotient representatives, in order."""
        self._check_degree(k)
        data = self._degrees[k]
        out = []
        for i, rep in enumerate(data.representatives):
            coords = tuple(Fraction(1 if j == i else 0) for j in range(data.quotient.dim))
            out.append(CohomologyClass(self, k, coords, rep))
        return tuple(out)

    def class_of(self, a: Element, degree: Optional[int] = None) -> CohomologyClass:
        """The cohomology class of a homogeneous cocycle.

        The degree argument is only needed to place the zero element; a
        nonzero element carries its own degree.  Raises NotACocycle (with the
        offending differential attached) when d(a) != 0.
        """
        if a.is_zero:
            k = 0 if degree is None else degree
            return self.zero_class(k)
        k = a.degree()
        if degree is not None and degree != k:
            raise NotHomogeneous(f"element has degree {k}, expected {degree}")
        da = self.dga.differential(a)
        if not da.is_zero:
            raise NotACocycle(
                f"not a cocycle: d(a) = {format_element(self.dga, da)}",
                element=a,
                differential=da,
            )
        data = self._degrees[k]
        v = self.dga.to_vector(a, k)
        z_coords = self._z_coordinates(data.cocycles, v)
        coords = project(data.quotient, z_coords)
        return CohomologyClass(self, k, coords, a)

    def cup(self, u: CohomologyClass, v: CohomologyClass) -> CohomologyClass:
        """The product induced on classes by the wedge of representatives.

        Well-defined: shifting either representative by a coboundary shifts
        the wedge by a coboundary.
        """
        if u.ring is not self or v.ring is not self:
            raise ValueError("classes belong to a different ring")
        return self.class_of(wedge(u.representative, v.representative), u.degree + v.degree)

    def lift_to_cocycle(self, u: CohomologyClass) -> Element:
        """The unique cocycle representing a degree-1 class.

        Uniqueness needs B^1 = 0, which holds for every model in scope since
        d vanishes on the unit; the guard is kept for defensive clarity.
        """
        if u.ring is not self:
            raise ValueError("class belongs to a different ring")
        if u.degree != 1:
            raise ValueError("lift_to_cocycle applies to degree-1 classes only")
        if self.coboundaries(1).dim != 0:
            raise NonUniqueLift("degree-1 coboundaries are nonzero; cocycle lifts are not unique")
        lift = Element.zero()
        for c, rep in zip(u.coords, self._degrees[1].representatives):
            if c != 0:
                lift = lift + c * rep
        return lift

    def top_class(self) -> CohomologyClass:
        """The class of the wedge of all generators in declaration order."""
        return self.class_of(
            Element.monomial(tuple(range(self.dga.ngens))), self.top_degree
        )
