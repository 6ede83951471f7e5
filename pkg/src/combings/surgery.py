"""Surgery presentations, their first homology and the torsion linking form.

A presentation is the symmetric linking matrix B of an integrally framed
link; the meridians of the components generate H_1 with relation matrix B.
Sign convention: lk(sum v_i m_i, sum w_j m_j) = -v^T B^{-1} w, fixed so that
the surgery computation of the Gompf invariant matches the standard
stabilization arithmetic (see the combing module).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import CapExceededError, DimensionMismatchError, NonTorsionError
from .linalg import (
    IntMatrix,
    Vector,
    kernel_basis,
    rank_mod2,
    smith_normal_form,
    solve_rational,
    unimodular_inverse,
)

DEFAULT_CAP = 10_000

# A meridian class is a plain coefficient vector on the meridian generators;
# equality of classes is decided modulo the column lattice of B.
MeridianClass = Vector

MOD_Z = Fraction(1)
MOD_4Z = Fraction(4)


@dataclass(frozen=True)
class SurgeryPresentation:
    """An integral surgery presentation, i.e. a symmetric linking matrix."""

    matrix: IntMatrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.matrix.cols:
            raise ValueError("linking matrix must be square")
        if not self.matrix.is_symmetric():
            raise ValueError("linking matrix must be symmetric")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "SurgeryPresentation":
        return cls(IntMatrix.from_rows(rows))

    @property
    def n(self) -> int:
        return self.matrix.rows


EMPTY_PRESENTATION = SurgeryPresentation(IntMatrix(0, 0, ()))  # presents S^3


@dataclass(frozen=True)
class HomologySummary:
    """coker(B) data: H_1 = Z^n / im(B)."""

    invariant_factors: tuple[int, ...]
    betti_1: int
    dim_h1_mod2: int
    torsion_order: int
    kernel_basis: tuple[Vector, ...]


@dataclass(frozen=True)
class ModClass:
    """An exact residue in Q/(modulus Z), stored by its canonical
    representative in [0, modulus)."""

    value: Fraction
    modulus: Fraction

    def __post_init__(self) -> None:
        modulus = Fraction(self.modulus)
        if modulus <= 0:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "value", Fraction(self.value) % modulus)

    def __str__(self) -> str:
        return f"{self.value} (mod {self.modulus})"


@lru_cache(maxsize=None)
def homology_summary(pres: SurgeryPresentation) -> HomologySummary:
    """Invariant factors, Betti number, F_2-dimension and kernel of B."""
    snf = smith_normal_form(pres.matrix)
    factors = tuple(d for d in snf.diag if d > 1)
    order = 1
    for d in factors:
        order *= d
    return HomologySummary(
        invariant_factors=factors,
        betti_1=pres.n - snf.rank,
        dim_h1_mod2=pres.n - rank_mod2(pres.matrix),
        torsion_order=order,
        kernel_basis=kernel_basis(pres.matrix),
    )


def _check_length(pres: SurgeryPresentation, v: Sequence[int]) -> Vector:
    if len(v) != pres.n:
        raise DimensionMismatchError(
            f"class vector has length {len(v)}, presentation has {pres.n} components"
        )
    return tuple(v)


def is_torsion_class(pres: SurgeryPresentation, v: Sequence[int]) -> bool:
    """True when v lies in the rational column space of B."""
    v = _check_length(pres, v)
    return solve_rational(pres.matrix, v).solution is not None


def meridian_pairing(
    pres: SurgeryPresentation, v: Sequence[int], w: Sequence[int]
) -> Fraction:
    """Linking number of the torsion meridian classes v and w.

    Computed as -v^T x for any rational solution of B x = w; kernel
    components pair to zero against the torsion class v, so the value does
    not depend on the solution and is symmetric in v and w.
    """
    v = _check_length(pres, v)
    w = _check_length(pres, w)
    if solve_rational(pres.matrix, v).solution is None:
        raise NonTorsionError("first class is not torsion")
    x = solve_rational(pres.matrix, w).solution
    if x is None:
        raise NonTorsionError("second class is not torsion")
    return -sum((Fraction(vi) * xi for vi, xi in zip(v, x)), Fraction(0))


def linking_form(pres: SurgeryPresentation, v: Sequence[int]) -> ModClass:
    """Self-linking of a torsion class, as a residue mod Z.

    Independent of the representative: v -> v + B u changes the pairing by
    an integer.
    """
    return ModClass(meridian_pairing(pres, v, v), MOD_Z)


@lru_cache(maxsize=None)
def _snf_with_inverse(matrix: IntMatrix):
    snf = smith_normal_form(matrix)
    return snf, unimodular_inverse(snf.U)


def reduce_class(pres: SurgeryPresentation, v: Sequence[int]) -> MeridianClass:
    """Canonical representative of [v] in Z^n / im(B).

    In Smith coordinates y = U v the image of B is spanned coordinatewise by
    the invariant factors, so each torsion coordinate is reduced to
    [0, d_i) and free coordinates are kept.
    """
    v = _check_length(pres, v)
    snf, uinv = _snf_with_inverse(pres.matrix)
    y = list(snf.U.matvec(v))
    for i, d in enumerate(snf.diag):
        if d:
            y[i] %= d
    return uinv.matvec(tuple(y))


def classes_equal(
    pres: SurgeryPresentation, v: Sequence[int], w: Sequence[int]
) -> bool:
    """Equality of meridian classes modulo the column lattice of B."""
    return reduce_class(pres, v) == reduce_class(pres, w)


def enumerate_torsion(
    pres: SurgeryPresentation, cap: int = DEFAULT_CAP
) -> tuple[tuple[MeridianClass, ModClass], ...]:
    """One representative per torsion class of H_1, with its linking-form
    value.  Representatives are lifted from Smith coordinates, each factor
    d_i enumerated 0..d_i-1, so the output order is reproducible.
    """
    summary = homology_summary(pres)
    if summary.torsion_order > cap:
        raise CapExceededError(summary.torsion_order, cap)
    snf, uinv = _snf_with_inverse(pres.matrix)
    positions = [i for i, d in enumerate(snf.diag) if d > 1]
    factors = [snf.diag[i] for i in positions]
    out = []
    for combo in itertools.product(*(range(d) for d in factors)):
        y = [0] * pres.n
        for pos, k in zip(positions, combo):
            y[pos] = k
        rep = uinv.matvec(tuple(y))
        out.append((rep, linking_form(pres, rep)))
    return tuple(out)
