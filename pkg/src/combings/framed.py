"""Framed links as exact linking data and their cobordism bookkeeping.

A framed link is modeled purely by the symmetric matrix of its pairwise and
self linking numbers, optionally tagged with the ambient homology class of
each component on a surgery presentation.  This is a complete model for the
invariants in scope: in an integral homology sphere the total self-linking
classifies framed links up to framed cobordism.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import (
    MissingClassesError,
    NonTorsionError,
    NotZSphereError,
)
from .surgery import (
    MeridianClass,
    SurgeryPresentation,
    homology_summary,
    is_torsion_class,
    meridian_pairing,
    reduce_class,
)

QMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class FramedLinkData:
    """Linking data of a framed link.

    lambda_matrix holds self-linkings on the diagonal and pairwise linkings
    off it.  When classes are given an ambient presentation is required, and
    every off-diagonal entry between torsion classes must agree with the
    meridian pairing modulo Z.
    """

    lambda_matrix: QMatrix
    classes: tuple[MeridianClass, ...] | None = None
    ambient: SurgeryPresentation | None = None

    def __post_init__(self) -> None:
        n = len(self.lambda_matrix)
        for row in self.lambda_matrix:
            if len(row) != n:
                raise ValueError("linking data must be a square matrix")
        for i in range(n):
            for j in range(i + 1, n):
                if self.lambda_matrix[i][j] != self.lambda_matrix[j][i]:
                    raise ValueError("linking data must be symmetric")
        if self.classes is not None:
            if self.ambient is None:
                raise ValueError("component classes need an ambient presentation")
            if len(self.classes) != n:
                raise ValueError("one homology class per component is required")
            for v in self.classes:
                if len(v) != self.ambient.n:
                    raise ValueError("class vector length must match the ambient")
            self._check_consistency()

    def _check_consistency(self) -> None:
        # off-diagonal linkings of torsion classes are determined mod Z
        assert self.classes is not None and self.ambient is not None
        torsion = [is_torsion_class(self.ambient, v) for v in self.classes]
        n = len(self.lambda_matrix)
        for i in range(n):
            for j in range(i + 1, n):
                if not (torsion[i] and torsion[j]):
                    continue
                expected = meridian_pairing(
                    self.ambient, self.classes[i], self.classes[j]
                )
                if (self.lambda_matrix[i][j] - expected).denominator != 1:
                    raise ValueError(
                        f"linking of components {i} and {j} is inconsistent "
                        "with their homology classes"
                    )

    @classmethod
    def from_rows(
        cls,
        rows: Iterable[Iterable[Fraction | int | str]],
        classes: Iterable[Sequence[int]] | None = None,
        ambient: SurgeryPresentation | None = None,
    ) -> "FramedLinkData":
        matrix = tuple(tuple(Fraction(x) for x in row) for row in rows)
        cls_tuple = (
            tuple(tuple(int(x) for x in v) for v in classes)
            if classes is not None
            else None
        )
        return cls(matrix, cls_tuple, ambient)

    @property
    def n_components(self) -> int:
        return len(self.lambda_matrix)


@dataclass(frozen=True)
class FramedCobordismClass:
    """Complete framed-cobordism data: summed homology class (reduced to its
    canonical representative) and total self-linking."""

    homology: MeridianClass
    total: Fraction


def total_self_linking(f: FramedLinkData) -> Fraction:
    """Sum of all entries of the linking matrix: lk(L, L_parallel)."""
    return sum((x for row in f.lambda_matrix for x in row), Fraction(0))


def band_sum(f: FramedLinkData, i: int, j: int) -> FramedLinkData:
    """Merge components i and j along a band.

    The merged component self-links by lam_ii + lam_jj + 2 lam_ij and links
    each remaining component by the sum of the two old linkings; homology
    classes add and the total self-linking is conserved.
    """
    n = f.n_components
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError("component index out of range")
    if i == j:
        raise IndexError("band sum needs two distinct components")
    a, b = sorted((i, j))
    keep = [k for k in range(n) if k != b]
    lam = f.lambda_matrix

    def merged(p: int, q: int) -> Fraction:
        if p == a and q == a:
            return lam[a][a] + lam[b][b] + 2 * lam[a][b]
        if p == a:
            return lam[a][q] + lam[b][q]
        if q == a:
            return lam[p][a] + lam[p][b]
        return lam[p][q]

    new_matrix = tuple(tuple(merged(p, q) for q in keep) for p in keep)
    new_classes = None
    if f.classes is not None:
        merged_class = tuple(x + y for x, y in zip(f.classes[a], f.classes[b]))
        new_classes = tuple(
            merged_class if k == a else f.classes[k] for k in keep
        )
    return FramedLinkData(new_matrix, new_classes, f.ambient)


def add_hopf(f: FramedLinkData, sign: int) -> FramedLinkData:
    """Append a split unknot realizing a gamma step.

    sign=+1 appends the negative Hopf pair (framing -1, one positive gamma
    step through the Pontrjagin construction); sign=-1 appends framing +1.
    The new component is null-homologous and unlinked from the others.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    n = f.n_components
    framing = Fraction(-sign)
    new_matrix = tuple(row + (Fraction(0),) for row in f.lambda_matrix) + (
        (Fraction(0),) * n + (framing,),
    )
    new_classes = None
    if f.classes is not None:
        assert f.ambient is not None
        new_classes = f.classes + ((0,) * f.ambient.n,)
    return FramedLinkData(new_matrix, new_classes, f.ambient)


def pontrjagin_p1(p1_tau: Fraction | int, f: FramedLinkData) -> Fraction:
    """p_1 of the combing built from a parallelization with p_1 = p1_tau by
    the Pontrjagin construction on f: p1_tau - 4 lk(L, L_parallel).

    The link must be rationally null-homologous.
    """
    if f.classes is not None:
        assert f.ambient is not None
        total_class = tuple(
            sum(v[i] for v in f.classes) for i in range(f.ambient.n)
        )
        if not is_torsion_class(f.ambient, total_class):
            raise NonTorsionError("link homology class is not torsion")
    return Fraction(p1_tau) - 4 * total_self_linking(f)


def _require_zsphere(f: FramedLinkData) -> None:
    if f.ambient is not None:
        summary = homology_summary(f.ambient)
        if summary.torsion_order != 1 or summary.betti_1 != 0:
            raise NotZSphereError(
                "ambient presentation has nontrivial first homology"
            )


def framed_cobordant_zsphere(f: FramedLinkData, g: FramedLinkData) -> bool:
    """Framed cobordism in an integral homology sphere or ball.

    There the total self-linking is a complete invariant.
    """
    _require_zsphere(f)
    _require_zsphere(g)
    return total_self_linking(f) == total_self_linking(g)


def cobordism_class(f: FramedLinkData) -> FramedCobordismClass:
    """Framed-cobordism class: summed homology class and total self-linking."""
    if f.ambient is None or f.classes is None:
        raise MissingClassesError(
            "cobordism class needs an ambient presentation and component classes"
        )
    total_class = tuple(sum(v[i] for v in f.classes) for i in range(f.ambient.n))
    return FramedCobordismClass(
        homology=reduce_class(f.ambient, total_class),
        total=total_self_linking(f),
    )
