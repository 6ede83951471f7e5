"""Combings on a surgery presentation and their homotopy invariants.

A combing is encoded by a characteristic coefficient vector c on the
presentation (c_i = B_ii mod 2) together with an integer offset j recording
the pi_3(S^2) orbit coordinate.  The Gompf invariant of (B, c) is

    theta_g = c^T B^{-1} c - 2(n + 1) - 3 signature(B),

the quadratic term being the self-intersection of the dual of the first
Chern class in the trace of the surgery, and p_1 = theta_g + 4 j.  Any
symmetric integer B and characteristic c are accepted; the classical even
presentations are the special case of an even diagonal.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Sequence

from .errors import (
    BadEtaError,
    EvenCoefficientError,
    NonTorsionError,
    NotCharacteristicError,
)
from .linalg import (
    IntMatrix,
    invert_rational,
    signature,
    solve_integer,
    solve_mod2,
    solve_rational,
)
from .surgery import (
    DEFAULT_CAP,
    MOD_4Z,
    MeridianClass,
    ModClass,
    SurgeryPresentation,
    _check_length,
    enumerate_torsion,
    homology_summary,
    is_torsion_class,
)

DEFAULT_BOX = 8

ModificationKind = Literal["D", "global-Z", "r-twist", "half-twist"]
MODIFICATION_KINDS = ("D", "global-Z", "r-twist", "half-twist")


def validate_combing(pres: SurgeryPresentation, c: Sequence[int]) -> None:
    """Check the characteristic condition c_i = B_ii (mod 2) for all i."""
    c = _check_length(pres, c)
    for i, ci in enumerate(c):
        if (ci - pres.matrix.at(i, i)) % 2:
            raise NotCharacteristicError(i)


@dataclass(frozen=True)
class CombingSpec:
    """A combing: characteristic vector plus pi_3(S^2) offset."""

    presentation: SurgeryPresentation
    c: tuple[int, ...]
    gamma_offset: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", tuple(self.c))
        validate_combing(self.presentation, self.c)


@dataclass(frozen=True)
class EulerClassInfo:
    """Euler class of the plane field orthogonal to a combing."""

    class_vector: MeridianClass
    is_torsion: bool
    is_zero: bool


@dataclass(frozen=True)
class P1Value:
    """A rational p_1 value; integral whenever c lies in the column
    lattice of B (the combing extends to a parallelization)."""

    value: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_integral(self) -> bool:
        return self.value.denominator == 1


def euler_class(pres: SurgeryPresentation, c: Sequence[int]) -> EulerClassInfo:
    """The combing's Euler class as a meridian class.

    Torsion iff c lies in the rational column space of B; zero iff c lies in
    the integer column lattice, in which case the combing extends to a
    parallelization.
    """
    validate_combing(pres, c)
    c = tuple(c)
    torsion = solve_rational(pres.matrix, c).solution is not None
    zero = solve_integer(pres.matrix, c) is not None
    return EulerClassInfo(class_vector=c, is_torsion=torsion, is_zero=zero)


@lru_cache(maxsize=None)
def _theta_g_cached(pres: SurgeryPresentation, c: tuple[int, ...]) -> Fraction:
    x = solve_rational(pres.matrix, c).solution
    if x is None:
        raise NonTorsionError("combing coefficient vector is not torsion")
    quad = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    sig = signature(pres.matrix)
    return quad - 2 * (pres.n + 1) - 3 * (sig.n_plus - sig.n_minus)


def theta_g(pres: SurgeryPresentation, c: Sequence[int]) -> Fraction:
    """Gompf invariant of the torsion combing with coefficient vector c.

    c^T x - 2(n+1) - 3 sig(B) for any rational solution of B x = c; the
    quadratic term does not depend on the solution choice.
    """
    validate_combing(pres, c)
    return _theta_g_cached(pres, tuple(c))


def p1(x: CombingSpec) -> P1Value:
    """p_1 of a torsion combing: the Gompf invariant shifted by 4 per
    gamma step."""
    return P1Value(theta_g(x.presentation, x.c) + 4 * x.gamma_offset)


def gamma(x: CombingSpec, t: int) -> CombingSpec:
    """Act by the t-th power of the generator of pi_3(S^2)."""
    return CombingSpec(x.presentation, x.c, x.gamma_offset + t)


def spin_c_equal(
    pres: SurgeryPresentation, c: Sequence[int], c_other: Sequence[int]
) -> bool:
    """Do two characteristic vectors represent the same Spin^c structure?

    True iff c - c' lies in 2 B Z^n.  The difference of two characteristic
    vectors is always even, so this reduces to an integer solve.
    """
    validate_combing(pres, c)
    validate_combing(pres, c_other)
    half = tuple((a - b) // 2 for a, b in zip(c, c_other))
    return solve_integer(pres.matrix, half) is not None


def combing_equal(x: CombingSpec, y: CombingSpec) -> bool:
    """Equality of torsion combings on one presentation.

    p_1 is injective on each torsion Spin^c structure, so two torsion
    combings agree iff their Spin^c structures and p_1 values do.
    Non-torsion input is refused: the relative offset is not decided here.
    """
    if x.presentation != y.presentation:
        raise ValueError("combings live on different presentations")
    if not is_torsion_class(x.presentation, x.c):
        raise NonTorsionError("first combing is not torsion")
    if not is_torsion_class(y.presentation, y.c):
        raise NonTorsionError("second combing is not torsion")
    return spin_c_equal(x.presentation, x.c, y.c) and p1(x) == p1(y)


def gamma_orbit_modulus(pres: SurgeryPresentation, c: Sequence[int]) -> int:
    """Order of the gamma orbit inside the Spin^c structure of c.

    The combings in one Spin^c structure form an affine space over
    Z / (pairings of the Euler class with surface classes); the surface
    classes are the kernel vectors of B.  Returns 0 when the action is free
    (trivial kernel or all pairings zero).
    """
    validate_combing(pres, c)
    modulus = 0
    for z in homology_summary(pres).kernel_basis:
        modulus = math.gcd(modulus, abs(sum(ci * zi for ci, zi in zip(c, z))))
    return modulus


def hf_grading(x: CombingSpec) -> Fraction:
    """Heegaard Floer grading of a torsion combing: (2 + p_1) / 4."""
    return (2 + p1(x).value) / 4


def reference_parallelization(pres: SurgeryPresentation) -> CombingSpec:
    """A combing with zero Euler class and integral p_1.

    c_ref = B u where u solves B u = diag(B) over F_2; such a u always
    exists for symmetric B, and c_ref is characteristic by construction.
    For an even presentation this is the zero vector.
    """
    diag = [pres.matrix.at(i, i) for i in range(pres.n)]
    u = solve_mod2(pres.matrix, diag)
    if u is None:  # impossible for symmetric B
        raise RuntimeError("diagonal not in the F_2 column space of B")
    c_ref = pres.matrix.matvec(u)
    return CombingSpec(pres, c_ref, 0)


def parity_check(pres: SurgeryPresentation) -> bool:
    """Kirby-Melvin parity self-test.

    p_1 of the reference parallelization minus dim H_1(M;Z/2) minus the
    first Betti number must be even; returns the truth value.
    """
    value = p1(reference_parallelization(pres)).value
    if value.denominator != 1:
        return False
    summary = homology_summary(pres)
    return (value.numerator - summary.dim_h1_mod2 - summary.betti_1) % 2 == 0


@dataclass(frozen=True)
class ReparamDelta:
    """Effect of reparametrizing by a degree-d gauge transformation:
    p_1 shifts by 2d and the companion linking number is -d/2."""

    delta_p1: int
    companion_lk: Fraction


def reparam_delta(deg: int) -> ReparamDelta:
    return ReparamDelta(delta_p1=2 * deg, companion_lk=Fraction(-deg, 2))


def stabilize(x: CombingSpec, sign: int, c0: int) -> CombingSpec:
    """Add a +/-1-framed unknot with odd coefficient c0, preserving p_1.

    The Gompf invariant changes by sign*c0^2 - 2 - 3*sign, always a multiple
    of 4 for odd c0, and the gamma offset absorbs it.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if c0 % 2 == 0:
        raise EvenCoefficientError(
            f"stabilization coefficient {c0} must be odd over a {sign:+d}-framed unknot"
        )
    delta = sign * c0 * c0 - 2 - 3 * sign
    assert delta % 4 == 0
    new_matrix = x.presentation.matrix.direct_sum(IntMatrix.from_rows([[sign]]))
    return CombingSpec(
        SurgeryPresentation(new_matrix),
        x.c + (c0,),
        x.gamma_offset - delta // 4,
    )


def _require_eta(eta: int) -> None:
    if eta not in (1, -1):
        raise BadEtaError(f"eta must be +1 or -1, got {eta!r}")


def apply_modification(
    p: P1Value | Fraction | int,
    kind: ModificationKind,
    *,
    eta: int | None = None,
    lk_euler: Fraction | int | None = None,
    lk_par: Fraction | int | None = None,
    r: int | None = None,
    k: int | None = None,
) -> P1Value:
    """p_1 after one of the four combing modifications.

    D: reframe along a link, p + 4(eta*lk_euler - lk_par), where lk_euler
    pairs the link with the zero locus of the orthogonal section and lk_par
    with the chosen parallel; global-Z: the section extends, p - 4*lk_par;
    r-twist: rotate the section r times along one component, p + 4*eta*r;
    half-twist: k half-twists of a two-strand satellite, p - 4*k.
    """
    value = p.value if isinstance(p, P1Value) else Fraction(p)
    if kind == "D":
        if eta is None or lk_euler is None or lk_par is None:
            raise ValueError("kind 'D' needs eta, lk_euler and lk_par")
        _require_eta(eta)
        return P1Value(value + 4 * (eta * Fraction(lk_euler) - Fraction(lk_par)))
    if kind == "global-Z":
        if lk_par is None:
            raise ValueError("kind 'global-Z' needs lk_par")
        return P1Value(value - 4 * Fraction(lk_par))
    if kind == "r-twist":
        if eta is None or r is None:
            raise ValueError("kind 'r-twist' needs eta and r")
        _require_eta(eta)
        return P1Value(value + 4 * eta * r)
    if kind == "half-twist":
        if k is None:
            raise ValueError("kind 'half-twist' needs k")
        return P1Value(value - 4 * k)
    raise ValueError(f"unknown modification kind {kind!r}")


@dataclass(frozen=True)
class P1ImageReport:
    """Image of p_1 on torsion combings, mod 4Z, from both routes.

    formula_side comes from p_1(reference) - 4*linking form over the torsion
    subgroup; enumeration_side sweeps characteristic torsion vectors within
    the box.  The enumeration is always a subset and equals the formula side
    once the box passes a presentation-dependent threshold.
    """

    formula_side: frozenset[ModClass]
    enumeration_side: frozenset[ModClass]
    is_subset: bool
    is_equal: bool
    box: int


def p1_image(
    pres: SurgeryPresentation, cap: int = DEFAULT_CAP, box: int = DEFAULT_BOX
) -> P1ImageReport:
    """Compute the image of p_1 mod 4Z by formula and by enumeration."""
    ref_value = p1(reference_parallelization(pres)).value
    formula = frozenset(
        ModClass(ref_value - 4 * ell.value, MOD_4Z)
        for _, ell in enumerate_torsion(pres, cap)
    )

    n = pres.n
    sig = signature(pres.matrix)
    const = -2 * (n + 1) - 3 * (sig.n_plus - sig.n_minus)
    inverse = invert_rational(pres.matrix) if pres.n else ()
    ranges = []
    for i in range(n):
        parity = pres.matrix.at(i, i) % 2
        ranges.append([v for v in range(-box, box + 1) if v % 2 == parity])
    enumerated = set()
    for c in itertools.product(*ranges):
        if inverse is not None:
            x = [sum(row[j] * c[j] for j in range(n)) for row in inverse]
        else:
            solved = solve_rational(pres.matrix, c).solution
            if solved is None:
                continue
            x = list(solved)
        quad = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
        enumerated.add(ModClass(quad + const, MOD_4Z))
    enumeration = frozenset(enumerated)
    return P1ImageReport(
        formula_side=formula,
        enumeration_side=enumeration,
        is_subset=enumeration <= formula,
        is_equal=enumeration == formula,
        box=box,
    )
