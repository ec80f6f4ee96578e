"""Unramified parameters as exact Frobenius eigen-data.

A parameter is stored modulo center as one QMonomial per simple root of the
dual-side datum. The residue cardinality q stays a formal symbol: a factor
1 - zeta * q^(a-s) with real s and real q > 1 vanishes iff zeta = 1 and
a = s, so every verdict below is uniform in q.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ValidationError
from .nilpotent import SL2Data, validate_sl2_data
from .roots import (
    LeviSubset,
    RationalVector,
    Root,
    RootDatum,
    dominantize,
    format_root,
)


@dataclass(frozen=True)
class QMonomial:
    """Exact value zeta * q^q_exp with zeta = exp(2*pi*i*angle).

    The angle is a rational in [0,1); Fraction keeps it in lowest terms.
    """

    q_exp: Fraction = Fraction(0)
    angle: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "q_exp", Fraction(self.q_exp))
        object.__setattr__(self, "angle", Fraction(self.angle) % 1)

    @staticmethod
    def one() -> "QMonomial":
        return QMonomial()

    @staticmethod
    def q(exp=1) -> "QMonomial":
        return QMonomial(q_exp=Fraction(exp))

    @staticmethod
    def unit(angle) -> "QMonomial":
        return QMonomial(angle=Fraction(angle))

    def __mul__(self, other: "QMonomial") -> "QMonomial":
        return QMonomial(self.q_exp + other.q_exp, self.angle + other.angle)

    def __pow__(self, n: int) -> "QMonomial":
        return QMonomial(self.q_exp * n, self.angle * n)

    def inverse(self) -> "QMonomial":
        return QMonomial(-self.q_exp, -self.angle)

    @property
    def is_one(self) -> bool:
        return self.q_exp == 0 and self.angle == 0

    def is_q_power(self, s) -> bool:
        """True iff the value equals q^s on the nose (unit part trivial)."""
        return self.angle == 0 and self.q_exp == Fraction(s)

    def unit_part(self) -> "QMonomial":
        return QMonomial(Fraction(0), self.angle)

    def __str__(self) -> str:
        pieces = []
        if self.angle != 0:
            pieces.append(f"zeta({self.angle})")
        if self.q_exp == 1:
            pieces.append("q")
        elif self.q_exp != 0:
            pieces.append(f"q^({self.q_exp})")
        return "*".join(pieces) if pieces else "1"


@dataclass(frozen=True)
class UnramifiedParameter:
    """Satake eigen-data: coordinate i is the i-th simple-root evaluation of
    the Frobenius image, taken modulo center."""

    datum: RootDatum
    coords: tuple[QMonomial, ...]

    def __post_init__(self):
        if len(self.coords) != self.datum.rank:
            raise ValidationError(
                f"expected {self.datum.rank} coordinates, got {len(self.coords)}"
            )


def trivial_parameter(d: RootDatum) -> UnramifiedParameter:
    return UnramifiedParameter(d, tuple(QMonomial.one() for _ in range(d.rank)))


def evaluate_root(root: Root, p: UnramifiedParameter) -> QMonomial:
    """Eigenvalue of the parameter on the root space: product of coordinate
    powers along the root's coefficients."""
    if len(root) != p.datum.rank:
        raise ValidationError("root length does not match the parameter's rank")
    out = QMonomial.one()
    for c, t in zip(root, p.coords):
        if c:
            out = out * (t ** c)
    return out


def is_tempered(p: UnramifiedParameter) -> bool:
    return all(t.q_exp == 0 for t in p.coords)


def decompose_parameter(p: UnramifiedParameter) -> tuple[UnramifiedParameter, RationalVector]:
    """Split into the bounded (unit) part and the exponent vector; the two
    recompose to the input exactly."""
    units = UnramifiedParameter(p.datum, tuple(t.unit_part() for t in p.coords))
    return units, tuple(t.q_exp for t in p.coords)


def recompose_parameter(units: UnramifiedParameter, exponents: RationalVector) -> UnramifiedParameter:
    if len(exponents) != units.datum.rank:
        raise ValidationError("exponent vector length does not match rank")
    coords = tuple(
        t * QMonomial.q(e) for t, e in zip(units.coords, exponents)
    )
    return UnramifiedParameter(units.datum, coords)


def defining_levi(exponents: RationalVector, d: RootDatum) -> LeviSubset:
    """Simple indices where the (dominant) exponent vector vanishes."""
    if len(exponents) != d.rank:
        raise ValidationError("exponent vector length does not match rank")
    if any(e < 0 for e in exponents):
        raise ValidationError("exponent vector is not dominant; dominantize first")
    return frozenset(i for i, e in enumerate(exponents) if e == 0)


@dataclass(frozen=True)
class ArthurParameter:
    """Pair of a bounded parameter and commuting sl2 data.

    Validation enforces boundedness and the centralizer condition: the unit
    part must act trivially on every support root, otherwise the sl2 image
    would not centralize it.
    """

    tempered_part: UnramifiedParameter
    sl2: SL2Data

    def __post_init__(self):
        bad = [i for i, t in enumerate(self.tempered_part.coords) if t.q_exp != 0]
        if bad:
            raise ValidationError(
                f"coordinate {bad[0] + 1} has nonzero exponent; the bounded part "
                "must be tempered",
                field="parameter",
            )
        validate_sl2_data(self.tempered_part.datum, self.sl2)
        for root in self.sl2.support:
            value = evaluate_root(root, self.tempered_part)
            if not value.is_one:
                raise ValidationError(
                    f"centralizer condition fails at {format_root(root)}: "
                    f"evaluation {value} is not 1",
                    field="parameter",
                )

    @property
    def datum(self) -> RootDatum:
        return self.tempered_part.datum


def make_arthur_parameter(phi: UnramifiedParameter, rho: SL2Data) -> ArthurParameter:
    return ArthurParameter(phi, rho)


def langlands_parameter(psi: ArthurParameter) -> UnramifiedParameter:
    """Evaluate the sl2 factor at the half-weight torus element: coordinate i
    picks up q^(d_i/2) where d_i is the diagram value."""
    coords = tuple(
        t * QMonomial.q(Fraction(d, 2))
        for t, d in zip(psi.tempered_part.coords, psi.sl2.diagram)
    )
    return UnramifiedParameter(psi.datum, coords)


def apply_word_parameter(p: UnramifiedParameter, word: tuple[int, ...]) -> UnramifiedParameter:
    """Weyl action on torus eigen-data: s_i sends t_j to t_j * t_i^(-cartan[j][i])."""
    coords = list(p.coords)
    for i in word:
        ti = coords[i]
        coords = [
            t * (ti ** (-p.datum.cartan[j][i]))
            for j, t in enumerate(coords)
        ]
    return UnramifiedParameter(p.datum, tuple(coords))


def reflect_parameter(p: UnramifiedParameter, i: int) -> UnramifiedParameter:
    return apply_word_parameter(p, (i,))


def recover_arthur_data(p: UnramifiedParameter) -> tuple[UnramifiedParameter, tuple[int, ...]]:
    """Invert the Arthur evaluation: dominantize the exponents, double them
    into a diagram candidate, and return the correspondingly conjugated unit
    part. Rejects parameters that are not of Arthur shape."""
    _, exponents = decompose_parameter(p)
    for i, e in enumerate(exponents):
        if (2 * e).denominator != 1:
            raise ValidationError(
                f"exponent {e} at coordinate {i + 1} is not half-integral; "
                "not of Arthur type",
                field="parameter",
            )
    dominant, word = dominantize(p.datum, exponents)
    diagram = []
    for i, e in enumerate(dominant):
        d = 2 * e
        if d not in (0, 1, 2):
            raise ValidationError(
                f"doubled dominant exponent {d} at coordinate {i + 1} is outside "
                "0/1/2; not of Arthur type",
                field="parameter",
            )
        diagram.append(int(d))
    conjugated = apply_word_parameter(p, word)
    units, _ = decompose_parameter(conjugated)
    return units, tuple(diagram)
