"""The theorem engine: standard-module data, irreducibility, genericity, and
the temperedness dichotomy with machine-checkable certificates.

The chain is: a nontrivial sl2 component forces a support root with diagram
pairing 2 outside the defining Levi and with trivial unit evaluation, hence a
denominator eigenvalue exactly q^1 and a vanishing inverse L-value at s = 1;
irreducibility fails, so a packet with a generic member cannot carry a
nontrivial sl2 component. Both the witness route and the full-product route
are computed and must agree; disagreement is a bug, not a verdict.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InvariantViolation, ValidationError
from .lfactors import CoefficientRatio, LocalLFactor, local_coefficient_ratio
from .parameters import (
    ArthurParameter,
    QMonomial,
    UnramifiedParameter,
    apply_word_parameter,
    decompose_parameter,
    defining_levi,
    evaluate_root,
    is_tempered,
    langlands_parameter,
    recompose_parameter,
)
from .roots import (
    LeviSubset,
    RationalVector,
    Root,
    apply_word_root,
    character_exponents as character_exponents_of,
    diagram_pairing,
    dominantize,
    evaluation_exponents,
    format_root,
    levi_and_nilradical,
    root_sort_key,
)


class VerdictKind(enum.Enum):
    TEMPERED = "Tempered"
    NON_TEMPERED = "NonTempered"


class Genericity(enum.Enum):
    GENERIC = "generic"
    NOT_GENERIC = "not-generic"
    NOT_APPLICABLE = "not-applicable"


@dataclass(frozen=True)
class TemperedDatum:
    """Packet-level tempered inducing data: the Levi, the unit Satake data,
    and the genericity assumption flag (an input, never computed)."""

    levi: LeviSubset
    unit_parameter: UnramifiedParameter
    generic: bool

    def __post_init__(self):
        if not is_tempered(self.unit_parameter):
            raise ValidationError("tempered datum carries a nonzero exponent")


@dataclass(frozen=True)
class StandardModuleDatum:
    """Langlands-setting data: tempered datum plus a twist.

    The twist is stored in character exponents (coefficients on the simple
    coroot basis); the induced Satake evaluation exponents are the Cartan
    matrix image and must be dominant with the Levi as exact zero set, which
    makes them strictly positive on every nilradical root.
    """

    tempered: TemperedDatum
    character_exponents: RationalVector
    weyl_word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "character_exponents", tuple(Fraction(c) for c in self.character_exponents)
        )
        exps = self.evaluation_exponents
        if any(e < 0 for e in exps):
            raise ValidationError("twist exponents are not dominant", field="twist")
        zero_set = frozenset(i for i, e in enumerate(exps) if e == 0)
        if zero_set != self.tempered.levi:
            raise ValidationError(
                "twist must vanish exactly on the Levi "
                f"(zero set {sorted(zero_set)} vs levi {sorted(self.tempered.levi)})",
                field="twist",
            )

    @cached_property
    def evaluation_exponents(self) -> RationalVector:
        return evaluation_exponents(self.datum, self.character_exponents)

    @property
    def datum(self):
        return self.tempered.unit_parameter.datum

    def twisted_parameter(self) -> UnramifiedParameter:
        return recompose_parameter(self.tempered.unit_parameter, self.evaluation_exponents)


@dataclass(frozen=True)
class Certificate:
    """The vanishing L-factor data: the eigenvalue and the point s where the
    inverse factor vanishes."""

    eigenvalue: QMonomial
    s: Fraction


@dataclass(frozen=True)
class PacketVerdict:
    kind: VerdictKind
    witness: Root | None
    certificate: Certificate | None
    levi: LeviSubset

    def __post_init__(self):
        if self.kind is VerdictKind.NON_TEMPERED:
            if self.witness is None or self.certificate is None:
                raise ValidationError("non-tempered verdict needs witness and certificate")
            value = self.certificate.eigenvalue
            if not (value.angle == 0 and value.q_exp == 1):
                raise ValidationError(
                    f"certificate eigenvalue {value} must be exactly q^1"
                )
            if self.certificate.s != 1:
                raise ValidationError("certificate point must be s = 1")
        else:
            if self.witness is not None or self.certificate is not None:
                raise ValidationError("tempered verdict carries no witness")


@dataclass(frozen=True)
class IrreducibilityVerdict:
    irreducible: bool
    witnesses: tuple[int, ...]
    denominator: LocalLFactor

    @property
    def witness_roots(self) -> tuple[Root, ...]:
        return tuple(self.denominator.roots[i] for i in self.witnesses)


def standard_module_datum(psi: ArthurParameter, generic: bool = True) -> StandardModuleDatum:
    """Standard-module data of the attached parameter: dominantize the
    exponents (recording the word, applied to the unit part as well), read
    off the Levi, and convert the twist to character exponents."""
    p = langlands_parameter(psi)
    _, exponents = decompose_parameter(p)
    dominant, word = dominantize(p.datum, exponents)
    conjugated = apply_word_parameter(p, word)
    units, check = decompose_parameter(conjugated)
    if check != dominant:
        raise InvariantViolation("word application disagrees with dominantization")
    theta = defining_levi(dominant, p.datum)
    return StandardModuleDatum(
        TemperedDatum(theta, units, generic),
        character_exponents_of(p.datum, dominant),
        word,
    )


def irreducibility_verdict(sm: StandardModuleDatum) -> IrreducibilityVerdict:
    """Irreducible iff the denominator inverse has no zero at s = 1."""
    ratio = _ratio(sm)
    return IrreducibilityVerdict(
        irreducible=not ratio.vanishes,
        witnesses=ratio.witnesses,
        denominator=ratio.denominator,
    )


def coefficient_ratio(sm: StandardModuleDatum) -> CoefficientRatio:
    return _ratio(sm)


def _ratio(sm: StandardModuleDatum) -> CoefficientRatio:
    return local_coefficient_ratio(sm.datum, sm.tempered.levi, sm.twisted_parameter())


def genericity_verdict(sm: StandardModuleDatum) -> Genericity:
    """The Langlands quotient is generic iff the standard module is
    irreducible, under the assumption that the inducing datum is generic;
    without the assumption the criterion does not apply."""
    if not sm.tempered.generic:
        return Genericity.NOT_APPLICABLE
    if irreducibility_verdict(sm).irreducible:
        return Genericity.GENERIC
    return Genericity.NOT_GENERIC


def witness_root(psi: ArthurParameter, theta: LeviSubset) -> Root:
    """Minimal support root (canonical enumeration order) that certifies
    non-temperedness: diagram pairing 2, trivial unit evaluation, outside the
    Levi. Each condition is re-checked rather than assumed."""
    if psi.sl2.is_trivial:
        raise ValidationError("tempered parameter has no witness")
    p = langlands_parameter(psi)
    _, exponents = decompose_parameter(p)
    dominant, word = dominantize(p.datum, exponents)
    diagram = tuple(int(2 * e) for e in dominant)
    units, _ = decompose_parameter(apply_word_parameter(p, word))
    levi_roots = set(levi_and_nilradical(p.datum, theta)[0])
    candidates = []
    for root in psi.sl2.support:
        moved = apply_word_root(p.datum, word, root)
        if diagram_pairing(moved, diagram) != 2:
            continue
        if not evaluate_root(moved, units).is_one:
            continue
        if moved in levi_roots:
            continue
        candidates.append(moved)
    if not candidates:
        raise InvariantViolation(
            "no support root qualifies as a witness; the centralizer and "
            "pairing conditions should guarantee one"
        )
    return min(candidates, key=root_sort_key)


def classify_packet(psi: ArthurParameter) -> PacketVerdict:
    """Temperedness dichotomy with the double-checked certificate."""
    p = langlands_parameter(psi)
    _, exponents = decompose_parameter(p)
    dominant, word = dominantize(p.datum, exponents)
    theta = defining_levi(dominant, p.datum)

    if psi.sl2.is_trivial:
        if not is_tempered(p):
            raise InvariantViolation("trivial sl2 component left a nonzero exponent")
        return PacketVerdict(VerdictKind.TEMPERED, None, None, theta)

    witness = witness_root(psi, theta)
    conjugated = apply_word_parameter(p, word)
    eigenvalue = evaluate_root(witness, conjugated)
    if not eigenvalue.is_q_power(1):
        raise InvariantViolation(
            f"witness {format_root(witness)} evaluates to {eigenvalue}, expected q^1"
        )
    ratio = local_coefficient_ratio(p.datum, theta, conjugated)
    if not ratio.vanishes:
        raise InvariantViolation(
            "witness-based vanishing found but the full product is nonzero"
        )
    witnessed_roots = {ratio.denominator.roots[i] for i in ratio.witnesses}
    if witness not in witnessed_roots:
        raise InvariantViolation(
            "the witness root is missing from the full-product vanishing set"
        )
    return PacketVerdict(
        VerdictKind.NON_TEMPERED,
        witness,
        Certificate(eigenvalue, Fraction(1)),
        theta,
    )
