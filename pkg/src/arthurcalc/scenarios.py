"""Scenario files, certificate reports, and the family-level aggregation.

A scenario names the group; every computation happens on the dual datum
(transposed Cartan matrix, B and C swapped), so partitions and angles in
scenario files are indexed by the dual datum's simple roots. All indices in
files and reports are 1-based; rationals are emitted as "num/den", unit
angles as fractions of a full turn in [0, 1).

The machine emission mode is canonical (sorted keys, normalized rationals)
so reports can be compared byte for byte; parsing an emitted report
reproduces the Report object exactly. Every report carries enough data to
re-verify its verdict with the L-factor layer alone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, fields
from fractions import Fraction

from .classifier import (
    VerdictKind,
    classify_packet,
    genericity_verdict,
    irreducibility_verdict,
    standard_module_datum,
)
from .errors import InvariantViolation, ValidationError
from .lfactors import grade_nilradical, inverse_vanishes_at, l_factor
from .nilpotent import (
    SL2Data,
    is_very_even,
    sl2_from_partition,
    validate_partition,
    validate_sl2_data,
)
from .parameters import (
    QMonomial,
    UnramifiedParameter,
    decompose_parameter,
    langlands_parameter,
    make_arthur_parameter,
)
from .roots import CartanSpec, Root, build_root_datum, dual_datum, format_root

# Assumption flags a place family may declare. The first ties a cuspidal
# family to Arthur parameters at its unramified places; the second upgrades
# "tempered at the listed places" to "tempered everywhere".
MEMBERSHIP_FLAG = "arthur-packet-membership"
PROPAGATION_FLAG = "temperedness-propagation"
ASSUMPTION_FLAGS = (MEMBERSHIP_FLAG, PROPAGATION_FLAG)

SL2_KINDS = ("trivial", "partition", "expert")

TEMPERED_NOTE = (
    "tempered parameter; the standard module is irreducible and the packet "
    "is compatible with a generic member"
)
NONTEMPERED_NOTE = (
    "non-tempered parameter; the vanishing certificate forces a reducible "
    "standard module, so this packet contains no generic member"
)


# ---------------------------------------------------------------------------
# encoding primitives


def format_fraction(x: Fraction) -> str:
    """Canonical "num/den" form, denominator always present."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(value, field: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ValidationError(f"expected a rational, got {value!r}", field=field)
    try:
        return Fraction(str(value))
    except (ValueError, ZeroDivisionError):
        raise ValidationError(f"cannot parse rational {value!r}", field=field)


def _expect_int(value, field: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"expected an integer, got {value!r}", field=field)
    return value


def _expect_str(value, field: str) -> str:
    if not isinstance(value, str) or not value:
        raise ValidationError(f"expected a nonempty string, got {value!r}", field=field)
    return value


def _expect_bool(value, field: str) -> bool:
    if not isinstance(value, bool):
        raise ValidationError(f"expected a boolean, got {value!r}", field=field)
    return value


def _expect_list(value, field: str) -> list:
    if not isinstance(value, list):
        raise ValidationError(f"expected a list, got {value!r}", field=field)
    return value


def _expect_dict(value, field: str) -> dict:
    if not isinstance(value, dict):
        raise ValidationError(f"expected an object, got {value!r}", field=field)
    return value


def _check_keys(payload: dict, required: set, optional: set, field: str) -> None:
    unknown = sorted(set(payload) - required - optional)
    if unknown:
        raise ValidationError(f"unknown keys {unknown}", field=field)
    missing = sorted(required - set(payload))
    if missing:
        raise ValidationError(f"missing keys {missing}", field=field)


def _join_field(prefix: str, name: str) -> str:
    return f"{prefix}.{name}" if prefix else name


def monomial_to_dict(m: QMonomial) -> dict:
    return {"angle": format_fraction(m.angle), "q_exp": format_fraction(m.q_exp)}


def monomial_from_dict(payload, field: str) -> QMonomial:
    payload = _expect_dict(payload, field)
    _check_keys(payload, {"angle", "q_exp"}, set(), field)
    return QMonomial(
        q_exp=parse_fraction(payload["q_exp"], _join_field(field, "q_exp")),
        angle=parse_fraction(payload["angle"], _join_field(field, "angle")),
    )


def spec_to_dict(spec: CartanSpec) -> dict:
    return {"family": spec.family, "rank": spec.rank}


def spec_from_dict(payload, field: str) -> CartanSpec:
    payload = _expect_dict(payload, field)
    _check_keys(payload, {"family", "rank"}, set(), field)
    family = _expect_str(payload["family"], _join_field(field, "family"))
    rank = _expect_int(payload["rank"], _join_field(field, "rank"))
    try:
        return CartanSpec(family, rank)
    except ValidationError as err:
        raise ValidationError(err.raw_message, field=field)


def _root_from_list(value, rank: int, field: str) -> Root:
    value = _expect_list(value, field)
    if len(value) != rank:
        raise ValidationError(f"expected {rank} coefficients, got {len(value)}", field=field)
    return tuple(_expect_int(c, f"{field}[{i + 1}]") for i, c in enumerate(value))


def canonical_json(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# scenarios


@dataclass(frozen=True)
class Scenario:
    """One unramified place: the group, unit Satake angles on the dual
    datum's simple roots, the sl2 component, and the genericity flag."""

    label: str
    group: CartanSpec
    satake_angles: tuple[Fraction, ...]
    sl2_kind: str
    partition: tuple[int, ...] | None = None
    expert_data: SL2Data | None = None
    generic_assumption: bool = True

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValidationError("label must be a nonempty string", field="label")
        if self.sl2_kind not in SL2_KINDS:
            raise ValidationError(
                f"sl2 kind must be one of {SL2_KINDS}, got {self.sl2_kind!r}",
                field="sl2",
            )
        dual = dual_datum(build_root_datum(self.group))
        angles = tuple(Fraction(a) % 1 for a in self.satake_angles)
        if len(angles) != dual.rank:
            raise ValidationError(
                f"expected {dual.rank} angles, got {len(angles)}",
                field="satake_angles",
            )
        object.__setattr__(self, "satake_angles", angles)
        if (self.partition is not None) != (self.sl2_kind == "partition"):
            raise ValidationError(
                "partition must be given exactly for the partition kind", field="sl2"
            )
        if (self.expert_data is not None) != (self.sl2_kind == "expert"):
            raise ValidationError(
                "expert data must be given exactly for the expert kind", field="sl2"
            )
        if self.sl2_kind == "partition":
            try:
                normalized = validate_partition(
                    dual.spec.family, dual.rank, self.partition
                )
            except ValidationError as err:
                raise ValidationError(err.raw_message, field="sl2.partition")
            object.__setattr__(self, "partition", normalized)
        if self.sl2_kind == "expert":
            validate_sl2_data(dual, self.expert_data)

    @property
    def dual_spec(self) -> CartanSpec:
        return dual_datum(build_root_datum(self.group)).spec

    def resolved_sl2(self) -> SL2Data:
        dual = self.dual_spec
        if self.sl2_kind == "trivial":
            return SL2Data((0,) * dual.rank, ())
        if self.sl2_kind == "partition":
            return sl2_from_partition(dual.family, dual.rank, self.partition)
        return self.expert_data


def scenario_to_dict(s: Scenario) -> dict:
    if s.sl2_kind == "trivial":
        sl2_payload = "trivial"
    elif s.sl2_kind == "partition":
        sl2_payload = {"partition": list(s.partition)}
    else:
        sl2_payload = {
            "expert": {
                "diagram": list(s.expert_data.diagram),
                "support": [list(root) for root in s.expert_data.support],
            }
        }
    return {
        "label": s.label,
        "group": spec_to_dict(s.group),
        "satake_angles": [format_fraction(a) for a in s.satake_angles],
        "sl2": sl2_payload,
        "generic_assumption": s.generic_assumption,
    }


def scenario_from_dict(payload, field: str = "") -> Scenario:
    payload = _expect_dict(payload, field or "scenario")
    _check_keys(
        payload,
        {"label", "group", "satake_angles", "sl2"},
        {"generic_assumption"},
        field or "scenario",
    )
    label = _expect_str(payload["label"], _join_field(field, "label"))
    group = spec_from_dict(payload["group"], _join_field(field, "group"))
    angles_field = _join_field(field, "satake_angles")
    angles = tuple(
        parse_fraction(a, f"{angles_field}[{i + 1}]")
        for i, a in enumerate(_expect_list(payload["satake_angles"], angles_field))
    )
    generic = True
    if "generic_assumption" in payload:
        generic = _expect_bool(
            payload["generic_assumption"], _join_field(field, "generic_assumption")
        )

    sl2_field = _join_field(field, "sl2")
    sl2_value = payload["sl2"]
    kind, partition, expert = "trivial", None, None
    if sl2_value == "trivial":
        pass
    elif isinstance(sl2_value, dict):
        _check_keys(sl2_value, set(), {"partition", "expert"}, sl2_field)
        if len(sl2_value) != 1:
            raise ValidationError(
                'expected exactly one of "partition" or "expert"', field=sl2_field
            )
        if "partition" in sl2_value:
            kind = "partition"
            part_field = _join_field(sl2_field, "partition")
            raw = _expect_list(sl2_value["partition"], part_field)
            partition = tuple(
                _expect_int(m, f"{part_field}[{i + 1}]") for i, m in enumerate(raw)
            )
        else:
            kind = "expert"
            expert_field = _join_field(sl2_field, "expert")
            body = _expect_dict(sl2_value["expert"], expert_field)
            _check_keys(body, {"diagram", "support"}, set(), expert_field)
            diagram_field = _join_field(expert_field, "diagram")
            diagram = tuple(
                _expect_int(v, f"{diagram_field}[{i + 1}]")
                for i, v in enumerate(_expect_list(body["diagram"], diagram_field))
            )
            support_field = _join_field(expert_field, "support")
            support = tuple(
                _root_from_list(root, group.rank, f"{support_field}[{i + 1}]")
                for i, root in enumerate(_expect_list(body["support"], support_field))
            )
            expert = SL2Data(diagram, support)
    else:
        raise ValidationError(
            'sl2 must be "trivial" or an object with "partition" or "expert"',
            field=sl2_field,
        )

    scenario = Scenario(label, group, angles, kind, partition, expert, generic)
    return scenario


def parse_scenario_text(text: str) -> Scenario:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"not valid JSON: {err}")
    return scenario_from_dict(payload)


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Report:
    """Flat, fully serializable record of one scenario run.

    Weyl word entries, Levi members, and root names are 1-based in this
    record, matching the file formats. The dominantized unit angles and
    exponents let the verdict be re-checked from the L-factor layer alone.
    """

    label: str
    group: CartanSpec
    dual: CartanSpec
    satake_angles: tuple[Fraction, ...]
    sl2_kind: str
    sl2_partition: tuple[int, ...] | None
    sl2_diagram: tuple[int, ...]
    sl2_support: tuple[Root, ...]
    orbit_certified: bool
    very_even: bool
    parameter: tuple[QMonomial, ...]
    unit_angles: tuple[Fraction, ...]
    exponents: tuple[Fraction, ...]
    tempered: bool
    weyl_word: tuple[int, ...]
    dominant_exponents: tuple[Fraction, ...]
    dominant_unit_angles: tuple[Fraction, ...]
    levi: tuple[int, ...]
    character_exponents: tuple[Fraction, ...]
    generic_assumption: bool
    irreducible: bool
    irreducibility_witnesses: tuple[Root, ...]
    genericity: str
    verdict_kind: str
    verdict_witness: Root | None
    certificate_eigenvalue: QMonomial | None
    certificate_point: Fraction | None
    agreement: bool
    levels: tuple[int, ...]
    eigenvalues_by_level: tuple[tuple[QMonomial, ...], ...]
    pole_locations: tuple[Fraction, ...]
    interpretation: str


def _eigenvalue_key(m: QMonomial) -> tuple[Fraction, Fraction]:
    return (m.q_exp, m.angle)


def run_scenario(s: Scenario) -> Report:
    """Full pipeline: build the Arthur parameter on the dual datum, classify,
    and assemble the certificate report. Internal cross-checks raise
    InvariantViolation rather than shading the verdict."""
    dual = dual_datum(build_root_datum(s.group))
    sl2 = s.resolved_sl2()
    phi = UnramifiedParameter(dual, tuple(QMonomial.unit(a) for a in s.satake_angles))
    psi = make_arthur_parameter(phi, sl2)

    p = langlands_parameter(psi)
    units0, exponents = decompose_parameter(p)
    verdict = classify_packet(psi)
    sm = standard_module_datum(psi, generic=s.generic_assumption)
    if verdict.levi != sm.tempered.levi:
        raise InvariantViolation("classifier and standard module disagree on the Levi")
    irr = irreducibility_verdict(sm)
    genericity = genericity_verdict(sm)

    twisted = sm.twisted_parameter()
    grading = grade_nilradical(dual, sm.tempered.levi)
    denominator = l_factor(grading, twisted, "r-tilde")
    vanished, _ = inverse_vanishes_at(denominator, 1)
    if vanished != (verdict.kind is VerdictKind.NON_TEMPERED):
        raise InvariantViolation(
            "denominator vanishing does not match the packet verdict"
        )

    by_level = []
    index = 0
    for _, roots in grading.levels:
        block = denominator.eigenvalues[index : index + len(roots)]
        index += len(roots)
        by_level.append(tuple(sorted(block, key=_eigenvalue_key)))
    poles = tuple(
        sorted(value.q_exp for value in denominator.eigenvalues if value.angle == 0)
    )

    nontempered = verdict.kind is VerdictKind.NON_TEMPERED
    return Report(
        label=s.label,
        group=s.group,
        dual=dual.spec,
        satake_angles=s.satake_angles,
        sl2_kind=s.sl2_kind,
        sl2_partition=s.partition,
        sl2_diagram=sl2.diagram,
        sl2_support=sl2.support,
        orbit_certified=s.sl2_kind != "expert",
        very_even=(
            s.sl2_kind == "partition" and is_very_even(dual.spec.family, s.partition)
        ),
        parameter=p.coords,
        unit_angles=tuple(t.angle for t in units0.coords),
        exponents=exponents,
        tempered=not nontempered,
        weyl_word=tuple(i + 1 for i in sm.weyl_word),
        dominant_exponents=sm.evaluation_exponents,
        dominant_unit_angles=tuple(t.angle for t in sm.tempered.unit_parameter.coords),
        levi=tuple(sorted(i + 1 for i in sm.tempered.levi)),
        character_exponents=sm.character_exponents,
        generic_assumption=s.generic_assumption,
        irreducible=irr.irreducible,
        irreducibility_witnesses=irr.witness_roots,
        genericity=genericity.value,
        verdict_kind=verdict.kind.value,
        verdict_witness=verdict.witness,
        certificate_eigenvalue=(
            verdict.certificate.eigenvalue if nontempered else None
        ),
        certificate_point=verdict.certificate.s if nontempered else None,
        agreement=True,
        levels=tuple(level for level, _ in grading.levels),
        eigenvalues_by_level=tuple(by_level),
        pole_locations=poles,
        interpretation=NONTEMPERED_NOTE if nontempered else TEMPERED_NOTE,
    )


_REPORT_FIELDS = tuple(f.name for f in fields(Report))


def report_to_dict(r: Report) -> dict:
    return {
        "label": r.label,
        "group": spec_to_dict(r.group),
        "dual": spec_to_dict(r.dual),
        "satake_angles": [format_fraction(a) for a in r.satake_angles],
        "sl2_kind": r.sl2_kind,
        "sl2_partition": list(r.sl2_partition) if r.sl2_partition is not None else None,
        "sl2_diagram": list(r.sl2_diagram),
        "sl2_support": [list(root) for root in r.sl2_support],
        "orbit_certified": r.orbit_certified,
        "very_even": r.very_even,
        "parameter": [monomial_to_dict(m) for m in r.parameter],
        "unit_angles": [format_fraction(a) for a in r.unit_angles],
        "exponents": [format_fraction(e) for e in r.exponents],
        "tempered": r.tempered,
        "weyl_word": list(r.weyl_word),
        "dominant_exponents": [format_fraction(e) for e in r.dominant_exponents],
        "dominant_unit_angles": [format_fraction(a) for a in r.dominant_unit_angles],
        "levi": list(r.levi),
        "character_exponents": [format_fraction(c) for c in r.character_exponents],
        "generic_assumption": r.generic_assumption,
        "irreducible": r.irreducible,
        "irreducibility_witnesses": [list(root) for root in r.irreducibility_witnesses],
        "genericity": r.genericity,
        "verdict_kind": r.verdict_kind,
        "verdict_witness": list(r.verdict_witness) if r.verdict_witness else None,
        "certificate_eigenvalue": (
            monomial_to_dict(r.certificate_eigenvalue)
            if r.certificate_eigenvalue is not None
            else None
        ),
        "certificate_point": (
            format_fraction(r.certificate_point)
            if r.certificate_point is not None
            else None
        ),
        "agreement": r.agreement,
        "levels": list(r.levels),
        "eigenvalues_by_level": [
            [monomial_to_dict(m) for m in block] for block in r.eigenvalues_by_level
        ],
        "pole_locations": [format_fraction(x) for x in r.pole_locations],
        "interpretation": r.interpretation,
    }


def report_from_dict(payload) -> Report:
    payload = _expect_dict(payload, "report")
    _check_keys(payload, set(_REPORT_FIELDS), set(), "report")
    dual = spec_from_dict(payload["dual"], "dual")
    rank = dual.rank

    def fractions(name: str) -> tuple[Fraction, ...]:
        return tuple(
            parse_fraction(v, f"{name}[{i + 1}]")
            for i, v in enumerate(_expect_list(payload[name], name))
        )

    def roots(name: str) -> tuple[Root, ...]:
        return tuple(
            _root_from_list(v, rank, f"{name}[{i + 1}]")
            for i, v in enumerate(_expect_list(payload[name], name))
        )

    def ints(name: str) -> tuple[int, ...]:
        return tuple(
            _expect_int(v, f"{name}[{i + 1}]")
            for i, v in enumerate(_expect_list(payload[name], name))
        )

    witness = payload["verdict_witness"]
    eigenvalue = payload["certificate_eigenvalue"]
    point = payload["certificate_point"]
    partition = payload["sl2_partition"]
    return Report(
        label=_expect_str(payload["label"], "label"),
        group=spec_from_dict(payload["group"], "group"),
        dual=dual,
        satake_angles=fractions("satake_angles"),
        sl2_kind=_expect_str(payload["sl2_kind"], "sl2_kind"),
        sl2_partition=(
            tuple(
                _expect_int(m, f"sl2_partition[{i + 1}]")
                for i, m in enumerate(_expect_list(partition, "sl2_partition"))
            )
            if partition is not None
            else None
        ),
        sl2_diagram=ints("sl2_diagram"),
        sl2_support=roots("sl2_support"),
        orbit_certified=_expect_bool(payload["orbit_certified"], "orbit_certified"),
        very_even=_expect_bool(payload["very_even"], "very_even"),
        parameter=tuple(
            monomial_from_dict(m, f"parameter[{i + 1}]")
            for i, m in enumerate(_expect_list(payload["parameter"], "parameter"))
        ),
        unit_angles=fractions("unit_angles"),
        exponents=fractions("exponents"),
        tempered=_expect_bool(payload["tempered"], "tempered"),
        weyl_word=ints("weyl_word"),
        dominant_exponents=fractions("dominant_exponents"),
        dominant_unit_angles=fractions("dominant_unit_angles"),
        levi=ints("levi"),
        character_exponents=fractions("character_exponents"),
        generic_assumption=_expect_bool(
            payload["generic_assumption"], "generic_assumption"
        ),
        irreducible=_expect_bool(payload["irreducible"], "irreducible"),
        irreducibility_witnesses=roots("irreducibility_witnesses"),
        genericity=_expect_str(payload["genericity"], "genericity"),
        verdict_kind=_expect_str(payload["verdict_kind"], "verdict_kind"),
        verdict_witness=(
            _root_from_list(witness, rank, "verdict_witness")
            if witness is not None
            else None
        ),
        certificate_eigenvalue=(
            monomial_from_dict(eigenvalue, "certificate_eigenvalue")
            if eigenvalue is not None
            else None
        ),
        certificate_point=(
            parse_fraction(point, "certificate_point") if point is not None else None
        ),
        agreement=_expect_bool(payload["agreement"], "agreement"),
        levels=ints("levels"),
        eigenvalues_by_level=tuple(
            tuple(
                monomial_from_dict(m, f"eigenvalues_by_level[{i + 1}][{j + 1}]")
                for j, m in enumerate(
                    _expect_list(block, f"eigenvalues_by_level[{i + 1}]")
                )
            )
            for i, block in enumerate(
                _expect_list(payload["eigenvalues_by_level"], "eigenvalues_by_level")
            )
        ),
        pole_locations=fractions("pole_locations"),
        interpretation=_expect_str(payload["interpretation"], "interpretation"),
    )


def emit_report_machine(r: Report) -> str:
    return canonical_json(report_to_dict(r))


def parse_report_text(text: str) -> Report:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"not valid JSON: {err}")
    return report_from_dict(payload)


def _bracketed(values) -> str:
    return "[" + ", ".join(str(v) for v in values) + "]"


def render_report_text(r: Report, certify: bool = False) -> str:
    """Human-readable rendering; `certify` adds the per-level eigenvalue
    multisets of the denominator factor."""
    lines = [
        f"scenario: {r.label}",
        f"group: {r.group} (dual datum: {r.dual})",
        f"satake angles: {_bracketed(format_fraction(a) for a in r.satake_angles)}",
    ]
    sl2_bits = [f"kind {r.sl2_kind}"]
    if r.sl2_partition is not None:
        sl2_bits.append(f"partition {list(r.sl2_partition)}")
    sl2_bits.append(f"diagram {list(r.sl2_diagram)}")
    sl2_bits.append(
        "support {" + ", ".join(format_root(root) for root in r.sl2_support) + "}"
    )
    if r.very_even:
        sl2_bits.append("very even (labels two orbits; not disambiguated)")
    if not r.orbit_certified:
        sl2_bits.append("expert data (orbit not certified)")
    lines.append("sl2 component: " + "; ".join(sl2_bits))
    lines.append(
        "attached parameter: " + _bracketed(str(m) for m in r.parameter)
    )
    lines.append(
        "decomposition: unit angles "
        + _bracketed(format_fraction(a) for a in r.unit_angles)
        + ", exponents "
        + _bracketed(format_fraction(e) for e in r.exponents)
    )
    lines.append(
        f"dominantization: word {list(r.weyl_word)}, dominant exponents "
        + _bracketed(format_fraction(e) for e in r.dominant_exponents)
        + ", dominant unit angles "
        + _bracketed(format_fraction(a) for a in r.dominant_unit_angles)
    )
    lines.append(
        f"levi (1-based): {list(r.levi)}; character exponents "
        + _bracketed(format_fraction(c) for c in r.character_exponents)
    )
    lines.append(f"verdict: {r.verdict_kind}")
    if r.verdict_witness is not None:
        lines.append(f"witness root: {format_root(r.verdict_witness)}")
        lines.append(
            f"certificate: eigenvalue {r.certificate_eigenvalue}, inverse "
            f"denominator factor vanishes at s = {format_fraction(r.certificate_point)}"
        )
        lines.append(f"full-product agreement: {'yes' if r.agreement else 'NO'}")
    witnesses = ", ".join(format_root(root) for root in r.irreducibility_witnesses)
    lines.append(
        f"irreducible: {'yes' if r.irreducible else 'no'}"
        + (f" (vanishing factors at {{{witnesses}}})" if witnesses else "")
    )
    lines.append(
        f"genericity: {r.genericity} (generic assumption: "
        f"{'yes' if r.generic_assumption else 'no'})"
    )
    lines.append(
        "denominator pole locations: "
        + _bracketed(format_fraction(x) for x in r.pole_locations)
    )
    lines.append(f"grading levels: {list(r.levels)}")
    if certify:
        for level, block in zip(r.levels, r.eigenvalues_by_level):
            lines.append(
                f"  level {level} eigenvalues: " + _bracketed(str(m) for m in block)
            )
    lines.append(f"interpretation: {r.interpretation}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# place families


@dataclass(frozen=True)
class PlaceFamily:
    """Labelled scenarios standing for the unramified places of one global
    object, plus the assumption flags the aggregation may invoke."""

    label: str
    places: tuple[tuple[str, Scenario], ...]
    assumptions: tuple[str, ...] = ()

    def __post_init__(self):
        if not isinstance(self.label, str) or not self.label:
            raise ValidationError("label must be a nonempty string", field="label")
        if not self.places:
            raise ValidationError("family must list at least one place", field="places")
        seen = set()
        for i, (place_label, scenario) in enumerate(self.places):
            if not isinstance(place_label, str) or not place_label:
                raise ValidationError(
                    "place label must be a nonempty string", field=f"places[{i + 1}].label"
                )
            if place_label in seen:
                raise ValidationError(
                    f"duplicate place label {place_label!r}", field=f"places[{i + 1}].label"
                )
            seen.add(place_label)
            if not isinstance(scenario, Scenario):
                raise ValidationError(
                    "expected a scenario", field=f"places[{i + 1}].scenario"
                )
        flags = tuple(sorted(set(self.assumptions)))
        for flag in flags:
            if flag not in ASSUMPTION_FLAGS:
                raise ValidationError(
                    f"unknown assumption {flag!r}; expected a subset of "
                    f"{list(ASSUMPTION_FLAGS)}",
                    field="assumptions",
                )
        object.__setattr__(self, "assumptions", flags)


def family_from_dict(payload) -> PlaceFamily:
    payload = _expect_dict(payload, "family")
    _check_keys(payload, {"label", "places"}, {"assumptions"}, "family")
    label = _expect_str(payload["label"], "label")
    assumptions = tuple(
        _expect_str(flag, f"assumptions[{i + 1}]")
        for i, flag in enumerate(
            _expect_list(payload.get("assumptions", []), "assumptions")
        )
    )
    places = []
    for i, entry in enumerate(_expect_list(payload["places"], "places")):
        entry_field = f"places[{i + 1}]"
        entry = _expect_dict(entry, entry_field)
        _check_keys(entry, {"label", "scenario"}, set(), entry_field)
        place_label = _expect_str(entry["label"], _join_field(entry_field, "label"))
        scenario = scenario_from_dict(
            entry["scenario"], _join_field(entry_field, "scenario")
        )
        places.append((place_label, scenario))
    return PlaceFamily(label, tuple(places), assumptions)


def family_to_dict(f: PlaceFamily) -> dict:
    return {
        "label": f.label,
        "assumptions": list(f.assumptions),
        "places": [
            {"label": place_label, "scenario": scenario_to_dict(scenario)}
            for place_label, scenario in f.places
        ],
    }


def parse_family_text(text: str) -> PlaceFamily:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as err:
        raise ValidationError(f"not valid JSON: {err}")
    return family_from_dict(payload)


@dataclass(frozen=True)
class GlobalReport:
    """Aggregated verdict over a family of places.

    Mode "theorem" needs every place to carry the genericity assumption and
    the family to declare the packet-membership assumption; otherwise the
    aggregation only describes the local verdicts.
    """

    label: str
    mode: str
    assumptions: tuple[str, ...]
    place_labels: tuple[str, ...]
    place_verdicts: tuple[str, ...]
    nontempered_places: tuple[str, ...]
    conclusion: str


def ramanujan_report(f: PlaceFamily) -> GlobalReport:
    reports = [run_scenario(scenario) for _, scenario in f.places]
    labels = tuple(place_label for place_label, _ in f.places)
    verdicts = tuple(r.verdict_kind for r in reports)
    nontempered = tuple(
        place_label
        for place_label, kind in zip(labels, verdicts)
        if kind == VerdictKind.NON_TEMPERED.value
    )
    all_generic = all(scenario.generic_assumption for _, scenario in f.places)
    theorem = all_generic and MEMBERSHIP_FLAG in f.assumptions

    if theorem:
        mode = "theorem"
        if nontempered:
            conclusion = (
                "non-tempered at " + ", ".join(nontempered) + "; assuming "
                f"{MEMBERSHIP_FLAG}, local genericity fails there, so no "
                "everywhere-locally-generic cuspidal family matches these places"
            )
        else:
            conclusion = "tempered at every listed place"
            if PROPAGATION_FLAG in f.assumptions:
                conclusion += (
                    f"; assuming {PROPAGATION_FLAG}, tempered at all places"
                )
    else:
        mode = "descriptive"
        tempered_count = len(labels) - len(nontempered)
        conclusion = (
            "descriptive survey (theorem path not invoked): "
            f"{tempered_count} of {len(labels)} places tempered"
        )
        if nontempered:
            conclusion += "; non-tempered at " + ", ".join(nontempered)
    return GlobalReport(
        label=f.label,
        mode=mode,
        assumptions=f.assumptions,
        place_labels=labels,
        place_verdicts=verdicts,
        nontempered_places=nontempered,
        conclusion=conclusion,
    )


def global_report_to_dict(g: GlobalReport) -> dict:
    return {
        "label": g.label,
        "mode": g.mode,
        "assumptions": list(g.assumptions),
        "place_labels": list(g.place_labels),
        "place_verdicts": list(g.place_verdicts),
        "nontempered_places": list(g.nontempered_places),
        "conclusion": g.conclusion,
    }


def global_report_from_dict(payload) -> GlobalReport:
    payload = _expect_dict(payload, "global_report")
    keys = {
        "label",
        "mode",
        "assumptions",
        "place_labels",
        "place_verdicts",
        "nontempered_places",
        "conclusion",
    }
    _check_keys(payload, keys, set(), "global_report")

    def strings(name: str) -> tuple[str, ...]:
        return tuple(
            _expect_str(v, f"{name}[{i + 1}]")
            for i, v in enumerate(_expect_list(payload[name], name))
        )

    return GlobalReport(
        label=_expect_str(payload["label"], "label"),
        mode=_expect_str(payload["mode"], "mode"),
        assumptions=strings("assumptions"),
        place_labels=strings("place_labels"),
        place_verdicts=strings("place_verdicts"),
        nontempered_places=strings("nontempered_places"),
        conclusion=_expect_str(payload["conclusion"], "conclusion"),
    )


def render_global_text(g: GlobalReport) -> str:
    lines = [
        f"family: {g.label}",
        f"mode: {g.mode}",
        "assumptions: " + (", ".join(g.assumptions) if g.assumptions else "(none)"),
    ]
    for place_label, kind in zip(g.place_labels, g.place_verdicts):
        lines.append(f"  {place_label}: {kind}")
    lines.append(
        "non-tempered places: "
        + (", ".join(g.nontempered_places) if g.nontempered_places else "(none)")
    )
    lines.append(f"conclusion: {g.conclusion}")
    return "\n".join(lines) + "\n"
