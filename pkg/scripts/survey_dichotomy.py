#!/usr/bin/env python3
"""Sweep the dichotomy over small dual types and tabulate the verdicts.

For every valid partition of each listed dual type, and every Satake point
with coordinates in the fourth roots of unity that passes the centralizer
condition, classify the packet and count verdicts per orbit. The trivial
orbit rows must be all-Tempered, every nontrivial orbit all-NonTempered;
the script exits nonzero if any row mixes.

Usage:
    python3 scripts/survey_dichotomy.py [--types A2 C3 ...]
"""

import argparse
import sys
from collections import Counter

from arthurcalc.classifier import VerdictKind, classify_packet
from arthurcalc.roots import CartanSpec, build_root_datum
from arthurcalc.sweeps import (
    DICHOTOMY_SPECS,
    MU4_ANGLES,
    unit_grid,
    unit_parameter,
    valid_partitions,
)
from arthurcalc.errors import ValidationError
from arthurcalc.nilpotent import sl2_from_partition
from arthurcalc.parameters import make_arthur_parameter


def survey(spec: CartanSpec) -> bool:
    datum = build_root_datum(spec)
    print(f"-- dual type {spec} --")
    clean = True
    for parts in valid_partitions(spec.family, spec.rank):
        counts = Counter()
        for angles in unit_grid(spec.rank, MU4_ANGLES):
            phi = unit_parameter(datum, angles)
            try:
                psi = make_arthur_parameter(
                    phi, sl2_from_partition(spec.family, spec.rank, parts)
                )
            except ValidationError:
                continue  # Satake point sits outside the centralizer
            counts[classify_packet(psi).kind] += 1
        tempered = counts[VerdictKind.TEMPERED]
        nontempered = counts[VerdictKind.NON_TEMPERED]
        trivial = all(m == 1 for m in parts)
        mixed = tempered and nontempered
        expected_kind = tempered if trivial else nontempered
        ok = not mixed and expected_kind > 0
        clean &= ok
        tag = "ok " if ok else "BAD"
        print(
            f"  {tag} partition {list(parts)}: "
            f"{tempered} tempered, {nontempered} non-tempered"
        )
    return clean


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--types",
        nargs="*",
        default=[f"{s.family}{s.rank}" for s in DICHOTOMY_SPECS],
        help="dual types to sweep, e.g. A2 B2 C3 D4",
    )
    args = parser.parse_args()

    clean = True
    for name in args.types:
        spec = CartanSpec(name[0].upper(), int(name[1:]))
        clean &= survey(spec)
    if not clean:
        print("dichotomy violated in at least one row", file=sys.stderr)
        return 1
    print("dichotomy holds on every surveyed row")
    return 0


if __name__ == "__main__":
    sys.exit(main())
