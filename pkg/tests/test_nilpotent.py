"""Partition classification, weighted diagrams, sl2 data, and the
independent matrix oracle."""

from fractions import Fraction

import pytest

from arthurcalc.errors import ValidationError
from arthurcalc.nilpotent import (
    SL2Data,
    _diagram_from_sorted,
    commutator,
    is_very_even,
    jordan_type,
    mat_mul,
    mat_scale,
    mat_sub,
    mat_transpose,
    sl2_from_partition,
    standard_triple,
    validate_partition,
    validate_sl2_data,
    weighted_diagram,
)
from arthurcalc.roots import CartanSpec, build_root_datum, diagram_pairing
from arthurcalc.sweeps import valid_partitions

# Hand-derived expected values, frozen before the layout code was written.
FROZEN_DIAGRAMS = {
    ("A", 1, (2,)): (2,),
    ("A", 2, (2, 1)): (1, 1),
    ("A", 2, (3,)): (2, 2),
    ("B", 2, (3, 1, 1)): (2, 0),
    ("B", 2, (2, 2, 1)): (0, 1),
    ("C", 2, (2, 2)): (0, 2),
    ("C", 2, (2, 1, 1)): (1, 0),
    ("C", 3, (3, 3)): (0, 2, 0),
    ("D", 4, (2, 2, 2, 2)): (0, 0, 0, 2),
    ("D", 4, (3, 2, 2, 1)): (1, 0, 1, 1),
    ("B", 4, (5, 3, 1)): (2, 0, 2, 0),
    ("D", 3, (3, 1, 1, 1)): (2, 0, 0),
}

FROZEN_SUPPORTS = {
    ("A", 1, (2,)): {(1,)},
    ("A", 2, (2, 1)): {(1, 1)},
    ("A", 2, (3,)): {(1, 0), (0, 1)},
    ("B", 2, (3, 1, 1)): {(1, 1)},
    ("B", 2, (2, 2, 1)): {(1, 2)},
    ("C", 2, (2, 2)): {(0, 1), (2, 1)},
    ("C", 2, (2, 1, 1)): {(2, 1)},
    ("C", 3, (3, 3)): {(1, 1, 0), (0, 1, 1)},
    ("D", 4, (2, 2, 2, 2)): {(0, 0, 0, 1), (1, 2, 1, 1)},
    ("D", 4, (3, 2, 2, 1)): {(1, 1, 1, 0), (1, 1, 0, 1), (0, 1, 1, 1)},
    ("B", 4, (5, 3, 1)): {(1, 0, 0, 0), (0, 0, 1, 0), (0, 1, 1, 0), (0, 0, 1, 2), (0, 1, 1, 2)},
    ("D", 3, (3, 1, 1, 1)): {(1, 1, 0), (1, 0, 1)},
}


# -- partition validation -------------------------------------------------------


def test_partition_parity_rules():
    assert validate_partition("A", 2, (1, 2)) == (2, 1)
    assert validate_partition("B", 2, (3, 1, 1)) == (3, 1, 1)
    assert validate_partition("C", 2, (2, 2)) == (2, 2)
    assert validate_partition("D", 4, (4, 4)) == (4, 4)


def test_partition_parity_error_names_largest_offender():
    with pytest.raises(ValidationError, match="odd part 3 has odd multiplicity"):
        validate_partition("C", 2, (3, 1))
    with pytest.raises(ValidationError, match="even part 4 has odd multiplicity"):
        validate_partition("B", 3, (4, 2, 1))
    with pytest.raises(ValidationError, match="even part 6 has odd multiplicity"):
        validate_partition("D", 4, (6, 2))


def test_partition_sum_and_shape_errors():
    with pytest.raises(ValidationError, match="sums to 3, expected 2"):
        validate_partition("A", 1, (2, 1))
    with pytest.raises(ValidationError, match="empty"):
        validate_partition("A", 1, ())
    with pytest.raises(ValidationError, match="not a positive integer"):
        validate_partition("A", 1, (2, 0))
    with pytest.raises(ValidationError, match="no partition classification"):
        validate_partition("G", 2, (2, 2))


def test_valid_partition_counts_small():
    assert len(valid_partitions("A", 1)) == 2
    assert len(valid_partitions("A", 2)) == 3
    assert len(valid_partitions("C", 2)) == 4
    assert len(valid_partitions("B", 2)) == 4
    assert len(valid_partitions("C", 3)) == 8
    assert len(valid_partitions("D", 4)) == 10


# -- weighted diagrams -----------------------------------------------------------


def test_frozen_diagrams():
    for (family, rank, parts), want in FROZEN_DIAGRAMS.items():
        assert weighted_diagram(family, rank, parts) == want, (family, rank, parts)


def test_diagram_entries_bounded():
    for family, max_rank in (("A", 5), ("B", 4), ("C", 4), ("D", 5)):
        min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}[family]
        for rank in range(min_rank, max_rank + 1):
            for parts in valid_partitions(family, rank):
                diagram = weighted_diagram(family, rank, parts)
                assert len(diagram) == rank
                assert all(v in (0, 1, 2) for v in diagram)


def test_trivial_partition_gives_zero_diagram():
    assert weighted_diagram("A", 3, (1, 1, 1, 1)) == (0, 0, 0)
    assert weighted_diagram("C", 2, (1, 1, 1, 1)) == (0, 0)


def test_very_even_flag():
    assert is_very_even("D", (4, 4))
    assert is_very_even("D", (2, 2, 2, 2))
    assert not is_very_even("D", (3, 2, 2, 1))
    assert not is_very_even("C", (2, 2))
    assert not is_very_even("B", (3, 1, 1))


# -- sl2 data from partitions ------------------------------------------------------


def test_frozen_supports():
    for (family, rank, parts), want in FROZEN_SUPPORTS.items():
        data = sl2_from_partition(family, rank, parts)
        assert set(data.support) == want, (family, rank, parts)
        assert data.diagram == FROZEN_DIAGRAMS[(family, rank, parts)]


def test_support_roots_are_positive_with_pairing_two():
    for family, max_rank in (("A", 5), ("B", 4), ("C", 4), ("D", 5)):
        min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}[family]
        for rank in range(min_rank, max_rank + 1):
            d = build_root_datum(CartanSpec(family, rank))
            for parts in valid_partitions(family, rank):
                data = sl2_from_partition(family, rank, parts)
                for root in data.support:
                    assert root in d.root_set
                    assert diagram_pairing(root, data.diagram) == 2


def test_trivial_partition_gives_trivial_sl2():
    data = sl2_from_partition("B", 2, (1, 1, 1, 1, 1))
    assert data.is_trivial
    assert data.support == ()


# -- sl2 data validation -------------------------------------------------------------


def test_validate_sl2_data_collects_violations():
    d = build_root_datum(CartanSpec("A", 2))
    bad = SL2Data((2, 0), ((0, 1),))  # pairing 0, not 2
    with pytest.raises(ValidationError, match="pairs with H to 0"):
        validate_sl2_data(d, bad)
    with pytest.raises(ValidationError, match="length"):
        validate_sl2_data(d, SL2Data((2,), ((1, 0),)))
    with pytest.raises(ValidationError):
        # nonzero diagram with empty support is the degenerate case
        validate_sl2_data(d, SL2Data((2, 0), ()))
    with pytest.raises(ValidationError):
        # zero diagram must not carry support
        validate_sl2_data(d, SL2Data((0, 0), ((1, 0),)))


def test_validate_sl2_data_accepts_expert_g2():
    d = build_root_datum(CartanSpec("G", 2))
    validate_sl2_data(d, SL2Data((2, 2), ((1, 0), (0, 1))))
    validate_sl2_data(d, SL2Data((0, 1), ((3, 2),)))


# -- matrix oracle ---------------------------------------------------------------------


def test_oracle_unsorted_h_example():
    # two blocks: sizes 2 and 1, h carries (1, -1) then (0) blockwise
    triple = standard_triple("A", 2, (2, 1))
    assert [triple.h[i][i] for i in range(3)] == [1, -1, 0]


def _assert_triple(family, rank, parts):
    triple = standard_triple(family, rank, parts)
    e, h, f = triple.e, triple.h, triple.f
    two_e = mat_scale(Fraction(2), e)
    minus_two_f = mat_scale(Fraction(-2), f)
    assert commutator(h, e) == two_e
    assert commutator(h, f) == minus_two_f
    assert commutator(e, f) == h
    assert jordan_type(e) == tuple(sorted(parts, reverse=True))
    if triple.form is not None:
        j = triple.form
        for x in (e, h, f):
            # membership in the form's Lie algebra: X^T J + J X = 0
            xt_j = mat_mul(mat_transpose(x), j)
            j_x = mat_mul(j, x)
            residue = mat_sub(xt_j, mat_scale(Fraction(-1), j_x))
            assert all(all(v == 0 for v in row) for row in residue)


def test_oracle_triples_small():
    _assert_triple("A", 2, (3,))
    _assert_triple("B", 2, (3, 1, 1))
    _assert_triple("C", 2, (2, 2))
    _assert_triple("C", 3, (3, 3))
    _assert_triple("D", 4, (3, 2, 2, 1))
    _assert_triple("D", 4, (2, 2, 2, 2))


def test_oracle_dominant_h_matches_diagram():
    for family, max_rank in (("A", 4), ("B", 3), ("C", 3), ("D", 4)):
        min_rank = {"A": 1, "B": 2, "C": 2, "D": 3}[family]
        for rank in range(min_rank, max_rank + 1):
            for parts in valid_partitions(family, rank):
                triple = standard_triple(family, rank, parts)
                diag = tuple(
                    sorted((int(triple.h[i][i]) for i in range(len(triple.h))), reverse=True)
                )
                assert _diagram_from_sorted(family, rank, diag) == weighted_diagram(
                    family, rank, parts
                )


def test_jordan_type_basics():
    z = [[Fraction(0)] * 3 for _ in range(3)]
    assert jordan_type(z) == (1, 1, 1)
    n = [[Fraction(0)] * 3 for _ in range(3)]
    n[0][1] = Fraction(1)
    n[1][2] = Fraction(1)
    assert jordan_type(n) == (3,)
