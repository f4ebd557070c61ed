from __future__ import annotations

import pytest

from braidmono import (
    FiniteGroupTable,
    FreeWord,
    Presentation,
    alternating_group,
    count_homomorphisms,
    cyclic_group,
    default_targets,
    dihedral_group,
    dump_targets,
    equivalence_evidence,
    load_targets,
    quaternion_group,
    symmetric_group,
)
from braidmono.errors import GroupTableError


def _p(rank, *relators):
    return Presentation(rank, tuple(FreeWord(rank, r) for r in relators))


def test_group_orders():
    assert cyclic_group(5).order == 5
    assert dihedral_group(4).order == 8
    assert symmetric_group(3).order == 6
    assert alternating_group(4).order == 12
    assert quaternion_group().order == 8


def test_table_validation():
    with pytest.raises(GroupTableError):
        FiniteGroupTable(2, 0, ((0, 1), (1, 1)))
    with pytest.raises(GroupTableError):
        FiniteGroupTable(2, 1, ((0, 1), (1, 0)))


def test_inverse_lookup():
    g = cyclic_group(4)
    assert g.inverse(1) == 3
    assert g.inverse(0) == 0


def test_default_target_battery():
    targets = default_targets()
    assert [name for name, _ in targets] == [
        "C2", "C3", "C4", "C6", "S3", "D4", "Q8", "A4", "D6", "S4",
    ]
    assert [g.order for _, g in targets] == [2, 3, 4, 6, 6, 8, 8, 12, 12, 24]


def test_free_group_counts():
    s3 = symmetric_group(3)
    assert count_homomorphisms(_p(1), s3) == 6
    assert count_homomorphisms(_p(2), s3) == 36
    assert count_homomorphisms(_p(0), s3) == 1


def test_abelianisation_count():
    # Commuting pairs in S3: six with the identity fibre argument -> 18.
    z2 = _p(2, (1, 2, -1, -2))
    assert count_homomorphisms(z2, symmetric_group(3)) == 18


def test_torsion_counts():
    assert count_homomorphisms(_p(1, (1, 1)), cyclic_group(4)) == 2
    assert count_homomorphisms(_p(1, (1, 1, 1)), symmetric_group(3)) == 3
    assert count_homomorphisms(_p(1, (1, 1, 1)), alternating_group(4)) == 9
    assert count_homomorphisms(_p(1, (1, 1, 1, 1)), quaternion_group()) == 8
    assert count_homomorphisms(_p(1, (1, 1, 1, 1)), cyclic_group(6)) == 2


def test_killed_generator_forces_identity():
    for _, g in default_targets():
        assert count_homomorphisms(_p(1, (1,)), g) == 1


def test_pinned_generator_eliminates():
    # x2 = x1^-2 pins x2, leaving a free generator.
    p = _p(2, (2, 1, 1))
    assert count_homomorphisms(p, symmetric_group(3)) == 6


def test_wide_presentations_use_product_fallback():
    assert count_homomorphisms(_p(5), cyclic_group(2)) == 32


def test_equivalence_report():
    a = _p(1, (1, 1))
    b = _p(1, (1, 1, 1))
    same = equivalence_evidence(a, a)
    assert same.consistent
    assert same.verdict == "Consistent"
    diff = equivalence_evidence(a, b)
    assert not diff.consistent
    assert diff.verdict == "Inconsistent"
    assert len(diff.lines()) == 10


def test_dump_load_round_trip():
    targets = default_targets()[:3]
    back = load_targets(dump_targets(targets))
    assert [(n, g.order, g.identity, g.table) for n, g in back] == [
        (n, g.order, g.identity, g.table) for n, g in targets
    ]


def test_load_rejects_malformed_blocks():
    with pytest.raises(GroupTableError):
        load_targets("group X\norder 2\n")
