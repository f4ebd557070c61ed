from __future__ import annotations

import pytest

from braidmono import (
    BraidWord,
    FreeWord,
    GBase,
    braid_images,
    induced_presentation,
    standard_gbase,
)
from braidmono.errors import DimensionMismatchError


def test_standard_gbase_is_one_letter_loops():
    g = standard_gbase(4)
    assert g.rank == 4
    assert [w.letters for w in g.loops] == [(1,), (2,), (3,), (4,)]


def test_braid_images_of_single_generator():
    imgs = braid_images(BraidWord(2, (1,)))
    assert imgs[0].letters == (2,)
    assert imgs[1].letters == (2, 1, -2)


def test_braid_images_respect_custom_gbase():
    base = GBase(2, (FreeWord(2, (2,)), FreeWord(2, (1,))))
    imgs = braid_images(BraidWord(2, (1,)), base)
    assert imgs[0].letters == (2, 1, -2)
    assert imgs[1].letters == (2,)


def test_gbase_rank_mismatch():
    with pytest.raises(DimensionMismatchError):
        braid_images(BraidWord(3, (1,)), standard_gbase(2))


def test_identity_braid_gives_free_presentation():
    p = induced_presentation(BraidWord.identity(3))
    assert p.rank == 3
    assert p.relators == ()


def test_fixed_generators_give_no_relator():
    # s1 fixes x3, so only two relators survive.
    p = induced_presentation(BraidWord(3, (1,)))
    assert p.rank == 3
    assert len(p.relators) == 2


def test_raw_relators_of_double_full_twist():
    p = induced_presentation(BraidWord(2, (1, 1, 1, 1)))
    assert [r.letters for r in p.relators] == [
        (-1, 2, 1, 2, 1, -2, -1, -2),
        (1, 2, 1, 2, -1, -2, -1, -2),
    ]
