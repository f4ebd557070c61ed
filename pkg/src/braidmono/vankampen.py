"""From a braid monodromy to a fundamental-group presentation.

A braid on n strands acts on the free group generated by one loop per
strand.  The induced presentation has those n loops as generators and
one relator per generator, saying the braid action fixes it.  For the
local braid of a curve singularity this is exactly the presentation of
the complement's fundamental group given by the classical projection
argument, with relations read off over the basepoint fiber.
"""

from __future__ import annotations

from .errors import DimensionMismatchError
from .presentations import Presentation
from .words import BraidWord, FreeWord, GBase, artin_action

__all__ = ["standard_gbase", "braid_images", "induced_presentation"]


def standard_gbase(n: int) -> GBase:
    """Geometric base of n loops, one around each fiber point, in order."""
    return GBase.standard(n)


def braid_images(b: BraidWord, gbase: GBase | None = None) -> list[FreeWord]:
    """Images of the base loops under the braid action, in generator order."""
    base = gbase if gbase is not None else standard_gbase(b.strands)
    if len(base.loops) != b.strands:
        raise DimensionMismatchError(
            "base has %d loops but braid has %d strands"
            % (len(base.loops), b.strands)
        )
    return [artin_action(b, w) for w in base.loops]


def induced_presentation(b: BraidWord, gbase: GBase | None = None) -> Presentation:
    """Presentation with relators x_j^-1 * (action of the braid on x_j).

    Trivial relators (generators fixed by the action) are dropped;
    generators are never dropped.
    """
    n = b.strands
    images = braid_images(b, gbase)
    relators = []
    for j, img in enumerate(images, start=1):
        rel = FreeWord.generator(n, j).inverse() * img
        if rel.letters:
            relators.append(rel)
    return Presentation(n, tuple(relators))
