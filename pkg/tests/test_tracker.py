from __future__ import annotations

from fractions import Fraction

import pytest

from braidmono import (
    LoopSpec,
    braid_equal,
    braid_permutation,
    fiber_roots,
    lefschetz_braid,
    local_braid_monodromy,
    parse_curve,
    track_loop,
)
from braidmono.errors import (
    CriticalFiberError,
    GeometryError,
    ImproperProjectionError,
    TrackingFailureError,
)


def test_loop_spec_validation():
    with pytest.raises(GeometryError):
        LoopSpec(0j, Fraction(-1))
    with pytest.raises(GeometryError):
        LoopSpec(0j, Fraction(1), "upper")
    loop = LoopSpec(1 + 0j, Fraction(1, 2), "negative-half")
    assert loop.basepoint == pytest.approx(0.5 + 0j)
    assert loop.point(2.0 * 3.141592653589793) == pytest.approx(1.5 + 0j)


def test_fiber_roots_sorted_by_real_part():
    curve = parse_curve("(y^2-x)")
    assert fiber_roots(curve, 1 + 0j) == pytest.approx([-1, 1])


def test_fiber_roots_conjugate_pair_ordering():
    # Conjugate pairs share Re; the sheared key puts the lower one first.
    curve = parse_curve("(y^2+x)")
    roots = fiber_roots(curve, 1 + 0j)
    assert roots[0] == pytest.approx(-1j)
    assert roots[1] == pytest.approx(1j)


def test_fiber_roots_degenerate_fiber():
    curve = parse_curve("(y^2-x)")
    with pytest.raises(CriticalFiberError):
        fiber_roots(curve, 0j)


def test_branch_point_loop_is_half_twist():
    curve = parse_curve("(y^2-x)")
    b = local_braid_monodromy(curve, LoopSpec())
    assert b.letters == (1,)


def test_smooth_loop_is_trivial():
    curve = parse_curve("(y-x)(y+x)")
    b = local_braid_monodromy(curve, LoopSpec(5 + 0j, Fraction(1)))
    assert b.letters == ()


def test_node_loop_is_full_twist():
    curve = parse_curve("(y-x)(y+x)")
    b = local_braid_monodromy(curve, LoopSpec())
    assert b.letters == (1, 1)


def test_tangency_loop_is_double_full_twist():
    curve = parse_curve("(y+x^2)(y-x^2)")
    b = local_braid_monodromy(curve, LoopSpec())
    assert b.letters == (1, 1, 1, 1)


def test_single_strand_curve():
    curve = parse_curve("(y)")
    b = local_braid_monodromy(curve, LoopSpec())
    assert b.strands == 1
    assert b.letters == ()


def test_lefschetz_half_of_tangency():
    curve = parse_curve("(y+x^2)(y-x^2)")
    half = lefschetz_braid(curve, LoopSpec())
    assert half.letters == (1, 1)
    full = local_braid_monodromy(curve, LoopSpec())
    assert braid_equal(half * half, full)


def test_tracking_is_deterministic():
    curve = parse_curve("y(y^2+x)(y^2-x)")
    a = local_braid_monodromy(curve, LoopSpec())
    b = local_braid_monodromy(curve, LoopSpec())
    assert a.letters == b.letters
    assert braid_permutation(a).images == (5, 4, 3, 2, 1)


def test_motion_time_axis_is_normalised():
    curve = parse_curve("(y^2-x)")
    m = track_loop(curve, LoopSpec())
    assert m.times[0] == 0.0
    assert m.times[-1] == 1.0
    assert m.strands == 2


def test_loop_through_branch_point_fails():
    curve = parse_curve("(y^2-x)")
    with pytest.raises((TrackingFailureError, CriticalFiberError)):
        local_braid_monodromy(curve, LoopSpec(1 + 0j, Fraction(1)))


def test_branch_at_infinity_rejected():
    # The leading y-coefficient x-1 vanishes on the unit circle.
    curve = parse_curve("(x y^2 - y^2 - x)")
    with pytest.raises((ImproperProjectionError, TrackingFailureError)):
        local_braid_monodromy(curve, LoopSpec())


def test_steps_validation():
    curve = parse_curve("(y^2-x)")
    with pytest.raises(GeometryError):
        local_braid_monodromy(curve, LoopSpec(), initial_divisions=0)


def test_half_arc_rejected_for_full_monodromy():
    curve = parse_curve("(y^2-x)")
    with pytest.raises(GeometryError):
        local_braid_monodromy(curve, LoopSpec(0j, Fraction(1), "negative-half"))


def test_coarse_steps_still_converge():
    curve = parse_curve("(y+x^2)(y-x^2)")
    b = local_braid_monodromy(curve, LoopSpec(), initial_divisions=16)
    assert braid_equal(b, local_braid_monodromy(curve, LoopSpec()))
