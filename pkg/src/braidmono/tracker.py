"""Numerical fiber tracking around loops in the x-plane.

The fiber of a curve over a point x0 is the set of y-roots of the
product polynomial.  Tracking moves x around a circle, re-solves the
fiber at each sample, and matches roots to the previous sample by
nearest neighbour.  A step is accepted only when every root moved less
than half the minimal pairwise separation of the previous fiber, which
makes the matching provably unambiguous; otherwise the step is halved.

The resulting strand paths form a Motion whose braid word is the local
monodromy of the loop.  Tracking only the lower half of the circle
(from -radius to +radius) gives the half-loop braid used to compare a
full degeneration against its square.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal

import numpy as np

from .curves import CurveSpec
from .errors import (
    CriticalFiberError,
    GeometryError,
    ImproperProjectionError,
    TrackingFailureError,
)
from .motion import Motion
from .words import BraidWord

__all__ = [
    "LoopSpec",
    "fiber_roots",
    "track_loop",
    "local_braid_monodromy",
    "lefschetz_braid",
]

_RESIDUAL_TOL = 1e-12
_SEPARATION_TOL = 1e-9
_IM_SHEAR = 1e-3
_MIN_STEP_FRACTION = 2.0**-40


@dataclass(frozen=True)
class LoopSpec:
    """Circle |x - center| = radius, traversed counterclockwise.

    arc "full" starts and ends at center + radius; arc "negative-half"
    runs from center - radius to center + radius through the lower half
    plane (angle pi -> 2 pi).
    """

    center: complex = 0j
    radius: Fraction = Fraction(1)
    arc: Literal["full", "negative-half"] = "full"

    def __post_init__(self) -> None:
        r = Fraction(self.radius)
        if r <= 0:
            raise GeometryError("loop radius must be positive")
        if self.arc not in ("full", "negative-half"):
            raise GeometryError("arc must be 'full' or 'negative-half'")
        object.__setattr__(self, "center", complex(self.center))
        object.__setattr__(self, "radius", r)

    @property
    def angle_range(self) -> tuple[float, float]:
        if self.arc == "full":
            return (0.0, 2.0 * math.pi)
        return (math.pi, 2.0 * math.pi)

    def point(self, theta: float) -> complex:
        return self.center + float(self.radius) * cmath.exp(1j * theta)

    @property
    def basepoint(self) -> complex:
        return self.point(self.angle_range[0])


def _polish(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """Newton-polish roots of the polynomial with the given descending coeffs."""
    deriv = np.polyder(coeffs)
    scale = np.max(np.abs(coeffs))
    z = roots.astype(complex)
    for _ in range(50):
        vals = np.polyval(coeffs, z)
        bound = _RESIDUAL_TOL * scale * np.maximum(1.0, np.abs(z)) ** (len(coeffs) - 1)
        if np.all(np.abs(vals) <= bound):
            break
        dvals = np.polyval(deriv, z)
        safe = np.abs(dvals) > 0
        step = np.zeros_like(z)
        step[safe] = vals[safe] / dvals[safe]
        z = z - step
    return z


def _solve_fiber(product, x0: complex) -> np.ndarray:
    """All fiber roots over x0, unsorted, polished."""
    coeffs = np.asarray(product.y_coeffs_at(x0), dtype=complex)
    scale = np.max(np.abs(coeffs))
    if scale == 0:
        raise CriticalFiberError("curve vanishes identically over x=%s" % x0)
    if abs(coeffs[0]) <= 1e-12 * scale:
        raise ImproperProjectionError(
            "leading y-coefficient vanishes near x=%s (curve has a branch at infinity)"
            % x0
        )
    roots = np.roots(coeffs)
    return _polish(coeffs, roots)


def _fiber_scale(roots: np.ndarray) -> float:
    return max(1.0, float(np.max(np.abs(roots))))


def _min_separation(roots: np.ndarray) -> float:
    n = len(roots)
    if n < 2:
        return math.inf
    diffs = np.abs(roots[:, None] - roots[None, :])
    diffs[np.arange(n), np.arange(n)] = math.inf
    return float(diffs.min())


def _sort_key(z: complex) -> float:
    return z.real + _IM_SHEAR * z.imag

def fiber_roots(curve: CurveSpec, x0: complex) -> list[complex]:
    """Fiber over x0, sorted by real part (imaginary part as tiebreaker).

    Raises CriticalFiberError when two roots are too close to separate.
    """
    roots = _solve_fiber(curve.product, complex(x0))
    sep = _min_separation(roots)
    if sep <= 2.0 * _SEPARATION_TOL * _fiber_scale(roots):
        raise CriticalFiberError(
            "fiber over x=%s has nearly coincident roots (separation %.3e)" % (x0, sep)
        )
    return sorted((complex(z) for z in roots), key=_sort_key)


def _match(prev: np.ndarray, new: np.ndarray, max_move: float) -> list[int] | None:
    """Match prev[i] -> new[perm[i]] by nearest neighbour.

    Returns None unless the matching is an unambiguous bijection with
    every displacement below max_move.
    """
    dist = np.abs(prev[:, None] - new[None, :])
    perm = dist.argmin(axis=1)
    if len(set(perm.tolist())) != len(prev):
        return None
    moves = dist[np.arange(len(prev)), perm]
    if float(moves.max()) >= max_move:
        return None
    return perm.tolist()


def track_loop(
    curve: CurveSpec, loop: LoopSpec, *, initial_divisions: int = 256
) -> Motion:
    """Track the fiber around the loop; returns the strand Motion.

    The motion's time axis is the loop parameter normalised to [0, 1].
    Strand k starts at the k-th root of the sorted basepoint fiber.
    initial_divisions sets the starting step to arc/initial_divisions;
    the tracker still adapts from there.
    """
    if initial_divisions < 1:
        raise GeometryError("initial_divisions must be positive")
    theta0, theta1 = loop.angle_range
    arc = theta1 - theta0
    product = curve.product

    start_sorted = fiber_roots(curve, loop.basepoint)
    current = np.asarray(start_sorted, dtype=complex)
    n = len(current)
    if n < 1:
        raise CriticalFiberError("empty fiber")

    thetas = [theta0]
    samples = [current.copy()]

    step = arc / float(initial_divisions)
    min_step = arc * _MIN_STEP_FRACTION
    theta = theta0
    streak = 0
    max_disp = 0.0

    while theta < theta1 - 1e-15:
        h = min(step, theta1 - theta)
        target = theta + h
        new = _solve_fiber(product, loop.point(target))
        sep = _min_separation(current)
        if sep <= 2.0 * _SEPARATION_TOL * _fiber_scale(current):
            raise CriticalFiberError(
                "fiber separation collapsed at loop angle %.6f" % theta
            )
        perm = None
        if len(new) == n:
            perm = _match(current, new, 0.5 * sep)
        if perm is None:
            step = h / 2.0
            if step < min_step:
                raise TrackingFailureError(
                    "step underflow at loop angle %.6f (fiber too unstable)" % theta
                )
            streak = 0
            continue
        new_matched = new[perm]
        max_disp = max(max_disp, float(np.max(np.abs(new_matched - current))))
        current = new_matched
        theta = target
        thetas.append(theta)
        samples.append(current.copy())
        streak += 1
        if streak >= 8:
            step = min(step * 2.0, max(arc / 64.0, arc / float(initial_divisions)))
            streak = 0

    if loop.arc == "full":
        # The end fiber must coincide with the start fiber as a set.
        end = samples[-1]
        tol = 1e-6 * _fiber_scale(end)
        used = [False] * n
        for z in end:
            best, best_d = -1, math.inf
            for i, w in enumerate(start_sorted):
                d = abs(z - w)
                if not used[i] and d < best_d:
                    best, best_d = i, d
            if best < 0 or best_d > tol:
                raise TrackingFailureError(
                    "full loop did not return to the starting fiber"
                )
            used[best] = True

    times = [(t - theta0) / arc for t in thetas]
    times[0], times[-1] = 0.0, 1.0
    paths = tuple(
        tuple(complex(samples[j][k]) for j in range(len(samples))) for k in range(n)
    )
    bound = max_disp * 1.25 + 1e-9
    return Motion(tuple(times), paths, step_bound=bound)


def local_braid_monodromy(
    curve: CurveSpec, loop: LoopSpec, *, initial_divisions: int = 256
) -> BraidWord:
    """Braid of the fiber motion around a full loop."""
    from .motion import motion_to_braid

    if loop.arc != "full":
        raise GeometryError("local_braid_monodromy needs a full loop")
    return motion_to_braid(track_loop(curve, loop, initial_divisions=initial_divisions))


def lefschetz_braid(
    curve: CurveSpec, loop: LoopSpec, *, initial_divisions: int = 256
) -> BraidWord:
    """Braid of the fiber motion along the lower half of the loop."""
    from .motion import motion_to_braid

    half = LoopSpec(loop.center, loop.radius, "negative-half")
    return motion_to_braid(track_loop(curve, half, initial_divisions=initial_divisions))
