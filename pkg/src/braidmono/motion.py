"""Strand motions in the disk and their induced braid words.

A Motion samples n pairwise distinct points of the complex plane on a
common time grid.  Strands are ordered at each instant by the sheared
real projection Re(z) + EPS*Im(z); EPS is a small fixed shear that
separates complex-conjugate pairs, which share Re exactly.  A braid
letter is emitted whenever two strands exchange sheared order: the
letter is positive when the strand of smaller imaginary part (the one
passing in front) comes from the left, so a counterclockwise half-twist
of two adjacent points yields a positive Artin generator.

Builders construct the synthetic motions used throughout: rigid block
rotations, encircling moves, and the framing pair that lifts the
rightmost points into a complex-conjugate configuration and back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence

from .errors import DegenerateMotionError, GeometryError, TieError
from .words import BraidWord, Permutation

__all__ = [
    "EPS",
    "Motion",
    "MotionProgram",
    "RotateBlock",
    "Encircle",
    "FrameIn",
    "FrameOut",
    "motion_to_braid",
    "rotate_block_motion",
    "encircle_motion",
    "complex_level_frame",
    "compose_motions",
]

# Shear used for the real projection; breaks the Re tie of conjugate pairs.
EPS = 1e-3

# Relative tolerances for key ties, event clustering and endpoint matching.
_KEY_TOL = 1e-12
_LAMBDA_TOL = 1e-9
_MATCH_TOL = 1e-7


def _key(z: complex) -> float:
    return z.real + EPS * z.imag


def _scale(points: Iterable[complex]) -> float:
    return max(1.0, max(abs(z) for z in points))


@dataclass(frozen=True)
class Motion:
    """Trajectories of n distinct points over a common time grid.

    paths is strand-major: paths[k][j] is the position of strand k at
    times[j].  step_bound, when given, is the declared upper bound on a
    single-step displacement and is checked on construction.
    """

    times: tuple[float, ...]
    paths: tuple[tuple[complex, ...], ...]
    step_bound: float | None = None

    def __post_init__(self) -> None:
        times = tuple(float(t) for t in self.times)
        paths = tuple(tuple(complex(z) for z in p) for p in self.paths)
        object.__setattr__(self, "times", times)
        object.__setattr__(self, "paths", paths)
        if len(times) < 1:
            raise DegenerateMotionError("a motion needs at least one sample")
        if any(t1 <= t0 for t0, t1 in zip(times, times[1:])):
            raise DegenerateMotionError("sample times must be strictly increasing")
        for p in paths:
            if len(p) != len(times):
                raise DegenerateMotionError("trajectory length does not match time grid")
        n = len(paths)
        for j in range(len(times)):
            col = [p[j] for p in paths]
            tol = _KEY_TOL * _scale(col)
            for a in range(n):
                for b in range(a + 1, n):
                    if abs(col[a] - col[b]) <= tol:
                        raise DegenerateMotionError(
                            "strands %d and %d coincide at sample %d" % (a, b, j)
                        )
        if self.step_bound is not None:
            for k, p in enumerate(paths):
                for j in range(len(times) - 1):
                    if abs(p[j + 1] - p[j]) > self.step_bound:
                        raise DegenerateMotionError(
                            "strand %d jumps by more than the declared bound at step %d"
                            % (k, j)
                        )

    @property
    def strands(self) -> int:
        return len(self.paths)

    @property
    def start(self) -> tuple[complex, ...]:
        return tuple(p[0] for p in self.paths)

    @property
    def end(self) -> tuple[complex, ...]:
        return tuple(p[-1] for p in self.paths)

    @classmethod
    def stationary(cls, points: Sequence[complex]) -> "Motion":
        pts = tuple(complex(z) for z in points)
        return cls((0.0, 1.0), tuple((z, z) for z in pts))

    def reverse(self) -> "Motion":
        t1 = self.times[-1]
        times = tuple(t1 - t for t in reversed(self.times))
        # Guard against collapsing a single-sample grid.
        if len(times) == 1:
            times = (0.0,)
        paths = tuple(tuple(reversed(p)) for p in self.paths)
        return Motion(times, paths, self.step_bound)

    def matching_permutation(self) -> Permutation:
        """Slot-to-slot matching: where the strand starting in slot i ends."""
        start_order = sorted(range(self.strands), key=lambda k: _key(self.paths[k][0]))
        end_order = sorted(range(self.strands), key=lambda k: _key(self.paths[k][-1]))
        end_slot = {k: j + 1 for j, k in enumerate(end_order)}
        return Permutation(tuple(end_slot[k] for k in start_order))


def _initial_order(cols: Sequence[complex]) -> list[int]:
    keys = [_key(z) for z in cols]
    order = sorted(range(len(cols)), key=lambda k: keys[k])
    tol = _KEY_TOL * _scale(cols)
    for a, b in zip(order, order[1:]):
        if abs(keys[a] - keys[b]) <= tol:
            raise TieError("tied sheared order at the initial configuration")
    return order


def motion_to_braid(m: Motion) -> BraidWord:
    """Braid word induced by a motion.

    Crossings are located per linear interpolation step; simultaneous
    crossings are layered by imaginary part and factored into adjacent
    transpositions, which is order independent for layered clusters.
    """
    n = m.strands
    if n == 0:
        raise DegenerateMotionError("a motion needs at least one strand")
    letters: list[int] = []
    order = _initial_order([p[0] for p in m.paths])
    pos = [0] * n
    for slot, k in enumerate(order):
        pos[k] = slot

    for j in range(len(m.times) - 1):
        col0 = [p[j] for p in m.paths]
        col1 = [p[j + 1] for p in m.paths]
        k0 = [_key(z) for z in col0]
        k1 = [_key(z) for z in col1]
        tol = _KEY_TOL * max(_scale(col0), _scale(col1))

        events: list[tuple[float, int, int]] = []
        for a in range(n):
            for b in range(a + 1, n):
                g0 = k0[a] - k0[b]
                g1 = k1[a] - k1[b]
                z0 = abs(g0) <= tol
                z1 = abs(g1) <= tol
                if z0 and z1:
                    raise TieError(
                        "strands %d and %d keep equal sheared keys across step %d"
                        % (a, b, j)
                    )
                if z0:
                    # Tied at the step start: the maintained order decides
                    # whether the separation is a crossing.
                    before = pos[a] < pos[b]
                    after = g1 < 0
                    if before != after:
                        events.append((0.0, a, b))
                    continue
                if z1 or g0 * g1 > 0:
                    continue
                lam = g0 / (g0 - g1)
                events.append((lam, a, b))

        if not events:
            continue
        events.sort(key=lambda e: e[0])

        # Group events whose crossing parameters coincide.
        clusters: list[list[tuple[float, int, int]]] = []
        for ev in events:
            if clusters and ev[0] - clusters[-1][-1][0] <= _LAMBDA_TOL:
                clusters[-1].append(ev)
            else:
                clusters.append([ev])

        for ci, cluster in enumerate(clusters):
            lam = sum(e[0] for e in cluster) / len(cluster)
            nxt = clusters[ci + 1][0][0] if ci + 1 < len(clusters) else 1.0
            probe = lam + max((nxt - lam) * 0.5, _LAMBDA_TOL * 0.5)
            probe = min(probe, 1.0)

            def at(k: int, t: float) -> complex:
                return col0[k] + t * (col1[k] - col0[k])

            # Connected components of the crossing pairs.
            involved = sorted({s for _, a, b in cluster for s in (a, b)})
            comp = {s: s for s in involved}

            def find(s: int) -> int:
                while comp[s] != s:
                    comp[s] = comp[comp[s]]
                    s = comp[s]
                return s

            for _, a, b in cluster:
                comp[find(a)] = find(b)
            groups: dict[int, list[int]] = {}
            for s in involved:
                groups.setdefault(find(s), []).append(s)

            for grp in groups.values():
                slots = sorted(pos[s] for s in grp)
                if slots != list(range(slots[0], slots[0] + len(slots))):
                    raise TieError(
                        "simultaneous crossings of non-adjacent strands at step %d" % j
                    )
                lo = slots[0]
                ims = {s: at(s, lam).imag for s in grp}
                vals = sorted(ims.values())
                im_tol = _KEY_TOL * _scale([at(s, lam) for s in grp]) / EPS
                for v0, v1 in zip(vals, vals[1:]):
                    if v1 - v0 <= im_tol:
                        raise TieError(
                            "cannot layer simultaneous crossing at step %d" % j
                        )
                target = sorted(grp, key=lambda s: _key(at(s, probe)))
                want = {s: lo + i for i, s in enumerate(target)}
                # Bubble toward the target order; each adjacent swap is a
                # letter, signed by which strand lies in front (smaller Im).
                changed = True
                while changed:
                    changed = False
                    for p in range(lo, lo + len(grp) - 1):
                        sa = order[p]
                        sb = order[p + 1]
                        if want[sa] > want[sb]:
                            sign = 1 if ims[sa] < ims[sb] else -1
                            letters.append(sign * (p + 1))
                            order[p], order[p + 1] = sb, sa
                            pos[sa], pos[sb] = p + 1, p
                            changed = True

    final = sorted(range(n), key=lambda k: _key(m.paths[k][-1]))
    if final != order:
        raise TieError("strand order bookkeeping lost sync with the final fiber")
    return BraidWord(n, tuple(letters))


def _as_complex(z) -> complex:
    if isinstance(z, (int, float, Fraction)):
        return complex(float(z), 0.0)
    return complex(z)


def _declared_bound(paths: Sequence[Sequence[complex]]) -> float:
    worst = 0.0
    for p in paths:
        for a, b in zip(p, p[1:]):
            worst = max(worst, abs(b - a))
    return worst * (1.0 + 1e-9) + 1e-15


def _grid(k: int) -> tuple[float, ...]:
    return tuple(j / k for j in range(k + 1))


def rotate_block_motion(
    points: Sequence[complex],
    center: complex,
    angle: Fraction | int,
    steps: int | None = None,
    others: Sequence[complex] = (),
) -> Motion:
    """Rigid counterclockwise rotation of `points` about `center` by angle*pi.

    `others` are stationary fixture points carried along in the motion.
    The default sampling uses 64 steps per quarter turn.
    """
    angle = Fraction(angle)
    movers = [_as_complex(z) for z in points]
    fixed = [_as_complex(z) for z in others]
    c = _as_complex(center)
    for z in movers:
        if abs(z - c) <= _KEY_TOL * _scale(movers + [c]):
            raise DegenerateMotionError("a rotated point sits at the center")
    quarter_turns = abs(angle) * 2
    if steps is None:
        steps = max(1, math.ceil(128 * abs(angle)))
    elif angle != 0 and Fraction(steps) < 8 * quarter_turns:
        raise GeometryError("need at least 8 steps per quarter turn")
    total = float(angle) * math.pi
    paths = []
    for z in movers:
        rel = z - c
        paths.append(
            tuple(c + rel * complex(math.cos(total * j / steps),
                                    math.sin(total * j / steps))
                  for j in range(steps + 1))
        )
    for z in fixed:
        paths.append((z,) * (steps + 1))
    return Motion(_grid(steps), tuple(paths), _declared_bound(paths))


def encircle_motion(
    movers: Sequence[complex],
    around: Sequence[complex],
    turns: Fraction | int,
    steps: int | None = None,
    others: Sequence[complex] = (),
    center: complex | None = None,
) -> Motion:
    """Movers wind `turns` times counterclockwise about the around-set.

    The mover cluster rotates rigidly about `center` (default: centroid
    of the around-set).  Every around-point must lie strictly inside the
    innermost mover orbit and every other point strictly outside the
    outermost one, so the loop captures exactly the around-set.
    """
    turns = Fraction(turns)
    mv = [_as_complex(z) for z in movers]
    ar = [_as_complex(z) for z in around]
    ot = [_as_complex(z) for z in others]
    if not mv:
        raise GeometryError("need at least one moving point")
    if not ar:
        raise GeometryError("need at least one encircled point")
    if center is None:
        c = sum(ar, complex(0)) / len(ar)
    else:
        c = _as_complex(center)
    radii = [abs(z - c) for z in mv]
    r_in = min(radii)
    r_out = max(radii)
    pad = _KEY_TOL * _scale(mv + ar + ot + [c])
    for z in ar:
        if abs(z - c) >= r_in - pad:
            raise GeometryError("an encircled point is not strictly inside the orbit")
    for z in ot:
        if abs(z - c) <= r_out + pad:
            raise GeometryError("a bystander point would be captured by the orbit")
    return rotate_block_motion(mv, c, 2 * turns, steps, others=ar + ot)


def _transport_paths(
    start_top: complex,
    start_bottom: complex,
    end_re: float,
    end_height: float,
    steps: int,
) -> tuple[tuple[complex, ...], tuple[complex, ...]]:
    top = []
    bottom = []
    for j in range(steps + 1):
        lam = j / steps
        re_t = start_top.real + lam * (end_re - start_top.real)
        h_t = start_top.imag + lam * (end_height - start_top.imag)
        re_b = start_bottom.real + lam * (end_re - start_bottom.real)
        h_b = start_bottom.imag + lam * (-end_height - start_bottom.imag)
        top.append(complex(re_t, h_t))
        bottom.append(complex(re_b, h_b))
    return tuple(top), tuple(bottom)


def complex_level_frame(
    slots: Sequence[Fraction | float],
    level: int,
    steps: int | None = None,
    pair_re: Fraction | float | None = None,
    pair_height: Fraction | float | None = None,
) -> tuple[Motion, Motion]:
    """Framing motions that move the `level` rightmost points off the axis.

    The pre-motion rotates the two rightmost points 90 degrees
    counterclockwise about their midpoint (right point up, left point
    down) and then transports the vertical pair to real part `pair_re`,
    linearly rescaling its half-height to `pair_height`.  The
    post-motion is the exact reverse, so pre followed by post induces
    the empty braid.  Only levels 0 and 2 occur in the catalog.
    """
    pts = [_as_complex(z) for z in slots]
    n = len(pts)
    if level < 0 or level > n:
        raise GeometryError("level out of range")
    if level == 0:
        return Motion.stationary(pts), Motion.stationary(pts)
    if level != 2:
        raise GeometryError("only levels 0 and 2 are supported")
    if n < 2:
        raise GeometryError("need at least two points to frame")
    idx = sorted(range(n), key=lambda k: _key(pts[k]))
    ia, ib = idx[-2], idx[-1]
    a, b = pts[ia], pts[ib]
    if abs(a.imag) > 0 or abs(b.imag) > 0:
        raise GeometryError("frame expects a real starting configuration")
    mid = (a + b) / 2
    r = abs(b - a) / 2
    end_re = mid.real if pair_re is None else float(pair_re)
    end_h = r if pair_height is None else float(pair_height)
    if end_h <= 0:
        raise GeometryError("pair height must be positive")
    if steps is None:
        steps = 64

    lift = rotate_block_motion(
        [a, b], mid, Fraction(1, 2), steps,
        others=[pts[k] for k in idx[:-2]],
    )
    # Strand order in `lift`: movers first (a then b), then the others;
    # after the quarter turn b sits on top, a at the bottom.
    top0 = mid + complex(0.0, r)
    bot0 = mid - complex(0.0, r)
    top_path, bot_path = _transport_paths(top0, bot0, end_re, end_h, steps)
    paths = [bot_path, top_path]
    for k in idx[:-2]:
        paths.append((pts[k],) * (steps + 1))
    transport = Motion(_grid(steps), tuple(paths), _declared_bound(paths))
    pre = compose_motions(lift, transport)
    post = pre.reverse()
    return pre, post


def compose_motions(a: Motion, b: Motion) -> Motion:
    """Concatenation in time.

    Strands are matched by position: each endpoint of a must coincide
    (within tolerance) with a unique start point of b, whose trajectory
    then continues that strand.
    """
    if a.strands != b.strands:
        raise DegenerateMotionError("strand counts differ")
    ends = a.end
    starts = b.start
    scale = _scale(list(ends) + list(starts))
    tol = _MATCH_TOL * scale
    used = [False] * b.strands
    match: list[int] = []
    for k, z in enumerate(ends):
        best = min(range(b.strands), key=lambda j: abs(starts[j] - z))
        if abs(starts[best] - z) > tol or used[best]:
            raise DegenerateMotionError(
                "strand %d of the first motion has no unique continuation" % k
            )
        used[best] = True
        match.append(best)
    ta = a.times[-1] - a.times[0]
    tb = b.times[-1] - b.times[0]
    half = 0.5
    times = [half * (t - a.times[0]) / ta if ta > 0 else 0.0 for t in a.times]
    paths = [list(p) for p in a.paths]
    for j in range(1, len(b.times)):
        frac = (b.times[j] - b.times[0]) / tb if tb > 0 else 1.0
        times.append(half + half * frac)
        for k in range(a.strands):
            paths[k].append(b.paths[match[k]][j])
    bound = None
    if a.step_bound is not None or b.step_bound is not None:
        bound = max(a.step_bound or 0.0, b.step_bound or 0.0, tol)
    return Motion(tuple(times), tuple(tuple(p) for p in paths), bound)


def _frac_pair(q: Fraction) -> list[int]:
    q = Fraction(q)
    return [q.numerator, q.denominator]


def _complex_pair(z) -> list[list[int]]:
    if isinstance(z, complex):
        re = Fraction(z.real).limit_denominator(10**9)
        im = Fraction(z.imag).limit_denominator(10**9)
    else:
        re, im = Fraction(z), Fraction(0)
    return [_frac_pair(re), _frac_pair(im)]


def _read_frac(pair) -> Fraction:
    return Fraction(pair[0], pair[1])


def _read_complex(pair) -> complex:
    return complex(float(_read_frac(pair[0])), float(_read_frac(pair[1])))


@dataclass(frozen=True)
class RotateBlock:
    points: tuple
    center: object
    angle: Fraction
    steps: int | None = None

    def record(self) -> dict:
        return {
            "kind": "rotate-block",
            "points": [_complex_pair(z) for z in self.points],
            "center": _complex_pair(self.center),
            "angle": _frac_pair(self.angle),
            "steps": self.steps,
        }


@dataclass(frozen=True)
class Encircle:
    movers: tuple
    around: tuple
    turns: Fraction
    steps: int | None = None
    center: object | None = None

    def record(self) -> dict:
        return {
            "kind": "encircle",
            "movers": [_complex_pair(z) for z in self.movers],
            "around": [_complex_pair(z) for z in self.around],
            "turns": _frac_pair(self.turns),
            "steps": self.steps,
            "center": None if self.center is None else _complex_pair(self.center),
        }


@dataclass(frozen=True)
class FrameIn:
    slots: tuple
    level: int
    steps: int | None = None
    pair_re: object | None = None
    pair_height: object | None = None

    def record(self) -> dict:
        return {
            "kind": "frame-in",
            "slots": [_complex_pair(z) for z in self.slots],
            "level": self.level,
            "steps": self.steps,
            "pair_re": None if self.pair_re is None else _frac_pair(Fraction(self.pair_re)),
            "pair_height": None
            if self.pair_height is None
            else _frac_pair(Fraction(self.pair_height)),
        }


@dataclass(frozen=True)
class FrameOut:
    frame: FrameIn

    def record(self) -> dict:
        rec = self.frame.record()
        rec["kind"] = "frame-out"
        return rec


Move = RotateBlock | Encircle | FrameIn | FrameOut


@dataclass(frozen=True)
class MotionProgram:
    """Declarative move sequence over a fixed point configuration.

    `points` is the full starting configuration; each move names its
    own participants, and every other point stays put during that move.
    Moves must keep the configuration consistent end to start, which
    Motion composition checks numerically.
    """

    points: tuple
    moves: tuple[Move, ...]

    def to_motion(self) -> Motion:
        config = [_as_complex(z) for z in self.points]
        total: Motion | None = None
        for mv in self.moves:
            m = self._motion_for(mv, config)
            config = self._match_config(config, m)
            total = m if total is None else compose_motions(total, m)
        if total is None:
            total = Motion.stationary(config)
        return total

    def braid(self) -> BraidWord:
        return motion_to_braid(self.to_motion())

    @staticmethod
    def _match_config(config: list[complex], m: Motion) -> list[complex]:
        starts = list(m.start)
        used = [False] * len(starts)
        scale = _scale(config)
        ends: list[complex] = []
        for z in config:
            best = None
            for k, s in enumerate(starts):
                if used[k]:
                    continue
                if abs(s - z) <= _MATCH_TOL * scale:
                    best = k
                    break
            if best is None:
                raise DegenerateMotionError("move does not start at the current configuration")
            used[best] = True
            ends.append(m.paths[best][-1])
        return ends

    @staticmethod
    def _motion_for(mv: Move, config: list[complex]) -> Motion:
        def rest(listed: Sequence[complex]) -> list[complex]:
            scale = _scale(config)
            out = list(config)
            for z in listed:
                zz = _as_complex(z)
                for k, w in enumerate(out):
                    if abs(w - zz) <= _MATCH_TOL * scale:
                        del out[k]
                        break
                else:
                    raise GeometryError("a listed point is absent from the configuration")
            return out

        if isinstance(mv, RotateBlock):
            return rotate_block_motion(
                mv.points, mv.center, mv.angle, mv.steps, others=rest(mv.points)
            )
        if isinstance(mv, Encircle):
            listed = list(mv.movers) + list(mv.around)
            return encircle_motion(
                mv.movers, mv.around, mv.turns, mv.steps,
                others=rest(listed), center=mv.center,
            )
        if isinstance(mv, FrameIn):
            pre, _ = complex_level_frame(
                mv.slots, mv.level, mv.steps, mv.pair_re, mv.pair_height
            )
            return pre
        if isinstance(mv, FrameOut):
            f = mv.frame
            _, post = complex_level_frame(
                f.slots, f.level, f.steps, f.pair_re, f.pair_height
            )
            return post
        raise GeometryError("unknown move kind %r" % (mv,))

    def records(self) -> list[dict]:
        return [mv.record() for mv in self.moves]

    @classmethod
    def from_records(cls, points: Sequence, records: Sequence[dict]) -> "MotionProgram":
        moves: list[Move] = []
        for rec in records:
            kind = rec["kind"]
            if kind == "rotate-block":
                moves.append(RotateBlock(
                    tuple(_read_complex(p) for p in rec["points"]),
                    _read_complex(rec["center"]),
                    _read_frac(rec["angle"]),
                    rec.get("steps"),
                ))
            elif kind == "encircle":
                center = rec.get("center")
                moves.append(Encircle(
                    tuple(_read_complex(p) for p in rec["movers"]),
                    tuple(_read_complex(p) for p in rec["around"]),
                    _read_frac(rec["turns"]),
                    rec.get("steps"),
                    None if center is None else _read_complex(center),
                ))
            elif kind in ("frame-in", "frame-out"):
                frame = FrameIn(
                    tuple(_read_complex(p) for p in rec["slots"]),
                    rec["level"],
                    rec.get("steps"),
                    None if rec.get("pair_re") is None else _read_frac(rec["pair_re"]),
                    None
                    if rec.get("pair_height") is None
                    else _read_frac(rec["pair_height"]),
                )
                moves.append(frame if kind == "frame-in" else FrameOut(frame))
            else:
                raise GeometryError("unknown move kind %r" % (kind,))
        return cls(tuple(points), tuple(moves))
