"""Executable fixtures for the catalogued tangential singularities.

Each fixture bundles a local equation, a declarative model motion
program for the expected braid, a half-loop (degeneration) program,
the expected final relation set, and the bookkeeping claims that go
with it: which raw relation is redundant and which generator deletions
reproduce which smaller catalogue entries.

verify_fixture replays everything end to end: it tracks the curve,
compares the tracked braid with the model (exactly for real-fiber
configurations, by homomorphism counts when the fiber has complex
points and the model works in a rearranged frame), compares induced
and expected presentations, checks redundancy derivability, deletion
consequences, and the half-loop against its program or the doubling
identity.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .curves import CurveSpec, parse_curve
from .errors import BraidMonoError, CapacityError, ParseError
from .homcount import FiniteGroupTable, equivalence_evidence
from .motion import Encircle, FrameIn, FrameOut, MotionProgram, RotateBlock
from .presentations import (
    Presentation,
    Verdict,
    is_consequence,
    kill_generator,
)
from .tracker import LoopSpec, lefschetz_braid, local_braid_monodromy
from .vankampen import braid_images, induced_presentation
from .words import BraidWord, FreeWord, braid_equal

__all__ = [
    "Fixture",
    "CheckResult",
    "VerificationReport",
    "fixtures",
    "fixture_by_id",
    "n_tangency_fixture",
    "verify_fixture",
    "fixture_text",
    "fixture_from_text",
]

F = Fraction


def _w(rank: int, *letters: int) -> FreeWord:
    return FreeWord(rank, tuple(letters))


def _eq(rank: int, lhs: Sequence[int], rhs: Sequence[int]) -> FreeWord:
    return _w(rank, *lhs) * _w(rank, *rhs).inverse()


def _chain(rank: int, *words: Sequence[int]) -> list[FreeWord]:
    """Relators equating every listed word to the first one."""
    return [_eq(rank, words[0], w) for w in words[1:]]


@dataclass(frozen=True)
class Fixture:
    """One catalogued singularity with everything needed to verify it."""

    fixture_id: str
    equation: str
    shear: Fraction
    complex_level: int
    model_program: MotionProgram
    lefschetz_program: MotionProgram
    lefschetz_doubling: bool
    expected_relations: Presentation
    redundancy_claims: tuple[int, ...]
    deletion_checks: tuple[tuple[int, Presentation], ...]

    def __post_init__(self) -> None:
        n = len(self.model_program.points)
        if self.expected_relations.rank != n:
            raise ParseError(
                "fixture %s: %d strands but expected relations have rank %d"
                % (self.fixture_id, n, self.expected_relations.rank)
            )

    @property
    def curve(self) -> CurveSpec:
        return parse_curve(self.equation, self.shear)

    @property
    def strands(self) -> int:
        return len(self.model_program.points)


def _principal_fixtures() -> list[Fixture]:
    out = []

    # Two smooth conics meeting at a single tangency point.
    out.append(Fixture(
        fixture_id="two-tangent-conics",
        equation="(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-1, 1), (RotateBlock((-1, 1), 0, F(4)),)),
        lefschetz_program=MotionProgram((-1, 1), (RotateBlock((-1, 1), 0, F(2)),)),
        lefschetz_doubling=True,
        expected_relations=Presentation(2, (_eq(2, (1, 2, 1, 2), (2, 1, 2, 1)),)),
        redundancy_claims=(),
        deletion_checks=(),
    ))

    # Tangent conics with a secant line passing below the tangency.
    exp31 = Presentation(3, (
        _eq(3, (1, 3, 2), (3, 2, 1)),
        _eq(3, (3, 2, 1, 3, 2), (2, 3, 2, 1, 3)),
    ))
    out.append(Fixture(
        fixture_id="tangent-conics-secant-below",
        equation="(2x+y)(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-2, -1, 1), (
            RotateBlock((-1, 1), 0, F(4)),
            Encircle((-2,), (-1, 1), F(1)),
        )),
        lefschetz_program=MotionProgram((-1, 1, 2), (
            RotateBlock((-1, 1), 0, F(2)),
            Encircle((2,), (-1, 1), F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp31,
        redundancy_claims=(3,),
        deletion_checks=(),
    ))

    # Tangent conics with a secant line passing above the tangency.
    exp32 = Presentation(3, (
        _eq(3, (3, 2, 1), (2, 1, 3)),
        _eq(3, (3, 2, 1, 2, 1), (1, 3, 2, 1, 2)),
    ))
    out.append(Fixture(
        fixture_id="tangent-conics-secant-above",
        equation="(2x-y)(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-1, 1, 2), (
            RotateBlock((-1, 1), 0, F(4)),
            Encircle((2,), (-1, 1), F(1)),
        )),
        lefschetz_program=MotionProgram((-2, -1, 1), (
            RotateBlock((-1, 1), 0, F(2)),
            Encircle((-2,), (-1, 1), F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp32,
        redundancy_claims=(),
        deletion_checks=(),
    ))

    # Line tangent to a conic pair at a vertical-tangency point; the
    # fiber has two complex points, so the model works with the pair
    # lifted off the axis (complex level 2).
    exp33 = Presentation(5, (
        _eq(5, (4, 3, 2), (2, 4, 3)),
        _eq(5, (3, 2, 4, 3, 4), (4, 3, 2, 4, 3)),
        _eq(5, (1,), (4, 3, -4)),
        _eq(5, (4,), (5,)),
    ))
    frame33 = FrameIn((-2, -1, 0, 1, 2), 2, None, F(-1), F(1, 2))
    out.append(Fixture(
        fixture_id="vertical-tangency",
        equation="y(y^2+x)(y^2-x)",
        shear=F(0),
        complex_level=2,
        model_program=MotionProgram((-2, -1, 0, 1, 2), (
            frame33,
            RotateBlock((-2, 0, complex(-1, 0.5), complex(-1, -0.5)), -1, F(1)),
            FrameOut(frame33),
        )),
        lefschetz_program=MotionProgram((-1, -1j, 0, 1j, 1), (
            RotateBlock((1, -1, 1j, -1j), 0, F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp33,
        redundancy_claims=(5,),
        deletion_checks=(),
    ))

    # Three branches (line plus two conics) with a common tangent.
    trio = Presentation(3, tuple(_chain(
        3, (3, 2, 1, 3, 2, 1), (1, 3, 2, 1, 3, 2), (2, 1, 3, 2, 1, 3)
    )))
    out.append(Fixture(
        fixture_id="triple-tangency",
        equation="y(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-1, 0, 1), (RotateBlock((-1, 1), 0, F(4)),)),
        lefschetz_program=MotionProgram((-1, 0, 1), (RotateBlock((-1, 1), 0, F(2)),)),
        lefschetz_doubling=True,
        expected_relations=trio,
        redundancy_claims=(3,),
        deletion_checks=(),
    ))

    # Triple tangency plus a secant below.
    exp411 = Presentation(4, (
        _eq(4, (1, 4, 3, 2), (4, 3, 2, 1)),
        *_chain(4, (4, 3, 2, 4, 3, 2, 1), (3, 2, 4, 3, 2, 1, 4), (2, 4, 3, 2, 1, 4, 3)),
    ))
    out.append(Fixture(
        fixture_id="triple-tangency-secant-below",
        equation="y(2x+y)(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-2, -1, 0, 1), (
            RotateBlock((-1, 1), 0, F(4)),
            Encircle((-2,), (-1, 0, 1), F(1)),
        )),
        lefschetz_program=MotionProgram((-1, 0, 1, 2), (
            RotateBlock((-1, 1), 0, F(2)),
            Encircle((2,), (-1, 0, 1), F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp411,
        redundancy_claims=(4,),
        deletion_checks=((1, trio), (3, exp31)),
    ))

    # Triple tangency plus a secant above.
    exp412 = Presentation(4, (
        _eq(4, (4, 3, 2, 1), (3, 2, 1, 4)),
        *_chain(4, (3, 2, 1, 3, 2, 1, 4), (2, 1, 3, 2, 1, 4, 3), (1, 3, 2, 1, 4, 3, 2)),
    ))
    out.append(Fixture(
        fixture_id="triple-tangency-secant-above",
        equation="y(2x-y)(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-1, 0, 1, 2), (
            RotateBlock((-1, 1), 0, F(4)),
            Encircle((2,), (-1, 0, 1), F(1)),
        )),
        lefschetz_program=MotionProgram((-2, -1, 0, 1), (
            RotateBlock((-1, 1), 0, F(2)),
            Encircle((-2,), (-1, 0, 1), F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp412,
        redundancy_claims=(),
        deletion_checks=(),
    ))

    # Triple tangency crossed by the vertical line through the point.
    # Tracked in swapped coordinates with a small shear making the
    # line factor proper; the tangency pair is complex over the
    # basepoint (complex level 2).
    exp413 = Presentation(6, (
        _eq(6, (5, 4, 3, 2), (2, 5, 4, 3)),
        *_chain(6, (3, 5, 4, 3, 2, 5, 4), (5, 4, 3, 2, 5, 4, 3), (4, 3, 5, 4, 3, 2, 5)),
        _eq(6, (1,), (5, 4, 3, -4, -5)),
        _eq(6, (5,), (6,)),
    ))
    trio543 = Presentation(3, tuple(_chain(
        3, (3, 2, 1, 3, 2, 1), (2, 1, 3, 2, 1, 3), (1, 3, 2, 1, 3, 2)
    )))
    frame413 = FrameIn((-2, -1, 0, 1, 2, 3), 2, None, F(-1), F(1, 2))
    quartet413 = (F(-201, 200), F(199, 200), F(1, 200) - 1j, F(1, 200) + 1j)
    c413 = complex(F(-1, 200))
    turned413 = tuple(c413 + 1j * (complex(z) - c413) for z in quartet413)
    out.append(Fixture(
        fixture_id="triple-tangency-vertical-line",
        equation="(x)(y)(x+y^2)(x-y^2)",
        shear=F(1, 100),
        complex_level=2,
        model_program=MotionProgram((-2, -1, 0, 1, 2, 3), (
            frame413,
            Encircle((1,), (-2, -1, 0, complex(-1, 0.5), complex(-1, -0.5)), F(1), None, -1),
            RotateBlock((-2, 0, complex(-1, 0.5), complex(-1, -0.5)), -1, F(1)),
            FrameOut(frame413),
        )),
        lefschetz_program=MotionProgram(
            (F(-201, 200), 0, F(1, 200) - 1j, F(1, 200) + 1j, F(199, 200), 100),
            (
                RotateBlock(quartet413, F(-1, 200), F(1, 2)),
                Encircle((100,), turned413 + (0,), F(1, 2), None, 0),
            ),
        ),
        lefschetz_doubling=False,
        expected_relations=exp413,
        redundancy_claims=(6,),
        deletion_checks=((2, trio543), (4, exp33)),
    ))

    # Tangent conics with two secants, one below and one above.
    exp421 = Presentation(4, (
        *_chain(4, (4, 3, 2, 1), (1, 4, 3, 2), (3, 2, 1, 4)),
        _eq(4, (4, 3, 2, 1, 3, 2), (2, 4, 3, 2, 1, 3)),
    ))
    out.append(Fixture(
        fixture_id="double-secant",
        equation="(2x+y)(2x-y)(y+x^2)(y-x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-2, -1, 1, 2), (
            RotateBlock((-1, 1), 0, F(4)),
            Encircle((-2, 2), (-1, 1), F(1)),
        )),
        lefschetz_program=MotionProgram((-2, -1, 1, 2), (
            RotateBlock((-1, 1), 0, F(2)),
            Encircle((-2, 2), (-1, 1), F(1, 2)),
        )),
        lefschetz_doubling=False,
        expected_relations=exp421,
        redundancy_claims=(3,),
        deletion_checks=((1, exp32), (4, exp31)),
    ))

    # Vertical tangency with an extra transversal line; the model
    # nests a full twist of the middle pair inside the outer half
    # rotation (complex level 2).
    exp422 = Presentation(6, (
        *_chain(6, (5, 4, 3, 2), (2, 5, 4, 3), (3, 2, 5, 4)),
        _eq(6, (4, 5, 4, 3, 2, 5), (5, 4, 3, 2, 5, 4)),
        _eq(6, (1,), (5, 4, -5)),
        _eq(6, (5,), (6,)),
    ))
    frame422 = FrameIn((-2, F(-1, 2), F(1, 2), 2, 3, 4), 2, None, F(0), F(1))
    out.append(Fixture(
        fixture_id="vertical-tangency-line-pair",
        equation="y(x+2y)(y^2+x)(y^2-x)",
        shear=F(0),
        complex_level=2,
        model_program=MotionProgram((-2, F(-1, 2), F(1, 2), 2, 3, 4), (
            frame422,
            RotateBlock((-2, 2, 1j, -1j), 0, F(1)),
            RotateBlock((F(-1, 2), F(1, 2)), 0, F(2)),
            FrameOut(frame422),
        )),
        lefschetz_program=MotionProgram((-1, -1j, 0, 1j, F(1, 2), 1), (
            RotateBlock((1, -1, 1j, -1j), 0, F(1, 2)),
            Encircle((F(1, 2),), (0,), F(1, 2), None, 0),
        )),
        lefschetz_doubling=False,
        expected_relations=exp422,
        redundancy_claims=(6,),
        deletion_checks=((2, exp33), (3, exp33)),
    ))

    # Remark variants: one conic of the tangent pair replaced by its
    # tangent line, same braid and relations as the parent fixtures.
    out.append(Fixture(
        fixture_id="conic-line-tangency-secant-below",
        equation="y(2x+y)(y+x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-2, -1, 0), (
            RotateBlock((-1, 0), F(-1, 2), F(4)),
            Encircle((-2,), (-1, 0), F(1)),
        )),
        lefschetz_program=MotionProgram((-1, 0, 2), (
            RotateBlock((-1, 0), F(-1, 2), F(2)),
            Encircle((2,), (-1, 0), F(1, 2), None, 0),
        )),
        lefschetz_doubling=False,
        expected_relations=exp31,
        redundancy_claims=(),
        deletion_checks=(),
    ))
    out.append(Fixture(
        fixture_id="conic-line-tangency-secant-above",
        equation="y(2x-y)(y+x^2)",
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram((-1, 0, 2), (
            RotateBlock((-1, 0), F(-1, 2), F(4)),
            Encircle((2,), (-1, 0), F(1)),
        )),
        lefschetz_program=MotionProgram((-2, -1, 0), (
            RotateBlock((-1, 0), F(-1, 2), F(2)),
            Encircle((-2,), (-1, 0), F(1, 2), None, 0),
        )),
        lefschetz_doubling=False,
        expected_relations=exp32,
        redundancy_claims=(),
        deletion_checks=(),
    ))
    return out


def fixtures() -> list[Fixture]:
    """The ten principal fixtures plus the two remark variants."""
    return _principal_fixtures()


def fixture_by_id(fixture_id: str) -> Fixture:
    for f in fixtures():
        if f.fixture_id == fixture_id:
            return f
    if fixture_id.startswith("n-tangency-"):
        try:
            n = int(fixture_id.rsplit("-", 1)[1])
        except ValueError:
            raise ParseError("unknown fixture id %r" % fixture_id) from None
        return n_tangency_fixture(n)
    raise ParseError("unknown fixture id %r" % fixture_id)


def n_tangency_fixture(n: int) -> Fixture:
    """n smooth branches sharing a tangent: y = k*x^2 for k = 1..n."""
    if not 2 <= n <= 6:
        raise CapacityError("n-tangency fixtures support 2 <= n <= 6")
    parts = []
    for k in range(1, n + 1):
        parts.append("(y-x^2)" if k == 1 else "(y-%dx^2)" % k)
    base = tuple(range(n, 0, -1))
    cyc = [base]
    for _ in range(n - 1):
        prev = cyc[-1]
        cyc.append((prev[-1],) + prev[:-1])
    expected = Presentation(n, tuple(_chain(n, *[w + w for w in cyc])))
    pts = tuple(range(1, n + 1))
    return Fixture(
        fixture_id="n-tangency-%d" % n,
        equation="".join(parts),
        shear=F(0),
        complex_level=0,
        model_program=MotionProgram(pts, (RotateBlock(pts, 0, F(4)),)),
        lefschetz_program=MotionProgram(pts, (RotateBlock(pts, 0, F(2)),)),
        lefschetz_doubling=True,
        expected_relations=expected,
        redundancy_claims=(),
        deletion_checks=(),
    )


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerificationReport:
    fixture_id: str
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            out.append("%-4s %s %s: %s" % (status, self.fixture_id, c.name, c.detail))
        return out


def _raw_relators(braid: BraidWord) -> list[FreeWord]:
    """One relator per strand, trivial ones kept (for claim indexing)."""
    n = braid.strands
    return [
        FreeWord.generator(n, j).inverse() * img
        for j, img in enumerate(braid_images(braid), start=1)
    ]


def verify_fixture(
    f: Fixture,
    *,
    center: complex = 0j,
    radius: Fraction = F(1),
    targets: Sequence[tuple[str, FiniteGroupTable]] | None = None,
) -> VerificationReport:
    checks: list[CheckResult] = []
    loop = LoopSpec(center, radius)
    model_braid = f.model_program.braid()

    tracked = None
    try:
        tracked = local_braid_monodromy(f.curve, loop)
    except BraidMonoError as e:
        checks.append(CheckResult(
            "tracked-vs-model", False, "tracking failed: %s" % e))

    if tracked is not None:
        if f.complex_level == 0:
            if braid_equal(tracked, model_braid):
                checks.append(CheckResult(
                    "tracked-vs-model", True,
                    "braid words agree (%d letters)" % len(model_braid.letters)))
            else:
                rep = equivalence_evidence(
                    induced_presentation(tracked),
                    induced_presentation(model_braid), targets)
                if rep.consistent:
                    checks.append(CheckResult(
                        "tracked-vs-model", True,
                        "braid words differ but presentations are consistent "
                        "(conjugate realization)"))
                else:
                    checks.append(CheckResult(
                        "tracked-vs-model", False, "braids and counts differ"))
        else:
            rep = equivalence_evidence(
                induced_presentation(tracked),
                induced_presentation(model_braid), targets)
            checks.append(CheckResult(
                "tracked-vs-model", rep.consistent,
                "hom counts %s" % rep.verdict))

    rep = equivalence_evidence(
        induced_presentation(model_braid), f.expected_relations, targets)
    checks.append(CheckResult(
        "model-vs-expected", rep.consistent, "hom counts %s" % rep.verdict))

    raws = _raw_relators(model_braid)
    for k in f.redundancy_claims:
        rest = [r for j, r in enumerate(raws, start=1) if j != k and r.letters]
        verdict = is_consequence(rest, raws[k - 1])
        checks.append(CheckResult(
            "redundancy-%d" % k, verdict is Verdict.DERIVABLE,
            "relation %d %s from the others" % (k, verdict.value)))

    for gen, expected_small in f.deletion_checks:
        rep = equivalence_evidence(
            kill_generator(f.expected_relations, gen), expected_small, targets)
        checks.append(CheckResult(
            "deletion-x%d" % gen, rep.consistent, "hom counts %s" % rep.verdict))

    half = None
    try:
        half = lefschetz_braid(f.curve, loop)
    except BraidMonoError as e:
        checks.append(CheckResult("lefschetz", False, "tracking failed: %s" % e))
    if half is not None:
        ok = braid_equal(half, f.lefschetz_program.braid())
        checks.append(CheckResult(
            "lefschetz-program", ok,
            "half-loop braid %s the program" % ("matches" if ok else "differs from")))
        if f.lefschetz_doubling and tracked is not None:
            ok = braid_equal(half * half, tracked)
            checks.append(CheckResult(
                "lefschetz-doubling", ok,
                "half squared %s the full loop" % ("equals" if ok else "differs from")))

    return VerificationReport(f.fixture_id, tuple(checks))


def _complex_json(z: complex) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def fixture_text(f: Fixture) -> str:
    """Structured text export: line-delimited key=value records."""
    lines = [
        "id=%s" % f.fixture_id,
        "equation=%s" % f.equation,
        "shear=%s" % f.shear,
        "complex-level=%d" % f.complex_level,
        "points=%s" % json.dumps([_complex_json(z) for z in f.model_program.points]),
        "model-moves=%s" % json.dumps(f.model_program.records()),
        "lefschetz-points=%s"
        % json.dumps([_complex_json(z) for z in f.lefschetz_program.points]),
        "lefschetz-moves=%s" % json.dumps(f.lefschetz_program.records()),
        "lefschetz-doubling=%s" % ("true" if f.lefschetz_doubling else "false"),
        "expected-rank=%d" % f.expected_relations.rank,
        "expected-relators=%s"
        % json.dumps([list(r.letters) for r in f.expected_relations.relators]),
        "redundancy-claims=%s" % json.dumps(list(f.redundancy_claims)),
        "deletion-checks=%s" % json.dumps([
            [gen, p.rank, [list(r.letters) for r in p.relators]]
            for gen, p in f.deletion_checks
        ]),
    ]
    return "\n".join(lines) + "\n"


def fixture_from_text(text: str) -> Fixture:
    kv: dict[str, str] = {}
    for line in text.strip().splitlines():
        line = line.strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError("malformed fixture line %r" % line)
        k, v = line.split("=", 1)
        kv[k] = v
    try:
        points = tuple(complex(a, b) for a, b in json.loads(kv["points"]))
        lpoints = tuple(complex(a, b) for a, b in json.loads(kv["lefschetz-points"]))
        rank = int(kv["expected-rank"])
        expected = Presentation(rank, tuple(
            FreeWord(rank, tuple(ls)) for ls in json.loads(kv["expected-relators"])
        ))
        deletions = tuple(
            (gen, Presentation(r, tuple(FreeWord(r, tuple(ls)) for ls in rels)))
            for gen, r, rels in json.loads(kv["deletion-checks"])
        )
        return Fixture(
            fixture_id=kv["id"],
            equation=kv["equation"],
            shear=Fraction(kv["shear"]),
            complex_level=int(kv["complex-level"]),
            model_program=MotionProgram.from_records(
                points, json.loads(kv["model-moves"])),
            lefschetz_program=MotionProgram.from_records(
                lpoints, json.loads(kv["lefschetz-moves"])),
            lefschetz_doubling=kv["lefschetz-doubling"] == "true",
            expected_relations=expected,
            redundancy_claims=tuple(json.loads(kv["redundancy-claims"])),
            deletion_checks=deletions,
        )
    except (KeyError, ValueError, json.JSONDecodeError) as e:
        raise ParseError("malformed fixture text: %s" % e) from None
