"""Finite presentations and Tietze-style simplification.

Relators live in a fixed free group; the generator set never changes
during simplification, because the presentations produced downstream
keep one generator per curve branch.  Simplification therefore uses
only relator-level moves: canonical cyclic reduction, substitution of
a generator expressed by one relator into the others, length-reducing
relator products, and dropping relators derivable from the rest.

Derivability (membership in the normal closure) is checked by a
best-first search on cyclic words and returns Derivable or Unknown,
never a false positive.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, MalformedWordError
from .words import FreeWord, free_reduce

__all__ = [
    "Presentation",
    "SimplifyResult",
    "Verdict",
    "canonical_relator",
    "simplify",
    "is_consequence",
    "kill_generator",
]

DEFAULT_MAX_LEN = 64
DEFAULT_BUDGET = 100_000


def _cyclic_reduce(letters: tuple[int, ...]) -> tuple[int, ...]:
    ls = list(letters)
    while len(ls) >= 2 and ls[0] == -ls[-1]:
        ls = ls[1:-1]
    return tuple(ls)


def _rotations(letters: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(letters)
    if n == 0:
        return [()]
    return [letters[k:] + letters[:k] for k in range(n)]


def _invert(letters: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(-a for a in reversed(letters))


def canonical_relator(w: FreeWord) -> FreeWord:
    """Lexicographically least cyclic rotation of the relator or its inverse.

    Two relators define the same normal closure element up to conjugacy
    and inversion exactly when their canonical forms coincide.
    """
    core = _cyclic_reduce(w.letters)
    if not core:
        return FreeWord(w.rank, ())
    best = min(_rotations(core) + _rotations(_invert(core)))
    return FreeWord(w.rank, best)


@dataclass(frozen=True)
class Presentation:
    """Group presentation with generators x1..x_rank and explicit relators."""

    rank: int
    relators: tuple[FreeWord, ...]

    def __post_init__(self) -> None:
        if self.rank < 0:
            raise MalformedWordError("rank must be nonnegative")
        rels = []
        for r in self.relators:
            if not isinstance(r, FreeWord):
                r = FreeWord(self.rank, tuple(r))
            if r.rank != self.rank:
                raise DimensionMismatchError(
                    "relator rank %d does not match presentation rank %d"
                    % (r.rank, self.rank)
                )
            rels.append(r)
        object.__setattr__(self, "relators", tuple(rels))

    def canonical_relator_set(self) -> frozenset[tuple[int, ...]]:
        return frozenset(
            canonical_relator(r).letters for r in self.relators if r.letters
        )

    def same_relators(self, other: "Presentation") -> bool:
        return (
            self.rank == other.rank
            and self.canonical_relator_set() == other.canonical_relator_set()
        )

    def __str__(self) -> str:
        gens = ", ".join("x%d" % (i + 1) for i in range(self.rank))
        rels = "; ".join(_word_str(r) for r in self.relators) or "-"
        return "< %s | %s >" % (gens, rels)


def _word_str(w: FreeWord) -> str:
    if not w.letters:
        return "1"
    parts = []
    for a in w.letters:
        parts.append("x%d" % a if a > 0 else "x%d^-1" % -a)
    return " ".join(parts)


class Verdict(Enum):
    DERIVABLE = "Derivable"
    UNKNOWN = "Unknown"


def is_consequence(
    relators: Sequence[FreeWord],
    word: FreeWord,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    budget: int = DEFAULT_BUDGET,
) -> Verdict:
    """Search for a derivation of `word` from the normal closure of `relators`.

    States are cyclic words; successors multiply by a cyclic rotation
    of a relator or its inverse.  Best-first on length, so a Derivable
    answer is a genuine derivation; Unknown only means the budget ran
    out.
    """
    target = _cyclic_reduce(free_reduce(word).letters)
    if not target:
        return Verdict.DERIVABLE
    by_first: dict[int, list[tuple[int, ...]]] = {}
    seen_m = set()
    for r in relators:
        core = _cyclic_reduce(free_reduce(r).letters)
        if not core:
            continue
        for rot in _rotations(core) + _rotations(_invert(core)):
            if rot not in seen_m:
                seen_m.add(rot)
                by_first.setdefault(rot[0], []).append(rot)
    if not seen_m:
        return Verdict.UNKNOWN

    def norm(ls: tuple[int, ...]) -> tuple[int, ...]:
        core = _cyclic_reduce(ls)
        if not core:
            return ()
        return min(_rotations(core))

    start = norm(target)
    seen = {start}
    heap: list[tuple[int, int, tuple[int, ...]]] = [(len(start), 0, start)]
    expanded = 0
    tick = 0
    while heap and expanded < budget:
        _, _, state = heapq.heappop(heap)
        expanded += 1
        # Only multiply where the junction cancels: rotate the state so
        # it ends in letter a, then append a multiplier starting with
        # -a.  Products without cancellation never shorten anything and
        # are skipped, which keeps the frontier small; the cost is that
        # an exhausted search reports Unknown rather than a proof of
        # independence.
        for end in range(len(state)):
            rot_state = state[end + 1 :] + state[: end + 1]
            a = rot_state[-1]
            for m in by_first.get(-a, ()):
                nxt = norm(_reduce_concat(rot_state, m))
                if not nxt:
                    return Verdict.DERIVABLE
                if len(nxt) > max_len or nxt in seen:
                    continue
                seen.add(nxt)
                tick += 1
                heapq.heappush(heap, (len(nxt), tick, nxt))
    return Verdict.UNKNOWN


def _reduce_concat(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = list(a)
    for x in b:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    moves: tuple[str, ...]
    truncated: bool


def _substitute(
    letters: tuple[int, ...], gen: int, image: tuple[int, ...]
) -> tuple[int, ...]:
    """Replace every occurrence of +-gen by image / its inverse."""
    out: list[int] = []
    inv = _invert(image)
    for a in letters:
        if a == gen:
            seq: Iterable[int] = image
        elif a == -gen:
            seq = inv
        else:
            seq = (a,)
        for x in seq:
            if out and out[-1] == -x:
                out.pop()
            else:
                out.append(x)
    return tuple(out)


def _solve_for(letters: tuple[int, ...], gen: int) -> tuple[int, ...] | None:
    """If gen occurs exactly once in the relator, express gen as a word
    in the remaining generators."""
    hits = [k for k, a in enumerate(letters) if abs(a) == gen]
    if len(hits) != 1:
        return None
    k = hits[0]
    u, s, v = letters[:k], letters[k], letters[k + 1 :]
    # u g v = 1  =>  g = u^-1 v^-1 ; for g^-1 invert the result.
    expr = _reduce_concat(_invert(u), _invert(v))
    if s < 0:
        expr = _invert(expr)
    return expr


def simplify(
    p: Presentation,
    *,
    max_len: int = DEFAULT_MAX_LEN,
    budget: int = DEFAULT_BUDGET,
) -> SimplifyResult:
    """Shorten and prune relators without touching the generator set.

    Deterministic: phases run in a fixed order and each phase scans
    relators in a fixed order, restarting after every applied move.
    """
    moves: list[str] = []
    truncated = False
    rels: list[tuple[int, ...]] = []
    for r in p.relators:
        c = canonical_relator(r).letters
        if not c:
            if r.letters:
                moves.append("drop trivial relator %s" % _word_str(r))
            continue
        if c in rels:
            moves.append("drop duplicate relator %s" % _word_str(r))
            continue
        if c != r.letters:
            moves.append(
                "canonicalise %s -> %s"
                % (_word_str(r), _word_str(FreeWord(p.rank, c)))
            )
        rels.append(c)

    guard = 0
    while True:
        guard += 1
        if guard > 10_000:
            truncated = True
            break
        changed = False

        # Drop relators derivable from the others, longest first.  The
        # inner searches get a small budget and a tight length cap:
        # genuine dependencies resolve in a handful of expansions, and
        # hopeless ones should fail fast.
        drop_budget = min(budget, 2000)
        drop_len = min(max_len, 2 * max((len(r) for r in rels), default=0) + 4)
        order = sorted(range(len(rels)), key=lambda k: (-len(rels[k]), -k))
        for k in order:
            rest = [FreeWord(p.rank, r) for i, r in enumerate(rels) if i != k]
            if not rest:
                continue
            verdict = is_consequence(
                rest, FreeWord(p.rank, rels[k]), max_len=drop_len, budget=drop_budget
            )
            if verdict is Verdict.DERIVABLE:
                moves.append(
                    "drop derivable relator %s" % _word_str(FreeWord(p.rank, rels[k]))
                )
                del rels[k]
                changed = True
                break
        if changed:
            continue

        # Use a relator that pins down a generator to shorten others.
        donors = sorted(
            (
                (len(r), g, k)
                for k, r in enumerate(rels)
                for g in range(1, p.rank + 1)
                if _solve_for(r, g) is not None
            ),
        )
        for _, g, k in donors:
            expr = _solve_for(rels[k], g)
            for j, s in enumerate(rels):
                if j == k:
                    continue
                cand = canonical_relator(
                    FreeWord(p.rank, _substitute(s, g, expr))
                ).letters
                if cand and len(cand) < len(s) and cand not in rels:
                    moves.append(
                        "substitute x%d from %s into %s"
                        % (g, _word_str(FreeWord(p.rank, rels[k])),
                           _word_str(FreeWord(p.rank, s)))
                    )
                    rels[j] = cand
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue

        # Length-reducing products with rotations of other relators.
        for j, s in enumerate(rels):
            for k, r in enumerate(rels):
                if j == k:
                    continue
                for m in _rotations(r) + _rotations(_invert(r)):
                    cand = canonical_relator(
                        FreeWord(p.rank, _reduce_concat(s, m))
                    ).letters
                    if cand and len(cand) < len(s) and cand not in rels:
                        moves.append(
                            "multiply %s by a conjugate of %s"
                            % (_word_str(FreeWord(p.rank, s)),
                               _word_str(FreeWord(p.rank, rels[k])))
                        )
                        rels[j] = cand
                        changed = True
                        break
                if changed:
                    break
            if changed:
                break
        if not changed:
            break

    out = Presentation(p.rank, tuple(FreeWord(p.rank, r) for r in rels))
    return SimplifyResult(out, tuple(moves), truncated)


def kill_generator(p: Presentation, gen: int) -> Presentation:
    """Set generator `gen` to the identity and renumber the rest."""
    if not 1 <= gen <= p.rank:
        raise DimensionMismatchError("no generator x%d in rank %d" % (gen, p.rank))
    new_rank = p.rank - 1

    def remap(a: int) -> int:
        g = abs(a)
        ng = g - 1 if g > gen else g
        return ng if a > 0 else -ng

    rels = []
    for r in p.relators:
        kept = tuple(remap(a) for a in r.letters if abs(a) != gen)
        w = FreeWord(new_rank, kept)
        if w.letters:
            rels.append(w)
    return Presentation(new_rank, tuple(rels))
