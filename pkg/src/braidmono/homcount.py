"""Counting homomorphisms into small finite groups.

The number of homomorphisms from a finitely presented group into each
member of a battery of small finite groups is a cheap, exactly
computable invariant.  Two presentations with matching counts across
the battery are reported Consistent; a single mismatch proves the
groups differ and is reported Inconsistent.

Generators that occur exactly once in some relator are eliminated
first (their image is forced), which keeps the brute-force enumeration
over the remaining generators small for every presentation produced in
this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import GroupTableError
from .presentations import Presentation, _solve_for, _substitute
from .words import FreeWord

__all__ = [
    "FiniteGroupTable",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "quaternion_group",
    "default_targets",
    "count_homomorphisms",
    "HomCountReport",
    "equivalence_evidence",
    "dump_targets",
    "load_targets",
]


@dataclass(frozen=True)
class FiniteGroupTable:
    """Finite group given by its multiplication table.

    table[a][b] is the product a*b; elements are 0..order-1.
    """

    order: int
    identity: int
    table: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise GroupTableError("group order must be positive")
        t = tuple(tuple(row) for row in self.table)
        if len(t) != n or any(len(row) != n for row in t):
            raise GroupTableError("table must be %d x %d" % (n, n))
        if any(not 0 <= v < n for row in t for v in row):
            raise GroupTableError("table entries must be elements 0..%d" % (n - 1))
        e = self.identity
        if not 0 <= e < n:
            raise GroupTableError("identity out of range")
        for a in range(n):
            if t[e][a] != a or t[a][e] != a:
                raise GroupTableError("identity axiom fails at element %d" % a)
        for a in range(n):
            if e not in t[a]:
                raise GroupTableError("element %d has no inverse" % a)
        arr = np.array(t, dtype=np.int64)
        # associativity: (a*b)*c == a*(b*c) for all triples
        left = arr[arr, :][:, :, :]
        right = arr[:, arr]
        if not np.array_equal(left, right):
            raise GroupTableError("table is not associative")
        object.__setattr__(self, "table", t)

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def array(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)


def _from_permutations(perms: list[tuple[int, ...]]) -> FiniteGroupTable:
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = []
    for a in perms:
        row = []
        for b in perms:
            # composition: apply a, then b
            c = tuple(b[x] for x in a)
            row.append(index[c])
        table.append(tuple(row))
    deg = len(perms[0])
    ident = index[tuple(range(deg))]
    return FiniteGroupTable(n, ident, tuple(table))


def cyclic_group(n: int) -> FiniteGroupTable:
    if n < 1:
        raise GroupTableError("cyclic group needs order >= 1")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroupTable(n, 0, table)


def dihedral_group(n: int) -> FiniteGroupTable:
    """Symmetries of a regular n-gon, order 2n."""
    if n < 2:
        raise GroupTableError("dihedral group needs n >= 2")
    perms = []
    base = list(range(n))
    for k in range(n):
        rot = tuple(base[(i + k) % n] for i in range(n))
        perms.append(rot)
    for k in range(n):
        ref = tuple(base[(k - i) % n] for i in range(n))
        perms.append(ref)
    return _from_permutations(perms)


def _all_perms(n: int) -> list[tuple[int, ...]]:
    from itertools import permutations

    return [tuple(p) for p in permutations(range(n))]


def symmetric_group(n: int) -> FiniteGroupTable:
    if not 1 <= n <= 5:
        raise GroupTableError("symmetric group supported for 1 <= n <= 5")
    return _from_permutations(_all_perms(n))


def alternating_group(n: int) -> FiniteGroupTable:
    if not 3 <= n <= 5:
        raise GroupTableError("alternating group supported for 3 <= n <= 5")

    def sign(p: tuple[int, ...]) -> int:
        s = 1
        for i in range(len(p)):
            for j in range(i + 1, len(p)):
                if p[i] > p[j]:
                    s = -s
        return s

    return _from_permutations([p for p in _all_perms(n) if sign(p) == 1])


def quaternion_group() -> FiniteGroupTable:
    """Order-8 quaternion group {1, -1, i, -i, j, -j, k, -k}."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a: str, b: str) -> str:
        sa, ua = (-1 if a.startswith("-") else 1), a.lstrip("-")
        sb, ub = (-1 if b.startswith("-") else 1), b.lstrip("-")
        rules = {
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
        s, u = rules[(ua, ub)]
        s *= sa * sb
        return u if s > 0 else "-" + u

    index = {nm: k for k, nm in enumerate(names)}
    table = tuple(
        tuple(index[mul(a, b)] for b in names) for a in names
    )
    return FiniteGroupTable(8, 0, table)


def default_targets() -> list[tuple[str, FiniteGroupTable]]:
    """Standard battery of ten small groups used for comparisons."""
    return [
        ("C2", cyclic_group(2)),
        ("C3", cyclic_group(3)),
        ("C4", cyclic_group(4)),
        ("C6", cyclic_group(6)),
        ("S3", symmetric_group(3)),
        ("D4", dihedral_group(4)),
        ("Q8", quaternion_group()),
        ("A4", alternating_group(4)),
        ("D6", dihedral_group(6)),
        ("S4", symmetric_group(4)),
    ]


def _eliminate(rank: int, relators: list[tuple[int, ...]]) -> tuple[int, list[tuple[int, ...]]]:
    """Remove generators forced by a relator containing them exactly once."""
    while True:
        pick = None
        for k, r in enumerate(relators):
            for g in range(1, rank + 1):
                expr = _solve_for(r, g)
                if expr is not None:
                    pick = (k, g, expr)
                    break
            if pick:
                break
        if not pick:
            return rank, relators
        k, g, expr = pick
        out = []
        for j, r in enumerate(relators):
            if j == k:
                continue
            out.append(_shift(_substitute(r, g, expr), g))
        relators = [r for r in out if r]
        rank -= 1


def _shift(letters: tuple[int, ...], gone: int) -> tuple[int, ...]:
    def remap(a: int) -> int:
        v = abs(a)
        v2 = v - 1 if v > gone else v
        return v2 if a > 0 else -v2

    return tuple(remap(a) for a in letters)


def count_homomorphisms(p: Presentation, group: FiniteGroupTable) -> int:
    """Exact number of homomorphisms from the presented group into `group`."""
    relators = [r.letters for r in p.relators if r.letters]
    rank, relators = _eliminate(p.rank, relators)
    n = group.order
    if rank == 0:
        # With no generators left every surviving relator is empty.
        return 1
    if not relators:
        return n**rank
    table = group.array()
    inv = np.array([group.inverse(a) for a in range(n)], dtype=np.int64)

    # Enumerate assignments for up to 4 generators at once; loop over
    # the leading generators beyond that.
    bulk = min(rank, 4)
    outer = rank - bulk
    grids = np.meshgrid(*([np.arange(n)] * bulk), indexing="ij")
    flat = [g.ravel() for g in grids]
    total = 0
    e = group.identity

    def eval_all(assign: list[np.ndarray]) -> np.ndarray:
        ok = np.ones(assign[0].shape, dtype=bool)
        for r in relators:
            acc = np.full(assign[0].shape, e, dtype=np.int64)
            for a in r:
                img = assign[abs(a) - 1]
                if a < 0:
                    img = inv[img]
                acc = table[acc, img]
            ok &= acc == e
        return ok

    if outer == 0:
        return int(eval_all(flat).sum())
    from itertools import product

    for head in product(range(n), repeat=outer):
        assign = [np.full(flat[0].shape, h, dtype=np.int64) for h in head] + flat
        total += int(eval_all(assign).sum())
    return total


@dataclass(frozen=True)
class HomCountReport:
    """Per-target counts for two presentations and the verdict."""

    targets: tuple[str, ...]
    left: tuple[int, ...]
    right: tuple[int, ...]

    @property
    def consistent(self) -> bool:
        return self.left == self.right

    @property
    def verdict(self) -> str:
        return "Consistent" if self.consistent else "Inconsistent"

    def lines(self) -> list[str]:
        out = []
        for name, a, b in zip(self.targets, self.left, self.right):
            mark = "==" if a == b else "!="
            out.append("%-4s %6d %s %-6d" % (name, a, mark, b))
        return out


def equivalence_evidence(
    p: Presentation,
    q: Presentation,
    targets: Sequence[tuple[str, FiniteGroupTable]] | None = None,
) -> HomCountReport:
    """Compare hom counts of two presentations over the target battery."""
    tg = list(targets) if targets is not None else default_targets()
    names = tuple(name for name, _ in tg)
    left = tuple(count_homomorphisms(p, g) for _, g in tg)
    right = tuple(count_homomorphisms(q, g) for _, g in tg)
    return HomCountReport(names, left, right)


def dump_targets(targets: Sequence[tuple[str, FiniteGroupTable]]) -> str:
    """Serialise a target battery: name, order, identity, then table rows."""
    blocks = []
    for name, g in targets:
        lines = ["group %s" % name, "order %d" % g.order, "identity %d" % g.identity]
        for row in g.table:
            lines.append(" ".join(str(v) for v in row))
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"


def load_targets(text: str) -> list[tuple[str, FiniteGroupTable]]:
    out = []
    for block in text.strip().split("\n\n"):
        lines = [ln.strip() for ln in block.strip().splitlines() if ln.strip()]
        if len(lines) < 4 or not lines[0].startswith("group "):
            raise GroupTableError("malformed target block: %r" % block[:40])
        name = lines[0].split(None, 1)[1]
        order = int(lines[1].split()[1])
        identity = int(lines[2].split()[1])
        rows = tuple(tuple(int(v) for v in ln.split()) for ln in lines[3:])
        out.append((name, FiniteGroupTable(order, identity, rows)))
    return out
