"""Multi-fold list coloring: validation, exact search, and adversarial choosability.

A g-fold coloring assigns each vertex v a set C(v) of g(v) colors from its
list L(v), with adjacent color sets disjoint.  Choosability is decided at
desk scale by enumerating list assignments up to color renaming: a canonical
representative per class is realized from a Venn-cell cardinality vector
(one cell per nonempty vertex subset S, of size n_S, with the cells of all
subsets containing v partitioning L(v)).
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field
from typing import Iterator

from .plane import PlaneGraph

DEFAULT_MAX_CELLS = 10 ** 8
ENV_MAX_CELLS = "CHOOSELAB_MAX_CELLS"


class TooLarge(RuntimeError):
    """The canonical enumeration would exceed the configured cap."""


# -- violations (returned as data, never raised) -------------------------

@dataclass(frozen=True)
class SizeShort:
    v: int


@dataclass(frozen=True)
class NotInList:
    v: int


@dataclass(frozen=True)
class EdgeConflict:
    u: int
    v: int


def validate_coloring(G: PlaneGraph, lists: dict[int, frozenset[int]],
                      demand: dict[int, int],
                      coloring: dict[int, frozenset[int]]):
    """Check that `coloring` is a full (L, g)-coloring.

    Returns (True, None) or (False, first violation) with violations checked
    in the order: size, containment, edge conflicts (smallest vertices first).
    """
    for v in sorted(G.vertices):
        c = coloring.get(v, frozenset())
        if len(c) != demand.get(v, 0):
            return False, SizeShort(v)
        if not c <= lists.get(v, frozenset()):
            return False, NotInList(v)
    for u, v in G.edges():
        if coloring.get(u, frozenset()) & coloring.get(v, frozenset()):
            return False, EdgeConflict(u, v)
    return True, None


def find_coloring(G: PlaneGraph, lists: dict[int, frozenset[int]],
                  demand: dict[int, int]) -> dict[int, frozenset[int]] | None:
    """Complete backtracking search for an (L, g)-coloring.

    Most-constrained vertex first (smallest |L(v)| - g(v), ties by id);
    color sets tried as lexicographic combinations.  Exact decision
    procedure: returns a coloring iff one exists.
    """
    verts = sorted(G.vertices)
    if any(len(lists.get(v, frozenset())) < demand.get(v, 0) for v in verts):
        return None
    avail = {v: sorted(lists.get(v, frozenset())) for v in verts}
    need = {v: demand.get(v, 0) for v in verts}
    chosen: dict[int, frozenset[int]] = {}

    def pick_next(pending: list[int]) -> int:
        return min(pending, key=lambda v: (len(avail[v]) - need[v], v))

    def solve(pending: list[int]) -> bool:
        if not pending:
            return True
        v = pick_next(pending)
        rest = [w for w in pending if w != v]
        if len(avail[v]) < need[v]:
            return False
        for combo in itertools.combinations(avail[v], need[v]):
            cset = frozenset(combo)
            touched = []
            ok = True
            for w in G.neighbors(v):
                if w in chosen or w not in avail:
                    continue
                old = avail[w]
                new = [c for c in old if c not in cset]
                if len(new) < need[w]:
                    avail[w] = old
                    ok = False
                    break
                avail[w] = new
                touched.append((w, old))
            if ok:
                chosen[v] = cset
                if solve(rest):
                    return True
                del chosen[v]
            for w, old in touched:
                avail[w] = old
        return False

    if solve(verts):
        return dict(chosen)
    return None


# -- canonical enumeration up to color renaming ---------------------------


def _max_cells() -> int:
    return int(os.environ.get(ENV_MAX_CELLS, DEFAULT_MAX_CELLS))


def enumerate_assignments_canonical(G: PlaneGraph, f: dict[int, int],
                                    universe_bound: int | None = None,
                                    max_vectors: int | None = None,
                                    ) -> Iterator[dict[int, frozenset[int]]]:
    """Yield one f-list assignment per color-renaming class.

    Classes are Venn-cell vectors: for every nonempty subset S of V(G) a
    cell size n_S >= 0 with sum over S containing v equal to f(v).  Cells are
    realized as consecutive integer blocks (colors numbered from 1) in the
    fixed subset order: subsets sorted as vertex tuples.  Vectors are emitted
    by increasing total weight W = sum n_S (W is the universe size), then
    lexicographically; every f-list assignment is renaming-equivalent to
    exactly one emitted representative.
    """
    verts = sorted(G.vertices)
    cap = max_vectors if max_vectors is not None else _max_cells()
    subsets = []
    for r in range(1, len(verts) + 1):
        subsets.extend(itertools.combinations(verts, r))
    subsets.sort()
    total_f = sum(f[v] for v in verts)
    w_lo = max((f[v] for v in verts), default=0)
    if universe_bound is not None and universe_bound < w_lo:
        raise ValueError("universe_bound below max f(v)")
    w_hi = min(total_f, universe_bound) if universe_bound is not None else total_f

    emitted = 0
    for W in range(w_lo, w_hi + 1):
        for vec in _cell_vectors(subsets, {v: f[v] for v in verts}, W):
            emitted += 1
            if emitted > cap:
                raise TooLarge(f"canonical enumeration exceeded {cap} vectors")
            yield _realize(vec, subsets, verts)


def _cell_vectors(subsets, remaining: dict[int, int], W: int):
    """All assignments n_S >= 0 with per-vertex sums `remaining` and total W."""
    if W < 0:
        return
    if not subsets:
        if W == 0 and all(r == 0 for r in remaining.values()):
            yield ()
        return
    S = subsets[0]
    hi = min([remaining[v] for v in S] + [W])
    for n in range(hi + 1):
        rem2 = dict(remaining)
        for v in S:
            rem2[v] -= n
        # remaining demand must still be coverable by the leftover weight
        if W - n < max(rem2.values(), default=0):
            continue
        if sum(rem2.values()) == 0 and W - n > 0:
            continue
        for tail in _cell_vectors(subsets[1:], rem2, W - n):
            yield (n,) + tail


def _realize(vec, subsets, verts) -> dict[int, frozenset[int]]:
    lists: dict[int, set[int]] = {v: set() for v in verts}
    color = 1
    for S, n in zip(subsets, vec):
        if n == 0:
            continue
        block = range(color, color + n)
        color += n
        for v in S:
            lists[v].update(block)
    return {v: frozenset(cs) for v, cs in lists.items()}


# -- choosability --------------------------------------------------------

@dataclass
class ChoosableVerdict:
    ok: bool
    witness: dict[int, frozenset[int]] | None = None
    checked: int = 0

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class ChoosableOpts:
    max_vectors: int | None = None
    universe_bound: int | None = None
    deterministic: bool = True


def choosable(G: PlaneGraph, f: dict[int, int] | int, g: dict[int, int] | int,
              opts: ChoosableOpts | None = None) -> ChoosableVerdict:
    """Decide (f, g)-choosability by exhausting canonical list assignments.

    "no" comes with the first failing assignment in the canonical order
    (the lexicographically least witness in deterministic mode).
    """
    opts = opts or ChoosableOpts()
    fmap = _as_map(G, f)
    gmap = _as_map(G, g)
    checked = 0
    for lists in enumerate_assignments_canonical(G, fmap,
                                                 universe_bound=opts.universe_bound,
                                                 max_vectors=opts.max_vectors):
        checked += 1
        if find_coloring(G, lists, gmap) is None:
            return ChoosableVerdict(False, witness=lists, checked=checked)
    return ChoosableVerdict(True, checked=checked)


def colorable_ab(G: PlaneGraph, a: int, b: int) -> bool:
    """(a, b)-colorability: the single list assignment L(v) = {1..a}, g = b."""
    if not a >= b >= 1:
        raise ValueError("need a >= b >= 1")
    palette = frozenset(range(1, a + 1))
    lists = {v: palette for v in G.vertices}
    demand = {v: b for v in G.vertices}
    return find_coloring(G, lists, demand) is not None


def _as_map(G: PlaneGraph, x: dict[int, int] | int) -> dict[int, int]:
    if isinstance(x, int):
        return {v: x for v in G.vertices}
    return dict(x)
