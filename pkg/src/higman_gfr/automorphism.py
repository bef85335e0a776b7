"""Graph automorphism groups by individualization-refinement.

Colorings are int arrays mapping each vertex to a cell index; cell indices
are canonical (they depend only on isomorphism-invariant data), so an
automorphism maps the refined partition of a node onto the refined
partition of its image node, cell for cell.

The search follows the first path of the tree down to a discrete leaf, then
works upward.  At each level it tries to map the base point to every vertex
of its cell not already in the orbit of the automorphisms found so far; the
product of the resulting orbit lengths is the group order.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, ResourceLimitError
from .graph import Graph
from .perm import PermGroup, identity, orbit, orbits

MAX_DEGREE = 1 << 16


class _TraceMismatch(Exception):
    pass


def _refine_round(graph: Graph, colors):
    n = graph.n
    ext = np.empty(n + 1, dtype=np.int64)
    ext[:n] = colors
    ext[n] = -1
    sig = np.sort(ext[graph.nbrs], axis=1)
    keys = np.column_stack([colors, sig])
    uniq, inv, counts = np.unique(keys, axis=0, return_inverse=True, return_counts=True)
    return inv.reshape(-1), (uniq, counts)


def refine(graph: Graph, colors=None, trace=None, reference=None):
    """Coarsest equitable refinement of an ordered partition.

    Each round replaces a vertex's color by the rank of (color, sorted
    neighbor colors).  If ``trace`` is a list, the per-round signature tables
    are appended to it; if ``reference`` is given, the run aborts with
    ``_TraceMismatch`` as soon as a table differs from it.
    """
    n = graph.n
    if colors is None:
        colors = np.zeros(n, dtype=np.int64)
    colors = np.unique(np.asarray(colors), return_inverse=True)[1].reshape(-1)
    k = int(colors.max()) + 1 if n else 0
    r = 0
    while True:
        colors, step = _refine_round(graph, colors)
        if reference is not None:
            ref = reference[r]
            if not (np.array_equal(ref[0], step[0]) and np.array_equal(ref[1], step[1])):
                raise _TraceMismatch
        if trace is not None:
            trace.append(step)
        r += 1
        k_new = len(step[1])
        if k_new == k:
            return colors
        k = k_new


def individualize(colors, v: int):
    """Split v off into its own cell, placed just before the rest of its cell."""
    c = 2 * np.asarray(colors, dtype=np.int64) + 1
    c[v] -= 1
    return np.unique(c, return_inverse=True)[1].reshape(-1)


def cells(colors) -> list[np.ndarray]:
    order = np.argsort(colors, kind="stable")
    bounds = np.flatnonzero(np.diff(colors[order])) + 1
    return np.split(order, bounds)


def _target_cell(colors):
    """Index of the first smallest non-singleton cell, or None if discrete."""
    counts = np.bincount(colors)
    sizes = np.where(counts > 1, counts, np.iinfo(np.int64).max)
    i = int(np.argmin(sizes))
    return None if counts[i] <= 1 else i


@dataclass
class SearchStats:
    nodes: int = 0
    leaves: int = 0
    failed: int = 0
    levels: list = field(default_factory=list)


class _Search:
    def __init__(self, graph: Graph, colors=None, max_nodes: int | None = None):
        self.g = graph
        self.stats = SearchStats()
        self.max_nodes = max_nodes
        trace = []
        root = refine(graph, colors, trace=trace)
        self.path_colors = [root]
        self.path_traces = [trace]
        self.path_cells = []
        self.base = []
        c = root
        while True:
            t = _target_cell(c)
            if t is None:
                break
            members = np.flatnonzero(c == t)
            b = int(members[0])
            self.path_cells.append(t)
            self.base.append(b)
            tr = []
            c = refine(graph, individualize(c, b), trace=tr)
            self.path_colors.append(c)
            self.path_traces.append(tr)
        self.leaf = c  # discrete: vertex -> position

    def _tick(self):
        self.stats.nodes += 1
        if self.max_nodes is not None and self.stats.nodes > self.max_nodes:
            raise ResourceLimitError(f"search exceeded {self.max_nodes} nodes")

    def find(self, level: int, colors, v: int):
        """An automorphism extending the current node's prefix with base[level] -> v."""
        self._tick()
        try:
            c = refine(self.g, individualize(colors, v), reference=self.path_traces[level + 1])
        except _TraceMismatch:
            return None
        if level + 1 == len(self.base):
            self.stats.leaves += 1
            pos = np.empty(self.g.n, dtype=np.int64)
            pos[c] = np.arange(self.g.n)
            perm = pos[self.leaf]
            if self.g.is_automorphism(perm):
                return perm
            self.stats.failed += 1
            return None
        t = self.path_cells[level + 1]
        for w in np.flatnonzero(c == t).tolist():
            found = self.find(level + 1, c, w)
            if found is not None:
                return found
        return None


def aut_group(graph: Graph, colors=None, max_nodes: int | None = None) -> PermGroup:
    """Full automorphism group (color-preserving if ``colors`` is given)."""
    if graph.n > MAX_DEGREE:
        raise ResourceLimitError(f"n={graph.n} exceeds the automorphism search guard {MAX_DEGREE}")
    n = graph.n
    if n == 0:
        return PermGroup(0)
    s = _Search(graph, colors, max_nodes)
    depth = len(s.base)
    gens_by_level = [[] for _ in range(depth)]
    lengths = []
    for i in reversed(range(depth)):
        b = s.base[i]
        cell = np.flatnonzero(s.path_colors[i] == s.path_cells[i]).tolist()
        active = [g for gs in gens_by_level[i:] for g in gs]
        orb = set(orbit(b, active)) if active else {b}
        for w in cell:
            if w in orb:
                continue
            g = s.find(i, s.path_colors[i], w)
            if g is None:
                continue
            gens_by_level[i].append(g)
            active.append(g)
            orb = set(orbit(b, active))
        lengths.append(len(orb))
        s.stats.levels.append({"level": i, "base_point": b, "cell_size": len(cell), "orbit": len(orb)})
    lengths.reverse()
    s.stats.levels.reverse()
    group = PermGroup.from_bsgs(n, s.base, gens_by_level)
    if group.basic_orbit_lengths() != lengths:
        raise AssertionError("stabilizer chain disagrees with the search orbits")
    group.search_stats = s.stats
    return group


@dataclass
class FrobeniusReport:
    transitive: bool
    regular: bool
    max_fixed_points_nonidentity: int
    stabilizer_order: int
    is_frobenius: bool
    method: str = ""

    def to_json(self) -> dict:
        return {
            "transitive": self.transitive,
            "regular": self.regular,
            "max_fixed_points_nonidentity": self.max_fixed_points_nonidentity,
            "stabilizer_order": self.stabilizer_order,
            "is_frobenius": self.is_frobenius,
        }


def _max_fixed_by_enumeration(pg: PermGroup, limit: int) -> int:
    ident = np.arange(pg.n)
    best = 0
    for block in pg.element_blocks(limit):
        fixed = (block == ident).sum(axis=1)
        fixed = fixed[fixed < pg.n]  # drop the identity
        if fixed.size:
            best = max(best, int(fixed.max()))
    return best


def frobenius_report(pg: PermGroup, enumerate_limit: int = 10**6, method: str = "auto") -> FrobeniusReport:
    """Transitivity, regularity and fixed-point data of a permutation group.

    ``method="chain"`` reads everything off the stabilizer chain: for a
    transitive group every two-point stabilizer is trivial iff each orbit of
    the point stabilizer (other than the point) has full length.
    """
    n = pg.n
    order = pg.order()
    transitive = pg.is_transitive()
    stab = order // n if transitive else None
    if method == "auto":
        method = "enumerate" if order <= enumerate_limit and order * n <= 5 * 10**8 else "chain"
    if method == "enumerate":
        max_fixed = _max_fixed_by_enumeration(pg, enumerate_limit)
        if not transitive:
            base = pg.base[0] if pg.levels else 0
            stab = order // len(orbit(base, pg.gens)) if pg.gens else 1
    elif method == "chain":
        if not transitive:
            raise ResourceLimitError("chain method needs a transitive group")
        if order == 1:
            max_fixed = 0
        elif stab == 1:
            max_fixed = 0
        else:
            b = pg.base[0]
            sgens = pg.stabilizer_gens(1)
            lens = [len(o) for o in orbits(n, sgens) if o != [b]] if sgens else [1] * (n - 1)
            if all(ln == stab for ln in lens):
                max_fixed = 1
            else:
                raise ResourceLimitError("exact fixed-point maximum needs element enumeration")
    else:
        raise PreconditionError(f"unknown method {method!r}")
    regular = transitive and order == n
    return FrobeniusReport(
        transitive=transitive,
        regular=regular,
        max_fixed_points_nonidentity=max_fixed,
        stabilizer_order=stab,
        is_frobenius=transitive and not regular and max_fixed <= 1,
        method=method,
    )


def minimal_block(n: int, gens, alpha: int, beta: int) -> list[int]:
    """Smallest block containing alpha and beta (Atkinson's union-find join)."""
    parent = list(range(n))
    gl = [np.asarray(g).tolist() for g in gens]

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(alpha, beta)]
    parent[find(beta)] = find(alpha)
    while queue:
        x, y = queue.pop()
        for g in gl:
            a, b = find(g[x]), find(g[y])
            if a != b:
                parent[b] = a
                queue.append((g[x], g[y]))
    root = find(alpha)
    return [x for x in range(n) if find(x) == root]


def block_systems(pg: PermGroup, base_point: int = 0) -> list[list[int]]:
    """Minimal nontrivial blocks containing ``base_point``.

    Only orbit representatives of the point stabilizer need a union-find
    pass; the other blocks are their images under stabilizer elements.
    """
    n = pg.n
    if not pg.is_transitive():
        raise PreconditionError("block systems need a transitive group")
    gens = pg.strong_generators()
    stab = [g for g in gens if g[base_point] == base_point]
    # generators of the stabilizer of base_point from a chain rooted there
    if pg.base and pg.base[0] == base_point:
        stab = pg.stabilizer_gens(1)
    else:
        rooted = PermGroup(n, gens, base_hint=[base_point])
        stab = rooted.stabilizer_gens(1)
    blocks = set()
    for orb in orbits(n, stab) if stab else [[x] for x in range(n)]:
        beta = orb[0]
        if beta == base_point:
            continue
        blk = minimal_block(n, gens, base_point, beta)
        if len(blk) == n:
            continue
        images = {tuple(blk)}
        if stab:
            frontier = [tuple(blk)]
            while frontier:
                b = frontier.pop()
                for g in stab:
                    img = tuple(sorted(np.asarray(g)[list(b)].tolist()))
                    if img not in images:
                        images.add(img)
                        frontier.append(img)
        blocks |= images
    minimal = [b for b in blocks if not any(set(o) < set(b) for o in blocks)]
    return sorted(list(b) for b in minimal)


def block_systems_from_gens(n: int, gens, base_point: int = 0) -> list[list[int]]:
    return block_systems(PermGroup(n, gens, base_hint=[base_point]), base_point)


def trivial_colors(n: int):
    return np.zeros(n, dtype=np.int64)


__all__ = [
    "refine", "individualize", "cells", "aut_group", "frobenius_report", "FrobeniusReport",
    "block_systems", "minimal_block", "identity",
]
