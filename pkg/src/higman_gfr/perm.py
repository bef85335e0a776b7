"""Permutations and permutation groups with a stabilizer chain.

A permutation of degree n is an int64 array ``p`` with x -> p[x].  Products
act left to right: ``mul(g, h)`` applies g first, so mul(g, h)[x] == h[g[x]].
"""
from __future__ import annotations

from math import prod

import numpy as np

from .errors import PreconditionError, ResourceLimitError

EXPLICIT_TRANSVERSAL_LIMIT = 1 << 25  # orbit length * degree


def identity(n: int) -> np.ndarray:
    return np.arange(n, dtype=np.int64)


def mul(g, h) -> np.ndarray:
    return np.asarray(h)[np.asarray(g)]


def inverse(g) -> np.ndarray:
    g = np.asarray(g)
    out = np.empty_like(g)
    out[g] = np.arange(g.size)
    return out


def power(g, e: int) -> np.ndarray:
    g = np.asarray(g, dtype=np.int64)
    if e < 0:
        g, e = inverse(g), -e
    r = identity(g.size)
    while e:
        if e & 1:
            r = mul(r, g)
        g = mul(g, g)
        e >>= 1
    return r


def is_identity(g) -> bool:
    g = np.asarray(g)
    return bool(np.array_equal(g, np.arange(g.size)))


def is_perm(g) -> bool:
    g = np.asarray(g)
    return g.ndim == 1 and np.array_equal(np.sort(g), np.arange(g.size))


def perm_order(g) -> int:
    """Order as lcm of cycle lengths."""
    from math import lcm

    g = np.asarray(g)
    seen = np.zeros(g.size, dtype=bool)
    out = 1
    for x in range(g.size):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = int(g[y])
            length += 1
        out = lcm(out, length)
    return out


def from_cycles(n: int, *cycles) -> np.ndarray:
    p = identity(n)
    for cyc in cycles:
        for i, x in enumerate(cyc):
            p[x] = cyc[(i + 1) % len(cyc)]
    return p


def orbits(n: int, gens) -> list[list[int]]:
    """Orbits of the group generated by ``gens``, each sorted, listed by min point."""
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for x, y in enumerate(np.asarray(g).tolist()):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    groups = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    return [groups[k] for k in sorted(groups)]


def orbit(point: int, gens) -> list[int]:
    gens = [np.asarray(g).tolist() for g in gens]
    seen = {point}
    queue = [point]
    for x in queue:
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


class _Level:
    """One stabilizer-chain level: base point, generators, transversal."""

    def __init__(self, n: int, point: int):
        self.n = n
        self.point = point
        self.gens: list[np.ndarray] = []
        self.inv_gens: list[np.ndarray] = []
        self.orbit = [point]
        # explicit transversal: point -> (rep, rep inverse); else Schreier vector
        self.reps = {point: (identity(n), identity(n))}
        self.sv = {point: -1}
        self.explicit = True

    def __len__(self):
        return len(self.orbit)

    def add_gen(self, g) -> list[int]:
        """Append a generator and extend the orbit; return the new points."""
        self.gens.append(g)
        self.inv_gens.append(inverse(g))
        gl = [x.tolist() for x in self.gens]
        new = []
        queue = list(self.orbit)
        seen = set(self.sv)
        for x in queue:
            for j, g_l in enumerate(gl):
                y = g_l[x]
                if y not in seen:
                    seen.add(y)
                    self.sv[y] = j
                    self.orbit.append(y)
                    queue.append(y)
                    new.append(y)
        if self.explicit and len(self.orbit) * self.n > EXPLICIT_TRANSVERSAL_LIMIT:
            self.explicit = False
            self.reps = {}
        if self.explicit:
            for y in new:
                j = self.sv[y]
                x = int(self.inv_gens[j][y])
                r = mul(self.reps[x][0], self.gens[j])
                self.reps[y] = (r, inverse(r))
        return new

    def rep(self, x: int) -> np.ndarray:
        """An element mapping the base point to x."""
        if self.explicit:
            return self.reps[x][0]
        path = []
        while x != self.point:
            j = self.sv[x]
            path.append(j)
            x = int(self.inv_gens[j][x])
        r = identity(self.n)
        for j in reversed(path):
            r = mul(r, self.gens[j])
        return r

    def strip(self, g):
        """g * rep(point^g)^-1, or None if point^g is outside the orbit."""
        x = int(g[self.point])
        if x not in self.sv:
            return None
        if self.explicit:
            return mul(g, self.reps[x][1])
        while x != self.point:
            g = mul(g, self.inv_gens[self.sv[x]])
            x = int(g[self.point])
        return g


class PermGroup:
    """Permutation group of degree n with a base and strong generating set.

    The chain is built by deterministic Schreier-Sims unless a known base and
    strong generating set is supplied through :meth:`from_bsgs`.
    """

    def __init__(self, n: int, gens=(), base_hint=()):
        self.n = n
        self.gens = [np.asarray(g, dtype=np.int64) for g in gens]
        for g in self.gens:
            if g.shape != (n,) or not is_perm(g):
                raise PreconditionError("generator is not a permutation of the right degree")
        self.levels: list[_Level] = []
        self._hint = list(base_hint)
        for g in self.gens:
            r, j = self.sift(g)
            if not is_identity(r):
                self._extend(r, 0)

    @classmethod
    def from_bsgs(cls, n: int, base, gens_by_level) -> "PermGroup":
        """Chain from a known base and, per level, generators fixing the earlier base points.

        ``gens_by_level[i]`` lists the strong generators first appearing at
        level i; level i uses all generators from levels >= i.
        """
        self = cls.__new__(cls)
        self.n = n
        self._hint = list(base)
        self.gens = [np.asarray(g, dtype=np.int64) for gs in gens_by_level for g in gs]
        self.levels = []
        for i, b in enumerate(base):
            lvl = _Level(n, int(b))
            for gs in gens_by_level[i:]:
                for g in gs:
                    lvl.add_gen(np.asarray(g, dtype=np.int64))
            self.levels.append(lvl)
        return self

    # chain construction

    def _new_point(self, g) -> int:
        used = {lvl.point for lvl in self.levels}
        for b in self._hint:
            if b not in used and g[b] != b:
                return b
        return int(np.flatnonzero(g != np.arange(self.n))[0])

    def _extend(self, g, i: int):
        if i == len(self.levels):
            self.levels.append(_Level(self.n, self._new_point(g)))
        lvl = self.levels[i]
        old = list(lvl.orbit)
        new = lvl.add_gen(g)
        k = len(lvl.gens) - 1
        todo = [(x, k) for x in old] + [(x, j) for x in new for j in range(len(lvl.gens))]
        for x, j in todo:
            s = lvl.gens[j]
            y = int(s[x])
            h = mul(mul(lvl.rep(x), s), inverse(lvl.rep(y)))
            r, _ = self.sift(h, i + 1)
            if not is_identity(r):
                self._extend(r, i + 1)

    # queries

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self.levels]

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lvl) for lvl in self.levels]

    def order(self) -> int:
        return prod(len(lvl) for lvl in self.levels)

    def sift(self, g, start: int = 0):
        g = np.asarray(g, dtype=np.int64)
        for i in range(start, len(self.levels)):
            h = self.levels[i].strip(g)
            if h is None:
                return g, i
            g = h
        return g, len(self.levels)

    def contains(self, p) -> bool:
        p = np.asarray(p, dtype=np.int64)
        if p.shape != (self.n,):
            raise PreconditionError(f"degree mismatch: {p.size} vs {self.n}")
        if not is_perm(p):
            return False
        r, _ = self.sift(p)
        return is_identity(r)

    def strong_generators(self) -> list[np.ndarray]:
        seen = {}
        for lvl in self.levels:
            for g in lvl.gens:
                seen.setdefault(g.tobytes(), g)
        return list(seen.values())

    def stabilizer_gens(self, depth: int) -> list[np.ndarray]:
        """Strong generators of the pointwise stabilizer of the first ``depth`` base points."""
        if depth >= len(self.levels):
            return []
        return list(self.levels[depth].gens)

    def is_transitive(self) -> bool:
        if self.n <= 1:
            return True
        if not self.levels:
            return False
        return len(orbit(self.levels[0].point, self.levels[0].gens)) == self.n

    def element_blocks(self, limit: int = 10**6):
        """Yield every element, as blocks of rows (each row one permutation)."""
        if self.order() > limit:
            raise ResourceLimitError(f"group order {self.order()} exceeds enumeration limit {limit}")
        if not self.levels:
            yield identity(self.n)[None, :]
            return
        inner = identity(self.n)[None, :]
        for lvl in reversed(self.levels[1:]):
            reps = np.stack([lvl.rep(x) for x in lvl.orbit])
            inner = reps[:, inner].reshape(-1, self.n)
        top = self.levels[0]
        for x in top.orbit:
            yield top.rep(x)[inner]

    def elements(self, limit: int = 10**6) -> np.ndarray:
        return np.concatenate(list(self.element_blocks(limit)))
