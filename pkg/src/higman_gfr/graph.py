"""Simple undirected graphs on vertices 0..n-1, plus graph6 / edge-list I/O.

Neighbors are kept in a padded, row-sorted int array (pad value n) so the
refinement code can work with whole-array operations.  Packed bit rows
(Python ints) are built on demand for adjacency tests.
"""
from __future__ import annotations


import numpy as np

from .errors import PreconditionError, ResourceLimitError

GRAPH6_HEADER = b">>graph6<<"
GRAPH6_MAX_N = (1 << 36) - 1


class Graph:
    def __init__(self, n: int, nbrs: np.ndarray):
        self.n = n
        nbrs = np.asarray(nbrs, dtype=np.int64)
        if nbrs.ndim != 2 or nbrs.shape[0] != n:
            raise ValueError("neighbor array must have one row per vertex")
        self.nbrs = np.sort(nbrs, axis=1)
        self.deg = (self.nbrs < n).sum(axis=1)

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        adj = [set() for _ in range(n)]
        for x, y in edges:
            x, y = int(x), int(y)
            if x == y:
                raise PreconditionError(f"loop at vertex {x}")
            if not (0 <= x < n and 0 <= y < n):
                raise PreconditionError(f"edge ({x}, {y}) out of range for n={n}")
            adj[x].add(y)
            adj[y].add(x)
        return cls.from_adjacency(adj)

    @classmethod
    def from_adjacency(cls, adj) -> "Graph":
        n = len(adj)
        width = max((len(a) for a in adj), default=0)
        arr = np.full((n, width), n, dtype=np.int64)
        for v, a in enumerate(adj):
            arr[v, : len(a)] = sorted(a)
        return cls(n, arr)

    @classmethod
    def from_matrix(cls, mat) -> "Graph":
        mat = np.asarray(mat, dtype=bool)
        return cls.from_adjacency([np.flatnonzero(row).tolist() for row in mat])

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.num_edges})"

    @property
    def num_edges(self) -> int:
        return int(self.deg.sum()) // 2

    def neighbors(self, v: int) -> np.ndarray:
        return self.nbrs[v, : self.deg[v]]

    def has_edge(self, v: int, w: int) -> bool:
        row = self.neighbors(v)
        i = int(np.searchsorted(row, w))
        return i < row.size and int(row[i]) == w

    def edges(self) -> np.ndarray:
        """Sorted (m, 2) array of edges with x < y."""
        n, w = self.nbrs.shape
        src = np.repeat(np.arange(n), w)
        dst = self.nbrs.ravel()
        keep = (dst < n) & (src < dst)
        return np.column_stack([src[keep], dst[keep]])

    def is_regular(self) -> bool:
        return self.n == 0 or bool(np.all(self.deg == self.deg[0]))

    def is_symmetric(self) -> bool:
        n, w = self.nbrs.shape
        src = np.repeat(np.arange(n), w)
        dst = self.nbrs.ravel()
        keep = dst < n
        # rows are sorted, so the forward keys already are
        fwd = src[keep] * n + dst[keep]
        back = np.sort(dst[keep] * n + src[keep])
        return bool(np.array_equal(fwd, back))

    def has_loops(self) -> bool:
        return bool(np.any(self.nbrs == np.arange(self.n)[:, None]))

    def adjacency_matrix(self) -> np.ndarray:
        if self.n > 1 << 14:
            raise ResourceLimitError("dense adjacency matrix too large")
        m = np.zeros((self.n, self.n), dtype=bool)
        e = self.edges()
        m[e[:, 0], e[:, 1]] = True
        m[e[:, 1], e[:, 0]] = True
        return m

    def is_automorphism(self, perm) -> bool:
        """True iff the vertex map v -> perm[v] preserves adjacency."""
        perm = np.asarray(perm, dtype=np.int64)
        if perm.shape != (self.n,) or not np.array_equal(np.sort(perm), np.arange(self.n)):
            return False
        ext = np.append(perm, self.n)
        mapped = np.sort(ext[self.nbrs], axis=1)
        return bool(np.array_equal(mapped, self.nbrs[perm]))

    def connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = np.zeros(self.n + 1, dtype=bool)
        seen[0] = seen[self.n] = True  # the pad slot counts as visited
        frontier = np.array([0])
        count = 1
        while frontier.size:
            nxt = np.unique(self.nbrs[frontier].ravel())
            nxt = nxt[~seen[nxt]]
            seen[nxt] = True
            count += nxt.size
            frontier = nxt
        return count == self.n

    def induced(self, vertices) -> tuple["Graph", np.ndarray]:
        """Induced subgraph on ``vertices``; returns it and the original ids."""
        vs = np.asarray(vertices, dtype=np.int64)
        pos = np.full(self.n + 1, -1, dtype=np.int64)
        pos[vs] = np.arange(vs.size)
        adj = []
        for v in vs:
            p = pos[self.neighbors(v)]
            adj.append(p[p >= 0].tolist())
        return Graph.from_adjacency(adj), vs

    def girth(self) -> float:
        """Length of a shortest cycle (inf for forests), by BFS from every vertex."""
        best = float("inf")
        for s in range(self.n):
            dist = {s: 0}
            parent = {s: -1}
            queue = [s]
            for x in queue:
                for y in self.neighbors(x).tolist():
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        parent[y] = x
                        queue.append(y)
                    elif parent[x] != y:
                        best = min(best, dist[x] + dist[y] + 1)
        return best

    # serialization

    def to_graph6(self, header: bool = False) -> bytes:
        return encode_graph6(self.n, self.edges(), header=header)

    @classmethod
    def from_graph6(cls, data: bytes | str) -> "Graph":
        n, edges = decode_graph6(data)
        return cls.from_edges(n, edges)

    def to_edge_list(self) -> bytes:
        return "".join(f"{x} {y}\n" for x, y in self.edges().tolist()).encode()

    @classmethod
    def from_edge_list(cls, data: bytes | str, n: int | None = None) -> "Graph":
        if isinstance(data, bytes):
            data = data.decode()
        edges = [tuple(map(int, line.split())) for line in data.splitlines() if line.strip()]
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        return cls.from_edges(n, edges)

    def export(self, fmt: str = "g6") -> bytes:
        if fmt in ("g6", "graph6"):
            return self.to_graph6() + b"\n"
        if fmt in ("edges", "edge-list"):
            return self.to_edge_list()
        raise PreconditionError(f"unknown graph format {fmt!r}")


def load_graph(data: bytes) -> Graph:
    """Read either graph6 (first line, optional header) or an edge list."""
    text = data.strip()
    if text.startswith(GRAPH6_HEADER) or (text and b" " not in text.splitlines()[0]):
        return Graph.from_graph6(text.splitlines()[0])
    return Graph.from_edge_list(data)


def _encode_n(n: int) -> bytes:
    if n < 0 or n > GRAPH6_MAX_N:
        raise ResourceLimitError(f"graph6 cannot encode n={n}")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])


def encode_graph6(n: int, edges, header: bool = False) -> bytes:
    """graph6: upper triangle in column order (0,1),(0,2),(1,2),(0,3)..., 6 bits per byte."""
    head = _encode_n(n)
    total = n * (n - 1) // 2
    nbytes = (total + 5) // 6
    out = np.zeros(nbytes, dtype=np.int64)
    e = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
    if e.size:
        lo = e.min(axis=1)
        hi = e.max(axis=1)
        pos = hi * (hi - 1) // 2 + lo
        np.add.at(out, pos // 6, 1 << (5 - pos % 6))
    body = (out + 63).astype(np.uint8).tobytes()
    return (GRAPH6_HEADER if header else b"") + head + body


def decode_graph6(data: bytes | str) -> tuple[int, np.ndarray]:
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    vals = np.frombuffer(data, dtype=np.uint8).astype(np.int64) - 63
    if vals.size == 0 or np.any(vals < 0) or np.any(vals > 63):
        raise PreconditionError("malformed graph6 string")
    if vals[0] < 63:
        n, body = int(vals[0]), vals[1:]
    elif vals[1] < 63:
        n = int(vals[1] << 12 | vals[2] << 6 | vals[3])
        body = vals[4:]
    else:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | int(v)
        body = vals[8:]
    total = n * (n - 1) // 2
    if body.size != (total + 5) // 6:
        raise PreconditionError("graph6 body length does not match n")
    bits = ((body[:, None] >> np.arange(5, -1, -1)) & 1).ravel()[:total]
    pos = np.flatnonzero(bits)
    # invert pos = hi*(hi-1)/2 + lo
    hi = ((1 + np.sqrt(1 + 8 * pos.astype(np.float64))) / 2).astype(np.int64)
    hi -= hi * (hi - 1) // 2 > pos
    hi += (hi + 1) * hi // 2 <= pos
    lo = pos - hi * (hi - 1) // 2
    return n, np.column_stack([lo, hi])
