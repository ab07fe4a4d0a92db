"""Weighted planar acyclic networks and the disjoint-path minor oracle.

Networks are leveled: each vertex sits at integer coordinates (x, level)
with levels counted bottom-to-top from 1.  Edges point strictly left to
right, and the embedding must be planar (straight edge segments may meet
only at shared endpoints, and may not pass through other vertices).  The
n sources are the vertices of the leftmost column and the n sinks those of
the rightmost column, numbered bottom-to-top.

The weight matrix entry (i, j) is the sum over directed paths from source
i to sink j of the product of edge weights, computed by dynamic
programming; `disjoint_path_minor` is the independent brute-force oracle
summing over vertex-disjoint path families instead.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import as_scalar
from .matrices import Matrix, MinorSpec
from .words import DIAG, LOWER, UPPER, Letter, Word, staircase_scheme

Coord = tuple[int, int]


class NetworkError(ValueError):
    """Malformed network: not leveled, not planar, or bad boundary."""


def _cross(o: Coord, a: Coord, b: Coord) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _on_segment(p: Coord, a: Coord, b: Coord) -> bool:
    """p lies on the closed segment ab (colinearity assumed checked)."""
    return (min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]))


def _segments_conflict(a: Coord, b: Coord, c: Coord, d: Coord) -> bool:
    """True if segments ab and cd intersect anywhere besides a shared
    endpoint."""
    if (a, b) == (c, d):
        return True
    shared = {a, b} & {c, d}
    d1 = _cross(c, d, a)
    d2 = _cross(c, d, b)
    d3 = _cross(a, b, c)
    d4 = _cross(a, b, d)
    if d1 != 0 and d2 != 0 and d3 != 0 and d4 != 0:
        return (d1 > 0) != (d2 > 0) and (d3 > 0) != (d4 > 0)
    # touching or colinear: any endpoint of one lying on the other segment
    # is a conflict unless it is a shared endpoint
    for p, (u, v) in ((a, (c, d)), (b, (c, d)), (c, (a, b)), (d, (a, b))):
        if (p not in shared and _cross(u, v, p) == 0
                and _on_segment(p, u, v)):
            return True
    return False


@dataclass(frozen=True)
class PlanarNetwork:
    """Immutable leveled planar network with n sources and n sinks."""

    n: int
    vertices: tuple[Coord, ...]
    edges: tuple[tuple[int, int, Fraction], ...]  # (tail, head, weight)
    essential: tuple[int, ...] = ()  # edge ids in staircase parameter order

    def __post_init__(self):
        verts = tuple((int(x), int(level)) for x, level in self.vertices)
        object.__setattr__(self, "vertices", verts)
        edges = tuple((int(u), int(v), w if not isinstance(w, (int, str))
                       else as_scalar(w)) for u, v, w in self.edges)
        object.__setattr__(self, "edges", edges)
        if len(set(verts)) != len(verts):
            raise NetworkError("duplicate vertex coordinates")
        for u, v, _ in edges:
            if not (0 <= u < len(verts) and 0 <= v < len(verts)):
                raise NetworkError("edge endpoint out of range")
            if verts[u][0] >= verts[v][0]:
                raise NetworkError("edges must increase strictly in x")
        self._validate_boundary()
        self._validate_planarity()

    def _validate_boundary(self) -> None:
        xs = [x for x, _ in self.vertices]
        lo, hi = min(xs), max(xs)
        left = sorted(level for x, level in self.vertices if x == lo)
        right = sorted(level for x, level in self.vertices if x == hi)
        if len(left) != self.n or len(right) != self.n:
            raise NetworkError(
                f"expected {self.n} sources and sinks, found "
                f"{len(left)} / {len(right)}")

    def _validate_planarity(self) -> None:
        segs = [(self.vertices[u], self.vertices[v]) for u, v, _ in self.edges]
        for (a, b), (c, d) in itertools.combinations(segs, 2):
            if max(a[0], c[0]) > min(b[0], d[0]):
                continue  # x-ranges disjoint
            if _segments_conflict(a, b, c, d):
                raise NetworkError(f"edges {a}-{b} and {c}-{d} cross")
        for p in self.vertices:
            for (a, b) in segs:
                if p in (a, b):
                    continue
                if _cross(a, b, p) == 0 and _on_segment(p, a, b):
                    raise NetworkError(f"vertex {p} lies inside edge {a}-{b}")

    # -- derived structure ---------------------------------------------

    @property
    def sources(self) -> tuple[int, ...]:
        """Vertex ids of the sources, numbered bottom-to-top."""
        lo = min(x for x, _ in self.vertices)
        ids = [i for i, (x, _) in enumerate(self.vertices) if x == lo]
        return tuple(sorted(ids, key=lambda i: self.vertices[i][1]))

    @property
    def sinks(self) -> tuple[int, ...]:
        hi = max(x for x, _ in self.vertices)
        ids = [i for i, (x, _) in enumerate(self.vertices) if x == hi]
        return tuple(sorted(ids, key=lambda i: self.vertices[i][1]))

    def out_edges(self) -> list[list[tuple[int, Fraction]]]:
        table: list[list[tuple[int, Fraction]]] = [[] for _ in self.vertices]
        for u, v, w in self.edges:
            table[u].append((v, w))
        return table

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "vertices": [{"x": x, "level": level}
                         for x, level in self.vertices],
            "edges": [{"from": u, "to": v, "weight": str(w)}
                      for u, v, w in self.edges],
        }

    @classmethod
    def from_json(cls, data) -> "PlanarNetwork":
        vertices = tuple((item["x"], item["level"])
                         for item in data["vertices"])
        edges = tuple((item["from"], item["to"], as_scalar(item["weight"]))
                      for item in data["edges"])
        return cls(int(data["n"]), vertices, edges)


def weight_matrix_raw(net: PlanarNetwork) -> list[list]:
    """Path-sum matrix as a plain list of lists.

    Ring-generic: weights only need + and *, so symbolic weights work."""
    order = sorted(range(len(net.vertices)),
                   key=lambda i: net.vertices[i])
    out = net.out_edges()
    sinks = net.sinks
    rows = []
    for source in net.sources:
        sums: dict[int, object] = {source: 1}
        for u in order:
            if u not in sums:
                continue
            here = sums[u]
            for v, w in out[u]:
                acc = w * here
                sums[v] = sums[v] + acc if v in sums else acc
        rows.append([sums.get(t, 0) for t in sinks])
    return rows


def weight_matrix(net: PlanarNetwork) -> Matrix:
    return Matrix(weight_matrix_raw(net))


# ---------------------------------------------------------------------------
# vertex-disjoint path enumeration (the Lindstrom oracle)


def _paths_avoiding(net, out, start: int, goal: int, banned: set[int]):
    """Yield (vertex set, weight) over paths start -> goal avoiding banned
    vertices.  Endpoints themselves must not be banned."""
    path_weight: list = [1]
    visiting: list[int] = [start]

    def walk(u: int):
        if u == goal:
            yield frozenset(visiting), path_weight[0]
            return
        for v, w in out[u]:
            if v in banned:
                continue
            visiting.append(v)
            keep = path_weight[0]
            path_weight[0] = keep * w
            yield from walk(v)
            path_weight[0] = keep
            visiting.pop()

    if start not in banned and goal not in banned:
        yield from walk(start)


def disjoint_path_minor(net: PlanarNetwork, spec: MinorSpec):
    """Sum over vertex-disjoint, order-preserving path families connecting
    the sources in ``spec.rows`` to the sinks in ``spec.cols`` of the
    product of all edge weights.  Brute force; the independent oracle for
    the determinant identity behind `weight_matrix` minors."""
    spec.validate_for(net.n)
    sources = [net.sources[i - 1] for i in spec.rows]
    sinks = [net.sinks[j - 1] for j in spec.cols]
    out = net.out_edges()

    def families(r: int, used: set[int]):
        if r == len(sources):
            yield 1
            return
        for verts, w in _paths_avoiding(net, out, sources[r], sinks[r], used):
            for rest in families(r + 1, used | verts):
                yield w * rest

    total = 0
    for product in families(0, set()):
        total = total + product
    return total


def has_disjoint_family(net: PlanarNetwork, rows: Sequence[int],
                        cols: Sequence[int]) -> bool:
    sources = [net.sources[i - 1] for i in rows]
    sinks = [net.sinks[j - 1] for j in cols]
    out = net.out_edges()

    def search(r: int, used: set[int]) -> bool:
        if r == len(sources):
            return True
        for verts, _ in _paths_avoiding(net, out, sources[r], sinks[r], used):
            if search(r + 1, used | verts):
                return True
        return False

    return search(0, set())


def is_totally_connected(net: PlanarNetwork) -> bool:
    """True iff every pair of equal-size boundary subsets is joined by some
    vertex-disjoint family."""
    indices = range(1, net.n + 1)
    for k in range(1, net.n + 1):
        for rows in itertools.combinations(indices, k):
            for cols in itertools.combinations(indices, k):
                if not has_disjoint_family(net, rows, cols):
                    return False
    return True


# ---------------------------------------------------------------------------
# chips and the standard network


def chip(letter: Letter, t, n: int) -> PlanarNetwork:
    """One-column network whose weight matrix is the letter's elementary
    matrix: upper letters get a rising slant, lower letters a falling one,
    diag letters a reweighted horizontal."""
    if isinstance(t, (int, str)):
        t = as_scalar(t)
    i = letter.index
    top = n if letter.kind == DIAG else n - 1
    if not 1 <= i <= top:
        raise NetworkError(f"letter {letter} out of range for n={n}")
    if letter.kind == DIAG and t == 0:
        raise NetworkError("diag chip requires a nonzero weight")
    vertices = [(x, level) for x in (0, 1) for level in range(1, n + 1)]
    index = {coord: k for k, coord in enumerate(vertices)}
    edges = []
    special = None
    for level in range(1, n + 1):
        weight = t if (letter.kind == DIAG and level == i) else Fraction(1)
        if letter.kind == DIAG and level == i:
            special = len(edges)
        edges.append((index[(0, level)], index[(1, level)], weight))
    if letter.kind == UPPER:
        special = len(edges)
        edges.append((index[(0, i)], index[(1, i + 1)], t))
    elif letter.kind == LOWER:
        special = len(edges)
        edges.append((index[(0, i + 1)], index[(1, i)], t))
    return PlanarNetwork(n, tuple(vertices), tuple(edges),
                         essential=(special,))


def concatenate(a: PlanarNetwork, b: PlanarNetwork) -> PlanarNetwork:
    """Glue b's sources onto a's sinks; weight matrices multiply."""
    if a.n != b.n:
        raise NetworkError("cannot concatenate networks of different size")
    a_sink_levels = [a.vertices[i][1] for i in a.sinks]
    b_source_levels = [b.vertices[i][1] for i in b.sources]
    if a_sink_levels != b_source_levels:
        raise NetworkError("boundary levels do not match")
    shift = (max(x for x, _ in a.vertices)
             - min(x for x, _ in b.vertices))
    coords: dict[Coord, int] = {}
    vertices: list[Coord] = []

    def vertex_id(coord: Coord) -> int:
        if coord not in coords:
            coords[coord] = len(vertices)
            vertices.append(coord)
        return coords[coord]

    edges: list[tuple[int, int, Fraction]] = []
    essential: list[int] = []
    for net, dx in ((a, 0), (b, shift)):
        local = [vertex_id((x + dx, level)) for x, level in net.vertices]
        offset = len(edges)
        for u, v, w in net.edges:
            edges.append((local[u], local[v], w))
        essential.extend(offset + e for e in net.essential)
    return PlanarNetwork(a.n, tuple(vertices), tuple(edges),
                         essential=tuple(essential))


def chips_of_word(word: Word, params: Sequence, n: int) -> PlanarNetwork:
    """Concatenation of the chips of a word; its weight matrix equals the
    product map of the word."""
    if len(word) != len(params):
        raise NetworkError("word/parameter length mismatch")
    if not word:
        net = chip(Letter(DIAG, 1), 1, n)  # single neutral column
        return net
    nets = [chip(letter, t, n) for letter, t in zip(word, params)]
    result = nets[0]
    for net in nets[1:]:
        result = concatenate(result, net)
    return result


def standard_network(n: int, weights: Sequence | None = None) -> PlanarNetwork:
    """The totally connected network with n^2 essential edges: falling
    slants, one reweighted middle horizontal per level, rising slants.

    ``weights`` assigns the essential edges in staircase parameter order
    (defaults to all ones); every other edge has weight 1.  The weight
    matrix at positive essential weights is totally positive.
    """
    word = staircase_scheme(n)
    if weights is None:
        weights = [Fraction(1)] * len(word)
    if len(weights) != n * n:
        raise NetworkError(f"expected {n * n} essential weights")
    return chips_of_word(word, list(weights), n)
