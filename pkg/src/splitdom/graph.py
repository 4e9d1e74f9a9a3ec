"""Graph representation, graph6 / edge-list I/O, and structural queries.

Graphs are simple, undirected, and small (1 <= n <= 32).  Adjacency is
stored as one open-neighborhood bitmask per vertex, and vertex sets
everywhere in this package are plain Python ints used as bitmasks over
vertex indices 0..n-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import (
    DisconnectedInput,
    LoopRejected,
    MalformedGraph6,
    NTooLarge,
    VertexOutOfRange,
)

MAX_VERTICES = 32

GRAPH6_HEADER = ">>graph6<<"


def bits_of(vertices: Iterable[int]) -> int:
    """Pack an iterable of vertex indices into a bitmask."""
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def members(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into a sorted tuple of vertex indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def popcount(mask: int) -> int:
    return mask.bit_count()


class ComplementStatus(enum.Enum):
    """Classification of the subgraph induced by the complement of a set."""

    EMPTY = "empty"
    K1 = "k1"
    DISCONNECTED = "disconnected"
    CONNECTED_MULTIPLE = "connected-multiple"


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on n <= 32 vertices.

    adj[v] is the open-neighborhood bitmask of v.  Adjacency is symmetric
    and irreflexive; bits at positions >= n are zero.
    """

    n: int
    adj: tuple[int, ...]
    id: str | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_VERTICES:
            raise NTooLarge(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise VertexOutOfRange(f"adjacency row {v} has bits beyond n-1")
            if row >> v & 1:
                raise LoopRejected(f"vertex {v} is adjacent to itself")
        for v in range(self.n):
            for u in members(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def closed(self, v: int) -> int:
        """Closed neighborhood N[v] as a bitmask."""
        return self.adj[v] | 1 << v

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in members(self.adj[u])
            if u < v
        ]

    def edge_count(self) -> int:
        return sum(self.degree(v) for v in range(self.n)) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, new_id: str | None) -> "Graph":
        return Graph(self.n, self.adj, new_id)


@dataclass(frozen=True)
class GraphStats:
    """Degree extremes, diameter, connectivity flag, and vertex connectivity.

    diameter is None for disconnected graphs.  kappa follows the cut-set
    definition in which removing all but one vertex counts as a cut, so
    kappa(K_n) = n - 1.
    """

    min_degree: int
    max_degree: int
    diameter: int | None
    kappa: int
    connected: bool


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], id: str | None = None) -> Graph:
    """Build a graph from an explicit edge list; duplicate edges collapse."""
    if n > MAX_VERTICES or n < 1:
        raise NTooLarge(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise LoopRejected(f"loop ({u},{u}) rejected")
        if not (0 <= u < n and 0 <= v < n):
            raise VertexOutOfRange(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows), id)


def parse_graph6(text: str | bytes) -> Graph:
    """Decode one graph6 line into a Graph.

    Accepts the optional '>>graph6<<' header and surrounding whitespace.
    Rejects n = 0, n > 32, bytes outside the printable graph6 range,
    wrong data length, and nonzero padding bits, so that
    parse_graph6(to_graph6(g)) is a bit-exact round trip.
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise MalformedGraph6("non-ASCII bytes") from exc
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    data = [ord(ch) - 63 for ch in line]
    if any(not 0 <= x <= 63 for x in data):
        raise MalformedGraph6(f"byte outside graph6 range in {line!r}")
    if data[0] == 63:
        # multi-byte vertex count; anything encoded this way exceeds 32
        raise NTooLarge("graph6 long-form vertex count exceeds 32")
    n = data[0]
    body = data[1:]
    if n == 0:
        raise MalformedGraph6("graph6 line encodes an empty vertex set")
    if n > MAX_VERTICES:
        raise NTooLarge(f"graph6 vertex count {n} exceeds {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise MalformedGraph6(
            f"expected {nbytes} data bytes for n={n}, got {len(body)}"
        )
    bits = 0
    for x in body:
        bits = bits << 6 | x
    pad = 6 * nbytes - nbits
    if bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= pad
    rows = [0] * n
    pos = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if bits >> pos & 1:
                rows[row] |= 1 << col
                rows[col] |= 1 << row
            pos -= 1
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    """Encode a graph as a canonical (headerless) graph6 line."""
    nbits = g.n * (g.n - 1) // 2
    bits = 0
    for col in range(1, g.n):
        for row in range(col):
            bits = bits << 1 | (g.adj[row] >> col & 1)
    nbytes = (nbits + 5) // 6
    bits <<= 6 * nbytes - nbits
    out = [chr(g.n + 63)]
    for k in range(nbytes - 1, -1, -1):
        out.append(chr((bits >> 6 * k & 63) + 63))
    return "".join(out)


def read_edge_list(text: str, id: str | None = None) -> Graph:
    """Parse the edge-list text format: first line n, then 'u v' lines.

    '#' starts a comment; blank lines are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            n = int(line)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"expected 'u v' pair, got {raw!r}")
        edges.append((int(parts[0]), int(parts[1])))
    if n is None:
        raise ValueError("edge-list input has no vertex-count line")
    return from_edge_list(n, edges, id)


def closed_neighborhood(g: Graph, s: int) -> int:
    """N[S]: the set S together with every neighbor of a member of S."""
    out = s
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        out |= g.adj[low.bit_length() - 1]
    return out


def _component_mask(g: Graph, inside: int, start: int) -> int:
    """Vertices of the induced subgraph on `inside` reachable from `start`."""
    reach = start
    while True:
        grown = (reach | closed_neighborhood(g, reach)) & inside
        if grown == reach:
            return reach
        reach = grown


def is_connected_subset(g: Graph, inside: int) -> bool:
    """Whether the induced subgraph on the nonempty set `inside` is connected."""
    start = inside & -inside
    return _component_mask(g, inside, start) == inside


def induced_status(g: Graph, s: int) -> ComplementStatus:
    """Classify the subgraph induced by the complement of s."""
    comp = g.full_mask & ~s
    if comp == 0:
        return ComplementStatus.EMPTY
    if comp.bit_count() == 1:
        return ComplementStatus.K1
    if is_connected_subset(g, comp):
        return ComplementStatus.CONNECTED_MULTIPLE
    return ComplementStatus.DISCONNECTED


def is_connected(g: Graph) -> bool:
    return is_connected_subset(g, g.full_mask)


def vertex_connectivity(g: Graph) -> int:
    """Size of a smallest vertex cut set, by ascending-size enumeration.

    A cut set is any s whose removal leaves a disconnected graph or a K1;
    under that definition complete graphs get kappa = n - 1 without a
    special case.  Early exit keeps this fast at desk scale.
    """
    from itertools import combinations

    for k in range(g.n):
        for combo in combinations(range(g.n), k):
            s = bits_of(combo)
            if induced_status(g, s) in (
                ComplementStatus.DISCONNECTED,
                ComplementStatus.K1,
            ):
                return k
    # unreachable: removing n-1 vertices always leaves a K1
    raise AssertionError("no cut set found")


def _eccentricities(g: Graph) -> list[int] | None:
    """BFS eccentricity per vertex, or None if the graph is disconnected."""
    ecc = []
    for v in range(g.n):
        seen = 1 << v
        frontier = 1 << v
        dist = 0
        while True:
            nxt = closed_neighborhood(g, frontier) & ~seen
            if not nxt:
                break
            seen |= nxt
            frontier = nxt
            dist += 1
        if seen != g.full_mask:
            return None
        ecc.append(dist)
    return ecc


def stats(g: Graph) -> GraphStats:
    """Degree extremes, diameter, connectivity flag, and kappa."""
    degrees = [g.degree(v) for v in range(g.n)]
    ecc = _eccentricities(g)
    return GraphStats(
        min_degree=min(degrees),
        max_degree=max(degrees),
        diameter=max(ecc) if ecc is not None else None,
        kappa=vertex_connectivity(g),
        connected=ecc is not None,
    )


def require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedInput(f"graph {g.id or to_graph6(g)} is disconnected")


def iter_graph6_lines(text: str) -> Iterator[str]:
    """Yield nonempty, non-comment lines from a graph6 corpus blob."""
    for raw in text.splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            yield line
