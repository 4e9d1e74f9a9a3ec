"""Generators for the standard graph families and their closed-form values.

Each family carries a table of closed-form parameter formulas together
with an empirically determined validity range: the range of sizes over
which exhaustive solving actually reproduces the formula.  Ranges are
computed by brute force (see `determine_validity`), frozen here as
regression fixtures, and re-derived by the test suite.  A formula whose
brute-forced range is empty is a documented divergence, not an assertion.
"""

from __future__ import annotations

import enum
import math
import random
from dataclasses import dataclass
from typing import Iterator

from .errors import NoFormulaForFamily, SpecOutOfRange
from .graph import Graph, from_edge_list
from .solvers import ParameterId, compute_parameter


class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    WHEEL = "wheel"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "bipartite"
    TWO_TREE = "2tree"


@dataclass(frozen=True)
class FamilySpec:
    """A concrete family instance: kind plus size(s) and optional RNG seed.

    For wheels, n is the rim length (the graph has n + 1 vertices, hub 0).
    For complete bipartite graphs, m and n are the side sizes with m <= n.
    """

    kind: FamilyKind
    n: int
    m: int = 0
    seed: int = 0

    def validate(self) -> None:
        k, n, m = self.kind, self.n, self.m
        ok = {
            FamilyKind.PATH: n >= 2,
            FamilyKind.CYCLE: n >= 3,
            FamilyKind.WHEEL: n >= 3,
            FamilyKind.COMPLETE: n >= 2,
            FamilyKind.COMPLETE_BIPARTITE: 1 <= m <= n,
            FamilyKind.TWO_TREE: n >= 3,
        }[k]
        if not ok:
            raise SpecOutOfRange(f"{k.value} with n={n}, m={m} is out of range")


def path_graph(n: int) -> Graph:
    return from_edge_list(n, [(k, k + 1) for k in range(n - 1)], f"P{n}")


def cycle_graph(n: int) -> Graph:
    return from_edge_list(n, [(k, (k + 1) % n) for k in range(n)], f"C{n}")


def wheel_graph(rim: int) -> Graph:
    """Hub vertex 0 joined to every vertex of the rim cycle 1..rim."""
    edges = [(0, k) for k in range(1, rim + 1)]
    edges += [(k, k % rim + 1) for k in range(1, rim + 1)]
    return from_edge_list(rim + 1, edges, f"W{rim}")


def complete_graph(n: int) -> Graph:
    return from_edge_list(
        n, [(u, v) for u in range(n) for v in range(u + 1, n)], f"K{n}"
    )


def complete_bipartite_graph(m: int, n: int) -> Graph:
    """Sides laid out contiguously: 0..m-1 and m..m+n-1."""
    return from_edge_list(
        m + n, [(a, m + b) for a in range(m) for b in range(n)], f"K{m},{n}"
    )


def random_two_tree(n: int, seed: int) -> Graph:
    """Grow a 2-tree from a triangle by gluing vertices onto random edges."""
    rng = random.Random(seed)
    edges = [(0, 1), (0, 2), (1, 2)]
    for v in range(3, n):
        a, b = rng.choice(edges)
        edges += [(v, a), (v, b)]
    return from_edge_list(n, edges, f"T{n}s{seed}")


def generate(spec: FamilySpec) -> Graph:
    spec.validate()
    k = spec.kind
    if k is FamilyKind.PATH:
        return path_graph(spec.n)
    if k is FamilyKind.CYCLE:
        return cycle_graph(spec.n)
    if k is FamilyKind.WHEEL:
        return wheel_graph(spec.n)
    if k is FamilyKind.COMPLETE:
        return complete_graph(spec.n)
    if k is FamilyKind.COMPLETE_BIPARTITE:
        return complete_bipartite_graph(spec.m, spec.n)
    return random_two_tree(spec.n, spec.seed)


def enumerate_two_trees(n: int) -> Iterator[Graph]:
    """All labeled 2-trees built from the base triangle {0,1,2} by
    attaching vertices 3..n-1, in index order, to every existing edge.

    Every unlabeled 2-tree appears at least once; labeled duplicates are
    removed.  Limited to n <= 8 (10395 graphs).
    """
    if not 3 <= n <= 8:
        raise SpecOutOfRange(f"2-tree enumeration supports 3 <= n <= 8, got {n}")
    seen: set[tuple[int, ...]] = set()

    def grow(edges: list[tuple[int, int]], v: int):
        if v == n:
            g = from_edge_list(n, edges, f"T{n}#{len(seen)}")
            if g.adj not in seen:
                seen.add(g.adj)
                yield g
            return
        for a, b in list(edges):
            yield from grow(edges + [(v, a), (v, b)], v + 1)

    yield from grow([(0, 1), (0, 2), (1, 2)], 3)


def is_two_tree(g: Graph) -> bool:
    """Recognize 2-trees by peeling simplicial degree-2 vertices down to K3."""
    if g.n < 3 or g.edge_count() != 2 * g.n - 3:
        return False
    adj = list(g.adj)
    alive = g.full_mask
    remaining = g.n
    while remaining > 3:
        for v in range(g.n):
            if not alive >> v & 1:
                continue
            nb = adj[v] & alive
            if nb.bit_count() != 2:
                continue
            a = (nb & -nb).bit_length() - 1
            b = (nb ^ (nb & -nb)).bit_length() - 1
            if adj[a] >> b & 1:
                alive ^= 1 << v
                remaining -= 1
                break
        else:
            return False
    verts = [v for v in range(g.n) if alive >> v & 1]
    return all(adj[u] >> w & 1 for u in verts for w in verts if u != w)


# ---------------------------------------------------------------------------
# Closed-form expected values with brute-forced validity ranges
# ---------------------------------------------------------------------------

P = ParameterId

#: (kind, pid) -> formula(n, m).  A result of None means "no qualifying
#: set exists" is the expected outcome.  Wheel uppers defer to the rim
#: cycle's plain parameters.
_FORMULAS: dict[tuple[FamilyKind, ParameterId], tuple[str, object]] = {}


def _add(kind: FamilyKind, pids: list[ParameterId], label: str, fn) -> None:
    for pid in pids:
        _FORMULAS[(kind, pid)] = (label, fn)


_add(FamilyKind.PATH, [P.ir_s, P.gamma_s, P.i_s], "ceil(n/3)",
     lambda n, m: math.ceil(n / 3))
_add(FamilyKind.PATH, [P.beta_s, P.Gamma_u_s, P.IR_u_s], "ceil(n/2)",
     lambda n, m: math.ceil(n / 2))
_add(FamilyKind.PATH, [P.gamma_ns, P.Gamma_u_ns], "n-2", lambda n, m: n - 2)
_add(FamilyKind.PATH, [P.i_ns, P.beta_ns, P.ir_ns, P.IR_u_ns], "2",
     lambda n, m: 2)

_add(FamilyKind.CYCLE, [P.ir_s, P.gamma_s, P.i_s], "ceil(n/3)",
     lambda n, m: math.ceil(n / 3))
_add(FamilyKind.CYCLE, [P.beta_s, P.Gamma_u_s, P.IR_u_s], "floor(n/2)",
     lambda n, m: n // 2)
_add(FamilyKind.CYCLE, [P.gamma_ns, P.Gamma_u_ns], "n-2", lambda n, m: n - 2)
_add(FamilyKind.CYCLE, [P.i_ns, P.beta_ns], "1", lambda n, m: 1)
_add(FamilyKind.CYCLE, [P.ir_ns, P.IR_u_ns], "2", lambda n, m: 2)

_add(FamilyKind.WHEEL, [P.gamma_ns, P.i_ns, P.ir_ns], "1", lambda n, m: 1)
_add(FamilyKind.WHEEL, [P.Gamma_u_ns], "Gamma_u(C_n)",
     lambda n, m: compute_parameter(cycle_graph(n), P.Gamma_u).value)
_add(FamilyKind.WHEEL, [P.beta_ns], "beta(C_n)",
     lambda n, m: compute_parameter(cycle_graph(n), P.beta).value)
_add(FamilyKind.WHEEL, [P.IR_u_ns], "IR_u(C_n)",
     lambda n, m: compute_parameter(cycle_graph(n), P.IR_u).value)
_add(FamilyKind.WHEEL, [P.i_s, P.beta_s, P.ir_s, P.IR_u_s],
     "undefined (no qualifying set)", lambda n, m: None)

_add(FamilyKind.COMPLETE, [P.i_s, P.beta_s, P.ir_s, P.IR_u_s],
     "undefined (no qualifying set)", lambda n, m: None)

_add(FamilyKind.COMPLETE_BIPARTITE, [P.ir_s, P.gamma_s, P.i_s], "min(m,n)",
     lambda n, m: min(m, n))
_add(FamilyKind.COMPLETE_BIPARTITE, [P.beta_s, P.Gamma_u_s, P.IR_u_s],
     "max(m,n)", lambda n, m: max(m, n))
_add(FamilyKind.COMPLETE_BIPARTITE, [P.gamma_ns, P.Gamma_u_ns, P.ir_ns], "2",
     lambda n, m: 2)
_add(FamilyKind.COMPLETE_BIPARTITE, [P.i_ns], "m-1", lambda n, m: m - 1)
_add(FamilyKind.COMPLETE_BIPARTITE, [P.beta_ns, P.IR_u_ns], "n-1",
     lambda n, m: n - 1)

#: Size windows over which validity is brute-forced (and the families the
#: acceptance suite exercises).
VALIDITY_WINDOWS = {
    FamilyKind.PATH: (2, 12),
    FamilyKind.CYCLE: (3, 12),
    FamilyKind.WHEEL: (3, 8),
    FamilyKind.COMPLETE: (2, 8),
    FamilyKind.COMPLETE_BIPARTITE: (1, 6),
}

#: Frozen brute-forced validity thresholds (see determine_validity).
#: Linear families map to the smallest size from which the formula holds
#: through the window (None = holds nowhere in the window).  Bipartite
#: maps to the lexicographically smallest (m0, n0) with the formula
#: holding on {(m, n): m0 <= m <= n, n0 <= n <= window end}.
#:
#: Two entries document real divergences rather than size effects:
#: the path upper nonsplit domination formula n-2 never matches (every
#: P_n has the 1-minimal witness V minus an endpoint, of size n-1), and
#: the bipartite upper nonsplit irredundance formula n-1 fails at (2,2),
#: where the mixed pair {a, b} is 1-maximal and gives 2.
VALIDITY: dict[tuple[FamilyKind, ParameterId], object] = {
    (FamilyKind.PATH, P.ir_s): 2,
    (FamilyKind.PATH, P.gamma_s): 2,
    (FamilyKind.PATH, P.i_s): 2,
    (FamilyKind.PATH, P.beta_s): 2,
    (FamilyKind.PATH, P.Gamma_u_s): 2,
    (FamilyKind.PATH, P.IR_u_s): 2,
    (FamilyKind.PATH, P.gamma_ns): 4,
    (FamilyKind.PATH, P.Gamma_u_ns): None,
    (FamilyKind.PATH, P.i_ns): 3,
    (FamilyKind.PATH, P.beta_ns): 3,
    (FamilyKind.PATH, P.ir_ns): 3,
    (FamilyKind.PATH, P.IR_u_ns): 3,
    (FamilyKind.CYCLE, P.ir_s): 4,
    (FamilyKind.CYCLE, P.gamma_s): 4,
    (FamilyKind.CYCLE, P.i_s): 4,
    (FamilyKind.CYCLE, P.beta_s): 4,
    (FamilyKind.CYCLE, P.Gamma_u_s): 4,
    (FamilyKind.CYCLE, P.IR_u_s): 4,
    (FamilyKind.CYCLE, P.gamma_ns): 3,
    (FamilyKind.CYCLE, P.Gamma_u_ns): 3,
    (FamilyKind.CYCLE, P.i_ns): 3,
    (FamilyKind.CYCLE, P.beta_ns): 3,
    (FamilyKind.CYCLE, P.ir_ns): 4,
    (FamilyKind.CYCLE, P.IR_u_ns): 4,
    (FamilyKind.WHEEL, P.gamma_ns): 3,
    (FamilyKind.WHEEL, P.Gamma_u_ns): 3,
    (FamilyKind.WHEEL, P.i_ns): 3,
    (FamilyKind.WHEEL, P.beta_ns): 3,
    (FamilyKind.WHEEL, P.ir_ns): 3,
    (FamilyKind.WHEEL, P.IR_u_ns): 3,
    (FamilyKind.WHEEL, P.i_s): 3,
    (FamilyKind.WHEEL, P.beta_s): 3,
    (FamilyKind.WHEEL, P.ir_s): 3,
    (FamilyKind.WHEEL, P.IR_u_s): 3,
    (FamilyKind.COMPLETE, P.i_s): 3,
    (FamilyKind.COMPLETE, P.beta_s): 3,
    (FamilyKind.COMPLETE, P.ir_s): 3,
    (FamilyKind.COMPLETE, P.IR_u_s): 3,
    (FamilyKind.COMPLETE_BIPARTITE, P.ir_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.gamma_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.i_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.beta_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.Gamma_u_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.IR_u_s): (1, 1),
    (FamilyKind.COMPLETE_BIPARTITE, P.gamma_ns): (2, 2),
    (FamilyKind.COMPLETE_BIPARTITE, P.Gamma_u_ns): (2, 2),
    (FamilyKind.COMPLETE_BIPARTITE, P.i_ns): (2, 2),
    (FamilyKind.COMPLETE_BIPARTITE, P.beta_ns): (2, 2),
    (FamilyKind.COMPLETE_BIPARTITE, P.ir_ns): (2, 2),
    (FamilyKind.COMPLETE_BIPARTITE, P.IR_u_ns): (2, 3),
}


def _in_range(kind: FamilyKind, pid: ParameterId, n: int, m: int) -> bool:
    threshold = VALIDITY.get((kind, pid))
    if threshold is None:
        return False
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        m0, n0 = threshold
        return m >= m0 and n >= n0
    return n >= threshold


def validity_label(kind: FamilyKind, pid: ParameterId) -> str:
    threshold = VALIDITY.get((kind, pid))
    if threshold is None:
        return "never (diverges throughout the checked window)"
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        m0, n0 = threshold
        return f"m >= {m0} and n >= {n0}"
    return f"n >= {threshold}"


@dataclass(frozen=True)
class ExpectedValue:
    """One formula instantiated at a concrete family size."""

    pid: ParameterId
    expected: int | None
    in_range: bool
    formula: str
    validity: str


def expected_values(spec: FamilySpec) -> list[ExpectedValue]:
    """The family's formula values at spec's size, with validity flags."""
    spec.validate()
    if spec.kind is FamilyKind.TWO_TREE:
        raise NoFormulaForFamily("2-trees have a non-existence claim, not formulas")
    out = []
    for (kind, pid), (label, fn) in _FORMULAS.items():
        if kind is not spec.kind:
            continue
        out.append(ExpectedValue(
            pid=pid,
            expected=fn(spec.n, spec.m),
            in_range=_in_range(kind, pid, spec.n, spec.m),
            formula=label,
            validity=validity_label(kind, pid),
        ))
    return out


def _instance(kind: FamilyKind, size) -> FamilySpec:
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return FamilySpec(kind, size[1], size[0])
    return FamilySpec(kind, size)


def _window_sizes(kind: FamilyKind):
    lo, hi = VALIDITY_WINDOWS[kind]
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        return [(m, n) for m in range(lo, hi + 1) for n in range(m, hi + 1)]
    return list(range(lo, hi + 1))


def _formula_at(kind: FamilyKind, pid: ParameterId, size) -> int | None:
    _, fn = _FORMULAS[(kind, pid)]
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        m, n = size
        return fn(n, m)
    return fn(size, 0)


def determine_validity(kind: FamilyKind):
    """Brute-force the validity threshold of each of the family's formulas.

    Returns (thresholds, mismatches): thresholds as stored in VALIDITY,
    mismatches as {pid: [(size, expected, computed), ...]} over the whole
    window, for divergence reporting.
    """
    sizes = _window_sizes(kind)
    pids = [pid for (k, pid) in _FORMULAS if k is kind]
    computed = {
        size: {
            pid: compute_parameter(generate(_instance(kind, size)), pid).value
            for pid in pids
        }
        for size in sizes
    }
    thresholds: dict[ParameterId, object] = {}
    mismatches: dict[ParameterId, list] = {}
    for pid in pids:
        def matches(size) -> bool:
            return computed[size][pid] == _formula_at(kind, pid, size)

        mismatches[pid] = [
            (size, _formula_at(kind, pid, size), computed[size][pid])
            for size in sizes
            if not matches(size)
        ]
        thresholds[pid] = None
        if kind is FamilyKind.COMPLETE_BIPARTITE:
            lo, hi = VALIDITY_WINDOWS[kind]
            candidates = (
                (m0, n0) for m0 in range(lo, hi + 1) for n0 in range(m0, hi + 1)
            )
            for m0, n0 in candidates:
                scope = [(m, n) for (m, n) in sizes if m >= m0 and n >= n0]
                if scope and all(matches(sz) for sz in scope):
                    thresholds[pid] = (m0, n0)
                    break
        else:
            for n0 in sizes:
                if all(matches(sz) for sz in sizes if sz >= n0):
                    thresholds[pid] = n0
                    break
    return thresholds, mismatches
