"""Predicates for the nine-property grid and their extremality modes.

The grid crosses three base properties (dominating, independent,
irredundant) with three complement conditions (plain, split, nonsplit).
A set is split-flavored when the subgraph induced by its complement is
disconnected or a single vertex, nonsplit-flavored when that subgraph is
connected (a single vertex counts as connected).  An empty complement
satisfies neither flavor, which keeps the whole vertex set out of every
flavored parameter.

Everything here is a pure function of (Graph, bitmask); these are the
reference predicates that witnesses and certificates are re-checked
against.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .errors import PropertyNotSatisfied, VertexNotInSet
from .graph import (
    ComplementStatus,
    Graph,
    closed_neighborhood,
    induced_status,
    is_connected_subset,
    members,
)


class Base(enum.Enum):
    DOMINATING = "dominating"
    INDEPENDENT = "independent"
    IRREDUNDANT = "irredundant"


class Flavor(enum.Enum):
    PLAIN = "plain"
    SPLIT = "split"
    NONSPLIT = "nonsplit"


@dataclass(frozen=True)
class PropertyId:
    base: Base
    flavor: Flavor

    @property
    def name(self) -> str:
        return f"{self.base.value}/{self.flavor.value}"


ALL_PROPERTIES = tuple(
    PropertyId(base, flavor) for base in Base for flavor in Flavor
)


class ExtremalMode(enum.Enum):
    ANY = "any"
    ONE_MINIMAL = "one-minimal"
    ONE_MAXIMAL = "one-maximal"
    SUBSET_MINIMAL = "subset-minimal"
    SUPERSET_MAXIMAL = "superset-maximal"


def is_dominating(g: Graph, s: int) -> bool:
    """True iff N[S] covers every vertex."""
    return closed_neighborhood(g, s) == g.full_mask


def is_independent(g: Graph, s: int) -> bool:
    """True iff s induces no edges; the empty set is independent."""
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        if g.adj[low.bit_length() - 1] & s:
            return False
    return True


def private_neighbors(g: Graph, s: int, v: int) -> int:
    """pn(v, S) = N[v] minus N[S - v]; v counts when nothing else covers it."""
    if not s >> v & 1:
        raise VertexNotInSet(f"vertex {v} not in set {members(s)}")
    return g.closed(v) & ~closed_neighborhood(g, s ^ (1 << v))


def is_irredundant(g: Graph, s: int) -> bool:
    """True iff every member of s has a private neighbor; vacuous for s = 0."""
    rest = s
    while rest:
        low = rest & -rest
        rest ^= low
        v = low.bit_length() - 1
        if not g.closed(v) & ~closed_neighborhood(g, s ^ low):
            return False
    return True


_BASE_PREDICATES = {
    Base.DOMINATING: is_dominating,
    Base.INDEPENDENT: is_independent,
    Base.IRREDUNDANT: is_irredundant,
}

_SPLIT_STATUSES = (ComplementStatus.DISCONNECTED, ComplementStatus.K1)
_NONSPLIT_STATUSES = (ComplementStatus.CONNECTED_MULTIPLE, ComplementStatus.K1)


def flavor_holds(g: Graph, s: int, flavor: Flavor) -> bool:
    if flavor is Flavor.PLAIN:
        return True
    status = induced_status(g, s)
    if flavor is Flavor.SPLIT:
        return status in _SPLIT_STATUSES
    return status in _NONSPLIT_STATUSES


def satisfies(g: Graph, s: int, p: PropertyId) -> bool:
    """Base predicate AND complement condition for the flavor."""
    return _BASE_PREDICATES[p.base](g, s) and flavor_holds(g, s, p.flavor)


def _iter_proper_submasks(s: int):
    sub = (s - 1) & s
    while sub != s:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & s


def is_extremal(g: Graph, s: int, p: PropertyId, mode: ExtremalMode) -> bool:
    """Extremality of a qualifying set under the requested mode.

    ONE_* modes test single-vertex perturbations; SUBSET_MINIMAL and
    SUPERSET_MAXIMAL quantify over all proper subsets/supersets and are
    exponential, meant for oracle duty on small graphs.
    """
    if not satisfies(g, s, p):
        raise PropertyNotSatisfied(f"{members(s)} does not satisfy {p.name}")
    if mode is ExtremalMode.ANY:
        return True
    if mode is ExtremalMode.ONE_MINIMAL:
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if satisfies(g, s ^ low, p):
                return False
        return True
    if mode is ExtremalMode.ONE_MAXIMAL:
        rest = g.full_mask & ~s
        while rest:
            low = rest & -rest
            rest ^= low
            if satisfies(g, s | low, p):
                return False
        return True
    if mode is ExtremalMode.SUBSET_MINIMAL:
        return all(not satisfies(g, sub, p) for sub in _iter_proper_submasks(s))
    if mode is ExtremalMode.SUPERSET_MAXIMAL:
        outside = members(g.full_mask & ~s)
        for k in range(1, len(outside) + 1):
            for extra in combinations(outside, k):
                sup = s
                for v in extra:
                    sup |= 1 << v
                if satisfies(g, sup, p):
                    return False
        return True
    raise ValueError(f"unknown mode {mode}")


# ---------------------------------------------------------------------------
# Literal per-clause extremality variants (diagnostics only).
#
# The textbook-style definitions of "minimal split dominating" and
# "maximal split/nonsplit independent/irredundant" state per-vertex clause
# pairs instead of the property-level one-step conditions above.  They are
# kept here, behind their own names, for comparison scans; the solvers use
# the property-level modes exclusively.
# ---------------------------------------------------------------------------


def _status_of_set(g: Graph, inside: int) -> ComplementStatus:
    """ComplementStatus vocabulary applied directly to an induced set."""
    if inside == 0:
        return ComplementStatus.EMPTY
    if inside.bit_count() == 1:
        return ComplementStatus.K1
    if is_connected_subset(g, inside):
        return ComplementStatus.CONNECTED_MULTIPLE
    return ComplementStatus.DISCONNECTED


def _grow_clause_holds(g: Graph, s: int, v: int, base: Base, flavor: Flavor) -> bool:
    """One literal maximality clause for an outside vertex v."""
    grown = s | 1 << v
    if base is Base.INDEPENDENT:
        first = not is_independent(g, grown)
    else:
        first = private_neighbors(g, grown, v) == 0
    if first:
        return True
    status = _status_of_set(g, g.full_mask & ~grown)
    if flavor is Flavor.SPLIT:
        # "connected" read strictly: two or more vertices and connected
        return status is ComplementStatus.CONNECTED_MULTIPLE
    return status in _SPLIT_STATUSES


def literal_is_maximal(g: Graph, s: int, p: PropertyId) -> bool:
    """Literal-clause maximality for split/nonsplit independent/irredundant."""
    if p.flavor is Flavor.PLAIN or p.base is Base.DOMINATING:
        raise ValueError("literal maximality applies to flavored independent/irredundant sets")
    if not satisfies(g, s, p):
        raise PropertyNotSatisfied(f"{members(s)} does not satisfy {p.name}")
    return all(
        _grow_clause_holds(g, s, v, p.base, p.flavor)
        for v in members(g.full_mask & ~s)
    )


def literal_is_minimal_dominating(
    g: Graph, s: int, flavor: Flavor, whole_set: bool = False
) -> bool:
    """Literal-clause minimality for split/nonsplit dominating sets.

    The source definition's quantifier scope is ambiguous; per_vertex
    (default) reads "private neighbor OR reconnection" per member, while
    whole_set=True reads each clause as quantified over all of S.
    """
    if flavor is Flavor.PLAIN:
        raise ValueError("literal minimality applies to flavored dominating sets")
    p = PropertyId(Base.DOMINATING, flavor)
    if not satisfies(g, s, p):
        raise PropertyNotSatisfied(f"{members(s)} does not satisfy {p.name}")
    comp = g.full_mask & ~s

    def second_clause(v: int) -> bool:
        status = _status_of_set(g, comp | 1 << v)
        if flavor is Flavor.SPLIT:
            return status is ComplementStatus.CONNECTED_MULTIPLE
        return status in _SPLIT_STATUSES

    verts = members(s)
    if whole_set:
        return all(private_neighbors(g, s, v) != 0 for v in verts) or all(
            second_clause(v) for v in verts
        )
    return all(
        private_neighbors(g, s, v) != 0 or second_clause(v) for v in verts
    )
