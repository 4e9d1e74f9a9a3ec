"""Exact computation of the 19 parameters, with witnesses and an oracle.

The fast path derives every parameter from the per-subset kernel tables:
a qualifying-set boolean array per (property, extremal mode), scanned in
ascending (cardinality, bit pattern) order for min-type parameters and
reduced to the largest qualifying cardinality for max-type ones.  The
oracle path recomputes everything as a plain power-set sweep through the
reference predicates in `properties`, sharing no search code with the
fast path; agreement between the two is asserted by the test suite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ._kernels import SubsetTables, subset_tables
from .errors import TooLargeForOracle
from .graph import Graph, GraphStats, members, require_connected, stats
from .properties import (
    Base,
    ExtremalMode,
    Flavor,
    PropertyId,
    satisfies,
)

MAX_ORACLE_VERTICES = 12


class ParameterId(enum.Enum):
    """The 19 computable parameters; values are the serialized ASCII keys."""

    ir = "ir"
    gamma = "gamma"
    i = "i"
    beta = "beta"
    Gamma_u = "Gamma_u"
    IR_u = "IR_u"
    ir_s = "ir_s"
    gamma_s = "gamma_s"
    i_s = "i_s"
    beta_s = "beta_s"
    Gamma_u_s = "Gamma_u_s"
    IR_u_s = "IR_u_s"
    ir_ns = "ir_ns"
    gamma_ns = "gamma_ns"
    i_ns = "i_ns"
    beta_ns = "beta_ns"
    Gamma_u_ns = "Gamma_u_ns"
    IR_u_ns = "IR_u_ns"
    kappa = "kappa"

    @property
    def key(self) -> str:
        return self.value


_FLAVOR_SUFFIX = {Flavor.PLAIN: "", Flavor.SPLIT: "_s", Flavor.NONSPLIT: "_ns"}

#: pid -> (base, flavor, extremal mode, aggregation)
PARAM_RULES: dict[ParameterId, tuple[PropertyId, ExtremalMode, str]] = {}
for _flavor in Flavor:
    _sfx = _FLAVOR_SUFFIX[_flavor]
    PARAM_RULES[ParameterId(f"ir{_sfx}")] = (
        PropertyId(Base.IRREDUNDANT, _flavor), ExtremalMode.ONE_MAXIMAL, "min")
    PARAM_RULES[ParameterId(f"gamma{_sfx}")] = (
        PropertyId(Base.DOMINATING, _flavor), ExtremalMode.ANY, "min")
    PARAM_RULES[ParameterId(f"i{_sfx}")] = (
        PropertyId(Base.INDEPENDENT, _flavor), ExtremalMode.ONE_MAXIMAL, "min")
    PARAM_RULES[ParameterId(f"beta{_sfx}")] = (
        PropertyId(Base.INDEPENDENT, _flavor), ExtremalMode.ONE_MAXIMAL, "max")
    PARAM_RULES[ParameterId(f"Gamma_u{_sfx}")] = (
        PropertyId(Base.DOMINATING, _flavor), ExtremalMode.ONE_MINIMAL, "max")
    PARAM_RULES[ParameterId(f"IR_u{_sfx}")] = (
        PropertyId(Base.IRREDUNDANT, _flavor), ExtremalMode.ONE_MAXIMAL, "max")

#: the classical and flavored chains, in inequality order
CHAIN_ORDER = {
    Flavor.PLAIN: (ParameterId.ir, ParameterId.gamma, ParameterId.i,
                   ParameterId.beta, ParameterId.Gamma_u, ParameterId.IR_u),
    Flavor.SPLIT: (ParameterId.ir_s, ParameterId.gamma_s, ParameterId.i_s,
                   ParameterId.beta_s, ParameterId.Gamma_u_s, ParameterId.IR_u_s),
    Flavor.NONSPLIT: (ParameterId.ir_ns, ParameterId.gamma_ns, ParameterId.i_ns,
                      ParameterId.beta_ns, ParameterId.Gamma_u_ns,
                      ParameterId.IR_u_ns),
}

ALL_PARAMETERS = tuple(ParameterId)


@dataclass(frozen=True)
class ParamResult:
    """A parameter value with a witness bitmask, or the Undefined outcome."""

    value: int | None
    witness: int | None

    @property
    def defined(self) -> bool:
        return self.value is not None


UNDEFINED = ParamResult(None, None)


@dataclass(frozen=True)
class ParameterTable:
    """All 19 parameter results plus structural stats for one graph."""

    graph: Graph
    results: dict[ParameterId, ParamResult]
    graph_stats: GraphStats

    def __getitem__(self, pid: ParameterId) -> ParamResult:
        return self.results[pid]

    def value(self, pid: ParameterId) -> int | None:
        return self.results[pid].value


# ---------------------------------------------------------------------------
# Derived boolean tables over the subset lattice
# ---------------------------------------------------------------------------


def base_table(t: SubsetTables, base: Base) -> np.ndarray:
    if base is Base.DOMINATING:
        return t.nbh == np.uint32((1 << t.n) - 1)
    if base is Base.INDEPENDENT:
        return t.ind
    return t.irr


def flavor_table(t: SubsetTables, flavor: Flavor) -> np.ndarray:
    size = 1 << t.n
    if flavor is Flavor.PLAIN:
        return np.ones(size, dtype=np.bool_)
    comp = np.arange(size, dtype=np.uint32) ^ np.uint32(size - 1)
    nonempty = comp != 0
    if flavor is Flavor.SPLIT:
        return nonempty & ((t.pop[comp] == 1) | ~t.conn[comp])
    return nonempty & t.conn[comp]


def property_table(t: SubsetTables, p: PropertyId) -> np.ndarray:
    """qual[s] = satisfies(g, s, p), for every subset s."""
    return base_table(t, p.base) & flavor_table(t, p.flavor)


def one_maximal_table(t: SubsetTables, qual: np.ndarray) -> np.ndarray:
    """qual sets with no qualifying single-vertex extension."""
    idx = np.arange(1 << t.n, dtype=np.uint32)
    out = qual.copy()
    for v in range(t.n):
        b = np.uint32(1 << v)
        without = (idx & b) == 0
        out[without] &= ~qual[idx[without] | b]
    return out


def one_minimal_table(t: SubsetTables, qual: np.ndarray) -> np.ndarray:
    """qual sets with no qualifying single-vertex deletion."""
    idx = np.arange(1 << t.n, dtype=np.uint32)
    out = qual.copy()
    for v in range(t.n):
        b = np.uint32(1 << v)
        with_v = (idx & b) != 0
        out[with_v] &= ~qual[idx[with_v] ^ b]
    return out


def subset_minimal_table(t: SubsetTables, qual: np.ndarray) -> np.ndarray:
    """qual sets with no qualifying proper subset (zeta-transform closure)."""
    idx = np.arange(1 << t.n, dtype=np.uint32)
    any_sub = qual.copy()
    for v in range(t.n):
        b = np.uint32(1 << v)
        with_v = (idx & b) != 0
        any_sub[with_v] |= any_sub[idx[with_v] ^ b]
    proper = np.zeros_like(qual)
    for v in range(t.n):
        b = np.uint32(1 << v)
        with_v = (idx & b) != 0
        proper[with_v] |= any_sub[idx[with_v] ^ b]
    return qual & ~proper


def superset_maximal_table(t: SubsetTables, qual: np.ndarray) -> np.ndarray:
    """qual sets with no qualifying proper superset."""
    idx = np.arange(1 << t.n, dtype=np.uint32)
    any_sup = qual.copy()
    for v in range(t.n):
        b = np.uint32(1 << v)
        without = (idx & b) == 0
        any_sup[without] |= any_sup[idx[without] | b]
    proper = np.zeros_like(qual)
    for v in range(t.n):
        b = np.uint32(1 << v)
        without = (idx & b) == 0
        proper[without] |= any_sup[idx[without] | b]
    return qual & ~proper


_MODE_DERIVERS = {
    ExtremalMode.ONE_MAXIMAL: one_maximal_table,
    ExtremalMode.ONE_MINIMAL: one_minimal_table,
    ExtremalMode.SUBSET_MINIMAL: subset_minimal_table,
    ExtremalMode.SUPERSET_MAXIMAL: superset_maximal_table,
}


def mode_table(t: SubsetTables, p: PropertyId, mode: ExtremalMode) -> np.ndarray:
    qual = property_table(t, p)
    if mode is ExtremalMode.ANY:
        return qual
    return _MODE_DERIVERS[mode](t, qual)


def subset_order(t: SubsetTables) -> np.ndarray:
    """All subsets sorted by ascending cardinality, then bit pattern."""
    idx = np.arange(1 << t.n, dtype=np.uint32)
    return np.lexsort((idx, t.pop)).astype(np.uint32)


# ---------------------------------------------------------------------------
# Solver entry points
# ---------------------------------------------------------------------------


def enumerate_sets(g: Graph, p: PropertyId, mode: ExtremalMode):
    """Yield every subset satisfying (p, mode), smallest first.

    Order is ascending cardinality, ties broken by numeric bit pattern.
    Callers are expected to pass connected graphs.
    """
    t = subset_tables(g)
    table = mode_table(t, p, mode)
    for s in subset_order(t):
        if table[s]:
            yield int(s)


def _min_result(table: np.ndarray, order: np.ndarray, pop: np.ndarray) -> ParamResult:
    hits = table[order]
    pos = int(np.argmax(hits))
    if not hits[pos]:
        return UNDEFINED
    witness = int(order[pos])
    return ParamResult(int(pop[witness]), witness)


def _max_result(table: np.ndarray, pop: np.ndarray) -> ParamResult:
    masks = np.nonzero(table)[0]
    if masks.size == 0:
        return UNDEFINED
    best = int(pop[masks].max())
    witness = int(masks[pop[masks] == best].min())
    return ParamResult(best, witness)


def _kappa_result(t: SubsetTables) -> ParamResult:
    """kappa = size of the smallest cut set (complement disconnected or K1)."""
    cuts = flavor_table(t, Flavor.SPLIT)
    return _min_result(cuts, subset_order(t), t.pop)


def _check_solver_input(g: Graph) -> None:
    require_connected(g)
    if g.n < 2:
        raise ValueError("parameters are defined for connected graphs with n >= 2")


def compute_parameter(g: Graph, pid: ParameterId) -> ParamResult:
    """One parameter with a deterministic witness; Undefined when no set qualifies."""
    _check_solver_input(g)
    t = subset_tables(g)
    if pid is ParameterId.kappa:
        return _kappa_result(t)
    p, mode, agg = PARAM_RULES[pid]
    table = mode_table(t, p, mode)
    if agg == "min":
        return _min_result(table, subset_order(t), t.pop)
    return _max_result(table, t.pop)


def compute_table(g: Graph) -> ParameterTable:
    """All 19 parameters, sharing one kernel pass and one table per property."""
    _check_solver_input(g)
    t = subset_tables(g)
    order = subset_order(t)
    quals: dict[PropertyId, np.ndarray] = {}
    modes: dict[tuple[PropertyId, ExtremalMode], np.ndarray] = {}

    def table_for(p: PropertyId, mode: ExtremalMode) -> np.ndarray:
        if (p, mode) not in modes:
            if p not in quals:
                quals[p] = property_table(t, p)
            qual = quals[p]
            modes[(p, mode)] = (
                qual if mode is ExtremalMode.ANY else _MODE_DERIVERS[mode](t, qual)
            )
        return modes[(p, mode)]

    results: dict[ParameterId, ParamResult] = {}
    for pid in ALL_PARAMETERS:
        if pid is ParameterId.kappa:
            results[pid] = _kappa_result(t)
            continue
        p, mode, agg = PARAM_RULES[pid]
        table = table_for(p, mode)
        results[pid] = (
            _min_result(table, order, t.pop) if agg == "min"
            else _max_result(table, t.pop)
        )
    return ParameterTable(g, results, stats(g))


# ---------------------------------------------------------------------------
# Naive oracle: full power-set sweep through the reference predicates
# ---------------------------------------------------------------------------


@lru_cache(maxsize=8)
def _oracle_sweep(g: Graph) -> dict:
    """Per-subset truth lists for all nine properties, by direct evaluation."""
    size = 1 << g.n
    qual = {
        p: [satisfies(g, s, p) for s in range(size)]
        for base in Base for p in [PropertyId(base, f) for f in Flavor]
    }
    return qual


def oracle_parameter(g: Graph, pid: ParameterId) -> ParamResult:
    """Same contract as compute_parameter via an unoptimized power-set scan."""
    if g.n > MAX_ORACLE_VERTICES:
        raise TooLargeForOracle(f"oracle is capped at n <= {MAX_ORACLE_VERTICES}")
    _check_solver_input(g)
    size = 1 << g.n
    full = g.full_mask

    if pid is ParameterId.kappa:
        from .graph import ComplementStatus, induced_status

        best = None
        for s in range(size):
            if induced_status(g, s) in (
                ComplementStatus.DISCONNECTED, ComplementStatus.K1
            ):
                key = (s.bit_count(), s)
                if best is None or key < best:
                    best = key
        assert best is not None
        return ParamResult(best[0], best[1])

    p, mode, agg = PARAM_RULES[pid]
    qual = _oracle_sweep(g)[p]

    def mode_holds(s: int) -> bool:
        if mode is ExtremalMode.ANY:
            return True
        if mode is ExtremalMode.ONE_MAXIMAL:
            rest = full & ~s
            while rest:
                low = rest & -rest
                rest ^= low
                if qual[s | low]:
                    return False
            return True
        rest = s
        while rest:
            low = rest & -rest
            rest ^= low
            if qual[s ^ low]:
                return False
        return True

    best: tuple[int, int] | None = None
    for s in range(size):
        if not (qual[s] and mode_holds(s)):
            continue
        pop = s.bit_count()
        if agg == "min":
            key = (pop, s)
            if best is None or key < best:
                best = key
        else:
            if best is None or pop > best[0] or (pop == best[0] and s < best[1]):
                best = (pop, s)
    if best is None:
        return UNDEFINED
    return ParamResult(best[0], best[1])


def verify_result(g: Graph, pid: ParameterId, res: ParamResult) -> bool:
    """Re-check a result's witness through the reference predicates."""
    if not res.defined:
        return res.witness is None
    if res.witness is None or res.witness.bit_count() != res.value:
        return False
    if pid is ParameterId.kappa:
        from .graph import ComplementStatus, induced_status

        return induced_status(g, res.witness) in (
            ComplementStatus.DISCONNECTED, ComplementStatus.K1
        )
    from .properties import is_extremal

    p, mode, _ = PARAM_RULES[pid]
    return satisfies(g, res.witness, p) and is_extremal(g, res.witness, p, mode)


def param_result_json(res: ParamResult, with_witness: bool = False):
    """JSON-ready form: a number, or null plus a reason entry upstream."""
    if not res.defined:
        return None
    if with_witness:
        return {"value": res.value, "witness": list(members(res.witness))}
    return res.value
