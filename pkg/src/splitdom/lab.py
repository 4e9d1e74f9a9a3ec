"""Corpus-scale claim verification with machine-checkable certificates.

Thirteen claims are checked per graph: the classical parameter chain, its
split analogue, six bound inequalities, two set-level lemma implications,
the 2-tree non-existence claim, and two heredity equivalences.  A claim
evaluates to pass, fail, or skip (skip = a parameter it needs has no
qualifying set).  Every failure carries a Certificate that can be
re-verified from scratch by re-running the evaluator on the certificate's
graph: regeneration must reproduce the certificate bit for bit.
"""

from __future__ import annotations

import enum
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ._kernels import SubsetTables, subset_tables
from .errors import EmptyCorpus, SplitdomError
from .graph import (
    Graph,
    from_edge_list,
    is_connected,
    members,
    parse_graph6,
    to_graph6,
)
from .properties import Base, ExtremalMode, Flavor, PropertyId, satisfies
from .solvers import (
    CHAIN_ORDER,
    ParameterId,
    ParameterTable,
    compute_table,
    mode_table,
    one_maximal_table,
    one_minimal_table,
    property_table,
    subset_minimal_table,
    subset_order,
    superset_maximal_table,
)

IND_SPLIT = PropertyId(Base.INDEPENDENT, Flavor.SPLIT)
DOM_SPLIT = PropertyId(Base.DOMINATING, Flavor.SPLIT)
IRR_SPLIT = PropertyId(Base.IRREDUNDANT, Flavor.SPLIT)


class ClaimId(enum.Enum):
    C1 = "C1"  # classical chain ir <= gamma <= i <= beta <= Gamma <= IR
    C2 = "C2"  # split chain, when all six split parameters are defined
    B1 = "B1"  # gamma <= gamma_s
    B2 = "B2"  # kappa <= gamma_s
    B3 = "B3"  # gamma_s * (maxdeg + 1) <= n * maxdeg
    B4 = "B4"  # diameter 2 implies gamma_s <= mindeg
    B5 = "B5"  # gamma + gamma_s <= n
    B6 = "B6"  # kappa <= ir_s, gamma_s, i_s
    L1 = "L1"  # 1-maximal split independent => 1-minimal split dominating
    L2 = "L2"  # 1-minimal split dominating => 1-maximal split irredundant
    P1 = "P1"  # 2-trees contain no split independent set
    H1 = "H1"  # independent/plain: 1-maximal == superset-maximal
    H2 = "H2"  # dominating/plain: 1-minimal == subset-minimal


ALL_CLAIMS = frozenset(ClaimId)

CLAIM_DESCRIPTIONS = {
    ClaimId.C1: "classical chain ir <= gamma <= i <= beta <= Gamma <= IR",
    ClaimId.C2: "split chain ir_s <= gamma_s <= i_s <= beta_s <= Gamma_s <= IR_s",
    ClaimId.B1: "gamma <= gamma_s",
    ClaimId.B2: "kappa <= gamma_s",
    ClaimId.B3: "gamma_s * (maxdeg+1) <= n * maxdeg (exact rational)",
    ClaimId.B4: "diameter 2 implies gamma_s <= mindeg",
    ClaimId.B5: "gamma + gamma_s <= n",
    ClaimId.B6: "kappa lower-bounds ir_s, gamma_s, i_s",
    ClaimId.L1: "every 1-maximal split independent set is a 1-minimal split dominating set",
    ClaimId.L2: "every 1-minimal split dominating set is a 1-maximal split irredundant set",
    ClaimId.P1: "2-trees contain no split independent set",
    ClaimId.H1: "independent/plain: 1-maximal iff superset-maximal",
    ClaimId.H2: "dominating/plain: 1-minimal iff subset-minimal",
}

HEREDITY_GUARD = 7  # H1/H2 quantify over all subsets; skip above this n


@dataclass(frozen=True)
class Certificate:
    """Self-contained record of one violated claim on one graph."""

    graph6: str
    claim: str
    detail: str
    lhs: int | None
    rhs: int | None
    witnesses: dict[str, tuple[int, ...]]
    trace: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "claim": self.claim,
            "detail": self.detail,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "witnesses": {k: list(v) for k, v in sorted(self.witnesses.items())},
            "trace": [dict(sorted(e.items())) for e in self.trace],
        }

    def to_json_line(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True)


@dataclass
class ClaimOutcome:
    status: str  # "pass" | "fail" | "skip"
    certificates: list[Certificate] = field(default_factory=list)


def twin_pentagon_graph() -> Graph:
    """Two 5-cycles sharing a vertex: the showcase that split irredundance
    does not force domination.

    Vertices 0..2 form the central path, 3..6 the cycle interiors, 7..8
    the far vertices.  The set {0, 1, 2} is split irredundant (each member
    keeps a private neighbor and the complement splits into two pieces)
    yet leaves vertices 7 and 8 undominated.
    """
    return from_edge_list(
        9,
        [(0, 1), (1, 2), (0, 3), (1, 4), (3, 7), (4, 7), (1, 5), (2, 6), (5, 8), (6, 8)],
        "twin-pentagon",
    )


# ---------------------------------------------------------------------------
# Claim evaluation
# ---------------------------------------------------------------------------


class GraphContext:
    """Lazy per-graph computation shared by the claim evaluators."""

    def __init__(self, g: Graph):
        self.g = g
        self._tables: SubsetTables | None = None
        self._param_table: ParameterTable | None = None
        self._mode_cache: dict = {}

    @property
    def tables(self) -> SubsetTables:
        if self._tables is None:
            self._tables = subset_tables(self.g)
        return self._tables

    @property
    def params(self) -> ParameterTable:
        if self._param_table is None:
            self._param_table = compute_table(self.g)
        return self._param_table

    def table(self, p: PropertyId, mode: ExtremalMode) -> np.ndarray:
        key = (p, mode)
        if key not in self._mode_cache:
            self._mode_cache[key] = mode_table(self.tables, p, mode)
        return self._mode_cache[key]

    def qualifying_masks(self, p: PropertyId, mode: ExtremalMode) -> list[int]:
        tab = self.table(p, mode)
        return [int(s) for s in subset_order(self.tables) if tab[s]]


def _trace_entry(g: Graph, s: int, p: PropertyId, mode: ExtremalMode | None = None) -> dict:
    """One re-checkable predicate evaluation for a certificate trace."""
    if mode is None:
        return {"set": list(members(s)), "property": p.name,
                "value": satisfies(g, s, p)}
    from .properties import is_extremal

    value = satisfies(g, s, p) and is_extremal(g, s, p, mode)
    return {"set": list(members(s)),
            "property": f"{mode.value}({p.name})", "value": value}


def _witness_members(table: ParameterTable, pid: ParameterId) -> tuple[int, ...]:
    res = table[pid]
    return members(res.witness) if res.defined else ()


def _chain_outcome(ctx: GraphContext, claim: ClaimId, flavor: Flavor) -> ClaimOutcome:
    order = CHAIN_ORDER[flavor]
    values = [ctx.params.value(pid) for pid in order]
    if any(v is None for v in values):
        return ClaimOutcome("skip")
    broken = [
        (order[k], order[k + 1])
        for k in range(len(order) - 1)
        if values[k] > values[k + 1]
    ]
    if not broken:
        return ClaimOutcome("pass")
    lo, hi = broken[0]
    detail = "; ".join(
        f"{a.key}={ctx.params.value(a)} > {b.key}={ctx.params.value(b)}"
        for a, b in broken
    )
    cert = Certificate(
        graph6=to_graph6(ctx.g),
        claim=claim.value,
        detail=f"chain violated: {detail}",
        lhs=ctx.params.value(lo),
        rhs=ctx.params.value(hi),
        witnesses={pid.key: _witness_members(ctx.params, pid) for pid in order},
        trace=tuple(
            _trace_entry(ctx.g, ctx.params[pid].witness, *_pid_property(pid))
            for pid in order
        ),
    )
    return ClaimOutcome("fail", [cert])


def _pid_property(pid: ParameterId):
    from .solvers import PARAM_RULES

    p, mode, _ = PARAM_RULES[pid]
    return p, (None if mode is ExtremalMode.ANY else mode)


def _bound_outcome(ctx: GraphContext, claim: ClaimId) -> ClaimOutcome:
    g, params, st = ctx.g, ctx.params, ctx.params.graph_stats
    gamma = params.value(ParameterId.gamma)
    gamma_s = params.value(ParameterId.gamma_s)
    checks: list[tuple[bool, str, int, int, list[ParameterId]]] = []
    if claim is ClaimId.B1:
        checks.append((gamma <= gamma_s, f"gamma={gamma} > gamma_s={gamma_s}",
                       gamma, gamma_s, [ParameterId.gamma, ParameterId.gamma_s]))
    elif claim is ClaimId.B2:
        k = params.value(ParameterId.kappa)
        checks.append((k <= gamma_s, f"kappa={k} > gamma_s={gamma_s}",
                       k, gamma_s, [ParameterId.kappa, ParameterId.gamma_s]))
    elif claim is ClaimId.B3:
        lhs = gamma_s * (st.max_degree + 1)
        rhs = g.n * st.max_degree
        checks.append((lhs <= rhs,
                       f"gamma_s*(maxdeg+1)={lhs} > n*maxdeg={rhs}",
                       lhs, rhs, [ParameterId.gamma_s]))
    elif claim is ClaimId.B4:
        if st.diameter != 2:
            return ClaimOutcome("pass")
        checks.append((gamma_s <= st.min_degree,
                       f"diam=2 but gamma_s={gamma_s} > mindeg={st.min_degree}",
                       gamma_s, st.min_degree, [ParameterId.gamma_s]))
    elif claim is ClaimId.B5:
        lhs = gamma + gamma_s
        checks.append((lhs <= g.n, f"gamma+gamma_s={lhs} > n={g.n}",
                       lhs, g.n, [ParameterId.gamma, ParameterId.gamma_s]))
    elif claim is ClaimId.B6:
        k = params.value(ParameterId.kappa)
        trio = [ParameterId.ir_s, ParameterId.gamma_s, ParameterId.i_s]
        values = {pid: params.value(pid) for pid in trio}
        if any(v is None for v in values.values()):
            return ClaimOutcome("skip")
        for pid, v in values.items():
            checks.append((k <= v, f"kappa={k} > {pid.key}={v}", k, v,
                           [ParameterId.kappa, pid]))
    failed = [c for c in checks if not c[0]]
    if not failed:
        return ClaimOutcome("pass")
    _, detail, lhs, rhs, pids = failed[0]
    cert = Certificate(
        graph6=to_graph6(g),
        claim=claim.value,
        detail="; ".join(c[1] for c in failed),
        lhs=lhs,
        rhs=rhs,
        witnesses={pid.key: _witness_members(params, pid) for pid in pids},
        trace=tuple(
            _trace_entry(g, params[pid].witness, *_pid_property(pid))
            for pid in pids
            if pid is not ParameterId.kappa and params[pid].defined
        ),
    )
    return ClaimOutcome("fail", [cert])


def _lemma_outcome(ctx: GraphContext, claim: ClaimId) -> ClaimOutcome:
    g = ctx.g
    if claim is ClaimId.L1:
        if not ctx.table(IND_SPLIT, ExtremalMode.ANY).any():
            return ClaimOutcome("skip")
        sources = ctx.qualifying_masks(IND_SPLIT, ExtremalMode.ONE_MAXIMAL)
        dom_any = ctx.table(DOM_SPLIT, ExtremalMode.ANY)
        dom_min = ctx.table(DOM_SPLIT, ExtremalMode.ONE_MINIMAL)
        for s in sources:
            if dom_any[s] and dom_min[s]:
                continue
            reason = ("not a split dominating set" if not dom_any[s]
                      else "split dominating but not 1-minimal")
            trace = [_trace_entry(g, s, IND_SPLIT),
                     _trace_entry(g, s, IND_SPLIT, ExtremalMode.ONE_MAXIMAL),
                     _trace_entry(g, s, DOM_SPLIT)]
            if dom_any[s]:
                trace.append(_trace_entry(g, s, DOM_SPLIT, ExtremalMode.ONE_MINIMAL))
            cert = Certificate(
                graph6=to_graph6(g), claim=claim.value,
                detail=f"1-maximal split independent set {list(members(s))} is {reason}",
                lhs=None, rhs=None,
                witnesses={"independent_set": members(s)},
                trace=tuple(trace),
            )
            return ClaimOutcome("fail", [cert])
        return ClaimOutcome("pass")

    # L2: minimal split dominating => maximal split irredundant
    if not ctx.table(IRR_SPLIT, ExtremalMode.ANY).any():
        return ClaimOutcome("skip")
    irr_any = ctx.table(IRR_SPLIT, ExtremalMode.ANY)
    irr_max = ctx.table(IRR_SPLIT, ExtremalMode.ONE_MAXIMAL)
    for s in ctx.qualifying_masks(DOM_SPLIT, ExtremalMode.ONE_MINIMAL):
        if irr_any[s] and irr_max[s]:
            continue
        reason = ("not a split irredundant set" if not irr_any[s]
                  else "split irredundant but not 1-maximal")
        trace = [_trace_entry(g, s, DOM_SPLIT),
                 _trace_entry(g, s, DOM_SPLIT, ExtremalMode.ONE_MINIMAL),
                 _trace_entry(g, s, IRR_SPLIT)]
        if irr_any[s]:
            trace.append(_trace_entry(g, s, IRR_SPLIT, ExtremalMode.ONE_MAXIMAL))
        cert = Certificate(
            graph6=to_graph6(g), claim=claim.value,
            detail=f"1-minimal split dominating set {list(members(s))} is {reason}",
            lhs=None, rhs=None,
            witnesses={"dominating_set": members(s)},
            trace=tuple(trace),
        )
        return ClaimOutcome("fail", [cert])
    return ClaimOutcome("pass")


def _two_tree_outcome(ctx: GraphContext) -> ClaimOutcome:
    from .families import is_two_tree

    if not is_two_tree(ctx.g):
        return ClaimOutcome("skip")
    offending = ctx.qualifying_masks(IND_SPLIT, ExtremalMode.ANY)
    if not offending:
        return ClaimOutcome("pass")
    s = offending[0]
    cert = Certificate(
        graph6=to_graph6(ctx.g), claim=ClaimId.P1.value,
        detail=f"2-tree contains split independent set {list(members(s))}",
        lhs=None, rhs=None,
        witnesses={"independent_set": members(s)},
        trace=(_trace_entry(ctx.g, s, IND_SPLIT),),
    )
    return ClaimOutcome("fail", [cert])


def _heredity_outcome(ctx: GraphContext, claim: ClaimId) -> ClaimOutcome:
    if ctx.g.n > HEREDITY_GUARD:
        return ClaimOutcome("skip")
    t = ctx.tables
    if claim is ClaimId.H1:
        p = PropertyId(Base.INDEPENDENT, Flavor.PLAIN)
        qual = property_table(t, p)
        one = one_maximal_table(t, qual)
        strong = superset_maximal_table(t, qual)
        mode = ExtremalMode.ONE_MAXIMAL
        other = ExtremalMode.SUPERSET_MAXIMAL
    else:
        p = PropertyId(Base.DOMINATING, Flavor.PLAIN)
        qual = property_table(t, p)
        one = one_minimal_table(t, qual)
        strong = subset_minimal_table(t, qual)
        mode = ExtremalMode.ONE_MINIMAL
        other = ExtremalMode.SUBSET_MINIMAL
    diverging = np.nonzero(one != strong)[0]
    if diverging.size == 0:
        return ClaimOutcome("pass")
    s = int(diverging[0])
    cert = Certificate(
        graph6=to_graph6(ctx.g), claim=claim.value,
        detail=(f"{p.name}: set {list(members(s))} is "
                f"{mode.value}={bool(one[s])} but {other.value}={bool(strong[s])}"),
        lhs=int(one[s]), rhs=int(strong[s]),
        witnesses={"set": members(s)},
        trace=(_trace_entry(ctx.g, s, p, mode), _trace_entry(ctx.g, s, p, other)),
    )
    return ClaimOutcome("fail", [cert])


def evaluate_claims(g: Graph, claims=ALL_CLAIMS) -> dict[ClaimId, ClaimOutcome]:
    """Evaluate the requested claims on one connected graph."""
    ctx = GraphContext(g)
    out: dict[ClaimId, ClaimOutcome] = {}
    for claim in sorted(claims, key=lambda c: c.value):
        if claim is ClaimId.C1:
            out[claim] = _chain_outcome(ctx, claim, Flavor.PLAIN)
        elif claim is ClaimId.C2:
            out[claim] = _chain_outcome(ctx, claim, Flavor.SPLIT)
        elif claim in (ClaimId.B1, ClaimId.B2, ClaimId.B3, ClaimId.B4,
                       ClaimId.B5, ClaimId.B6):
            out[claim] = _bound_outcome(ctx, claim)
        elif claim in (ClaimId.L1, ClaimId.L2):
            out[claim] = _lemma_outcome(ctx, claim)
        elif claim is ClaimId.P1:
            out[claim] = _two_tree_outcome(ctx)
        else:
            out[claim] = _heredity_outcome(ctx, claim)
    return out


def check_graph(g: Graph, claims=ALL_CLAIMS) -> list[Certificate]:
    """All certificates produced by the requested claims on one graph."""
    from .graph import require_connected

    require_connected(g)
    outcomes = evaluate_claims(g, claims)
    certs: list[Certificate] = []
    for claim in sorted(outcomes, key=lambda c: c.value):
        certs.extend(outcomes[claim].certificates)
    return certs


def verify_certificate(cert: Certificate) -> bool:
    """Re-run the claim on the certificate's graph; it must regenerate
    an identical certificate (or, for family certificates, re-compute to
    the same mismatch)."""
    g = parse_graph6(cert.graph6)
    if cert.claim.startswith("family:"):
        return _verify_family_certificate(cert, g)
    claim = ClaimId(cert.claim)
    outcomes = evaluate_claims(g, {claim})
    regenerated = outcomes[claim].certificates
    return any(c == cert for c in regenerated)


# ---------------------------------------------------------------------------
# Family-formula certificates
# ---------------------------------------------------------------------------


def family_claim_id(kind_value: str, pid: ParameterId, n: int, m: int = 0) -> str:
    suffix = f":m={m}" if m else ""
    return f"family:{kind_value}:{pid.key}:n={n}{suffix}"


def verify_family_formula(spec, pid: ParameterId) -> Certificate | None:
    """Certificate for an in-range family-formula mismatch, else None."""
    from .families import expected_values, generate
    from .solvers import compute_parameter

    g = generate(spec)
    expectations = {ev.pid: ev for ev in expected_values(spec)}
    ev = expectations[pid]
    if not ev.in_range:
        return None
    res = compute_parameter(g, pid)
    if res.value == ev.expected:
        return None
    witness = members(res.witness) if res.defined else ()
    trace = []
    if res.defined:
        trace.append(_trace_entry(g, res.witness, *_pid_property(pid)))
    return Certificate(
        graph6=to_graph6(g),
        claim=family_claim_id(spec.kind.value, pid, spec.n, spec.m),
        detail=(f"{g.id}: computed {pid.key}={res.value} but formula "
                f"{ev.formula} gives {ev.expected} (validity {ev.validity})"),
        lhs=res.value,
        rhs=ev.expected,
        witnesses={pid.key: witness},
        trace=tuple(trace),
    )


def _verify_family_certificate(cert: Certificate, g: Graph) -> bool:
    from .families import FamilyKind, FamilySpec

    parts = cert.claim.split(":")
    kind = FamilyKind(parts[1])
    pid = ParameterId(parts[2])
    n = int(parts[3].removeprefix("n="))
    m = int(parts[4].removeprefix("m=")) if len(parts) > 4 else 0
    regenerated = verify_family_formula(FamilySpec(kind, n, m), pid)
    return regenerated == cert


# ---------------------------------------------------------------------------
# Corpus scanning
# ---------------------------------------------------------------------------


@dataclass
class ScanReport:
    """Aggregate result of a corpus scan.

    Wall-clock fields stay out of the serialized form so that reports are
    byte-identical across worker counts.
    """

    scanned: int
    malformed_lines: int
    disconnected_skipped: int
    tallies: dict[ClaimId, dict[str, int]]
    certificates: list[Certificate]
    elapsed_seconds: float = 0.0
    workers: int = 1

    @property
    def all_pass(self) -> bool:
        return all(t["fail"] == 0 for t in self.tallies.values())

    def to_json_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "malformed_lines": self.malformed_lines,
            "disconnected_skipped": self.disconnected_skipped,
            "claims": {c.value: dict(sorted(t.items()))
                       for c, t in sorted(self.tallies.items(),
                                          key=lambda kv: kv[0].value)},
            "certificates": [c.to_json_dict() for c in self.certificates],
            "all_pass": self.all_pass,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"


def _scan_one(line_no: int, line: str, claims: frozenset[ClaimId]):
    """Evaluate one corpus line.

    Returns (line_no, kind, payload) where kind is 'malformed',
    'disconnected' (also used for n < 2), or 'ok' with the claim outcomes.
    """
    try:
        g = parse_graph6(line)
    except SplitdomError:
        return (line_no, "malformed", None)
    if not is_connected(g) or g.n < 2:
        return (line_no, "disconnected", None)
    outcomes = evaluate_claims(g, claims)
    return (line_no, "ok",
            {c: (o.status, o.certificates) for c, o in outcomes.items()})


def _scan_chunk(args):
    chunk, claims = args
    return [_scan_one(no, line, claims) for no, line in chunk]


def scan_corpus(source, claims=ALL_CLAIMS, workers: int = 1) -> ScanReport:
    """Scan a graph6 line stream, aggregating per-claim tallies.

    Malformed lines are counted and skipped; disconnected graphs are
    counted, reported, and skipped.  The result is independent of the
    worker count; certificates come out sorted by (line number, claim).
    """
    claims = frozenset(claims)
    lines = [(no, ln.strip()) for no, ln in enumerate(source) if ln.strip()]
    if not lines:
        raise EmptyCorpus("corpus stream contained no lines")
    start = time.perf_counter()
    if workers <= 1 or len(lines) < 4:
        results = [_scan_one(no, line, claims) for no, line in lines]
    else:
        chunk_size = max(1, len(lines) // (workers * 4))
        chunks = [lines[k:k + chunk_size] for k in range(0, len(lines), chunk_size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [
                item
                for chunk_result in pool.map(_scan_chunk,
                                             [(c, claims) for c in chunks])
                for item in chunk_result
            ]
    results.sort(key=lambda r: r[0])

    tallies = {c: {"pass": 0, "fail": 0, "skip": 0} for c in sorted(claims, key=lambda c: c.value)}
    certificates: list[Certificate] = []
    scanned = malformed = disconnected = 0
    for line_no, kind, payload in results:
        if kind == "malformed":
            malformed += 1
            continue
        if kind == "disconnected":
            disconnected += 1
            continue
        scanned += 1
        for claim in sorted(payload, key=lambda c: c.value):
            status, certs = payload[claim]
            tallies[claim][status] += 1
            certificates.extend(certs)
    if scanned == 0:
        raise EmptyCorpus(
            f"no usable graphs in corpus ({malformed} malformed, "
            f"{disconnected} disconnected/too-small lines)"
        )
    return ScanReport(
        scanned=scanned,
        malformed_lines=malformed,
        disconnected_skipped=disconnected,
        tallies=tallies,
        certificates=certificates,
        elapsed_seconds=time.perf_counter() - start,
        workers=workers,
    )


# ---------------------------------------------------------------------------
# Relation observation (exploratory)
# ---------------------------------------------------------------------------


def observe_relations(source) -> dict:
    """Tally <, =, >, and undefined outcomes for every ordered parameter pair.

    Exploratory output: raw material for open relationship questions; no
    truth claims are made.
    """
    pids = list(ParameterId)
    counts = {
        (a.key, b.key): {"lt": 0, "eq": 0, "gt": 0, "undefined": 0}
        for a in pids for b in pids if a is not b
    }
    graphs = 0
    for line in source:
        line = line.strip()
        if not line:
            continue
        g = parse_graph6(line)
        if not is_connected(g) or g.n < 2:
            continue
        graphs += 1
        table = compute_table(g)
        values = {pid: table.value(pid) for pid in pids}
        for a in pids:
            for b in pids:
                if a is b:
                    continue
                va, vb = values[a], values[b]
                cell = counts[(a.key, b.key)]
                if va is None or vb is None:
                    cell["undefined"] += 1
                elif va < vb:
                    cell["lt"] += 1
                elif va == vb:
                    cell["eq"] += 1
                else:
                    cell["gt"] += 1
    if graphs == 0:
        raise EmptyCorpus("no connected graphs in relation scan")
    return {
        "graphs": graphs,
        "pairs": {f"{a}|{b}": cell for (a, b), cell in sorted(counts.items())},
    }


# ---------------------------------------------------------------------------
# Heredity probe (observations, not certificates)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ProbeRecord:
    """Divergence data for one flavored property on one graph."""

    graph6: str
    property_name: str
    diverging_sets: tuple[tuple[int, ...], ...]
    one_step_value: int | None
    subsetwise_value: int | None


def heredity_probe(g: Graph) -> list[ProbeRecord]:
    """Compare one-step against subset/superset extremality for the six
    flavored properties; divergences are observations, never errors.

    For dominating flavors the record also carries the two readings of the
    upper parameter (max over 1-minimal vs max over subset-minimal sets).
    """
    t = subset_tables(g)
    g6 = to_graph6(g)
    out: list[ProbeRecord] = []
    for base in Base:
        for flavor in (Flavor.SPLIT, Flavor.NONSPLIT):
            p = PropertyId(base, flavor)
            qual = property_table(t, p)
            if base is Base.DOMINATING:
                one = one_minimal_table(t, qual)
                strong = subset_minimal_table(t, qual)
            else:
                one = one_maximal_table(t, qual)
                strong = superset_maximal_table(t, qual)
            diverging = np.nonzero(one != strong)[0]
            if base is Base.DOMINATING:
                def upper(tab):
                    masks = np.nonzero(tab)[0]
                    return int(t.pop[masks].max()) if masks.size else None
                one_val, strong_val = upper(one), upper(strong)
            else:
                one_val = strong_val = None
            if diverging.size or (one_val != strong_val):
                out.append(ProbeRecord(
                    graph6=g6,
                    property_name=p.name,
                    diverging_sets=tuple(members(int(s)) for s in diverging),
                    one_step_value=one_val,
                    subsetwise_value=strong_val,
                ))
    return out
