import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from splitdom.errors import DisconnectedInput, TooLargeForOracle
from splitdom.graph import bits_of, from_edge_list, is_connected
from splitdom.properties import (
    Base,
    ExtremalMode,
    Flavor,
    PropertyId,
    satisfies,
)
from splitdom.solvers import (
    ALL_PARAMETERS,
    CHAIN_ORDER,
    PARAM_RULES,
    ParameterId,
    UNDEFINED,
    compute_parameter,
    compute_table,
    enumerate_sets,
    oracle_parameter,
    verify_result,
)

P = ParameterId


def path(n):
    return from_edge_list(n, [(k, k + 1) for k in range(n - 1)], f"P{n}")


def cycle(n):
    return from_edge_list(n, [(k, (k + 1) % n) for k in range(n)], f"C{n}")


def complete(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)], f"K{n}")


def bipartite(m, n):
    return from_edge_list(m + n, [(a, m + b) for a in range(m) for b in range(n)], f"K{m},{n}")


def wheel(rim):
    edges = [(0, k) for k in range(1, rim + 1)]
    edges += [(k, k % rim + 1) for k in range(1, rim + 1)]
    return from_edge_list(rim + 1, edges, f"W{rim}")


@st.composite
def connected_graphs(draw, min_n=2, max_n=6):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    flags = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edge_list(n, [e for e, keep in zip(pairs, flags) if keep])
    if not is_connected(g):
        # join consecutive vertices to make the sample connected
        g = from_edge_list(
            n, g.edges() + [(k, k + 1) for k in range(n - 1)]
        )
    return g


class TestEnumerateSets:
    def test_matches_power_set_filter(self):
        g = path(4)
        p = PropertyId(Base.INDEPENDENT, Flavor.SPLIT)
        got = list(enumerate_sets(g, p, ExtremalMode.ANY))
        want = [s for s in range(1 << g.n) if satisfies(g, s, p)]
        assert sorted(got) == sorted(want)
        # deterministic order: ascending cardinality, then bit pattern
        keys = [(s.bit_count(), s) for s in got]
        assert keys == sorted(keys)

    def test_empty_for_complete_graph(self):
        p = PropertyId(Base.INDEPENDENT, Flavor.SPLIT)
        assert list(enumerate_sets(complete(4), p, ExtremalMode.ANY)) == []

    def test_one_minimal_split_dominating_c4(self):
        got = list(enumerate_sets(
            cycle(4), PropertyId(Base.DOMINATING, Flavor.SPLIT),
            ExtremalMode.ONE_MINIMAL,
        ))
        assert bits_of([0, 2]) in got


class TestComputeParameter:
    @pytest.mark.parametrize("g,pid,value", [
        (cycle(5), P.gamma_s, 2),
        (path(6), P.beta_s, 3),
        (bipartite(2, 3), P.i_s, 2),
        (path(6), P.gamma_ns, 4),
        (bipartite(2, 3), P.i_ns, 1),
        (cycle(6), P.ir_ns, 2),
        (path(2), P.gamma, 1),
        (path(2), P.gamma_s, 1),
    ])
    def test_known_values(self, g, pid, value):
        res = compute_parameter(g, pid)
        assert res.value == value
        assert verify_result(g, pid, res)

    @pytest.mark.parametrize("g,pid", [
        (wheel(5), P.beta_s),
        (complete(5), P.beta_s),
        (complete(5), P.IR_u_s),
    ])
    def test_undefined(self, g, pid):
        assert compute_parameter(g, pid) == UNDEFINED

    def test_c5_witness_is_valid_dominating_pair(self):
        res = compute_parameter(cycle(5), P.gamma_s)
        assert res.value == 2
        assert satisfies(cycle(5), res.witness,
                         PropertyId(Base.DOMINATING, Flavor.SPLIT))

    def test_disconnected_rejected(self):
        g = from_edge_list(4, [(0, 1), (2, 3)])
        with pytest.raises(DisconnectedInput):
            compute_parameter(g, P.gamma)
        with pytest.raises(DisconnectedInput):
            compute_table(g)

    def test_witness_tie_break_is_deterministic(self):
        res1 = compute_parameter(cycle(6), P.gamma_s)
        res2 = compute_parameter(cycle(6), P.gamma_s)
        assert res1 == res2
        # lowest cardinality, then smallest bit pattern
        g = cycle(6)
        p, mode, _ = PARAM_RULES[P.gamma_s]
        candidates = [s for s in range(1 << 6)
                      if satisfies(g, s, p) and s.bit_count() == res1.value]
        assert res1.witness == min(candidates)


class TestComputeTable:
    def test_k33_split_parameters_all_equal(self):
        table = compute_table(bipartite(3, 3))
        assert [table.value(pid) for pid in CHAIN_ORDER[Flavor.SPLIT]] == [3] * 6

    def test_p2_smallest_case(self):
        table = compute_table(path(2))
        assert table.value(P.gamma) == 1
        assert table.value(P.gamma_s) == 1

    def test_c5_chain(self):
        table = compute_table(cycle(5))
        assert [table.value(pid) for pid in CHAIN_ORDER[Flavor.SPLIT]] == [2] * 6

    def test_matches_compute_parameter(self):
        g = wheel(4)
        table = compute_table(g)
        for pid in ALL_PARAMETERS:
            assert table[pid] == compute_parameter(g, pid)

    @given(connected_graphs())
    @settings(max_examples=40, deadline=None)
    def test_witness_validity(self, g):
        table = compute_table(g)
        for pid in ALL_PARAMETERS:
            res = table[pid]
            assert verify_result(g, pid, res)
            if res.defined:
                assert res.witness.bit_count() == res.value

    @given(connected_graphs())
    @settings(max_examples=40, deadline=None)
    def test_classical_chain_always_holds(self, g):
        table = compute_table(g)
        values = [table.value(pid) for pid in CHAIN_ORDER[Flavor.PLAIN]]
        assert all(v is not None for v in values)
        assert all(a <= b for a, b in zip(values, values[1:]))

    @given(connected_graphs())
    @settings(max_examples=40, deadline=None)
    def test_definedness_and_monotonicity(self, g):
        table = compute_table(g)
        for pid in (P.gamma_s, P.Gamma_u_s, P.gamma_ns, P.Gamma_u_ns):
            assert table[pid].defined
        # lower of a flavor pair defined iff upper defined; min <= max
        for lo, hi in [(P.i_s, P.beta_s), (P.ir_s, P.IR_u_s),
                       (P.i_ns, P.beta_ns), (P.ir_ns, P.IR_u_ns),
                       (P.gamma_s, P.Gamma_u_s), (P.gamma, P.Gamma_u)]:
            a, b = table[lo], table[hi]
            assert a.defined == b.defined
            if a.defined:
                assert a.value <= b.value
        # a split independent set is split irredundant, so existence carries
        if table[P.i_s].defined:
            assert table[P.ir_s].defined


class TestMaximumImpliesMaximal:
    @given(connected_graphs())
    @settings(max_examples=30, deadline=None)
    def test_upper_parameters_equal_max_over_any(self, g):
        # beta*/IR* range over 1-maximal sets; the maximum over all
        # qualifying sets coincides because a maximum set is 1-maximal
        for pid in (P.beta, P.beta_s, P.beta_ns, P.IR_u, P.IR_u_s, P.IR_u_ns):
            p, _, _ = PARAM_RULES[pid]
            best = None
            for s in range(1 << g.n):
                if satisfies(g, s, p):
                    best = max(best or 0, s.bit_count())
            res = compute_parameter(g, pid)
            assert res.value == best


class TestOracle:
    def test_small_exhaustive_agreement(self):
        graphs = [path(4), cycle(5), bipartite(2, 3), complete(4), wheel(4)]
        for g in graphs:
            for pid in ALL_PARAMETERS:
                fast = compute_parameter(g, pid)
                slow = oracle_parameter(g, pid)
                assert fast.value == slow.value, (g.id, pid.key)
                assert verify_result(g, pid, slow)

    def test_p4_upper_split_irredundance(self):
        assert oracle_parameter(path(4), P.IR_u_s) == compute_parameter(path(4), P.IR_u_s)

    def test_k5_undefined_from_both(self):
        assert oracle_parameter(complete(5), P.beta_s) == UNDEFINED
        assert compute_parameter(complete(5), P.beta_s) == UNDEFINED

    def test_cost_guard(self):
        g = path(13)
        with pytest.raises(TooLargeForOracle):
            oracle_parameter(g, P.gamma)

    @given(connected_graphs(max_n=5))
    @settings(max_examples=25, deadline=None)
    def test_random_agreement(self, g):
        for pid in ALL_PARAMETERS:
            assert compute_parameter(g, pid).value == oracle_parameter(g, pid).value
