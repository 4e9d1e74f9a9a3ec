import pytest

from splitdom.errors import NoFormulaForFamily, SpecOutOfRange
from splitdom.families import (
    VALIDITY,
    FamilyKind,
    FamilySpec,
    determine_validity,
    enumerate_two_trees,
    expected_values,
    generate,
    is_two_tree,
    path_graph,
    cycle_graph,
    wheel_graph,
)
from splitdom.graph import vertex_connectivity
from splitdom.solvers import ParameterId, compute_parameter, compute_table

P = ParameterId

TWO_TREE_COUNTS = {3: 1, 4: 3, 5: 15, 6: 105}


class TestGenerate:
    def test_path(self):
        g = generate(FamilySpec(FamilyKind.PATH, 4))
        assert g.edges() == [(0, 1), (1, 2), (2, 3)]

    def test_wheel(self):
        g = generate(FamilySpec(FamilyKind.WHEEL, 4))
        assert g.n == 5
        assert g.degree(0) == 4
        rim = [v for v in range(1, 5)]
        assert all(g.degree(v) == 3 for v in rim)

    def test_two_tree_unique_shape_at_4(self):
        for seed in range(5):
            g = generate(FamilySpec(FamilyKind.TWO_TREE, 4, seed=seed))
            assert g.edge_count() == 5
            # the unique 4-vertex 2-tree: two triangles sharing an edge
            degrees = sorted(g.degree(v) for v in range(4))
            assert degrees == [2, 2, 3, 3]

    def test_bipartite_contiguous_sides(self):
        g = generate(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, 3, 2))
        assert g.n == 5
        assert not g.has_edge(0, 1)
        assert g.degree(0) == 3 and g.degree(2) == 2

    @pytest.mark.parametrize("spec", [
        FamilySpec(FamilyKind.PATH, 1),
        FamilySpec(FamilyKind.CYCLE, 2),
        FamilySpec(FamilyKind.WHEEL, 2),
        FamilySpec(FamilyKind.COMPLETE, 1),
        FamilySpec(FamilyKind.COMPLETE_BIPARTITE, 2, 3),
        FamilySpec(FamilyKind.COMPLETE_BIPARTITE, 2, 0),
        FamilySpec(FamilyKind.TWO_TREE, 2),
    ])
    def test_out_of_range(self, spec):
        with pytest.raises(SpecOutOfRange):
            generate(spec)


class TestTwoTrees:
    def test_n3_is_triangle(self):
        graphs = list(enumerate_two_trees(3))
        assert len(graphs) == 1
        assert graphs[0].edge_count() == 3

    def test_labeled_counts(self):
        for n, count in TWO_TREE_COUNTS.items():
            assert sum(1 for _ in enumerate_two_trees(n)) == count

    def test_edge_count_and_connectivity(self):
        for n in range(3, 7):
            for g in enumerate_two_trees(n):
                assert g.edge_count() == 2 * n - 3
                assert vertex_connectivity(g) == 2

    def test_recognizer(self):
        for n in range(3, 7):
            for g in enumerate_two_trees(n):
                assert is_two_tree(g)
        assert not is_two_tree(path_graph(5))
        assert not is_two_tree(cycle_graph(5))
        assert not is_two_tree(wheel_graph(4))
        assert not is_two_tree(wheel_graph(3))  # W_3 = K_4, too many edges

    def test_out_of_range(self):
        with pytest.raises(SpecOutOfRange):
            list(enumerate_two_trees(2))
        with pytest.raises(SpecOutOfRange):
            list(enumerate_two_trees(9))

    def test_random_seed_reproducible(self):
        a = generate(FamilySpec(FamilyKind.TWO_TREE, 7, seed=11))
        b = generate(FamilySpec(FamilyKind.TWO_TREE, 7, seed=11))
        assert a.adj == b.adj


class TestExpectedValues:
    def _lookup(self, spec):
        return {ev.pid: ev for ev in expected_values(spec)}

    def test_path6(self):
        evs = self._lookup(FamilySpec(FamilyKind.PATH, 6))
        for pid in (P.ir_s, P.gamma_s, P.i_s):
            assert evs[pid].expected == 2 and evs[pid].in_range
        for pid in (P.beta_s, P.Gamma_u_s, P.IR_u_s):
            assert evs[pid].expected == 3 and evs[pid].in_range

    def test_bipartite23(self):
        evs = self._lookup(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, 3, 2))
        assert all(evs[p].expected == 2 for p in (P.ir_s, P.gamma_s, P.i_s))
        assert all(evs[p].expected == 3 for p in (P.beta_s, P.Gamma_u_s, P.IR_u_s))
        assert evs[P.i_ns].expected == 1
        assert evs[P.beta_ns].expected == 2
        assert evs[P.ir_ns].expected == 2
        assert evs[P.IR_u_ns].expected == 2
        assert evs[P.gamma_ns].expected == 2
        assert evs[P.Gamma_u_ns].expected == 2
        assert all(evs[p].in_range for p in evs)

    def test_cycle7(self):
        evs = self._lookup(FamilySpec(FamilyKind.CYCLE, 7))
        for pid in (P.ir_s, P.gamma_s, P.i_s, P.beta_s, P.Gamma_u_s, P.IR_u_s):
            assert evs[pid].expected == 3 and evs[pid].in_range

    def test_wheel5_uppers_come_from_rim_cycle(self):
        evs = self._lookup(FamilySpec(FamilyKind.WHEEL, 5))
        assert evs[P.gamma_ns].expected == 1
        assert evs[P.i_ns].expected == 1
        assert evs[P.ir_ns].expected == 1
        rim = cycle_graph(5)
        assert evs[P.Gamma_u_ns].expected == compute_parameter(rim, P.Gamma_u).value
        assert evs[P.beta_ns].expected == compute_parameter(rim, P.beta).value
        assert evs[P.IR_u_ns].expected == compute_parameter(rim, P.IR_u).value
        assert evs[P.beta_s].expected is None and evs[P.beta_s].in_range

    def test_two_tree_has_no_formula(self):
        with pytest.raises(NoFormulaForFamily):
            expected_values(FamilySpec(FamilyKind.TWO_TREE, 5))

    def test_out_of_validity_flagged(self):
        evs = self._lookup(FamilySpec(FamilyKind.CYCLE, 3))
        assert not evs[P.gamma_s].in_range
        assert not evs[P.beta_s].in_range
        evs = self._lookup(FamilySpec(FamilyKind.PATH, 6))
        assert not evs[P.Gamma_u_ns].in_range
        assert "never" in evs[P.Gamma_u_ns].validity


class TestValidityRegression:
    @pytest.mark.parametrize("kind", [
        FamilyKind.PATH, FamilyKind.CYCLE, FamilyKind.WHEEL,
        FamilyKind.COMPLETE, FamilyKind.COMPLETE_BIPARTITE,
    ])
    def test_brute_force_matches_frozen_thresholds(self, kind):
        thresholds, _ = determine_validity(kind)
        for pid, threshold in thresholds.items():
            assert VALIDITY[(kind, pid)] == threshold, pid.key

    def test_in_range_agreement_sample(self):
        # every in-range formula matches the solver on a fast sample
        for spec in [FamilySpec(FamilyKind.PATH, n) for n in range(2, 9)] + [
            FamilySpec(FamilyKind.CYCLE, n) for n in range(3, 9)
        ]:
            table = compute_table(generate(spec))
            for ev in expected_values(spec):
                if ev.in_range:
                    assert table.value(ev.pid) == ev.expected, (spec, ev.pid.key)
