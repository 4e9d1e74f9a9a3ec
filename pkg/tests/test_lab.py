import json

import pytest

from splitdom.errors import EmptyCorpus
from splitdom.families import FamilyKind, FamilySpec
from splitdom.graph import bits_of, from_edge_list, parse_graph6, to_graph6
from splitdom.lab import (
    ALL_CLAIMS,
    Certificate,
    ClaimId,
    check_graph,
    evaluate_claims,
    heredity_probe,
    observe_relations,
    scan_corpus,
    twin_pentagon_graph,
    verify_certificate,
    verify_family_formula,
)
from splitdom.properties import Base, ExtremalMode, Flavor, PropertyId, is_dominating, is_extremal, satisfies
from splitdom.solvers import ParameterId, compute_parameter


def path(n):
    return from_edge_list(n, [(k, k + 1) for k in range(n - 1)], f"P{n}")


def cycle(n):
    return from_edge_list(n, [(k, (k + 1) % n) for k in range(n)], f"C{n}")


def complete(n):
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)], f"K{n}")


def paw():
    """Triangle with a pendant: the smallest split-chain counterexample."""
    return from_edge_list(4, [(1, 2), (1, 3), (2, 3), (0, 3)], "paw")


class TestTwinPentagon:
    def test_shape(self):
        g = twin_pentagon_graph()
        assert g.n == 9
        assert sorted(g.edges()) == sorted(
            [(0, 1), (1, 2), (0, 3), (1, 4), (3, 7), (4, 7), (1, 5), (2, 6),
             (5, 8), (6, 8)]
        )

    def test_showcase_set_is_split_irredundant_not_dominating(self):
        g = twin_pentagon_graph()
        s = bits_of([0, 1, 2])
        assert satisfies(g, s, PropertyId(Base.IRREDUNDANT, Flavor.SPLIT))
        assert not is_dominating(g, s)

    def test_showcase_set_is_extendable(self):
        # Engine finding, frozen: {0,1,2} is NOT 1-maximal; the sets
        # {0,1,2,4} and {0,1,2,5} are split irredundant supersets.  See
        # docs/known-divergences.md.
        g = twin_pentagon_graph()
        s = bits_of([0, 1, 2])
        p = PropertyId(Base.IRREDUNDANT, Flavor.SPLIT)
        assert not is_extremal(g, s, p, ExtremalMode.ONE_MAXIMAL)
        extensions = [v for v in range(9) if not s >> v & 1
                      and satisfies(g, s | 1 << v, p)]
        assert extensions == [4, 5]


class TestCheckGraph:
    def test_c5_clean(self):
        assert check_graph(cycle(5), ALL_CLAIMS) == []

    def test_k4_split_chain_skips(self):
        outcomes = evaluate_claims(complete(4), {ClaimId.C2})
        assert outcomes[ClaimId.C2].status == "skip"

    def test_paw_violates_split_chain_and_l2(self):
        outcomes = evaluate_claims(paw(), {ClaimId.C2, ClaimId.L2})
        assert outcomes[ClaimId.C2].status == "fail"
        assert outcomes[ClaimId.L2].status == "fail"
        for claim in (ClaimId.C2, ClaimId.L2):
            (cert,) = outcomes[claim].certificates
            assert verify_certificate(cert)

    def test_certificate_regeneration_is_exact(self):
        (cert, *_) = check_graph(paw(), {ClaimId.C2})
        regenerated = check_graph(parse_graph6(cert.graph6), {ClaimId.C2})
        assert cert in regenerated

    def test_tampered_certificate_fails_verification(self):
        (cert,) = check_graph(paw(), {ClaimId.C2})
        tampered = Certificate(
            graph6=cert.graph6, claim=cert.claim, detail=cert.detail,
            lhs=(cert.lhs or 0) + 1, rhs=cert.rhs,
            witnesses=cert.witnesses, trace=cert.trace,
        )
        assert not verify_certificate(tampered)

    def test_heredity_claims_pass_on_small_graphs(self):
        for g in (path(5), cycle(6), complete(4), paw()):
            outcomes = evaluate_claims(g, {ClaimId.H1, ClaimId.H2})
            assert outcomes[ClaimId.H1].status == "pass"
            assert outcomes[ClaimId.H2].status == "pass"

    def test_p1_two_tree_detection(self):
        outcomes = evaluate_claims(complete(3), {ClaimId.P1})
        assert outcomes[ClaimId.P1].status == "pass"
        outcomes = evaluate_claims(path(5), {ClaimId.P1})
        assert outcomes[ClaimId.P1].status == "skip"

    def test_l1_passes_where_split_independence_exists(self):
        for g in (path(6), cycle(6), paw()):
            outcomes = evaluate_claims(g, {ClaimId.L1})
            assert outcomes[ClaimId.L1].status in ("pass", "skip")

    def test_bound_claims_pass_on_families(self):
        for g in (path(7), cycle(7), complete(5), paw()):
            outcomes = evaluate_claims(
                g, {ClaimId.B1, ClaimId.B2, ClaimId.B3, ClaimId.B4, ClaimId.B5,
                    ClaimId.B6})
            assert all(o.status in ("pass", "skip") for o in outcomes.values())


class TestFamilyCertificates:
    def test_no_certificate_inside_validity(self):
        assert verify_family_formula(
            FamilySpec(FamilyKind.PATH, 6), ParameterId.gamma_ns) is None

    def test_no_certificate_outside_validity(self):
        # P_3 misses the n-2 formula but sits outside the pinned range
        assert verify_family_formula(
            FamilySpec(FamilyKind.PATH, 3), ParameterId.gamma_ns) is None

    def test_forced_in_range_mismatch_produces_verifiable_certificate(self, monkeypatch):
        # un-gate the known-divergent path formula to exercise the machinery
        from splitdom import families

        monkeypatch.setitem(
            families.VALIDITY, (FamilyKind.PATH, ParameterId.Gamma_u_ns), 2)
        cert = verify_family_formula(
            FamilySpec(FamilyKind.PATH, 6), ParameterId.Gamma_u_ns)
        assert cert is not None
        assert cert.lhs == 5 and cert.rhs == 4
        assert verify_certificate(cert)


class TestScanCorpus:
    def _lines(self, graphs):
        return [to_graph6(g) for g in graphs]

    def test_tallies_add_up(self):
        lines = self._lines([path(n) for n in range(2, 8)])
        report = scan_corpus(lines, {ClaimId.C1, ClaimId.C2})
        for claim in (ClaimId.C1, ClaimId.C2):
            t = report.tallies[claim]
            assert t["pass"] + t["fail"] + t["skip"] == report.scanned == 6

    def test_malformed_and_disconnected_counted(self):
        lines = self._lines([path(4)]) + ["#bad", to_graph6(
            from_edge_list(4, [(0, 1), (2, 3)]))]
        report = scan_corpus(lines, {ClaimId.C1})
        assert report.scanned == 1
        assert report.malformed_lines == 1
        assert report.disconnected_skipped == 1

    def test_empty_corpus(self):
        with pytest.raises(EmptyCorpus):
            scan_corpus([], {ClaimId.C1})
        with pytest.raises(EmptyCorpus):
            scan_corpus(["#bad"], {ClaimId.C1})

    def test_single_vertex_line_skipped(self):
        # "@" is K_1: decodable but below the n >= 2 solver floor
        report = scan_corpus(["@", to_graph6(path(3))], {ClaimId.C1})
        assert report.scanned == 1
        assert report.disconnected_skipped == 1

    def test_worker_determinism_small(self):
        lines = self._lines(
            [path(n) for n in range(2, 8)] + [cycle(n) for n in range(3, 8)]
            + [complete(n) for n in range(2, 6)] + [paw()]
        )
        a = scan_corpus(lines, ALL_CLAIMS, workers=1)
        b = scan_corpus(lines, ALL_CLAIMS, workers=3)
        assert a.to_json() == b.to_json()

    def test_report_shape(self):
        report = scan_corpus(self._lines([paw()]), {ClaimId.C2})
        doc = json.loads(report.to_json())
        assert doc["scanned"] == 1
        assert doc["claims"]["C2"]["fail"] == 1
        assert doc["all_pass"] is False
        assert len(doc["certificates"]) == 1
        cert = doc["certificates"][0]
        assert set(cert) == {"graph6", "claim", "detail", "lhs", "rhs",
                             "witnesses", "trace"}


class TestObserveRelations:
    def test_paths_gamma_ns_vs_gamma_s(self):
        lines = [to_graph6(path(n)) for n in range(4, 9)]
        table = observe_relations(lines)
        cell = table["pairs"]["gamma_ns|gamma_s"]
        # n-2 vs ceil(n/3): equal at n=4, strictly greater for 5..8
        assert cell == {"lt": 0, "eq": 1, "gt": 4, "undefined": 0}

    def test_cycles_i_ns_below_i_s(self):
        lines = [to_graph6(cycle(n)) for n in range(4, 9)]
        cell = observe_relations(lines)["pairs"]["i_ns|i_s"]
        assert cell == {"lt": 5, "eq": 0, "gt": 0, "undefined": 0}

    def test_k33_beta_s_above_beta_ns(self):
        g = from_edge_list(6, [(a, 3 + b) for a in range(3) for b in range(3)])
        cell = observe_relations([to_graph6(g)])["pairs"]["beta_s|beta_ns"]
        assert cell == {"lt": 0, "eq": 0, "gt": 1, "undefined": 0}
        assert compute_parameter(g, ParameterId.beta_s).value == 3
        assert compute_parameter(g, ParameterId.beta_ns).value == 2


class TestHeredityProbe:
    def test_no_divergence_on_named_graphs(self):
        for g in (path(6), cycle(6), complete(4), paw(), twin_pentagon_graph()):
            assert heredity_probe(g) == []
