import json

import numpy as np
import pytest

from histspec import (
    Prescreen,
    complete,
    encode_graph6,
    enumerate_labeled,
    family_B,
    find_hist,
    threshold_connected,
    threshold_two_connected,
    verify_certificates,
    verify_corollaries,
    verify_theorem1,
    verify_theorem2,
)
from histspec import audit_prescreens
from histspec.scan import ScanConfig, graph_from_mask, mask_of_graph, scan_range
from histspec.verification import GRAPH6_CORPUS, VerificationReport

from helpers import connected_labeled_count, random_connected


def test_enumerate_counts_small():
    assert sum(1 for _ in enumerate_labeled(4)) == 64
    got = sum(1 for _ in enumerate_labeled(4, Prescreen(connectivity="connected")))
    assert got == 38 == connected_labeled_count(4)
    for n in (3, 5, 6):
        got = sum(1 for _ in enumerate_labeled(n, Prescreen(connectivity="connected")))
        assert got == connected_labeled_count(n)


def test_enumerate_count_n7_matches_recurrence():
    got = sum(1 for _ in enumerate_labeled(7, Prescreen(connectivity="connected")))
    assert got == connected_labeled_count(7) == 1866256


def test_enumerate_min_edges_filter():
    got = list(enumerate_labeled(3, Prescreen(min_edges=3)))
    assert got == [complete(3)]


def test_enumerate_rejects_large_order():
    with pytest.raises(ValueError):
        next(enumerate_labeled(9))


def test_mask_graph_roundtrip():
    rng = np.random.default_rng(2)
    for _ in range(50):
        g = random_connected(rng, 8, 0.5)
        assert graph_from_mask(8, mask_of_graph(g)) == g


def test_thresholds_cross_checked():
    assert threshold_connected(7) == pytest.approx(4.05479588952, abs=1e-9)
    assert threshold_two_connected(8) == pytest.approx(4.11394494360, abs=1e-9)


def test_theorem1_subsample_properties():
    rep = verify_theorem1(7, subsample=64)
    assert rep.ok
    assert rep.scanned == 2**21
    assert rep.over_threshold == rep.extremal_matches + rep.hists_found
    assert rep.threshold == pytest.approx(threshold_connected(7))


def test_theorem2_subsample_properties():
    rep = verify_theorem2(8, subsample=4096)
    assert rep.ok
    assert rep.scanned == 2**28
    assert rep.over_threshold == rep.extremal_matches + rep.hists_found


def test_reports_deterministic_and_thread_invariant():
    a = verify_theorem1(7, subsample=64).to_json()
    b = verify_theorem1(7, subsample=64).to_json()
    c = verify_theorem1(7, subsample=64, threads=2).to_json()

    def strip(js):
        d = json.loads(js)
        d.pop("elapsed")
        return d

    assert strip(a) == strip(b) == strip(c)


def test_report_arithmetic_enforced():
    with pytest.raises(Exception):
        VerificationReport(
            theorem="thm1", n=7, source="labeled_exhaustive", threshold=4.0,
            scanned=10, prescreen_survivors=5, over_threshold=3,
            extremal_matches=1, hists_found=1, counterexamples=[],
            elapsed=0.0, scope="x",
        )


def test_scan_artificially_low_threshold_is_more_inclusive():
    # Lowering the threshold to the clique bound must add over-threshold
    # graphs (thresholding is monotone).
    true_cfg = ScanConfig(n=7, theta=threshold_connected(7), mode="thm1",
                          extremal="L", subsample=32)
    low_cfg = ScanConfig(n=7, theta=4.0, mode="thm1",
                         extremal="L", subsample=32)
    hi = 1 << 21
    true_out = scan_range(true_cfg, 0, hi)
    low_out = scan_range(low_cfg, 0, hi)
    assert low_out.over > true_out.over


def test_family_members_survive_prescreens_and_match():
    # full run: prescreens must keep every labeled copy of the family and
    # the matcher must count each exactly once
    rep = verify_theorem1(7)
    assert rep.extremal_matches == 210


def test_audit_small():
    rep = audit_prescreens(7, "thm1", subsample=256)
    assert rep.ok
    rep = audit_prescreens(8, "thm2", subsample=65536)
    assert rep.ok


def test_double_star_shortcut_is_sound():
    # The vectorized spanning-double-star test counts a graph as having a
    # HIST without materializing the tree; wherever it fires, the exact
    # search must agree (find_hist itself is oracle-checked elsewhere).
    from histspec.scan import _Tables, _double_star_feasible, _rows_of_masks

    cfg = ScanConfig(n=8, theta=4.0, mode="thm2", extremal="B")
    t = _Tables(cfg)
    rng = np.random.default_rng(31)
    masks = rng.integers(0, 1 << 28, size=4000, dtype=np.uint32)
    rows = _rows_of_masks(t, masks)
    feas = _double_star_feasible(t, masks, rows)
    connected = 0
    for mk in masks[feas][:400]:
        g = graph_from_mask(8, int(mk))
        if not g.is_connected():
            continue
        connected += 1
        assert find_hist(g).found
    assert connected > 100  # the sample actually exercised the shortcut


def test_corollaries_range():
    rep = verify_corollaries(7, 30)
    assert rep.ok
    row8 = next(r for r in rep.rows if r.n == 8)
    assert row8.cap_B == pytest.approx(4.5)
    assert row8.rho_B < row8.cap_B
    assert isinstance(row8.stated_B_cap_holds, bool)
    with pytest.raises(ValueError):
        verify_corollaries(6, 10)


def test_certificates_driver():
    rep = verify_certificates(5)
    assert rep.ok
    assert rep.soundness_violations == 0
    kinds = {(r["family"], r["n"]): r["certificate"] for r in rep.family_rows}
    assert kinds[("L", 10)] == "cut_vertex_deg2"
    assert kinds[("B", 10)] == "p5_pattern"


def test_corpus_source(tmp_path):
    # A small synthetic order-9 corpus: the extremal family, the complete
    # graph, a near-complete graph, and some sparse 2-connected graphs.
    from histspec import cycle

    graphs = [family_B(9), complete(9), complete(9).remove_edge(0, 1), cycle(9)]
    path = tmp_path / "corpus9.g6"
    path.write_text("".join(encode_graph6(g) + "\n" for g in graphs))
    rep = verify_theorem2(9, source=GRAPH6_CORPUS, corpus_path=str(path))
    assert rep.ok
    assert rep.scanned == 4
    assert rep.extremal_matches == 1
    assert rep.hists_found == 2  # K_9 and K_9 minus an edge; the cycle is under
    assert rep.over_threshold == 3


def test_corpus_wrong_order_rejected(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text(encode_graph6(complete(5)) + "\n")
    with pytest.raises(ValueError):
        verify_theorem2(9, source=GRAPH6_CORPUS, corpus_path=str(path))


def test_driver_preconditions():
    with pytest.raises(ValueError):
        verify_theorem1(6)
    with pytest.raises(ValueError):
        verify_theorem2(7)
    with pytest.raises(ValueError):
        verify_theorem1(9)  # labeled exhaustive beyond n=8
    with pytest.raises(ValueError):
        verify_theorem2(9, source=GRAPH6_CORPUS)  # corpus path missing
