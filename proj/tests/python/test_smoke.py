import json
import math

import pytest

import hg4


def test_parse_and_format_round_trip():
    code = hg4.parse_edges("123,1234")
    assert hg4.format_edges(code) == "1234,123"
    assert hg4.format_edges(hg4.standardize(code)) == "1234"
    assert hg4.rank("12,3") == 2


def test_parse_error_names_token():
    with pytest.raises(ValueError, match="5"):
        hg4.parse_edges("125")


def test_state_amplitudes():
    amps = hg4.state("1234")
    assert len(amps) == 16
    assert amps[15] == pytest.approx(-0.25)
    assert sum(a * a for a in amps) == pytest.approx(1.0)
    assert hg4.signs("1234") == [0] * 15 + [1]


def test_local_moves_and_stabilizers():
    h = hg4.parse_edges("1234,123")
    assert hg4.format_edges(hg4.apply_x(h, 4)) == "1234"
    assert hg4.format_edges(hg4.apply_z(h, 2)) == "1234,123,2"
    assert hg4.verify_stabilizers(h)


def test_entropies_of_three_edge():
    p = hg4.entropy_profile("123")
    r = -0.75 * math.log2(0.75) - 0.25 * math.log2(0.25)
    assert p["be1"] == pytest.approx([r, r, r, 0.0], abs=1e-12)
    assert p["be2"] == pytest.approx([r, r, r], abs=1e-12)


def test_geometric_entanglement():
    sol = hg4.geometric_entanglement("1234")
    assert sol["eg"] == pytest.approx(0.3043, abs=5e-4)
    assert sol["pattern"] == "4"
    assert sol["reality"] == "R"
    assert hg4.geometric_entanglement("")["eg"] == 0.0
    with pytest.raises(ValueError):
        hg4.geometric_entanglement("123", restarts=0)


def test_orbits():
    table = hg4.enumerate_orbits()
    assert table.num_orbits == 39
    assert table.census() == {"rank4": 16384, "rank3": 15360, "graphs": 1024}
    rec = table.orbit_of("1234,123")
    assert rec["size"] == 256
    assert rec["m"] == 1
    assert rec["rep_edges"] == "1234"


def test_classify_report():
    doc = json.loads(hg4.classify(seed=7))
    assert doc["seed"] == 7
    rows = [c["paper_row"] for c in doc["classes"] if c["paper_row"] is not None]
    assert rows == list(range(1, 29))


def test_suite():
    assert "census" in hg4.suite_names
    passed, detail = hg4.run_suite("census")
    assert passed, detail
