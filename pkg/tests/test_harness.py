import itertools
import json
import math
from fractions import Fraction

import pytest

from liecheck import harness
from liecheck.errors import UsageError
from liecheck.harness import (CLAIMS, Report, SweepConfig, coordinate_box, enumerate_dominant,
                              recheck, render_report, run_verification_suite)
from liecheck.lattices import lattice_family
from liecheck.linalg import lattice_contains, mat_inv
from liecheck.roots import build_root_system, is_dominant

F = Fraction


def test_enumerate_examples():
    a2 = build_root_system("A2")
    assert enumerate_dominant(a2, lattice_family(a2).coroot, 2) == [(0, 0, 0), (1, 0, -1)]
    b2 = build_root_system("B2")
    assert enumerate_dominant(b2, lattice_family(b2).coroot, 2) == [(0, 0), (1, 1), (2, 0)]
    a1 = build_root_system("A1")
    assert enumerate_dominant(a1, lattice_family(a1).coroot, 0) == [(0, 0)]
    assert enumerate_dominant(a1, lattice_family(a1).coroot, -1) == []


def box_scan(rs, lattice, bound):
    """Lattice points in a ball around the origin, filtered the slow way."""
    box = coordinate_box(rs, bound)
    radius_sq = sum(g * x * x for g, x in zip(rs.model.gram, box))
    basis = lattice.basis
    ginv = mat_inv([[rs.inner(a, b) for b in basis] for a in basis])
    # c = G^-1 (<b_i, v>) and |<b_i, v>| <= |b_i| |v|
    lens = [math.sqrt(rs.norm_sq(b) * radius_sq) for b in basis]
    reach = [math.floor(sum(abs(float(g)) * n for g, n in zip(row, lens))) + 1 for row in ginv]
    out = []
    for coeffs in itertools.product(*[range(-r, r + 1) for r in reach]):
        v = lattice.combine(coeffs)
        if is_dominant(rs, v) and rs.inner(v, rs.highest_root) <= bound:
            out.append(v)
    return sorted(out)


@pytest.mark.parametrize("t", ["A1", "A2", "A3", "B2", "B3", "C3", "G2"])
def test_enumerate_matches_box_scan(t):
    rs = build_root_system(t)
    coroot = lattice_family(rs).coroot
    for bound in (1, 3):
        got = enumerate_dominant(rs, coroot, bound)
        assert got == box_scan(rs, coroot, bound)
        assert all(lattice_contains(coroot, v) for v in got)
    cochar = lattice_family(rs).cochar
    assert enumerate_dominant(rs, cochar, 2) == box_scan(rs, cochar, 2)


# -- reports -----------------------------------------------------------------

def test_empty_report():
    assert render_report(Report(), "text") == b"0 pass / 0 fail / 0 inapplicable\n"
    js = json.loads(render_report(Report(), "json"))
    assert js == {"version": 1, "cases": [], "summary": {"pass": 0, "fail": 0, "inapplicable": 0}}
    with pytest.raises(UsageError):
        render_report(Report(), "xml")


def test_config_validation():
    with pytest.raises(UsageError):
        SweepConfig(claims=("a", "zz"))
    with pytest.raises(UsageError):
        SweepConfig(pairing_bound=0)
    assert run_verification_suite(SweepConfig(types=[])).cases == []


def test_claims_restriction_and_schema():
    rep = run_verification_suite(SweepConfig(types=["A2", "B2"], claims=("b", "d")))
    assert {c.claim for c in rep.cases} == {"b", "d"}
    js = rep.to_json()
    for row in js["cases"]:
        assert set(row) == {"id", "system", "claim", "status", "witness", "elapsed_ms"}
        assert row["status"] in ("pass", "fail", "inapplicable")
    assert js["summary"] == rep.summary()
    by_id = {c.id: c for c in rep.cases}
    # the implication is vacuous when -1 is in the Weyl group
    assert by_id["B2/d"].status == "pass" and by_id["B2/d"].witness["details"]["minus_id"]
    assert by_id["A2/b"].status == "pass"


def strip_timing(data: bytes) -> dict:
    js = json.loads(data)
    for row in js["cases"]:
        row.pop("elapsed_ms")
    return js


def test_report_is_reproducible():
    cfg = SweepConfig(types=["A3", "G2"], pairing_bound=4)
    a = run_verification_suite(cfg)
    b = run_verification_suite(cfg)
    assert render_report(a, "text") == render_report(b, "text")
    assert strip_timing(render_report(a, "json")) == strip_timing(render_report(b, "json"))


def test_parallel_run_keeps_order():
    cfg = SweepConfig(types=["A2", "B3", "G2"], pairing_bound=4)
    serial = run_verification_suite(cfg)
    cfg.jobs = 2
    parallel = run_verification_suite(cfg)
    assert [c.id for c in serial.cases] == [c.id for c in parallel.cases]
    assert [c.status for c in serial.cases] == [c.status for c in parallel.cases]


@pytest.mark.parametrize("t", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_pass_rows_recheck(t):
    rep = run_verification_suite(SweepConfig(types=[t], pairing_bound=4))
    assert rep.ok and rep.cases
    assert all(c.claim in CLAIMS for c in rep.cases)
    for row in rep.to_json()["cases"]:
        if row["status"] == "pass":
            assert recheck(row) == [], row["id"]


def test_fail_row_carries_witness(monkeypatch):
    monkeypatch.setattr(harness, "expected_invariant_factors", lambda t: [99])
    rep = run_verification_suite(SweepConfig(types=["A2"], claims=("pi1",)))
    [case] = rep.cases
    assert case.status == "fail" and case.witness["kind"] == "Pi1"
    assert not rep.ok
    assert render_report(rep).decode().splitlines()[-1] == "0 pass / 1 fail / 0 inapplicable"
    assert recheck(case.to_json())


def test_reversor_points_cover_both_bounds():
    rs = build_root_system("B2")
    cfg = SweepConfig(types=["B2"], pairing_bound=4)
    pts = harness.reversor_sweep_points(rs, cfg)
    assert (3, 1) in pts and (0, 0) not in pts
    a2 = build_root_system("A2")
    assert harness.reversor_sweep_points(a2, cfg) == [(1, 0, -1)]
