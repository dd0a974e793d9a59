#!/usr/bin/env python3
"""Smoke test for the lcmreg_py extension module.

Builds the cdylib if needed, imports it, and checks a handful of known
values end to end. Run from anywhere:

    python3 python/smoke_test.py
"""

import json
import shutil
import subprocess
import sys
import sysconfig
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def build_and_import():
    candidates = [
        REPO / "target" / "release" / "liblcmreg_py.so",
        REPO / "target" / "debug" / "liblcmreg_py.so",
    ]
    lib = next((p for p in candidates if p.exists()), None)
    if lib is None:
        print("building lcmreg-py (release)...")
        subprocess.run(
            ["cargo", "build", "-p", "lcmreg-py", "--release"],
            cwd=REPO,
            check=True,
        )
        lib = candidates[0]

    stage = Path(tempfile.mkdtemp(prefix="lcmreg-py-"))
    ext = sysconfig.get_config_var("EXT_SUFFIX") or ".so"
    shutil.copy(lib, stage / f"lcmreg_py{ext}")
    shutil.copy(lib, stage / "lcmreg_py.so")
    sys.path.insert(0, str(stage))
    import lcmreg_py

    return lcmreg_py


def main():
    m = build_and_import()
    print(f"lcmreg_py {m.__version__}")

    # Graph construction and predicates
    c5c = m.Graph.named("cycle-complement", 5)
    assert c5c.n == 5 and len(c5c.edges()) == 5
    assert c5c.in_cf_family()
    assert c5c.is_claw_free()
    assert not c5c.complement().is_chordal()
    assert c5c.complement().complement() == c5c

    claw = m.Graph(4, [(0, 1), (0, 2), (0, 3)])
    assert not claw.is_claw_free()
    assert m.Graph.named("complete", 4).in_cf_family()

    # Dirac orders exist exactly when the complement is chordal
    k4 = m.Graph.named("complete", 4)
    assert sorted(k4.dirac_order()) == [0, 1, 2, 3]
    try:
        c5c.dirac_order()
    except ValueError as e:
        assert "Dirac" in str(e)
    else:
        raise AssertionError("expected ValueError for a non-chordal complement")

    # Text format round trip
    g = m.Graph.parse("n 4\n0 1\n2 3\n")
    assert m.Graph.parse(g.render()) == g

    # Regularity values: reg(I(G)) = 3 and reg(I(G)^2) = 4 for G = C_5^c
    assert m.regularity(c5c, 1, "f2") == 3
    assert m.regularity(c5c, 2, "f2") == 4
    assert m.regularity(c5c, 1, "q") == 3

    # reg = 2 exactly for chordal complements
    assert m.regularity(k4) == 2

    # Betti table of the triangle: three generators and a rank-2 first syzygy
    k3 = m.Graph.named("complete", 3)
    table = m.betti_table(k3, 1, "q")
    assert table == [
        (0, [0, 1, 1], 1),
        (0, [1, 0, 1], 1),
        (0, [1, 1, 0], 1),
        (1, [1, 1, 1], 2),
    ]

    # Full compute report for 2K_2
    report = json.loads(m.compute_json(g, 1, ["f2", "q"]))
    assert report["lattice"]["elements"] == 4
    assert report["lattice"]["pure"] is True
    assert report["lattice"]["rank_formula"] is False
    assert all(fr["regularity"] == 3 for fr in report["per_field"])

    # A verification check end to end
    check = json.loads(m.run_check_json("cycle-sphere", n=[4, 5]))
    assert check["check_id"] == "cycle-sphere"
    assert check["instances_run"] == 2
    assert check["failures"] == []

    check = json.loads(m.run_check_json("froberg", n=[4]))
    assert check["failures"] == []

    # Family enumeration
    assert len(m.enumerate_family("all", 3)) == 8
    members = m.enumerate_family("cf", 4)
    assert k4 in members and claw not in members

    # Error paths surface as Python exceptions
    try:
        m.Graph(20, [])
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError for too many vertices")
    try:
        m.regularity(c5c, 2, "f2", element_budget=5)
    except RuntimeError as e:
        assert "budget" in str(e)
    else:
        raise AssertionError("expected RuntimeError for budget exhaustion")

    print("smoke test: OK")


if __name__ == "__main__":
    main()
