"""Acceptance criteria, one test per criterion.

All comparisons are exact (zero tolerance).  Runtime limits are pinned
below.  Each test records one PASS/FAIL line; the lines are printed in
the terminal summary and by running this file directly.
"""

import os
import subprocess
import sys
import time
from itertools import product

from w22.algebra import basis_generators, bracket
from w22.verify import RunConfig, run_suite

# pinned limits, seconds
LIMIT_LIE = 5
LIMIT_MODULE = 60
LIMIT_DET = 30
LIMIT_REDUCTION = 120
LIMIT_ALL = 300

RESULTS = []


def record(num, title, ok, detail):
    RESULTS.append("criterion %2d %-30s %s  %s" % (num, title, "PASS" if ok else "FAIL", detail))
    assert ok, detail


def checks(suite, prefix="", seed=0):
    rep = run_suite(RunConfig(seed=seed), suite)
    return [e for e in rep["checks"] if e["check_id"].startswith(prefix)]


def all_pass(entries):
    return all(e["result"] == "pass" for e in entries)


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_criterion_01_lie_axioms():
    def run():
        gens = basis_generators(4)
        bad = 0
        for x, y in product(gens, repeat=2):
            bad += bracket(x, y) != -bracket(y, x)
        n = 0
        for x, y, z in product(gens, repeat=3):
            n += 1
            bad += bool(bracket(x, bracket(y, z)) + bracket(y, bracket(z, x))
                        + bracket(z, bracket(x, y)))
        return bad, n
    (bad, n), dt = timed(run)
    record(1, "Lie axioms", bad == 0 and n >= 5800 and dt < LIMIT_LIE,
           "%d triples, %d failures, %.2fs (limit %ds)" % (n, bad, dt, LIMIT_LIE))


def test_criterion_02_module_axioms():
    entries, dt = timed(lambda: checks("axioms", "axioms/module/"))
    families = {e["check_id"].split("/")[2] for e in entries}
    sets = {f: sum(e["check_id"].split("/")[2] == f for e in entries) for f in families}
    ok = all_pass(entries) and dt < LIMIT_MODULE and \
        {"omega2", "omega3", "verma"} <= families and \
        all(sets[f] >= 3 for f in families if f != "verma") and \
        any(f.startswith("tensor-m2") for f in families)
    record(2, "module axioms", ok, "%d checks over %s, %.1fs (limit %ds)"
           % (len(entries), ",".join(sorted(families)), dt, LIMIT_MODULE))


def test_criterion_03_determinant():
    entries, dt = timed(lambda: checks("determinant"))
    cases = sum(e["params"]["cases"] for e in entries)
    ok = all_pass(entries) and len(entries) == 31 and cases >= 300 and dt < LIMIT_DET
    record(3, "determinant identity", ok, "%d shapes, %d cases, %.1fs (limit %ds)"
           % (len(entries), cases, dt, LIMIT_DET))


def test_criterion_04_hom_classification():
    entries = checks("hom")
    record(4, "hom classification", all_pass(entries) and len(entries) >= 12,
           "%d/%d cases match" % (sum(e["result"] == "pass" for e in entries), len(entries)))


def test_criterion_05_q_element():
    entries = checks("q-identity")
    omega = [e for e in entries if "/omega/" in e["check_id"]]
    coeff = [e for e in entries if "t1t2" in e["check_id"]]
    ok = all_pass(entries) and len(omega) >= 3 and len(coeff) >= 1
    record(5, "Q element", ok, "%d Omega parameter sets, %d coefficient checks"
           % (len(omega), len(coeff)))


def test_criterion_06_reduction_and_generator():
    entries, dt = timed(lambda: checks("tensor-simplicity"))
    l2 = [e for e in entries if "/reduction/" in e["check_id"]]
    reach = [e for e in entries if "/generator-reach/" in e["check_id"]]
    ok = all_pass(l2 + reach) and len(l2) >= 10 and len(reach) >= 10 and dt < LIMIT_REDUCTION
    record(6, "reduction and generator", ok, "%d reduction, %d reach instances, %.1fs (limit %ds)"
           % (len(l2), len(reach), dt, LIMIT_REDUCTION))


def test_criterion_07_degenerate():
    entries = checks("degenerate")
    main = [e for e in entries if e["check_id"] == "degenerate/closure-properness"]
    ok = all_pass(entries) and len(main) == 1 and main[0]["params"]["r_bound"] >= 3 \
        and main[0]["params"]["window"] >= 4
    record(7, "simplicity converse", ok, "closure and properness, %d images checked"
           % (main[0]["params"]["images_checked"] if main else 0))


def test_criterion_08_rg():
    entries = checks("rg")
    counts = {}
    for e in entries:
        _, m, kind, _ = e["check_id"].split("/")
        counts[(m, kind)] = counts.get((m, kind), 0) + 1
    ok = all_pass(entries) and len(counts) == 6 and min(counts.values()) >= 10
    record(8, "R_g invariant", ok, "%d samples over m in {1,2,3}" % len(entries))


def test_criterion_09_nonweight():
    entries = checks("tensor-simplicity", "tensor-simplicity/nonweight/")
    record(9, "non-weight property", all_pass(entries) and len(entries) >= 20,
           "%d random g" % len(entries))


def test_criterion_10_fingerprint():
    entries = checks("fingerprint")
    pairs = [e for e in entries if "/pair/" in e["check_id"]]
    perms = [e for e in entries if "/permutation/" in e["check_id"]]
    ok = all_pass(entries) and len(pairs) >= 10 and len(perms) >= 1
    record(10, "fingerprint separation", ok, "%d pairs separated, %d permutations invariant"
           % (len(pairs), len(perms)))


def test_criterion_11_determinism(tmp_path):
    jobs = str(max(1, min(4, os.cpu_count() or 1)))
    outs, times = [], []
    for i in range(2):
        out = tmp_path / ("run%d.json" % i)
        t0 = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "w22", "verify", "all", "--seed", "7",
                               "--jobs", jobs, "--out", str(out)], capture_output=True)
        times.append(time.perf_counter() - t0)
        outs.append(out.read_bytes() if out.exists() else b"")
        assert proc.returncode == 0, proc.stderr.decode()
    ok = outs[0] == outs[1] and outs[0] and max(times) < LIMIT_ALL
    record(11, "determinism", ok, "byte-identical: %s, slowest run %.1fs (limit %ds)"
           % (outs[0] == outs[1], max(times), LIMIT_ALL))


if __name__ == "__main__":
    import pytest
    code = pytest.main([__file__, "-q", "-p", "no:cacheprovider"])
    sys.exit(code)
