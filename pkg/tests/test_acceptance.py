"""Acceptance criteria A1-A8, exact integer comparisons throughout.

Each criterion prints one line ``A<k> PASS|FAIL <seconds>s <detail>``.  Run
under pytest, or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import re
import sys
import time
from pathlib import Path

import pytest

from brunnian.free_lie import lyndon_words_int, monomial_degree, monomial_text
from brunnian.generators import contains_all_letters, kset
from brunnian.laws import free_lie_laws, kohno_laws
from brunnian.ranks import rank_brunnian, witt_rank
from brunnian.verify import (
    check_bidelta,
    check_convolution_identity,
    check_decomposition,
    check_prop3_prop5_prop6,
    check_symmetric_sum,
    check_theorem8,
    kernel_intersection,
)

GOLDEN = Path(__file__).parent / "golden"
SEED = 20240229


def _failures(reports):
    return [f"{r.check} n={r.n} q={r.q_max}: {r.witness}" for r in reports if not r.passed]


def a1():
    bad = []
    for n in (2, 3, 4, 5):
        for q in range(1, (5 if n == 5 else 6) + 1):
            got, want = kernel_intersection(n, q).rank, rank_brunnian(q, n)
            if got != want:
                bad.append(f"n={n} q={q}: kernel {got} vs formula {want}")
    return bad, "kernel ranks = rank_brunnian for n<=5"


def a2():
    bad = []

    def compare(lines, name):
        want = (GOLDEN / name).read_text(encoding="utf-8").splitlines()
        if lines != want:
            bad.append(f"{name}: {lines} != {want}")

    for D in (1, 2, 4, 6):
        compare(kset(3, 3, D).lines(), "kset_n3_k3.txt")
    compare(kset(3, 2, 3).lines(), "kset_n3_k2_d3.txt")
    deg3 = [m for m in kset(4, 1, 5).monomials if monomial_degree(m) == 3]
    compare([f"3 {monomial_text(m)}" for m in deg3], "kset_n4_k1_d3.txt")
    shape = re.compile(r"^\[\[A\[3,4\],A\[(\d),4\]\],A\[(\d),4\]\]$")
    for m in deg3:
        match = shape.match(monomial_text(m))
        if not match or not contains_all_letters(m, 4) or {match[1], match[2]} != {"1", "2"}:
            bad.append(f"unexpected degree-3 shape {monomial_text(m)}")
    return bad, "golden K(3)_3, K(3)_2, degree-3 K(4)_1"


def a3():
    reports = [check_theorem8(3, 6), check_theorem8(4, 6), check_theorem8(5, 5)]
    return _failures(reports), "Z-span and freeness of K(n)_1, n=3,4 (q<=6), n=5 (q<=5)"


def a4():
    reports = [check_symmetric_sum(3, 6), check_symmetric_sum(4, 6)]
    return _failures(reports), "fat = symmetric = kernel, n=3,4, q<=6"


def a5():
    reports = [check_prop3_prop5_prop6(n, k, 6) for n in (2, 3, 4) for k in range(1, n)]
    bad = _failures(reports)
    for r in reports:
        for q, obs in r.observed.items():
            if obs["count5"] != obs["count6"]:
                bad.append(f"{r.check} n={r.n} q={q}: counts {obs['count5']} vs {obs['count6']}")
    return bad, "ker d_n free of Witt rank; prop5/prop6 span ker d_n cap ker d_k, n<=4"


def a6():
    reports = [check_bidelta(n, q) for n in (2, 3, 4) for q in (1, 2, 3)]
    reports += [check_decomposition(n, q) for n in (3, 4) for q in (1, 2, 3, 4)]
    reports.append(check_convolution_identity(6, 10))
    return _failures(reports), "bi-Delta identities n<=4 q<=3; decomposition n=3,4 q<=4; convolution n<=6 q<=10"


def a7():
    laws = [free_lie_laws(1000, SEED, deg_max=6), kohno_laws(200, SEED + 1, n_max=4, deg_max=5)]
    bad = [f"{law.name}: {law.failures} failures, e.g. {law.witnesses[0]}" for law in laws if not law.passed]
    bad += [f"{law.name}: only {law.trials} trials" for law in laws if law.trials < (1000 if "free" in law.name else 200)]
    return bad, f"1000 free_lie + 200 kohno randomized law trials, seed {SEED}"


def a8():
    bad = []
    for k in range(1, 5):
        words = lyndon_words_int(k, 8)
        for q in range(1, 9):
            count = sum(1 for w in words if len(w) == q)
            if witt_rank(q, k) != count:
                bad.append(f"witt({q},{k})={witt_rank(q, k)} vs {count} Lyndon words")
    if witt_rank(6, 3) != 116:
        bad.append(f"witt(6,3)={witt_rank(6, 3)}")
    return bad, "Witt formula = Lyndon counts, k<=4, q<=8; witt(6,3)=116"


CRITERIA = {"A1": (a1, 60), "A2": (a2, 1), "A3": (a3, 300), "A4": (a4, 300),
            "A5": (a5, 120), "A6": (a6, 120), "A7": (a7, 120), "A8": (a8, 1)}


def evaluate(name):
    fn, budget = CRITERIA[name]
    t0 = time.perf_counter()
    bad, what = fn()
    elapsed = time.perf_counter() - t0
    if elapsed > budget:
        bad = bad + [f"took {elapsed:.1f}s, budget {budget}s"]
    status = "PASS" if not bad else "FAIL"
    line = f"{name} {status} {elapsed:6.2f}s  {what}"
    if bad:
        line += " | " + "; ".join(bad[:3])
    return not bad, line


@pytest.fixture
def report_line(request):
    lines = []
    yield lines.append
    reporter = request.config.pluginmanager.get_plugin("terminalreporter")
    for line in lines:
        if reporter is not None:
            reporter.write_line("")
            reporter.write_line(line)
        else:
            print(line)


@pytest.mark.parametrize("name", list(CRITERIA))
def test_criterion(name, report_line):
    ok, line = evaluate(name)
    report_line(line)
    assert ok, line


if __name__ == "__main__":
    results = [evaluate(name) for name in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
