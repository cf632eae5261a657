"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

import os
import subprocess
import sys

import pytest

from monofg.centre import fg_over_centre_probe, lemma_outcomes
from monofg.classification import Kind, classify, delta, delta_A, is_d_covering
from monofg.dual import bijection_failures, build_dual, regime_for
from monofg.errors import ScopeError, UnfactorizableError
from monofg.fg import Verdict, decide_fg, verify_finite_generation
from monofg.presentation import CORPUS_NAMES, load_corpus, parse_presentation, serialize
from monofg.resolution import compute_overlaps, d_squared_check, degree_profile, uniqueness_check

from randgen import random_covering, random_homogeneous, random_presentation

FOUR_EXAMPLES = ("ex_dkoszul3", "ex_62_fs", "ex_42_stretched", "ex_63_mixed")


@pytest.fixture(scope="module")
def corpus():
    return {name: load_corpus(name) for name in CORPUS_NAMES}


@pytest.fixture
def verdict_line(capsys):
    def emit(number, title, failures):
        status = "PASS" if not failures else "FAIL"
        with capsys.disabled():
            print(f"\ncriterion {number} ({title}): {status}")
            for f in failures:
                print(f"    {f}")
        assert not failures, "; ".join(failures)

    return emit


def test_criterion_1_classification(corpus, verdict_line):
    expected = {
        "ex_dkoszul3": (Kind.DKOSZUL, 3, 3, 1),
        "ex_62_fs": (Kind.DA_STACKED, 3, 6, 2),
        "ex_42_stretched": (Kind.DA_STACKED, 2, 4, 2),
        "ex_63_mixed": (Kind.DA_STACKED, 2, 6, 3),
    }
    failures = []
    for name, want in expected.items():
        cls = classify(corpus[name])
        got = (cls.kind, cls.d, cls.D, cls.A)
        if got != want:
            failures.append(f"{name}: got {got}, expected {want}")
    verdict_line(1, "corpus classification", failures)


def test_criterion_2_fg_verdicts(corpus, verdict_line):
    failures = []
    for name in FOUR_EXAMPLES:
        v = decide_fg(corpus[name]).verdict
        if v is not Verdict.SATISFIED:
            failures.append(f"{name}: {v.value}")
    v = decide_fg(corpus["ex_notfg_quadratic"]).verdict
    if v is not Verdict.VIOLATED:
        failures.append(f"ex_notfg_quadratic: {v.value}")
    p = corpus["ex_dkoszul3"]
    r = decide_fg(p)
    if [str(w.cycle) for w in r.loops] != ["a"]:
        failures.append(f"ex_dkoszul3 loops: {[str(w.cycle) for w in r.loops]}")
    want = sorted(str(x) for x in p.rho if str(x) != "a a a")
    if len(r.trails) != 1 or sorted(str(x) for x in r.trails[0].rho_T) != want:
        failures.append(f"ex_dkoszul3 trails: {[(str(t.trail), [str(x) for x in t.rho_T]) for t in r.trails]}")
    verdict_line(2, "corpus (Fg) verdicts", failures)


def test_criterion_3_delta_profiles(corpus, verdict_line):
    params = {"ex_dkoszul3": (3, 1), "ex_62_fs": (6, 2), "ex_42_stretched": (4, 2),
              "ex_63_mixed": (6, 3), "ex_notfg_quadratic": (2, 1)}
    failures = []
    for name, (D, A) in params.items():
        prof = degree_profile(compute_overlaps(corpus[name], 12))
        for n in range(13):
            if prof[n] != {delta_A(D, A, n)}:
                failures.append(f"{name} level {n}: {sorted(prof[n])} != {{{delta_A(D, A, n)}}}")
    verdict_line(3, "delta-profile oracle", failures)


def test_criterion_4_complex(corpus, verdict_line):
    failures = []
    for name, p in corpus.items():
        if not d_squared_check(compute_overlaps(p, 10), 10):
            failures.append(f"{name}: d^2 != 0 below depth 10")
    for seed in range(200):
        p = random_presentation(seed, max_arrows=6, max_length=4)
        bad = uniqueness_check(compute_overlaps(p, 6))
        if bad:
            failures.append(f"random seed {seed}: {bad[:3]}")
    verdict_line(4, "d^2 = 0 and uniqueness", failures)


def test_criterion_5_bijection(corpus, verdict_line):
    failures = []
    for name in ("ex_dkoszul3", "ex_62_fs", "ex_42_stretched", "ex_notfg_quadratic"):
        p = corpus[name]
        cls = classify(p)
        bad = bijection_failures(compute_overlaps(p, 10), build_dual(p, cls.A, cls.d), cls.d, cls.A, 10)
        if bad:
            failures.append(f"{name}: (n, |R^n|, dim B_n) = {bad}")
    verdict_line(5, "basis bijection", failures)


def _lemma_failures(p, label):
    r = decide_fg(p)
    regime = regime_for(r.cls)
    dp = build_dual(p, r.cls.A, r.cls.d)
    outcomes, _ = lemma_outcomes(p, dp, r, 6, regime)
    return [f"{label}: {o}" for o in outcomes if not o.ok]


def test_criterion_6_lemmas(corpus, verdict_line):
    failures = []
    for name, p in corpus.items():
        try:
            failures += _lemma_failures(p, name)
        except ScopeError:
            continue
    found, seed = 0, 0
    while found < 100:
        d = 2 + seed % 2
        p = random_covering(seed, d)
        seed += 1
        if classify(p).kind is not Kind.DKOSZUL:
            continue
        found += 1
        failures += _lemma_failures(p, f"random d={d} seed={seed - 1}")
    verdict_line(6, "centrality lemmas", failures)


def test_criterion_7_finite_generation(corpus, verdict_line):
    failures = []
    for name in FOUR_EXAMPLES:
        p = corpus[name]
        r = decide_fg(p)
        n_test = r.bound_N + 6
        try:
            verify_finite_generation(compute_overlaps(p, n_test), r, n_test)
        except UnfactorizableError as exc:
            failures.append(f"{name} (N={r.bound_N}): {exc}")
    p = corpus["ex_notfg_quadratic"]
    cls = classify(p)
    counts = fg_over_centre_probe(build_dual(p, 1, 2), regime_for(cls), 8)
    if not all(c > 0 for c in counts[2:9]):
        failures.append(f"ex_notfg_quadratic probe counts {counts}")
    verdict_line(7, "finite-generation certificates", failures)


def test_criterion_8_covering_equivalence(verdict_line):
    failures = []
    for seed in range(200):
        d = 2 + seed % 3
        p = random_homogeneous(seed, d)
        prof = degree_profile(compute_overlaps(p, 6))
        matches = all(s <= {delta(d, n)} for n, s in enumerate(prof))
        covering = bool(is_d_covering(p, d))
        if covering != matches:
            failures.append(f"seed {seed} d={d}: covering={covering} profile_matches={matches}")
    verdict_line(8, "covering equivalence", failures)


def _fg_json(name, hash_seed):
    env = dict(os.environ, PYTHONHASHSEED=str(hash_seed))
    proc = subprocess.run(
        [sys.executable, "-m", "monofg", "fg", name, "--json"],
        capture_output=True, env=env, check=False,
    )
    return proc.returncode, proc.stdout


def test_criterion_9_round_trip(corpus, verdict_line):
    failures = []
    for name, p in corpus.items():
        if parse_presentation(serialize(p), name=name) != p:
            failures.append(f"{name}: parse(serialize(p)) != p")
        first, second = _fg_json(name, 1), _fg_json(name, 2)
        if first[0] != 0 or first != second:
            failures.append(f"{name}: fg --json differs between runs")
    verdict_line(9, "round trip and deterministic JSON", failures)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
