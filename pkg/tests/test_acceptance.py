"""Exit criteria. Each test appends one PASS/FAIL line, printed in the pytest summary."""
import time

import numpy as np
import pytest

from conftest import random_density, random_unitary
from gmedetect import (
    TripartiteState,
    compute_M,
    compute_N,
    detect_gme,
    example1_score_closed_form,
    example2_bound_closed_form,
    gme_concurrence_lower_bound,
    haar_random_pure,
    make_example1,
    make_example2,
    partial_transpose,
    partial_transpose_bipartite,
    pure_gme_concurrence,
    purity_deficit_bounds,
    random_biseparable,
    realign,
    realign_bipartite,
    schmidt_spectrum,
    trace_norm,
)
from gmedetect.cli import main
from gmedetect.states import FamilyParams, ghz_vector, projector, rng
from gmedetect.sweep import find_threshold

RESULTS = []


def record(name, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def simplex_grid(step=0.05):
    n = round(1 / step)
    return [(i * step, j * step) for i in range(n + 1) for j in range(n + 1 - i)]


def example2_grid_values():
    pipeline, closed = [], []
    for x, y in simplex_grid():
        pipeline.append(gme_concurrence_lower_bound(make_example2(x, y)))
        closed.append(example2_bound_closed_form(x, y))
    return np.array(pipeline), np.array(closed)


def test_c1_example1_closed_form():
    t0 = time.perf_counter()
    errs = [abs(detect_gme(make_example1(k / 20)).score - example1_score_closed_form(k / 20)) for k in range(21)]
    dt = time.perf_counter() - t0
    record("C1 Example 1 closed form", max(errs) <= 1e-8 and dt < 5, f"max |err| = {max(errs):.2e} (<= 1e-8), {dt:.2f}s (< 5s)")


def test_c2_example1_threshold():
    t0 = time.perf_counter()
    t = find_threshold(FamilyParams("ghz_qutrit_isotropic", d=3), "x", 0.0, 1.0, 1e-6)
    dt = time.perf_counter() - t0
    record("C2 Example 1 threshold", abs(t - 0.7) <= 1e-6 and dt < 2, f"crossing x = {t:.9f} (0.7 +- 1e-6), {dt:.2f}s (< 2s)")


def test_c3_example2_closed_form():
    t0 = time.perf_counter()
    pipeline, closed = example2_grid_values()
    dt = time.perf_counter() - t0
    err = np.max(np.abs(pipeline - closed))
    record(
        "C3 Example 2 closed form (alpha:=x, beta:=y)",
        err <= 1e-6 and dt < 10,
        f"{len(pipeline)} grid points, max |pipeline - g| = {err:.2e} (<= 1e-6), {dt:.2f}s (< 10s)",
    )


def test_c4_lemma_pure_bipartite():
    worst_eq, worst_cap = 0.0, -np.inf
    gen = rng(4)
    for m, n in ((2, 2), (2, 4), (3, 9)):
        for _ in range(1000):
            psi = haar_random_pure(m * n, gen)
            rho = projector(psi)
            target = np.sqrt(schmidt_spectrum(psi, m, n)).sum() ** 2
            pt = trace_norm(partial_transpose_bipartite(rho, m, n).T, hermitian=True)
            rr = trace_norm(realign_bipartite(rho, m, n))
            worst_eq = max(worst_eq, abs(pt - target), abs(rr - target))
            worst_cap = max(worst_cap, pt - min(m, n), rr - min(m, n))
    record(
        "C4 Lemma / pure-state norm identity",
        worst_eq <= 1e-8 and worst_cap <= 1e-8,
        f"max |norm - (sum sqrt u)^2| = {worst_eq:.2e}, max(norm - min(m,n)) = {worst_cap:.3f}",
    )


@pytest.mark.parametrize("d", [2, 3])
def test_c5_theorem1_no_false_positives(d):
    gen = rng(50 + d)
    thr = (1 + 2 * d) / 3
    false_pos, worst = 0, -np.inf
    for _ in range(10_000):
        rep = detect_gme(random_biseparable(d, 10, gen))
        false_pos += rep.is_gme or rep.score > thr + 1e-8
        worst = max(worst, rep.score - thr)
    record(f"C5 Theorem 1 soundness (d={d})", false_pos == 0, f"10000 biseparable states, {false_pos} false positives, max(score - threshold) = {worst:.4f}")


@pytest.mark.parametrize("d", [2, 3])
def test_c6_theorem2_pure_soundness(d):
    gen = rng(60 + d)
    worst = -np.inf
    for _ in range(1000):
        psi = haar_random_pure((d,) * 3, gen)
        rho = TripartiteState.from_pure(psi, (d, d, d))
        worst = max(worst, gme_concurrence_lower_bound(rho) - pure_gme_concurrence(psi))
    record(f"C6 Theorem 2 soundness on pure states (d={d})", worst <= 1e-8, f"max(bound - C_GME) = {worst:.4f} (<= 1e-8)")


@pytest.mark.parametrize("d", [2, 3])
def test_c6_theorem2_tight_on_ghz(d):
    psi = ghz_vector(d)
    rho = TripartiteState.from_pure(psi, (d, d, d))
    bound = gme_concurrence_lower_bound(rho)
    exact = pure_gme_concurrence(psi)
    per_cut = min(purity_deficit_bounds(rho))
    record(
        f"C6 Theorem 2 tightness on GHZ (d={d})",
        abs(bound - exact) <= 1e-8,
        f"bound = {bound:.8f}, C_GME = {exact:.8f} (equal within 1e-8); per-cut PPT bound = {per_cut:.8f}",
    )


def test_c7_convexity():
    gen = np.random.default_rng(7)
    lams = np.linspace(0, 1, 11)
    worst = -np.inf
    for k in range(500):
        d = 2 if k % 2 == 0 else 3
        n = d**3
        rank_a, rank_b = gen.integers(1, n + 1, size=2)
        a = TripartiteState((d, d, d), random_density(n, gen, rank_a))
        b = TripartiteState((d, d, d), random_density(n, gen, rank_b))
        ma, mb, na, nb = compute_M(a), compute_M(b), compute_N(a), compute_N(b)
        for lam in lams:
            mix = TripartiteState((d, d, d), lam * a.mat + (1 - lam) * b.mat)
            worst = max(worst, compute_M(mix) - (lam * ma + (1 - lam) * mb), compute_N(mix) - (lam * na + (1 - lam) * nb))
    record("C7 Convexity of M and N", worst <= 1e-8, f"500 pairs x 11 lambdas, max violation = {worst:.2e} (<= 1e-8)")


def test_c8_transform_algebra():
    gen = np.random.default_rng(8)
    involution_ok, worst = True, 0.0
    for k in range(200):
        d = 2 if k % 2 == 0 else 3
        n = d**3
        rho = TripartiteState((d, d, d), random_density(n, gen, gen.integers(1, n + 1)))
        u = np.kron(np.kron(random_unitary(d, gen), random_unitary(d, gen)), random_unitary(d, gen))
        rot = TripartiteState((d, d, d), u @ rho.mat @ u.conj().T)
        for i in (1, 2, 3):
            pt = partial_transpose(rho, i)
            involution_ok &= np.array_equal(partial_transpose(pt, i, rho.dims), rho.mat)
            worst = max(
                worst,
                abs(trace_norm(pt, hermitian=True) - trace_norm(partial_transpose(rot, i), hermitian=True)),
                abs(trace_norm(realign(rho, i)) - trace_norm(realign(rot, i))),
            )
    record(
        "C8 Transform algebra",
        involution_ok and worst <= 1e-8,
        f"involution bit-exact = {involution_ok}, max local-unitary drift = {worst:.2e} (<= 1e-8)",
    )


def test_c9_figure2_sweep(tmp_path):
    import csv

    out = tmp_path / "fig2.csv"
    code = main(["sweep", "--family", "ghz_w_qubit_mixture", "--step", "0.05", "--output", str(out)])
    with open(out) as fh:
        rows = [r for r in csv.DictReader(fh) if r["invalid"] == "0"]
    _, closed = example2_grid_values()
    by_point = {(round(x, 12), round(y, 12)): g for (x, y), g in zip(simplex_grid(), closed)}
    err = max(abs(float(r["bound_raw"]) - by_point[(float(r["x"]), float(r["y"]))]) for r in rows)
    clamp_err = max(abs(float(r["bound_clamped"]) - max(0.0, by_point[(float(r["x"]), float(r["y"]))])) for r in rows)
    detected = sum(r["is_gme"] == "1" for r in rows)
    record(
        "C9 Figure 2 sweep data",
        code == 0 and len(rows) == len(by_point) and max(err, clamp_err) <= 1e-6 and detected > 0,
        f"{len(rows)} valid rows, max |bound - g| = {max(err, clamp_err):.2e}, {detected} detected points",
    )
