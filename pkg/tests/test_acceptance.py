"""Acceptance criteria.  Each test prints one PASS/FAIL line."""

import subprocess
import sys

import numpy as np
import pytest

from lamspace import (
    LambdaWeights,
    LazySequence,
    a_tilde,
    b_lambda_matrix,
    basis_expansion,
    basis_vector,
    bs_lambda_norm,
    builtin_families,
    classify,
    gallery,
    inverse_lambda_transform,
    lambda_transform,
    s_operator,
    series_norm,
    t_lambda_matrix,
    verify_regularity,
)
from lamspace import matrix as mx
from lamspace import sequences as seqs
from lamspace.cli import main as cli_main
from lamspace.spaces import WITNESS_IDS
from lamspace.transform import lambda_matrix_block

CORE = [LambdaWeights.cesaro(), LambdaWeights.power(2.0), LambdaWeights.geometric(2.0)]
N = 1000
n_idx = np.arange(N + 1, dtype=float)


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {number:2d} {'PASS' if ok else 'FAIL'}: {title} ({detail})")
        assert ok, detail

    return emit


def _random_weights(rng):
    kind = rng.integers(5)
    if kind == 0:
        return LambdaWeights.cesaro()
    if kind == 1:
        return LambdaWeights.power(float(rng.uniform(0.3, 3.0)))
    if kind == 2:
        return LambdaWeights.geometric(float(rng.uniform(1.01, 1.9)))
    if kind == 3:
        q = rng.uniform(0.5, 3.0, size=N + 8)
        return LambdaWeights.riesz(LazySequence(block=lambda m: q[:m] if m <= len(q) else
                                                np.resize(q, m)), label="random q")
    head = np.cumsum(rng.uniform(0.5, 2.0, size=6))
    return LambdaWeights.custom(head, "arithmetic")


def test_01_closed_form_transform(report):
    worst = 0.0
    for lam in CORE:
        y = lambda_transform(lam, gallery("cs-not-cs0", lam).sequence).take(N + 1)
        worst = max(worst, float(np.max(np.abs(y - 1 / (n_idx + 2) ** 2))))
    report(1, "Lambda_n(x) = 1/(n+2)^2 for cesaro, power(2), geometric(2)", worst <= 1e-12,
           f"max error {worst:.2e}, tol 1e-12")


def test_02_alternating_partial_sums(report):
    worst_sum, worst_norm = 0.0, 0.0
    for lam in CORE:
        y = gallery("bs-not-cs", lam).sequence
        sums = np.cumsum(lambda_transform(lam, y).take(N + 1))
        expected = np.where(np.arange(N + 1) % 2 == 0, 1.0, 0.0)
        worst_sum = max(worst_sum, float(np.max(np.abs(sums - expected))))
        for depth in (1, 2, 3, 10, 99, 500, N):
            worst_norm = max(worst_norm, abs(bs_lambda_norm(lam, y, depth).value - 1.0))
    ok = worst_sum <= 1e-12 and worst_norm <= 1e-12
    report(2, "partial sums in {1, 0} and bs_lambda norm 1", ok,
           f"max deviation {worst_sum:.2e}, norm deviation {worst_norm:.2e}, tol 1e-12")


def test_03_constant_transform(report):
    worst = max(float(np.max(np.abs(lambda_transform(lam, seqs.constant(1.0)).take(N + 1) - 1.0)))
                for lam in CORE)
    report(3, "Lambda(e) = e", worst <= 1e-14, f"max error {worst:.2e}, tol 1e-14")


def test_04_harmonic_lower_bound(report):
    worst = np.inf
    holds = []
    for lam in builtin_families():
        x = gallery("c0lam-not-cslam", lam).sequence
        y = lambda_transform(lam, x).take(N + 1)
        worst = min(worst, float(np.min(y - (1 / (n_idx + 1) - 1e-12))))
        top = N if lam.family == "geometric" else 4096
        for depth in (16, 64, 256, top):
            if classify(x, "cs_lambda", lam, depth=depth).holds:
                holds.append((lam.describe(), depth))
    ok = worst >= 0 and not holds
    report(4, "Lambda_n(x) >= 1/(n+1) and cs_lambda never Holds", ok,
           f"min slack {worst:.2e}, Holds at {holds or 'no depth'}")


def test_05_inversion_round_trip(report):
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(100):
        lam = _random_weights(rng)
        y_vals = rng.normal(size=N + 1) / (np.arange(N + 1) + 1.0) ** 2
        y = seqs.from_list(y_vals, "zero")
        fwd_inv = lambda_transform(lam, inverse_lambda_transform(lam, y)).take(N + 1)
        inv_fwd = inverse_lambda_transform(lam, lambda_transform(lam, y)).take(N + 1)
        scale = np.max(np.abs(y_vals))
        worst = max(worst, float(np.max(np.abs(fwd_inv - y_vals))) / scale,
                    float(np.max(np.abs(inv_fwd - y_vals))) / scale)
    report(5, "forward/inverse round trips on 100 random pairs", worst <= 1e-10,
           f"max relative error {worst:.2e}, tol 1e-10")


def test_06_decomposition(report):
    rng = np.random.default_rng(6)
    worst_s, worst_sum = 0.0, 0.0
    fams = builtin_families()
    for i in range(100):
        lam = fams[i % len(fams)]
        x = seqs.from_list(rng.normal(size=N + 1), "zero")
        xs, ys = x.take(N + 1), lambda_transform(lam, x).take(N + 1)
        s = s_operator(lam, x).take(N + 1)
        worst_s = max(worst_s, float(np.max(np.abs(s - (xs - ys)))))
        worst_sum = max(worst_sum, float(np.max(np.abs(np.cumsum(s) - (np.cumsum(xs) - np.cumsum(ys))))))
    ok = worst_s <= 1e-12 and worst_sum <= 1e-10
    report(6, "S_n(x) = x_n - Lambda_n(x) and the partial-sum identity", ok,
           f"pointwise {worst_s:.2e} (tol 1e-12), partial sums {worst_sum:.2e} (tol 1e-10)")


def test_07_basis(report):
    worst = 0.0
    for lam in builtin_families():
        for n in range(N + 1):
            y = lambda_transform(lam, basis_vector(lam, n).sequence).take(n + 3)
            target = np.zeros(n + 3)
            target[n] = 1.0
            worst = max(worst, float(np.max(np.abs(y - target))))
    ces = LambdaWeights.cesaro()
    in_space = {
        "cs-not-cs0 witness": gallery("cs-not-cs0", ces).sequence,
        "preimage of (-1)^k/(k+1)^2": inverse_lambda_transform(
            ces, LazySequence(block=lambda m: (-1.0) ** np.arange(m) / (np.arange(m) + 1.0) ** 2)),
        "preimage of 2^-k": inverse_lambda_transform(ces, LazySequence(block=lambda m: 0.5 ** np.arange(m))),
    }
    monotone = {}
    for name, x in in_space.items():
        res = [basis_expansion(ces, x, m, check_membership=False).residual_norm for m in (8, 16, 32, 64)]
        monotone[name] = all(b <= a + 1e-14 for a, b in zip(res, res[1:]))
    ok = worst <= 1e-14 and all(monotone.values())
    report(7, "Lambda(e_lambda^(n)) = e^(n) and non-increasing residuals", ok,
           f"max error {worst:.2e} (tol 1e-14), monotone residuals {monotone}")


def test_08_isometry(report):
    rng = np.random.default_rng(8)
    worst, worst_dense = 0.0, 0.0
    fams = builtin_families()
    for i in range(50):
        lam = fams[i % len(fams)]
        x = seqs.from_list(rng.normal(size=400) / (np.arange(400) + 1.0), "zero")
        lhs = bs_lambda_norm(lam, x, N).value
        rhs = series_norm(lambda_transform(lam, x), N).value
        worst = max(worst, abs(lhs - rhs))
        # independent evaluation: dense matrix rows, plain partial sums
        dense = np.max(np.abs(np.cumsum(lambda_matrix_block(lam, N + 1, N + 1) @ x.take(N + 1))))
        worst_dense = max(worst_dense, abs(dense - lhs) / max(1.0, dense))
    ok = worst <= 1e-14 and worst_dense <= 1e-12
    report(8, "cs_lambda norm of x equals cs norm of Lambda(x)", ok,
           f"max difference {worst:.2e} (tol 1e-14), dense cross-check {worst_dense:.2e} (tol 1e-12)")


def test_09_duality_identities(report):
    rng = np.random.default_rng(9)
    fams = builtin_families()
    size = 257
    worst = {"B": 0.0, "T": 0.0, "tilde": 0.0}
    for i in range(50):
        lam = fams[i % len(fams)]
        x = seqs.from_list(rng.normal(size=size), "zero")
        a = seqs.from_list(rng.normal(size=size), "zero")
        xs, ys, av = x.take(size), lambda_transform(lam, x).take(size), a.take(size)
        worst["B"] = max(worst["B"], float(np.max(np.abs(b_lambda_matrix(lam, a).block(size, size) @ ys - av * xs))))
        worst["T"] = max(worst["T"], float(np.max(np.abs(
            t_lambda_matrix(lam, a).block(size, size) @ ys - np.cumsum(av * xs)))))
        entries = rng.normal(size=(size + 1, size + 1))
        A = mx.from_entry_rule(lambda n, k: entries[n, k])
        worst["tilde"] = max(worst["tilde"], float(np.max(np.abs(
            A.block(size, size) @ xs - a_tilde(lam, A).block(size, size) @ ys))))
    ok = max(worst.values()) <= 1e-8
    report(9, "a_n x_n = B_n(y), partial sums = T_n(y), Ax = A~y", ok,
           ", ".join(f"{k} {v:.2e}" for k, v in worst.items()) + ", tol 1e-8")


def test_10_regularity(report):
    results = {lam.describe(): verify_regularity(lam, depth=N).overall.value for lam in builtin_families()}
    ok = all(v == "Holds" for v in results.values())
    report(10, "Silverman-Toeplitz conditions for every builtin family", ok, str(results))


def test_11_cesaro_riesz_reduction(report):
    rows = 200
    n, k = np.meshgrid(np.arange(rows), np.arange(rows), indexing="ij")
    c1 = np.where(k <= n, 1.0 / (n + 1.0), 0.0)
    ces_ok = np.array_equal(lambda_matrix_block(LambdaWeights.cesaro(), rows, rows), c1)
    rng = np.random.default_rng(11)
    q = rng.integers(1, 10, size=rows).astype(float)
    Q = np.cumsum(q)
    riesz = np.where(k <= n, q[None, :] / Q[:, None], 0.0)
    lam = LambdaWeights.riesz(LazySequence(block=lambda m: q[:m]), label="integer q")
    riesz_ok = np.array_equal(lambda_matrix_block(lam, rows, rows), riesz)
    report(11, "weighted means reduce to C1 and Riesz means entrywise", ces_ok and riesz_ok,
           f"cesaro exact {ces_ok}, riesz exact {riesz_ok}")


def test_12_cli_gallery(report):
    codes = {}
    for i, lam in enumerate(builtin_families()):
        for w in WITNESS_IDS:
            argv = ["gallery", "--id", w, "--lambda", f"builtin:{i}", "--depth", str(N)]
            proc = subprocess.run([sys.executable, "-m", "lamspace.cli", *argv], capture_output=True)
            codes[(lam.describe(), w)] = proc.returncode
    argv = [sys.executable, "-m", "lamspace.cli", "gallery", "--id", "all", "--lambda", "all", "--depth", str(N)]
    first, second = subprocess.run(argv, capture_output=True), subprocess.run(argv, capture_output=True)
    identical = first.stdout == second.stdout and len(first.stdout) > 0
    bad = {k: v for k, v in codes.items() if v != 0}
    ok = not bad and identical and first.returncode == 0
    report(12, "gallery exits 0 everywhere, reports byte-identical", ok,
           f"{len(codes)} runs, nonzero exits {bad or 'none'}, identical {identical}")
    assert cli_main(["gallery", "--id", "cs-not-cs0", "--lambda", "cesaro", "--depth", "1024"]) == 0
