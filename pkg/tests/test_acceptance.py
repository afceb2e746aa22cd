"""Acceptance gate: one test per criterion, each logging a pass/fail line.

The lines are printed in the "acceptance criteria" section of the pytest
terminal summary (see conftest.py).
"""

import math
import subprocess
import sys

import numpy as np

import oracles
from conftest import ACCEPTANCE_LOG, FIXTURES, ginibre, rand_herm, rand_unitary, rand_vec
from rigtfd import liouville as lv
from rigtfd import rigged, tfd
from rigtfd.rigged import DecayClass, DecayProfile, SequenceVector

BETAS = (0.0, 0.1, 1.0, 5.0, 20.0)


def record(num, desc, ok, detail):
    ACCEPTANCE_LOG.append((num, desc, bool(ok), detail))
    assert ok, f"criterion {num} ({desc}) failed: {detail}"


def thermal_trials(n=200, seed=1001):
    """Shared draws for the route-equivalence and purification criteria."""
    rng = np.random.default_rng(seed)
    for t in range(n):
        d = 2 + t % 7
        beta = BETAS[(t // 7) % len(BETAS)]
        yield d, beta, rand_herm(rng, d), rand_herm(rng, d)


def test_1_thermal_average_routes():
    worst = 0.0
    seen = set()
    for d, beta, h, a in thermal_trials():
        state = tfd.gibbs(h, beta)
        vac = tfd.thermal_vacuum(state)
        # operator route computed independently as sum_ij rho_ij a_ji
        direct = float(np.sum(state.rho.matrix * a.T).real)
        worst = max(
            worst,
            abs(direct - tfd.thermal_average_tfd(a, vac)),
            abs(tfd.thermal_average_operator(a, state) - tfd.thermal_average_tfd(a, vac)),
        )
        seen.add((d, beta))
    ok = worst <= 1e-10 and len(seen) == 35
    record(1, "thermal average, operator vs doubled-space route", ok, f"200 trials, max |diff| = {worst:.2e} (tol 1e-10)")


def test_2_vectorization_unitary():
    rng = np.random.default_rng(1002)
    worst, control_broken = 0.0, False
    for t in range(200):
        d = 2 + t % 7
        a, b = ginibre(rng, d), ginibre(rng, d)
        hs = np.sum(np.conj(a) * b)
        worst = max(worst, abs(lv.vectorize(a).inner(lv.vectorize(b)) - hs))
        swapped = lv.vectorize_swapped(a).inner(lv.vectorize_swapped(b))
        control_broken |= abs(swapped - hs) > 1e-12
    ok = worst <= 1e-12 and control_broken
    record(
        2,
        "vectorization preserves the trace inner product",
        ok,
        f"200 pairs, max |diff| = {worst:.2e} (tol 1e-12); swapped-slot control fails: {control_broken}",
    )


def test_3_purification():
    worst = 0.0
    for d, beta, h, _ in thermal_trials():
        state = tfd.gibbs(h, beta)
        reduced = lv.partial_trace_tilde(tfd.thermal_vacuum(state).state)
        worst = max(worst, float(np.max(np.abs(reduced - state.rho.matrix))))
    record(3, "tilde partial trace of the vacuum gives rho", worst <= 1e-10, f"200 trials, max entry error = {worst:.2e} (tol 1e-10)")


def test_4_rank_one_correspondence():
    rng = np.random.default_rng(1004)
    worst = 0.0
    for t in range(100):
        d = 2 + t % 7
        phi, psi = rand_vec(rng, d), rand_vec(rng, d)
        v = lv.vectorize(lv.rank_one(phi, psi)).components
        worst = max(worst, float(np.max(np.abs(v - np.kron(psi, np.conj(phi))))))
    record(4, "rank-one operator maps to psi (x) C phi", worst <= 1e-12, f"100 pairs, max |diff| = {worst:.2e} (tol 1e-12)")


def test_5_superoperator_transport():
    rng = np.random.default_rng(1005)
    worst_left = worst_right = worst_comm = 0.0
    for t in range(100):
        d = 2 + t % 7
        a, b, x = ginibre(rng, d), ginibre(rng, d), ginibre(rng, d)
        vx = lv.vectorize(x).components
        left = lv.devectorize(tfd.doubled_observable(a, d) @ vx)
        right = lv.devectorize(tfd.tilde_observable(a, d) @ vx)
        worst_left = max(worst_left, float(np.max(np.abs(left - a @ x))))
        worst_right = max(worst_right, float(np.max(np.abs(right - x @ a.conj().T))))
        p, q = tfd.doubled_observable(a, d), tfd.tilde_observable(b, d)
        worst_comm = max(worst_comm, float(np.max(np.abs(p @ q - q @ p))))
    worst = max(worst_left, worst_right, worst_comm)
    record(
        5,
        "superoperator transport and sector commutation",
        worst <= 1e-12,
        f"100 trials, left {worst_left:.2e}, tilde {worst_right:.2e}, commutator {worst_comm:.2e} (tol 1e-12)",
    )


def test_6_tilde_algebra():
    rng = np.random.default_rng(1006)
    inv = mult = anti = 0.0
    for t in range(100):
        d = 2 + t % 7
        a, b = ginibre(rng, d), ginibre(rng, d)
        alpha = complex(*rng.normal(size=2))
        inv = max(inv, float(np.max(np.abs(tfd.tilde(tfd.tilde(a)) - a))))
        mult = max(mult, float(np.max(np.abs(tfd.tilde(a @ b) - tfd.tilde(a) @ tfd.tilde(b)))))
        lhs = tfd.tilde(alpha * a + b)
        anti = max(anti, float(np.max(np.abs(lhs - (np.conj(alpha) * tfd.tilde(a) + tfd.tilde(b))))))
    ok = max(inv, mult, anti) <= 1e-12
    record(6, "tilde conjugation algebra", ok, f"100 trials, involution {inv:.2e}, product {mult:.2e}, antilinear {anti:.2e} (tol 1e-12)")


def test_7_basis_independence():
    rng = np.random.default_rng(1007)
    vac = tfd.thermal_vacuum(tfd.gibbs(np.zeros((3, 3)), 1.0)).state.components
    reference = lv.vectorize(np.eye(3) / math.sqrt(3)).components
    worst = float(np.max(np.abs(vac - reference)))
    for _ in range(20):
        f = rand_unitary(rng, 3)
        built = sum(math.sqrt(1 / 3) * np.kron(f[:, j], np.conj(f[:, j])) for j in range(3))
        worst = max(worst, float(np.max(np.abs(built - vac))))
    record(7, "vacuum independent of the eigenbasis for rho = I/3", worst <= 1e-12, f"20 bases, max |diff| = {worst:.2e} (tol 1e-12)")


FIXTURE_PROFILES = (
    [DecayProfile.geometric(r) for r in (0.0, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0, 1.1, 1.5, 2.0)]
    + [DecayProfile.power(a) for a in (-15.0, -8.0, -3.0, -1.5, -1.0, -0.75, -0.6, -0.5, -0.4, 0.0, 0.5, 1.0, 3.0)]
    + [
        DecayProfile.stretched(0.5, 1.0),
        DecayProfile.stretched(0.5, 0.5),
        DecayProfile.stretched(0.2, 0.5),
        DecayProfile.stretched(0.3, 0.75),
        DecayProfile.finite(5),
        DecayProfile.finite(100, 3.0),
        DecayProfile("power", 2.0, support=50),
    ]
)

PAIRING_PARTNERS = [
    DecayProfile.geometric(0.5),
    DecayProfile.geometric(0.9),
    DecayProfile.stretched(0.3, 0.75),
    DecayProfile.finite(20),
]


def _phased(profile, n, rng):
    mags = profile.bound(np.arange(n))
    return SequenceVector(mags * np.exp(2j * np.pi * rng.uniform(size=n)), profile)


def _pairing_gap_ratio(f_prof, v_prof, n, rng):
    f2, v2 = _phased(f_prof, 2 * n, rng), _phased(v_prof, 2 * n, rng)
    f1 = SequenceVector(f2.coefficients[:n], f_prof)
    v1 = SequenceVector(v2.coefficients[:n], v_prof)
    short, long_ = rigged.pair(f1, v1), rigged.pair(f2, v2)
    # floating summation allowance on top of the rigorous tail bound
    slack = 4 * np.finfo(float).eps * float(np.sum(np.abs(f2.coefficients * v2.coefficients)))
    gap = abs(long_.value - short.value)
    if gap == 0.0:
        # zero functional or both sequences exhausted: nothing to bound
        return 0.0
    return gap / (short.tail_bound + slack)


def test_8_classification_oracle():
    assert len(FIXTURE_PROFILES) == 30
    disagreements = []
    seminorm_checks = 0
    for p in FIXTURE_PROFILES:
        got = rigged.classify(p).value
        if got != oracles.grid_class(p):
            disagreements.append((p, got, oracles.grid_class(p)))
        for k in (0, 2, 4, 8, 16):
            lib = rigged.profile_seminorm(p, k)
            if oracles.seminorm_diverges(p, k):
                agree = math.isinf(lib)
            else:
                agree = math.isfinite(lib) and abs(lib - oracles.grid_seminorm(p, k)) <= 1e-9 * max(1.0, lib)
            seminorm_checks += 1
            if not agree:
                disagreements.append((p, f"p_{k}", lib))

    rng = np.random.default_rng(1008)
    worst_ratio, pairings = 0.0, 0
    for f_prof in FIXTURE_PROFILES:
        if rigged.classify(f_prof) is DecayClass.OUTSIDE_DUAL:
            continue
        for v_prof in PAIRING_PARTNERS:
            for n in (16, 64):
                worst_ratio = max(worst_ratio, _pairing_gap_ratio(f_prof, v_prof, n, rng))
                pairings += 1
    ok = not disagreements and worst_ratio < 1.0
    record(
        8,
        "decay classification vs grid oracle; pairing within tail bound",
        ok,
        f"30 profiles, {len(disagreements)} disagreements ({seminorm_checks} seminorm checks); "
        f"{pairings} pairings, max |pair(2N)-pair(N)|/tail_bound = {worst_ratio:.3f} (< 1)",
    )


def test_9_transport_composition():
    rng = np.random.default_rng(1009)
    profiles = [DecayProfile.geometric(0.5), DecayProfile.power(-1.0), DecayProfile.power(1.0)]
    worst, class_ok = 0.0, True
    for t in range(50):
        n = 2 + t % 15
        v = _phased(profiles[t % 3], n, rng)
        u1, u2 = rand_unitary(rng, n), rand_unitary(rng, n)
        stepwise = rigged.transport(u2, rigged.transport(u1, v))
        direct = rigged.transport(u2 @ u1, v)
        worst = max(worst, float(np.max(np.abs(stepwise.coefficients - direct.coefficients))))
        class_ok &= stepwise.decay_class is direct.decay_class is v.decay_class
    ok = worst <= 1e-12 and class_ok
    record(9, "transport composes through products of unitaries", ok, f"50 unitaries, max |diff| = {worst:.2e} (tol 1e-12), classes equal: {class_ok}")


def test_10_qubit_golden():
    # hand arithmetic: p = (1, 1/2)/1.5 = (2/3, 1/3), <sigma_z> = 2/3 - 1/3
    state = tfd.gibbs(np.diag([0.0, 1.0]), math.log(2.0))
    sz = np.diag([1.0, -1.0])
    op = tfd.thermal_average_operator(sz, state)
    vac = tfd.thermal_average_tfd(sz, tfd.thermal_vacuum(state))
    err = max(abs(op - 1 / 3), abs(vac - 1 / 3))
    record(10, "qubit golden value 1/3 by both routes", err <= 1e-12, f"operator {op!r}, doubled {vac!r}, max err {err:.1e} (tol 1e-12)")


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "rigtfd", *args], capture_output=True, check=False)


def test_11_cli_determinism_and_exit_codes():
    verify_args = ("verify", "--seed", "42", "--dims", "2,3,4", "--trials", "100")
    first, second = _cli(*verify_args), _cli(*verify_args)
    identical = first.stdout == second.stdout and len(first.stdout) > 0
    codes = {
        0: _cli("classify", "--input", str(FIXTURES / "geometric_half.json")).returncode,
        1: _cli("verify", "--seed", "42", "--dims", "2", "--trials", "1", "--inject-fault").returncode,
        2: _cli("vacuum", "--input", str(FIXTURES / "malformed.json"), "--beta", "1").returncode,
        3: _cli("gibbs", "--input", str(FIXTURES / "not_hermitian.json"), "--beta", "1").returncode,
    }
    reached = all(expected == got for expected, got in codes.items())
    ok = identical and first.returncode == 0 and reached
    record(
        11,
        "CLI verify byte-identical; exit codes 0/1/2/3 reachable",
        ok,
        f"identical reports: {identical} ({len(first.stdout)} bytes); exit codes {codes}",
    )
