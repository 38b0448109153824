"""Acceptance suite.

One test per criterion; each prints a single pass/fail line and enforces its
runtime budget.  Tolerances are pinned here and must not be loosened.
"""

import math
import time
from itertools import product

import numpy as np
import pytest

from maskswap import (
    BellLabel,
    CatLabel,
    MaxEntLabel,
    PureState,
    ZeroProbabilityOutcome,
    bell_basis,
    cat_basis,
    compare,
    compare_distributions,
    ghz_basis,
    inner_product,
    max_entangled_basis,
    partial_trace,
    predict_bell_bell,
    predict_cat_bell_clear,
    predict_cat_bell_karimipour,
    predict_cat_swap,
    predict_li_masked_swap,
    predict_masked_ghz_swap,
    predict_masked_qudit_swap,
    project,
    simulate_swap,
    verify_masking,
    verify_phase_masking,
)
from maskswap.masking import (
    PhaseAmplitudeInput,
    QuditAmplitudes,
    mask_li_qudit,
    mask_modi_qubit,
    mask_modi_qudit,
)
from maskswap.scenarios import (
    bell_bell_scenario,
    cat_bell_scenario,
    cat_swap_scenario,
    li_masked_scenario,
    masked_ghz_scenario,
    masked_qudit_scenario,
)

TOL = 1e-9


def report(criterion: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f"  ({detail})" if detail else ""
    print(f"[{status}] {criterion}{suffix}", flush=True)


def random_phase_input(d, rng):
    eta = np.abs(rng.standard_normal(d))
    eta /= np.linalg.norm(eta)
    return PhaseAmplitudeInput(d, tuple(eta), tuple(rng.uniform(-np.pi, np.pi, d)))


def random_alpha(d, rng):
    alpha = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    alpha /= np.linalg.norm(alpha)
    return QuditAmplitudes(d, tuple(alpha))


def test_criterion_1_bell_bell_table():
    start = time.perf_counter()
    failures = []
    for lam1, a1, lam2, a2 in product((0, 1), repeat=4):
        l1, l2 = BellLabel(lam1, a1), BellLabel(lam2, a2)
        predicted = predict_bell_bell(l1, l2)
        if len(predicted.outcomes) != 4:
            failures.append((l1, l2, "outcome count"))
            continue
        if any(abs(o.probability - 0.25) > TOL for o in predicted.outcomes):
            failures.append((l1, l2, "probabilities"))
        cmp = compare(predicted, simulate_swap(bell_bell_scenario(l1, l2)), tol=TOL)
        if not cmp.verdict or cmp.min_fidelity < 1 - TOL:
            failures.append((l1, l2, "oracle mismatch"))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 1.0
    report(
        "criterion 1: Bell-Bell table, all 16 label pairs vs oracle",
        ok,
        f"{elapsed:.2f}s",
    )
    assert not failures, failures
    assert elapsed < 1.0, f"runtime {elapsed:.2f}s exceeds 1s budget"


def test_criterion_2_cat_swap_exhaustive_and_random():
    start = time.perf_counter()
    failures = []
    checked = 0

    # exhaustive n=2 grid over m_r in {2,3,4}, all bit patterns, signs, k
    for m1, m2 in product((2, 3, 4), repeat=2):
        for bits1 in product((0, 1), repeat=m1):
            for bits2 in product((0, 1), repeat=m2):
                for lam1, lam2 in product((0, 1), repeat=2):
                    labels = [CatLabel(bits1, lam1), CatLabel(bits2, lam2)]
                    for k1, k2 in product(range(1, m1 + 1), range(1, m2 + 1)):
                        if k1 + k2 >= m1 + m2:
                            continue
                        cmp = compare(
                            predict_cat_swap(labels, [k1, k2]),
                            simulate_swap(cat_swap_scenario(labels, [k1, k2])),
                            tol=TOL,
                        )
                        checked += 1
                        if not cmp.verdict:
                            failures.append((labels, (k1, k2)))

    # 100 seeded random n=3 scenarios
    rng = np.random.default_rng(2)
    for _ in range(100):
        ms = rng.integers(2, 5, size=3)
        labels = [
            CatLabel(tuple(int(b) for b in rng.integers(0, 2, size=m)), int(rng.integers(0, 2)))
            for m in ms
        ]
        k = [int(rng.integers(1, m + 1)) for m in ms]
        if sum(k) >= sum(ms):
            k[0] = max(1, k[0] - 1)
        cmp = compare(
            predict_cat_swap(labels, k),
            simulate_swap(cat_swap_scenario(labels, k)),
            tol=TOL,
        )
        checked += 1
        if not cmp.verdict:
            failures.append((labels, tuple(k)))

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 30.0
    report(
        "criterion 2: cat swap, exhaustive n=2 grid + 100 random n=3",
        ok,
        f"{checked} scenarios, {elapsed:.1f}s",
    )
    assert not failures, failures[:5]
    assert elapsed < 30.0, f"runtime {elapsed:.1f}s exceeds 30s budget"


def test_criterion_3_double_sum_form_equivalence():
    start = time.perf_counter()
    failures = []
    rng = np.random.default_rng(3)
    cases = [(d, m) for d in (2, 3, 5) for m in (2, 3, 4)]
    for i in range(100):
        d, m = cases[i % len(cases)]
        u1 = tuple(int(x) for x in rng.integers(0, d, m))
        u2 = tuple(int(x) for x in rng.integers(0, d, 2))
        k = int(rng.integers(2, m + 1))
        cat_label, pair_label = MaxEntLabel(d, u1), MaxEntLabel(d, u2)
        a = predict_cat_bell_karimipour(cat_label, pair_label, k)
        b = predict_cat_bell_clear(cat_label, pair_label, k)
        oracle = simulate_swap(cat_bell_scenario(cat_label, pair_label, k))
        if not (
            compare(a, oracle, tol=TOL).verdict
            and compare(b, oracle, tol=TOL).verdict
            and compare_distributions(a, b, tol=TOL).verdict
        ):
            failures.append((d, m, k, u1, u2))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 60.0
    report(
        "criterion 3: both double-sum forms vs each other and the oracle",
        ok,
        f"100 label sets, {elapsed:.1f}s",
    )
    assert not failures, failures[:5]
    assert elapsed < 60.0, f"runtime {elapsed:.1f}s exceeds 60s budget"


def test_criterion_4_masking():
    start = time.perf_counter()
    rng = np.random.default_rng(4)
    problems = []

    # bit masker over both inputs
    rep = verify_masking([mask_modi_qubit(0), mask_modi_qubit(1)], [(1,), (2,)], tol=TOL)
    if not rep.verdict:
        problems.append("bit masker")

    # phase-hiding masker: 100 random (eta, theta) per level, marginal diag(eta^2)
    for d in range(2, 8):
        inputs = [random_phase_input(d, rng) for _ in range(100)]
        rep = verify_phase_masking(inputs, tol=TOL)
        if not rep.verdict:
            problems.append(f"phase masker d={d}")
        for inp in inputs[:5]:
            marg = partial_trace(mask_modi_qudit(inp), (1,)).matrix
            if np.max(np.abs(marg - np.diag(np.array(inp.eta) ** 2))) > TOL:
                problems.append(f"phase masker marginal d={d}")
                break
        uniform = PhaseAmplitudeInput(
            d, (1 / math.sqrt(d),) * d, tuple(rng.uniform(-np.pi, np.pi, d))
        )
        marg = partial_trace(mask_modi_qudit(uniform), (2,)).matrix
        if np.max(np.abs(marg - np.eye(d) / d)) > TOL:
            problems.append(f"uniform marginal d={d}")

    # full masker: 100 random inputs at d=2, 20 at d=3
    for d, count in ((2, 100), (3, 20)):
        family = [mask_li_qudit(random_alpha(d, rng)) for _ in range(count)]
        subsystems = [(p,) for p in range(1, 2 * d + 1)]
        rep = verify_masking(family, subsystems, tol=TOL)
        if not rep.verdict:
            problems.append(f"full masker d={d}")

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30.0
    report(
        "criterion 4: masker marginals carry no input information",
        ok,
        f"{elapsed:.1f}s",
    )
    assert not problems, problems
    assert elapsed < 30.0, f"runtime {elapsed:.1f}s exceeds 30s budget"


def test_criterion_5_ghz_parity_law():
    start = time.perf_counter()
    failures = []
    for n in (2, 3, 4):
        for lams in product((0, 1), repeat=n):
            dist = predict_masked_ghz_swap(lams)
            cmp = compare(dist, simulate_swap(masked_ghz_scenario(lams)), tol=TOL)
            if not cmp.verdict:
                failures.append((lams, "oracle"))
            even = sum(lams) % 2 == 0
            if any(
                (o.label.sign == o.remainder_label.sign) != even
                for o in dist.outcomes
            ):
                failures.append((lams, "parity"))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 10.0
    report(
        "criterion 5: masked-bit swap parity law, n in {2,3,4}",
        ok,
        f"{elapsed:.1f}s",
    )
    assert not failures, failures
    assert elapsed < 10.0, f"runtime {elapsed:.1f}s exceeds 10s budget"


def test_criterion_6_masked_d_level_swaps():
    start = time.perf_counter()
    failures = []
    rng = np.random.default_rng(6)

    for d, n in ((2, 2), (3, 2), (5, 2), (2, 3)):
        for _ in range(50):
            inputs = [random_phase_input(d, rng) for _ in range(n)]
            cmp = compare(
                predict_masked_qudit_swap(inputs),
                simulate_swap(masked_qudit_scenario(inputs)),
                tol=TOL,
            )
            if not cmp.verdict:
                failures.append(("masked_qudit", d, n))

    for d, n in ((2, 2), (2, 3), (3, 2)):
        for _ in range(20):
            inputs = [random_alpha(d, rng) for _ in range(n)]
            cmp = compare(
                predict_li_masked_swap(inputs),
                simulate_swap(li_masked_scenario(inputs)),
                tol=TOL,
            )
            if not cmp.verdict:
                failures.append(("li_masked", d, n))

    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120.0
    report(
        "criterion 6: masked d-level swaps vs oracle",
        ok,
        f"260 scenarios, {elapsed:.1f}s",
    )
    assert not failures, failures[:5]
    assert elapsed < 120.0, f"runtime {elapsed:.1f}s exceeds 120s budget"


def test_criterion_7_structural_suites():
    start = time.perf_counter()
    problems = []

    bases = [bell_basis()]
    bases += [cat_basis(m) for m in (2, 3, 4)]
    bases += [ghz_basis(n) for n in (2, 3, 4)]
    bases += [
        max_entangled_basis(d, m)
        for d, m in ((2, 2), (2, 3), (3, 2), (3, 3), (5, 2), (5, 4))
    ]
    for basis in bases:
        if basis.gram_deviation() >= 1e-9:
            problems.append(f"gram deviation {basis}")
        resolution = basis.matrix.conj().T @ basis.matrix
        if np.max(np.abs(resolution - np.eye(len(basis)))) >= 1e-9:
            problems.append(f"completeness {basis}")

    # 1000 random projective measurements, probabilities summing to one
    rng = np.random.default_rng(7)
    calls = 0
    while calls < 1000:
        d, m = (2, 2) if calls % 2 == 0 else (3, 2)
        particles = m + 1 + int(rng.integers(0, 2))
        vec = rng.standard_normal(d**particles) + 1j * rng.standard_normal(d**particles)
        state = PureState.from_unnormalized(d, vec)
        measured = tuple(
            sorted(rng.choice(range(1, particles + 1), size=m, replace=False))
        )
        basis = bell_basis() if d == 2 else max_entangled_basis(3, 2)
        total = 0.0
        for _, member in basis:
            try:
                total += project(state, measured, member)[0]
            except ZeroProbabilityOutcome:
                pass  # contributes nothing to the sum
            calls += 1
        if abs(total - 1.0) > 1e-9:
            problems.append(f"probability sum {total}")

    # masker isometry
    for d in (2, 3, 5):
        x, y = random_phase_input(d, rng), random_phase_input(d, rng)
        if abs(
            inner_product(mask_modi_qudit(x), mask_modi_qudit(y))
            - inner_product(x.ket(), y.ket())
        ) > 1e-9:
            problems.append(f"phase masker isometry d={d}")
    for d in (2, 3):
        x, y = random_alpha(d, rng), random_alpha(d, rng)
        if abs(
            inner_product(mask_li_qudit(x), mask_li_qudit(y))
            - inner_product(x.ket(), y.ket())
        ) > 1e-9:
            problems.append(f"full masker isometry d={d}")

    elapsed = time.perf_counter() - start
    ok = not problems and elapsed < 30.0
    report(
        "criterion 7: basis orthonormality, probability conservation, isometry",
        ok,
        f"{calls} projections, {elapsed:.1f}s",
    )
    assert not problems, problems
    assert elapsed < 30.0, f"runtime {elapsed:.1f}s exceeds 30s budget"
