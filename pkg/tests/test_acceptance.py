"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Timed criteria measure warm-path wall time (the JIT warmup fixture in
conftest keeps compilation out of the clock).
"""

import itertools
import time

import numpy as np

import su2_oracle
from suncg import (
    algebra,
    clebsch,
    littlewood,
    patterns,
    verify,
    weights,
)
from suncg.patterns import GTPattern, YoungTableau
from test_littlewood import TABLE_II

SU4_INDEX_TABLE = [
    (0, (0, 0, 0, 0)),
    (1, (1, 0, 0, 0)),
    (2, (1, 1, 0, 0)),
    (3, (1, 1, 1, 0)),
    (4, (2, 0, 0, 0)),
    (5, (2, 1, 0, 0)),
    (6, (2, 1, 1, 0)),
    (7, (2, 2, 0, 0)),
    (8, (2, 2, 1, 0)),
    (9, (2, 2, 2, 0)),
]

Q_INDEX_TABLE = [
    (1, [(2, 1, 0), (1, 0), (0,)]),
    (2, [(2, 1, 0), (1, 0), (1,)]),
    (3, [(2, 1, 0), (1, 1), (1,)]),
    (4, [(2, 1, 0), (2, 0), (0,)]),
    (5, [(2, 1, 0), (2, 0), (1,)]),
    (6, [(2, 1, 0), (2, 0), (2,)]),
    (7, [(2, 1, 0), (2, 1), (1,)]),
    (8, [(2, 1, 0), (2, 1), (2,)]),
]


def report(number, name, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"acceptance {number:02d} {name}: {status}{suffix}")
    assert ok, f"criterion {number} ({name}) failed{suffix}"


def best_time(func, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - start)
    return best


def normalized_irreps(n, max_first):
    out = []
    for first in range(max_first + 1):
        for body in itertools.product(*(range(first + 1) for _ in range(n - 2))):
            candidate = (first,) + body + (0,)
            if all(a >= b for a, b in zip(candidate, candidate[1:])):
                out.append(candidate)
    return sorted(set(out))


def test_criterion_1_decomposition_reproduction():
    dec = littlewood.decompose((2, 1, 0), (2, 1, 0))
    expected = {(4, 2, 0): 1, (3, 3, 0): 1, (3, 0, 0): 1, (2, 1, 0): 2, (0, 0, 0): 1}
    exact = dict(dec.terms) == expected
    total, parts = dec.dimension_identity()
    identity = total == 64 and sorted(parts, reverse=True) == [27, 10, 10, 8, 8, 1]
    elapsed = best_time(lambda: littlewood.decompose((2, 1, 0), (2, 1, 0)))
    report(
        1,
        "decomposition-reproduction",
        exact and identity and elapsed < 1e-3,
        f"elapsed={elapsed * 1e6:.0f}us",
    )


def test_criterion_2_trace_table_reproduction():
    enumerated = patterns.enumerate_patterns((2, 1, 0))

    def all_traces():
        return [littlewood.pattern_trace(p, (2, 1, 0)) for p in enumerated]

    ok = True
    discarded = 0
    for pattern, (steps, survived) in zip(enumerated, all_traces()):
        expected_steps, expected_survived = TABLE_II[(pattern.row(2), pattern.row(1))]
        ok = ok and steps == expected_steps and survived == expected_survived
        discarded += not survived
    elapsed = best_time(all_traces)
    report(
        2,
        "per-pattern-trace-table",
        ok and discarded == 2 and elapsed < 1e-3,
        f"elapsed={elapsed * 1e6:.0f}us",
    )


def test_criterion_3_index_tables_and_round_trips():
    start = time.perf_counter()
    ok = all(weights.index(w) == p and weights.from_index(4, p) == w for p, w in SU4_INDEX_TABLE)
    for q, rows in Q_INDEX_TABLE:
        pattern = GTPattern(rows)
        ok = ok and patterns.index(pattern) == q
        ok = ok and patterns.from_index((2, 1, 0), q) == pattern
    for n in (3, 4, 5):
        for position in range(1000):
            ok = ok and weights.index(weights.from_index(n, position)) == position
    elapsed = time.perf_counter() - start
    report(3, "index-tables-and-bijection", ok and elapsed < 1.0, f"elapsed={elapsed:.2f}s")


def test_criterion_4_dimension_formula_vs_enumeration():
    start = time.perf_counter()
    ok = True
    for weight in normalized_irreps(3, 4) + normalized_irreps(4, 3):
        enumerated = patterns.enumerate_patterns(weight)
        ok = ok and len(enumerated) == weights.dimension(weight)
        ok = ok and all(patterns.validate(p) for p in enumerated)
    elapsed = time.perf_counter() - start
    report(4, "dimension-vs-enumeration", ok and elapsed < 5.0, f"elapsed={elapsed:.2f}s")


def test_criterion_5_su2_oracle():
    worst_value = 0.0
    worst_orth = 0.0
    for tj1 in range(0, 5):
        for tj2 in range(0, 5):
            dec, tensors = clebsch.compute_all_tensors((tj1, 0), (tj2, 0))
            orth = verify.check_orthonormality(dec, tensors, tol=1e-12)
            worst_orth = max(worst_orth, orth.deviation)
            for tensor in tensors:
                tj = tensor.target[0]  # normalized su(2) label is (2j, 0)
                for tm in range(-tj, tj + 1, 2):
                    qpp = su2_oracle.su2_state_index(tj, tm)
                    for tm1 in range(-tj1, tj1 + 1, 2):
                        tm2 = tm - tm1
                        if abs(tm2) > tj2:
                            continue
                        q = su2_oracle.su2_state_index(tj1, tm1)
                        qp = su2_oracle.su2_state_index(tj2, tm2)
                        got = abs(tensor.coefficient(1, qpp, q, qp))
                        want = abs(su2_oracle.cg(tj1, tm1, tj2, tm2, tj, tm))
                        worst_value = max(worst_value, abs(got - want))
    report(
        5,
        "su2-racah-oracle",
        worst_value < 1e-10 and worst_orth < 1e-12,
        f"max|dCGC|={worst_value:.1e} max_orth_dev={worst_orth:.1e}",
    )


def test_criterion_6_algebra_invariants():
    irreps = (
        normalized_irreps(3, 4)
        + normalized_irreps(4, 3)
        + [(tj, 0) for tj in range(0, 9)]
    )
    worst = 0.0
    transpose_exact = True
    for weight in irreps:
        n = len(weight)
        for l in range(1, n):
            jm = algebra.operator_matrix(weight, l, "lowering").to_dense()
            jp = algebra.operator_matrix(weight, l, "raising").to_dense()
            jz = algebra.operator_matrix(weight, l, "diagonal").to_dense()
            worst = max(worst, np.max(np.abs(jp @ jm - jm @ jp - 2 * jz)))
            worst = max(worst, np.max(np.abs(jz @ jp - jp @ jz - jp)))
            worst = max(worst, np.max(np.abs(jz @ jm - jm @ jz + jm)))
            transpose_exact = transpose_exact and np.array_equal(jp, jm.T)
    report(
        6,
        "algebra-invariants",
        worst < 1e-10 and transpose_exact,
        f"max_commutator_dev={worst:.1e} transpose_exact={transpose_exact}",
    )


def test_criterion_7_consistency_suite():
    start = time.perf_counter()
    ok = True
    details = []
    for left, right in (((2, 1, 0), (2, 1, 0)), ((1, 0, 0, 0), (2, 1, 0, 0))):
        dec, tensors = clebsch.compute_all_tensors(left, right)
        orth = verify.check_orthonormality(dec, tensors, tol=1e-8)
        selection = all(verify.check_selection_rule(t).passed for t in tensors)
        block = verify.check_block_diagonalization(left, right, dec, tensors, tol=1e-8)
        ok = ok and orth.passed and selection and block.passed
        details.append(f"{weights.to_text(left)}x{weights.to_text(right)}:{orth.deviation:.1e}")
    elapsed = time.perf_counter() - start
    report(
        7,
        "full-consistency-suite",
        ok and elapsed < 30.0,
        f"elapsed={elapsed:.2f}s " + " ".join(details),
    )


def test_criterion_8_outer_multiplicity_determinism():
    runs = [clebsch.compute_tensor((2, 1, 0), (2, 1, 0), (2, 1, 0)) for _ in range(2)]
    hw = [clebsch.highest_weight_cgc((2, 1, 0), (2, 1, 0), (2, 1, 0)) for _ in range(2)]
    blocks = runs[0].values.reshape(16, 64)
    orthonormal = bool(np.allclose(blocks @ blocks.T, np.eye(16), atol=1e-10))
    bit_identical = np.array_equal(runs[0].values, runs[1].values) and np.array_equal(
        hw[0], hw[1]
    )
    report(
        8,
        "outer-multiplicity-handling",
        runs[0].alpha_count == 2 and orthonormal and bit_identical,
        f"alpha_count={runs[0].alpha_count} bit_identical={bit_identical}",
    )


def test_criterion_9_tableau_round_trip():
    ok = True
    for pattern in patterns.enumerate_patterns((2, 1, 0)):
        ok = ok and patterns.from_tableau(patterns.to_tableau(pattern), 3) == pattern
    big = GTPattern([(4, 3, 1, 0), (3, 2, 1), (3, 2), (2,)])
    tableau = patterns.to_tableau(big)
    ok = ok and tableau == YoungTableau([[1, 1, 2, 4], [2, 2, 4], [3]])
    ok = ok and patterns.from_tableau(tableau, 4) == big
    report(9, "young-tableau-round-trip", ok)


def test_criterion_10_performance_sanity():
    left, right = (2, 0, 0), (4, 0, 0)
    assert weights.dimension(left) == 6 and weights.dimension(right) == 15
    clebsch.compute_all_tensors(left, right)  # warm
    elapsed = best_time(lambda: clebsch.compute_all_tensors(left, right), repeats=3)
    report(10, "performance-sanity", elapsed < 1.0, f"elapsed={elapsed:.3f}s")
