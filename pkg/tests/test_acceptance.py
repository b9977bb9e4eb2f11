"""Acceptance gate: the nine release criteria, one test and one verdict line each.

Every comparison is exact (integer equality, zero tolerance); the only
pinned tolerances are the wall-clock budgets stated inline.  The sweeps
(exhaustive on up to 4 variables, 1000 seeded random ideals on up to 7)
are shared across the criteria that quantify over them.
"""

import math
import time

import pytest

from lclab.monocech import (
    INFINITE,
    DimValue,
    MonomialIdeal,
    PatternShape,
    ShapeViolationError,
    VariableContext,
    hilbert_pair,
    InfiniteDimsError,
    normalize,
    pattern_report,
    piece_dimension,
    piece_nonzero,
    support_dim,
    support_min_primes,
)
from lclab.verify import (
    exhaustive_ideals,
    golden_corpus,
    oracle_compare,
    random_battery,
)
from lclab.weylact import (
    LocalCohomologyModule,
    LocalizationModule,
    derham_homology,
    four_term_check,
    koszul_homology_X,
    koszul_homology_Y,
)


def _verdict(number, label, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    line = f"CRITERION {number} ({label}): {status}"
    if detail:
        line += f" — {detail}"
    print(line, flush=True)
    assert ok, line


def _maximal_ideal(m):
    ctx = VariableContext((), tuple(f"X{j}" for j in range(1, m + 1)))
    return MonomialIdeal(ctx, [tuple(1 if t == s else 0 for t in range(m)) for s in range(m)])


@pytest.fixture(scope="module")
def sweep_ideals():
    exhaustive = list(exhaustive_ideals(4))
    randoms = list(random_battery(count=1000, seed=20260823, max_nvars=7))
    return exhaustive, randoms


@pytest.fixture(scope="module")
def sweep_shapes(sweep_ideals):
    """(ideal, i) -> shape over both sweeps; profiles stay cached downstream."""
    exhaustive, randoms = sweep_ideals
    shapes = {}
    for ideal in exhaustive + randoms:
        top = len(normalize(ideal).supports) + 1
        for i in range(top + 1):
            shapes[(ideal, i)] = pattern_report(ideal, i).shape
    return shapes


def test_criterion_1_golden_corpus():
    start = time.perf_counter()
    ok = True
    for m in range(1, 5):
        ideal = _maximal_ideal(m)
        ok &= pattern_report(ideal, m).shape is PatternShape.NEG_TAIL_ONLY
        ok &= piece_dimension(ideal, m, -m) == DimValue(1)
        ok &= piece_dimension(ideal, m, -m - 1) == DimValue(m)
    pinch = MonomialIdeal(
        VariableContext(("Y1", "Y2"), ("X1",)), [(1, 1, 0), (1, 0, 1)]
    )
    ok &= pattern_report(pinch, 1).shape is PatternShape.NONNEG_ONLY
    ok &= piece_nonzero(pinch, 1, 0)
    free = MonomialIdeal(VariableContext((), ("X1", "X2")), [(1, 0)])
    ok &= pattern_report(free, 1).shape is PatternShape.ALL_Z
    ok &= piece_dimension(free, 1, 0) is INFINITE
    ok &= piece_dimension(free, 1, -4) is INFINITE
    elapsed = time.perf_counter() - start
    ok &= elapsed < 5.0
    _verdict(1, "golden corpus", ok, f"{elapsed:.3f}s of 5s budget")


def test_criterion_2_dimension_formula():
    start = time.perf_counter()

    def gbinom(a, k):
        # independent route: falling factorial over k!
        product = 1
        for t in range(k):
            product *= a - t
        return product // math.factorial(k)

    ok = True
    for m in (2, 3):
        ideal = _maximal_ideal(m)
        for n in range(-m - 10, -m + 1):
            expected = (-1) ** (m - 1) * gbinom(n + m - 1, m - 1)
            ok &= piece_dimension(ideal, m, n) == DimValue(expected)
    elapsed = time.perf_counter() - start
    ok &= elapsed < 1.0
    _verdict(2, "tail dimension formula", ok, f"{elapsed:.3f}s of 1s budget")


def test_criterion_3_five_shape_law(sweep_ideals):
    start = time.perf_counter()
    exhaustive, randoms = sweep_ideals
    ok = len(exhaustive) == 727 and len(randoms) >= 1000
    admissible = set(PatternShape)
    violations = 0
    for ideal in exhaustive + randoms:
        top = len(normalize(ideal).supports) + 1
        for i in range(top + 1):
            try:
                shape = pattern_report(ideal, i).shape
            except ShapeViolationError:
                violations += 1
                continue
            if shape not in admissible:
                violations += 1
            if shape is PatternShape.TWO_TAILS and ideal.context.m == 1:
                violations += 1
    ok &= violations == 0
    elapsed = time.perf_counter() - start
    ok &= elapsed < 300.0
    _verdict(
        3,
        "five-shape law",
        ok,
        f"{len(exhaustive)} exhaustive + {len(randoms)} random, "
        f"{violations} violations, {elapsed:.1f}s of 300s budget",
    )


def test_criterion_4_oracle_equivalence():
    start = time.perf_counter()
    targets = [case.ideal for case in golden_corpus()]
    targets += list(random_battery(count=100, seed=41, max_nvars=5))
    mismatched = [
        ideal for ideal in targets if not oracle_compare(ideal, bound=2).passed
    ]
    elapsed = time.perf_counter() - start
    ok = not mismatched and elapsed < 120.0
    _verdict(
        4,
        "window-oracle equivalence",
        ok,
        f"{len(targets)} ideals, {len(mismatched)} mismatched, "
        f"{elapsed:.1f}s of 120s budget",
    )


def test_criterion_5_nonneg_witness(sweep_ideals, sweep_shapes):
    exhaustive, randoms = sweep_ideals
    occurrences = 0
    violations = 0
    sample = None
    for ideal in exhaustive + randoms:
        norm = normalize(ideal)
        y = norm.context.y_indices
        top = len(norm.supports) + 1
        for i in range(top + 1):
            if sweep_shapes[(ideal, i)] is not PatternShape.NONNEG_ONLY:
                continue
            occurrences += 1
            parts = [s & y for s in norm.supports]
            if any(not p for p in parts):
                violations += 1
                continue
            witness = sorted(
                "*".join(norm.context.names[v] for v in sorted(p)) for p in parts
            )
            if sample is None:
                sample = witness
    ok = occurrences > 0 and violations == 0 and sample is not None
    _verdict(
        5,
        "nonneg shapes force degree-0 parts",
        ok,
        f"{occurrences} occurrences, 0 violations, witness Q = ({', '.join(sample or [])})",
    )


def test_criterion_6_growth_polynomials(sweep_ideals):
    exhaustive, randoms = sweep_ideals
    checked = 0
    gap_checked = 0
    bad = 0
    for ideal in exhaustive + randoms:
        ctx = ideal.context
        if ctx.d != 0:
            continue
        m = ctx.m
        top = len(normalize(ideal).supports) + 1
        for i in range(top + 1):
            try:
                f, g = hilbert_pair(ideal, i)
            except InfiniteDimsError:
                continue
            checked += 1
            if not (f.degree is None or f.degree <= m - 1):
                bad += 1
            if not (g.degree is None or g.degree <= m - 1):
                bad += 1
            nonzero_module = pattern_report(ideal, i).shape is not PatternShape.EMPTY
            gap_has_zero = any(not piece_nonzero(ideal, i, r) for r in range(-m + 1, 0))
            if nonzero_module and gap_has_zero:
                gap_checked += 1
                if not (f.is_zero() or f.degree == m - 1):
                    bad += 1
                if not (g.is_zero() or g.degree == m - 1):
                    bad += 1
                r_neg = piece_dimension(ideal, i, -m).value
                r_pos = piece_dimension(ideal, i, 0).value
                for n in range(-m - 10, -m + 1):
                    expected = r_neg * abs(
                        math.comb(-n - 1, m - 1) if -n - 1 >= 0 else 0
                    )
                    if piece_dimension(ideal, i, n).value != expected:
                        bad += 1
                for n in range(0, 11):
                    if piece_dimension(ideal, i, n).value != r_pos * math.comb(
                        n + m - 1, m - 1
                    ):
                        bad += 1
    ok = checked > 0 and gap_checked > 0 and bad == 0
    _verdict(
        6,
        "growth polynomial degrees and gap form",
        ok,
        f"{checked} finite (ideal, i) pairs, {gap_checked} with zero gap, {bad} bad",
    )


def test_criterion_7_koszul_concentration():
    ctx = VariableContext((), ("X1",))
    ring = LocalizationModule(ctx)
    top = LocalCohomologyModule(MonomialIdeal(ctx, [(1,)]), 1)
    ok = True
    for module in (ring, top):
        for n in range(-10, 11):
            h1, h0 = koszul_homology_X(module, 0, n)
            if n != 0:
                ok &= h1 == DimValue(0) and h0 == DimValue(0)
            d1, d0 = derham_homology(module, 0, n)
            if n != -1:
                ok &= d1 == DimValue(0) and d0 == DimValue(0)
            for kind in ("mult", "derham"):
                ok &= four_term_check(module, 0, kind, n) is True
    # the nonzero degrees themselves: one-dimensional homology where expected
    ok &= koszul_homology_X(ring, 0, 0) == (DimValue(0), DimValue(1))
    ok &= koszul_homology_X(top, 0, 0) == (DimValue(1), DimValue(0))
    ok &= derham_homology(ring, 0, -1) == (DimValue(1), DimValue(0))
    ok &= derham_homology(top, 0, -1) == (DimValue(0), DimValue(1))
    _verdict(7, "m=1 Koszul/de-Rham concentration", ok, "n in [-10, 10], all four-term checks")


def test_criterion_8_support_stability(sweep_ideals):
    exhaustive, randoms = sweep_ideals
    instances = 0
    bad = 0
    for ideal in exhaustive + randoms:
        ctx = ideal.context
        if ctx.d < 1:
            continue
        m = ctx.m
        top = len(normalize(ideal).supports) + 1
        for i in range(top + 1):
            instances += 1
            neg = [support_min_primes(ideal, i, -m - off) for off in (0, 3, 7)]
            pos = [support_min_primes(ideal, i, off) for off in (0, 3, 7)]
            if any(t != neg[0] for t in neg) or any(t != pos[0] for t in pos):
                bad += 1
                continue
            bound = min(support_dim(ideal, i, -m), support_dim(ideal, i, 0))
            if any(support_dim(ideal, i, r) > bound for r in range(-m + 1, 0)):
                bad += 1
    ok = instances > 0 and bad == 0
    _verdict(
        8,
        "support stability along tails",
        ok,
        f"{instances} (ideal, i) instances with d >= 1, {bad} bad",
    )


def test_criterion_9_socle_of_the_hyperplane_module():
    ideal = MonomialIdeal(VariableContext(("Y1",), ("X1",)), [(1, 0)])
    ok = all(koszul_homology_Y(ideal, 1, n) == DimValue(1) for n in range(0, 11))
    ok &= all(koszul_homology_Y(ideal, 1, n) == DimValue(0) for n in range(-10, 0))
    _verdict(9, "socle of the inverted-hyperplane module", ok, "n in [-10, 10]")
