"""Exit criteria; one PASS/FAIL line per criterion is printed to the terminal."""

import itertools
import random
import time

import pytest

from diskstrip import (
    DomainError,
    StripParams,
    SymbolParseError,
    WheelOrder,
    betti,
    boundary_matrix,
    dimension,
    enumerate_cells,
    euler_characteristic,
    parse_symbol,
    tc_report,
    zdcl_certificate,
)
from diskstrip.morse import as_critical, critical_counts
from diskstrip.ring import all_generators, multiply_classes, product_of_pairs

from diskstrip.errors import UnsupportedProductError

SUITE = [(3, 2), (4, 2), (4, 3), (5, 2), (5, 3), (5, 4), (6, 2), (6, 3), (6, 4), (6, 5), (7, 2)]


@pytest.fixture
def report(capsys):
    def emit(number, title, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}{' - ' + detail if detail else ''}")
        assert ok, detail
    return emit


def test_criterion_1_tc_formula(report):
    t0 = time.perf_counter()
    bad = []
    for n, w in SUITE:
        rep = tc_report(StripParams(n, w))
        m = -(-n // w)
        expected = 2 * n - 2 * m + 1
        if not (rep.certified and rep.lower == rep.upper == rep.value == expected):
            bad.append((n, w, rep.lower, rep.upper, rep.value))
    elapsed = time.perf_counter() - t0
    report(1, "TC = 2n - 2ceil(n/w) + 1, certified lower = upper", not bad and elapsed <= 600,
           f"{len(SUITE)} instances in {elapsed:.1f}s" + (f"; mismatches {bad}" if bad else ""))


def test_criterion_2_dimension(report):
    bad = []
    for n, w in SUITE:
        p = StripParams(n, w)
        top = max(s.dimension for s in enumerate_cells(p))
        if not (dimension(p) == n - p.m == top):
            bad.append((n, w))
    report(2, "dimension = n - ceil(n/w) = max cell dimension", not bad, f"mismatches {bad}" if bad else "")


def test_criterion_3_critical_cells_vs_betti(report):
    instances = SUITE + [(2, 2)]
    validated = {o: all(critical_counts(StripParams(n, w), o) == list(betti(StripParams(n, w)))
                        for n, w in instances) for o in WheelOrder}
    spots = betti(StripParams(3, 2)) == (1, 7) and betti(StripParams(2, 2)) == (1, 1)
    ok = validated[WheelOrder.SIZE_THEN_AXLE] and not validated[WheelOrder.AXLE_ONLY] and spots
    report(3, "#critical j-cells = b_j under exactly one wheel order (size-axle)", ok,
           ", ".join(f"{o.value}={'ok' if v else 'mismatch'}" for o, v in validated.items()))


def test_criterion_4_chain_complex(report):
    bad = []
    for n, w in SUITE:
        p = StripParams(n, w)
        top = dimension(p)
        squared = all((boundary_matrix(p, d) @ boundary_matrix(p, d + 1)).is_zero() for d in range(1, top))
        euler = sum((-1) ** d * b for d, b in enumerate(betti(p))) == euler_characteristic(p)
        if not (squared and euler):
            bad.append((n, w, squared, euler))
    report(4, "boundary squared = 0 and Euler characteristic consistent", not bad, f"failures {bad}" if bad else "")


WITNESSES = {
    (3, 2): {("3 1|2", "2 1|3"), ("2 1|3", "3 1|2")},
    (5, 2): {("5 2|4 1|3", "5 1|3 2|4"), ("5 1|3 2|4", "5 2|4 1|3")},
    (4, 3): {
        ("4 2 1|3", "3 2 1|4"), ("4 2 1|3", "3 1 2|4"), ("4 1 2|3", "3 2 1|4"), ("4 1 2|3", "3 1 2|4"),
        ("3 2 1|4", "4 2 1|3"), ("3 2 1|4", "4 1 2|3"), ("3 1 2|4", "4 2 1|3"), ("3 1 2|4", "4 1 2|3"),
        ("4 2|3 1", "4 1|3 2"), ("4 1|3 2", "4 2|3 1"),
    },
}


def test_criterion_5_zdcl_certificate(report):
    bad = []
    for n, w in SUITE:
        p = StripParams(n, w)
        cert = zdcl_certificate(p)  # raises if a longer product survives
        top = n - p.m
        if cert.length != 2 * top or cert.witness.is_zero() or cert.witness.bidegrees() != {(top, top)}:
            bad.append((n, w))
        if (n, w) in WITNESSES and {tuple(t) for t in cert.witness.text_pairs()} != WITNESSES[(n, w)]:
            bad.append(("witness", n, w))
    report(5, "zero-divisor product of length 2(n - m) nonzero in bidegree (n-m, n-m)", not bad,
           f"failures {bad}" if bad else "witnesses at (3,2), (5,2), (4,3) match term for term")


def _try(pairs, p):
    try:
        return product_of_pairs(pairs, p)
    except UnsupportedProductError:
        return None


def _check_product(factors, p, problems):
    x = _try(factors, p)
    if x is None:
        return
    for perm in itertools.permutations(factors):
        if _try(list(perm), p) != x:
            problems.append(("commutativity", factors))
            break
    for cut in range(1, len(factors)):
        head, tail = _try(factors[:cut], p), _try(factors[cut:], p)
        if head is not None and tail is not None and multiply_classes(head, tail, p) != x:
            problems.append(("associativity", factors))
    if any(s.dimension != len(factors) for s in x.terms):
        problems.append(("degree", factors))
    for s in x.terms:
        c = as_critical(s, p.w)
        if c is None or not c.follower_free:
            problems.append(("follower-free", factors))
    firsts = [i for i, _ in factors]
    seconds = [j for _, j in factors]
    if x and any(firsts.count(i) >= p.w for i in firsts):
        problems.append(("w-column", factors))
    if x and len(set(seconds)) < len(seconds):
        problems.append(("repeated second", factors))


def test_criterion_6_ring_properties(report):
    problems = []
    count = 0
    for n in range(3, 6):
        for w in range(2, n + 1):
            p = StripParams(n, w)
            pairs = [g.pair for g in all_generators(p)]
            for k in (2, 3):
                for factors in itertools.product(pairs, repeat=k):
                    _check_product(list(factors), p, problems)
                    count += 1
            for seconds in itertools.combinations(range(1, n), w):
                count += 1
                if not product_of_pairs([(n, j) for j in seconds], p).is_zero():
                    problems.append(("w-column", n, w, seconds))
    rng = random.Random(7)
    for n, w in [(6, 2), (6, 3), (6, 4), (6, 5), (7, 2), (7, 3)]:
        p = StripParams(n, w)
        pairs = [g.pair for g in all_generators(p)]
        for _ in range(200):
            _check_product(rng.sample(pairs, rng.randint(2, 4)), p, problems)
            count += 1
    report(6, "ring engine: commutative, associative, graded, follower-free, vanishing rules", not problems,
           f"{count} products checked" + (f"; problems {problems[:5]}" if problems else ""))


def test_criterion_7_negative_controls(report):
    rejected = []
    for n, w in [(3, 1), (1, 1)]:
        try:
            StripParams(n, w)
        except DomainError:
            rejected.append((n, w))
    malformed = 0
    for text in ["1 2|2", "1|3", "1||2", "1 x|2", "0|1"]:
        try:
            parse_symbol(text)
        except SymbolParseError:
            malformed += 1
    # follower size condition w + 1 replaced by w
    mutated_breaks = any(
        critical_counts(StripParams(n, w), WheelOrder.SIZE_THEN_AXLE, follower_min=w) != list(betti(StripParams(n, w)))
        for n, w in SUITE
    )
    ok = len(rejected) == 2 and malformed == 5 and mutated_breaks
    report(7, "w = 1 and malformed symbols rejected; mutated follower condition breaks criterion 3", ok,
           f"rejected widths {rejected}, malformed rejected {malformed}/5, mutation detected {mutated_breaks}")
