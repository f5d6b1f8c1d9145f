"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Field-dependent suites run once per characteristic (2, 3, 5) through a
session fixture; the individual criteria assert the base run and the final
criterion compares the three runs for identical outputs.
"""

import pytest

from tableau_orders.checks import (
    RunConfig,
    check_box_eq_dom,
    check_dmn_tableau,
    check_ext_witness,
    check_f_map,
    check_hom_formula,
    check_phi_orders,
    check_pole_tableau,
    check_ses_exactness,
)
from tableau_orders.embeddings import (
    direct_sum,
    empty_embedding,
    is_exact,
    pole,
    pole_pair,
    ses_top_boundary,
    ses_top_gap,
)
from tableau_orders.orders import apply_swap, apply_wind, box_leq_syt, dom_leq_syt, lr_to_syt
from tableau_orders.tableaux import StandardTableau, lr_from_cells, syt_to_chain

PRIMES = (2, 3, 5)
CONFIG = RunConfig(field_primes=PRIMES, max_weight_r=6, max_beta_weight=10, max_height=8)

FIELD_CHECKS = {
    "pole-tableau": check_pole_tableau,
    "dmn-tableau": check_dmn_tableau,
    "ses-exactness": check_ses_exactness,
    "ext-witness": check_ext_witness,
    "hom-formula": check_hom_formula,
}


@pytest.fixture(scope="session")
def field_reports():
    return {
        name: {p: fn(CONFIG, p) for p in PRIMES} for name, fn in FIELD_CHECKS.items()
    }


def _announce(number: int, label: str, report=None, ok=None):
    if report is not None:
        ok = report.passed
        detail = f" ({report.instances} instances, {report.seconds:.1f}s)"
    else:
        detail = ""
    status = "PASS" if ok else "FAIL"
    print(f"ACCEPTANCE {number} [{label}]: {status}{detail}")
    return ok


def test_criterion_01_box_equals_dom_up_to_weight_seven():
    report = check_box_eq_dom(RunConfig(max_weight_r=7))
    assert _announce(1, "box order equals dominance order, r <= 7", report), (
        report.counterexample
    )


def test_criterion_02_square_embedding_preserves_dominance():
    report = check_f_map(CONFIG)
    assert _announce(2, "square embedding preserves and reflects orders", report), (
        report.counterexample
    )


def test_criterion_03_reading_word_bijection_preserves_orders():
    report = check_phi_orders(CONFIG)
    assert _announce(3, "reading-word bijection preserves both orders", report), (
        report.counterexample
    )


def test_criterion_04_pole_tableaux_and_heights(field_reports):
    report = field_reports["pole-tableau"][2]
    assert _announce(4, "pole tableaux and height round trip", report), (
        report.counterexample
    )


def test_criterion_05_paired_poles_share_tableaux(field_reports):
    report = field_reports["dmn-tableau"][2]
    assert _announce(5, "paired poles share the pole-sum tableau", report), (
        report.counterexample
    )


def test_criterion_06_exact_sequences(field_reports):
    report = field_reports["ses-exactness"][2]
    ok = report.passed
    # the two worked sequences, reproduced verbatim
    p = 2
    seq1 = ses_top_gap((1, 2, 4), (), p)
    ok = ok and seq1.left == pole((4,), p)
    ok = ok and seq1.middle == pole_pair((1, 2, 4), (), p) == pole((1, 2, 4), p)
    ok = ok and seq1.right == pole((1, 2), p)
    ok = ok and is_exact(seq1)[0]
    seq2 = ses_top_boundary((1, 2, 4, 6), (3, 5), p)
    ok = ok and seq2.left == direct_sum(pole((3, 5, 6), p), empty_embedding((6,), p))
    ok = ok and seq2.middle == pole_pair((1, 2, 4, 6), (3, 5), p)
    ok = ok and seq2.right == pole((1, 2, 4), p)
    ok = ok and is_exact(seq2)[0]
    assert _announce(6, "split exact sequences for all valid parameters", report=None, ok=ok), (
        report.counterexample
    )


def test_criterion_07_increase_move_witnesses(field_reports):
    report = field_reports["ext-witness"][2]
    assert _announce(7, "exact-sequence witness for every increase move", report), (
        report.counterexample
    )


def test_criterion_08_hom_formula(field_reports):
    report = field_reports["hom-formula"][2]
    assert _announce(8, "prefix sums equal quotient and picket Hom dimensions", report), (
        report.counterexample
    )


def test_criterion_09_hom_comparison_along_witnesses(field_reports):
    # the ext-witness suite also compares Hom dimensions against every picket
    # and checks dominance of the middle tableau under the end-sum tableau
    report = field_reports["ext-witness"][2]
    assert _announce(9, "witnesses satisfy Hom comparison and dominance", report), (
        report.counterexample
    )


def test_criterion_10_field_independence(field_reports):
    ok = True
    for name, by_prime in field_reports.items():
        digests = {(by_prime[p].passed, by_prime[p].digest) for p in PRIMES}
        if len(digests) != 1:
            ok = False
    assert _announce(10, "identical outputs at characteristics 2, 3, 5", report=None, ok=ok)


def test_criterion_11_paper_fixtures_byte_exact():
    ok = True
    # saturated chain of the seven-cell tableau
    sigma7 = StandardTableau(((1, 2, 4), (3, 6, 7), (5,)))
    ok = ok and syt_to_chain(sigma7) == (
        (1,),
        (1, 1),
        (2, 1),
        (2, 1, 1),
        (3, 1, 1),
        (3, 2, 1),
        (3, 2, 2),
    )
    # the five-cell pair: dominance plus the three-move path
    pi = StandardTableau(((1, 3), (2, 5), (4,)))
    sigma = StandardTableau(((1, 2, 3), (4, 5)))
    ok = ok and dom_leq_syt(pi, sigma) and box_leq_syt(pi, sigma)
    cursor = apply_swap(sigma, 3, 4)
    cursor = apply_wind(cursor, 1, 3)
    cursor = apply_swap(cursor, 2, 3)
    ok = ok and cursor == pi
    # the rook-strip pair on the staircase and their chains
    gamma, beta = (4, 3, 2, 1), (5, 4, 3, 2, 1)
    delta = lr_from_cells(
        beta, gamma, {(1, 5): 1, (2, 4): 2, (3, 3): 1, (4, 2): 3, (5, 1): 2}
    )
    gam = lr_from_cells(
        beta, gamma, {(1, 5): 1, (2, 4): 1, (3, 3): 1, (4, 2): 2, (5, 1): 2}
    )
    ok = ok and delta.chain == (gamma, (4, 3, 3, 1, 1), (5, 3, 3, 2, 1), beta)
    ok = ok and gam.chain == (gamma, (4, 3, 3, 2, 1), beta)
    # reading-word images on the six-row staircase
    beta6, gamma6 = (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1)
    delta6 = lr_from_cells(
        beta6, gamma6, {(1, 6): 1, (2, 5): 1, (3, 4): 2, (4, 3): 2, (5, 2): 3, (6, 1): 1}
    )
    gam6 = lr_from_cells(
        beta6, gamma6, {(1, 6): 1, (2, 5): 1, (3, 4): 1, (4, 3): 2, (5, 2): 3, (6, 1): 2}
    )
    ok = ok and lr_to_syt(delta6) == StandardTableau(((1, 2, 6), (3, 4), (5,)))
    ok = ok and lr_to_syt(gam6) == StandardTableau(((1, 2, 3), (4, 6), (5,)))
    # nine-cell image
    beta9, gamma9 = (9, 8, 7, 6, 5, 4, 3, 2, 1), (8, 7, 6, 5, 4, 3, 2, 1)
    g9 = lr_from_cells(
        beta9,
        gamma9,
        {
            (1, 9): 1,
            (2, 8): 2,
            (3, 7): 1,
            (4, 6): 1,
            (5, 5): 2,
            (6, 4): 3,
            (7, 3): 1,
            (8, 2): 1,
            (9, 1): 1,
        },
    )
    ok = ok and lr_to_syt(g9) == StandardTableau(((1, 3, 4, 7, 8, 9), (2, 5), (6,)))
    # the presented cyclic embedding
    x = pole((1, 3, 4), 2)
    ok = ok and x.ambient.parts == (5, 2)
    ok = ok and x.generators[0].text() == "t^2*b_1 + t*b_2"
    assert _announce(11, "worked fixtures reproduced exactly", report=None, ok=ok)
