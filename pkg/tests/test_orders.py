import pytest

from oracles import square_completion_oracle
from tableau_orders.orders import (
    MoveRecord,
    apply_lr_move,
    apply_swap,
    apply_wind,
    box_leq_lr,
    box_leq_syt,
    box_leq_syt_same_shape,
    box_moves_lr,
    box_moves_syt,
    dom_leq_lr,
    dom_leq_syt,
    embed_in_square,
    hasse,
    lr_to_syt,
    reachability_table,
    relation_table,
    relations_equal,
    syt_to_lr,
    to_dot,
)
from tableau_orders.partitions import nat_leq_general, transpose
from tableau_orders.tableaux import (
    StandardTableau,
    chain_to_syt,
    enumerate_T_r,
    enumerate_lr_rook,
    lr_content,
    lr_from_cells,
    syt_validate,
)
from test_tableaux import GAMMA5, BETA5, delta5, delta6, gamma5, gamma6, gamma7, gamma7_hat

PI = StandardTableau(((1, 3), (2, 5), (4,)))
SIGMA = StandardTableau(((1, 2, 3), (4, 5)))


def test_dominance_fixture():
    assert dom_leq_syt(PI, SIGMA)
    assert not dom_leq_syt(SIGMA, PI)
    assert dom_leq_syt(PI, PI)
    with pytest.raises(ValueError):
        dom_leq_syt(PI, StandardTableau(((1,),)))


def test_box_moves_fixtures():
    first = StandardTableau(((1, 2, 4), (3, 5)))
    results = [t for t, _ in box_moves_syt(SIGMA)]
    assert first in results
    wound = StandardTableau(((1, 2), (3, 5), (4,)))
    results2 = dict(
        (record.data, t) for t, record in box_moves_syt(first) if record.kind == "wind"
    )
    assert results2[(1, 3)] == wound
    assert box_moves_syt(StandardTableau(((1,),))) == ()


def test_paper_move_path_replays():
    step1 = apply_swap(SIGMA, 3, 4)
    assert step1 == StandardTableau(((1, 2, 4), (3, 5)))
    step2 = apply_wind(step1, 1, 3)
    assert step2 == StandardTableau(((1, 2), (3, 5), (4,)))
    step3 = apply_swap(step2, 2, 3)
    assert step3 == PI
    for t in (step1, step2, step3):
        assert syt_validate(t)[0]


def test_box_leq_and_witness_path():
    assert box_leq_syt(PI, SIGMA)
    assert not box_leq_syt(SIGMA, PI)
    assert box_leq_syt(PI, PI)
    ok, path = box_leq_syt(PI, SIGMA, return_path=True)
    assert ok and len(path) == 3
    cursor = SIGMA
    for move in path:
        if move.kind == "swap":
            cursor = apply_swap(cursor, *move.data)
        else:
            cursor = apply_wind(cursor, *move.data)
        assert syt_validate(cursor)[0]
    assert cursor == PI


def test_moves_strictly_decrease_dominance():
    for r in range(1, 6):
        for t in enumerate_T_r(r):
            for result, _ in box_moves_syt(t):
                assert result != t
                assert dom_leq_syt(result, t)


def test_embed_in_square_small_fixtures():
    one = chain_to_syt([(1,)])
    assert embed_in_square(one) == one
    assert embed_in_square(chain_to_syt([(1,), (2,)])).chain() == (
        (1,),
        (2,),
        (2, 1),
        (2, 2),
    )
    assert embed_in_square(chain_to_syt([(1,), (1, 1)])).chain() == (
        (1,),
        (1, 1),
        (2, 1),
        (2, 2),
    )


def test_embed_in_square_matches_row_length_oracle():
    for r in range(1, 5):
        for t in enumerate_T_r(r):
            image = embed_in_square(t)
            assert image.chain() == square_completion_oracle(t.chain(), r)
            assert image.shape == (r,) * r
            assert syt_validate(image)[0]


def test_embed_in_square_preserves_and_reflects_dominance():
    for r in range(1, 5):
        elements = enumerate_T_r(r)
        images = [embed_in_square(t) for t in elements]
        for a, fa in zip(elements, images):
            for b, fb in zip(elements, images):
                assert dom_leq_syt(a, b) == dom_leq_syt(fa, fb)


def test_same_shape_box_decision_agrees_with_bfs():
    for r in range(1, 6):
        for a in enumerate_T_r(r):
            for b in enumerate_T_r(r):
                if a.shape != b.shape:
                    continue
                assert box_leq_syt_same_shape(a, b) == box_leq_syt(a, b)


# ---------------------------------------------------------------------------
# LR side


def test_lr_dominance_fixture():
    assert dom_leq_lr(delta5(), gamma5())
    assert dom_leq_lr(delta5(), delta5())
    assert not dom_leq_lr(gamma5(), delta5())
    with pytest.raises(ValueError):
        dom_leq_lr(delta5(), lr_from_cells((1,), (), {(1, 1): 1}))


def test_lr_content_consequence_of_dominance():
    # a dominance-smaller tableau has the naturally smaller content
    family = enumerate_lr_rook(BETA5, GAMMA5)
    for a in family:
        for b in family:
            if dom_leq_lr(a, b):
                assert nat_leq_general(lr_content(a), lr_content(b))
    assert nat_leq_general(lr_content(delta5()), lr_content(gamma5()))


def test_lr_two_move_path():
    ok, path = box_leq_lr(delta5(), gamma5(), return_path=True)
    assert ok and len(path) == 2
    kinds = sorted(move.kind for move in path)
    assert kinds == ["lr_increase", "lr_swap"]
    cursor = gamma5()
    for move in path:
        cursor = apply_lr_move(cursor, move)
    assert cursor == delta5()


def test_lr_single_moves_seven_row_example():
    g, ghat = gamma7(), gamma7_hat()
    assert (ghat, MoveRecord("lr_increase", (3, 1, 3))) in box_moves_lr(g)
    delta = lr_from_cells(
        (7, 6, 5, 4, 3, 2, 1),
        (6, 5, 4, 3, 2, 1),
        {(1, 7): 1, (2, 6): 1, (3, 5): 2, (4, 4): 1, (5, 3): 3, (6, 2): 2, (7, 1): 4},
    )
    assert (delta, MoveRecord("lr_increase", (1, 3, 4))) in box_moves_lr(ghat)
    assert box_leq_lr(delta, g)


def test_lr_moves_strictly_decrease_dominance():
    from tableau_orders.partitions import partitions_up_to_weight, rook_strip_inners

    for beta in partitions_up_to_weight(8):
        for gamma in rook_strip_inners(beta):
            for t in enumerate_lr_rook(beta, gamma):
                for result, _ in box_moves_lr(t):
                    assert result != t
                    assert dom_leq_lr(result, t)


def test_single_column_tableaux_only_increase():
    t = lr_from_cells((2,), (1,), {(2, 1): 1})
    assert all(move.kind == "lr_increase" for _, move in box_moves_lr(t))


# ---------------------------------------------------------------------------
# the reading-word bijection


def test_bijection_fixtures():
    assert lr_to_syt(delta6()) == StandardTableau(((1, 2, 6), (3, 4), (5,)))
    assert lr_to_syt(gamma6()) == StandardTableau(((1, 2, 3), (4, 6), (5,)))


def test_bijection_nine_box_fixture():
    beta9 = (9, 8, 7, 6, 5, 4, 3, 2, 1)
    gamma9 = (8, 7, 6, 5, 4, 3, 2, 1)
    cells = {
        (1, 9): 1,
        (2, 8): 2,
        (3, 7): 1,
        (4, 6): 1,
        (5, 5): 2,
        (6, 4): 3,
        (7, 3): 1,
        (8, 2): 1,
        (9, 1): 1,
    }
    g9 = lr_from_cells(beta9, gamma9, cells)
    assert lr_to_syt(g9) == StandardTableau(((1, 3, 4, 7, 8, 9), (2, 5), (6,)))
    d9 = lr_from_cells(beta9, gamma9, {**cells, (3, 7): 3})
    assert lr_to_syt(d9) == StandardTableau(((1, 4, 7, 8, 9), (2, 5), (3, 6)))
    assert box_leq_lr(d9, g9)


def test_bijection_inverse_fixtures():
    got = syt_to_lr(StandardTableau(((1, 2, 6), (3, 4), (5,))), (6, 5, 4, 3, 2, 1), (5, 4, 3, 2, 1))
    assert got == delta6()
    assert syt_to_lr(StandardTableau(((1,),)), (1,), ()) == lr_from_cells(
        (1,), (), {(1, 1): 1}
    )


def test_bijection_round_trips_small():
    for beta, gamma in [((3, 2, 1), (2, 1)), ((4, 2), (3, 2)), (BETA5, GAMMA5)]:
        r = sum(beta) - sum(gamma)
        for t in enumerate_lr_rook(beta, gamma):
            assert syt_to_lr(lr_to_syt(t), beta, gamma) == t
        for s in enumerate_T_r(r):
            assert lr_to_syt(syt_to_lr(s, beta, gamma)) == s


def test_bijection_inverse_rejects():
    with pytest.raises(ValueError):
        syt_to_lr(StandardTableau(((1, 2),)), (3, 2, 1), (2, 1))  # size mismatch
    with pytest.raises(ValueError):
        syt_to_lr(StandardTableau(((2,), (1,))), (2, 1), (1,))  # not a tableau image


# ---------------------------------------------------------------------------
# relation tables


def test_relation_table_rejects_non_posets():
    elements = enumerate_T_r(2)
    with pytest.raises(ValueError, match="antisymmetric"):
        relation_table(elements, lambda a, b: True)
    with pytest.raises(ValueError, match="reflexive"):
        relation_table(elements, lambda a, b: False)


def test_singleton_table_and_chain_hasse():
    table = relation_table(enumerate_T_r(1), dom_leq_syt)
    assert table.leq == ((True,),)
    assert hasse(table) == ()
    chain3 = relation_table(
        [t for t in enumerate_T_r(3) if len(t.shape) in (1, 3)] + [StandardTableau(((1, 3), (2,)))],
        dom_leq_syt,
    )
    assert len(hasse(chain3)) == 2


def test_tables_match_small_theorem_instance():
    elements = enumerate_T_r(3)
    dom = relation_table(elements, dom_leq_syt)
    box = reachability_table(elements, box_moves_syt)
    equal, why = relations_equal(box, dom)
    assert equal, why


def test_relations_equal_reports_counterexample():
    elements = enumerate_T_r(2)
    dom = relation_table(elements, dom_leq_syt)
    eq = relation_table(elements, lambda a, b: a == b)
    equal, info = relations_equal(dom, eq)
    assert not equal and "pair" in info


def test_dot_output_identical_for_both_orders():
    for r in range(1, 7):
        elements = enumerate_T_r(r)
        dom_dot = to_dot(relation_table(elements, dom_leq_syt), name="syt")
        box_dot = to_dot(reachability_table(elements, box_moves_syt), name="syt")
        assert dom_dot == box_dot
    one = to_dot(relation_table(enumerate_T_r(1), dom_leq_syt), name="syt")
    assert one.count("label=") == 1 and "->" not in one
