import pytest

from conftest import elem
from weylmonoid.cells import (
    MINUS_MINUS,
    MINUS_PLUS,
    MIXED,
    PLUS_PLUS,
    SAME,
    CellLabel,
    cell_factors,
    closure_leq,
    tits_product,
)
from weylmonoid.errors import SignMismatch
from weylmonoid.length import LEFT, RIGHT
from weylmonoid.monoid import idempotent, monoid_ball, unit, zero


def test_label_printing(blockH2A1):
    m = elem(blockH2A1, "s3 e(1,2)")
    assert str(CellLabel(PLUS_PLUS, m)) == "B^+ · <e | s3 | e({1,2}) | e> · B^+"
    assert str(CellLabel(MINUS_PLUS, m)).startswith("B^- · ")
    with pytest.raises(SignMismatch):
        CellLabel(("+", "-"), m)


def test_closure_examples(affA1):
    o = zero(affA1)
    for w in affA1.ball(4):
        u = unit(w)
        for signs in (PLUS_PLUS, MINUS_MINUS, MINUS_PLUS):
            assert closure_leq(CellLabel(signs, u), CellLabel(signs, u))
        assert closure_leq(CellLabel(PLUS_PLUS, o), CellLabel(PLUS_PLUS, u))
        assert closure_leq(CellLabel(MINUS_PLUS, o), CellLabel(MINUS_PLUS, u))
    with pytest.raises(SignMismatch):
        closure_leq(CellLabel(PLUS_PLUS, o), CellLabel(MINUS_PLUS, o))


def test_tits_product_examples(blockH2A1):
    e_r = idempotent(blockH2A1, {0, 1})
    s3e = elem(blockH2A1, "s3 e(1,2)")
    for eps in ("+", "-"):
        tp = tits_product(LEFT, SAME, eps, 2, e_r)
        assert (tp.case, tp.delta) == ("moved", 1)
        assert [c.elem for c in tp.cells] == [s3e]
        tp = tits_product(LEFT, SAME, eps, 0, e_r)
        assert (tp.case, tp.delta) == ("unchanged", 0)
        assert [c.elem for c in tp.cells] == [e_r]
        tp = tits_product(LEFT, SAME, eps, 2, s3e)
        assert (tp.case, tp.delta) == ("union", -1)
        assert {c.elem for c in tp.cells} == {e_r, s3e}


def test_mixed_shapes(hyp3):
    m = elem(hyp3, "s1 e(1,2) s3")
    for side, eps in ((LEFT, "+"), (RIGHT, "-")):
        for i in range(3):
            tp = tits_product(side, MIXED, eps, i, m)
            assert all(c.signs == MINUS_PLUS for c in tp.cells)
    for side, eps in ((LEFT, "-"), (RIGHT, "+")):
        with pytest.raises(SignMismatch):
            tits_product(side, MIXED, eps, 0, m)
    with pytest.raises(ValueError):
        tits_product("up", SAME, "+", 0, m)


def test_closure_after_growth(hyp3):
    for m in monoid_ball(hyp3, 3):
        for i in range(3):
            for side in (LEFT, RIGHT):
                for eps in ("+", "-"):
                    tp = tits_product(side, SAME, eps, i, m)
                    if tp.delta == 1:
                        assert closure_leq(CellLabel((eps, eps), m), tp.cells[0])


def test_factors(A2, blockH2A1):
    e = unit(A2.identity)
    for signs in (PLUS_PLUS, MINUS_MINUS, MINUS_PLUS):
        d = cell_factors(e, signs)
        assert d.torus_theta == frozenset()
        assert d.torus_conjugator is A2.identity
    d = cell_factors(e, PLUS_PLUS)
    assert d.left_roots == ()
    assert len(d.right_roots) == 3

    m = elem(blockH2A1, "s3 e(1,2)")
    d = cell_factors(m, PLUS_PLUS, height_cap=2)
    assert [r.coords for r in d.left_roots] == [(0, 0, 1)]
    assert all(not r.support <= {0, 1} for r in d.right_roots)
    assert d.height_cap == 2
    rec = d.to_record()
    assert rec["left_roots"] == [[0, 0, 1]]
    assert rec["torus_theta"] == [1, 2]
    with pytest.raises(SignMismatch):
        cell_factors(m, ("+", "-"))


def test_factor_mirror(blockH2A1):
    m = elem(blockH2A1, "e(1,2) s3")
    d = cell_factors(m, MINUS_MINUS, height_cap=3)
    assert [r.coords for r in d.right_roots] == [(0, 0, -1)]
    assert all(r.sign == "Negative" for r in d.left_roots)
