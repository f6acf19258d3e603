import pytest

from oracles import act_word, facet_sample, nf3_by_search, word_matrix
from conftest import elem, group_of, word
from weylmonoid.errors import NotSpecial, PointNotInCone
from weylmonoid.monoid import (
    ANNIHILATED,
    act,
    act_unchecked,
    format_expression,
    format_nf3,
    from_parts,
    idempotent,
    inverse,
    monoid_ball,
    multiply,
    orbit_ball,
    unit,
    zero,
)
from weylmonoid.titscone import EXACT, ConePoint, indicator


def test_from_parts_examples(affA1, blockH2A1, hyp3):
    o = zero(affA1)
    assert from_parts(affA1.gen(0), {0, 1}, affA1.identity) == o
    assert o.w1.is_identity and o.w2.is_identity and o.w3.is_identity
    m = from_parts(blockH2A1.gen(2), {0, 1}, blockH2A1.identity)
    assert (m.w1, m.w2, m.w3) == (blockH2A1.identity, blockH2A1.gen(2), blockH2A1.identity)
    w = word(hyp3, "s1 s2 s3")
    assert from_parts(w, set(), hyp3.identity) == unit(w)
    with pytest.raises(NotSpecial):
        from_parts(hyp3.identity, {0}, hyp3.identity)


def test_conjugation_and_absorption(blockH2A1):
    g = blockH2A1
    e_r = idempotent(g, {0, 1})
    s3 = unit(g.gen(2))
    s1 = unit(g.gen(0))
    # s3 commutes with the idempotent, s1 is absorbed
    assert multiply(multiply(s3, e_r)[0], s3)[0] == e_r
    assert multiply(s1, e_r)[0] == e_r == multiply(e_r, s1)[0]
    assert multiply(s3, e_r)[0] == multiply(e_r, s3)[0]


def test_multiply_examples(affA1, hyp3):
    o = zero(affA1)
    assert multiply(o, o) == (o, EXACT)
    assert elem(affA1, "s1 e(1,2) s2") == o
    m, tag = multiply(elem(hyp3, "e(1,2) s3"), elem(hyp3, "e(1,2)"))
    assert tag == EXACT
    assert m == idempotent(hyp3, {0, 1, 2})


def test_unit_multiplication_is_group_law(hyp3):
    for u in hyp3.ball(2):
        for v in hyp3.ball(2):
            assert multiply(unit(u), unit(v)) == (unit(u * v), EXACT)


def test_inverse_examples(affA1, blockH2A1, hyp3):
    o = zero(affA1)
    assert inverse(o) == o
    w = word(hyp3, "s1 s2 s3")
    assert inverse(unit(w)) == unit(w.inverse())
    m = from_parts(blockH2A1.gen(2), {0, 1}, blockH2A1.identity)
    assert inverse(m) == m


@pytest.mark.parametrize("name", ["affA1", "blockH2A1", "hyp3"])
def test_inverse_monoid_laws(name):
    g = group_of(name)
    for m in monoid_ball(g, 3):
        mi = inverse(m)
        assert inverse(mi) == m
        x, t1 = multiply(m, mi)
        y, t2 = multiply(x, m)
        assert (t1, t2) == (EXACT, EXACT)
        assert y == m
        assert x.is_idempotent or x.theta == m.theta


def test_idempotents_commute(hyp3):
    idems = [m for m in monoid_ball(hyp3, 3) if m.is_idempotent]
    assert len(idems) == 5
    for a in idems:
        assert multiply(a, a)[0] == a
        for b in idems:
            assert multiply(a, b)[0] == multiply(b, a)[0]


def test_act_examples(affA1, blockH2A1, hyp3):
    w = word(hyp3, "s1 s2")
    lam = ConePoint.of((1, 0, 2))
    # s2 fixes lam since lam_2 = 0; s1 then subtracts a_i1 * lam_1
    assert act(unit(w), lam) == ConePoint.of((-1, 2, 4))
    o = zero(affA1)
    assert act(o, ConePoint.of((1, 0))) == ANNIHILATED
    assert act(o, ConePoint.of((0, 0))) == ConePoint.of((0, 0))
    e_r = idempotent(blockH2A1, {0, 1})
    pt = indicator(3, {2})
    assert act(e_r, pt) == pt
    with pytest.raises(PointNotInCone):
        act(o, ConePoint.of((-1, -1)))


@pytest.mark.parametrize("name, radius", [("affA1", 2), ("blockH2A1", 2), ("hyp3", 1)])
def test_normal_form_unique_by_exhaustive_search(name, radius):
    g = group_of(name)
    a = g.gcm.entries
    sample = facet_sample(a, 2)
    for theta in g.gcm.special_subsets():
        if not theta:
            continue
        for m in orbit_ball(g, theta, radius + 1):
            raw = [("s", i) for i in (m.w1 * m.w2).word] + [("e", theta)] + [("s", i) for i in m.w3.word]
            hits = nf3_by_search(a, theta, raw, radius + 1, sample)
            want = (word_matrix(a, m.w1.word), word_matrix(a, m.w2.word), word_matrix(a, m.w3.word))
            assert hits == [want], format_nf3(m)


def test_action_matches_word(hyp3):
    a = hyp3.gcm.entries
    sample = facet_sample(a, 2)
    texts = ["s1 e(1,2) s3", "e(1,3) s2 s1 e(2,3)", "s3 s2 e(1,2,3) s1", "e(1,2) s3 e(1,2)"]
    for text in texts:
        m = elem(hyp3, text)
        from weylmonoid.grammar import parse_atoms

        atoms = [atom[:2] for atom in parse_atoms(text, 3)]
        for p in sample:
            got = act_unchecked(m, ConePoint(p))
            want = act_word(a, atoms, p)
            assert (got if got == ANNIHILATED else got.values) == want


def test_printing(blockH2A1, affA1, hyp3):
    # s1 is absorbed on the right and s3 commutes through and cancels
    m = from_parts(blockH2A1.gen(2), {0, 1}, blockH2A1.gen(0) * blockH2A1.gen(2))
    assert format_nf3(m) == "e | e | e({1,2}) | e"
    m = from_parts(blockH2A1.gen(2), {0, 1}, blockH2A1.gen(0))
    assert format_nf3(m) == "e | s3 | e({1,2}) | e"
    assert format_expression(m) == "s3 e(1,2)"
    m = from_parts(hyp3.gen(2), {0, 1}, word(hyp3, "s1 s3"))
    assert format_nf3(m) == "s3 | e | e({1,2}) | s3"
    assert format_expression(unit(affA1.identity)) == "e()"
    assert str(m) == format_nf3(m)


def test_ball_counts(affA1):
    assert len(monoid_ball(affA1, 0)) == 2
    # units 1 + 2 + 2, plus the single zero element
    assert len(monoid_ball(affA1, 2)) == 6
