import pytest

import qposet


def test_fixtures_classify():
    assert "fig2" in qposet.fixture_names()
    h = qposet.fixture("fig2")
    assert h.size == 6
    c = h.classify()
    assert c["orthocomplemented"] and not c["paraorthomodular"]
    assert qposet.fixture("fig4").classify()["orthomodular"]


def test_imp_and_checks():
    b4 = qposet.fixture("b4")
    assert qposet.imp(b4, "S", "a", "a'") == ["a'"]
    assert qposet.imp(b4, "C", "1", "a") == ["a"]
    h = qposet.fixture("fig2")
    assert qposet.imp(h, "K", "b'", "a") == ["1"]
    r = qposet.check_op(h, "K")
    assert not r["holds"]
    assert len(r["witness"]) == 2
    assert qposet.check_mpo(qposet.fixture("fig4"), "D")["holds"]
    table = qposet.arrow_table(b4, "C")
    assert len(table) == 16
    assert table[("a", "a")] == ["1"]


def test_adjoint():
    r = qposet.adjoint_exists(qposet.fixture("b4"), "C")
    assert r["holds"]
    assert r["operator"][("a", "a'")] == ["0"]
    assert qposet.adjoint_exists(qposet.fixture("fig2"), "C")["operator"] is None


def test_round_trip_and_dot():
    q = qposet.fixture("fig1")
    text = qposet.serialize(q)
    assert qposet.serialize(qposet.parse(text)) == text
    assert qposet.export_dot(q).startswith("digraph")


def test_enumerate_and_sweep():
    assert [q.name for q in qposet.enumerate(4)] == ["n2_1", "n3_1", "n4_1", "n4_2", "n4_3"]
    assert all(q.classify()["orthomodular"] for q in qposet.enumerate(6, "orthomodular"))
    report = qposet.sweep(6)
    assert report["discrepancies"] == []


def test_suite():
    verdicts = {e["verdict"] for e in qposet.theorem_suite(qposet.fixture("fig4"))}
    assert "Discrepant" not in verdicts


def test_errors():
    with pytest.raises(qposet.QposetError):
        qposet.fixture("nope")
    with pytest.raises(qposet.QposetError):
        qposet.imp(qposet.fixture("fig3"), "K", "a", "c")
    with pytest.raises(qposet.QposetError):
        qposet.parse("{")
