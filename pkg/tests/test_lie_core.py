from fractions import Fraction

import pytest

from liecas.errors import MalformedInputError
from liecas.lie_core import LieAlgebra, algebra_from_json, algebra_to_json

F = Fraction


def so3():
    # [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2
    return LieAlgebra(
        ["e1", "e2", "e3"],
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        levi=[0, 1, 2])


def sl2():
    # basis H, E, F with [H,E]=2E, [H,F]=-2F, [E,F]=H
    return LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 1, 2])


def test_constructor_rejects_bad_input():
    with pytest.raises(MalformedInputError):
        LieAlgebra([], {}, levi=[])
    with pytest.raises(MalformedInputError):
        LieAlgebra(["a", "a"], {}, levi=[])
    with pytest.raises(MalformedInputError):
        LieAlgebra(["a", "b"], {(1, 0): {0: 1}}, levi=[])
    with pytest.raises(MalformedInputError):
        LieAlgebra(["a", "b"], {(0, 5): {0: 1}}, levi=[])
    with pytest.raises(MalformedInputError):
        LieAlgebra(["a", "b"], {}, levi=[0], radical=[0, 1])


def test_zero_coefficients_dropped():
    g = LieAlgebra(["a", "b", "c"], {(0, 1): {2: 0}}, levi=[])
    assert g.brackets == {}


def test_bracket_antisymmetry_and_diagonal():
    g = so3()
    assert g.bracket_basis(0, 1) == {2: F(1)}
    assert g.bracket_basis(1, 0) == {2: F(-1)}
    assert g.bracket_basis(2, 2) == {}


def test_bracket_bilinearity():
    g = so3()
    a = {0: F(2), 1: F(1)}
    b = {1: F(1), 2: F(3)}
    # [2e1 + e2, e2 + 3e3] = 2e3 + 6e2 - 3e1... worked by hand:
    # [e1,e2]=e3, [e1,e3]=-e2, [e2,e3]=e1
    # 2*e3 + 2*3*(-e2) + 0 + 3*e1
    assert g.bracket(a, b) == {2: F(2), 1: F(-6), 0: F(3)}
    assert g.bracket(a, a) == {}


def test_bracket_rejects_out_of_range():
    g = so3()
    with pytest.raises(MalformedInputError):
        g.bracket({7: F(1)}, {0: F(1)})


def test_validate_accepts_so3_and_sl2():
    assert so3().validate().ok
    assert sl2().validate().ok


def test_validate_catches_jacobi_violation():
    # scale [H,E] to 3E: Jacobi residual on (H,E,F) becomes H
    g = LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 3}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 1, 2])
    report = g.validate()
    assert not report.ok
    assert report.jacobi_triples(g.names) == [("H", "E", "F")]
    (_, _, _, residual), = report.jacobi
    assert residual == {0: F(1)}
    assert "jacobi" in report.describe(g.names)


def test_validate_checks_declared_split():
    # sl2 with E mislabeled as radical: [H,E]=2E keeps the "radical" fine
    # but [E,F]=H leaks into the Levi part
    g = LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 2], radical=[1])
    report = g.validate()
    assert report.jacobi == []
    assert report.levi_closure == []  # (0,2) closes onto F, still declared Levi
    assert (1, 2, 0, F(1)) in report.radical_ideal

    # and H,E declared Levi with F radical: [H,E]=2E is fine,
    # but the pair (E,F) hits H again, plus Levi closure is fine by itself
    g2 = LieAlgebra(
        ["H", "E", "F"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: 1}},
        levi=[0, 1], radical=[2])
    report2 = g2.validate()
    assert report2.levi_closure == []
    assert (1, 2, 0, F(1)) in report2.radical_ideal


def test_levi_closure_violation():
    # fake split on so3: calling {e1} the Levi part leaves [e1,..] brackets
    # with radical factors only, so radical_ideal complains instead;
    # calling {e1,e2} the Levi part breaks closure at [e1,e2]=e3
    g = LieAlgebra(
        ["e1", "e2", "e3"],
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        levi=[0, 1], radical=[2])
    report = g.validate()
    assert (0, 1, 2, F(1)) in report.levi_closure


def test_subalgebra_extraction():
    # direct sum so3 + a central Z
    g = LieAlgebra(
        ["e1", "e2", "e3", "Z"],
        {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {1: -1}},
        levi=[0, 1, 2], radical=[3])
    s = g.subalgebra([0, 1, 2])
    assert s.names == ["e1", "e2", "e3"]
    assert s.dim == 3
    assert s.validate().ok
    assert s.bracket_basis(0, 1) == {2: F(1)}
    assert g.levi_subalgebra().names == s.names
    with pytest.raises(MalformedInputError):
        sl2().subalgebra([0, 1, 5])
    with pytest.raises(MalformedInputError):
        # {H, E} is closed but {E, F} is not
        sl2().subalgebra([1, 2])
    sub_he = sl2().subalgebra([0, 1])
    assert sub_he.bracket_basis(0, 1) == {1: F(2)}


def test_subalgebra_reindexes_brackets():
    g = LieAlgebra(
        ["A", "H", "E", "F"],
        {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}},
        levi=[1, 2, 3], radical=[0])
    s = g.subalgebra([1, 2, 3])
    assert s.names == ["H", "E", "F"]
    assert s.bracket_basis(2, 1) == {0: F(-1)}  # [F,E] = -H after reindex


def test_json_round_trip():
    g = LieAlgebra(
        ["H", "E", "F", "Z"],
        {(0, 1): {1: 2}, (0, 2): {2: -2}, (1, 2): {0: F(1, 2)}},
        levi=[0, 1, 2], radical=[3])
    doc = algebra_to_json(g)
    assert doc["brackets"][2]["terms"] == [{"k": "H", "c": "1/2"}]
    g2 = algebra_from_json(doc)
    assert g2.names == g.names
    assert g2.brackets == g.brackets
    assert g2.levi == g.levi and g2.radical == g.radical


def test_json_accepts_reversed_rows():
    doc = {
        "names": ["a", "b"],
        "brackets": [{"i": "b", "j": "a", "terms": [{"k": "a", "c": "1"}]}],
        "levi": [],
        "radical": ["a", "b"],
    }
    g = algebra_from_json(doc)
    assert g.bracket_basis(0, 1) == {0: F(-1)}


def test_json_rejects_malformed_documents():
    good = algebra_to_json(sl2())
    for mutate in (
            lambda d: d.pop("levi"),
            lambda d: d["brackets"].append({"i": "H", "j": "H", "terms": []}),
            lambda d: d["brackets"].append(
                {"i": "H", "j": "Q", "terms": [{"k": "H", "c": "1"}]}),
            lambda d: d["brackets"][0]["terms"].append({"k": "H", "c": "1/0"}),
            lambda d: d["names"].append("H"),
    ):
        doc = {k: ([dict(r) if isinstance(r, dict) else r for r in v]
                   if isinstance(v, list) else v)
               for k, v in good.items()}
        doc["brackets"] = [dict(r, terms=[dict(t) for t in r["terms"]])
                           for r in doc["brackets"]]
        mutate(doc)
        with pytest.raises(MalformedInputError):
            algebra_from_json(doc)
