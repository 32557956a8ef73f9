from fractions import Fraction

import pytest

import qv


def f4():
    return qv.GroundRing(2, [1, 1, 1])


def test_ring():
    r = f4()
    assert r.order == 4
    assert r.mul("w", "w") == "w+1"
    assert r.invert("w") == "w+1"
    s9 = qv.GroundRing(3, [1, -1, 1])
    assert not s9.is_field
    assert s9.normalized_lift("2") == "w^2-w+3"
    assert r.normalized_lift("w") == "w^2+2*w+1"


def test_colorings():
    assert qv.count_colorings(qv.Quandle.dihedral3(), "2 ; 1 1 1") == 9
    assert qv.count_colorings(qv.Quandle.dihedral3(), "2 ; 1 1 1 1") == 3
    assert qv.count_colorings(qv.Quandle(f4()), "2 ; 1 1 1 1 1 1") == 16
    s9 = qv.Quandle(qv.GroundRing(3, [1, -1, 1]))
    assert qv.count_colorings(s9, "2 ; 1 1 1", "fix-arc:0=0") == 9


def test_state_sum_and_operator():
    q = qv.Quandle(f4())
    assert q.check_axioms()
    f = qv.Cochain.named(q, "example111")
    g = qv.state_sum(q, "2 ; 1 1 1", f)
    assert g.collapsed() == {"0": 4, "w": 12}
    assert g.eval_t1() == 16
    assert qv.operator_invariant(q, "2 ; 1 1 1", f) == g
    assert qv.check_yang_baxter(q, f)
    labels = [label for label, _ in qv.basis_h2(q)]
    assert labels == ["0,1"]


def test_yaml_round_trip():
    g = qv.example110(3).display
    assert qv.GroupRingElement.from_yaml(g.to_yaml()) == g


def test_expansion_of_display():
    ex = qv.example111(3)
    coeffs = qv.expand(ex.display, ex.a, ex.b)
    assert coeffs[:5] == [16, 0, 144, 276, 1260]
    assert coeffs[6] == Fraction(60156, 5)
    res, flags = qv.residues(qv.example110(3).display, 2, 1)
    assert res[2] == 1 and not flags[2]


def test_errors():
    with pytest.raises(qv.QvError):
        qv.GroundRing(4, [1, 1])
    q = qv.Quandle(qv.GroundRing(3, [1, -1, 1]))
    phi = qv.Cochain.named(q, "mochizuki-p3")
    assert not phi.is_cocycle(q)
    with pytest.raises(qv.QvError, match="NotACocycle"):
        qv.state_sum(q, "2 ; 1 1 1", phi, "fix-arc-region:0=0,0")
    assert qv.state_sum(q, "2 ; 1 1 1", phi, "fix-arc-region:0=0,0", verify=False).eval_t1() == 9
