from fractions import Fraction as Q

import pytest

from hopfbrauer.algebra import StructureAlgebra
from hopfbrauer.e2 import build_e2
from hopfbrauer.hopf import (
    HopfAlgebra,
    HopfMorphism,
    check_coquasitriangular,
    check_hopf_axioms,
    check_hopf_morphism,
    check_quasitriangular,
    drinfeld_double,
    dual_hopf,
    push_qt,
    qt_structure,
)
from hopfbrauer.linalg import Matrix, zero_vec
from hopfbrauer.sweedler import (
    build_dh4,
    build_h4,
    build_h4_dual,
    build_rt,
    build_rt_form,
    check_dh4_relations,
    dh4_named,
    phi_iso,
)


def group_hopf_z2() -> HopfAlgebra:
    alg = StructureAlgebra(["1", "g"], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [1, 0]]], name="kZ2")
    cop = [zero_vec(4), zero_vec(4)]
    cop[0][0] = Q(1)        # 1⊗1
    cop[1][1 * 2 + 1] = Q(1)  # g⊗g
    return HopfAlgebra(alg, cop, [1, 1], Matrix.identity(2), name="kZ2")


def test_h4_axioms():
    assert check_hopf_axioms(build_h4()).ok


def test_e2_axioms():
    assert check_hopf_axioms(build_e2()).ok


def test_h4_dual_axioms():
    assert check_hopf_axioms(build_h4_dual()).ok


def test_corrupted_antipode_fails():
    h4 = build_h4()
    bad = HopfAlgebra(h4.alg, h4.cop, h4.counit, Matrix.identity(4), name="bad")
    rep = check_hopf_axioms(bad)
    assert not rep.ok
    assert any("S" in f and "Δ" in f for f in rep.failures)


def test_kz2_self_dual():
    kz2 = group_hopf_z2()
    dual = dual_hopf(kz2)
    assert check_hopf_axioms(dual).ok
    iso = HopfMorphism(kz2, dual, Matrix.from_cols([[1, 1], [1, -1]]))
    assert check_hopf_morphism(iso).ok


def test_phi_is_hopf_isomorphism():
    rep = check_hopf_morphism(phi_iso())
    assert rep.ok
    assert phi_iso().matrix.det() != 0


def test_double_dual_canonical():
    h4 = build_h4()
    dd = dual_hopf(dual_hopf(h4))
    assert dd.alg.mult == h4.alg.mult
    assert dd.cop == h4.cop
    assert dd.counit == h4.counit
    assert dd.antipode == h4.antipode


def test_drinfeld_double_of_kz2():
    double, canonical = drinfeld_double(group_hopf_z2())
    assert double.dim == 4
    assert check_hopf_axioms(double).ok
    assert check_quasitriangular(double, canonical).ok


def test_dh4_dimension_axioms_and_relations():
    double, canonical = build_dh4()
    assert double.dim == 16
    assert check_hopf_axioms(double).ok
    assert check_dh4_relations().ok
    rep = check_quasitriangular(double, canonical)
    assert rep.ok
    assert rep.data["triangular"] is False


def test_dh4_key_relation_explicitly():
    double, _ = build_dh4()
    a = double.alg
    fh, h, fg, g = dh4_named("phi_h"), dh4_named("h"), dh4_named("phi_g"), dh4_named("g")
    lhs = [x - y for x, y in zip(a.mul_vec(fh, h), a.mul_vec(h, fh))]
    rhs = [x - y for x, y in zip(fg, g)]
    assert lhs == rhs
    assert a.mul_vec(g, g) == a.one()
    assert a.mul_vec(fg, fg) == a.one()


@pytest.mark.parametrize("t", [Q(0), Q(1), Q(-3, 2), Q(7, 5)])
def test_rt_is_triangular(t):
    rep = check_quasitriangular(build_h4(), build_rt(t))
    assert rep.ok and rep.data["triangular"]


@pytest.mark.parametrize("t", [Q(0), Q(1), Q(-3, 2), Q(7, 5)])
def test_rt_form_is_cotriangular(t):
    rep = check_coquasitriangular(build_h4(), build_rt_form(t))
    assert rep.ok and rep.data["cotriangular"]


def test_unit_tensor_fails_qt_on_h4():
    h4 = build_h4()
    r = zero_vec(16)
    r[0] = Q(1)  # 1⊗1
    rep = check_quasitriangular(h4, qt_structure(h4, r))
    assert not rep.ok
    assert any("Δ^cop" in f for f in rep.failures)


def test_phi_push_matches_rt_table():
    for t in (Q(0), Q(2), Q(-5, 3)):
        rt = build_rt(t)
        pushed = push_qt(phi_iso(), rt.r)
        table = [[pushed[u * 4 + v] for v in range(4)] for u in range(4)]
        assert table == build_rt_form(t).form.data


def test_identity_morphism():
    h4 = build_h4()
    assert check_hopf_morphism(HopfMorphism(h4, h4, Matrix.identity(4))).ok


def test_morphism_rejects_non_algebra_map():
    h4 = build_h4()
    bad = Matrix.diag([1, 1, 2, 1])  # scaling h alone breaks Δ-compatibility
    rep = check_hopf_morphism(HopfMorphism(h4, h4, bad))
    assert not rep.ok
