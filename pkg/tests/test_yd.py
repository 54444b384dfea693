import random
from fractions import Fraction as Q

import pytest

from hopfbrauer.algebra import StructureAlgebra
from hopfbrauer.linalg import Matrix, in_span, is_zero_vec, mat_det, zero_vec
from hopfbrauer.sweedler import (
    CFamilyDescriptor,
    build_C,
    build_dh4,
    build_h4,
    build_rt,
    build_rt_form,
    c_opposite,
)
from hopfbrauer.yd import (
    ModuleAlgebra,
    NoRationalNormalization,
    YDAlgebra,
    YDModule,
    braiding_psi,
    check_module_algebra,
    check_yd_algebra,
    check_yd_condition,
    coaction_sparse,
    double_to_yd,
    end_yd,
    fg_maps,
    graded_flip,
    gradings,
    h_opposite,
    induced_action,
    induced_coaction,
    inner_witness,
    is_h_azumaya,
    sharp_product,
    strongly_inner_witness_h4,
    yd_centralizers,
    yd_to_double,
)

rng = random.Random(42)


def rnd(nonzero=False):
    n = rng.randint(-9, 9)
    while nonzero and n == 0:
        n = rng.randint(-9, 9)
    return Q(n, rng.randint(1, 9))


def trivial_yd_on(alg: StructureAlgebra) -> YDAlgebra:
    """Action through ε, coaction a ↦ a⊗1."""
    h4 = build_h4()
    action = [Matrix.identity(alg.dim) * h4.counit[i] for i in range(4)]
    coaction = []
    for j in range(alg.dim):
        row = zero_vec(alg.dim * 4)
        row[j * 4 + 0] = Q(1)
        coaction.append(row)
    return YDAlgebra(h4, alg, action, coaction)


def test_c_family_is_yd():
    for _ in range(6):
        d = CFamilyDescriptor(rnd(), rnd(), rnd())
        assert check_yd_algebra(build_C(d)).ok


def test_trivial_structure_is_yd():
    alg = StructureAlgebra(["1", "x"], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [3, 0]]])
    assert check_yd_algebra(trivial_yd_on(alg)).ok


def test_dropping_s_term_still_yd():
    # removing the s⊗h term from ρ(x) just produces C(a;t,0), still valid
    d = CFamilyDescriptor(Q(1), Q(2), Q(3))
    c = build_C(d)
    dropped = [list(row) for row in c.coaction]
    dropped[1][0 * 4 + 2] = Q(0)
    assert check_yd_algebra(YDAlgebra(c.hopf, c.alg, c.action, dropped)).ok


def test_corrupted_coaction_breaks_yd_only():
    # ρ(x) = x⊗1 with h·x = t ≠ 0: module, comodule and both algebra
    # compatibilities survive, but the compatibility condition does not
    c = build_C(CFamilyDescriptor(Q(1), Q(2), Q(0)))
    bad_coaction = [list(row) for row in c.coaction]
    bad_coaction[1][1 * 4 + 1] = Q(0)  # remove x⊗g
    bad_coaction[1][1 * 4 + 0] = Q(1)  # insert x⊗1
    bad = YDAlgebra(c.hopf, c.alg, c.action, bad_coaction)
    from hopfbrauer.yd import check_comodule_algebra_op, check_module_algebra

    assert check_module_algebra(bad).ok
    assert check_comodule_algebra_op(bad).ok
    assert not check_yd_condition(bad).ok


def test_yd_double_round_trip():
    double, _ = build_dh4()
    d = CFamilyDescriptor(Q(3), Q(2), Q(5))
    c = build_C(d)
    over_double = yd_to_double(c, double)
    assert check_module_algebra(over_double).ok
    back = double_to_yd(over_double, build_h4())
    assert back.action == c.action
    assert back.coaction == c.coaction


def test_phi_g_acts_by_coaction_pairing():
    double, _ = build_dh4()
    d = CFamilyDescriptor(Q(3), Q(2), Q(5))
    over_double = yd_to_double(build_C(d), double)
    from hopfbrauer.sweedler import dh4_named

    phig = dh4_named("phi_g")
    mat = Matrix.zero(2, 2)
    for i, c in enumerate(phig):
        if c:
            mat = mat + over_double.action[i] * c
    # ρ(x) = x⊗g + s⊗h and φ(g) pairs g ↦ −1, h ↦ 0, so φ(g)·x = −x
    assert mat.col(1) == [Q(0), Q(-1)]
    assert mat.col(0) == [Q(1), Q(0)]


def test_trivial_coaction_gives_identity_phi_g_action():
    alg = StructureAlgebra(["1", "x"], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [3, 0]]])
    triv = trivial_yd_on(alg)
    double, _ = build_dh4()
    over_double = yd_to_double(triv, double)
    from hopfbrauer.sweedler import dh4_named

    phig = dh4_named("phi_g")
    mat = Matrix.zero(2, 2)
    for i, c in enumerate(phig):
        if c:
            mat = mat + over_double.action[i] * c
    assert mat == Matrix.identity(2)


def test_h_opposite_formula_and_validity():
    d = CFamilyDescriptor(rnd(), rnd(), rnd())
    c = build_C(d)
    opp = h_opposite(c)
    assert check_yd_algebra(opp).ok
    x = [Q(0), Q(1)]
    assert opp.alg.mul_vec(x, x) == [d.s * d.t - d.a, Q(0)]
    expected = build_C(c_opposite(d))
    assert opp.alg.mult == expected.alg.mult


def test_h_opposite_of_trivial_structure_is_plain_opposite():
    alg = StructureAlgebra(
        ["1", "u", "v", "uv"],
        [1, 0, 0, 0],
        [
            [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]],
            [[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]],
            [[0, 0, 1, 0], [0, 0, 0, -1], [0, 0, 0, 0], [0, 0, 0, 0]],
            [[0, 0, 0, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
        ],
    )
    triv = trivial_yd_on(alg)
    opp = h_opposite(triv)
    from hopfbrauer.algebra import opposite_algebra

    assert opp.alg.mult == opposite_algebra(alg).mult


def test_sharp_with_trivial_factor_is_isomorphic():
    d = CFamilyDescriptor(Q(3), Q(2), Q(5))
    c = build_C(d)
    one_dim = StructureAlgebra(["1"], [1], [[[1]]])
    s = sharp_product(c, trivial_yd_on(one_dim))
    assert check_yd_algebra(s).ok
    assert s.alg.mult == c.alg.mult
    assert s.action == c.action
    assert s.coaction == c.coaction


def test_sharp_products_pass_checks_and_stay_azumaya():
    for _ in range(4):
        d1 = CFamilyDescriptor(rnd(), rnd(), rnd())
        d2 = CFamilyDescriptor(rnd(), rnd(), rnd())
        s = sharp_product(build_C(d1), build_C(d2))
        assert check_yd_algebra(s).ok
        if d1.is_azumaya and d2.is_azumaya:
            assert is_h_azumaya(s)


def test_end_yd_trivial_module():
    h4 = build_h4()
    triv = YDModule(
        h4,
        1,
        [Matrix([[h4.counit[i]]]) for i in range(4)],
        [[Q(1), Q(0), Q(0), Q(0)]],
    )
    e = end_yd(triv, "plain")
    assert e.dim == 1
    assert check_yd_algebra(e).ok
    f, g = fg_maps(e)
    assert f == Matrix.identity(1) and g == Matrix.identity(1)


@pytest.mark.parametrize("variant", ["plain", "op"])
def test_end_yd_of_c_modules(variant):
    d = CFamilyDescriptor(Q(2), Q(1), Q(3))
    e = end_yd(build_C(d).yd_module(), variant)
    assert check_yd_algebra(e).ok
    assert is_h_azumaya(e)


def test_fg_matrix_matches_printed_table():
    a, t, s = Q(3), Q(2), Q(5)
    f, g = fg_maps(build_C(CFamilyDescriptor(a, t, s)))
    st = s * t
    assert f.data == Matrix(
        [
            [1, 0, 0, a],
            [0, 1, 1, 0],
            [0, st - a, a, 0],
            [1, 0, 0, st - a],
        ]
    ).data
    assert g.data == Matrix(
        [
            [1, 0, 0, a],
            [0, 1, 1, 0],
            [0, a, st - a, 0],
            [1, 0, 0, st - a],
        ]
    ).data


def test_fg_determinants():
    for _ in range(6):
        a, t, s = rnd(), rnd(), rnd()
        f, g = fg_maps(build_C(CFamilyDescriptor(a, t, s)))
        assert mat_det(f) == -((s * t - 2 * a) ** 2)
        assert mat_det(g) == (s * t - 2 * a) ** 2


def test_azumaya_iff_2a_neq_st():
    assert not is_h_azumaya(build_C(CFamilyDescriptor(0, 0, 0)))
    assert is_h_azumaya(build_C(CFamilyDescriptor(1, 1, 0)))
    assert not is_h_azumaya(build_C(CFamilyDescriptor(3, 2, 3)))


def test_induced_coaction_forces_s_equals_lt():
    a, t = Q(2), Q(3)
    for l in (Q(0), Q(1), Q(-2, 3)):
        c = build_C(CFamilyDescriptor(a, t, l * t))
        induced = induced_coaction(c.module_algebra(), build_rt(l))
        assert induced.coaction == c.coaction
        assert check_yd_algebra(induced).ok
        wrong = build_C(CFamilyDescriptor(a, t, l * t + 1))
        assert induced_coaction(wrong.module_algebra(), build_rt(l)).coaction != wrong.coaction


def test_induced_action_forces_t_equals_sl():
    a, s = Q(2), Q(3)
    for l in (Q(0), Q(1), Q(-2, 3)):
        c = build_C(CFamilyDescriptor(a, s * l, s))
        induced = induced_action(c.comodule_algebra(), build_rt_form(l))
        assert induced.action == c.action
        assert check_yd_algebra(induced).ok


def test_trivial_action_induces_trivial_coaction():
    alg = StructureAlgebra(["1", "x"], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [5, 0]]])
    triv = trivial_yd_on(alg)
    for t in (Q(0), Q(7)):
        out = induced_coaction(triv.module_algebra(), build_rt(t))
        assert out.coaction == triv.coaction


def test_lemma24_trivial_h_action_is_t_independent():
    a = Q(5)
    carrier = build_C(CFamilyDescriptor(a, 0, 0)).module_algebra()
    base = induced_coaction(carrier, build_rt(0))
    f0, g0 = fg_maps(base)
    for t in (Q(1), Q(-3), Q(7, 2)):
        other = induced_coaction(carrier, build_rt(t))
        assert other.coaction == base.coaction
        f, g = fg_maps(other)
        assert (mat_det(f) != 0) == (mat_det(f0) != 0)
        assert (mat_det(g) != 0) == (mat_det(g0) != 0)


def test_braiding_with_r0_is_graded_flip():
    c1 = build_C(CFamilyDescriptor(Q(1), Q(2), Q(0)))
    c2 = build_C(CFamilyDescriptor(Q(-2), Q(3), Q(0)))
    v, w = c1.module(), c2.module()
    psi = braiding_psi(v, w, build_rt(0))
    assert psi == graded_flip((0, 1), (0, 1))


def test_braiding_matches_term_expansion():
    rt = build_rt(Q(3))
    c1 = build_C(CFamilyDescriptor(Q(1), Q(2), Q(6)))
    c2 = build_C(CFamilyDescriptor(Q(-2), Q(3), Q(9)))
    v, w = c1.module(), c2.module()
    psi = braiding_psi(v, w, rt)
    for _ in range(5):
        x = [rnd(), rnd()]
        y = [rnd(), rnd()]
        flat = [Q(0)] * 4
        for i, xi in enumerate(x):
            for j, yj in enumerate(y):
                flat[i * 2 + j] = xi * yj
        expanded = [Q(0)] * 4
        for (i, j), coef in rt.pairs().items():
            wy = w.action[j].apply(y)
            vx = v.action[i].apply(x)
            for p, cp in enumerate(wy):
                for q, cq in enumerate(vx):
                    expanded[p * 2 + q] += coef * cp * cq
        assert psi.apply(flat) == expanded


def test_gradings_of_c_family_coincide():
    g = gradings(build_C(CFamilyDescriptor(Q(2), Q(3), Q(4))))
    assert g.action_parity == (0, 1)
    assert g.coaction_parity == (0, 1)
    assert g.equal


def test_lemma32_sign_rule():
    # B in the Brauer-Wall part: trivial h- and φ(h)-action
    a_desc = CFamilyDescriptor(Q(2), Q(3), Q(4))
    b_desc = CFamilyDescriptor(Q(-3), Q(0), Q(0))
    a, b = build_C(a_desc), build_C(b_desc)
    s = sharp_product(a, b)
    ga, gb = gradings(a), gradings(b)
    for x in range(2):
        for y in range(2):
            for z in range(2):
                for w_ in range(2):
                    lhs = s.alg.mul_vec(
                        s.alg.basis_vec(x * 2 + y), s.alg.basis_vec(z * 2 + w_)
                    )
                    sign = Q(-1) if ga.coaction_parity[z] and gb.action_parity[y] else Q(1)
                    xz = a.alg.mul_vec(a.alg.basis_vec(x), a.alg.basis_vec(z))
                    yw = b.alg.mul_vec(b.alg.basis_vec(y), b.alg.basis_vec(w_))
                    rhs = zero_vec(4)
                    for p, cp in enumerate(xz):
                        for q, cq in enumerate(yw):
                            rhs[p * 2 + q] = sign * cp * cq
                    assert lhs == rhs
    # mirrored form for B # A with the action grading
    s2 = sharp_product(b, a)
    for x in range(2):
        for y in range(2):
            for z in range(2):
                for w_ in range(2):
                    lhs = s2.alg.mul_vec(
                        s2.alg.basis_vec(x * 2 + y), s2.alg.basis_vec(z * 2 + w_)
                    )
                    sign = Q(-1) if gb.action_parity[z] and ga.action_parity[y] else Q(1)
                    xz = b.alg.mul_vec(b.alg.basis_vec(x), b.alg.basis_vec(z))
                    yw = a.alg.mul_vec(a.alg.basis_vec(y), a.alg.basis_vec(w_))
                    rhs = zero_vec(4)
                    for p, cp in enumerate(xz):
                        for q, cq in enumerate(yw):
                            rhs[p * 2 + q] = sign * cp * cq
                    assert lhs == rhs


def test_centralizer_of_unit_is_everything():
    c = build_C(CFamilyDescriptor(Q(1), Q(1), Q(0)))
    left, right = yd_centralizers(c, [c.alg.one()])
    assert len(left) == 2 and len(right) == 2


def test_centers_trivial_for_azumaya():
    c = build_C(CFamilyDescriptor(Q(1), Q(1), Q(0)))
    full = [c.alg.basis_vec(0), c.alg.basis_vec(1)]
    left, right = yd_centralizers(c, full)
    assert len(left) == 1 and in_span(left, c.alg.one())
    assert len(right) == 1 and in_span(right, c.alg.one())


def test_centralizer_requires_closed_subspace():
    c = build_C(CFamilyDescriptor(Q(1), Q(2), Q(0)))
    with pytest.raises(ValueError):
        yd_centralizers(c, [c.alg.basis_vec(1)])  # k·x is not h-stable (h·x = 2)


def test_inner_witness_on_neutralized_product():
    h4 = build_h4()
    for a, t in ((Q(1), Q(2)), (Q(3), Q(-1, 2))):
        s = sharp_product(
            build_C(CFamilyDescriptor(a, t, 0)), build_C(CFamilyDescriptor(-a, 0, 0))
        )
        v = inner_witness(s, h4.meta["h"], h4.meta["g"])
        assert v is not None
        lam = Q(-t, 2 * a)
        assert v[2] == lam  # X component (basis x#1)
        assert v[1] == 0    # Y component (basis 1#y)


def test_inner_witness_trivial_action_is_zero():
    alg = StructureAlgebra(["1", "x"], [1, 0], [[[1, 0], [0, 1]], [[0, 1], [1, 0]]])
    h4 = build_h4()
    action = [Matrix.identity(2), Matrix.diag([1, -1]), Matrix.zero(2, 2), Matrix.zero(2, 2)]
    a = ModuleAlgebra(h4, alg, action)
    v = inner_witness(a, h4.meta["h"], h4.meta["g"])
    assert v == [Q(0), Q(0)]


def test_strongly_inner_beta():
    for a, t in ((Q(1), Q(2)), (Q(3), Q(-5)), (Q(7, 2), Q(1, 3))):
        s = sharp_product(
            build_C(CFamilyDescriptor(a, t, 0)), build_C(CFamilyDescriptor(-a, 0, 0))
        )
        found = strongly_inner_witness_h4(s)
        assert found is not None
        u, w, beta = found
        assert beta == t * t / (4 * a)
        assert s.alg.mul_vec(u, u) == s.alg.one()
        anti = [x + y for x, y in zip(s.alg.mul_vec(w, u), s.alg.mul_vec(u, w))]
        assert is_zero_vec(anti)


def test_strongly_inner_trivial_action():
    from hopfbrauer.algebra import endomorphism_algebra

    h4 = build_h4()
    end = endomorphism_algebra(2)
    action = [Matrix.identity(4) * h4.counit[i] for i in range(4)]
    a = ModuleAlgebra(h4, end, action)
    u, w, beta = strongly_inner_witness_h4(a)
    assert u == end.one()
    assert is_zero_vec(w)
    assert beta == 0


def test_strongly_inner_rational_obstruction():
    # C(1;1,0) # C(1;0,0): the conjugation implementer squares to −1
    s = sharp_product(
        build_C(CFamilyDescriptor(Q(1), Q(1), Q(0))), build_C(CFamilyDescriptor(Q(1), Q(0), Q(0)))
    )
    with pytest.raises(NoRationalNormalization):
        strongly_inner_witness_h4(s)


def test_fg_maps_are_yd_morphisms():
    # F: A#Ā → End(A) and G: Ā#A → End(A)^op are isomorphisms of YD module
    # algebras for Azumaya A: algebra maps, H-linear and colinear
    d = CFamilyDescriptor(Q(3), Q(2), Q(5))
    a = build_C(d)
    abar = h_opposite(a)
    f, g = fg_maps(a)
    e_plain = end_yd(a.yd_module(), "plain")
    e_op = end_yd(a.yd_module(), "op")
    for source, matrix, target in ((sharp_product(a, abar), f, e_plain),
                                   (sharp_product(abar, a), g, e_op)):
        assert matrix.apply(source.alg.unit) == target.alg.one()
        for i in range(4):
            for j in range(4):
                lhs = matrix.apply(source.alg.mul_vec(source.alg.basis_vec(i), source.alg.basis_vec(j)))
                rhs = target.alg.mul_vec(matrix.apply(source.alg.basis_vec(i)),
                                         matrix.apply(source.alg.basis_vec(j)))
                assert lhs == rhs
        for h in range(4):
            for j in range(4):
                assert matrix.apply(source.action[h].col(j)) == \
                    target.action[h].apply(matrix.apply(source.alg.basis_vec(j)))
        for j in range(4):
            lhs = zero_vec(16)
            for p, k, c in coaction_sparse(source.coaction, 4, j):
                for q, v in enumerate(matrix.apply(source.alg.basis_vec(p))):
                    lhs[q * 4 + k] += c * v
            rhs = zero_vec(16)
            for p, c in enumerate(matrix.apply(source.alg.basis_vec(j))):
                if c:
                    for kk, v in enumerate(target.coaction[p]):
                        rhs[kk] += c * v
            assert lhs == rhs


def test_grading_error_on_non_homogeneous_basis():
    from hopfbrauer.yd import GradingError, Module, action_grading

    h4 = build_h4()
    swap = Matrix([[0, 1], [1, 0]])
    mod = Module(h4, 2, [Matrix.identity(2), swap, Matrix.zero(2, 2), Matrix.zero(2, 2)])
    from hopfbrauer.yd import check_module

    assert check_module(mod).ok
    with pytest.raises(GradingError):
        action_grading(mod, h4.meta["g"])


def test_element_parent_mismatch():
    a = build_C(CFamilyDescriptor(Q(1), Q(0), Q(0))).alg
    b = build_C(CFamilyDescriptor(Q(2), Q(0), Q(0))).alg
    with pytest.raises(ValueError):
        a.basis_element(1) * b.basis_element(1)


def test_solve_linear_dimension_mismatch():
    from hopfbrauer.linalg import DimensionError, solve_linear

    with pytest.raises(DimensionError):
        solve_linear(Matrix.identity(2), [Q(1)])


def test_cocycle_twist_rejects_invalid_cocycle():
    from hopfbrauer.sweedler import LazyCocycle, cocycle_twist

    bad = LazyCocycle(Q(1), Matrix([[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 1], [0, 0, 1, 1]]))
    with pytest.raises(AssertionError):
        cocycle_twist(build_C(CFamilyDescriptor(Q(1), Q(0), Q(1))), bad)
