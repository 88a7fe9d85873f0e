from fractions import Fraction

import pytest

from zlat import exact, forms
from zlat.gluing import (
    GlueMap,
    eigenlattices,
    extend,
    glue,
    glue_index_r2,
    glue_involution,
    trivial_glue_map,
    twist_parity,
    LatticeInvolution,
)
from zlat.lattice import (
    direct_sum,
    extension_by_fraction,
    named,
    parse_lattice_expr,
    signature,
)

F = Fraction


def test_extend_trivial_subgroup():
    l = parse_lattice_expr("A2")
    out = extend(l, [])
    assert out.gram_rows() == l.gram_rows()


def test_extend_6a2_gives_s0():
    six = parse_lattice_expr("6A2")
    f = forms.discriminant_form(six)
    delta = (1,) * 6
    assert f.q(delta) == 0
    s0 = extend(six, [delta])
    assert abs(s0.det()) == 81
    quot = forms.discriminant_form(s0)
    assert forms.normal_form3(quot) == (1, 3)
    # discr(extension) = H-perp / H, and Br is preserved
    assert forms.fingerprint(quot) == forms.coset_fingerprint(f, [delta])
    assert forms.brown(quot) == forms.brown(f)


def test_extend_matches_extension_by_fraction():
    # the subgroup route and the v/d route build the same extension up to genus
    six = parse_lattice_expr("6A2")
    via_fraction = extension_by_fraction(six, [1, -1] * 6, 3)
    via_subgroup = extend(six, [(1,) * 6])
    assert abs(via_fraction.det()) == abs(via_subgroup.det()) == 81
    assert forms.fingerprint(forms.discriminant_form(via_fraction)) == forms.fingerprint(
        forms.discriminant_form(via_subgroup)
    )


def test_extend_rejects_non_isotropic():
    l = parse_lattice_expr("A2")
    with pytest.raises(ValueError, match="isotropic"):
        extend(l, [(1,)])


def test_glue_2_minus2_is_u():
    l1 = named("<2>")
    l2 = named("<-2>")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    phi = GlueMap(f1, f2, ((1,),), ((1,),))
    glued = glue(l1, l2, phi)
    assert glued.det() == -1
    assert glued.is_even
    assert signature(glued) == (1, 1)


def test_glue_trivial_is_direct_sum():
    l1 = named("U")
    l2 = named("A2")
    glued = glue(l1, l2, trivial_glue_map(l1, l2))
    assert glued.gram_rows() == direct_sum(l1, l2).gram_rows()


def test_glue_rejects_bad_map():
    l1 = named("<2>")
    l2 = named("<2>")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    with pytest.raises(ValueError, match="anti-isomorphism"):
        GlueMap(f1, f2, ((1,),), ((1,),))


def test_discr_glue_is_orthogonal_sum_of_perps():
    # discr(L1 +_phi L2) = K1-perp + K2-perp for nondegenerate K_i
    l1 = parse_lattice_expr("<2>+A2")
    l2 = parse_lattice_expr("<-2>+A2")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    g1 = next(x for x in f1.elements() if f1.q(x) == F(1, 2))
    g2 = next(x for x in f2.elements() if f2.q(x) == F(3, 2))
    phi = GlueMap(f1, f2, (g1,), (g2,))
    glued = glue(l1, l2, phi)
    expected = forms.direct_sum_forms(
        forms.q_cyclic(3, F(-2, 3)), forms.q_cyclic(3, F(-2, 3))
    )
    assert forms.fingerprint(forms.discriminant_form(glued)) == forms.fingerprint(expected)


def test_glue_involution_direct_sum():
    l1 = named("U")
    l2 = named("A1")
    inv = glue_involution(l1, l2, trivial_glue_map(l1, l2))
    assert inv.action_rows() == [[1, 0, 0], [0, 1, 0], [0, 0, -1]]
    lp, lm = eigenlattices(inv)
    assert lp.induced_gram() == l1.gram_rows()
    assert lm.induced_gram() == l2.gram_rows()
    assert glue_index_r2(inv) == 0


def test_glue_involution_roundtrip():
    l1 = named("<2>")
    l2 = named("<-2>")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    phi = GlueMap(f1, f2, ((1,),), ((1,),))
    inv = glue_involution(l1, l2, phi)
    c = inv.action_rows()
    assert exact.mat_eq(exact.mat_mul(c, c), exact.identity(2))
    lp, lm = eigenlattices(inv)
    assert lp.induced_gram() == [[2]]
    assert lm.induced_gram() == [[-2]]
    assert glue_index_r2(inv) == 1


def test_swap_involution_on_u():
    # swap e1 <-> e2 on U decomposes as <2> glued to <-2>, r_2(L, c) = 1
    u = named("U")
    inv = LatticeInvolution(u.gram and u.gram and u, ((0, 1), (1, 0)))
    lp, lm = eigenlattices(inv)
    assert lp.induced_gram() == [[2]]
    assert lm.induced_gram() == [[-2]]
    assert glue_index_r2(inv) == 1


def test_twist_parity_exact_evaluation():
    u = named("U")
    ident = LatticeInvolution(u, ((1, 0), (0, 1)))
    assert twist_parity(ident) == "I"  # U itself is even
    swap = LatticeInvolution(u, ((0, 1), (1, 0)))
    # x.c(x) = x1^2 + x2^2 on the basis: odd, hence type II
    assert twist_parity(swap) == "II"
    two = named("<2>")
    neg = LatticeInvolution(two, ((-1,),))
    # x.c(x) = -2x^2: even, hence type I
    assert twist_parity(neg) == "I"


def test_glue_index_matches_r2_of_eigenlattices():
    # for odd |discr|: r2(L, c) = r2(L+) = r2(L-)
    u = named("U")
    swap = LatticeInvolution(u, ((0, 1), (1, 0)))
    lp, lm = eigenlattices(swap)
    r2p = forms.p_rank(forms.discriminant_form(lp.as_lattice()), 2)
    r2m = forms.p_rank(forms.discriminant_form(lm.as_lattice()), 2)
    assert glue_index_r2(swap) == r2p == r2m == 1


def test_glue_index_matches_subgroup_order():
    l1 = parse_lattice_expr("<2>+A1")
    l2 = parse_lattice_expr("<-2>+<2>")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    g1 = next(x for x in f1.elements() if f1.q(x) == F(1, 2))
    g2 = next(x for x in f2.elements() if f2.q(x) == F(3, 2))
    phi = GlueMap(f1, f2, (g1,), (g2,))
    inv = glue_involution(l1, l2, phi)
    assert 2 ** glue_index_r2(inv) == phi.subgroup_order == 2


def test_twist_parity_matches_delta2_of_plus_part():
    # Prop even_twist(1): for odd |discr|, delta2(L+) = 0 iff type I
    u = named("U")
    for action in (((1, 0), (0, 1)), ((0, 1), (1, 0)), ((-1, 0), (0, -1))):
        inv = LatticeInvolution(u, action)
        lp, _ = eigenlattices(inv)
        if lp.rank:
            f2 = forms.p_part(forms.discriminant_form(lp.as_lattice()), 2)
            d2 = forms.parity2(f2)
        else:
            d2 = 0
        assert (twist_parity(inv) == "I") == (d2 == 0)


def test_determinant_identity_for_glue():
    l1 = parse_lattice_expr("<2>+A1")
    l2 = parse_lattice_expr("<-2>+<2>")
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    # glue along the full 2-groups would need an anti-isomorphism; use one generator
    g1 = next(x for x in f1.elements() if f1.q(x) == F(1, 2))
    g2 = next(x for x in f2.elements() if f2.q(x) == F(3, 2))
    phi = GlueMap(f1, f2, (g1,), (g2,))
    glued = glue(l1, l2, phi)
    assert abs(glued.det()) * 4 == abs(l1.det()) * abs(l2.det())
