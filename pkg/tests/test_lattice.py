import pytest

from zlat import exact
from zlat.lattice import (
    ExprError,
    direct_sum,
    divide,
    extension_by_fraction,
    hyperbolic_branch,
    is_divisible_by,
    is_hyperbolic,
    named,
    orthogonal_complement,
    parse_lattice_expr,
    primitive_closure,
    rescale,
    signature,
    sublattice,
)


def test_named_u():
    assert named("U").gram_rows() == [[0, 1], [1, 0]]


def test_named_a1():
    assert named("A1").gram_rows() == [[-2]]


def test_named_e8_unimodular_even_definite():
    e8 = named("E8")
    assert e8.rank == 8
    assert e8.det() == 1
    assert e8.is_even
    assert exact.inertia(e8.gram_rows()) == (0, 0, 8)


def test_catalog_classical_dets():
    assert named("U").det() == -1
    for n in range(1, 9):
        assert abs(named(f"A{n}").det()) == n + 1
    for n in (4, 5, 6, 7):
        assert abs(named(f"D{n}").det()) == 4
    assert abs(named("E6").det()) == 3
    assert abs(named("E7").det()) == 2
    assert named("<5>").det() == 5
    for name in ("U", "A3", "D4", "E6", "E7", "E8", "<2>", "<-6>"):
        assert named(name).is_even


def test_named_unknown():
    for bad in ("A0", "D3", "E5", "E9", "<0>", "F4"):
        with pytest.raises(ValueError):
            named(bad)


def test_direct_sum_block():
    s = direct_sum(named("U"), named("A2"))
    assert s.rank == 4
    assert s.gram_rows() == [
        [0, 1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, -2, 1],
        [0, 0, 1, -2],
    ]
    assert direct_sum(named("U")).gram_rows() == named("U").gram_rows()
    two_a2 = direct_sum(named("A2"), named("A2"))
    assert two_a2.rank == 4
    assert two_a2.det() == 9  # det multiplicativity: 3 * 3


def test_rescale():
    assert rescale(named("U"), 3).gram_rows() == [[0, 3], [3, 0]]
    assert rescale(named("A2"), 2).gram_rows() == [[-4, 2], [2, -4]]
    assert rescale(named("A2"), 1).gram_rows() == named("A2").gram_rows()
    with pytest.raises(ValueError):
        rescale(named("U"), 0)


def test_extension_by_fraction_6a2():
    # [6A2]_{sigma/3}: sigma = sum of (e_i' - e_i''), |discr| drops by 3^2
    l = parse_lattice_expr("6A2")
    sigma = [1, -1] * 6
    ext = extension_by_fraction(l, sigma, 3)
    assert ext.rank == 12
    assert ext.is_even
    assert abs(ext.det()) == 3**6 // 9


def test_extension_3a22_is_e62():
    # [3A2(2)]_{sigma/3} has the rank/det of E6(2); genus equality checked in stability tests
    l = parse_lattice_expr("3A2(2)")
    sigma = [1, -1] * 3
    ext = extension_by_fraction(l, sigma, 3)
    e62 = parse_lattice_expr("E6(2)")
    assert ext.rank == e62.rank == 6
    assert ext.det() == e62.det()
    assert ext.is_even


def test_extension_precondition_errors():
    l = parse_lattice_expr("A2")
    with pytest.raises(ValueError, match="not divisible by 3"):
        extension_by_fraction(l, [1, 0], 3)
    with pytest.raises(ValueError, match="divisible by 2"):
        extension_by_fraction(parse_lattice_expr("2A1"), [2, 0], 2)


def test_orthogonal_complement_block():
    amb = parse_lattice_expr("<2>+A2")
    sub = sublattice(amb, [[1, 0, 0]])
    comp = orthogonal_complement(sub)
    assert comp.induced_gram() == named("A2").gram_rows()


def test_orthogonal_complement_diagonal_in_u():
    u = named("U")
    comp = orthogonal_complement(sublattice(u, [[1, 1]]))
    assert comp.rank == 1
    assert comp.as_lattice().gram_rows() == [[-2]]


def test_even_minus2_vector_splits():
    # for an even (-2)-element v: L = Zv + complement
    l = parse_lattice_expr("A1+U")
    comp = orthogonal_complement(sublattice(l, [[1, 0, 0]]))
    assert comp.induced_gram() == named("U").gram_rows()


def test_primitive_closure():
    u = named("U")
    s = sublattice(u, [[2, 0]])
    assert primitive_closure(s).rows() == [[1, 0]]
    prim = sublattice(u, [[1, 0]])
    assert primitive_closure(prim).rows() == [[1, 0]]


def test_complement_involutive_on_primitive():
    amb = parse_lattice_expr("U+A2+<2>")
    sub = sublattice(amb, [[1, 2, 0, 1, 0], [0, 1, 1, 0, 2]])
    prim = primitive_closure(sub)
    double = orthogonal_complement(orthogonal_complement(prim))
    assert double.rows() == prim.rows()


def test_divisibility_iff_full_p_rank():
    # L divisible by p exactly when the discriminant p-rank equals the rank
    from zlat import forms

    for expr in ("U", "U(2)", "U(3)", "U(6)", "A2", "A2(2)", "2A1", "<6>+<-6>", "U+A2(2)"):
        l = parse_lattice_expr(expr)
        f = forms.discriminant_form(l)
        for p in (2, 3):
            assert is_divisible_by(l, p) == (forms.p_rank(f, p) == l.rank), (expr, p)


def test_divisibility():
    u3 = parse_lattice_expr("U(3)")
    assert is_divisible_by(u3, 3)
    assert divide(u3, 3).gram_rows() == named("U").gram_rows()
    assert not is_divisible_by(named("A2"), 2)
    u6 = parse_lattice_expr("U(6)")
    assert divide(u6, 2).gram_rows() == rescale(named("U"), 3).gram_rows()
    assert divide(u6, 3).gram_rows() == rescale(named("U"), 2).gram_rows()
    with pytest.raises(ValueError):
        divide(named("A2"), 2)


def test_signature_and_hyperbolic():
    assert signature(named("U")) == (1, 1)
    assert is_hyperbolic(named("U"))
    assert hyperbolic_branch(named("U")) == "strict"
    assert signature(named("E6")) == (0, 6)
    assert not is_hyperbolic(named("E6"))
    assert signature(named("<2>")) == (1, 0)
    assert hyperbolic_branch(named("<2>")) == "strict"


def test_parse_expressions():
    l = parse_lattice_expr("U(3)+2A2+A1")
    assert l.rank == 7
    assert l.expr == "U(3)+2A2+A1"
    diag = parse_lattice_expr("<2>+3<-6>")
    assert diag.gram_rows() == [
        [2, 0, 0, 0],
        [0, -6, 0, 0],
        [0, 0, -6, 0],
        [0, 0, 0, -6],
    ]
    assert parse_lattice_expr("U+E6").rank == 8
    assert parse_lattice_expr("2A2(2)").gram_rows() == parse_lattice_expr("A2(2)+A2(2)").gram_rows()


def test_parse_errors_with_position():
    with pytest.raises(ExprError):
        parse_lattice_expr("A0")
    with pytest.raises(ExprError):
        parse_lattice_expr("D3")
    with pytest.raises(ExprError):
        parse_lattice_expr("U+")
    with pytest.raises(ExprError):
        parse_lattice_expr("U(0)")
    with pytest.raises(ExprError):
        parse_lattice_expr("")
    with pytest.raises(ExprError):
        parse_lattice_expr("<0>")
