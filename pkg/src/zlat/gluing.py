"""Extensions by isotropic subgroups, gluing along anti-isomorphisms, and
involutions obtained by gluing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact, forms
from .forms import FiniteQuadraticForm
from .lattice import Lattice, SublatticeRef, direct_sum, overlattice, sublattice


@dataclass(frozen=True)
class GlueMap:
    """Anti-isomorphism between subgroups of two discriminant forms, on generators."""

    source_form: FiniteQuadraticForm
    target_form: FiniteQuadraticForm
    source_gens: tuple
    target_gens: tuple

    def __post_init__(self):
        if len(self.source_gens) != len(self.target_gens):
            raise ValueError("generator lists differ in length")
        if not forms.is_anti_isomorphism(
            self.source_form, list(self.source_gens), self.target_form, list(self.target_gens)
        ):
            raise ValueError("not an anti-isomorphism")

    @property
    def subgroup_order(self) -> int:
        return len(forms.subgroup_elements(self.source_form, list(self.source_gens)))


def trivial_glue_map(l1: Lattice, l2: Lattice) -> GlueMap:
    f1 = forms.discriminant_form(l1)
    f2 = forms.discriminant_form(l2)
    return GlueMap(f1, f2, (), ())


@dataclass(frozen=True)
class LatticeInvolution:
    lattice: Lattice
    action: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        c = self.action_rows()
        n = self.lattice.rank
        if not exact.mat_eq(exact.mat_mul(c, c), exact.identity(n)):
            raise ValueError("action is not an involution")
        g = self.lattice.gram_rows()
        if not exact.mat_eq(exact.mat_mul(exact.mat_mul(c, g), exact.transpose(c)), g):
            raise ValueError("action does not preserve the inner product")

    def action_rows(self):
        return [list(r) for r in self.action]


def extend(l: Lattice, h_gens) -> Lattice:
    """The extension L_H associated with the isotropic subgroup H = <h_gens>.

    Generators are elements of discr L (coefficient tuples on the recorded
    generators).  Result has determinant det(L)/|H|^2.
    """
    f = forms.discriminant_form(l)
    if not forms.is_isotropic_subgroup(f, list(h_gens)):
        raise ValueError("subgroup is not isotropic")
    vectors = [f.lift_vector(g) for g in h_gens]
    out = overlattice(l, vectors)
    h_order = len(forms.subgroup_elements(f, list(h_gens)))
    assert abs(out.det()) * h_order * h_order == abs(l.det())
    return out


def glue(l1: Lattice, l2: Lattice, phi: GlueMap) -> Lattice:
    """Gluing l1 +_phi l2: the extension of l1 + l2 by the graph of phi."""
    f1, f2 = phi.source_form, phi.target_form
    n1, n2 = l1.rank, l2.rank
    vectors = []
    for g_src, g_tgt in zip(phi.source_gens, phi.target_gens):
        v1 = f1.lift_vector(g_src)
        v2 = f2.lift_vector(g_tgt)
        vectors.append(list(v1) + list(v2))
    ambient = direct_sum(l1, l2)
    out = overlattice(ambient, vectors)
    k = phi.subgroup_order
    assert abs(out.det()) * k * k == abs(l1.det()) * abs(l2.det())
    return out


def _glued_basis(l1: Lattice, l2: Lattice, phi: GlueMap):
    """The canonical HNF basis of the gluing, as rational rows in l1+l2 coords."""
    f1, f2 = phi.source_form, phi.target_form
    n = l1.rank + l2.rank
    vectors = []
    for g_src, g_tgt in zip(phi.source_gens, phi.target_gens):
        vectors.append(list(f1.lift_vector(g_src)) + list(f2.lift_vector(g_tgt)))
    rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    rows += [[Fraction(x) for x in v] for v in vectors]
    int_rows, den = exact.clear_denominators(rows)
    h = exact.hermite_normal_form(int_rows)
    return [[Fraction(x, den) for x in row] for row in h]


def glue_involution(l1: Lattice, l2: Lattice, phi: GlueMap) -> LatticeInvolution:
    """The involution on l1 +_phi l2 acting as +1 on l1 and -1 on l2.

    Requires the glued subgroups to be 2-elementary (otherwise the graph is
    not preserved by (+1, -1)).
    """
    for g in phi.source_gens:
        if phi.source_form.element_order(g) > 2:
            raise ValueError("glued subgroup is not 2-elementary")
    glued = glue(l1, l2, phi)
    basis = _glued_basis(l1, l2, phi)
    n1 = l1.rank
    n = n1 + l2.rank
    d = [[Fraction(int(i == j)) * (1 if i < n1 else -1) for j in range(n)] for i in range(n)]
    image = exact.frac_mat_mul(basis, d)
    action_f = exact.frac_solve_left(basis, image)
    action = []
    for row in action_f:
        out_row = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("involution does not preserve the glued lattice")
            out_row.append(int(x))
        action.append(out_row)
    return LatticeInvolution(glued, tuple(tuple(r) for r in action))


def eigenlattices(inv: LatticeInvolution) -> tuple[SublatticeRef, SublatticeRef]:
    """Saturated (+1)- and (-1)-eigenlattices of the involution."""
    c = inv.action_rows()
    n = inv.lattice.rank
    ident = exact.identity(n)
    minus = [[c[i][j] - ident[i][j] for j in range(n)] for i in range(n)]
    plus = [[c[i][j] + ident[i][j] for j in range(n)] for i in range(n)]
    l_plus = exact.integer_kernel(minus)
    l_minus = exact.integer_kernel(plus)
    return sublattice(inv.lattice, l_plus), sublattice(inv.lattice, l_minus)


def glue_index_r2(inv: LatticeInvolution) -> int:
    """r_2(L, c): the 2-rank of L/(L_+ + L_-)."""
    lp, lm = eigenlattices(inv)
    rows = lp.rows() + lm.rows()
    h = exact.hermite_normal_form(rows)
    n = inv.lattice.rank
    if len(h) != n:
        raise ValueError("eigenlattices do not span rationally")
    det = exact.determinant(h)
    index = abs(det)
    r2 = 0
    while index % 2 == 0:
        index //= 2
        r2 += 1
    assert index == 1, "index of L+ + L- must be a power of 2"
    return r2


def twist_parity(inv: LatticeInvolution) -> str:
    """"I" when the c-twisted product x.c(y) is even, "II" otherwise."""
    g = inv.lattice.gram_rows()
    c = inv.action_rows()
    twisted = exact.mat_mul(g, exact.transpose(c))
    return "I" if all(twisted[i][i] % 2 == 0 for i in range(len(twisted))) else "II"
