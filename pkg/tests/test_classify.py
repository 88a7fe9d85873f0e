import pytest

from zlat import forms, golden, stability
from zlat.classify import (
    THalfInvariants,
    admissible_invariants,
    admissible_rr2_pairs,
    enumerate_ascending_t_pairs,
    find_reversion_root,
    glue_t_pair,
    half_violation,
    pair_by_ref,
    pair_violation,
    realize_pair,
    reversion_partner,
    s_pair,
    witness_lattice,
)
from zlat.lattice import parse_lattice_expr


def test_admissible_count_is_68():
    assert len(admissible_invariants()) == 68


def test_distinct_rr2_count():
    # the lemma statement says "fifteen", its proof says "fourteen"; we report
    # the computed count without asserting either word
    assert len(admissible_rr2_pairs()) == 14


def test_forbidden_by_complement():
    # (7,1) with (p,q) = (1,0) passes alone but its complement has r' = 2 < r3' = 3
    inv = THalfInvariants(7, 1, 1, 1, 0)
    assert half_violation(inv) is None
    assert pair_violation(inv) is not None
    assert "complement" in pair_violation(inv)


def test_2_0_cell():
    admitted = [(i.p, i.q) for i, _c in admissible_invariants() if (i.r, i.r2) == (2, 0)]
    assert admitted == [(0, 0), (1, 1)]


def test_admissible_matches_table4():
    cells = {}
    for inv, _comp in admissible_invariants():
        cells.setdefault((inv.r, inv.r2, inv.p, inv.q), set()).add(inv.delta2)
    expected = {}
    for d2s, (r, r2), pqs in golden.TABLE_4:
        for p, q in pqs:
            expected.setdefault((r, r2, p, q), set()).update(d2s)
    assert cells == expected


def test_witnesses():
    assert witness_lattice(THalfInvariants(2, 0, 0, 0, 0)).expr == "U"
    assert witness_lattice(THalfInvariants(5, 3, 1, 1, 0)).expr == "<6>+D4"
    assert stability.invariants(witness_lattice(THalfInvariants(4, 4, 0, 0, 3))) == (4, 4, 0, 0, 3)


def test_witness_error_outside_census():
    with pytest.raises(ValueError):
        witness_lattice(THalfInvariants(1, 1, 1, 1, 3))  # r3 = 4 > r


def test_census_counts_and_refs():
    census = enumerate_ascending_t_pairs()
    assert len(census) == 68
    assert census[0].witness_plus.expr == "U"
    assert stability.invariants(census[0].witness_minus) == (7, 1, 1, 1, 3)
    refs = [p.table_ref for p in census]
    assert refs.count("?") == 0
    irreversible = [p for p in census if not p.reversible]
    assert sorted(p.table_ref for p in irreversible) == [f"8A:{i}" for i in range(1, 7)]


def test_irreversible_match_table_8a_by_invariants():
    for i, (d2, rr2, pq, rr2c, pqc, t1, t2) in enumerate(golden.TABLE_8A, 1):
        pair = pair_by_ref(f"8A:{i}")
        assert (pair.t_plus.r, pair.t_plus.r2) == rr2
        assert pair.t_plus.delta2 == d2
        assert (pair.t_plus.p, pair.t_plus.q) == pq
        assert (pair.t_minus.r, pair.t_minus.r2) == rr2c
        assert (pair.t_minus.p, pair.t_minus.q) == pqc
        assert stability.invariants(parse_lattice_expr(t1)) == pair.t_plus.key()
        assert stability.invariants(parse_lattice_expr(t2)) == pair.t_minus.key()


def test_partner_alignment_8b_8c():
    census = enumerate_ascending_t_pairs()
    for i in range(1, 32):
        left = pair_by_ref(f"8B:{i}")
        right = pair_by_ref(f"8C:{i}")
        partner = reversion_partner(left)
        assert partner is not None and partner.index == right.index
        back = reversion_partner(right)
        assert back is not None and back.index == left.index


def test_partnership_invariants():
    # Lemma partnership-lemma (1)-(3)
    for pair in enumerate_ascending_t_pairs():
        partner = reversion_partner(pair)
        if partner is None:
            continue
        assert partner.t_plus.r == 8 - pair.t_plus.r
        assert partner.t_plus.r2 == pair.t_plus.r2
        assert partner.t_plus.delta2 == pair.t_plus.delta2
        assert (partner.t_plus.p, partner.t_plus.q) == (1 - pair.t_plus.p, 3 - pair.t_plus.q)


def test_reversion_root_found_constructively():
    pair = pair_by_ref("8B:1")
    root = find_reversion_root(pair)
    assert root is not None
    assert pair.witness_minus.norm(list(root)) == -2


def test_pair_invariant_properties():
    for pair in enumerate_ascending_t_pairs():
        tp, tm = pair.t_plus, pair.t_minus
        assert tp.r + tm.r == 9
        assert abs(tp.r2 - tm.r2) == 1
        assert tm.delta2 == 1  # larger r2 side
        assert (tp.p + tm.p, tp.q + tm.q) == (1, 3)
        assert tp.r2 <= min(tp.r, 8 - tp.r)
        assert tm.r2 <= min(tm.r, 10 - tm.r)


def test_brown_pairing():
    # Br2(T1) + Br2(T2) = -1 = 7 mod 8 for every pair
    for pair in enumerate_ascending_t_pairs():
        total = 0
        for l in (pair.witness_plus, pair.witness_minus):
            f2 = forms.p_part(forms.discriminant_form(l), 2)
            total += forms.brown(f2)
        assert total % 8 == 7, pair.table_ref


def test_s_pairs_table2():
    # (nu_i = 0, o = -) -> (0, [6A2]_{sigma/3}); (3, +) -> (E6(2), 3A2(2)); (0, +) -> ([6<-6>]_{sigma/3}, 6A1)
    sp = s_pair(0, "-")
    assert sp.s_plus.rank == 0
    assert sp.s_minus.rank == 12 and abs(sp.s_minus.det()) == 81
    sp = s_pair(3, "+")
    # [3A2(2)]_{sigma/3} = E6(2), verified by genus (both are definite)
    assert stability.genus_tag(sp.s_plus) == stability.genus_tag(parse_lattice_expr("E6(2)"))
    assert sp.s_minus.expr == "3A2(2)"
    sp = s_pair(0, "+")
    assert sp.s_plus.rank == 6 and abs(sp.s_plus.det()) == 6**6 // 9
    assert sp.s_minus.expr == "6A1"
    with pytest.raises(ValueError):
        s_pair(4, "-")


def test_realize_first_pair():
    report = realize_pair(pair_by_ref("8B:1"))
    assert report["stage_a"] == report["stage_b"] == report["stage_c"] == "ok"


def test_realize_rejects_invalid_glue_map():
    from zlat.gluing import GlueMap

    pair = pair_by_ref("8B:4")  # T1 = <2>, T2 has 2-rank 2
    f1 = forms.p_part(forms.discriminant_form(pair.witness_plus), 2)
    f2 = forms.p_part(forms.discriminant_form(pair.witness_minus), 2)
    g1 = next(x for x in f1.elements() if any(x))
    bad = next(x for x in f2.elements() if any(x) and f2.q(x) != (2 - f1.q(g1)) % 2)
    with pytest.raises(ValueError, match="anti-isomorphism"):
        GlueMap(f1, f2, (g1,), (bad,))


def test_stage_a_genus_for_every_pair():
    t = parse_lattice_expr("U+U(3)+2A2+A1")
    for pair in enumerate_ascending_t_pairs()[:10]:
        glued, _phi = glue_t_pair(pair)
        assert stability.isomorphic_in_genus(glued, t) == "yes"


def test_all_table5_lattices_stable():
    for _tid, (p, rows) in golden.TABLE_5.items():
        for _d2, _rr2, cells in rows:
            for cell in cells:
                if cell in ("-", "*"):
                    continue
                assert stability.stability_certificate(parse_lattice_expr(cell)) is not None, cell
