"""Golden fixtures: the published classification tables, transcribed once.

These are compared against computed content by invariants and genus, never
by literal Gram matrices (direct-sum presentations are not unique).  Known
misprints in the source tables are listed in KNOWN_DISCREPANCIES and
whitelisted by the diff machinery.
"""

# Table 8A: the six irreversible ascending pairs.
# (delta2, (r, r2), (p, q), (r', r2'), (p', q'), T1, T2)
TABLE_8A = [
    (0, (8, 0), (0, 3), (1, 1), (1, 0), "U+3A2", "<6>"),
    (1, (7, 1), (0, 2), (2, 2), (1, 1), "U+2A2+A1", "<6>+<-6>"),
    (0, (6, 2), (1, 1), (3, 3), (0, 2), "U(3)+D4", "<6>+A2(2)"),
    (1, (6, 2), (0, 1), (3, 3), (1, 2), "U+A2+2A1", "<6>+2<-6>"),
    (1, (5, 3), (0, 0), (4, 4), (1, 3), "U+3A1", "<6>+3<-6>"),
    (1, (5, 3), (1, 0), (4, 4), (0, 3), "<6>+D4", "<2>+3<-6>"),
]

# Table 8B: reversible pairs with o = - (p = 0).  ((r, r2), q, delta2, T1, T2)
TABLE_8B = [
    ((2, 0), 0, 0, "U", "U(3)+2A2+A1"),
    ((4, 0), 1, 0, "U+A2", "U(3)+A2+A1"),
    ((6, 0), 2, 0, "U+2A2", "U(3)+A1"),
    ((1, 1), 0, 1, "<2>", "U(3)+2A2+2A1"),
    ((3, 1), 0, 1, "U+A1", "<6>+<-6>+2A2"),
    ((3, 1), 1, 1, "U+<-6>", "U(3)+A2+2A1"),
    ((5, 1), 1, 1, "U+A2+A1", "<6>+<-6>+A2"),
    ((5, 1), 2, 1, "<2>+2A2", "U(3)+2A1"),
    ((7, 1), 3, 1, "<2>+3A2", "<6>+A1"),
    ((2, 2), 0, 0, "U(2)", "<6>+2A2+<-6>+A1"),
    ((2, 2), 0, 1, "<2>+A1", "<6>+2A2+<-6>+A1"),
    ((2, 2), 1, 1, "<2>+<-6>", "<6>+2A2+2A1"),
    ((4, 2), 2, 1, "U+2A1", "<6>+2<-6>+A2"),
    ((4, 2), 1, 0, "U(2)+A2", "<6>+<-6>+A2+A1"),
    ((4, 2), 1, 1, "<2>+A2+A1", "<6>+<-6>+A2+A1"),
    ((4, 2), 2, 1, "U+2<-6>", "U(3)+3A1"),
    ((4, 2), 3, 0, "U(3)+A2(2)", "U+A2(2)+A1"),
    ((6, 2), 2, 0, "U(2)+2A2", "<6>+<-6>+A1"),
    ((6, 2), 2, 1, "U+A2+<-6>+A1", "<6>+<-6>+A1"),
    ((6, 2), 3, 1, "<2>+2A2+<-6>", "<6>+2A1"),
    ((3, 3), 2, 1, "<2>+2A1", "<6>+2<-6>+A2+A1"),
    ((3, 3), 1, 1, "<2>+<-6>+A1", "<6>+<-6>+A2+2A1"),
    ((3, 3), 2, 1, "<2>+2<-6>", "U(3)+4A1"),
    ((5, 3), 1, 1, "<2>+A2+2A1", "<6>+2<-6>+A1"),
    ((5, 3), 2, 1, "<2>+A2+<-6>+A1", "<6>+<-6>+2A1"),
    ((5, 3), 3, 1, "U+3<-6>", "<6>+3A1"),
    ((4, 4), 0, 1, "<2>+3A1", "<6>+3<-6>+A1"),
    ((4, 4), 1, 1, "<2>+<-6>+2A1", "<6>+2<-6>+2A1"),
    ((4, 4), 2, 1, "<2>+2<-6>+A1", "<6>+<-6>+3A1"),
    ((4, 4), 3, 1, "<2>+3<-6>", "<6>+4A1"),
    ((4, 4), 3, 0, "U(6)+A2(2)", "<6>+4A1"),
]

# Table 8C: reversible pairs with o = + (p = 1), partners of 8B row-for-row.
# ((r, r2), T1, T2)
TABLE_8C = [
    ((6, 0), "U(3)+2A2", "U+A1"),
    ((4, 0), "U(3)+A2", "U+A2+A1"),
    ((2, 0), "U(3)", "U+3A2"),
    ((7, 1), "<6>+3A2", "<2>+A1"),
    ((5, 1), "U(3)+A2+<-6>", "U+2A1"),
    ((5, 1), "U(3)+A2+A1", "U+<-6>+A1"),
    ((3, 1), "U(3)+<-6>", "U+A2+2A1"),
    ((3, 1), "<6>+A2", "<2>+2A2+A1"),
    ((1, 1), "<6>", "U+2A2+A1+<-6>"),
    ((6, 2), "U(6)+2A2", "<2>+2A1"),
    ((6, 2), "U(3)+A2+A1+<-6>", "<2>+2A1"),
    ((6, 2), "<6>+2A2+A1", "<2>+A1+<-6>"),
    ((4, 2), "U(3)+2<-6>", "U+3A1"),
    ((4, 2), "U(6)+A2", "<2>+A2+2A1"),
    ((4, 2), "<6>+A2+<-6>", "<2>+A2+2A1"),
    ((4, 2), "<6>+A2+A1", "<2>+<-6>+A2+A1"),
    ((4, 2), "U+A2(2)", "U(3)+A2(2)+A1"),
    ((2, 2), "U(6)", "U+A2+2A1+<-6>"),
    ((2, 2), "<6>+<-6>", "U+A2+2A1+<-6>"),
    ((2, 2), "<6>+A1", "<2>+2A2+A1+<-6>"),
    ((5, 3), "<6>+A2+2<-6>", "<2>+3A1"),
    ((5, 3), "<6>+A2+A1+<-6>", "<2>+2A1+<-6>"),
    ((5, 3), "<6>+A2+2A1", "<2>+A1+2<-6>"),
    ((3, 3), "<6>+2<-6>", "U+<-6>+3A1"),
    ((3, 3), "<6>+A1+<-6>", "<2>+A2+2A1+<-6>"),
    ((3, 3), "<6>+2A1", "<2>+2<-6>+A2+A1"),
    ((4, 4), "<6>+3<-6>", "<2>+4A1"),
    ((4, 4), "<6>+A1+2<-6>", "<2>+3A1+<-6>"),
    ((4, 4), "<6>+<-6>+2A1", "<2>+2A1+2<-6>"),
    ((4, 4), "<6>+3A1", "<2>+A1+3<-6>"),
    ((4, 4), "U(2)+A2(2)", "<2>+A1+3<-6>"),
]

# Tables 1A-C: the golden IDs, row-aligned with 8A-C.
# 1A: (simple, nuR, o, complete, type); 1B/1C: (simple, nuR, complete, type)
TABLE_1A = [
    ("1<4>", 0, "-", "1<4>", "I"),
    ("1<3>", 1, "-", "1_1<3>", "II"),
    ("1<2>", 1, "+", "1<1_1+1>", "I"),
    ("1<2>", 2, "-", "1_2<2>", "II"),
    ("1<1>", 3, "-", "1_3<1>", "II"),
    ("1<1>", 0, "+", "1<1>", "II"),
]

TABLE_1B = [
    ("3+1<1>", 3, "3_1+1<1>", "I"),
    ("2+1<2>", 2, "2_1+1<2>", "I"),
    ("1+1<3>", 1, "1_1+1<3>", "I"),
    ("4", 3, "3_1+1", "II"),
    ("2+1<1>", 3, "2_1+1_1<1>", "II"),
    ("2+1<1>", 2, "2_1+1<1>", "II"),
    ("1+1<2>", 2, "1_1+1_1<2>", "II"),
    ("1+1<2>", 1, "1_1+1<2>", "II"),
    ("1<3>", 0, "1<3>", "II"),
    ("3", 3, "3_1", "I"),
    ("3", 3, "3_1", "II"),
    ("3", 2, "2_1+1", "II"),
    ("1+1<1>", 3, "1_1+1_2<1>", "II"),
    ("1+1<1>", 2, "1_1+1_1<1>", "I"),
    ("1+1<1>", 2, "1_1+1_1<1>", "II"),
    ("1+1<1>", 1, "1_1+1<1>", "II"),
    ("1<1<1>>", 0, "1<1<1>>", "I"),
    ("1<2>", 1, "1_1<2>", "I"),
    ("1<2>", 1, "1_1<2>", "II"),
    ("1<2>", 0, "1<2>", "II"),
    ("2", 3, "1_2+1_1", "II"),
    ("2", 2, "2_1", "II"),
    ("2", 1, "1_1+1", "II"),
    ("1<1>", 2, "1_2<1>", "II"),
    ("1<1>", 1, "1_1<1>", "II"),
    ("1<1>", 0, "1<1>", "II"),
    ("1", 3, "1_3", "II"),
    ("1", 2, "1_2", "II"),
    ("1", 1, "1_1", "II"),
    ("1", 0, "1", "II"),
    ("0", 0, "0", "II"),
]

TABLE_1C = [
    ("1+1<3>", 3, "1+1<3_1>", "I"),
    ("2+1<2>", 2, "2+1<2_1>", "I"),
    ("3+1<1>", 1, "3+1<1_1>", "I"),
    ("1<3>", 3, "1<3_1>", "II"),
    ("1+1<2>", 3, "1+1_-1<2_1>", "II"),
    ("1+1<2>", 2, "1+1<2_1>", "II"),
    ("2+1<1>", 2, "2+1_-1<1_1>", "II"),
    ("2+1<1>", 1, "2+1<1_1>", "II"),
    ("4", 0, "4", "II"),
    ("1<2>", 3, "1_-1<2_1>", "I"),
    ("1<2>", 3, "1_-1<2_1>", "II"),
    ("1<2>", 2, "1<2_1>", "II"),
    ("1+1<1>", 3, "1+1_-2<1_1>", "II"),
    ("1+1<1>", 2, "1+1_-1<1_1>", "I"),
    ("1+1<1>", 2, "1+1_-1<1_1>", "II"),
    ("1+1<1>", 1, "1+1<1_1>", "II"),
    ("1<1<1>>", 0, "1<1<1>>", "I"),
    ("3", 1, "1_-1+2", "I"),
    ("3", 1, "1_-1+2", "II"),
    ("3", 0, "3", "II"),
    ("1<1>", 3, "1_-2<1_1>", "II"),
    ("1<1>", 2, "1_-1<1_1>", "II"),
    ("1<1>", 1, "1<1_1>", "II"),
    ("2", 2, "1_-2+1", "II"),
    ("2", 1, "1_-1+1", "II"),
    ("2", 0, "2", "II"),
    ("1", 3, "1_-3", "II"),
    ("1", 2, "1_-2", "II"),
    ("1", 1, "1_-1", "II"),
    ("1", 0, "1", "II"),
    ("0", 0, "0", "II"),
]

# Table 2: the S-pairs.  (o, nu_i, S+ spec, S- spec); ("ext", e) is the
# index-3 master-element extension of the lattice expression e.
TABLE_2 = [
    ("-", 0, ("plain", "0"), ("ext", "6A2")),
    ("-", 1, ("plain", "A2(2)"), ("ext", "4A2+A2(2)")),
    ("-", 2, ("plain", "2A2(2)"), ("ext", "2A2+2A2(2)")),
    ("-", 3, ("plain", "3A2(2)"), ("ext", "3A2(2)")),
    ("+", 0, ("ext", "6<-6>"), ("plain", "6A1")),
    ("+", 1, ("ext", "4<-6>+A2(2)"), ("plain", "4A1+A2(2)")),
    ("+", 2, ("ext", "2<-6>+2A2(2)"), ("plain", "2A1+2A2(2)")),
    ("+", 3, ("ext", "3A2(2)"), ("plain", "3A2(2)")),
]

# Tables 3A-B: the (r, r2) geography.  Row groups with their delta2 options.
TABLE_3A = [
    ([(2, 0), (4, 0), (6, 0), (8, 0)], (0,)),
    ([(1, 1), (3, 1), (5, 1), (7, 1)], (1,)),
    ([(3, 3), (5, 3)], (1,)),
    ([(2, 2), (4, 2), (6, 2), (4, 4)], (0, 1)),
]

TABLE_3B = [
    ([(7, 1), (5, 1), (3, 1), (1, 1)], (1,)),
    ([(8, 2), (6, 2), (4, 2), (2, 2)], (1,)),
    ([(6, 4), (4, 4)], (1,)),
    ([(7, 3), (5, 3), (3, 3), (5, 5)], (1,)),
]

# Table 4: admissible invariants.  (delta2 options, (r, r2), [(p, q)...]);
# the complementary columns are (9-r, r2+1), (1-p, 3-q) position by position.
TABLE_4 = [
    ((0,), (2, 0), [(0, 0), (1, 1)]),
    ((0,), (4, 0), [(0, 1), (1, 2)]),
    ((0,), (6, 0), [(0, 2), (1, 3)]),
    ((0,), (8, 0), [(0, 3)]),
    ((1,), (1, 1), [(0, 0), (1, 0)]),
    ((1,), (3, 1), [(0, 0), (0, 1), (1, 1), (1, 2)]),
    ((1,), (5, 1), [(0, 1), (0, 2), (1, 2), (1, 3)]),
    ((1,), (7, 1), [(0, 2), (0, 3), (1, 3)]),
    ((0, 1), (2, 2), [(0, 0), (1, 1)]),
    ((1,), (2, 2), [(0, 1), (1, 0)]),
    ((0,), (4, 2), [(0, 3), (1, 0)]),
    ((0, 1), (4, 2), [(0, 1), (1, 2)]),
    ((1,), (4, 2), [(0, 0), (0, 2), (1, 1), (1, 3)]),
    ((0,), (6, 2), [(1, 1)]),
    ((0, 1), (6, 2), [(0, 2), (1, 3)]),
    ((1,), (6, 2), [(0, 1), (0, 3), (1, 2)]),
    ((1,), (3, 3), [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]),
    ((1,), (5, 3), [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 1), (1, 2), (1, 3)]),
    ((0, 1), (4, 4), [(0, 3), (1, 0)]),
    ((1,), (4, 4), [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3)]),
]

# Tables 5A-J: T-half witnesses per invariant cell.  Each table:
# (p, [(delta2 | None, (r, r2), [cell for q = 0..3])]); cells are a lattice
# expression, "-" (the half itself is forbidden) or "*" (the complement is).
TABLE_5 = {
    "5A": (0, [
        (0, (2, 0), ["U", "-", "-", "-"]),
        (0, (4, 0), ["-", "U+A2", "-", "-"]),
        (0, (6, 0), ["-", "-", "U+2A2", "-"]),
        (0, (8, 0), ["-", "-", "-", "U+3A2"]),
    ]),
    "5B": (1, [
        (0, (2, 0), ["-", "U(3)", "-", "-"]),
        (0, (4, 0), ["-", "-", "U(3)+A2", "-"]),
        (0, (6, 0), ["-", "-", "-", "U(3)+2A2"]),
        (0, (8, 0), ["U+E6", "-", "-", "-"]),
    ]),
    "5C": (0, [
        (1, (1, 1), ["<2>", "-", "-", "-"]),
        (1, (3, 1), ["U+A1", "<2>+A2", "-", "-"]),
        (1, (5, 1), ["-", "U+A2+A1", "<2>+2A2", "-"]),
        (1, (7, 1), ["-", "-", "U+2A2+A1", "<2>+3A2"]),
    ]),
    "5D": (1, [
        (1, (1, 1), ["<6>", "-", "-", "-"]),
        (1, (3, 1), ["-", "<6>+A2", "U(3)+<-6>", "-"]),
        (1, (5, 1), ["-", "-", "<6>+2A2", "U(3)+A2+<-6>"]),
        (1, (7, 1), ["*", "-", "-", "<6>+3A2"]),
    ]),
    "5E": (0, [
        (0, (2, 2), ["U(2)", "-", "-", "-"]),
        (1, (2, 2), ["<2>+A1", "<2>+<-6>", "-", "-"]),
        (0, (4, 2), ["-", "U(2)+A2", "-", "U(3)+A2(2)"]),
        (1, (4, 2), ["U+2A1", "U+A1+<-6>", "U+2<-6>", "-"]),
        (0, (6, 2), ["*", "-", "U(2)+2A2", "-"]),
        (1, (6, 2), ["-", "U+A2+2A1", "U+A2+<-6>+A1", "U+A2+2<-6>"]),
        (1, (8, 2), ["-", "-", "*", "<2>+3A2+A1"]),
    ]),
    "5F": (1, [
        (0, (2, 2), ["-", "U(6)", "-", "-"]),
        (1, (2, 2), ["<6>+A1", "<6>+<-6>", "-", "-"]),
        (0, (4, 2), ["U+A2(2)", "-", "U(6)+A2", "-"]),
        (1, (4, 2), ["-", "U(3)+2A1", "U(3)+A1+<-6>", "U(3)+2<-6>"]),
        (0, (6, 2), ["-", "U(3)+D4", "-", "U(6)+2A2"]),
        (1, (6, 2), ["*", "-", "U(3)+A2+2A1", "U(3)+A2+A1+<-6>"]),
        (1, (8, 2), ["*", "*", "-", "U(3)+2A2+2A1"]),
    ]),
    "5G": (0, [
        (1, (3, 3), ["<2>+2A1", "<2>+A1+<-6>", "<2>+2<-6>", "-"]),
        (1, (5, 3), ["U+3A1", "U+2A1+<-6>", "U+A1+2<-6>", "U+3<-6>"]),
        (1, (5, 5), ["U(2)+3A1", "U(2)+2A1+<-6>", "U(2)+A1+2<-6>", "U(2)+3<-6>"]),
        (1, (7, 3), ["*", "*", "U+A2+<-6>+2A1", "U+A2+2<-6>+A1"]),
    ]),
    "5H": (1, [
        (1, (3, 3), ["<6>+2A1", "<6>+A1+<-6>", "<6>+2<-6>", "-"]),
        (1, (5, 3), ["<6>+D4", "U(3)+3A1", "U(3)+2A1+<-6>", "U(3)+A1+2<-6>"]),
        (1, (5, 5), ["<6>+4A1", "U(6)+3A1", "U(6)+2A1+<-6>", "U(6)+A1+2<-6>"]),
        (1, (7, 3), ["*", "*", "U(3)+A2+3A1", "U(3)+A2+<-6>+2A1"]),
    ]),
    "5I": (0, [
        (0, (4, 4), ["-", "-", "-", "U(6)+A2(2)"]),
        (1, (4, 4), ["<2>+3A1", "<2>+2A1+<-6>", "<2>+A1+2<-6>", "<2>+3<-6>"]),
        (1, (6, 4), ["*", "U+<-6>+3A1", "U+2<-6>+A1", "U+3<-6>+A1"]),
    ]),
    "5J": (1, [
        (0, (4, 4), ["U(2)+A2(2)", "-", "-", "-"]),
        (1, (4, 4), ["<6>+3A1", "<6>+<-6>+2A1", "<6>+2<-6>+A1", "<6>+3<-6>"]),
        (1, (6, 4), ["*", "U(3)+4A1", "U(3)+<-6>+3A1", "U(3)+2<-6>+2A1"]),
    ]),
}

# Tables 7A-B: all ascending pairs as printed.  (delta2, (r, r2), q, T+, T-)
TABLE_7A = [
    (0, (2, 0), 0, "U", "U(3)+2A2+A1"),
    (0, (4, 0), 1, "U+A2", "U(3)+A2+A1"),
    (0, (6, 0), 2, "U+2A2", "U(3)+A1"),
    (0, (8, 0), 3, "U+3A2", "<6>"),
    (1, (1, 1), 0, "<2>", "U(3)+2A2+2A1"),
    (1, (3, 1), 0, "U+A1", "<6>+<-6>+2A2"),
    (1, (3, 1), 1, "U+<-6>", "U(3)+A2+2A1"),
    (1, (5, 1), 1, "U+A2+A1", "<6>+<-6>+A2"),
    (1, (5, 1), 2, "<2>+2A2", "U(3)+2A1"),
    (1, (7, 1), 2, "U+2A2+A1", "<6>+<-6>"),
    (1, (7, 1), 3, "<2>+3A2", "<6>+A1"),
    (0, (2, 2), 0, "U(2)", "<6>+<-6>+2A2+A1"),
    (1, (2, 2), 0, "<2>+A1", "<6>+<-6>+2A2+A1"),
    (1, (2, 2), 1, "<2>+<-6>", "<6>+2A2+2A1"),
    (0, (4, 2), 3, "U(3)+A2(2)", "U+A2(2)+A1"),
    (1, (4, 2), 0, "U+2A1", "<6>+2<-6>+A2"),
    (1, (4, 2), 1, "<2>+A2+A1", "<6>+<-6>+A2+A1"),
    (1, (4, 2), 2, "U+2<-6>", "U(3)+3A1"),
    (0, (4, 2), 1, "U(2)+A2", "<6>+<-6>+A2+A1"),
    (0, (6, 2), 2, "U(2)+2A2", "<6>+<-6>+A1"),
    (1, (6, 2), 2, "U+A2+<-6>+A1", "<6>+<-6>+A1"),
    (1, (6, 2), 3, "<2>+2A2+<-6>", "<6>+2A1"),
    (1, (6, 2), 1, "U+A2+2A1", "<6>+2<-6>"),
    (1, (3, 3), 0, "<2>+2A1", "<6>+2<-6>+A2+A1"),
    (1, (3, 3), 1, "<2>+A1+<-6>", "<6>+<-6>+A2+2A1"),
    (1, (3, 3), 2, "<2>+2<-6>", "U(3)+4A1"),
    (1, (5, 3), 3, "U+3<-6>", "<6>+3A1"),
    (1, (5, 3), 2, "<2>+A2+A1+<-6>", "<6>+<-6>+2A1"),
    (1, (5, 3), 1, "<2>+A2+2A1", "<6>+2<-6>+A1"),
    (1, (5, 3), 0, "U+3A1", "<6>+3<-6>"),
    (1, (4, 4), 0, "<2>+3A1", "<6>+3<-6>+A1"),
    (1, (4, 4), 1, "<2>+2A1+<-6>", "<6>+2<-6>+A1"),
    (1, (4, 4), 2, "<2>+A1+2<-6>", "<6>+<-6>+3A1"),
    (1, (4, 4), 3, "<2>+3<-6>", "<6>+4A1"),
    (0, (4, 4), 3, "U(6)+A2(2)", "<6>+4A1"),
]

TABLE_7B = [
    (0, (2, 0), 1, "U(3)", "U+3A2"),
    (0, (4, 0), 2, "U(3)+A2", "U+A2+A1"),
    (0, (6, 0), 3, "U(3)+2A2", "U+A1"),
    (1, (1, 1), 0, "<6>", "U+2A2+A1+<-6>"),
    (1, (3, 1), 1, "<6>+A2", "<2>+2A2+A1"),
    (1, (3, 1), 2, "U(3)+<-6>", "U+A2+2A1"),
    (1, (5, 1), 2, "U(3)+A2+A1", "U+<-6>+A1"),
    (1, (5, 1), 3, "U(3)+A2+<-6>", "U+2A1"),
    (1, (7, 1), 3, "<6>+3A2", "<2>+A1"),
    (0, (2, 2), 1, "U(6)", "U(2)+2A2+A1"),
    (1, (2, 2), 1, "<6>+<-6>", "U+A2+2A1+<-6>"),
    (1, (2, 2), 0, "<6>+A1", "<2>+2A2+A1+<-6>"),
    (0, (4, 2), 0, "U+A2(2)", "U(3)+A2(2)+A1"),
    (0, (4, 2), 2, "U(6)+A2", "U(2)+A2+A1"),
    (1, (4, 2), 2, "<6>+A2+<-6>", "<2>+A2+2A1"),
    (1, (4, 2), 1, "<6>+A2+A1", "<2>+<-6>+A2+A1"),
    (1, (4, 4), 3, "<6>+3<-6>", "<2>+4A1"),
    (1, (4, 2), 3, "U(3)+2<-6>", "U+3A1"),
    (0, (6, 2), 3, "U(6)+2A2", "U(2)+A1"),
    (0, (6, 2), 1, "U(3)+D4", "<6>+A2(2)"),
    (1, (6, 2), 2, "<6>+2A2+A1", "<2>+A1+<-6>"),
    (1, (6, 2), 3, "U(3)+A2+A1+<-6>", "<2>+2A1"),
    (1, (3, 3), 0, "<6>+2A1", "<2>+2<-6>+A2+A1"),
    (1, (3, 3), 1, "<6>+A1+<-6>", "<2>+A2+2A1+<-6>"),
    (1, (3, 3), 2, "<6>+2<-6>", "U+<-6>+3A1"),
    (1, (5, 3), 0, "<6>+D4", "<6>+A2(2)+<-6>"),
    (1, (5, 3), 1, "<6>+A2+2A1", "<2>+A1+2<-6>"),
    (1, (5, 3), 3, "<6>+A2+2<-6>", "<2>+3A1"),
    (1, (5, 3), 2, "<6>+A2+A1+<-6>", "<2>+2A1+<-6>"),
    (1, (4, 4), 0, "<6>+3A1", "<2>+A1+3<-6>"),
    (1, (4, 4), 1, "<6>+<-6>+2A1", "<2>+2A1+2<-6>"),
    (1, (4, 4), 2, "<6>+A1+2<-6>", "<2>+3A1+<-6>"),
]

# Documented misprints in the source tables, keyed by (table, 1-based row):
# recomputed invariants from the printed expressions are authoritative.
KNOWN_DISCREPANCIES = {
    ("7B", None): "row (4,4) delta2=0 p=1 q=0 (U(2)+A2(2), <2>+A1+3<-6>) is omitted; the census has 68 pairs",
    ("7A", 32): "printed T- has rank 4; the partner of <2>+2A1+<-6> is <6>+2<-6>+2A1 (rank 5)",
    ("7B", 1): "printed T- = U+3A2 has rank 8; rank(T+) + rank(T-) = 9 forces U+2A2+A1",
    ("8B", 13): "printed q = 2, but U+2A1 has q = 0",
    ("8B", 21): "printed q = 2, but <2>+2A1 has q = 0",
    ("8C", 3): "printed T2 = U+3A2 has rank 8; the partner of (U+2A2, U(3)+A1) has T2 = U+2A2+A1",
    ("5B", 4): "prints the realizing lattice U+E6 where the complement is forbidden; the legend calls for *",
    ("5E", 7): "prints - at q = 0, but (8,2,1,0,0) passes every restriction (e.g. <2>+E7 realizes it); the complement is what fails, so the legend calls for *",
    ("5I", 3): "printed q=2 entry U+2<-6>+A1 has rank 5; the rank-6 cell needs U+2<-6>+2A1",
}
