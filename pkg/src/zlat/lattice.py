"""Even lattices: the value type, the named catalog, and structural constructions.

A Lattice wraps a square symmetric nondegenerate integer Gram matrix.
Semantic comparison (isomorphism in the genus) lives in `stability`;
equality here is basis-dependent on purpose.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .exact import Matrix


@dataclass(frozen=True)
class Lattice:
    gram: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None
    expr: str | None = field(default=None, compare=False)

    def __post_init__(self):
        g = self.gram_rows()
        if not exact.is_symmetric(g):
            raise ValueError("gram matrix not symmetric")
        if self.rank and exact.determinant(g) == 0:
            raise ValueError("degenerate gram matrix")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def gram_rows(self) -> Matrix:
        return [list(r) for r in self.gram]

    @property
    def is_even(self) -> bool:
        return all(self.gram[i][i] % 2 == 0 for i in range(self.rank))

    def det(self) -> int:
        return exact.determinant(self.gram_rows())

    def inner(self, x, y) -> int:
        g = self.gram
        return sum(x[i] * g[i][j] * y[j] for i in range(self.rank) for j in range(self.rank))

    def norm(self, x) -> int:
        return self.inner(x, x)

    def describe(self) -> str:
        return self.expr if self.expr else f"lattice(rank {self.rank})"


def make_lattice(gram: Matrix, expr: str | None = None, labels=None) -> Lattice:
    return Lattice(tuple(tuple(row) for row in gram), labels, expr)


@dataclass(frozen=True)
class SublatticeRef:
    ambient: Lattice
    basis_rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis_rows)

    def rows(self) -> Matrix:
        return [list(r) for r in self.basis_rows]

    def induced_gram(self) -> Matrix:
        b = self.rows()
        g = self.ambient.gram_rows()
        return exact.mat_mul(exact.mat_mul(b, g), exact.transpose(b))

    def as_lattice(self) -> Lattice:
        return make_lattice(self.induced_gram())


def sublattice(ambient: Lattice, rows: Matrix) -> SublatticeRef:
    if rows and exact.rank(rows) != len(rows):
        raise ValueError("dependent rows")
    return SublatticeRef(ambient, tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# named catalog

def _an_gram(n: int) -> Matrix:
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
        if i + 1 < n:
            g[i][i + 1] = g[i + 1][i] = 1
    return g


def _dn_gram(n: int) -> Matrix:
    # Dynkin D_n: chain 0-1-...-(n-2) with node n-1 attached to node n-3
    g = _an_gram(n)
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][n - 3] = g[n - 3][n - 1] = 1
    return g


def _en_gram(n: int) -> Matrix:
    # Dynkin E_n: chain 0-1-...-(n-2) with node n-1 attached to node 2
    g = _an_gram(n)
    g[n - 1][n - 2] = g[n - 2][n - 1] = 0
    g[n - 1][2] = g[2][n - 1] = 1
    return g


def named(spec: str) -> Lattice:
    """Catalog lattice by name: U, An (n>=1), Dn (n>=4), E6/E7/E8, <n> (n != 0)."""
    spec = spec.strip()
    if spec == "U":
        return make_lattice([[0, 1], [1, 0]], "U")
    m = re.fullmatch(r"A(\d+)", spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ValueError(f"unknown lattice name {spec!r}")
        return make_lattice(_an_gram(n), spec)
    m = re.fullmatch(r"D(\d+)", spec)
    if m:
        n = int(m.group(1))
        if n < 4:
            raise ValueError(f"unknown lattice name {spec!r}")
        return make_lattice(_dn_gram(n), spec)
    m = re.fullmatch(r"E([678])", spec)
    if m:
        return make_lattice(_en_gram(int(m.group(1))), spec)
    m = re.fullmatch(r"<(-?\d+)>", spec)
    if m:
        n = int(m.group(1))
        if n == 0:
            raise ValueError("rank-1 lattice <0> is degenerate")
        return make_lattice([[n]], spec)
    raise ValueError(f"unknown lattice name {spec!r}")


def direct_sum(*lattices: Lattice) -> Lattice:
    parts = [l for l in lattices if l.rank > 0]
    n = sum(l.rank for l in parts)
    g = [[0] * n for _ in range(n)]
    off = 0
    for l in parts:
        for i in range(l.rank):
            for j in range(l.rank):
                g[off + i][off + j] = l.gram[i][j]
        off += l.rank
    expr = "+".join(l.expr for l in parts) if all(l.expr for l in parts) else None
    return make_lattice(g, expr)


EMPTY = make_lattice([], "0")


def rescale(l: Lattice, n: int) -> Lattice:
    if n == 0:
        raise ValueError("scale factor must be nonzero")
    g = [[n * x for x in row] for row in l.gram_rows()]
    expr = None
    if l.expr and n != 1:
        expr = f"{l.expr}({n})" if "+" not in l.expr else f"({l.expr})({n})"
    elif n == 1:
        expr = l.expr
    return make_lattice(g, expr)


def signature(l: Lattice) -> tuple[int, int]:
    np_, nz, nm = exact.inertia(l.gram_rows())
    if nz:
        raise ValueError("degenerate lattice")
    return np_, nm


def is_hyperbolic(l: Lattice) -> bool:
    return hyperbolic_branch(l) is not None


def hyperbolic_branch(l: Lattice) -> str | None:
    """Which reading of "hyperbolic" fired: "strict" (n+ = 1) or "abuse" (n- = 0)."""
    np_, nm = signature(l)
    if np_ == 1:
        return "strict"
    if nm == 0:
        return "abuse"
    return None


# ---------------------------------------------------------------------------
# overlattices and fractional extensions

def overlattice(l: Lattice, extra_frac_rows) -> Lattice:
    """Lattice generated by l and the given rational vectors (coords in l's basis).

    The result is recomputed on a canonical HNF basis.  Raises when the
    generated lattice is not integral or not even.
    """
    n = l.rank
    frac_rows = [[Fraction(x) for x in row] for row in extra_frac_rows]
    all_rows = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)] + frac_rows
    int_rows, den = exact.clear_denominators(all_rows)
    h = exact.hermite_normal_form(int_rows)
    if len(h) != n:
        raise ValueError("overlattice generators do not span")
    basis = [[Fraction(x, den) for x in row] for row in h]
    g0 = exact.frac_matrix(l.gram_rows())
    gram_f = exact.frac_mat_mul(exact.frac_mat_mul(basis, g0), [list(c) for c in zip(*basis)])
    gram = []
    for i, row in enumerate(gram_f):
        out_row = []
        for j, x in enumerate(row):
            if x.denominator != 1:
                raise ValueError("overlattice is not integral")
            out_row.append(int(x))
        gram.append(out_row)
    for i in range(n):
        if gram[i][i] % 2 != 0:
            raise ValueError("overlattice is not even")
    return make_lattice(gram)


def extension_by_fraction(l: Lattice, v, d: int) -> Lattice:
    """The index-d extension [l]_{v/d} obtained by adjoining v/d.

    Preconditions (each checked, error names the failed divisibility):
    v in l not divisible by d; v.x = 0 mod d for all x; v^2 = 0 mod 2*d^2.
    """
    if d < 2:
        raise ValueError("denominator must be >= 2")
    if all(c % d == 0 for c in v):
        raise ValueError(f"vector is divisible by {d} in the lattice")
    g = l.gram_rows()
    prods = exact.mat_mul([list(v)], g)[0]
    for j, p in enumerate(prods):
        if p % d != 0:
            raise ValueError(f"product with basis vector {j} is {p}, not divisible by {d}")
    nv = l.norm(list(v))
    if nv % (d * d) != 0:
        raise ValueError(f"square {nv} is not divisible by {d * d}")
    if nv % (2 * d * d) != 0:
        raise ValueError(f"square {nv} is not divisible by {2 * d * d} (evenness)")
    out = overlattice(l, [[Fraction(c, d) for c in v]])
    return out


# ---------------------------------------------------------------------------
# sublattice constructions

def orthogonal_complement(sub: SublatticeRef) -> SublatticeRef:
    """Saturated basis of {x in ambient : x.y = 0 for all y in sub}."""
    amb = sub.ambient
    if sub.rank == 0:
        return sublattice(amb, exact.identity(amb.rank))
    m = exact.mat_mul(amb.gram_rows(), exact.transpose(sub.rows()))
    ker = exact.integer_kernel(m)
    return sublattice(amb, ker)


def primitive_closure(sub: SublatticeRef) -> SublatticeRef:
    if sub.rank == 0:
        return sub
    return sublattice(sub.ambient, exact.saturate(sub.rows()))


def is_divisible_by(l: Lattice, p: int) -> bool:
    return all(x % p == 0 for row in l.gram for x in row)


def divide(l: Lattice, p: int) -> Lattice:
    if not is_divisible_by(l, p):
        raise ValueError(f"lattice not divisible by {p}")
    return make_lattice([[x // p for x in row] for row in l.gram_rows()])


# ---------------------------------------------------------------------------
# expression grammar
#
#   expr := term ('+' term)* ; term := [UINT] atom [ '(' INT ')' ]
#   atom := 'U' | 'A'UINT | 'D'UINT | 'E'UINT | '<' INT '>'

_TOKEN = re.compile(r"\s*(\d+|[UADE]|<-?\d+>|[+()]|-)")


class ExprError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} at position {pos}")
        self.pos = pos


def parse_lattice_expr(text: str) -> Lattice:
    """Evaluate a lattice expression like "U(3)+2A2+A1" or "<2>+3<-6>"."""
    pos = 0
    n = len(text)
    terms: list[Lattice] = []

    def skip_ws():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def parse_uint() -> int | None:
        nonlocal pos
        start = pos
        while pos < n and text[pos].isdigit():
            pos += 1
        return int(text[start:pos]) if pos > start else None

    def parse_atom() -> Lattice:
        nonlocal pos
        if pos >= n:
            raise ExprError("expected lattice atom", pos)
        ch = text[pos]
        if ch == "U":
            pos += 1
            return named("U")
        if ch in "ADE":
            pos += 1
            idx = parse_uint()
            if idx is None:
                raise ExprError(f"expected index after '{ch}'", pos)
            try:
                return named(f"{ch}{idx}")
            except ValueError as e:
                raise ExprError(str(e), pos) from None
        if ch == "<":
            pos += 1
            neg = False
            if pos < n and text[pos] == "-":
                neg = True
                pos += 1
            val = parse_uint()
            if val is None:
                raise ExprError("expected integer inside <>", pos)
            if pos >= n or text[pos] != ">":
                raise ExprError("expected '>'", pos)
            pos += 1
            if val == 0:
                raise ExprError("<0> is degenerate", pos)
            return named(f"<{-val if neg else val}>")
        raise ExprError(f"unexpected character {ch!r}", pos)

    def parse_term() -> Lattice:
        nonlocal pos
        skip_ws()
        count = parse_uint()
        if count is not None and count == 0:
            raise ExprError("zero repetition count", pos)
        atom = parse_atom()
        if pos < n and text[pos] == "(":
            pos += 1
            neg = False
            if pos < n and text[pos] == "-":
                neg = True
                pos += 1
            scale = parse_uint()
            if scale is None:
                raise ExprError("expected scale integer", pos)
            if pos >= n or text[pos] != ")":
                raise ExprError("expected ')'", pos)
            pos += 1
            scale = -scale if neg else scale
            if scale == 0:
                raise ExprError("zero scale", pos)
            atom = rescale(atom, scale)
        reps = count if count is not None else 1
        return direct_sum(*([atom] * reps))

    skip_ws()
    if pos >= n:
        raise ExprError("empty expression", 0)
    terms.append(parse_term())
    skip_ws()
    while pos < n:
        if text[pos] != "+":
            raise ExprError(f"unexpected character {text[pos]!r}", pos)
        pos += 1
        terms.append(parse_term())
        skip_ws()
    result = direct_sum(*terms)
    return make_lattice(result.gram_rows(), render_expr(text))


def render_expr(text: str) -> str:
    return re.sub(r"\s+", "", text)
