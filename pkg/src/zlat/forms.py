"""Finite inner-product groups with quadratic refinement (enhanced groups).

A FiniteQuadraticForm is presented by generators of orders d_1 | ... | d_k
with a Q/Z-valued pairing matrix and Q/2Z-valued squares on the generators.
Elements are coefficient tuples mod the orders.

Values are always kept canonically reduced: squares into [0, 2), pairings
into [0, 1).
"""

from __future__ import annotations

import cmath
import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import exact
from .lattice import Lattice

GAUSS_TOL = 1e-6
GAUSS_SIZE_CAP = 10**6

Element = tuple[int, ...]


def _mod1(x: Fraction) -> Fraction:
    return x - (x.numerator // x.denominator)


def _mod2(x: Fraction) -> Fraction:
    f = _mod1(x / 2) * 2
    return f


@dataclass(frozen=True)
class FiniteQuadraticForm:
    orders: tuple[int, ...]
    bil: tuple[tuple[Fraction, ...], ...]
    quad: tuple[Fraction, ...]
    lifts: tuple[tuple[Fraction, ...], ...] | None = field(default=None, compare=False)

    @property
    def ngens(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        n = 1
        for d in self.orders:
            n *= d
        return n

    def reduce(self, x) -> Element:
        return tuple(int(c) % d for c, d in zip(x, self.orders))

    def zero(self) -> Element:
        return (0,) * self.ngens

    def add(self, x, y) -> Element:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.orders))

    def neg(self, x) -> Element:
        return tuple((-a) % d for a, d in zip(x, self.orders))

    def smul(self, n: int, x) -> Element:
        return tuple((n * a) % d for a, d in zip(x, self.orders))

    def elements(self):
        return itertools.product(*[range(d) for d in self.orders])

    def element_order(self, x) -> int:
        o = 1
        for c, d in zip(x, self.orders):
            if c % d:
                od = d // math.gcd(c, d)
                o = o * od // math.gcd(o, od)
        return o

    def b(self, x, y) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                row = self.bil[i]
                for j, yj in enumerate(y):
                    if yj:
                        total += xi * yj * row[j]
        return _mod1(total)

    def q(self, x) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                total += xi * xi * self.quad[i]
                row = self.bil[i]
                for j in range(i + 1, self.ngens):
                    if x[j]:
                        total += 2 * xi * x[j] * row[j]
        return _mod2(total)

    def lift_vector(self, x):
        """Rational coordinates in the source lattice basis (when lifts are recorded)."""
        if self.lifts is None:
            raise ValueError("form carries no lattice lifts")
        n = len(self.lifts[0]) if self.lifts else 0
        out = [Fraction(0)] * n
        for c, lift in zip(x, self.lifts):
            if c:
                for j in range(n):
                    out[j] += c * lift[j]
        return out

    def is_nondegenerate(self) -> bool:
        gens = [tuple(int(i == j) for j in range(self.ngens)) for i in range(self.ngens)]
        for x in self.elements():
            if any(x) and all(self.b(x, g) == 0 for g in gens):
                return False
        return True


TRIVIAL_FORM = FiniteQuadraticForm((), (), ())


def form_on_generators(orders, bil, quad, lifts=None) -> FiniteQuadraticForm:
    orders = tuple(int(d) for d in orders)
    bil_t = tuple(tuple(_mod1(Fraction(x)) for x in row) for row in bil)
    quad_t = tuple(_mod2(Fraction(x)) for x in quad)
    lifts_t = tuple(tuple(Fraction(x) for x in row) for row in lifts) if lifts else None
    return FiniteQuadraticForm(orders, bil_t, quad_t, lifts_t)


def discriminant_form(l: Lattice) -> FiniteQuadraticForm:
    """The discriminant L*/L with Q/Z pairing and Q/2Z quadratic refinement.

    Generators come from the Smith transform of the Gram matrix: the i-th
    generator lifts to (column i of V) / d_i, which makes all lifts
    deterministic.
    """
    if not l.is_even:
        raise ValueError("lattice is not even")
    g = l.gram_rows()
    n = l.rank
    if n == 0:
        return TRIVIAL_FORM
    _u, d, v = exact.smith_normal_form(g)
    cols = []
    orders = []
    for i in range(n):
        di = d[i][i]
        if di == 0:
            raise ValueError("degenerate lattice")
        if di > 1:
            orders.append(di)
            cols.append([v[k][i] for k in range(n)])
    # generator i lifts to col_i / d_i; pairings via one integer triple product
    bil = []
    quad = []
    gcols = [exact.mat_mul([c], g)[0] for c in cols]
    for i, ci in enumerate(cols):
        row = []
        for j, cj in enumerate(cols):
            numer = sum(gcols[i][k] * cj[k] for k in range(n))
            row.append(_mod1(Fraction(numer, orders[i] * orders[j])))
        bil.append(row)
        quad.append(_mod2(Fraction(sum(gcols[i][k] * ci[k] for k in range(n)),
                                   orders[i] * orders[i])))
    gens = [[Fraction(c, o) for c in col] for col, o in zip(cols, orders)]
    return form_on_generators(orders, bil, quad, gens)


def direct_sum_forms(*forms: FiniteQuadraticForm) -> FiniteQuadraticForm:
    orders = []
    quad = []
    lifts_ok = all(f.lifts is not None for f in forms) and forms
    widths = [len(f.lifts[0]) if f.lifts else 0 for f in forms] if lifts_ok else []
    for f in forms:
        orders.extend(f.orders)
        quad.extend(f.quad)
    k = len(orders)
    bil = [[Fraction(0)] * k for _ in range(k)]
    off = 0
    for f in forms:
        m = f.ngens
        for i in range(m):
            for j in range(m):
                bil[off + i][off + j] = f.bil[i][j]
        off += m
    lifts = None
    if lifts_ok:
        lifts = []
        for fi, f in enumerate(forms):
            pad_l = sum(widths[:fi])
            pad_r = sum(widths[fi + 1:])
            for row in f.lifts:
                lifts.append([Fraction(0)] * pad_l + list(row) + [Fraction(0)] * pad_r)
    return form_on_generators(orders, bil, quad, lifts)


# standard small forms -------------------------------------------------------

def q_cyclic(n: int, value: Fraction) -> FiniteQuadraticForm:
    """<value> on Z/n: q(gen) = value mod 2, b(gen, gen) = value mod 1."""
    value = Fraction(value)
    return form_on_generators([n], [[_mod1(value)]], [value])


def u2_form() -> FiniteQuadraticForm:
    h = Fraction(1, 2)
    return form_on_generators([2, 2], [[0, h], [h, 0]], [0, 0])


def v2_form() -> FiniteQuadraticForm:
    h = Fraction(1, 2)
    return form_on_generators([2, 2], [[1, h], [h, 1]], [1, 1])


def standard_form(spec: str) -> FiniteQuadraticForm:
    """Sum expression over u2, v2, <1/2>, <-1/2>, <2/3>, <-2/3> joined with '+'."""
    parts = []
    table = {
        "u2": u2_form,
        "v2": v2_form,
        "<1/2>": lambda: q_cyclic(2, Fraction(1, 2)),
        "<-1/2>": lambda: q_cyclic(2, Fraction(-1, 2)),
        "<2/3>": lambda: q_cyclic(3, Fraction(2, 3)),
        "<-2/3>": lambda: q_cyclic(3, Fraction(-2, 3)),
    }
    for term in spec.replace(" ", "").split("+"):
        if not term:
            continue
        count = 1
        i = 0
        while i < len(term) and term[i].isdigit():
            i += 1
        if i and term[:i].isdigit() and term[i:] in table:
            count, term = int(term[:i]), term[i:]
        if term not in table:
            raise ValueError(f"unknown form atom {term!r}")
        parts.extend(table[term]() for _ in range(count))
    return direct_sum_forms(*parts) if parts else TRIVIAL_FORM


# p-parts ---------------------------------------------------------------------

def p_part(f: FiniteQuadraticForm, p: int) -> FiniteQuadraticForm:
    """The restriction of the form to the maximal p-subgroup."""
    idx = []
    mults = []
    new_orders = []
    for i, d in enumerate(f.orders):
        pk = 1
        while d % p == 0:
            d //= p
            pk *= p
        if pk > 1:
            idx.append(i)
            mults.append(f.orders[i] // pk)
            new_orders.append(pk)
    bil = [
        [_mod1(mults[a] * mults[b] * f.bil[idx[a]][idx[b]]) for b in range(len(idx))]
        for a in range(len(idx))
    ]
    quad = [_mod2(mults[a] * mults[a] * f.quad[idx[a]]) for a in range(len(idx))]
    lifts = None
    if f.lifts is not None:
        lifts = [[mults[a] * x for x in f.lifts[idx[a]]] for a in range(len(idx))]
    return form_on_generators(new_orders, bil, quad, lifts)


def p_rank(f: FiniteQuadraticForm, p: int) -> int:
    return sum(1 for d in f.orders if d % p == 0)


def prime_factors_of_order(f: FiniteQuadraticForm) -> list[int]:
    primes = set()
    for d in f.orders:
        x = d
        k = 2
        while k * k <= x:
            if x % k == 0:
                primes.add(k)
                while x % k == 0:
                    x //= k
            k += 1
        if x > 1:
            primes.add(x)
    return sorted(primes)


def is_elementary(f: FiniteQuadraticForm, p: int) -> bool:
    return all(d == p for d in f.orders)


# views on F_p-subspaces ------------------------------------------------------

@dataclass
class SpanView:
    """An independent list of generators spanning a subgroup of an elementary p-part."""

    form: FiniteQuadraticForm
    gens: list[Element]
    p: int

    def elements(self):
        seen = {self.form.zero()}
        yield self.form.zero()
        frontier = [self.form.zero()]
        for g in self.gens:
            new = []
            for mult in range(1, self.p):
                step = self.form.smul(mult, g)
                for e in frontier:
                    s = self.form.add(e, step)
                    if s not in seen:
                        seen.add(s)
                        new.append(s)
                        yield s
            frontier.extend(new)

    @property
    def dim(self) -> int:
        return len(self.gens)


def full_view(f: FiniteQuadraticForm, p: int) -> SpanView:
    if not is_elementary(f, p):
        raise ValueError(f"form is not an elementary {p}-group")
    gens = [tuple(int(i == j) for j in range(f.ngens)) for i in range(f.ngens)]
    return SpanView(f, gens, p)


def _complement_of(view: SpanView, block: list[Element]) -> SpanView:
    """Basis of the orthogonal complement of a nondegenerate block inside view."""
    f = view.form
    p = view.p
    block_elems = set()
    sub = SpanView(f, list(block), p)
    block_elems = set(sub.elements())
    out: list[Element] = []
    span = {f.zero()}
    for x in view.elements():
        if x in block_elems or x in span:
            continue
        if any(f.b(x, g) != 0 for g in block):
            continue
        out.append(x)
        grown = set(span)
        for mult in range(1, p):
            step = f.smul(mult, x)
            for e in list(span):
                grown.add(f.add(e, step))
        span = grown
        if len(out) == view.dim - len(block):
            break
    return SpanView(f, out, p)


HALF = Fraction(1, 2)
THALF = Fraction(3, 2)
TWO3 = Fraction(2, 3)
FOUR3 = Fraction(4, 3)

_Q_OF_KIND = {"e+": HALF, "e-": THALF, "t+": TWO3, "t-": FOUR3}
ANTI_KIND = {"e+": "e-", "e-": "e+", "u2": "u2", "v2": "v2", "t+": "t-", "t-": "t+"}


def _normalize_2block(f: FiniteQuadraticForm, x, y):
    """Canonical basis of a rank-2 even block: u2 gens have q = 0, v2 gens q = 1."""
    elems = sorted({x, y, f.add(x, y)})
    vals = {f.q(e) for e in elems}
    if vals == {Fraction(1)}:
        return "v2", [elems[0], elems[1]]
    gens = [e for e in elems if f.q(e) == 0]
    return "u2", gens[:2]


def decompose2(view: SpanView):
    """Split an elementary 2-subspace into blocks.

    Returns (delta2, blocks) with blocks a list of (kind, gens): kinds are
    "e+" = <1/2>, "e-" = <-1/2>, "u2", "v2".  Rank-2 block bases are
    normalized (u2: both squares 0; v2: both squares 1).
    """
    f = view.form
    if view.dim == 0:
        return 0, []
    odd = next((x for x in view.elements() if f.q(x) in (HALF, THALF)), None)
    if odd is not None:
        kind = "e+" if f.q(odd) == HALF else "e-"
        _rest_d2, rest = decompose2(_complement_of(view, [odd]))
        return 1, [(kind, [odd])] + rest
    x = next(e for e in view.elements() if any(e))
    y = next(e for e in view.elements() if f.b(x, e) != 0)
    kind, gens = _normalize_2block(f, x, y)
    _d2, rest = decompose2(_complement_of(view, gens))
    return 0, [(kind, gens)] + rest


def decompose3(view: SpanView):
    """Split an elementary 3-subspace into rank-1 blocks ("t+" = <2/3>, "t-" = <-2/3>)."""
    f = view.form
    if view.dim == 0:
        return []
    x = next((e for e in view.elements() if f.q(e) in (TWO3, FOUR3)), None)
    if x is None:
        raise ValueError("degenerate 3-subspace")
    kind = "t+" if f.q(x) == TWO3 else "t-"
    return [(kind, [x])] + decompose3(_complement_of(view, [x]))


def present_with(view: SpanView, kinds: list[str]):
    """Find generators presenting the view as the given ordered block kinds.

    Returns a list of (kind, gens) or None.  Used to build explicit
    (anti-)isomorphisms block by block.
    """
    f = view.form
    if not kinds:
        return [] if view.dim == 0 else None
    kind, rest = kinds[0], kinds[1:]
    if kind in ("e+", "e-", "t+", "t-"):
        want = _Q_OF_KIND[kind]
        for x in view.elements():
            if f.q(x) == want:
                sub = present_with(_complement_of(view, [x]), rest)
                if sub is not None:
                    return [(kind, [x])] + sub
        return None
    if kind in ("u2", "v2"):
        elems = [e for e in view.elements() if any(e)]
        for x in elems:
            if f.q(x) not in (0, 1):
                continue
            for y in elems:
                if y == x or f.b(x, y) == 0 or f.q(y) not in (0, 1):
                    continue
                found_kind, gens = _normalize_2block(f, x, y)
                if found_kind != kind:
                    continue
                sub = present_with(_complement_of(view, gens), rest)
                if sub is not None:
                    return [(kind, gens)] + sub
        return None
    raise ValueError(f"unknown block kind {kind}")


# normal forms ----------------------------------------------------------------

def normal_form2(f_or_view) -> tuple[str, int, int]:
    """Canonical (kind, a, b) of an elementary enhanced 2-group.

    Even kind: a*u2 + b*v2 with b reduced mod 2.  Odd kind:
    a*<1/2> + b*<-1/2> with a reduced mod 4.
    """
    view = f_or_view if isinstance(f_or_view, SpanView) else full_view(f_or_view, 2)
    d2, blocks = decompose2(view)
    rank = view.dim
    contrib = {"e+": 1, "e-": -1, "u2": 0, "v2": 4}
    br = sum(contrib[k] for k, _ in blocks) % 8
    if d2 == 0:
        b = 1 if br == 4 else 0
        return "even", rank // 2 - b, b
    # a - b = br (mod 8), a + b = rank, a reduced mod 4
    assert (rank + br) % 2 == 0
    a = ((rank + br) // 2) % 4
    return "odd", a, rank - a


def iso2(f: FiniteQuadraticForm, g: FiniteQuadraticForm) -> bool:
    return normal_form2(f) == normal_form2(g)


def normal_form3(f_or_view) -> tuple[int, int]:
    """Canonical (p, q) of an elementary inner-product 3-group: p*<2/3> + q*<-2/3>, p in {0,1}."""
    view = f_or_view if isinstance(f_or_view, SpanView) else full_view(f_or_view, 3)
    blocks = decompose3(view)
    a0 = sum(1 for k, _ in blocks if k == "t+")
    p = a0 % 2
    return p, len(blocks) - p


def parity2(f_or_view) -> int:
    """delta_2: 0 when the elementary 2-group's inner product is even, 1 otherwise."""
    view = f_or_view if isinstance(f_or_view, SpanView) else full_view(f_or_view, 2)
    f = view.form
    return 0 if all(f.b(x, x) == 0 for x in view.elements()) else 1


def characteristic_element(f_or_view) -> Element:
    """The unique v with v.x = x^2 (mod Z) for all x in an elementary 2-group."""
    view = f_or_view if isinstance(f_or_view, SpanView) else full_view(f_or_view, 2)
    f = view.form
    for v in view.elements():
        if all(f.b(v, g) == _mod1(f.q(g)) for g in view.gens):
            return v
    raise ValueError("no characteristic element (degenerate input)")


# Brown invariant -------------------------------------------------------------

def brown(f: FiniteQuadraticForm) -> int:
    """The Brown invariant in Z/8.

    Exact (integer Gauss-sum histogram) whenever every p-part is an
    elementary 2- or 3-group; otherwise the Gauss sum of the offending
    p-part is summed numerically at high precision with hard tolerances.
    """
    total = 0
    for p in prime_factors_of_order(f):
        part = p_part(f, p)
        if p in (2, 3) and is_elementary(part, p):
            total += _brown_elementary(part, p)
        else:
            total += brown_numeric(part)
    return total % 8


def _phase_histogram(f: FiniteQuadraticForm, m: int) -> list[int]:
    """counts[n] = #{x : m*q(x) = n mod 2m}, by integer recursion."""
    two_m = 2 * m
    quad_n = [int(v * m) % two_m for v in f.quad]
    bil2_n = [[int(2 * v * m) % two_m for v in row] for row in f.bil]
    counts = [0] * two_m
    k = f.ngens
    orders = f.orders

    def rec(j, n_acc, row_acc):
        if j == k:
            counts[n_acc % two_m] += 1
            return
        brow = bil2_n[j]
        for val in range(orders[j]):
            n = n_acc + val * val * quad_n[j] + val * row_acc[j]
            rec(j + 1, n, [r + val * b for r, b in zip(row_acc, brow)])

    rec(0, 0, [0] * k)
    return counts


def _brown_elementary(part: FiniteQuadraticForm, p: int) -> int:
    """Exact Brown invariant of an elementary 2- or 3-group via the Gauss
    sum accumulated as an integer phase histogram.

    For p = 3 the refinement is determined by the inner product (wholly by
    <1/3> -> q = -2/3, <2/3> -> q = 2/3), so a symmetric diagonalization
    mod 3 gives the answer without enumerating the group.
    """
    if part.ngens == 0:
        return 0
    if p == 3:
        return _brown_elementary3(part)
    counts = _phase_histogram(part, p)
    size = part.size
    if p == 2:
        re = counts[0] - counts[2]
        im = counts[1] - counts[3]
        assert re * re + im * im == size, "Gauss magnitude check failed"
        ray = {
            (1, 0): 0, (1, 1): 1, (0, 1): 2, (-1, 1): 3,
            (-1, 0): 4, (-1, -1): 5, (0, -1): 6, (1, -1): 7,
        }
        key = ((re > 0) - (re < 0), (im > 0) - (im < 0))
        if key == (0, 0) or (key[0] and key[1] and abs(re) != abs(im)):
            raise ValueError("degenerate Gauss sum")
        return ray[key]
    raise ValueError(f"no exact elementary path for p = {p}")


def _brown_elementary3(part: FiniteQuadraticForm) -> int:
    """Br of an elementary 3-group by symmetric diagonalization mod 3."""
    k = part.ngens
    b = [[int(3 * part.bil[i][j]) % 3 for j in range(k)] for i in range(k)]

    def swap(i, j):
        b[i], b[j] = b[j], b[i]
        for row in b:
            row[i], row[j] = row[j], row[i]

    total = 0
    for i in range(k):
        if b[i][i] == 0:
            j = next((t for t in range(i + 1, k) if b[t][t] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next(t for t in range(i + 1, k) if b[i][t] != 0)
                for c in range(k):
                    b[i][c] = (b[i][c] + b[j][c]) % 3
                for r in range(k):
                    b[r][i] = (b[r][i] + b[r][j]) % 3
        piv = b[i][i]
        assert piv != 0, "degenerate 3-part"
        inv = piv  # 1 and 2 are self-inverse mod 3
        for j in range(i + 1, k):
            fct = (b[i][j] * inv) % 3
            if fct:
                for c in range(k):
                    b[j][c] = (b[j][c] - fct * b[i][c]) % 3
                for r in range(k):
                    b[r][j] = (b[r][j] - fct * b[r][i]) % 3
        # <1/3> is the enhanced <-2/3>, <2/3> the enhanced <2/3>
        total += 2 if piv == 2 else -2
    return total % 8


def brown_numeric(f: FiniteQuadraticForm) -> int:
    """Gauss-sum phase of exp(i*pi*q) summed over the group, divided by pi/4.

    The sum is accumulated exactly as a histogram of rational phases, and
    verified: |S| within GAUSS_TOL relative of sqrt|G| and the phase within
    GAUSS_TOL of a multiple of pi/4.
    """
    size = f.size
    if size > GAUSS_SIZE_CAP:
        raise ValueError("group too large for the numeric Gauss sum")
    if size == 1:
        return 0
    den = 1
    for v in f.quad:
        den = den * v.denominator // math.gcd(den, v.denominator)
    for row in f.bil:
        for v in row:
            d = (2 * v).denominator
            den = den * d // math.gcd(den, d)
    m = den  # q(x) = n_x / m with n_x an integer mod 2m
    counts = [0] * (2 * m)
    quad_n = [int(v * m) for v in f.quad]
    bil2_n = [[int(2 * v * m) for v in row] for row in f.bil]
    k = f.ngens
    for x in f.elements():
        n = 0
        for i in range(k):
            xi = x[i]
            if xi:
                n += xi * xi * quad_n[i]
                row = bil2_n[i]
                for j in range(i + 1, k):
                    if x[j]:
                        n += xi * x[j] * row[j]
        counts[n % (2 * m)] += 1
    s = 0j
    for n, c in enumerate(counts):
        if c:
            s += c * cmath.exp(1j * math.pi * n / m)
    mag = abs(s)
    root = math.sqrt(size)
    if abs(mag - root) > GAUSS_TOL * root:
        raise ValueError("degenerate Gauss sum")
    phase = cmath.phase(s) / (math.pi / 4)
    nearest = round(phase)
    if abs(phase - nearest) > GAUSS_TOL:
        raise ValueError("degenerate Gauss sum")
    return nearest % 8


# element census and subgroup machinery ----------------------------------------

def q_value_census(f: FiniteQuadraticForm) -> dict[Fraction, int]:
    census: dict[Fraction, int] = {}
    for x in f.elements():
        if any(x):
            v = f.q(x)
            census[v] = census.get(v, 0) + 1
    return census


def fingerprint(f: FiniteQuadraticForm):
    """Multiset of (element order, square); complete for elementary 2/3 sums."""
    return tuple(sorted((f.element_order(x), f.q(x)) for x in f.elements()))


def subgroup_elements(f: FiniteQuadraticForm, gens) -> frozenset:
    seen = {f.zero()}
    frontier = [f.zero()]
    for g in gens:
        order = f.element_order(g)
        new = []
        for mult in range(1, order):
            step = f.smul(mult, g)
            for e in frontier:
                s = f.add(e, step)
                if s not in seen:
                    seen.add(s)
                    new.append(s)
        frontier.extend(new)
    return frozenset(seen)


def is_isotropic_subgroup(f: FiniteQuadraticForm, gens) -> bool:
    return all(f.q(x) == 0 for x in subgroup_elements(f, gens))


def orthogonal_of_subgroup(f: FiniteQuadraticForm, gens) -> list[Element]:
    """All x with b(x, H) = 0, as an element list."""
    return [x for x in f.elements() if all(f.b(x, g) == 0 for g in gens)]


def isotropic_subgroups(f: FiniteQuadraticForm) -> list[frozenset]:
    """Every isotropic subgroup, enumerated p-part by p-part.

    The p-components are mutually orthogonal, so every isotropic subgroup
    is the direct sum of its p-parts; isotropic subgroups of each part are
    grown one generator at a time.
    """
    if f.size > 2**6 * 3**6:
        raise ValueError("group too large")
    per_p: list[list[frozenset]] = []
    primes = prime_factors_of_order(f)
    gens_of = {p: [] for p in primes}
    for p in primes:
        subs = {frozenset({f.zero()})}
        frontier = [frozenset({f.zero()})]
        part_elems = [x for x in f.elements() if _is_p_torsion(f, x, p)]
        while frontier:
            nxt = []
            for sub in frontier:
                for x in part_elems:
                    if x in sub or f.q(x) != 0:
                        continue
                    if any(f.b(x, y) != 0 for y in sub):
                        continue
                    grown = set(sub)
                    order = f.element_order(x)
                    for mult in range(1, order):
                        step = f.smul(mult, x)
                        for e in list(sub):
                            grown.add(f.add(e, step))
                    if any(f.q(e) != 0 for e in grown):
                        continue
                    fz = frozenset(grown)
                    if fz not in subs:
                        subs.add(fz)
                        nxt.append(fz)
            frontier = nxt
        per_p.append(sorted(subs, key=lambda s: (len(s), sorted(s))))
    out = []
    for combo in itertools.product(*per_p) if per_p else [()]:
        total = {f.zero()}
        for sub in combo:
            total = {f.add(a, b) for a in total for b in sub}
        out.append(frozenset(total))
    return sorted(set(out), key=lambda s: (len(s), sorted(s)))


def _is_p_torsion(f: FiniteQuadraticForm, x, p: int) -> bool:
    o = f.element_order(x)
    while o % p == 0:
        o //= p
    return o == 1


def coset_fingerprint(f: FiniteQuadraticForm, h_gens):
    """Fingerprint of H^perp / H for an isotropic subgroup H."""
    h = subgroup_elements(f, h_gens)
    perp = orthogonal_of_subgroup(f, list(h))
    seen = set()
    rows = []
    hs = sorted(h)
    for x in perp:
        coset = frozenset(f.add(x, y) for y in hs)
        if coset in seen:
            continue
        seen.add(coset)
        order = min(
            k
            for k in range(1, f.element_order(x) + 1)
            if f.element_order(x) % k == 0 and f.smul(k, x) in h
        )
        rows.append((order, f.q(x)))
    return tuple(sorted(rows))


# automorphisms ----------------------------------------------------------------

def aut_order(f: FiniteQuadraticForm) -> int:
    """Exhaustive count of quadratic-form-preserving group automorphisms."""
    if f.size > 81:
        raise ValueError("group too large")
    gens = [tuple(int(i == j) for j in range(f.ngens)) for i in range(f.ngens)]
    return _count_maps(f, gens)


def _count_maps(f: FiniteQuadraticForm, basis: list[Element]) -> int:
    """Backtracking count of q-preserving automorphisms by images of `basis`."""
    all_elems = [x for x in f.elements()]
    q_of = {x: f.q(x) for x in all_elems}
    orders_of = {x: f.element_order(x) for x in all_elems}
    n = len(basis)
    count = 0

    def candidates(k, images):
        target = basis[k]
        opts = []
        for x in all_elems:
            if orders_of[x] != orders_of[target] or q_of[x] != q_of[target]:
                continue
            if any(f.b(x, images[j]) != f.b(target, basis[j]) for j in range(k)):
                continue
            opts.append(x)
        return opts

    def rec(k, images, span):
        nonlocal count
        if k == n:
            if len(span) == f.size:
                count += 1
            return
        for x in candidates(k, images):
            if x in span:
                continue
            new_span = span | {f.add(s, f.smul(m, x)) for s in span for m in range(1, orders_of[x])}
            rec(k + 1, images + [x], frozenset(new_span))

    rec(0, [], frozenset({f.zero()}))
    return count


def aut_g_delta_orders() -> tuple[int, int]:
    """(|Aut(G, delta)|, |Aut_comp(G, delta)|) for G = 6<-2/3>, delta the diagonal.

    Aut_comp is enumerated directly (signed coordinate permutations fixing
    {+-delta}).  The full stabilizer order is |image| * |kernel| of the
    reduction to Aut(G^delta/(delta)): the image is everything because the
    coordinatewise maps already surject (their reduction is injective and
    hits all 1440 = |Aut(<-2/3>+3<2/3>)| elements), and the kernel -- maps
    fixing every class of G^delta/(delta) -- is scanned exhaustively through
    its complete parametrization f(w) = w + lambda(w) delta on delta-perp.
    """
    import itertools as it

    n = 6
    delta = (1,) * n

    # On 6<-2/3> both q and b reduce to integer data mod 3: q(x) is fixed by
    # sum(x_i^2) mod 3 and 3*b(x, y) = sum(x_i y_i) mod 3.
    def dot(x, y):
        return sum(a * b for a, b in zip(x, y)) % 3

    # coordinatewise maps (signed permutations) with f(delta) = +-delta
    comp_count = 0
    for perm in it.permutations(range(n)):
        for signs in it.product((1, 2), repeat=n):
            image_of_delta = [0] * n
            for i in range(n):
                image_of_delta[perm[i]] = signs[i]
            if len(set(image_of_delta)) == 1:
                comp_count += 1

    # basis adapted to delta: (delta, u, w1..w4), u non-orthogonal to delta,
    # the w_i spanning a complement of (delta, u)
    u = (1, 0, 0, 0, 0, 0)
    assert dot(delta, u) != 0
    ws = [(1, 2, 0, 0, 0, 0), (1, 0, 2, 0, 0, 0), (1, 0, 0, 2, 0, 0), (1, 0, 0, 0, 2, 0)]
    for w in ws:
        assert dot(w, delta) == 0
    mat = [list(delta), list(u)] + [list(w) for w in ws]
    from . import exact as _exact

    assert _exact.determinant(mat) % 3 != 0  # really a basis of (Z/3)^6

    elems = list(it.product(range(3), repeat=n))
    q_code = {x: dot(x, x) for x in elems}
    kernel = 0
    for eps in (1, 2):
        f_delta = tuple(eps % 3 for _ in range(n))
        for lambdas in it.product(range(3), repeat=4):
            f_ws = [
                tuple((wc + lam) % 3 for wc in w) for w, lam in zip(ws, lambdas)
            ]
            targets = [dot(u, delta)] + [dot(u, w) for w in ws]
            quc = q_code[u]
            for cand in elems:
                if q_code[cand] != quc:
                    continue
                if dot(cand, f_delta) != targets[0]:
                    continue
                if any(dot(cand, fw) != t for fw, t in zip(f_ws, targets[1:])):
                    continue
                kernel += 1
    image = 1440  # = |Aut(<-2/3>+3<2/3>)|, attained already by Aut_comp
    return image * kernel, comp_count


# anti-isomorphisms ------------------------------------------------------------

def is_anti_isomorphism(fsrc: FiniteQuadraticForm, src_gens, ftgt: FiniteQuadraticForm, tgt_gens) -> bool:
    """Exhaustively check q_tgt(phi x) = -q_src(x) on the subgroup spanned by src_gens."""
    pairs = list(zip(src_gens, tgt_gens))
    orders = [fsrc.element_order(g) for g, _ in pairs]
    for coeffs in itertools.product(*[range(o) for o in orders]):
        x = fsrc.zero()
        y = ftgt.zero()
        for c, (g, t) in zip(coeffs, pairs):
            x = fsrc.add(x, fsrc.smul(c, g))
            y = ftgt.add(y, ftgt.smul(c, t))
        if _mod2(fsrc.q(x) + ftgt.q(y)) != 0:
            return False
    gen_count = len(subgroup_elements(fsrc, src_gens))
    return gen_count == len(subgroup_elements(ftgt, tgt_gens))


def build_anti_iso(src_view: SpanView, tgt_view: SpanView):
    """Explicit anti-isomorphism between elementary p-subspaces, on generators.

    Decomposes the source into blocks and re-presents the target with the
    anti-matched block kinds.  Returns (src_gens, tgt_gens) or None.
    """
    p = src_view.p
    if p == 2:
        _d2, blocks = decompose2(src_view)
    else:
        blocks = decompose3(src_view)
    kinds = [ANTI_KIND[k] for k, _ in blocks]
    tgt_blocks = present_with(tgt_view, kinds)
    if tgt_blocks is None:
        return None
    src_gens = [g for _k, gs in blocks for g in gs]
    tgt_gens = [g for _k, gs in tgt_blocks for g in gs]
    # u2 and v2 carry q-values in Z/2Z, where -q = q, so identity pairing works
    if not is_anti_isomorphism(src_view.form, src_gens, tgt_view.form, tgt_gens):
        return None
    return src_gens, tgt_gens


def anti_iso_root(f2_target: FiniteQuadraticForm, f2_source: FiniteQuadraticForm):
    """An element v of the source 2-group with square -1/2 whose complement
    is anti-isomorphic to the target; None when no such v exists.

    v must be characteristic exactly when the target parity is 0.
    """
    if f2_source.ngens and not is_elementary(f2_source, 2):
        raise ValueError("elementary 2-group required")
    want_char = parity2(f2_target) == 0 if f2_target.ngens else True
    view = full_view(f2_source, 2)
    char = characteristic_element(view)
    tgt_rank = f2_target.ngens
    tgt_kind = normal_form2(f2_target) if f2_target.ngens else ("even", 0, 0)
    for v in sorted(view.elements()):
        if f2_source.q(v) != THALF:
            continue
        if (v == char) != want_char:
            continue
        perp = [x for x in view.elements() if f2_source.b(x, v) == 0 and x != f2_source.zero()]
        basis = _independent_subset(f2_source, perp, 2)
        if len(basis) != tgt_rank:
            continue
        perp_view = SpanView(f2_source, basis, 2)
        if _anti_classes_match(perp_view, tgt_kind):
            return v
    return None


def _independent_subset(f: FiniteQuadraticForm, elems, p: int):
    basis = []
    span = {f.zero()}
    for x in elems:
        if x in span:
            continue
        basis.append(x)
        grown = set(span)
        for m in range(1, p):
            step = f.smul(m, x)
            for e in list(span):
                grown.add(f.add(e, step))
        span = grown
    return basis


def _anti_classes_match(view: SpanView, tgt_kind) -> bool:
    kind, a, b = normal_form2(view)
    tk, ta, tb = tgt_kind
    if kind != tk:
        return False
    if kind == "even":
        # anti of a*u2+b*v2 is itself (q-values sit in Z/2Z)
        return (a + b, b % 2) == (ta + tb, tb % 2)
    # anti of a<1/2>+b<-1/2> is b<1/2>+a<-1/2>
    anti_a = b % 4
    return (a + b == ta + tb) and (anti_a == ta)


def render_form(f: FiniteQuadraticForm, ascii_mode: bool = False) -> str:
    """Canonical text: 2-part blocks then 3-part then residual orders."""
    parts = []
    for p in prime_factors_of_order(f):
        part = p_part(f, p)
        if p == 2 and is_elementary(part, 2):
            _d2, blocks = decompose2(full_view(part, 2))
            names = {"u2": "u2", "v2": "v2", "e+": "⟨1/2⟩", "e-": "⟨-1/2⟩"}
            parts.extend(names[k] for k, _ in sorted(blocks, key=lambda kb: kb[0]))
        elif p == 3 and is_elementary(part, 3):
            blocks = decompose3(full_view(part, 3))
            names = {"t+": "⟨2/3⟩", "t-": "⟨-2/3⟩"}
            parts.extend(names[k] for k, _ in sorted(blocks, key=lambda kb: kb[0]))
        else:
            parts.append("+".join(f"Z/{d}" for d in part.orders))
    text = "+".join(parts) if parts else "0"
    if ascii_mode:
        text = text.replace("⟨", "q(").replace("⟩", ")")
    return text
