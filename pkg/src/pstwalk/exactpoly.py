"""Exact integer polynomial arithmetic and characteristic polynomial identities.

Everything here is big-integer exact.  Characteristic polynomials are of
tI - A for the weighted adjacency matrix A.  The empty graph has
characteristic polynomial 1; several identities below lean on that
convention.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable

from .graphs import Graph, iter_ab_paths

__all__ = [
    "IntPoly",
    "T",
    "ExactDivisionError",
    "poly_add",
    "poly_sub",
    "poly_mul",
    "poly_gcd",
    "poly_divexact",
    "poly_eval_at_integer",
    "squarefree_part",
    "real_roots",
    "bareiss_det",
    "charpoly",
    "charpoly_deleted",
    "one_sum_charpoly",
    "bridge_charpoly_p2",
    "bridge_charpoly_p3",
    "loop_adjusted_charpoly",
    "pendant_sqrt2_charpoly",
    "path_sum_poly",
    "RationalFunction",
    "walk_gf",
    "return_walk_gf",
    "poles_simple",
    "walk_equivalent",
]


class ExactDivisionError(ArithmeticError):
    pass


class IntPoly:
    """Integer-coefficient polynomial, coefficients ascending by degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive_part(self) -> "IntPoly":
        if self.is_zero:
            return self
        c = self.content()
        return IntPoly(x // c for x in self.coeffs)

    def derivative(self) -> "IntPoly":
        return IntPoly(k * c for k, c in enumerate(self.coeffs) if k)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by t**k."""
        if self.is_zero:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __add__(self, other):
        other = _coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly(other * c for c in self.coeffs)
        other = _coerce(other)
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __call__(self, x):
        """Horner evaluation; works for int, float, Fraction, complex."""
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, int):
            other = _coerce(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __str__(self):
        if self.is_zero:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "t" if mag == 1 else f"{mag}*t"
            else:
                body = f"t^{k}" if mag == 1 else f"{mag}*t^{k}"
            terms.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(terms)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot treat {type(x).__name__} as IntPoly")


T = IntPoly((0, 1))


def poly_add(p: IntPoly, q: IntPoly) -> IntPoly:
    return p + q


def poly_sub(p: IntPoly, q: IntPoly) -> IntPoly:
    return p - q


def poly_mul(p: IntPoly, q: IntPoly) -> IntPoly:
    return p * q


def poly_eval_at_integer(p: IntPoly, k: int) -> int:
    return p(int(k))


def _pseudo_rem(p: IntPoly, q: IntPoly) -> IntPoly:
    """Pseudo-remainder: lc(q)**(deg p - deg q + 1) * p mod q, exactly."""
    dq = q.degree
    lq = q.leading
    r = p
    while not r.is_zero and r.degree >= dq:
        k = r.degree - dq
        top = r.leading
        r = lq * r - top * q.shift(k)
    return r


def poly_gcd(p: IntPoly, q: IntPoly) -> IntPoly:
    """Primitive gcd with positive leading coefficient (primitive
    pseudo-remainder sequence)."""
    a, b = p, q
    if a.is_zero and b.is_zero:
        return IntPoly()
    a = a.primitive_part()
    b = b.primitive_part()
    if a.degree < b.degree:
        a, b = b, a
    while not b.is_zero:
        r = _pseudo_rem(a, b).primitive_part()
        a, b = b, r
    return a if a.leading > 0 else -a


def poly_divexact(p: IntPoly, q: IntPoly) -> IntPoly:
    """Exact quotient p / q over the integers; raises when q does not
    divide p exactly."""
    if q.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero:
        return IntPoly()
    if p.degree < q.degree:
        raise ExactDivisionError("division leaves a remainder")
    r = list(p.coeffs)
    qc = q.coeffs
    lq = qc[-1]
    out = [0] * (len(r) - len(qc) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = r[len(qc) - 1 + k]
        if c % lq:
            raise ExactDivisionError("division leaves a remainder")
        f = c // lq
        out[k] = f
        if f:
            for i, qi in enumerate(qc):
                r[k + i] -= f * qi
    if any(r):
        raise ExactDivisionError("division leaves a remainder")
    return IntPoly(out)


def squarefree_part(p: IntPoly) -> IntPoly:
    """p / gcd(p, p'), the product of the distinct irreducible factors."""
    if p.is_zero:
        return p
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return poly_divexact(p, g)


# ---------------------------------------------------------------------------
# real root isolation

def _root_bound(p: IntPoly) -> float:
    lead = abs(p.leading)
    return 1.0 + max(abs(c) for c in p.coeffs) / lead


def _bisect_root(p: IntPoly, lo: float, hi: float) -> float:
    flo = p(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fm = p(mid)
        if fm == 0:
            return mid
        if (flo < 0) == (fm < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def real_roots(p: IntPoly, tol: float = 1e-12) -> list[float]:
    """All real roots of p, ascending, without multiplicity.

    Isolation by recursion on the derivative (roots are separated by
    critical points), then bisection on sign changes.  Intended for
    polynomials whose roots are all real, such as characteristic
    polynomials of symmetric matrices, but correct for any input.
    """
    p = squarefree_part(p)
    if p.degree <= 0:
        return []

    def solve(q: IntPoly) -> list[float]:
        if q.degree == 1:
            return [-q.coeffs[0] / q.coeffs[1]]
        crit = solve(squarefree_part(q.derivative()))
        bound = _root_bound(q)
        points = [-bound] + sorted(c for c in crit if -bound < c < bound) + [bound]
        roots = []
        for lo, hi in zip(points, points[1:]):
            flo, fhi = q(lo), q(hi)
            if flo == 0:
                roots.append(lo)
                continue
            if fhi == 0:
                continue  # picked up as the lo of the next interval
            if (flo < 0) != (fhi < 0):
                roots.append(_bisect_root(q, lo, hi))
        if q(bound) == 0:
            roots.append(bound)
        return roots

    out = solve(p)
    dedup: list[float] = []
    for r in sorted(out):
        if not dedup or abs(r - dedup[-1]) > tol:
            dedup.append(r)
    return dedup


# ---------------------------------------------------------------------------
# exact determinants and characteristic polynomials

def bareiss_det(rows: list[list[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in rows]
    if any(len(row) != n for row in m):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            rik = m[i][k]
            mi, mk = m[i], m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - rik * mk[j]) // prev
            mi[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def _interpolate_monic(values: list[int]) -> IntPoly:
    """Newton interpolation through (k, values[k]) for k = 0..n; the result
    must come out with integer coefficients."""
    pts = list(range(len(values)))
    dd = [Fraction(v) for v in values]
    n = len(values)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (pts[i] - pts[i - level])
    # Horner in the Newton basis
    coeffs = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        # multiply by (t - pts[i]) then add dd[i]
        coeffs = [Fraction(0)] + coeffs
        for j in range(len(coeffs) - 1):
            coeffs[j] -= pts[i] * coeffs[j + 1]
        coeffs[0] += dd[i]
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation produced a non-integer coefficient")
        out.append(int(c))
    return IntPoly(out)


def charpoly(g: Graph) -> IntPoly:
    """det(tI - A), exact, by fraction-free evaluation at t = 0..n and
    interpolation.  Requires integer weights."""
    key = ("charpoly", None)
    cached = g._poly_cache.get(key)
    if cached is not None:
        return cached
    a = g.int_matrix()
    n = g.n
    values = []
    for k in range(n + 1):
        m = [[(k if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
        values.append(bareiss_det(m))
    p = _interpolate_monic(values)
    if p.degree != n or not p.is_monic:
        raise ArithmeticError("characteristic polynomial failed its shape check")
    g._poly_cache[key] = p
    return p


def charpoly_deleted(g: Graph, deleted: Iterable[int]) -> IntPoly:
    """Characteristic polynomial of the induced subgraph with ``deleted``
    removed.  Deleting every vertex yields the constant 1."""
    gone = frozenset(int(v) for v in deleted)
    for v in gone:
        g._check_vertex(v)
    if len(gone) == g.n:
        return IntPoly((1,))
    if not gone:
        return charpoly(g)
    key = ("charpoly", gone)
    cached = g._poly_cache.get(key)
    if cached is not None:
        return cached
    p = charpoly(g.delete(gone))
    g._poly_cache[key] = p
    return p


# ---------------------------------------------------------------------------
# composition identities (all take precomputed polynomials)

def one_sum_charpoly(
    phi_y1: IntPoly, phi_y1_del: IntPoly, phi_y2: IntPoly, phi_y2_del: IntPoly
) -> IntPoly:
    """Characteristic polynomial of the vertex gluing of Y1 and Y2 at b,
    from phi(Yi) and phi(Yi minus b)."""
    return phi_y1 * phi_y2_del + phi_y1_del * phi_y2 - T * phi_y1_del * phi_y2_del


def bridge_charpoly_p2(
    phi_y1: IntPoly, phi_y1_del: IntPoly, phi_y2: IntPoly, phi_y2_del: IntPoly
) -> IntPoly:
    """phi of Y1 and Y2 joined by a single bridge edge at a and b."""
    return phi_y1 * phi_y2 - phi_y1_del * phi_y2_del


def bridge_charpoly_p3(
    phi_y1: IntPoly, phi_y1_del: IntPoly, phi_y2: IntPoly, phi_y2_del: IntPoly
) -> IntPoly:
    """phi of Y1 and Y2 joined by a two-edge path (one middle vertex)."""
    return T * phi_y1 * phi_y2 - phi_y2 * phi_y1_del - phi_y1 * phi_y2_del


def loop_adjusted_charpoly(phi_y: IntPoly, phi_y_del: IntPoly, sign: int) -> IntPoly:
    """phi of Y with a loop of weight ``sign`` (+1 or -1) added at a,
    from phi(Y) and phi(Y minus a)."""
    if sign not in (1, -1):
        raise ValueError("loop sign must be +1 or -1")
    return phi_y - sign * phi_y_del


def pendant_sqrt2_charpoly(phi_y: IntPoly, phi_y_del: IntPoly) -> IntPoly:
    """phi of Y with a pendant vertex attached at a by an edge of weight
    sqrt(2).  The squared weight keeps the result in integer coefficients."""
    return T * phi_y - 2 * phi_y_del


def path_sum_poly(g: Graph, a: int, b: int) -> IntPoly:
    """Sum over all simple a..b paths P of w(P) * phi(G minus P), where
    w(P) is the product of the edge weights along P.

    On unweighted graphs every w(P) is 1.  The square of this polynomial
    equals phi(G\\a) phi(G\\b) - phi(G) phi(G\\ab); signed, it gives the
    numerator of the off-diagonal resolvent entry."""
    if a == b:
        raise ValueError("path endpoints must differ")
    key = ("pathsum", a, b)
    cached = g._poly_cache.get(key)
    if cached is not None:
        return cached
    w = g.int_matrix()
    total = IntPoly()
    for path in iter_ab_paths(g, a, b):
        weight = 1
        for u, v in zip(path, path[1:]):
            weight *= w[u][v]
        total = total + weight * charpoly_deleted(g, path)
    # every path reversed has the same vertex set and weight product
    g._poly_cache[key] = total
    g._poly_cache[("pathsum", b, a)] = total
    return total


# ---------------------------------------------------------------------------
# rational functions

class RationalFunction:
    """Quotient of integer polynomials, stored fully reduced with a
    positive-leading-coefficient denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num: IntPoly, den: IntPoly):
        num = _coerce(num)
        den = _coerce(den)
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = IntPoly(), IntPoly((1,))
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = poly_divexact(num, g)
            den = poly_divexact(den, g)
        c = math.gcd(num.content(), den.content())
        if c > 1:
            num = IntPoly(x // c for x in num.coeffs)
            den = IntPoly(x // c for x in den.coeffs)
        if den.leading < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunction(IntPoly((other,)), IntPoly((1,)))
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = RationalFunction(IntPoly((other,)), IntPoly((1,)))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __eq__(self, other):
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def walk_gf(g: Graph, a: int) -> RationalFunction:
    """phi(G\\a) / phi(G): the closed-walk generating function at a after
    the substitution that trades the walk variable for t."""
    g._check_vertex(a)
    return RationalFunction(charpoly_deleted(g, [a]), charpoly(g))


def return_walk_gf(g: Graph, a: int) -> RationalFunction:
    """Generating function of closed walks at a that return exactly once,
    in the t domain: 1 - phi(G) / (t phi(G\\a)).

    This form is additive over vertex gluings at a, exactly.
    """
    g._check_vertex(a)
    phi = charpoly(g)
    phi_del = charpoly_deleted(g, [a])
    den = T * phi_del
    return RationalFunction(den - phi, den)


def poles_simple(num: IntPoly, den: IntPoly) -> bool:
    """True when every pole of num/den is simple after reduction."""
    if den.is_zero:
        raise ZeroDivisionError("zero denominator")
    g = poly_gcd(num, den)
    d = poly_divexact(den, g) if g.degree > 0 else den
    if d.degree <= 0:
        return True
    return poly_gcd(d, d.derivative()).degree == 0


def walk_equivalent(
    phi_y1_del: IntPoly, phi_y1: IntPoly, phi_y2_del: IntPoly, phi_y2: IntPoly
) -> bool:
    """Exact test of phi(Y1\\a)/phi(Y1) == phi(Y2\\b)/phi(Y2) by
    cross multiplication."""
    return phi_y1_del * phi_y2 == phi_y2_del * phi_y1
