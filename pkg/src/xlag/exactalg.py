"""Exact rational polynomials, quasi-polynomials and Wronskian determinants.

Scalars are :class:`fractions.Fraction`. An :class:`ExactPoly` is a dense tuple of
coefficients in ascending degree; a :class:`QuasiPoly` is a finite sum of terms
``exp(a x) * x**b * P(x)`` with integer ``a`` and rational ``b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import comb, factorial, gcd, inf, lcm
from typing import Iterable, Sequence, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: RationalLike) -> Fraction:
    """Parse an exact rational ``"p/q"`` or integer; decimal/float text is rejected."""
    if isinstance(text, Fraction):
        return text
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        raise ValueError(f"alpha must be an exact rational p/q, got float {text!r}")
    m = _RATIONAL_RE.match(str(text))
    if not m:
        raise ValueError(f"alpha must be an exact rational p/q, got {text!r}")
    num, den = int(m.group(1)), int(m.group(2) or 1)
    if den == 0:
        raise ValueError(f"zero denominator in rational {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------- polynomials


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    cs = [Fraction(c) for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


@dataclass(frozen=True)
class ExactPoly:
    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _trim(self.coeffs))

    # constructors

    @classmethod
    def const(cls, c) -> "ExactPoly":
        return cls((Fraction(c),))

    @classmethod
    def x(cls) -> "ExactPoly":
        return cls((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, k: int, c=1) -> "ExactPoly":
        return cls((Fraction(0),) * k + (Fraction(c),))

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "ExactPoly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-Fraction(r), Fraction(1)))
        return p

    # basic queries

    @property
    def degree(self) -> Union[int, float]:
        """Degree, with ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else -inf

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __repr__(self) -> str:
        if not self.coeffs:
            return "ExactPoly(0)"
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return "ExactPoly(" + " + ".join(terms) + ")"

    # arithmetic

    def __add__(self, other) -> "ExactPoly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return ExactPoly(tuple(a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self) -> "ExactPoly":
        return ExactPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> "ExactPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "ExactPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "ExactPoly":
        other = _as_poly(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ExactPoly()
        if len(b) == 1:
            return ExactPoly(tuple(c * b[0] for c in a))
        if len(a) == 1:
            return ExactPoly(tuple(a[0] * c for c in b))
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return ExactPoly(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ExactPoly":
        out = ExactPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c) -> "ExactPoly":
        c = Fraction(c)
        return ExactPoly(tuple(v * c for v in self.coeffs))

    def shift_degree(self, k: int) -> "ExactPoly":
        """Multiply by x**k (k >= 0) or drop the k lowest coefficients (k < 0, must be zero)."""
        if k >= 0:
            return ExactPoly((Fraction(0),) * k + self.coeffs) if self.coeffs else self
        if any(self.coeffs[:-k]):
            raise ValueError("division by a power of x is not exact")
        return ExactPoly(self.coeffs[-k:])

    def low_order(self) -> int:
        """Multiplicity of the root at 0 (0 for the zero polynomial)."""
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return 0

    def derivative(self, j: int = 1) -> "ExactPoly":
        cs = self.coeffs
        for _ in range(j):
            cs = tuple(k * cs[k] for k in range(1, len(cs)))
        return ExactPoly(cs)

    def reflect(self) -> "ExactPoly":
        """P(-x)."""
        return ExactPoly(tuple(c if k % 2 == 0 else -c for k, c in enumerate(self.coeffs)))

    def compose_linear(self, a, b=0) -> "ExactPoly":
        """P(a x + b)."""
        lin = ExactPoly((Fraction(b), Fraction(a)))
        out = ExactPoly()
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def __call__(self, x):
        """Horner evaluation; works for Fraction, int, float, complex and mpmath numbers."""
        try:
            import mpmath

            if isinstance(x, (mpmath.mpf, mpmath.mpc)):
                return self.eval_mp(x)
        except ImportError:  # pragma: no cover
            pass
        if isinstance(x, (float, complex)):
            acc = 0.0
            for c in reversed(self.coeffs):
                acc = acc * x + float(c)
            return acc
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_mp(self, x):
        import mpmath

        acc = mpmath.mpf(0)
        for c in reversed(self.coeffs):
            acc = acc * x + mpmath.mpf(c.numerator) / c.denominator
        return acc

    def mp_coeffs(self):
        import mpmath

        return [mpmath.mpf(c.numerator) / c.denominator for c in self.coeffs]

    def divmod(self, other: "ExactPoly") -> tuple["ExactPoly", "ExactPoly"]:
        other = _as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs) + 1
        if dq <= 0:
            return ExactPoly(), self
        quo = [Fraction(0)] * dq
        lead = other.coeffs[-1]
        d = len(other.coeffs) - 1
        for k in range(dq - 1, -1, -1):
            q = rem[k + d] / lead
            quo[k] = q
            if q:
                for i, c in enumerate(other.coeffs):
                    rem[k + i] -= q * c
        return ExactPoly(tuple(quo)), ExactPoly(tuple(rem[:d]))

    def exact_div(self, other: "ExactPoly") -> "ExactPoly":
        q, r = self.divmod(other)
        if r:
            raise ValueError("polynomial division is not exact")
        return q

    def monic(self) -> "ExactPoly":
        return self.scale(1 / self.lead) if self.coeffs else self

    def primitive_integer(self) -> tuple[Fraction, tuple[int, ...]]:
        """Write self = c * Q with Q having coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(0), ()
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [int(c * den) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        if ints[-1] < 0:
            g = -g
        return Fraction(g, den), tuple(v // g for v in ints)

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "ExactPoly":
        return cls(tuple(parse_rational(s) for s in data))


def _as_poly(p) -> ExactPoly:
    if isinstance(p, ExactPoly):
        return p
    return ExactPoly.const(p)


ZERO = ExactPoly()
ONE = ExactPoly.const(1)
X = ExactPoly.x()


def poly_gcd(a: ExactPoly, b: ExactPoly) -> ExactPoly:
    """Monic gcd over the rationals, computed on primitive integer remainders."""
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    a = ExactPoly(a.primitive_integer()[1])
    b = ExactPoly(b.primitive_integer()[1])
    while b:
        _, r = a.divmod(b)
        a, b = b, (ExactPoly(r.primitive_integer()[1]) if r else r)
    return a.monic()


def squarefree_decomposition(p: ExactPoly) -> list[tuple[ExactPoly, int]]:
    """Yun's algorithm: p = lead * prod f_i**i with squarefree, pairwise coprime monic f_i."""
    if p.degree <= 0:
        return []
    out = []
    dp = p.derivative()
    a = poly_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a.monic(), i))
        i += 1
    return out


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> ExactPoly:
    """Exact Newton interpolation through (xs[i], ys[i])."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = ExactPoly()
    for i in range(n - 1, -1, -1):
        p = p * ExactPoly((-Fraction(xs[i]), Fraction(1))) + coef[i]
    return p


# --------------------------------------------------------------------------- determinants


def _bareiss_int(m: list[list[int]]) -> int:
    """Fraction-free Gaussian elimination on an integer matrix."""
    n = len(m)
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rational_det(m: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant of a rational matrix: clear each row to integers, then Bareiss."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in m:
        den = reduce(lcm, (Fraction(v).denominator for v in row), 1)
        rows.append([int(Fraction(v) * den) for v in row])
        scale /= den
    return scale * _bareiss_int(rows)


def _cofactor_det(m: Sequence[Sequence[ExactPoly]]) -> ExactPoly:
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    out = ExactPoly()
    for j in range(n):
        if m[0][j]:
            minor = [row[:j] + row[j + 1:] for row in m[1:]]
            term = m[0][j] * _cofactor_det(minor)
            out = out + term if j % 2 == 0 else out - term
    return out


def poly_det(m: Sequence[Sequence[ExactPoly]], degree_bound: int | None = None) -> ExactPoly:
    """Determinant of a square matrix of ExactPoly entries.

    Small matrices use cofactor expansion. Larger ones are evaluated at the integer
    points 0..B (B a degree bound), each value found by exact Bareiss elimination,
    and the result recovered by Newton interpolation.
    """
    n = len(m)
    if n == 0:
        return ONE
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n <= 3:
        return _cofactor_det(m)
    if degree_bound is None:
        col_bound = sum(max(max(m[i][j].degree, 0) for i in range(n)) for j in range(n))
        row_bound = sum(max(max(e.degree, 0) for e in row) for row in m)
        degree_bound = min(col_bound, row_bound)
    xs = [Fraction(k) for k in range(degree_bound + 1)]
    ys = [rational_det([[e(x) for e in row] for row in m]) for x in xs]
    return interpolate(xs, ys)


# --------------------------------------------------------------------------- quasi-polynomials


def _frac_part(b: Fraction) -> Fraction:
    return b - (b.numerator // b.denominator)


@dataclass(frozen=True)
class QuasiPoly:
    """Sum of terms exp(a x) x**b P(x), stored normalized.

    Terms are keyed by ``(a, b)``; terms whose ``b`` agree modulo 1 are merged, and
    any factor x**k of ``P`` is moved into ``b`` so that ``P(0) != 0``.
    """

    terms: tuple[tuple[int, Fraction, ExactPoly], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", _normalize(self.terms))

    @classmethod
    def term(cls, a: int = 0, b=0, p: ExactPoly | None = None) -> "QuasiPoly":
        return cls(((int(a), Fraction(b), ONE if p is None else p),))

    @classmethod
    def from_poly(cls, p: ExactPoly) -> "QuasiPoly":
        return cls(((0, Fraction(0), p),))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "QuasiPoly(0)"
        return "QuasiPoly(" + " + ".join(f"e^({a}x) x^({b}) {p!r}" for a, b, p in self.terms) + ")"

    def __add__(self, other: "QuasiPoly") -> "QuasiPoly":
        return QuasiPoly(self.terms + other.terms)

    def __neg__(self) -> "QuasiPoly":
        return QuasiPoly(tuple((a, b, -p) for a, b, p in self.terms))

    def __sub__(self, other: "QuasiPoly") -> "QuasiPoly":
        return self + (-other)

    def __mul__(self, other) -> "QuasiPoly":
        if not isinstance(other, QuasiPoly):
            return QuasiPoly(tuple((a, b, p * other) for a, b, p in self.terms))
        return QuasiPoly(tuple(
            (a1 + a2, b1 + b2, p1 * p2) for a1, b1, p1 in self.terms for a2, b2, p2 in other.terms
        ))

    __rmul__ = __mul__

    def derivative(self, j: int = 1) -> "QuasiPoly":
        f = self
        for _ in range(j):
            f = qp_derivative(f)
        return f

    def reflect(self) -> "QuasiPoly":
        """f(-x), defined when every power offset is an integer."""
        out = []
        for a, b, p in self.terms:
            if b.denominator != 1:
                raise ValueError("reflection of a non-integer power of x is not single-valued")
            sign = -1 if int(b) % 2 else 1
            out.append((-a, b, p.reflect().scale(sign)))
        return QuasiPoly(tuple(out))

    def as_poly(self) -> ExactPoly:
        """The underlying polynomial; raises unless self is a plain polynomial."""
        if not self.terms:
            return ZERO
        if len(self.terms) != 1:
            raise ValueError(f"not a polynomial: {self!r}")
        a, b, p = self.terms[0]
        if a != 0 or b.denominator != 1 or b < 0:
            raise ValueError(f"not a polynomial: {self!r}")
        return p.shift_degree(int(b))

    def is_poly(self) -> bool:
        try:
            self.as_poly()
        except ValueError:
            return False
        return True

    def single_term(self) -> tuple[int, Fraction, ExactPoly]:
        if len(self.terms) != 1:
            raise ValueError("expected a single-term quasi-polynomial")
        return self.terms[0]


def _normalize(terms) -> tuple[tuple[int, Fraction, ExactPoly], ...]:
    groups: dict[tuple[int, Fraction], list[tuple[Fraction, ExactPoly]]] = {}
    for a, b, p in terms:
        b = Fraction(b)
        if not p:
            continue
        groups.setdefault((int(a), _frac_part(b)), []).append((b, p))
    out = []
    for (a, _), items in groups.items():
        bmin = min(b for b, _ in items)
        total = ZERO
        for b, p in items:
            total = total + p.shift_degree(int(b - bmin))
        if not total:
            continue
        k = total.low_order()
        out.append((a, bmin + k, total.shift_degree(-k)))
    out.sort(key=lambda t: (t[0], t[1]))
    return tuple(out)


def qp_derivative(f: QuasiPoly) -> QuasiPoly:
    """d/dx (e^{ax} x^b P) = e^{ax} x^{b-1} (a x P + b P + x P')."""
    out = []
    for a, b, p in f.terms:
        q = p.shift_degree(1).scale(a) + p.scale(b) + p.derivative().shift_degree(1)
        out.append((a, b - 1, q))
    return QuasiPoly(tuple(out))


def _general_det(cols: Sequence[Sequence[QuasiPoly]]) -> QuasiPoly:
    """Laplace expansion with memoization over the set of used columns."""
    r = len(cols)
    memo: dict[tuple[int, ...], QuasiPoly] = {(): QuasiPoly.term(0, 0, ONE)}
    # build minors on rows r-k..r-1 for growing column subsets
    for k in range(1, r + 1):
        row = r - k
        for subset in combinations(range(r), k):
            acc = QuasiPoly()
            for pos, j in enumerate(subset):
                entry = cols[j][row]
                if entry.is_zero():
                    continue
                rest = subset[:pos] + subset[pos + 1:]
                minor = memo.get(rest)
                if minor is None or minor.is_zero():
                    continue
                term = entry * minor
                acc = acc + term if pos % 2 == 0 else acc - term
            memo[subset] = acc
        for subset in [s for s in memo if len(s) == k - 1]:
            del memo[subset]
    return memo[tuple(range(r))]


def structured_det(columns: Sequence[QuasiPoly], row_orders: Sequence[int]) -> QuasiPoly:
    """det( d^{l_i} f_j / dx^{l_i} ) with row i holding derivatives of order ``row_orders[i]``."""
    if len(columns) != len(row_orders):
        raise ValueError(f"dimension mismatch: {len(columns)} columns, {len(row_orders)} row orders")
    if any(b <= a for a, b in zip(row_orders, row_orders[1:])) or any(l < 0 for l in row_orders):
        raise ValueError("row orders must be strictly increasing non-negative integers")
    r = len(columns)
    if r == 0:
        return QuasiPoly.term(0, 0, ONE)
    cols = []
    for f in columns:
        derivs, g, order = [], f, 0
        for l in row_orders:
            g = g.derivative(l - order)
            order = l
            derivs.append(g)
        cols.append(derivs)
    if all(len(e.terms) <= 1 for col in cols for e in col) and all(
        len({(e.terms[0][0], _frac_part(e.terms[0][1])) for e in col if e.terms}) <= 1 for col in cols
    ):
        return _single_term_det(cols)
    return _general_det(cols)


def _single_term_det(cols: list[list[QuasiPoly]]) -> QuasiPoly:
    """Each column is e^{a_j x} x^{beta_j} times polynomials: factor out and take a polynomial det."""
    r = len(cols)
    a_tot, b_tot = 0, Fraction(0)
    mat = [[ZERO] * r for _ in range(r)]
    for j, col in enumerate(cols):
        nonzero = [e.terms[0] for e in col if e.terms]
        if not nonzero:
            return QuasiPoly()
        a = nonzero[0][0]
        beta = min(t[1] for t in nonzero)
        a_tot += a
        b_tot += beta
        for i, e in enumerate(col):
            if e.terms:
                _, b, p = e.terms[0]
                mat[i][j] = p.shift_degree(int(b - beta))
    return QuasiPoly(((a_tot, b_tot, poly_det(mat)),))


def wronskian(fs: Sequence[QuasiPoly]) -> QuasiPoly:
    if not fs:
        raise ValueError("wronskian of an empty list")
    return structured_det(fs, list(range(len(fs))))


def lcoeff_identity_check(xs: Sequence) -> tuple[Fraction, Fraction]:
    """Both sides of sum_k x_k prod_{j != k} (x_j - x_k + 1)/(x_j - x_k) = sum x_k - C(r, 2)."""
    xs = [Fraction(v) for v in xs]
    if len(set(xs)) != len(xs):
        raise ValueError(f"entries must be pairwise distinct, got {xs}")
    lhs = Fraction(0)
    for k, xk in enumerate(xs):
        prod = Fraction(1)
        for j, xj in enumerate(xs):
            if j != k:
                prod *= (xj - xk + 1) / (xj - xk)
        lhs += xk * prod
    rhs = sum(xs, Fraction(0)) - comb(len(xs), 2)
    return lhs, rhs


def vandermonde(values: Sequence[int]) -> int:
    """prod_{i<j} (v_j - v_i)."""
    out = 1
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            out *= values[j] - values[i]
    return out


def rising(x: Fraction, k: int) -> Fraction:
    """(x+1)(x+2)...(x+k) = Gamma(x+k+1)/Gamma(x+1)."""
    out = Fraction(1)
    for i in range(1, k + 1):
        out *= x + i
    return out


def fact(n: int) -> int:
    return factorial(n)
