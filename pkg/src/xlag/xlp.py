"""Exceptional Laguerre polynomials: Wronskian/cofactor constructions, X_m types, Laguerre expansions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exactalg import ExactPoly, QuasiPoly, ONE, ZERO, parse_rational, poly_det, wronskian
from .glp import degree_matrix, glp_matrix, laguerre_columns, maya_columns, omega
from .laguerre import laguerre
from .maya import MayaDiagram, canonical_shift, partition_of
from .partition import Partition, PartitionLike, as_partition, conjugate, degree_set, degrees


@dataclass(frozen=True)
class XlpSpec:
    lam: Partition = field(default_factory=Partition)
    mu: Partition = field(default_factory=Partition)
    alpha: Fraction = Fraction(0)
    n: int = 0

    def __post_init__(self):
        lam, mu = as_partition(self.lam), as_partition(self.mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "alpha", parse_rational(self.alpha))
        if not degree_set(lam, mu, self.n):
            raise ValueError(
                f"n not in degree sequence ℕ_{{λ,μ}}: n={self.n}, λ=({lam}), μ=({mu})"
            )

    @property
    def r(self) -> int:
        return self.lam.length + self.mu.length

    @property
    def s(self) -> int:
        """Degree of the appended Laguerre column."""
        return self.n - self.lam.weight - self.mu.weight + self.lam.length

    @property
    def window(self) -> int:
        return window(self.lam, self.mu)


def window(lam: PartitionLike, mu: PartitionLike) -> int:
    """Expansion window t = 2(|lambda|+|mu|) + r_2."""
    lam, mu = as_partition(lam), as_partition(mu)
    return 2 * (lam.weight + mu.weight) + mu.length


def _spec(lam, mu, alpha, n) -> XlpSpec:
    return XlpSpec(as_partition(lam), as_partition(mu), parse_rational(alpha), int(n))


def xlp_matrix(spec: XlpSpec) -> list[list[ExactPoly]]:
    mat = glp_matrix(spec.lam, spec.mu, spec.alpha, rows=list(range(spec.r + 1)))
    for l, row in enumerate(mat):
        sign = -1 if l % 2 else 1
        row.append(laguerre(spec.s - l, spec.alpha + l).scale(sign))
    return mat


def xlp_via_det(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> ExactPoly:
    """Full (r+1)x(r+1) shifted-parameter determinant."""
    spec = _spec(lam, mu, alpha, n)
    return poly_det(xlp_matrix(spec))


def xlp_wronskian(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> ExactPoly:
    """e^{-r_2 x} Wr[f_1, ..., f_r, L_s] computed on quasi-polynomials (independent oracle)."""
    spec = _spec(lam, mu, alpha, n)
    cols = laguerre_columns(spec.lam, spec.mu, spec.alpha)
    cols.append(QuasiPoly.term(0, 0, laguerre(spec.s, spec.alpha)))
    w = wronskian(cols) * QuasiPoly.term(-spec.mu.length, 0, ONE)
    return w.as_poly()


@lru_cache(maxsize=512)
def _cofactors(ns: tuple, ms: tuple, alpha: Fraction) -> tuple[ExactPoly, ...]:
    r = len(ns) + len(ms)
    out = []
    for l in range(r + 1):
        rows = [i for i in range(r + 1) if i != l]
        minor = degree_matrix(ns, ms, alpha, rows=rows)
        q = poly_det(minor) if minor else ONE
        out.append(q if (l + r) % 2 == 0 else -q)
    return tuple(out)


def cofactors(lam: PartitionLike, mu: PartitionLike, alpha) -> tuple[ExactPoly, ...]:
    """Q_0..Q_r with xlp = sum_l Q_l (-1)^l L^{(alpha+l)}_{s-l}; they do not depend on n."""
    return _cofactors(degrees(lam), degrees(mu), parse_rational(alpha))


def xlp_from_degrees(ns: tuple, ms: tuple, alpha, s: int) -> ExactPoly:
    """e^{-r_2 x} Wr[L_{n_j}, e^x L_{m_j}(-x), L_s] for raw degree lists, by cofactor expansion."""
    alpha = parse_rational(alpha)
    Q = _cofactors(tuple(ns), tuple(ms), alpha)
    out = ZERO
    for l, q in enumerate(Q):
        if q:
            term = q * laguerre(s - l, alpha + l)
            out = out - term if l % 2 else out + term
    return out


def xlp(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> ExactPoly:
    """L^{(alpha)}_{lambda,mu,n}, an exact polynomial of degree n."""
    spec = _spec(lam, mu, alpha, n)
    return xlp_from_degrees(degrees(spec.lam), degrees(spec.mu), spec.alpha, spec.s)


def xlp_tilde(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> ExactPoly:
    """Second construction: last column e^x L_s(-x) with s = n-|lambda|-|mu|+r_2."""
    lam, mu = as_partition(lam), as_partition(mu)
    alpha = parse_rational(alpha)
    s = n - lam.weight - mu.weight + mu.length
    if s < 0 or s in degrees(mu):
        raise ValueError(f"invalid degree for the second construction: s={s} must be >= 0 and not in degrees(μ)")
    r = lam.length + mu.length
    mat = glp_matrix(lam, mu, alpha, rows=list(range(r + 1)))
    for l, row in enumerate(mat):
        row.append(laguerre(s, alpha + l).reflect())
    return poly_det(mat)


def tilde_sign(lam: PartitionLike, mu: PartitionLike) -> int:
    r1, r2 = len(as_partition(lam)), len(as_partition(mu))
    return (-1) ** (r1 * (r1 + 1) // 2 + r2 * (r2 + 1) // 2)


# --------------------------------------------------------------------------- X_m families


def _det2(a, b, c, d) -> ExactPoly:
    return a * d - b * c


def xm_determinant(kind: str, m: int, n: int, alpha) -> ExactPoly:
    """The classical 2x2 determinant definitions of the X_m families."""
    alpha = parse_rational(alpha)
    X = ExactPoly.x()
    if kind == "I":
        if n < m:
            raise ValueError(f"type I needs n >= m, got n={n}, m={m}")
        return _det2(laguerre(m, alpha).reflect(), -laguerre(n - m - 1, alpha),
                     laguerre(m, alpha - 1).reflect(), laguerre(n - m, alpha - 1))
    if kind == "II":
        if n < m:
            raise ValueError(f"type II needs n >= m, got n={n}, m={m}")
        return _det2(X * laguerre(m, -alpha - 1), -laguerre(n - m, alpha + 1),
                     laguerre(m, -alpha - 2).scale(m - alpha - 1), laguerre(n - m - 1, alpha + 2))
    if kind == "III":
        if n <= m:
            raise ValueError(f"type III needs n > m, got n={n}, m={m}")
        # lower-left entry is the derivative of x^{-a-1} e^x L_m^{(-a-1)}(-x) with its prefactor removed
        return _det2(X * laguerre(m, -alpha - 1).reflect(), -laguerre(n - m - 1, alpha + 1),
                     laguerre(m + 1, -alpha - 2).reflect().scale(m + 1), laguerre(n - m - 2, alpha + 2))
    raise ValueError(f"unknown X_m type {kind!r}; expected I, II or III")


def xm_partition_form(kind: str, m: int, n: int, alpha) -> ExactPoly:
    """The same family written through partitions."""
    alpha = parse_rational(alpha)
    ones = Partition((1,) * m)
    if kind == "I":
        # one-row diagram read as the degree list (m); for m = 0 this is the single box at 0
        return -xlp_from_degrees((), (m,), alpha - 1, n - m)
    if kind == "II":
        c = (-1) ** (m * (m + 3) // 2) * (2 * m - n - alpha - 1)
        return xlp((), ones, alpha - m, n).scale(c)
    if kind == "III":
        return xlp(ones, (), alpha - m, n).scale(-n)
    raise ValueError(f"unknown X_m type {kind!r}; expected I, II or III")


def xm_type(kind: str, m: int, n: int, alpha) -> ExactPoly:
    """Build the determinant definition and assert it equals the partition form."""
    det = xm_determinant(kind, m, n, alpha)
    part = xm_partition_form(kind, m, n, alpha)
    if det != part:
        raise AssertionError(f"X_m type {kind} mismatch at m={m}, n={n}, alpha={alpha}")
    return det


# --------------------------------------------------------------------------- Laguerre expansion


def laguerre_basis_expansion(lam: PartitionLike, mu: PartitionLike, alpha, n: int) -> dict[int, Fraction]:
    """Coefficients c_k with xlp = sum_k c_k L^{(alpha+r)}_k, by top-down back-substitution."""
    spec = _spec(lam, mu, alpha, n)
    beta = spec.alpha + spec.r
    residual = list(xlp(spec.lam, spec.mu, spec.alpha, n).coeffs)
    out: dict[int, Fraction] = {}
    for k in range(len(residual) - 1, -1, -1):
        if residual[k] == 0:
            continue
        basis = laguerre(k, beta)
        c = residual[k] / basis.lead
        out[k] = c
        for i, b in enumerate(basis.coeffs):
            residual[i] -= c * b
    assert not any(residual)
    return out


def reassemble(coeffs: dict[int, Fraction], beta) -> ExactPoly:
    beta = parse_rational(beta)
    out = ZERO
    for k, c in coeffs.items():
        out = out + laguerre(k, beta).scale(c)
    return out


def omega_of(spec: XlpSpec) -> ExactPoly:
    return omega(spec.lam, spec.mu, spec.alpha)


# --------------------------------------------------------------------------- Maya-diagram extension


@dataclass(frozen=True)
class GeneralPositionResult:
    kind: str
    n: int
    lam: Partition
    mu: Partition
    alpha: Fraction
    reflected: bool
    constant: Fraction


def _extra_column(kind: str, alpha: Fraction, s: int) -> QuasiPoly:
    if kind == "a":
        return QuasiPoly.term(0, 0, laguerre(s, alpha))
    if kind == "b":
        return QuasiPoly.term(1, 0, laguerre(s, alpha).reflect())
    if kind == "c":
        return QuasiPoly.term(0, -alpha, laguerre(s, -alpha))
    # type-4 eigenfunction e^x x^{-alpha} L^{(-alpha)}_s(-x)
    return QuasiPoly.term(1, -alpha, laguerre(s, -alpha).reflect())


def extended_wronskian(kind: str, M1: MayaDiagram, M2: MayaDiagram, alpha, s: int) -> QuasiPoly:
    """Prefactored Wronskian of the Maya-diagram functions plus one extra eigenfunction of type a/b/c/d."""
    if kind not in ("a", "b", "c", "d"):
        raise ValueError(f"unknown extension type {kind!r}; expected a, b, c or d")
    alpha = parse_rational(alpha)
    forbidden = {"a": M1.right, "b": M2.right, "c": M2.left, "d": M1.left}[kind]
    if s < 0 or s in forbidden:
        raise ValueError(f"extra degree s={s} must be >= 0 and avoid {forbidden}")
    counts = {"a": 0, "b": 0, "c": 0, "d": 0}
    counts[kind] = 1
    r1, r2 = len(M1.right) + counts["a"], len(M2.right) + counts["b"]
    r3, r4 = len(M2.left) + counts["c"], len(M1.left) + counts["d"]
    cols = maya_columns(M1, M2, alpha) + [_extra_column(kind, alpha, s)]
    return wronskian(cols) * QuasiPoly.term(-(r2 + r4), (alpha + r1 + r2) * (r3 + r4), ONE)


def general_position(kind: str, M1: MayaDiagram, M2: MayaDiagram, alpha, s: int) -> GeneralPositionResult:
    """Identify the extended Wronskian with an exceptional Laguerre polynomial and return the ratio.

    a: xlp_{lam,mu,n}(x) at alpha-t1-t2;   b: xlp_{mu,lam,n}(-x) at alpha-t1-t2;
    c: xlp_{mu',lam',n}(x) at -alpha';     d: xlp_{lam',mu',n}(-x) at -alpha';
    with alpha' = alpha+n1+m1+2 and n1, m1 the top filled positions of M1, M2.
    """
    alpha = parse_rational(alpha)
    q = extended_wronskian(kind, M1, M2, alpha, s)
    lam, mu = partition_of(M1), partition_of(M2)
    t1, t2 = canonical_shift(M1), canonical_shift(M2)
    weight = lam.weight + mu.weight
    n1, m1 = M1.extended_right(1)[0], M2.extended_right(1)[0]
    if kind == "a":
        L, M, a, refl, n = lam, mu, alpha - t1 - t2, False, s + t1 + weight - lam.length
    elif kind == "b":
        L, M, a, refl, n = mu, lam, alpha - t1 - t2, True, s + t2 + weight - mu.length
    elif kind == "c":
        L, M = conjugate(mu), conjugate(lam)
        a, refl, n = -(alpha + n1 + m1 + 2), False, s + m1 + 1 + weight - L.length
    else:
        L, M = conjugate(lam), conjugate(mu)
        a, refl, n = -(alpha + n1 + m1 + 2), True, s + n1 + 1 + weight - L.length
    target = xlp(L, M, a, n)
    if refl:
        target = target.reflect()
    if q.is_zero():
        c = Fraction(0)
    else:
        if not q.is_poly():
            raise AssertionError(f"extended Wronskian is not a polynomial for {M1}, {M2}, alpha={alpha}, s={s}")
        p = q.as_poly()
        c = p.lead / target.lead if p.degree == target.degree else None
        if c is None or p != target.scale(c):
            raise AssertionError(f"type {kind}: extended Wronskian is not proportional to xlp for {M1}, {M2}, s={s}")
    return GeneralPositionResult(kind, n, L, M, a, refl, c)
