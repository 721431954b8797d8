"""Jacobi polynomials with integer parameters, over exact fields.

Two independent evaluation routes (terminating hypergeometric sum and
iterated-derivative form) cross-check each other, plus denominator-free
expansions of Jacobi polynomials composed with the affine shift
z = (2x - alpha - beta) / (beta - alpha), which is where subresultants of
(x - alpha)^m and (x - beta)^n live.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .combinat import binomial, pochhammer
from .errors import CharacteristicError, CoincidentRoots, PreconditionError
from .field import FieldDescriptor, FieldValue, char_of, inject_nonzero
from .poly import DensePoly, ProblemSpec

__all__ = [
    "JacobiParams",
    "jacobi_hypergeometric",
    "jacobi_rodrigues",
    "shifted_jacobi",
    "pair_basis_coeffs",
    "expand_pair_basis",
    "hyp2f1_poly",
    "verify_pade_identity",
]


@dataclass(frozen=True)
class JacobiParams:
    """Degree r >= 0 and integer parameters (k, l), both allowed negative."""

    r: int
    k: int
    l: int

    def __post_init__(self):
        if not isinstance(self.r, int) or self.r < 0:
            raise PreconditionError(f"degree must be a nonnegative int, got {self.r!r}")
        if not isinstance(self.k, int) or not isinstance(self.l, int):
            raise PreconditionError("parameters k and l must be ints")


def jacobi_hypergeometric(params: JacobiParams, descriptor: FieldDescriptor) -> DensePoly:
    """P_r^{(k,l)}(x) via the terminating sum

        sum_j  (k+r-j+1)_j / j!  *  (l+j+1)_{r-j} / (r-j)!
               * ((x-1)/2)^{r-j} * ((x+1)/2)^j.

    Needs characteristic != 2 (the halves) and characteristic 0 or > r
    (divisions by j! and (r-j)!).
    """
    r, k, l = params.r, params.k, params.l
    p = char_of(descriptor)
    if p == 2:
        raise CharacteristicError("jacobi_hypergeometric needs characteristic != 2")
    if p and r >= p:
        raise CharacteristicError(
            f"jacobi_hypergeometric needs characteristic 0 or > r = {r}, have {p}"
        )
    one = descriptor.one
    half = one / descriptor.element(2)
    neg_half = -half
    x_minus = DensePoly(descriptor, (neg_half, half))  # (x - 1) / 2
    x_plus = DensePoly(descriptor, (half, half))       # (x + 1) / 2
    minus_powers = [DensePoly.one(descriptor)]
    plus_powers = [DensePoly.one(descriptor)]
    for _ in range(r):
        minus_powers.append(minus_powers[-1] * x_minus)
        plus_powers.append(plus_powers[-1] * x_plus)
    factorial = [one]
    for i in range(1, r + 1):
        factorial.append(factorial[-1] * descriptor.element(i))
    acc = DensePoly.zero(descriptor)
    for j in range(r + 1):
        rising_a = pochhammer(descriptor.element(k + r - j + 1), j)
        rising_b = pochhammer(descriptor.element(l + j + 1), r - j)
        weight = (rising_a / factorial[j]) * (rising_b / factorial[r - j])
        if weight.is_zero():
            continue
        acc = acc + (minus_powers[r - j] * plus_powers[j]).scale(weight)
    return acc


def jacobi_rodrigues(params: JacobiParams, descriptor: FieldDescriptor) -> DensePoly:
    """P_r^{(k,l)}(x) from the r-fold derivative of (1-x)^(k+r) (1+x)^(l+r).

    The derivative is tracked in factored form: after t steps it is
    (1-x)^(k+r-t) (1+x)^(l+r-t) Q_t with Q_0 = 1 and

        Q_{t+1} = ((l-k) - (k+l+2r-2t) x) Q_t + (1 - x^2) Q_t',

    so the weight prefactors cancel exactly and only the polynomial Q_r
    survives.  Valid for arbitrary integer k, l; characteristic 0 only
    (final division by 2^r r!).
    """
    r, k, l = params.r, params.k, params.l
    if char_of(descriptor) != 0:
        raise CharacteristicError("jacobi_rodrigues needs characteristic 0")
    a = k + r
    b = l + r
    one_minus_x2 = DensePoly.from_integers(descriptor, (1, 0, -1))
    q = DensePoly.one(descriptor)
    for t in range(r):
        linear = DensePoly.from_integers(descriptor, (l - k, -(a + b - 2 * t)))
        q = linear * q + one_minus_x2 * q.derivative()
    scalar = descriptor.element(Fraction((-1) ** r, 2**r * math.factorial(r)))
    return q.scale(scalar)


def expand_pair_basis(coeffs, alpha: FieldValue, beta: FieldValue) -> DensePoly:
    """Expand sum_j coeffs[j] (x - alpha)^j (x - beta)^(r-j), r = len - 1,
    into the monomial basis in O(r^2) field operations."""
    if not coeffs:
        raise PreconditionError("need at least one coefficient")
    descriptor = alpha.descriptor
    r = len(coeffs) - 1
    x_minus_alpha = DensePoly(descriptor, (-alpha, descriptor.one))
    x_minus_beta = DensePoly(descriptor, (-beta, descriptor.one))
    beta_powers = [DensePoly.one(descriptor)]
    for _ in range(r):
        beta_powers.append(beta_powers[-1] * x_minus_beta)
    acc = DensePoly.constant(coeffs[r])
    for t in range(r - 1, -1, -1):
        acc = acc * x_minus_alpha
        if not coeffs[t].is_zero():
            acc = acc + beta_powers[r - t].scale(coeffs[t])
    return acc


def pair_basis_coeffs(r: int, k: int, l: int, descriptor: FieldDescriptor) -> list:
    """Coefficients t_j of (beta-alpha)^r P_r^{(k,l)}(z) on the basis
    (x-alpha)^j (x-beta)^(r-j), where z = (2x-alpha-beta)/(beta-alpha):

        t_j = C(k+r, j) * C(l+r, r-j)

    as field images of generalized binomials (top argument may be
    negative).  Computed by ratio updates

        t_0 = C(l+r, r),    t_{j+1} = t_j (k+r-j)(r-j) / ((j+1)(l+j+1)),

    O(r) operations.  Needs characteristic 0 or > r, and raises if some
    l + j + 1 is the integer zero (the ratio route has a pole there).
    """
    if r < 0:
        raise PreconditionError(f"degree must be nonnegative, got {r}")
    t = descriptor.one
    for i in range(1, r + 1):
        t = t * descriptor.element(l + i) / inject_nonzero(descriptor, i, "index i")
    out = [t]
    for j in range(r):
        if l + j + 1 == 0:
            raise PreconditionError(
                f"coefficient ratio has a pole at j = {j + 1} for (r, k, l) = ({r}, {k}, {l})"
            )
        numerator = descriptor.element((k + r - j) * (r - j))
        denominator = inject_nonzero(
            descriptor, (j + 1) * (l + j + 1), "ratio denominator (j+1)(l+j+1)"
        )
        t = t * numerator / denominator
        out.append(t)
    return out


def shifted_jacobi(spec: ProblemSpec) -> DensePoly:
    """The integer-coefficient combination

        sum_j C(n-d+j-1, j) C(m-j-1, d-j) (x-alpha)^j (x-beta)^(d-j),

    which equals (alpha-beta)^d P_d^{(-n,-m)}((2x-alpha-beta)/(beta-alpha)).
    Its leading coefficient is the image of C(m+n-d-1, d).  Subresultants
    of the structured pair are scalar multiples of this polynomial.

    Needs alpha != beta and characteristic 0 or >= m+n-d.
    """
    m, n, d = spec.m, spec.n, spec.d
    descriptor = spec.descriptor
    if spec.alpha == spec.beta:
        raise CoincidentRoots("shifted_jacobi needs alpha != beta")
    p = char_of(descriptor)
    if p and p < m + n - d:
        raise CharacteristicError(
            f"shifted_jacobi needs characteristic 0 or >= m+n-d = {m + n - d}, have {p}"
        )
    coeffs = [
        binomial(j, n - d - 1, descriptor) * binomial(d - j, m - d - 1, descriptor)
        for j in range(d + 1)
    ]
    return expand_pair_basis(coeffs, spec.alpha, spec.beta)


def hyp2f1_poly(a: int, b: int, c: int, descriptor: FieldDescriptor) -> DensePoly:
    """The terminating Gauss series 2F1(a, b; c; x) for integer a <= 0.

    Term i+1 comes from term i by the ratio (a+i)(b+i) / ((c+i)(i+1)).
    Raises if a denominator image vanishes before the series terminates
    (e.g. (c)_i hitting zero).  Degree at most -a, less when (b)_i runs
    into zero first.
    """
    if not isinstance(a, int) or not isinstance(b, int) or not isinstance(c, int):
        raise PreconditionError("hyp2f1_poly takes integer parameters")
    if a > 0:
        raise PreconditionError(f"need a <= 0 for a terminating series, got a = {a}")
    one = descriptor.one
    terms = [one]
    t = one
    for i in range(-a):
        factor_b = descriptor.element(b + i)
        if factor_b.is_zero():
            break
        if c + i == 0:
            raise PreconditionError(
                f"2F1 denominator Pochhammer (c)_i hits zero at i = {i + 1} "
                f"before the series terminates (c = {c})"
            )
        denominator = inject_nonzero(
            descriptor, (c + i) * (i + 1), f"2F1 denominator (c+{i})({i}+1)"
        )
        t = t * descriptor.element(a + i) * factor_b / denominator
        terms.append(t)
    return DensePoly(descriptor, terms)


def verify_pade_identity(m: int, n: int, k: int, descriptor: FieldDescriptor) -> bool:
    """Check that Sres_m(x^(m+n+1), (x-1)^k) and its second Bezout cofactor
    match the (m, n) Pade numerator and denominator of (1-x)^k:

        Sres_m = lambda * 2F1(-m, -k-n; -m-n; x)
        G_m    = (-1)^k lambda * 2F1(-n, k-m; -m-n; x)

    with lambda fixed by the x^m coefficients.  Characteristic 0 only.
    For k = m the pair is degenerate (d equals deg g); the defining minors
    then have no f-rows and give Sres_m = (x-1)^m with cofactors (0, 1).
    """
    if char_of(descriptor) != 0:
        raise CharacteristicError("verify_pade_identity needs characteristic 0")
    if m < 1 or n < 1:
        raise PreconditionError(f"need m, n >= 1, got ({m}, {n})")
    if k < m:
        raise PreconditionError(f"need k >= m, got k = {k} < m = {m}")
    from .fastsubres import cofactors, sres_fast  # deferred: fastsubres imports us
    from .poly import power_of_linear

    if k == m:
        sres = power_of_linear(descriptor.one, k)
        g_cof = DensePoly.one(descriptor)
    else:
        spec = ProblemSpec(
            m + n + 1, k, m, descriptor.element(0), descriptor.element(1)
        )
        sres = sres_fast(spec).polynomial()
        g_cof = cofactors(spec).g
    numerator = hyp2f1_poly(-m, -k - n, -m - n, descriptor)
    denominator = hyp2f1_poly(-n, k - m, -m - n, descriptor)
    lead_sres = sres.coeff(m)
    lead_num = numerator.coeff(m)
    if lead_sres.is_zero() or lead_num.is_zero():
        return False
    lam = lead_sres / lead_num
    if sres != numerator.scale(lam):
        return False
    sign = descriptor.one if k % 2 == 0 else -descriptor.one
    return g_cof == denominator.scale(sign * lam)
