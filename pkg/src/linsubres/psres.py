"""All principal subresultants of ((x-alpha)^m, (x-beta)^n) at once.

The values s_0, ..., s_{min(m,n)-1} factor through two coupled product
chains, one rational in (m, n) only and one in powers of alpha - beta, so
the whole vector costs O(min(m, n) + log(mn)) field operations.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import binomial
from .errors import CharacteristicError, FieldMismatch, PreconditionError
from .field import FieldValue, binary_pow, char_of, inject_nonzero
from .poly import ProblemSpec

__all__ = ["PsresSchedule", "psres_schedule", "psres_all", "psres_single"]


@dataclass(frozen=True)
class PsresSchedule:
    """The chains behind the principal subresultant vector.

    With mn = min(m, n) and delta = alpha - beta:

        v[i]     = v(i+1), i+1 = 1..mn-2: the ratio u(d+1)/u(d)
        u[i]     = u(i+1), i+1 = 1..mn-1: the ratio c(d)/c(d-1)
        c[i]     = c(i),   i   = 0..mn-1: the delta-free factor of s_i
        gamma[i] = gamma(i), i = 0..mn-2: the ratio h(d+1)/h(d) = delta^(2i+1-m-n)
        h[i]     = h(i),   i   = 0..mn-1: delta^((m-i)(n-i))
        values[i] = c(i) * h(i) = s_i

    alpha = beta short-circuits to all-zero values with empty chains.
    """

    m: int
    n: int
    alpha: FieldValue
    beta: FieldValue
    v: tuple
    u: tuple
    c: tuple
    gamma: tuple
    h: tuple
    values: tuple


def psres_schedule(m: int, n: int, alpha: FieldValue, beta: FieldValue) -> PsresSchedule:
    """Build the full schedule.  Needs characteristic 0 or >= m + n."""
    for name, value in (("m", m), ("n", n)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 1:
            raise PreconditionError(f"{name} must be an int >= 1, got {value!r}")
    if not isinstance(alpha, FieldValue) or not isinstance(beta, FieldValue):
        raise PreconditionError("alpha and beta must be FieldValues")
    if alpha.descriptor != beta.descriptor:
        raise FieldMismatch("alpha and beta live in different fields")
    descriptor = alpha.descriptor
    p = char_of(descriptor)
    if p and p < m + n:
        raise CharacteristicError(
            f"the principal subresultant schedule needs characteristic 0 "
            f"or >= m + n = {m + n}, have {p}"
        )
    low = min(m, n)
    if alpha == beta:
        return PsresSchedule(
            m=m, n=n, alpha=alpha, beta=beta,
            v=(), u=(), c=(), gamma=(), h=(),
            values=(descriptor.zero,) * low,
        )
    v = []
    for d in range(1, low - 1):
        numerator = descriptor.element(d * (m - d) * (n - d) * (m + n - d))
        denominator = inject_nonzero(
            descriptor,
            (m + n - 2 * d - 1) * (m + n - 2 * d) ** 2 * (m + n - 2 * d + 1),
            "(m+n-2d-1)(m+n-2d)^2(m+n-2d+1)",
        )
        v.append(numerator / denominator)
    u = []
    if low >= 2:
        u.append(binomial(m - 1, n - 1, descriptor))
        for d in range(2, low):
            u.append(u[-1] * v[d - 2])
    c = [descriptor.one]
    for d in range(1, low):
        c.append(u[d - 1] * c[-1])
    delta = alpha - beta
    gamma = []
    if low >= 2:
        gamma.append(descriptor.one / binary_pow(delta, m + n - 1))
        delta_sq = delta * delta
        for _ in range(low - 2):
            gamma.append(delta_sq * gamma[-1])
    h = [binary_pow(delta, m * n)]
    for d in range(low - 1):
        h.append(gamma[d] * h[-1])
    values = tuple(c[d] * h[d] for d in range(low))
    return PsresSchedule(
        m=m, n=n, alpha=alpha, beta=beta,
        v=tuple(v), u=tuple(u), c=tuple(c), gamma=tuple(gamma), h=tuple(h),
        values=values,
    )


def psres_all(m: int, n: int, alpha: FieldValue, beta: FieldValue) -> list:
    """[s_0, ..., s_{min(m,n)-1}] in O(min(m,n) + log(mn)) operations."""
    return list(psres_schedule(m, n, alpha, beta).values)


def psres_single(spec: ProblemSpec) -> FieldValue:
    """One principal subresultant s_d, via the closed-form product."""
    from .fastsubres import leading_coefficient_sd

    return leading_coefficient_sd(spec)
