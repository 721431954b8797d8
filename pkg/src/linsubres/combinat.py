"""Combinatorial quantities as field elements.

Integer parameters stay in Z; only the values that enter the arithmetic
are injected into the field, so the operation counts reported by the
algorithms reflect actual field work.
"""

from __future__ import annotations

from .errors import CharacteristicError
from .field import FieldDescriptor, FieldValue, inject_nonzero


def binomial(k: int, l: int, descriptor: FieldDescriptor) -> FieldValue:
    """Field image of the binomial coefficient C(k + l, k).

    Runs the shorter of the two quotient products: min(k, l) steps of one
    multiplication and one division, so at most 4 * min(k, l) + O(1) field
    operations.  Every intermediate value is C(max(k, l) + i, i), itself the
    image of an integer.  Requires characteristic 0 or > min(k, l); the
    incremental divisions are by 1, ..., min(k, l).
    """
    if k < 0 or l < 0:
        raise ValueError(f"binomial arguments must be nonnegative, got ({k}, {l})")
    small, big = (k, l) if k <= l else (l, k)
    p = descriptor.characteristic
    if p and small >= p:
        raise CharacteristicError(
            f"binomial needs characteristic 0 or > min(k, l) = {small}, have {p}"
        )
    acc = descriptor.one
    for i in range(1, small + 1):
        acc = acc * descriptor.element(big + i)
        acc = acc / descriptor.element(i)
    return acc


def pochhammer(a: FieldValue, j: int) -> FieldValue:
    """Rising factorial (a)_j = a (a+1) ... (a+j-1); (a)_0 = 1.

    Costs j - 1 multiplications and j - 1 increments for j >= 1.
    """
    if j < 0:
        raise ValueError(f"pochhammer length must be nonnegative, got {j}")
    descriptor = a.descriptor
    if j == 0:
        return descriptor.one
    one = descriptor.one
    acc = a
    current = a
    for _ in range(j - 1):
        current = current + one
        acc = acc * current
    return acc


def falling_product(top: int, count: int, descriptor: FieldDescriptor) -> FieldValue:
    """Field image of top (top-1) ... (top-count+1); empty product is 1.

    With top = count this is the factorial count!.
    """
    if count < 0:
        raise ValueError(f"falling_product length must be nonnegative, got {count}")
    if count == 0:
        return descriptor.one
    acc = descriptor.element(top)
    for i in range(1, count):
        acc = acc * descriptor.element(top - i)
    return acc


__all__ = ["binomial", "pochhammer", "falling_product", "inject_nonzero"]
