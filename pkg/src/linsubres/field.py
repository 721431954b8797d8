"""Exact coefficient fields (Q and F_p) with arithmetic-operation counting.

Every +, -, *, / on a FieldValue increments whatever OpCounter scopes are
active on the current context.  Counting costs one ContextVar read per
operation when no scope is active, so the fast paths stay usable inside
the cubic-cost determinant oracle.
"""

from __future__ import annotations

import enum
from contextlib import contextmanager
from contextvars import ContextVar
from fractions import Fraction
from typing import Iterator, Union

from .errors import (
    CharacteristicError,
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
)

__all__ = [
    "FieldKind",
    "FieldDescriptor",
    "FieldValue",
    "OpCounter",
    "count_ops",
    "binary_pow",
    "char_of",
    "rationals",
    "prime_field",
    "parse_field_spec",
]


class FieldKind(enum.Enum):
    RATIONALS = "q"
    PRIME = "fp"


# Witness set proving primality for every integer below 3.3 * 10**24,
# which covers the full supported modulus range [2, 2**64).
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if p == q:
            return True
        if p % q == 0:
            return False
    d = p - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


def _inv_mod(a: int, p: int) -> int:
    # Extended Euclid.  Counted by the caller as a single division.
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
    return old_s % p


class OpCounter:
    """Monotone tally of field operations: adds (incl. subtractions),
    muls, divs, and unary negations."""

    __slots__ = ("adds", "muls", "divs", "negs")

    def __init__(self, adds: int = 0, muls: int = 0, divs: int = 0, negs: int = 0):
        self.adds = adds
        self.muls = muls
        self.divs = divs
        self.negs = negs

    def total(self) -> int:
        return self.adds + self.muls + self.divs + self.negs

    def snapshot(self) -> "OpCounter":
        return OpCounter(self.adds, self.muls, self.divs, self.negs)

    def as_dict(self) -> dict:
        """JSON shape used by the CLI: additions, multiplications, divisions."""
        return {"add": self.adds, "mul": self.muls, "div": self.divs}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpCounter):
            return NotImplemented
        return (self.adds, self.muls, self.divs, self.negs) == (
            other.adds,
            other.muls,
            other.divs,
            other.negs,
        )

    def __repr__(self) -> str:
        return (
            f"OpCounter(adds={self.adds}, muls={self.muls}, "
            f"divs={self.divs}, negs={self.negs})"
        )


# Stack of active counters.  A tuple so that nested scopes copy cheaply and
# threads started fresh see an empty stack.
_counters: ContextVar[tuple] = ContextVar("linsubres_op_counters", default=())


@contextmanager
def count_ops() -> Iterator[OpCounter]:
    """Activate a fresh OpCounter for the dynamic extent of the block.

    Scopes nest: an operation inside two nested scopes increments both
    counters, so library entry points can keep private tallies without
    hiding work from an enclosing caller's scope.
    """
    counter = OpCounter()
    token = _counters.set(_counters.get() + (counter,))
    try:
        yield counter
    finally:
        _counters.reset(token)


Payload = Union[Fraction, int]


class FieldDescriptor:
    """A concrete coefficient field: the rationals or F_p for prime p < 2**64."""

    __slots__ = ("kind", "modulus", "_zero", "_one")

    def __init__(self, kind: FieldKind, modulus: int | None = None):
        if kind is FieldKind.PRIME:
            if not isinstance(modulus, int) or modulus < 2:
                raise InvalidModulus(f"modulus must be an integer >= 2, got {modulus!r}")
            if modulus >= 2**64:
                raise InvalidModulus(f"modulus {modulus} is >= 2**64")
            if not _is_prime(modulus):
                raise InvalidModulus(f"modulus {modulus} is not prime")
        elif modulus is not None:
            raise InvalidModulus("the rationals take no modulus")
        self.kind = kind
        self.modulus = modulus
        self._zero = FieldValue(self, 0 if modulus else Fraction(0))
        self._one = FieldValue(self, 1 if modulus else Fraction(1))

    @property
    def characteristic(self) -> int:
        return self.modulus or 0

    @property
    def zero(self) -> "FieldValue":
        return self._zero

    @property
    def one(self) -> "FieldValue":
        return self._one

    def element(self, value) -> "FieldValue":
        """Canonical injection of an int, Fraction, decimal string, or
        "p/q" string.  Idempotent on FieldValues of this same field."""
        if isinstance(value, FieldValue):
            if value.descriptor != self:
                raise FieldMismatch(f"value from {value.descriptor} injected into {self}")
            return value
        if self.modulus is None:
            if isinstance(value, bool):
                raise TypeError("bool is not a field element")
            if isinstance(value, (int, str)):
                return FieldValue(self, Fraction(value))
            if isinstance(value, Fraction):
                return FieldValue(self, value)
            raise TypeError(f"cannot inject {type(value).__name__} into Q")
        if isinstance(value, bool):
            raise TypeError("bool is not a field element")
        if isinstance(value, str):
            value = int(value, 10)
        if isinstance(value, int):
            return FieldValue(self, value % self.modulus)
        raise TypeError(f"cannot inject {type(value).__name__} into F_{self.modulus}")

    def from_str(self, text: str) -> "FieldValue":
        try:
            return self.element(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse {text!r} as an element of {self}") from exc

    def spec_string(self) -> str:
        if self.modulus is None:
            return "q"
        return f"fp:{self.modulus}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return self.kind is other.kind and self.modulus == other.modulus

    def __hash__(self) -> int:
        return hash((self.kind, self.modulus))

    def __repr__(self) -> str:
        return f"FieldDescriptor({self.spec_string()!r})"


class FieldValue:
    """Immutable element of a FieldDescriptor.

    The payload is canonical: a normalized Fraction over Q, a residue in
    [0, p) over F_p.  Construct through FieldDescriptor.element."""

    __slots__ = ("descriptor", "payload")

    def __init__(self, descriptor: FieldDescriptor, payload: Payload):
        self.descriptor = descriptor
        self.payload = payload

    def is_zero(self) -> bool:
        return self.payload == 0

    def _check(self, other: "FieldValue") -> None:
        if self.descriptor is not other.descriptor and self.descriptor != other.descriptor:
            raise FieldMismatch(
                f"mixed fields: {self.descriptor.spec_string()} and "
                f"{other.descriptor.spec_string()}"
            )

    def __add__(self, other: "FieldValue") -> "FieldValue":
        if not isinstance(other, FieldValue):
            return NotImplemented
        self._check(other)
        for c in _counters.get():
            c.adds += 1
        d = self.descriptor
        if d.modulus is None:
            return FieldValue(d, self.payload + other.payload)
        return FieldValue(d, (self.payload + other.payload) % d.modulus)

    def __sub__(self, other: "FieldValue") -> "FieldValue":
        if not isinstance(other, FieldValue):
            return NotImplemented
        self._check(other)
        for c in _counters.get():
            c.adds += 1
        d = self.descriptor
        if d.modulus is None:
            return FieldValue(d, self.payload - other.payload)
        return FieldValue(d, (self.payload - other.payload) % d.modulus)

    def __mul__(self, other: "FieldValue") -> "FieldValue":
        if not isinstance(other, FieldValue):
            return NotImplemented
        self._check(other)
        for c in _counters.get():
            c.muls += 1
        d = self.descriptor
        if d.modulus is None:
            return FieldValue(d, self.payload * other.payload)
        return FieldValue(d, self.payload * other.payload % d.modulus)

    def __truediv__(self, other: "FieldValue") -> "FieldValue":
        if not isinstance(other, FieldValue):
            return NotImplemented
        self._check(other)
        if other.payload == 0:
            raise DivisionByZero(f"division by zero in {self.descriptor.spec_string()}")
        for c in _counters.get():
            c.divs += 1
        d = self.descriptor
        if d.modulus is None:
            return FieldValue(d, self.payload / other.payload)
        return FieldValue(d, self.payload * _inv_mod(other.payload, d.modulus) % d.modulus)

    def __neg__(self) -> "FieldValue":
        for c in _counters.get():
            c.negs += 1
        d = self.descriptor
        if d.modulus is None:
            return FieldValue(d, -self.payload)
        return FieldValue(d, -self.payload % d.modulus)

    def __pow__(self, exponent: int) -> "FieldValue":
        return binary_pow(self, exponent)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldValue):
            return NotImplemented
        return self.descriptor == other.descriptor and self.payload == other.payload

    def __hash__(self) -> int:
        return hash((self.descriptor, self.payload))

    def __bool__(self) -> bool:
        return self.payload != 0

    def __str__(self) -> str:
        return str(self.payload)

    def __repr__(self) -> str:
        return f"<{self.payload} in {self.descriptor.spec_string()}>"


_RATIONALS = FieldDescriptor(FieldKind.RATIONALS)
_PRIME_CACHE: dict = {}


def rationals() -> FieldDescriptor:
    return _RATIONALS


def prime_field(p: int) -> FieldDescriptor:
    desc = _PRIME_CACHE.get(p)
    if desc is None:
        desc = FieldDescriptor(FieldKind.PRIME, p)
        _PRIME_CACHE[p] = desc
    return desc


def char_of(descriptor: FieldDescriptor) -> int:
    """0 for Q, p for F_p."""
    return descriptor.characteristic


def parse_field_spec(text: str) -> FieldDescriptor:
    """Parse "q" or "fp:<prime>"."""
    text = text.strip().lower()
    if text == "q":
        return rationals()
    if text.startswith("fp:"):
        try:
            p = int(text[3:], 10)
        except ValueError as exc:
            raise InvalidModulus(f"bad field spec {text!r}") from exc
        return prime_field(p)
    raise InvalidModulus(f"unknown field spec {text!r}; expected 'q' or 'fp:<prime>'")


def binary_pow(base: FieldValue, exponent: int) -> FieldValue:
    """base**exponent by square and multiply.

    Uses at most 2*floor(log2(e)) + 1 multiplications for e >= 1; doubling
    the exponent adds at most two.  exponent = 0 returns one, including
    0**0 = 1 (the empty-product convention used throughout the package).
    """
    if not isinstance(exponent, int) or isinstance(exponent, bool):
        raise TypeError("exponent must be an int")
    if exponent < 0:
        raise ValueError("exponent must be nonnegative")
    result = None
    e = exponent
    while True:
        if e & 1:
            result = base if result is None else result * base
        e >>= 1
        if not e:
            break
        base = base * base
    return base.descriptor.one if result is None else result


def inject_nonzero(descriptor: FieldDescriptor, n: int, what: str) -> FieldValue:
    """Inject the integer n, raising CharacteristicError if its image is zero.

    Used before every division by an injected integer so a characteristic
    mistake fails loudly instead of silently corrupting a result."""
    v = descriptor.element(n)
    if v.is_zero():
        raise CharacteristicError(
            f"{what} = {n} vanishes in characteristic {descriptor.characteristic}"
        )
    return v
