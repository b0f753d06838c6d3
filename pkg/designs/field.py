# designs/field.py
"""Small finite fields GF(p^m), modelled as GF(p)[x] / (modulus).

The modulus is the lexicographically first monic irreducible polynomial of
degree m (coefficients compared constant term first), so every run builds the
same model. Elements are numbered by index = sum c_i p^i, which makes a
prime field enumerate 0, 1, ..., p-1 and GF(4) enumerate 0, 1, t, t+1.
"""

import itertools
import logging
import os
from dataclasses import dataclass
from functools import cache
from typing import Union

from dotenv import load_dotenv

from designs.errors import FieldError

load_dotenv()

logger = logging.getLogger(__name__)

FIELD_CAP = int(os.getenv("PERMDESIGN_FIELD_CAP", "256"))


def _poly_mod(a: list[int], b: tuple[int, ...], p: int) -> list[int]:
    """Remainder of a by the monic polynomial b over GF(p)."""
    out = [c % p for c in a]
    deg_b = len(b) - 1
    for d in range(len(out) - 1, deg_b - 1, -1):
        c = out[d]
        if c:
            for i, bc in enumerate(b):
                out[d - deg_b + i] = (out[d - deg_b + i] - c * bc) % p
    while out and out[-1] == 0:
        out.pop()
    return out


def _is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    m = len(modulus) - 1
    for d in range(1, m // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(list(modulus), low + (1,), p):
                return False
    return True


def _prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    m, rest = 0, q
    while rest % p == 0:
        rest //= p
        m += 1
    if rest != 1:
        raise FieldError(f"{q} is not a prime power")
    return p, m


@dataclass(frozen=True)
class FiniteField:
    p: int
    m: int
    modulus: tuple[int, ...]

    @property
    def q(self) -> int:
        return self.p**self.m

    def element(self, coeffs) -> "FieldElement":
        padded = [c % self.p for c in coeffs] + [0] * self.m
        return FieldElement(self, tuple(padded[: self.m]))

    def element_at(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise FieldError(f"index {index} outside GF({self.q})")
        coeffs = []
        for _ in range(self.m):
            index, c = divmod(index, self.p)
            coeffs.append(c)
        return FieldElement(self, tuple(coeffs))

    @property
    def zero(self) -> "FieldElement":
        return self.element_at(0)

    @property
    def one(self) -> "FieldElement":
        return self.element_at(1)

    def generator(self) -> "FieldElement":
        """The class of x (the 't' in t^2 = -1 for GF(9))."""
        if self.m == 1:
            return self.one
        return self.element([0, 1])

    def __str__(self) -> str:
        return f"GF({self.q})"


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    coeffs: tuple[int, ...]

    @property
    def index(self) -> int:
        return sum(c * self.field.p**i for i, c in enumerate(self.coeffs))

    def _same_field(self, other: "FieldElement") -> None:
        if other.field != self.field:
            raise FieldError(f"cannot mix {self.field} and {other.field}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        return self.field.element([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "FieldElement":
        return self.field.element([-a for a in self.coeffs])

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return self + (-other)

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._same_field(other)
        product = [0] * (2 * self.field.m - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        if self.field.m > 1:
            product = _poly_mod(product, self.field.modulus, self.field.p)
        return self.field.element(product)

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inv() ** (-exponent)
        result, base = self.field.one, self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inv(self) -> "FieldElement":
        if self.is_zero():
            raise FieldError("zero has no inverse")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return self * other.inv()

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __str__(self) -> str:
        if self.field.m == 1:
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
                terms.append(mono if c == 1 and i else f"{c}{mono}")
        return "+".join(reversed(terms)) or "0"


@cache
def make_field(q: int) -> FiniteField:
    if q > FIELD_CAP:
        raise FieldError(f"GF({q}) exceeds the configured cap {FIELD_CAP}")
    p, m = _prime_power(q)
    if m == 1:
        return FiniteField(p, 1, (0, 1))
    for low in itertools.product(range(p), repeat=m):
        modulus = low + (1,)
        if _is_irreducible(modulus, p):
            logger.debug(f"GF({q}) modulus {modulus}")
            return FiniteField(p, m, modulus)
    raise FieldError(f"no irreducible polynomial of degree {m} over GF({p})")


def enumerate_elements(field: FiniteField) -> list[FieldElement]:
    return [field.element_at(i) for i in range(field.q)]


def index_of(element: FieldElement) -> int:
    return element.index


def element_order(element: FieldElement) -> int:
    if element.is_zero():
        raise FieldError("zero has no multiplicative order")
    power, k = element, 1
    while power != element.field.one:
        power, k = power * element, k + 1
    return k


def primitive_element(field: FiniteField) -> FieldElement:
    return next(e for e in enumerate_elements(field)[1:] if element_order(e) == field.q - 1)


FieldLike = Union[FiniteField, int]


def as_field(field_or_q: FieldLike) -> FiniteField:
    return field_or_q if isinstance(field_or_q, FiniteField) else make_field(field_or_q)
