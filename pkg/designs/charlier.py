# designs/charlier.py
"""Charlier polynomials, their reversals and the two weighted scalar products.

The reversed polynomials Chat_k(x) = C_k(n - x) are orthogonal under the
valency weights w_{n-k} for degrees up to n/2; nothing is claimed beyond.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Sequence, Union

from designs.errors import PermDesignError
from designs.exact import binomial, poly_add, poly_mul, poly_trim, rencontres
from designs.report import OrthogonalityPair, OrthogonalityReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial; coeffs[i] multiplies x^i, no trailing zeros."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in poly_trim(self.coeffs)))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def linear(cls, c0: int, c1: int) -> "IntPolynomial":
        return cls((c0, c1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def coefficients(self) -> list[int]:
        return list(self.coeffs)

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(poly_add(self.coeffs, other.coeffs)))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial(tuple(poly_add(self.coeffs, [-c for c in other.coeffs])))

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coeffs))
        return IntPolynomial(tuple(poly_mul(self.coeffs, other.coeffs)))

    __rmul__ = __mul__

    def __call__(self, x: Union[int, Fraction]) -> Union[int, Fraction]:
        acc: Union[int, Fraction] = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner: "IntPolynomial") -> "IntPolynomial":
        acc = IntPolynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + IntPolynomial.constant(c)
        return acc

    def reflect(self, n: int) -> "IntPolynomial":
        """p(n - x), expanded."""
        return self.compose(IntPolynomial.linear(n, -1))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            magnitude = abs(c)
            if power == 0:
                body = str(magnitude)
            else:
                head = "" if magnitude == 1 else str(magnitude)
                body = f"{head}x" if power == 1 else f"{head}x^{power}"
            if not parts:
                parts.append(f"-{body}" if c < 0 else body)
            else:
                parts.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(parts)


def falling_polynomial(i: int) -> IntPolynomial:
    """x(x-1)...(x-i+1)."""
    poly = IntPolynomial.constant(1)
    for j in range(i):
        poly = poly * IntPolynomial.linear(-j, 1)
    return poly


def charlier(k: int) -> IntPolynomial:
    """C_k(x) = (-1)^k + sum_{i=1..k} (-1)^(k-i) binom(k, i) x(x-1)...(x-i+1)."""
    if k < 0:
        raise PermDesignError(f"Charlier degree must be nonnegative, got {k}")
    poly = IntPolynomial.constant((-1) ** k)
    for i in range(1, k + 1):
        poly = poly + falling_polynomial(i) * ((-1) ** (k - i) * binomial(k, i))
    return poly


def reversed_charlier(k: int, n: int) -> IntPolynomial:
    return charlier(k).reflect(n)


def charlier_genfunc_check(k_max: int, n_eval: int = 0) -> bool:
    """Expand e^t (1-t)^x to order k_max and compare every coefficient with C_k.

    The coefficient of t^k/k! in e^t (1-t)^x is (-1)^k C_k(x) for the closed
    form used here (C_1 = x - 1); the sign is applied before comparing.
    With n_eval > 0 the expansion is also evaluated at x = 0..n_eval.
    """
    # (1-t)^x = sum_j (-1)^j [x]_j / j! t^j
    binomial_series = [
        [Fraction((-1) ** j * c, factorial(j)) for c in falling_polynomial(j).coeffs] for j in range(k_max + 1)
    ]
    ok = True
    for k in range(k_max + 1):
        coeff: list = []
        for j in range(k + 1):
            coeff = poly_add(coeff, [c / factorial(k - j) for c in binomial_series[j]])
        expanded = [c * factorial(k) * (-1) ** k for c in coeff]
        target = charlier(k)
        if any(Fraction(c).denominator != 1 for c in expanded) or IntPolynomial(tuple(expanded)) != target:
            logger.warning(f"generating function disagrees with C_{k}: {expanded} vs {target}")
            ok = False
            continue
        for x in range(n_eval + 1):
            if sum(c * x**i for i, c in enumerate(expanded)) != target(x):
                logger.warning(f"generating function disagrees with C_{k} at x={x}")
                ok = False
    return ok


def _weighted_sum(f: IntPolynomial, g: IntPolynomial, weights: Sequence[int], n: int) -> Fraction:
    total = sum(wt * f(k) * g(k) for k, wt in enumerate(weights))
    return Fraction(total, factorial(n))


def inner_product_space(f: IntPolynomial, g: IntPolynomial, n: int) -> Fraction:
    """<f, g>_n = (1/n!) sum_k w_{n-k} f(k) g(k)."""
    table = rencontres(n)
    return _weighted_sum(f, g, [table.w[n - k] for k in range(n + 1)], n)


def inner_product_tarnanen(f: IntPolynomial, g: IntPolynomial, n: int) -> Fraction:
    """(f, g)_n = (1/n!) sum_k w_k f(k) g(k)."""
    return _weighted_sum(f, g, rencontres(n).w, n)


def verify_orthogonality(n: int) -> OrthogonalityReport:
    limit = n // 2
    polys = [reversed_charlier(k, n) for k in range(limit + 1)]
    pairs = []
    for r in range(limit + 1):
        for s in range(limit + 1):
            value = inner_product_space(polys[r], polys[s], n)
            expected = factorial(r) if r == s else 0
            pairs.append(OrthogonalityPair(r=r, s=s, value=value, expected=expected, passed=value == expected))
    report = OrthogonalityReport(n=n, max_degree=limit, pairs=pairs)
    logger.info(f"orthogonality n={n}: {'pass' if report.all_passed else 'FAIL'} over {len(pairs)} pairs")
    return report
