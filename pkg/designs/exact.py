# designs/exact.py
"""Exact integer and rational helpers: factorials, binomials, rencontres numbers.

Everything here stays in ``int`` / ``Fraction``; no float ever enters a
design computation.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial as _factorial
from typing import Sequence, Union

from designs.errors import PermDesignError, SingularSystemError

Number = Union[int, Fraction]


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if value < 0:
            raise PermDesignError(f"{name} must be nonnegative, got {value}")


def factorial(n: int) -> int:
    _require_nonnegative(n=n)
    return _factorial(n)


def binomial(n: int, k: int) -> int:
    _require_nonnegative(n=n, k=k)
    if k > n:
        raise PermDesignError(f"binomial({n}, {k}) needs k <= n")
    return comb(n, k)


def derangements(m: int) -> int:
    """D_m via D_m = m*D_{m-1} + (-1)^m, D_0 = 1."""
    _require_nonnegative(m=m)
    d = 1
    for i in range(1, m + 1):
        d = i * d + (-1) ** i
    return d


def falling_factorial(x: int, k: int) -> int:
    """x(x-1)...(x-k+1) as an exact integer; empty product is 1."""
    _require_nonnegative(k=k)
    result = 1
    for j in range(k):
        result *= x - j
    return result


@dataclass(frozen=True)
class RencontresTable:
    """w[k] = number of permutations of n letters with exactly k fixed points."""

    n: int
    w: tuple[int, ...]

    def __post_init__(self):
        if len(self.w) != self.n + 1:
            raise PermDesignError(f"rencontres table for n={self.n} needs {self.n + 1} entries")
        total = _factorial(self.n)
        if sum(self.w) != total:
            raise PermDesignError(f"rencontres table does not sum to {self.n}!")
        if self.n >= 1 and self.w[self.n - 1] != 0:
            raise PermDesignError("w[n-1] must vanish")
        if self.n >= 1 and sum(k * wk for k, wk in enumerate(self.w)) != total:
            raise PermDesignError("average number of fixed points must be 1")

    def valency(self, i: int) -> int:
        return valency(self, i)


def rencontres(n: int) -> RencontresTable:
    _require_nonnegative(n=n)
    return RencontresTable(n, tuple(binomial(n, k) * derangements(n - k) for k in range(n + 1)))


def rencontres_from_genfunc(n: int) -> RencontresTable:
    """Coefficients of n! * sum_j (u-1)^j / j!, expanded with exact polynomials."""
    _require_nonnegative(n=n)
    total: list[Fraction] = [Fraction(0)]
    power: list[Number] = [1]
    scale = _factorial(n)
    for j in range(n + 1):
        if j:
            power = poly_mul(power, [-1, 1])
        total = poly_add(total, [Fraction(scale, _factorial(j)) * c for c in power])
    coeffs = list(total) + [Fraction(0)] * (n + 1 - len(total))
    if any(c.denominator != 1 for c in coeffs):
        raise PermDesignError(f"generating function for n={n} produced a non-integer coefficient")
    return RencontresTable(n, tuple(int(c) for c in coeffs[: n + 1]))


def brute_force_rencontres(n: int) -> RencontresTable:
    """Count fixed points over all of S_n; only sensible for small n."""
    counts = [0] * (n + 1)
    for images in itertools.permutations(range(n)):
        counts[sum(1 for x, y in enumerate(images) if x == y)] += 1
    return RencontresTable(n, tuple(counts))


def valency(table: RencontresTable, i: int) -> int:
    """v_i = w_{n-i}: permutations at distance i from a fixed one."""
    if not 0 <= i <= table.n:
        raise PermDesignError(f"valency index {i} outside [0..{table.n}]")
    return table.w[table.n - i]


# -- dense polynomial helpers, low-to-high coefficients -----------------------

def poly_trim(coeffs: Sequence[Number]) -> list[Number]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_add(a: Sequence[Number], b: Sequence[Number]) -> list[Number]:
    size = max(len(a), len(b))
    return poly_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)])


def poly_mul(a: Sequence[Number], b: Sequence[Number]) -> list[Number]:
    if not a or not b:
        return []
    out: list[Number] = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return poly_trim(out)


# -- rationals on the wire -----------------------------------------------------

def format_rational(value: Number) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Accepts "p/q" or a bare integer; the result is in lowest terms."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PermDesignError(f"not an exact rational: {text!r}") from e


# -- exact linear algebra ------------------------------------------------------

def solve_exact(matrix: Sequence[Sequence[Number]], rhs: Sequence[Number]) -> list[Fraction]:
    """Gaussian elimination over Fraction. Raises on a singular system."""
    size = len(matrix)
    rows = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(matrix, rhs)]
    if len(rows) != size or any(len(row) != size + 1 for row in rows):
        raise SingularSystemError("system must be square")
    for col in range(size):
        pivot = next((r for r in range(col, size) if rows[r][col] != 0), None)
        if pivot is None:
            raise SingularSystemError(f"singular system: no pivot in column {col}")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        lead = rows[col][col]
        rows[col] = [x / lead for x in rows[col]]
        for r in range(size):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [row[size] for row in rows]
