# designs/constructions.py
"""Permutation sets with known design behaviour.

Field maps become permutations of [1..q] through the canonical element
order of designs.field: element with index i is point i + 1. For PGL(2, q)
the point at infinity is the last point, q + 1.
"""

import logging
import os
from collections import deque
from typing import Callable, Literal, Optional, Sequence

from dotenv import load_dotenv

from designs.analysis import PermSet
from designs.errors import ClosureCapError, FieldError, LatinSquareError
from designs.field import FieldElement, FieldLike, as_field, enumerate_elements
from designs.permutations import Permutation, compose, distance, parse_one_line, translate

load_dotenv()

logger = logging.getLogger(__name__)

CLOSURE_CAP = int(os.getenv("PERMDESIGN_CLOSURE_CAP", "3628800"))

N5_ROWS = ("12345", "24153", "35421", "41532", "53214")


def cyclic_group(n: int) -> PermSet:
    """Powers of the n-cycle x -> x + 1 (mod n); the rows of the Z_n addition table."""
    return PermSet.of(
        Permutation.trusted(tuple((x + k) % n + 1 for x in range(n))) for k in range(n)
    )


def paper_example_n5() -> PermSet:
    """Five rows of the smallest Latin square that is not a group table."""
    return PermSet.of(parse_one_line(text, 5) for text in N5_ROWS)


def from_latin_square(rows: Sequence[Sequence[int]]) -> PermSet:
    n = len(rows)
    if n == 0 or any(len(row) != n for row in rows):
        raise LatinSquareError("a Latin square must be a nonempty n x n array")
    symbols = set(range(1, n + 1))
    for r, row in enumerate(rows, start=1):
        if set(row) != symbols:
            raise LatinSquareError(f"row {r} is not a permutation of 1..{n}")
    for c in range(n):
        if {row[c] for row in rows} != symbols:
            raise LatinSquareError(f"column {c + 1} repeats a symbol")
    return PermSet.of(Permutation(n, tuple(row)) for row in rows)


def to_latin_square(D: PermSet) -> list[list[int]]:
    """Rows in canonical (sorted) order; D must be n permutations at pairwise distance n."""
    if len(D) != D.n:
        raise LatinSquareError(f"need exactly {D.n} permutations, got {len(D)}")
    elements = D.elements
    for i, a in enumerate(elements):
        for b in elements[i + 1:]:
            if distance(a, b) != D.n:
                raise LatinSquareError(f"{a} and {b} are not at distance {D.n}")
    return [list(p.images) for p in elements]


def _field_maps(field_or_q: FieldLike, maps: Callable[[list[FieldElement]], list]) -> PermSet:
    field = as_field(field_or_q)
    points = enumerate_elements(field)
    # PermSet rejects duplicates, so two coinciding maps fail loudly
    return PermSet.of(Permutation(field.q, tuple(fn(x).index + 1 for x in points)) for fn in maps(points))


def affine_group(q: FieldLike) -> PermSet:
    """{x -> ax + b : a != 0}: sharply 2-transitive, order q(q-1)."""
    D = _field_maps(q, lambda pts: [
        (lambda x, a=a, b=b: a * x + b) for a in pts if not a.is_zero() for b in pts
    ])
    logger.info(f"affine group over GF({D.n}): {len(D)} permutations")
    return D


def twisted_affine(q: FieldLike, exponent: int) -> PermSet:
    """{x -> a x^e + b : a != 0}; needs x -> x^e to be a bijection of the field."""
    field = as_field(q)
    points = enumerate_elements(field)
    if len({(x**exponent).index for x in points}) != field.q:
        raise FieldError(f"x^{exponent} is not a bijection of {field}")
    return _field_maps(field, lambda pts: [
        (lambda x, a=a, b=b: a * x**exponent + b) for a in pts if not a.is_zero() for b in pts
    ])


def twisted_affine_9() -> PermSet:
    """The non-group 2-design {x -> a x^3 + b} over GF(9)."""
    return twisted_affine(9, 3)


def pgl2(q: FieldLike) -> PermSet:
    """Mobius maps x -> (ax + b)/(cx + d) on the projective line; sharply 3-transitive."""
    field = as_field(q)
    points = enumerate_elements(field)
    infinity = field.q + 1
    zero, one = field.zero, field.one

    def image(a, b, c, d, x: Optional[FieldElement]) -> int:
        if x is None:
            return (a / c).index + 1 if not c.is_zero() else infinity
        denom = c * x + d
        if denom.is_zero():
            return infinity
        return ((a * x + b) / denom).index + 1

    # one representative per scalar class: c = 1, or c = 0 and d = 1
    matrices = [(a, b, one, d) for a in points for b in points for d in points if not (a * d - b).is_zero()]
    matrices += [(a, b, zero, one) for a in points if not a.is_zero() for b in points]
    perms = [
        Permutation(infinity, tuple(image(*m, x) for x in points) + (image(*m, None),)) for m in matrices
    ]
    D = PermSet.of(perms)
    logger.info(f"PGL(2, {field.q}) on {infinity} points: {len(D)} permutations")
    return D


def group_closure(generators: PermSet, cap: Optional[int] = None) -> PermSet:
    """Smallest composition-closed set containing the generators (breadth-first)."""
    cap = CLOSURE_CAP if cap is None else cap
    gens = list(generators)
    seen = set(gens)
    frontier = deque(gens)
    while frontier:
        sigma = frontier.popleft()
        for g in gens:
            product = compose(sigma, g)
            if product not in seen:
                seen.add(product)
                if len(seen) > cap:
                    raise ClosureCapError(f"group closure exceeded {cap} elements")
                frontier.append(product)
    logger.info(f"closure of {len(gens)} generators in S_{generators.n}: {len(seen)} elements")
    return PermSet.of(seen)


def translate_set(D: PermSet, g: Permutation, side: Literal["left", "right"] = "left") -> PermSet:
    return PermSet.of(translate(D, g, side))
