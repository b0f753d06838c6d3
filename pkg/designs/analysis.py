# designs/analysis.py
"""Frequencies, the three t-design criteria, transitivity and the size bounds.

The moment criterion is the reference and works for every t <= n. The two
Charlier-based criteria are only evaluated for t <= n // 2; asking for more
raises CriterionRangeError instead of guessing.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, NamedTuple, Optional

from designs.charlier import IntPolynomial, inner_product_space, reversed_charlier
from designs.errors import CriterionRangeError, PermDesignError, PermSetError
from designs.exact import falling_factorial, rencontres, solve_exact, valency
from designs.permutations import Permutation, compose, fixed_points
from designs.report import (
    Bounds,
    Criteria,
    DesignReport,
    DualEntry,
    MomentEntry,
    Transitivity,
)
from designs.workers import DEFAULT_WORKERS, fan_out, split

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PermSet:
    """A nonempty set of distinct permutations of one degree, kept sorted."""

    n: int
    elements: tuple[Permutation, ...]

    def __post_init__(self):
        if not self.elements:
            raise PermSetError("a permutation set must be nonempty")
        if any(p.n != self.n for p in self.elements):
            raise PermSetError(f"all permutations must have degree {self.n}")
        ordered = tuple(sorted(self.elements))
        for a, b in zip(ordered, ordered[1:]):
            if a == b:
                raise PermSetError(f"duplicate permutation {a}")
        object.__setattr__(self, "elements", ordered)

    @classmethod
    def of(cls, perms: Iterable[Permutation]) -> "PermSet":
        perms = list(perms)
        if not perms:
            raise PermSetError("a permutation set must be nonempty")
        return cls(perms[0].n, tuple(perms))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, sigma: Permutation) -> bool:
        return sigma in set(self.elements)

    @property
    def image_rows(self) -> tuple[tuple[int, ...], ...]:
        return tuple(p.images for p in self.elements)


@dataclass(frozen=True)
class FrequencyVector:
    n: int
    f: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.f) != self.n + 1:
            raise PermDesignError(f"frequency vector for n={self.n} needs {self.n + 1} entries")
        if sum(self.f) != 1:
            raise PermDesignError("frequencies must sum to 1")
        if any(x < 0 for x in self.f):
            raise PermDesignError("frequencies must be nonnegative")
        if self.n >= 1 and self.f[1] != 0:
            raise PermDesignError("distance 1 cannot occur")

    def __getitem__(self, i: int) -> Fraction:
        return self.f[i]


class TransitivityResult(NamedTuple):
    transitive: bool
    sharp: bool


class TransitivityProfile(NamedTuple):
    max_t: int
    sharp: bool


# -- frequencies ----------------------------------------------------------------

def _histogram_rows(job: tuple[tuple[tuple[int, ...], ...], int, int]) -> list[int]:
    rows, offset, stride = job
    n = len(rows[0])
    hist = [0] * (n + 1)
    for i in range(offset, len(rows), stride):
        a = rows[i]
        for b in rows[i + 1:]:
            hist[sum(1 for x, y in zip(a, b) if x != y)] += 1
    return hist


def distance_histogram(D: PermSet, workers: Optional[int] = None) -> list[int]:
    """Counts of ordered pairs (x, y) in D^2 by distance, diagonal included.

    Only the upper triangle is walked; it is doubled and |D| goes to bin 0.
    Rows are dealt round-robin to workers, so every worker count gives the
    same integers.
    """
    rows = D.image_rows
    stride = max(1, min(DEFAULT_WORKERS if workers is None else workers, len(rows)))
    parts = fan_out(_histogram_rows, [(rows, k, stride) for k in range(stride)], workers)
    hist = [2 * sum(col) for col in zip(*parts)]
    hist[0] += len(rows)
    return hist


def frequencies(D: PermSet, workers: Optional[int] = None) -> FrequencyVector:
    total = len(D) ** 2
    return FrequencyVector(D.n, tuple(Fraction(h, total) for h in distance_histogram(D, workers)))


def space_frequencies(n: int) -> FrequencyVector:
    if n < 1:
        raise PermDesignError(f"degree must be at least 1, got {n}")
    table = rencontres(n)
    return FrequencyVector(n, tuple(Fraction(valency(table, i), factorial(n)) for i in range(n + 1)))


def moment(f: FrequencyVector, i: int) -> Fraction:
    if i < 1:
        raise PermDesignError(f"moment order must be at least 1, got {i}")
    return sum((fj * j**i for j, fj in enumerate(f.f)), Fraction(0))


# -- criteria -----------------------------------------------------------------------

def _check_t(n: int, t: int) -> None:
    if not 1 <= t <= n:
        raise PermDesignError(f"t must lie in [1..{n}], got {t}")


def _check_charlier_range(n: int, t: int) -> None:
    if not 1 <= t <= n // 2:
        raise CriterionRangeError(f"Charlier criteria need 1 <= t <= {n // 2} for n={n}, got t={t}")


def moments_agree(f: FrequencyVector, t: int) -> bool:
    space = space_frequencies(f.n)
    return all(moment(f, i) == moment(space, i) for i in range(1, t + 1))


def is_t_design_moments(D: PermSet, t: int, workers: Optional[int] = None) -> bool:
    _check_t(D.n, t)
    return moments_agree(frequencies(D, workers), t)


def dual_frequency(f: FrequencyVector, k: int) -> Fraction:
    """Unnormalized dual frequency sum_i Chat_k(i) f_i; vanishes exactly when the orthonormal one does."""
    _check_charlier_range(f.n, k)
    poly = reversed_charlier(k, f.n)
    return sum((fi * poly(i) for i, fi in enumerate(f.f)), Fraction(0))


def dual_vanishes(f: FrequencyVector, t: int) -> bool:
    _check_charlier_range(f.n, t)
    return all(dual_frequency(f, k) == 0 for k in range(1, t + 1))


def is_t_design_dual(D: PermSet, t: int, workers: Optional[int] = None) -> bool:
    _check_charlier_range(D.n, t)
    return dual_vanishes(frequencies(D, workers), t)


def tcrit_holds(f: FrequencyVector, t: int) -> bool:
    """sum_{i>=1} f_i (Chat_k(0) - Chat_k(i)) = Chat_k(0) for k = 1..t."""
    if f.n < 2 * t or t < 1:
        raise CriterionRangeError(f"the Charlier criterion needs n >= 2t, got n={f.n}, t={t}")
    for k in range(1, t + 1):
        poly = reversed_charlier(k, f.n)
        at_zero = poly(0)
        lhs = sum((f.f[i] * (at_zero - poly(i)) for i in range(1, f.n + 1)), Fraction(0))
        if lhs != at_zero:
            return False
    return True


def is_t_design_tcrit(D: PermSet, t: int, workers: Optional[int] = None) -> bool:
    return tcrit_holds(frequencies(D, workers), t)


def design_strength(D: PermSet, f: Optional[FrequencyVector] = None) -> int:
    """Largest t <= n for which D is a t-design (0 if it is not even a 1-design)."""
    if f is None:
        f = frequencies(D)
    space = space_frequencies(D.n)
    t = 0
    while t < D.n and moment(f, t + 1) == moment(space, t + 1):
        t += 1
    return t


# -- transitivity and group structure ----------------------------------------------

def _covers_all_tuples(job) -> bool:
    rows, sources, n_tuples = job
    for source in sources:
        if len({tuple(row[x] for x in source) for row in rows}) != n_tuples:
            return False
    return True


def is_t_transitive(
    D: PermSet, t: int, workers: Optional[int] = None, group: bool = False
) -> TransitivityResult:
    """Every ordered distinct t-tuple must reach every other; sharp when exactly once.

    With group=True (the caller knows D is a group) only the orbit of
    (1..t) is checked: a group is t-transitive exactly when that orbit is
    every tuple.
    """
    _check_t(D.n, t)
    n_tuples = falling_factorial(D.n, t)
    if len(D) < n_tuples:
        return TransitivityResult(False, False)
    sources = [tuple(range(t))] if group else list(itertools.permutations(range(D.n), t))
    rows = D.image_rows
    chunks = [(rows, chunk, n_tuples) for chunk in split(sources, DEFAULT_WORKERS if workers is None else workers)]
    transitive = all(fan_out(_covers_all_tuples, chunks, workers))
    # counts sum to |D| for each source, so full coverage plus |D| = #tuples means each count is 1
    return TransitivityResult(transitive, transitive and len(D) == n_tuples)


def max_transitivity(
    D: PermSet, workers: Optional[int] = None, group: Optional[bool] = None
) -> TransitivityProfile:
    """(largest t with t-transitivity, sharpness at that t); t = 0 when not transitive."""
    if group is None:
        group = is_group(D)
    best = TransitivityResult(False, False)
    max_t = 0
    for t in range(1, D.n + 1):
        result = is_t_transitive(D, t, workers, group=group)
        if not result.transitive:
            break
        max_t, best = t, result
        if t == D.n - 1:
            # the last image is forced, so (n-1)-transitivity already reaches n
            max_t, best = D.n, TransitivityResult(True, len(D) == factorial(D.n))
            break
    return TransitivityProfile(max_t, best.sharp)


def is_group(D: PermSet) -> bool:
    if len(D) == factorial(D.n):
        return True
    rows = D.image_rows
    members = set(rows)
    # Lagrange, and the identity must be present
    if factorial(D.n) % len(D) or tuple(range(1, D.n + 1)) not in members:
        return False
    return all(tuple(a[y - 1] for y in b) in members for a in rows for b in rows)


def non_closure_witness(D: PermSet) -> Optional[tuple[Permutation, Permutation, Permutation]]:
    """First (sigma, tau, sigma o tau) with the product outside D, in sorted order."""
    members = set(D.elements)
    for sigma in D:
        for tau in D:
            product = compose(sigma, tau)
            if product not in members:
                return sigma, tau, product
    return None


def orbit_count(D: PermSet) -> int:
    """Burnside: orbits on [1..n] = average number of fixed points."""
    if not is_group(D):
        raise PermSetError("orbit_count needs a group")
    total = sum(fixed_points(sigma) for sigma in D)
    orbits, rest = divmod(total, len(D))
    if rest:
        raise PermDesignError(f"Burnside average {total}/{len(D)} is not an integer")
    return orbits


# -- bounds --------------------------------------------------------------------------

def design_bound(n: int, t: int) -> int:
    """|D| >= n(n-1)...(n-t+1) for a t-design."""
    _check_t(n, t)
    return falling_factorial(n, t)


def cor2_bound(n: int) -> int:
    """The weaker 2-design bound (n-1)^2 + 1 from the Cauchy-Schwarz argument."""
    return (n - 1) ** 2 + 1


def sm_beats_cor2(n: int) -> bool:
    return n >= 2 and design_bound(n, 2) > cor2_bound(n)


def one_design_bound_chain(f: FrequencyVector) -> bool:
    """sum_j j f_j <= n (1 - f_0); for a 1-design the left side is n-1, forcing |D| >= n."""
    first = sum((j * fj for j, fj in enumerate(f.f)), Fraction(0))
    return first <= f.n * (1 - f.f[0])


def cauchy_schwarz_check(f: FrequencyVector) -> bool:
    return f.f[0] * cor2_bound(f.n) <= 1


def burnside_polynomial(n: int, t: int) -> IntPolynomial:
    """P_t(x) = (n-x)(n-1-x)...(n-t+1-x)."""
    poly = IntPolynomial.constant(1)
    for j in range(t):
        poly = poly * IntPolynomial.linear(n - j, -1)
    return poly


def burnside_tuple_identity(n: int, t: int) -> bool:
    """sum_i [i]_t w_i = n!  and  <1, P_t>_n = 1, both exactly."""
    _check_t(n, t)
    table = rencontres(n)
    tuple_form = sum(falling_factorial(i, t) * wi for i, wi in enumerate(table.w)) == factorial(n)
    inner_form = inner_product_space(IntPolynomial.constant(1), burnside_polynomial(n, t), n) == 1
    return tuple_form and inner_form


def tight_frequencies(n: int, t: int) -> list[Fraction]:
    """f_{n-t+1}, ..., f_n of a design meeting |D| = n(n-1)...(n-t+1).

    Uses the Charlier system when n >= 2t (cross-checked against the moment
    system) and the moment system alone otherwise.
    """
    _check_t(n, t)
    nodes = list(range(n - t + 1, n + 1))
    space = space_frequencies(n)
    moment_rows = [[i**m for i in nodes] for m in range(1, t + 1)]
    solution = solve_exact(moment_rows, [moment(space, m) for m in range(1, t + 1)])
    if n >= 2 * t:
        polys = [reversed_charlier(k, n) for k in range(1, t + 1)]
        charlier_rows = [[p(0) - p(i) for i in nodes] for p in polys]
        via_charlier = solve_exact(charlier_rows, [p(0) for p in polys])
        if via_charlier != solution:
            raise PermDesignError(f"Charlier and moment systems disagree for n={n}, t={t}")
        solution = via_charlier
    if 1 - sum(solution) != Fraction(1, design_bound(n, t)):
        raise PermDesignError(f"tight frequencies for n={n}, t={t} do not leave f_0 = 1/|D|")
    return solution


# -- the full report -------------------------------------------------------------

def design_report(D: PermSet, t: Optional[int] = None, workers: Optional[int] = None) -> DesignReport:
    f = frequencies(D, workers)
    space = space_frequencies(D.n)
    t = t if t is not None else max(1, design_strength(D, f))
    _check_t(D.n, t)

    moments = [
        MomentEntry(i=i, value=moment(f, i), space_value=moment(space, i), equal=moment(f, i) == moment(space, i))
        for i in range(1, t + 1)
    ]
    is_design = all(m.equal for m in moments)
    if t <= D.n // 2:
        duals = [DualEntry(k=k, value=dual_frequency(f, k)) for k in range(1, t + 1)]
        criteria = Criteria(moments=is_design, dual=dual_vanishes(f, t), tcrit=tcrit_holds(f, t))
    else:
        duals = None
        criteria = Criteria(moments=is_design, dual="n/a", tcrit="n/a")

    sm = design_bound(D.n, t)
    group = is_group(D)
    max_t, sharp = max_transitivity(D, workers, group=group)
    report = DesignReport(
        n=D.n,
        size=len(D),
        t=t,
        frequencies=list(f.f),
        moments=moments,
        dual_frequencies=duals,
        criteria=criteria,
        bounds=Bounds(sm=sm, cor2_t2=cor2_bound(D.n), meets_sm_equality=is_design and len(D) == sm),
        transitivity=Transitivity(max_t=max_t, sharp=sharp, is_group=group),
    )
    logger.info(f"report n={D.n} |D|={len(D)} t={t}: design={is_design}, max_t={max_t}")
    return report
