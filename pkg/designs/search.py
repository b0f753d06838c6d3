# designs/search.py
"""Desk-scale searches: minimal designs by exhaustion, sharply t-transitive sets by backtracking.

Every set a search returns goes back through designs.analysis before it is
reported. Budgets are explicit; running out yields an "inconclusive"
certificate, never a silent truncation.
"""

import itertools
import logging
import os
from fractions import Fraction
from functools import cache
from typing import Callable, NamedTuple, Optional

from dotenv import load_dotenv

from designs.analysis import (
    PermSet,
    design_report,
    is_t_transitive,
    moment,
    space_frequencies,
)
from designs.errors import PermDesignError
from designs.permutations import Permutation, format_one_line, symmetric_group
from designs.report import SearchCertificate, SizeCount
from designs.workers import DEFAULT_WORKERS, fan_out

load_dotenv()

logger = logging.getLogger(__name__)

NODE_BUDGET = int(os.getenv("PERMDESIGN_BUDGET", "2000000"))

EXHAUSTIVE_MAX_N = 5
SHARP_MAX_N = {1: 8, 2: 5}


class SearchOutcome(NamedTuple):
    permset: Optional[PermSet]
    certificate: SearchCertificate


def _budget(budget: Optional[int]) -> int:
    return NODE_BUDGET if budget is None else budget


def _verified(D: PermSet, t: int, require_sharp: bool = False):
    report = design_report(D, t)
    if not report.criteria.moments:
        raise PermDesignError(f"search produced a set that is not a {t}-design")
    if require_sharp and not (report.transitivity.max_t >= t and len(D) == report.bounds.sm):
        raise PermDesignError(f"search produced a set that is not sharply {t}-transitive")
    return report


# -- exhaustive enumeration over identity-containing subsets --------------------------------

def _moment_test(n: int, t: int) -> Callable[[list[tuple[int, ...]]], bool]:
    space = space_frequencies(n)
    targets = [moment(space, i) for i in range(1, t + 1)]

    def is_design(rows: list[tuple[int, ...]]) -> bool:
        hist = [0] * (n + 1)
        for i, a in enumerate(rows):
            for b in rows[i + 1:]:
                hist[sum(1 for x, y in zip(a, b) if x != y)] += 2
        total = len(rows) ** 2
        return all(
            Fraction(sum(h * j**i for j, h in enumerate(hist)), total) == target
            for i, target in enumerate(targets, start=1)
        )

    return is_design


def _enumerate(
    n: int,
    t: int,
    max_size: int,
    budget: Optional[int],
    predicate: str,
    accept: Callable[[PermSet], bool],
) -> SearchOutcome:
    if not 1 <= n <= EXHAUSTIVE_MAX_N:
        raise PermDesignError(f"exhaustive search is limited to 1 <= n <= {EXHAUSTIVE_MAX_N}")
    if not 1 <= t <= n:
        raise PermDesignError(f"t must lie in [1..{n}], got {t}")
    budget = _budget(budget)
    perms = symmetric_group(n)
    anchor, others = perms[0], perms[1:]
    is_design = _moment_test(n, t)
    nodes = 0
    counts: list[SizeCount] = []
    common = dict(n=n, t=t, max_size=max_size, predicate=predicate, budget=budget)

    for size in range(1, min(max_size, len(perms)) + 1):
        checked = 0
        for rest in itertools.combinations(others, size - 1):
            nodes += 1
            checked += 1
            if nodes > budget:
                counts.append(SizeCount(size=size, checked=checked - 1))
                logger.warning(f"exhaustive search n={n} t={t} ran out of budget at size {size}")
                return SearchOutcome(None, SearchCertificate(status="inconclusive", nodes=nodes - 1, counts=counts, **common))
            rows = [anchor.images] + [p.images for p in rest]
            if not is_design(rows):
                continue
            D = PermSet.of((anchor,) + rest)
            if not accept(D):
                continue
            counts.append(SizeCount(size=size, checked=checked))
            report = _verified(D, t)
            logger.info(f"exhaustive search n={n} t={t}: found size {size} after {nodes} subsets")
            return SearchOutcome(D, SearchCertificate(
                status="found",
                nodes=nodes,
                counts=counts,
                permutations=[format_one_line(p) for p in D],
                report=report,
                **common,
            ))
        counts.append(SizeCount(size=size, checked=checked))

    logger.info(f"exhaustive search n={n} t={t}: nothing up to size {max_size} ({nodes} subsets)")
    return SearchOutcome(None, SearchCertificate(status="exhausted", nodes=nodes, counts=counts, **common))


def exhaustive_min_design(n: int, t: int, max_size: int, budget: Optional[int] = None) -> SearchOutcome:
    """Smallest t-design containing the identity, trying sizes 1..max_size in order.

    Frequencies are invariant under translation, so every design has a
    translate containing the identity; no other symmetry is used.
    """
    predicate = (
        f"subsets of S_{n} containing the identity, sizes 1..{max_size} ascending, "
        f"lexicographic within a size; accept when distance moments 1..{t} equal those of S_{n}"
    )
    return _enumerate(n, t, max_size, budget, predicate, lambda D: True)


def hunt_non_transitive_design(n: int, t: int, max_size: int, budget: Optional[int] = None) -> SearchOutcome:
    """Same enumeration, keeping only t-designs that are not t-transitive sets."""
    predicate = (
        f"subsets of S_{n} containing the identity, sizes 1..{max_size} ascending, "
        f"lexicographic within a size; accept t-designs (t={t}) that are not {t}-transitive"
    )
    return _enumerate(n, t, max_size, budget, predicate, lambda D: not is_t_transitive(D, t).transitive)


# -- sharply t-transitive sets by backtracking -------------------------------------------------

class _BudgetExceeded(Exception):
    pass


@cache
def _slots(n: int, t: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """One slot per ordered distinct t-tuple b: the permutations sending (1..t) to b, lex order."""
    by_prefix: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for p in itertools.permutations(range(1, n + 1)):
        by_prefix.setdefault(p[:t], []).append(p)
    return tuple(tuple(by_prefix[b]) for b in itertools.permutations(range(1, n + 1), t))


def _compatible(a: tuple[int, ...], b: tuple[int, ...], t: int) -> bool:
    return sum(1 for x, y in zip(a, b) if x == y) < t


def _dfs(chosen, domains, t, counter, budget):
    if not domains:
        return chosen
    idx = min(range(len(domains)), key=lambda j: len(domains[j]))
    for cand in domains[idx]:
        counter[0] += 1
        if counter[0] > budget:
            raise _BudgetExceeded
        pruned = [[c for c in dom if _compatible(cand, c, t)] for j, dom in enumerate(domains) if j != idx]
        if any(not dom for dom in pruned):
            continue
        found = _dfs(chosen + [cand], pruned, t, counter, budget)
        if found is not None:
            return found
    return None


def _explore_branch(job: tuple[int, int, int, int]):
    """Returns (branch index, status, rows or None, nodes) for one top-level choice."""
    n, t, index, budget = job
    slots = _slots(n, t)
    first = slots[0][index]
    domains = [[c for c in cands if _compatible(first, c, t)] for cands in slots[1:]]
    counter = [1]
    if any(not dom for dom in domains):
        return index, "exhausted", None, counter[0]
    try:
        rows = _dfs([first], domains, t, counter, budget)
    except _BudgetExceeded:
        return index, "inconclusive", None, budget
    return index, ("found" if rows is not None else "exhausted"), rows, counter[0]


def search_sharp_set(
    n: int, t: int, workers: Optional[int] = None, budget: Optional[int] = None
) -> SearchOutcome:
    """Backtracking for n!/(n-t)! permutations pairwise agreeing in fewer than t places.

    t = 1 builds a Latin square row by row. The budget applies to each
    top-level branch; branches are handed out in waves of `workers` and the
    lowest-index success wins, so any worker count returns the same set.
    Branches below the winner that ran out of budget are listed in
    `cut_branches`; the set is then only the canonical one when that list is
    empty.
    """
    if t not in SHARP_MAX_N or not 1 <= n <= SHARP_MAX_N[t] or n < t:
        raise PermDesignError(f"sharp search supports t=1 with n<=8 and t=2 with n<=5, got n={n}, t={t}")
    budget = _budget(budget)
    workers = DEFAULT_WORKERS if workers is None else workers
    wave = max(1, workers)
    branches = len(_slots(n, t)[0])
    predicate = (
        f"one permutation per ordered {t}-tuple image of (1..{t}), lexicographic candidates, "
        f"pairwise agreeing in fewer than {t} positions; budget per top-level branch"
    )
    common = dict(n=n, t=t, predicate=predicate, budget=budget)
    nodes = 0
    cut: list[int] = []
    for start in range(0, branches, wave):
        jobs = [(n, t, i, budget) for i in range(start, min(start + wave, branches))]
        results = fan_out(_explore_branch, jobs, workers)
        for index, status, rows, used in sorted(results, key=lambda r: r[0]):
            nodes += used
            if status == "inconclusive":
                cut.append(index)
            if status == "found":
                D = PermSet.of(Permutation(n, r) for r in rows)
                report = _verified(D, t, require_sharp=True)
                if cut:
                    logger.warning(f"sharp search n={n} t={t}: branches {cut} hit the budget before branch {index} succeeded")
                logger.info(f"sharp search n={n} t={t}: found in branch {index}, {nodes} nodes")
                return SearchOutcome(D, SearchCertificate(
                    status="found",
                    nodes=nodes,
                    permutations=[format_one_line(p) for p in D],
                    report=report,
                    cut_branches=cut,
                    **common,
                ))
    status = "inconclusive" if cut else "exhausted"
    logger.info(f"sharp search n={n} t={t}: {status} after {nodes} nodes")
    return SearchOutcome(None, SearchCertificate(status=status, nodes=nodes, cut_branches=cut, **common))
