import itertools
import random

import pytest

from designs.errors import PermutationError
from designs.permutations import (
    Permutation,
    compose,
    distance,
    fixed_points,
    format_one_line,
    hamming_distance,
    identity,
    inverse,
    parse_one_line,
    symmetric_group,
)


def p(text: str) -> Permutation:
    return parse_one_line(text, len(text))


def test_identity():
    assert identity(3).images == (1, 2, 3)
    assert fixed_points(identity(5)) == 5
    assert distance(identity(4), identity(4)) == 0


def test_identity_rejects_zero_degree():
    with pytest.raises(PermutationError):
        identity(0)


def test_compose_matches_worked_product():
    assert compose(p("24153"), p("35421")) == p("13542")


def test_compose_and_inverse_cancel():
    sigma = p("35421")
    assert compose(sigma, identity(5)) == sigma
    assert compose(sigma, inverse(sigma)) == identity(5)
    assert compose(inverse(sigma), sigma) == identity(5)


def test_compose_degree_mismatch():
    with pytest.raises(PermutationError) as e:
        compose(identity(3), identity(4))
    assert e.value.reason == "degree mismatch"


def test_inverse():
    assert inverse(p("35421")) == p("54132")
    assert inverse(identity(6)) == identity(6)
    sigma = p("24153")
    assert inverse(inverse(sigma)) == sigma


def test_fixed_points():
    # 13542 fixes 1 and 4
    assert fixed_points(p("13542")) == 2
    assert fixed_points(identity(7)) == 7
    assert fixed_points(p("21")) == 0


def test_fixed_points_never_n_minus_one():
    for sigma in symmetric_group(5):
        assert fixed_points(sigma) != 4


def test_distance_examples():
    assert compose(p("24153"), inverse(p("35421"))) == p("35214")
    assert distance(p("24153"), p("35421")) == 5
    sigma = p("41532")
    assert distance(sigma, sigma) == 0


def test_metric_axioms_on_s4():
    perms = symmetric_group(4)
    for a, b in itertools.product(perms, repeat=2):
        d = distance(a, b)
        assert d == distance(b, a)
        assert (d == 0) == (a == b)
        assert d != 1
        assert d == hamming_distance(a, b)
    for a, b, c in itertools.product(perms, repeat=3):
        assert distance(a, c) <= distance(a, b) + distance(b, c)


def test_bi_invariance_on_s6():
    rng = random.Random(6)
    perms = symmetric_group(6)
    for _ in range(300):
        sigma, tau, g, h = (rng.choice(perms) for _ in range(4))
        left = compose(compose(g, sigma), h)
        right = compose(compose(g, tau), h)
        assert distance(left, right) == distance(sigma, tau)


def test_parse_forms():
    assert parse_one_line("24153", 5).images == (2, 4, 1, 5, 3)
    assert parse_one_line("3 1 2", 3).images == (3, 1, 2)
    assert parse_one_line("3,1,2", 3).images == (3, 1, 2)
    ten = parse_one_line("10 9 8 7 6 5 4 3 2 1", 10)
    assert ten(1) == 10


@pytest.mark.parametrize(
    "text, n, reason",
    [
        ("1 1 2", 3, "duplicate image"),
        ("1 2 4", 3, "out of range"),
        ("1 2", 3, "wrong length"),
        ("1 x 3", 3, "not a number"),
    ],
)
def test_parse_errors(text, n, reason):
    with pytest.raises(PermutationError) as e:
        parse_one_line(text, n)
    assert e.value.reason == reason


def test_format_round_trip():
    rng = random.Random(1)
    for n in (1, 5, 9, 12):
        images = list(range(1, n + 1))
        rng.shuffle(images)
        sigma = Permutation(n, tuple(images))
        assert parse_one_line(format_one_line(sigma), n) == sigma
    assert format_one_line(p("24153")) == "24153"


def test_total_order_is_lexicographic():
    perms = symmetric_group(3)
    assert [format_one_line(s) for s in sorted(reversed(perms))] == ["123", "132", "213", "231", "312", "321"]
