import itertools

import pytest

from designs.errors import FieldError
from designs.field import (
    element_order,
    enumerate_elements,
    index_of,
    make_field,
    primitive_element,
)

SMALL_Q = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25]


def test_models():
    assert make_field(5).modulus == (0, 1)
    assert (make_field(4).p, make_field(4).m, make_field(4).modulus) == (2, 2, (1, 1, 1))
    assert (make_field(9).p, make_field(9).m, make_field(9).modulus) == (3, 2, (1, 0, 1))
    assert str(make_field(8)) == "GF(8)"


@pytest.mark.parametrize("q", [0, 1, 6, 10, 12, 512])
def test_rejects(q):
    with pytest.raises(FieldError):
        make_field(q)


def test_enumeration_order():
    assert [str(e) for e in enumerate_elements(make_field(3))] == ["0", "1", "2"]
    assert [str(e) for e in enumerate_elements(make_field(4))] == ["0", "1", "t", "t+1"]
    gf9 = make_field(9)
    assert [index_of(e) for e in enumerate_elements(gf9)] == list(range(9))
    assert gf9.element_at(5) == gf9.element([2, 1])


def test_gf9_square_of_t_is_minus_one():
    gf9 = make_field(9)
    t = gf9.generator()
    assert t * t == -gf9.one
    assert (t * t).index == 2


@pytest.mark.parametrize("q", SMALL_Q)
def test_field_axioms(q):
    field = make_field(q)
    elements = enumerate_elements(field)
    zero, one = field.zero, field.one
    for a in elements:
        assert a + zero == a
        assert a * one == a
        assert a + (-a) == zero
        if not a.is_zero():
            assert a * a.inv() == one
            assert a ** (q - 1) == one
    for a, b in itertools.product(elements, repeat=2):
        assert a + b == b + a
        assert a * b == b * a
        if not b.is_zero():
            assert (a / b) * b == a
    for a, b, c in itertools.product(elements, repeat=3):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_zero_has_no_inverse():
    with pytest.raises(FieldError):
        make_field(7).zero.inv()
    with pytest.raises(FieldError):
        element_order(make_field(7).zero)


def test_mixing_fields_fails():
    with pytest.raises(FieldError):
        make_field(5).one + make_field(7).one


@pytest.mark.parametrize("q", SMALL_Q)
def test_primitive_element(q):
    field = make_field(q)
    g = primitive_element(field)
    assert element_order(g) == q - 1
    assert {(g**k).index for k in range(q - 1)} == set(range(1, q))


def test_cube_is_a_bijection_of_gf9():
    elements = enumerate_elements(make_field(9))
    assert len({(x**3).index for x in elements}) == 9
    assert all(x**9 == x for x in elements)
