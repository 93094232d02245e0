#==============================================================================#
#  Author:       lambdaquid contributors                                       #
#  Copyright:    2024 lambdaquid contributors                                  #
#                                                                              #
#  This program is free software: you can redistribute it and/or modify        #
#  it under the terms of the GNU General Public License as published by        #
#  the Free Software Foundation, either version 3 of the License, or           #
#  (at your option) any later version.                                         #
#                                                                              #
#  This program is distributed in the hope that it will be useful,             #
#  but WITHOUT ANY WARRANTY; without even the implied warranty of              #
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the               #
#  GNU General Public License for more details.                                #
#                                                                              #
#  You should have received a copy of the GNU General Public License           #
#  along with this program.  If not, see <http://www.gnu.org/licenses/>.       #
#==============================================================================#
#-----------------------------------------------------#
#                   Library imports                   #
#-----------------------------------------------------#
# External libraries
import pytest
from hypothesis import given, settings, strategies as st
# Internal libraries/scripts
from lambdaquid.rings import RingId, RingValue, UnitSign, INT, POLY, \
                             GAUSS_EVEN, REAL, mod, ring_compare, \
                             ring_from_int, ring_zero, ring_one, ring_eq, \
                             is_pm_one, eval_poly_at, parse_value, \
                             format_value, integer, modular, poly, gauss, real
from lambdaquid.exceptions import RingMismatchError, ValueParseError, \
                                  InexactRingError
from conftest import EXACT_RINGS, values

#-----------------------------------------------------#
#                   Ring identifiers                  #
#-----------------------------------------------------#
@pytest.mark.parametrize("selector", ["z", "zmod:2", "zmod:12", "zx", "z2i",
                                      "real"])
def test_ring_selector_roundtrip(selector):
    assert str(RingId.parse(selector)) == selector

@pytest.mark.parametrize("selector", ["q", "zmod", "zmod:1", "zmod:x", ""])
def test_ring_selector_rejected(selector):
    with pytest.raises(ValueParseError):
        RingId.parse(selector)

def test_ring_id_validation():
    with pytest.raises(ValueError):
        RingId("zmod")
    with pytest.raises(ValueError):
        RingId("z", 5)

def test_exactness():
    assert INT.exact and POLY.exact and GAUSS_EVEN.exact and mod(5).exact
    assert not REAL.exact

#-----------------------------------------------------#
#                   Ring arithmetic                   #
#-----------------------------------------------------#
@pytest.mark.parametrize("ring", EXACT_RINGS, ids=str)
@settings(max_examples=50, deadline=None)
@given(data=st.data())
def test_ring_axioms(ring, data):
    x = data.draw(values(ring))
    y = data.draw(values(ring))
    z = data.draw(values(ring))
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + ring_zero(ring) == x
    assert x * ring_one(ring) == x
    assert x - x == ring_zero(ring)

def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        integer(1) + poly([1])
    with pytest.raises(RingMismatchError):
        modular(1, 3) * modular(1, 5)

def test_modular_reduction():
    assert modular(7, 5) == modular(2, 5)
    assert modular(-1, 5).payload == 4
    assert parse_value(mod(5), "-1") == modular(4, 5)

def test_polynomial_normal_form():
    assert poly([1, 2, 0, 0]).payload == (1, 2)
    assert poly([0, 0]).payload == (0,)
    assert poly([1, 1]) * poly([-1, 1]) == poly([-1, 0, 1])
    assert poly([0, 1]) - poly([0, 1]) == poly([0])

def test_gauss_even_multiplication():
    # (1 + 2i)(1 - 2i) = 5
    assert gauss(1, 1) * gauss(1, -1) == gauss(5, 0)
    # (2i)(2i) = -4
    assert gauss(0, 1) * gauss(0, 1) == gauss(-4)

def test_real_arithmetic():
    assert real(0.5) + real(0.25) == real(0.75)
    assert ring_eq(real(2.0) * real(3.0), real(6.0))

#-----------------------------------------------------#
#                Units, order and embedding           #
#-----------------------------------------------------#
def test_is_pm_one():
    assert is_pm_one(integer(1)) is UnitSign.PLUS
    assert is_pm_one(integer(-1)) is UnitSign.MINUS
    assert is_pm_one(integer(2)) is UnitSign.NEITHER
    assert is_pm_one(modular(4, 5)) is UnitSign.MINUS
    # In Z/2Z one equals minus one
    assert is_pm_one(modular(1, 2)) is UnitSign.PLUS
    assert is_pm_one(poly([-1])) is UnitSign.MINUS
    assert is_pm_one(poly([1, 1])) is UnitSign.NEITHER
    assert is_pm_one(gauss(1, 1)) is UnitSign.NEITHER

def test_ring_compare():
    assert ring_compare(integer(-3), integer(2)) == -1
    assert ring_compare(integer(2), integer(2)) == 0
    # Degree first, then coefficients from the top
    assert ring_compare(poly([5]), poly([0, 1])) == -1
    assert ring_compare(poly([1, -1]), poly([0, 1])) == -1
    assert ring_compare(gauss(0, 1), gauss(1, -1)) == -1
    with pytest.raises(InexactRingError):
        ring_compare(real(1.0), real(2.0))

def test_polynomial_box_order():
    box = POLY.ring.box(1, 1)
    assert box == [(-1,), (0,), (1,), (-1, -1), (0, -1), (1, -1), (-1, 1),
                   (0, 1), (1, 1)]
    assert POLY.ring.in_box((0, 1), 1, 1)
    assert not POLY.ring.in_box((0, 0, 1), 1, 1)
    assert not POLY.ring.in_box((2,), 1, 1)

@settings(max_examples=50, deadline=None)
@given(p=values(POLY), q=values(POLY), a=st.integers(-3, 3))
def test_evaluation_is_homomorphism(p, q, a):
    assert eval_poly_at(p + q, a) == eval_poly_at(p, a) + eval_poly_at(q, a)
    assert eval_poly_at(p * q, a) == eval_poly_at(p, a) * eval_poly_at(q, a)

def test_eval_poly_at_requires_polynomial():
    assert eval_poly_at(poly([1, 2, 3]), 2) == integer(17)
    with pytest.raises(RingMismatchError):
        eval_poly_at(integer(3), 2)

def test_ring_from_int():
    assert ring_from_int(POLY, -1) == poly([-1])
    assert ring_from_int(GAUSS_EVEN, 3) == gauss(3)
    assert ring_from_int(mod(3), 5) == modular(2, 3)

#-----------------------------------------------------#
#                   Parse and format                  #
#-----------------------------------------------------#
@pytest.mark.parametrize("ring, text, expected", [
    (INT, "-12", integer(-12)),
    (INT, " 7 ", integer(7)),
    (POLY, "[0,-1]", poly([0, -1])),
    (POLY, "[0]", poly([0])),
    (POLY, "[ 1 , 2 ]", poly([1, 2])),
    (GAUSS_EVEN, "3", gauss(3)),
    (GAUSS_EVEN, "1+2i", gauss(1, 1)),
    (GAUSS_EVEN, "-1-4i", gauss(-1, -2)),
    (REAL, "1.5", real(1.5)),
    (REAL, "-2e-3", real(-0.002))])
def test_parse_value(ring, text, expected):
    assert parse_value(ring, text) == expected

@pytest.mark.parametrize("value, text", [
    (integer(-3), "-3"), (modular(-1, 4), "3"), (poly([1, 0, -2]), "[1,0,-2]"),
    (gauss(0, 1), "0+2i"), (gauss(2, -1), "2-2i"), (gauss(-2), "-2")])
def test_format_value(value, text):
    assert format_value(value) == text
    assert parse_value(value.ring, text) == value

@pytest.mark.parametrize("ring", EXACT_RINGS, ids=str)
@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_parse_format_roundtrip(ring, data):
    x = data.draw(values(ring))
    assert parse_value(ring, format_value(x)) == x

@pytest.mark.parametrize("ring, text, position", [
    (INT, "1x", 1), (INT, "-", 1), (INT, "", 0),
    (POLY, "[1,0]", 3), (POLY, "[]", 1), (POLY, "1,2", 0),
    (GAUSS_EVEN, "1+3i", 2), (GAUSS_EVEN, "i", 0),
    (REAL, "abc", 0)])
def test_parse_errors(ring, text, position):
    with pytest.raises(ValueParseError) as error:
        parse_value(ring, text)
    assert error.value.position == position
