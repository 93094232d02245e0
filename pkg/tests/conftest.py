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
from hypothesis import strategies as st
# Internal libraries/scripts
from lambdaquid.rings import INT, POLY, GAUSS_EVEN, mod, RingValue
from lambdaquid.core import QuidditySeq
from lambdaquid.enumeration import SearchBounds, enumerate_quiddities

#-----------------------------------------------------#
#                Hypothesis strategies                #
#-----------------------------------------------------#
small_ints = st.integers(min_value=-9, max_value=9)

# Strategy of values for one exact ring
def values(ring):
    if ring.tag == "z":
        return small_ints.map(lambda k: RingValue.of(ring, k))
    if ring.tag == "zmod":
        return st.integers(0, ring.modulus - 1).map(
            lambda k: RingValue.of(ring, k))
    if ring.tag == "zx":
        return st.lists(st.integers(-3, 3), min_size=1, max_size=3).map(
            lambda c: RingValue.of(ring, c))
    return st.tuples(st.integers(-5, 5), st.integers(-3, 3)).map(
        lambda p: RingValue.of(ring, p))

def tuples(ring, min_size=1, max_size=8):
    return st.lists(values(ring), min_size=min_size,
                    max_size=max_size).map(lambda v: QuidditySeq.of(ring, v))

EXACT_RINGS = [INT, mod(2), mod(7), mod(12), POLY, GAUSS_EVEN]

# Known quiddities over Z used as right operands
Z_QUIDDITIES = [QuidditySeq.of(INT, t) for t in
                [(0, 0), (1, 1, 1), (-1, -1, -1), (0, 3, 0, -3),
                 (2, 0, -2, 0), (1, 2, 1, 2), (-2, -1, -2, -1),
                 (2, 0, -1, 1, 1), (1, 3, 1, 3, 1, 3)]]

#-----------------------------------------------------#
#              Shared enumeration reports             #
#-----------------------------------------------------#
@pytest.fixture(scope="session")
def z_report():
    return enumerate_quiddities(SearchBounds(INT, 2, 6, 3))

@pytest.fixture(scope="session")
def z_small_report():
    return enumerate_quiddities(SearchBounds(INT, 2, 5, 2))

@pytest.fixture(scope="session")
def poly_report():
    return enumerate_quiddities(SearchBounds(POLY, 3, 6, 1, 1))

@pytest.fixture(scope="session")
def gauss_report():
    return enumerate_quiddities(SearchBounds(GAUSS_EVEN, 3, 5, 2,
                                             imag_bound=1))
