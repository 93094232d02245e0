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
import re
from itertools import product
# Internal libraries/scripts
from lambdaquid.rings.abstract_ring import Abstract_Ring
from lambdaquid.exceptions import ValueParseError

# a, a+bi or a-bi where b is the (even) imaginary component
GAUSS_PATTERN = re.compile(r"^(-?[0-9]+)(?:([+-])([0-9]+)i)?$")

#-----------------------------------------------------#
#                   Ring: Z[2i]                       #
#-----------------------------------------------------#
""" The subring Z[2i] = {a + 2bi} of the Gaussian integers. A payload is the
    pair (a, b), so the represented imaginary component 2b is always even.

Methods:
    __init__                Object creation function
    add / mul / neg:        Arithmetic of a + 2bi
    sort_key:               Lexicographic on (a, b)
    parse / format:         Grammar a, a+bi, a-bi with even b
    box:                    |a| <= B and |b| <= imag_bound
    modulus_below_two:      a^2 + 4b^2 < 4
"""
class GaussEven_Ring(Abstract_Ring):
    #---------------------------------------------#
    #                Initialization               #
    #---------------------------------------------#
    def __init__(self, ring_id):
        self.ring_id = ring_id

    #---------------------------------------------#
    #               Ring arithmetic               #
    #---------------------------------------------#
    def normalize(self, payload):
        if isinstance(payload, int) : return (payload, 0)
        a, b = payload
        return (int(a), int(b))

    def add(self, x, y):
        return (x[0] + y[0], x[1] + y[1])

    def mul(self, x, y):
        # (a + 2bi)(c + 2di) = ac - 4bd + 2(ad + bc)i
        a, b = x
        c, d = y
        return (a*c - 4*b*d, a*d + b*c)

    def neg(self, x):
        return (-x[0], -x[1])

    def from_int(self, k):
        return (int(k), 0)

    def sort_key(self, x):
        return x

    #---------------------------------------------#
    #                Parse / Format               #
    #---------------------------------------------#
    def parse(self, text, offset=0):
        found = GAUSS_PATTERN.match(text)
        if found is None:
            raise ValueParseError("Expected a, a+bi or a-bi", text, offset)
        real = int(found.group(1))
        # Bare real part
        if found.group(2) is None : return (real, 0)
        imag = int(found.group(3))
        # Exception: odd imaginary component is not in Z[2i]
        if imag % 2 != 0:
            raise ValueParseError("Odd imaginary part " + str(imag) + \
                                  " is not in Z[2i]", text,
                                  offset + found.start(3))
        if found.group(2) == "-" : imag = -imag
        return (real, imag // 2)

    def format(self, x):
        a, b = x
        if b == 0 : return str(a)
        sign = "+" if b > 0 else "-"
        return str(a) + sign + str(2 * abs(b)) + "i"

    #---------------------------------------------#
    #                  Search box                 #
    #---------------------------------------------#
    def box(self, coeff_bound, degree_bound=0, imag_bound=None):
        if imag_bound is None : imag_bound = coeff_bound
        return list(product(range(-coeff_bound, coeff_bound + 1),
                            range(-imag_bound, imag_bound + 1)))

    def in_box(self, x, coeff_bound, degree_bound=0, imag_bound=None):
        if imag_bound is None : imag_bound = coeff_bound
        return abs(x[0]) <= coeff_bound and abs(x[1]) <= imag_bound

    def modulus_below_two(self, x):
        # |a + 2bi| = sqrt(a^2 + 4b^2)
        return x[0]*x[0] + 4*x[1]*x[1] < 4
