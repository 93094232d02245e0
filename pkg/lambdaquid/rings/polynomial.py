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
from itertools import product, zip_longest
# Internal libraries/scripts
from lambdaquid.rings.abstract_ring import Abstract_Ring
from lambdaquid.rings.integer import parse_integer
from lambdaquid.exceptions import ValueParseError

#-----------------------------------------------------#
#            Ring: Integer polynomials Z[X]           #
#-----------------------------------------------------#
""" The polynomial ring Z[X], which models Z[alpha] for a transcendental
    complex number alpha. A payload is the ascending coefficient tuple
    (c0, c1, ..., cd) with cd != 0, the zero polynomial is (0,).

Methods:
    __init__                Object creation function
    add / mul / neg:        Polynomial arithmetic on coefficient tuples
    sort_key:               Degree first, then coefficients from the top
    parse / format:         Grammar [c0,c1,...,cd]
    box:                    All polynomials of degree <= d with |ci| <= B
"""
class Polynomial_Ring(Abstract_Ring):
    #---------------------------------------------#
    #                Initialization               #
    #---------------------------------------------#
    def __init__(self, ring_id):
        self.ring_id = ring_id

    #---------------------------------------------#
    #               Ring arithmetic               #
    #---------------------------------------------#
    def normalize(self, payload):
        if isinstance(payload, int) : coeffs = [payload]
        else : coeffs = [int(c) for c in payload]
        # Strip trailing zero coefficients
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        if len(coeffs) == 0 : coeffs = [0]
        return tuple(coeffs)

    def add(self, x, y):
        coeffs = [a + b for a, b in zip_longest(x, y, fillvalue=0)]
        return self.normalize(coeffs)

    def mul(self, x, y):
        # Zero polynomial absorbs everything
        if x == (0,) or y == (0,) : return (0,)
        coeffs = [0] * (len(x) + len(y) - 1)
        for i, a in enumerate(x):
            if a == 0 : continue
            for j, b in enumerate(y):
                coeffs[i + j] += a * b
        return self.normalize(coeffs)

    def neg(self, x):
        return tuple(-c for c in x)

    def from_int(self, k):
        return (int(k),)

    def sort_key(self, x):
        return (degree(x), tuple(reversed(x)))

    #---------------------------------------------#
    #                Parse / Format               #
    #---------------------------------------------#
    def parse(self, text, offset=0):
        # Exception: brackets
        if len(text) < 2 or text[0] != "[" or text[-1] != "]":
            raise ValueParseError("Polynomial must be written as [c0,...,cd]",
                                  text, offset)
        body = text[1:-1]
        if body.strip() == "":
            raise ValueParseError("Empty coefficient list", text, offset + 1)
        # Parse coefficients one by one
        coeffs = []
        position = offset + 1
        for part in body.split(","):
            stripped = part.strip()
            lead = len(part) - len(part.lstrip())
            coeffs.append(parse_integer(stripped, position + lead))
            position += len(part) + 1
        # Exception: highest coefficient has to be nonzero except for [0]
        if len(coeffs) > 1 and coeffs[-1] == 0:
            raise ValueParseError("Highest coefficient must be nonzero",
                                  text, offset + len(text) - 2)
        return tuple(coeffs)

    def format(self, x):
        return "[" + ",".join(map(str, x)) + "]"

    #---------------------------------------------#
    #                  Search box                 #
    #---------------------------------------------#
    def box(self, coeff_bound, degree_bound=0, imag_bound=None):
        values = range(-coeff_bound, coeff_bound + 1)
        elements = {self.normalize(c) for c in product(values,
                                                       repeat=degree_bound+1)}
        return sorted(elements, key=self.sort_key)

    def in_box(self, x, coeff_bound, degree_bound=0, imag_bound=None):
        return degree(x) <= degree_bound and \
               all(abs(c) <= coeff_bound for c in x)

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
# Degree of a coefficient tuple (the zero polynomial counts as degree 0)
def degree(coeffs):
    return len(coeffs) - 1

# Evaluate a coefficient tuple at an integer by Horner's scheme
def horner(coeffs, a):
    result = 0
    for c in reversed(coeffs):
        result = result * a + c
    return result
