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
# Internal libraries/scripts
from lambdaquid.rings.abstract_ring import Abstract_Ring
from lambdaquid.exceptions import ValueParseError

#-----------------------------------------------------#
#                 Ring: Integers (Z)                  #
#-----------------------------------------------------#
""" The ring of rational integers with arbitrary precision (Python int).

Methods:
    __init__                Object creation function
    add / mul / neg:        Integer arithmetic
    sort_key:               Numeric order
    parse / format:         Grammar -?[0-9]+
    box:                    All integers with |x| <= coeff_bound
"""
class Integer_Ring(Abstract_Ring):
    #---------------------------------------------#
    #                Initialization               #
    #---------------------------------------------#
    def __init__(self, ring_id):
        self.ring_id = ring_id

    #---------------------------------------------#
    #               Ring arithmetic               #
    #---------------------------------------------#
    def normalize(self, payload):
        return int(payload)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def from_int(self, k):
        return int(k)

    def sort_key(self, x):
        return x

    #---------------------------------------------#
    #                Parse / Format               #
    #---------------------------------------------#
    def parse(self, text, offset=0):
        return parse_integer(text, offset)

    def format(self, x):
        return str(x)

    #---------------------------------------------#
    #                  Search box                 #
    #---------------------------------------------#
    def box(self, coeff_bound, degree_bound=0, imag_bound=None):
        return list(range(-coeff_bound, coeff_bound + 1))

    def in_box(self, x, coeff_bound, degree_bound=0, imag_bound=None):
        return abs(x) <= coeff_bound

    def modulus_below_two(self, x):
        return abs(x) < 2

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
# Parse a signed decimal integer and report the first invalid position
def parse_integer(text, offset=0):
    if len(text) == 0:
        raise ValueParseError("Empty integer", text, offset)
    start = 1 if text[0] == "-" else 0
    if start == len(text):
        raise ValueParseError("Missing digits", text, offset + start)
    for i in range(start, len(text)):
        if not text[i].isdigit() or not text[i].isascii():
            raise ValueParseError("Invalid digit '" + text[i] + "'", text,
                                  offset + i)
    return int(text)
