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
from lambdaquid.rings.integer import parse_integer

#-----------------------------------------------------#
#              Ring: Residues (Z / nZ)                #
#-----------------------------------------------------#
""" The ring Z/nZ with residues stored in [0, n-1]. Inputs outside this range
    are reduced, never rejected. Z/nZ is not a subring of C, therefore no
    complex modulus exists and the Cuntz-Holm bound does not apply.

Methods:
    __init__                Object creation function
    add / mul / neg:        Residue arithmetic
    sort_key:               Numeric order of the residue
    box:                    All n residues (coefficient bound is ignored)
"""
class Modular_Ring(Abstract_Ring):
    #---------------------------------------------#
    #                Initialization               #
    #---------------------------------------------#
    def __init__(self, ring_id):
        # Exception: modulus check
        if ring_id.modulus is None or ring_id.modulus < 2:
            raise ValueError("Z/nZ requires a modulus n >= 2.")
        self.ring_id = ring_id
        self.n = ring_id.modulus

    #---------------------------------------------#
    #               Ring arithmetic               #
    #---------------------------------------------#
    def normalize(self, payload):
        return int(payload) % self.n

    def add(self, x, y):
        return (x + y) % self.n

    def mul(self, x, y):
        return (x * y) % self.n

    def neg(self, x):
        return (-x) % self.n

    def from_int(self, k):
        return int(k) % self.n

    def sort_key(self, x):
        return x

    #---------------------------------------------#
    #                Parse / Format               #
    #---------------------------------------------#
    def parse(self, text, offset=0):
        return parse_integer(text, offset) % self.n

    def format(self, x):
        return str(x)

    #---------------------------------------------#
    #                  Search box                 #
    #---------------------------------------------#
    def box(self, coeff_bound, degree_bound=0, imag_bound=None):
        return list(range(self.n))

    def in_box(self, x, coeff_bound, degree_bound=0, imag_bound=None):
        return True
