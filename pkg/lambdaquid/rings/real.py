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
# Internal libraries/scripts
from lambdaquid.rings.abstract_ring import Abstract_Ring
from lambdaquid.exceptions import ValueParseError, InexactRingError

REAL_PATTERN = re.compile(r"^[-+]?([0-9]+\.?[0-9]*|\.[0-9]+)([eE][-+]?[0-9]+)?$")

#-----------------------------------------------------#
#              Ring: Real numbers (float)             #
#-----------------------------------------------------#
# Inexact ring used for the 2cos(pi/n) tuples only
class Real_Ring(Abstract_Ring):
    # Class variables
    exact = False

    def __init__(self, ring_id):
        self.ring_id = ring_id

    def normalize(self, payload):
        return float(payload)

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def neg(self, x):
        return -x

    def from_int(self, k):
        return float(k)

    def sort_key(self, x):
        raise InexactRingError("No canonical order on inexact real values.")

    def parse(self, text, offset=0):
        if REAL_PATTERN.match(text) is None:
            raise ValueParseError("Expected a decimal number", text, offset)
        return float(text)

    def format(self, x):
        return repr(x)

    def modulus_below_two(self, x):
        return abs(x) < 2
