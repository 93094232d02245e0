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
from abc import ABC, abstractmethod
# Internal libraries/scripts
from lambdaquid.exceptions import InexactRingError

#-----------------------------------------------------#
#            Abstract Interface for a Ring            #
#-----------------------------------------------------#
""" An abstract base class for a ring implementation of the ring tower.
    A ring implementation works on raw payloads (int, tuple or float). The
    RingValue class wraps a payload together with its RingId and dispatches
    every operation to the implementation of its ring.

Methods:
    __init__                Object creation function
    normalize:              Bring a raw payload into normal form
    add / mul / neg / eq:   Ring arithmetic on payloads
    from_int:               Image of an integer under Z -> ring
    sort_key:               Key of the total order used for canonical forms
    parse / format:         Value grammar of the command line
    box:                    Finite list of in-box elements for enumeration
    in_box:                 Box membership of a payload
    modulus_below_two:      Complex modulus |x| < 2 (rings embedded in C)
"""
class Abstract_Ring(ABC):
    # Class variables
    exact = True                        # Exact equality available

    #---------------------------------------------#
    #                   __init__                  #
    #---------------------------------------------#
    """ Functions which will be called during the ring object creation.

        Parameter:
            ring_id (RingId):   Identifier of the ring (tag and modulus)
        Return:
            None
    """
    @abstractmethod
    def __init__(self, ring_id):
        self.ring_id = ring_id
    #---------------------------------------------#
    #                  normalize                  #
    #---------------------------------------------#
    """ Bring a raw payload into the normal form of the ring.

        Parameter:
            payload (variable):     Raw payload (int, sequence or float)
        Return:
            payload (variable):     Normalized immutable payload
    """
    @abstractmethod
    def normalize(self, payload):
        pass
    #---------------------------------------------#
    #               Ring arithmetic               #
    #---------------------------------------------#
    @abstractmethod
    def add(self, x, y):
        pass

    @abstractmethod
    def mul(self, x, y):
        pass

    @abstractmethod
    def neg(self, x):
        pass

    def eq(self, x, y):
        return x == y

    @abstractmethod
    def from_int(self, k):
        pass
    #---------------------------------------------#
    #                  sort_key                   #
    #---------------------------------------------#
    """ Compute the key of the total order on the ring. Two payloads compare
        like their keys. Inexact rings reject the operation.

        Parameter:
            x (variable):           Normalized payload
        Return:
            key (tuple or int):     Comparable key
    """
    @abstractmethod
    def sort_key(self, x):
        pass
    #---------------------------------------------#
    #                parse / format               #
    #---------------------------------------------#
    """ Parse a value from its textual representation. A ValueParseError
        with the offending position is raised on syntax errors.

        Parameter:
            text (string):          Textual value without surrounding spaces
            offset (integer):       Offset of text inside the whole input,
                                    used for error positions
        Return:
            payload (variable):     Normalized payload
    """
    @abstractmethod
    def parse(self, text, offset=0):
        pass

    @abstractmethod
    def format(self, x):
        pass
    #---------------------------------------------#
    #                     box                     #
    #---------------------------------------------#
    """ List all elements of the search box in ascending sort order.

        Parameter:
            coeff_bound (integer):  Bound on the absolute value of integer parts
            degree_bound (integer): Degree bound (polynomial ring only)
            imag_bound (integer):   Bound on b for a+2bi (GaussEven only)
        Return:
            elements [list]:        List of normalized payloads
    """
    def box(self, coeff_bound, degree_bound=0, imag_bound=None):
        raise InexactRingError("No enumeration box on the ring " + \
                               str(self.ring_id))

    def in_box(self, x, coeff_bound, degree_bound=0, imag_bound=None):
        raise InexactRingError("No enumeration box on the ring " + \
                               str(self.ring_id))
    #---------------------------------------------#
    #              modulus_below_two              #
    #---------------------------------------------#
    """ Decide if the complex modulus of an element is strictly below 2.
        Only defined for rings embedded in C with a fixed embedding.

        Parameter:
            x (variable):           Normalized payload
        Return:
            below (boolean):        True if |x| < 2
    """
    def modulus_below_two(self, x):
        raise ValueError("Complex modulus is not defined on the ring " + \
                         str(self.ring_id))
