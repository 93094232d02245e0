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
from lambdaquid.exceptions import RingMismatchError

#-----------------------------------------------------#
#                   Sum of two tuples                 #
#-----------------------------------------------------#
""" Sum of an n-tuple a and an m-tuple b, giving the (n+m-2)-tuple
        (a_1 + b_m, a_2, ..., a_{n-1}, a_n + b_1, b_2, ..., b_{m-1}).
    The sum is neither commutative nor associative. No normalization is
    applied to the result.

    Parameter:
        a (QuidditySeq):    Left operand, n >= 2
        b (QuidditySeq):    Right operand, m >= 2, same ring
    Return:
        sum (QuidditySeq):  Tuple of size n + m - 2
"""
def quiddity_sum(a, b):
    # Exception: operand checks
    if a.ring != b.ring:
        raise RingMismatchError(a.ring, b.ring)
    if len(a) < 2 or len(b) < 2:
        raise ValueError("Both operands of the sum need a size of at least 2.")
    x, y = a.entries, b.entries
    entries = (x[0] + y[-1],) + x[1:-1] + (x[-1] + y[0],) + y[1:-1]
    return a.replace(entries)
