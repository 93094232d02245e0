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
from dataclasses import dataclass
# Internal libraries/scripts
from lambdaquid.rings.ring_value import RingValue, ring_from_int, \
                                        check_same_ring

#-----------------------------------------------------#
#                 2x2 Matrix - class                  #
#-----------------------------------------------------#
# Immutable 2x2 matrix with entries from one ring
@dataclass(frozen=True)
class Mat2:
    m11: RingValue
    m12: RingValue
    m21: RingValue
    m22: RingValue

    def __post_init__(self):
        check_same_ring(self.m11, self.m12)
        check_same_ring(self.m11, self.m21)
        check_same_ring(self.m11, self.m22)

    @classmethod
    def scalar(cls, ring, k):
        zero = ring_from_int(ring, 0)
        diagonal = ring_from_int(ring, k)
        return cls(diagonal, zero, zero, diagonal)

    @classmethod
    def identity(cls, ring):
        return cls.scalar(ring, 1)

    @property
    def ring(self):
        return self.m11.ring

    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def rows(self):
        return ((self.m11, self.m12), (self.m21, self.m22))

    def __matmul__(self, other):
        return Mat2(self.m11 * other.m11 + self.m12 * other.m21,
                    self.m11 * other.m12 + self.m12 * other.m22,
                    self.m21 * other.m11 + self.m22 * other.m21,
                    self.m21 * other.m12 + self.m22 * other.m22)

    def determinant(self):
        return self.m11 * self.m22 - self.m12 * self.m21

#-----------------------------------------------------#
#                    Matrix words                     #
#-----------------------------------------------------#
# Elementary factor [[x, -1], [1, 0]]
def elementary(x):
    return Mat2(x, ring_from_int(x.ring, -1),
                ring_from_int(x.ring, 1), ring_from_int(x.ring, 0))

# Left multiplication elementary(a) @ m without building the factor
def step(m, a):
    return Mat2(a * m.m11 - m.m21, a * m.m12 - m.m22, m.m11, m.m12)

""" Compute the word M_n(a_1,...,a_n) = elementary(a_n) ... elementary(a_1).
    The rightmost factor is elementary(a_1), so the product is accumulated by
    left multiplication while walking the tuple from a_1 to a_n.

    Parameter:
        seq (QuidditySeq):  Tuple (a_1,...,a_n), n >= 1 (n = 0 gives Id)
    Return:
        matrix (Mat2):      The exact product
"""
def word_matrix(seq):
    matrix = Mat2.identity(seq.ring)
    for a in seq.entries:
        matrix = step(matrix, a)
    return matrix
