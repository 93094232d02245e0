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
from lambdaquid.rings.ring_value import ring_from_int
from lambdaquid.core.matrix import Mat2, word_matrix

#-----------------------------------------------------#
#                     Continuants                     #
#-----------------------------------------------------#
""" Continuant K_i(a_1,...,a_i): the tridiagonal determinant with a_1..a_i on
    the diagonal and 1 on both off-diagonals. Computed by the recurrence
    K_i = a_i K_{i-1} - K_{i-2} starting from K_0 = 1 and K_{-1} = 0.

    Parameter:
        entries (sequence of RingValue):    a_1..a_i, may be empty
        ring (RingId):                      Ring of the result
    Return:
        value (RingValue):                  K_i(a_1,...,a_i)
"""
def continuant_of(entries, ring):
    previous = continuant_boundary(ring)
    current = ring_from_int(ring, 1)
    for a in entries:
        previous, current = current, a * current - previous
    return current

def continuant(seq):
    return continuant_of(seq.entries, seq.ring)

# K_{-1} = 0
def continuant_boundary(ring):
    return ring_from_int(ring, 0)

# Matrix of signed continuants equal to M_n(a_1,...,a_n)
def continuant_matrix(seq):
    a = seq.entries
    ring = seq.ring
    n = len(a)
    # K_{n-2}(a_2..a_{n-1}) is K_{-1} = 0 for n = 1
    if n >= 2 : corner = continuant_of(a[1:n-1], ring)
    else : corner = continuant_boundary(ring)
    return Mat2(continuant_of(a, ring), -continuant_of(a[1:], ring),
                continuant_of(a[:n-1], ring), -corner)

# Compare M_n with the matrix of continuants entrywise
def continuant_matrix_identity_check(seq):
    return word_matrix(seq) == continuant_matrix(seq)
