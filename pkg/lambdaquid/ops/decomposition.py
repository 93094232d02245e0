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
from lambdaquid.rings.ring_value import UnitSign, is_pm_one, \
                                        ring_one
from lambdaquid.core.matrix import word_matrix
from lambdaquid.core.quiddity import is_quiddity
from lambdaquid.ops.dihedral import dihedral_orbit
from lambdaquid.ops.reduction import DecompositionWitness
from lambdaquid.exceptions import NotAQuiddityError, InexactRingError

#-----------------------------------------------------#
#           Complete reducibility decision            #
#-----------------------------------------------------#
""" Search a witness of reducibility for a lambda-quiddity c of size n >= 3.

    For every dihedral image c' of c and every split m + l = n + 2 with
    m, l >= 3, a (+) b = c' forces the interior entries of both operands:
        a_2..a_{m-1} = c'_2..c'_{m-1}    and    b_2..b_{l-1} = c'_{m+1}..c'_n.
    With P = M(b_2,...,b_{l-1}) the equation M(b) = eps Id is equivalent to
        P = eps [[-1, b_1], [-b_l, b_1 b_l - 1]],
    so eps = -P_11 has to be 1 or -1, b_1 = eps P_12, b_l = -eps P_21 and
    P_22 = eps (b_1 b_l - 1) has to hold. The boundary entries of a follow
    from a_1 = c'_1 - b_l and a_m = c'_m - b_1, and a is a lambda-quiddity
    because c' and b are.

    The scan order is rotation ascending, reversal last, m ascending; the
    first witness found is returned.

    Parameter:
        seq (QuidditySeq):  Lambda-quiddity over an exact ring, n >= 3
    Return:
        witness (DecompositionWitness or None): None iff seq is irreducible
"""
def decompose(seq):
    # Exception: preconditions
    if not seq.ring.exact:
        raise InexactRingError("Decomposition needs an exact ring.")
    if is_quiddity(seq) is None:
        raise NotAQuiddityError(seq.format() + " is not a lambda-quiddity.")
    n = len(seq)
    if n < 3 : return None
    for transform, image in dihedral_orbit(seq):
        for m in range(3, n):
            witness = split_witness(image, m)
            if witness is None : continue
            left, right = witness
            return DecompositionWitness(transform, left, right)
    return None

# Solve the boundary unknowns for one image and one split, or return None
def split_witness(image, m):
    c = image.entries
    interior = image.replace(c[m:])             # b_2..b_{l-1}
    p = word_matrix(interior)
    eps = -p.m11
    if is_pm_one(eps) is UnitSign.NEITHER : return None
    b_first = eps * p.m12
    b_last = -(eps * p.m21)
    if p.m22 != eps * (b_first * b_last - ring_one(image.ring)) : return None
    right = image.replace((b_first,) + c[m:] + (b_last,))
    left = image.replace((c[0] - b_last,) + c[1:m-1] + (c[m-1] - b_first,))
    # Both operands must be lambda-quiddities
    if is_quiddity(left) is None or is_quiddity(right) is None : return None
    return left, right

""" Decide irreducibility of a lambda-quiddity. (0,0) is never irreducible,
    sizes >= 3 are irreducible iff decompose finds no witness.
"""
def is_irreducible(seq):
    if is_quiddity(seq) is None:
        raise NotAQuiddityError(seq.format() + " is not a lambda-quiddity.")
    if len(seq) < 3 : return False
    return decompose(seq) is None
