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
from lambdaquid.rings.ring_value import UnitSign, is_pm_one, ring_from_int
from lambdaquid.core.quiddity import QuidditySeq, is_quiddity
from lambdaquid.ops.oplus import quiddity_sum
from lambdaquid.ops.dihedral import DihedralTransform
from lambdaquid.exceptions import ReductionError, NotAQuiddityError

#-----------------------------------------------------#
#               Decomposition witness                 #
#-----------------------------------------------------#
""" Certificate of reducibility: transform(c) = left (+) right where left and
    right are lambda-quiddities of size >= 3.
"""
@dataclass(frozen=True)
class DecompositionWitness:
    transform: DihedralTransform
    left: QuidditySeq
    right: QuidditySeq

    def transformed(self, seq):
        return self.transform.apply(seq)

    # Re-check every witness invariant against the original tuple
    def verify(self, seq):
        if len(self.left) < 3 or len(self.right) < 3 : return False
        if len(self.left) + len(self.right) - 2 != len(seq) : return False
        if is_quiddity(self.left) is None : return False
        if is_quiddity(self.right) is None : return False
        return quiddity_sum(self.left, self.right) == self.transformed(seq)

    def to_dict(self, seq=None):
        data = self.transform.to_dict()
        data["left"] = self.left.format()
        data["right"] = self.right.format()
        if seq is not None : data["transformed"] = self.transformed(seq).format()
        return data

#-----------------------------------------------------#
#           Constructive reductions (units)           #
#-----------------------------------------------------#
""" Reduction at an entry a_i = eps in {1, -1}, valid for n >= 4:
        (a_{i+1},...,a_i) = (a_{i+1}-eps,...,a_{i-1}-eps) (+) (eps,eps,eps)

    Parameter:
        seq (QuidditySeq):  Lambda-quiddity of size n >= 4
        index (integer):    0-based position of an entry equal to 1 or -1
    Return:
        witness (DecompositionWitness)
"""
def reduce_by_unit(seq, index):
    n = len(seq)
    # Exception: preconditions
    if n < 4:
        raise ReductionError("Reduction by a unit needs a size of at least 4.")
    eps = seq[index]
    if is_pm_one(eps) is UnitSign.NEITHER:
        raise ReductionError("Entry " + str(index) + " is not 1 or -1.")
    if is_quiddity(seq) is None:
        raise NotAQuiddityError(seq.format() + " is not a lambda-quiddity.")
    # Rotation starting right after the unit entry (the unit comes last)
    transform = DihedralTransform((index + 1) % n, False)
    rotated = transform.apply(seq).entries
    left = list(rotated[:-1])
    left[0] = left[0] - eps
    left[-1] = left[-1] - eps
    right = seq.replace((eps, eps, eps))
    return DecompositionWitness(transform, seq.replace(left), right)

#-----------------------------------------------------#
#           Constructive reductions (zeros)           #
#-----------------------------------------------------#
""" Reduction at an entry a_i = 0, valid for n >= 5:
        (a_{i+2},...,a_i,a_{i+1}) = (a_{i+2},...,a_{i-1}+a_{i+1})
                                    (+) (-a_{i+1},0,a_{i+1},0)

    Parameter:
        seq (QuidditySeq):  Lambda-quiddity of size n >= 5
        index (integer):    0-based position of a zero entry
    Return:
        witness (DecompositionWitness)
"""
def reduce_by_zero(seq, index):
    n = len(seq)
    # Exception: preconditions
    if n < 5:
        raise ReductionError("Reduction by a zero needs a size of at least 5.")
    zero = ring_from_int(seq.ring, 0)
    if seq[index] != zero:
        raise ReductionError("Entry " + str(index) + " is not 0.")
    if is_quiddity(seq) is None:
        raise NotAQuiddityError(seq.format() + " is not a lambda-quiddity.")
    # Rotation starting two places after the zero (zero and its successor last)
    transform = DihedralTransform((index + 2) % n, False)
    rotated = transform.apply(seq).entries
    successor = rotated[-1]
    left = list(rotated[:-3]) + [rotated[-3] + successor]
    right = seq.replace((-successor, zero, successor, zero))
    return DecompositionWitness(transform, seq.replace(left), right)

# First applicable unit or zero reduction, or None
def reduce(seq):
    n = len(seq)
    if n >= 4:
        for i, value in enumerate(seq):
            if is_pm_one(value) is not UnitSign.NEITHER:
                return reduce_by_unit(seq, i)
    if n >= 5:
        zero = ring_from_int(seq.ring, 0)
        for i, value in enumerate(seq):
            if value == zero : return reduce_by_zero(seq, i)
    return None
