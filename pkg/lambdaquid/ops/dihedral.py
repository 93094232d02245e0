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
from lambdaquid.exceptions import InexactRingError

#-----------------------------------------------------#
#                 Dihedral transform                  #
#-----------------------------------------------------#
# Optional reversal followed by a left rotation by `rotation` positions
@dataclass(frozen=True)
class DihedralTransform:
    rotation: int = 0
    reversed: bool = False

    def apply(self, seq):
        entries = seq.entries
        if self.reversed : entries = tuple(reversed(entries))
        r = self.rotation % len(entries) if len(entries) > 0 else 0
        return seq.replace(entries[r:] + entries[:r])

    def to_dict(self):
        return {"rotation": self.rotation, "reversed": self.reversed}

def apply_transform(seq, transform):
    return transform.apply(seq)

# All 2n transforms in scan order: rotations first, then rotations of reversal
def dihedral_transforms(n):
    return [DihedralTransform(r, rev) for rev in (False, True)
                                      for r in range(n)]

""" List the 2n images of a tuple under the dihedral group, keeping
    duplicates, in scan order (rotation ascending, reversal last).

    Parameter:
        seq (QuidditySeq):  Tuple of size n >= 1
    Return:
        orbit [list]:       List of (DihedralTransform, QuidditySeq)
"""
def dihedral_orbit(seq):
    return [(t, t.apply(seq)) for t in dihedral_transforms(len(seq))]

#-----------------------------------------------------#
#             Canonical form and equivalence          #
#-----------------------------------------------------#
# Lexicographically smallest member of the orbit under the ring order
def canonical_form(seq):
    if not seq.ring.exact:
        raise InexactRingError("Canonical forms need an exact ring.")
    if len(seq) == 0:
        raise ValueError("Canonical forms need a nonempty tuple.")
    members = [member for _, member in dihedral_orbit(seq)]
    return min(members, key=lambda member: member.sort_key())

def equivalent(a, b):
    if a.ring != b.ring or len(a) != len(b) : return False
    return canonical_form(a) == canonical_form(b)
