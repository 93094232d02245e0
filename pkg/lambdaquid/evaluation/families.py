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
from lambdaquid.rings.ring_value import UnitSign, is_pm_one, ring_from_int
from lambdaquid.core.quiddity import QuidditySeq

#-----------------------------------------------------#
#         Closed-form families inside a box           #
#-----------------------------------------------------#
# Keep only the tuples whose entries all lie inside the box
def in_box(bounds, candidates):
    return {t for t in candidates if all(bounds.contains(v) for v in t)}

# (1,1,1) and (-1,-1,-1)
def unit_triples(bounds):
    ring = bounds.ring
    return in_box(bounds, {QuidditySeq.of(ring, [k, k, k]) for k in (1, -1)})

""" All solutions of sizes 2, 3 and 4 over an integral domain, restricted to
    the box:
        size 2: (0,0)
        size 3: (1,1,1), (-1,-1,-1)
        size 4: (-a,b,a,-b) with ab = 0 and (a,b,a,b) with ab = 2

    Parameter:
        bounds (SearchBounds):  Box over Z or Z[X] (or Z[2i])
        size (integer):         2, 3 or 4
    Return:
        family [set]:           Set of QuidditySeq
"""
def small_size_family(bounds, size):
    ring = bounds.ring
    if size == 2 : return {QuidditySeq.of(ring, [0, 0])}
    if size == 3 : return unit_triples(bounds)
    if size != 4 : return set()
    zero = ring_from_int(ring, 0)
    two = ring_from_int(ring, 2)
    box = bounds.box()
    family = set()
    for a in box:
        for b in box:
            if a * b == zero:
                family.add(QuidditySeq(ring, (-a, b, a, -b)))
            if a * b == two:
                family.add(QuidditySeq(ring, (a, b, a, b)))
    return in_box(bounds, family)

""" Irreducible lambda-quiddities for rings in which every quiddity of size
    >= 5 is reducible and every solution of size 4 with ab = 2 contains a unit
    (Z[alpha] with alpha transcendental, Z[2i]), restricted to the box:
        (1,1,1), (-1,-1,-1), (0,P,0,-P), (P,0,-P,0) with P not 1 or -1

    Parameter:
        bounds (SearchBounds):  Box over Z[X] or Z[2i]
    Return:
        family [set]:           Set of QuidditySeq (sizes 3 and 4)
"""
def irreducible_family(bounds):
    ring = bounds.ring
    zero = ring_from_int(ring, 0)
    family = set()
    if bounds.size_min <= 3 <= bounds.size_max:
        family |= unit_triples(bounds)
    if bounds.size_min <= 4 <= bounds.size_max:
        for p in bounds.box():
            if is_pm_one(p) is not UnitSign.NEITHER : continue
            family.add(QuidditySeq(ring, (zero, p, zero, -p)))
            family.add(QuidditySeq(ring, (p, zero, -p, zero)))
    return in_box(bounds, family)
