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
from typing import Optional
# Internal libraries/scripts
from lambdaquid.rings.ring_value import RingId, RingValue
from lambdaquid.exceptions import InexactRingError

#-----------------------------------------------------#
#                 Search bounds - class               #
#-----------------------------------------------------#
""" Finite search box for the enumeration of lambda-quiddities.

Args:
    ring (RingId):              Exact ring of the entries.
    size_min (integer):         Smallest tuple size, at least 2.
    size_max (integer):         Largest tuple size.
    coeff_bound (integer):      Z: |a| <= B. Z[X]: all |coefficients| <= B.
                                Z[2i]: |a| <= B for a + 2bi. Z/nZ: ignored.
    degree_bound (integer):     Z[X] only: degree <= d.
    imag_bound (integer):       Z[2i] only: |b| <= imag_bound for a + 2bi,
                                defaults to coeff_bound (|2b| <= 2B).
"""
@dataclass(frozen=True)
class SearchBounds:
    ring: RingId
    size_min: int = 2
    size_max: int = 4
    coeff_bound: int = 1
    degree_bound: int = 0
    imag_bound: Optional[int] = None

    def __post_init__(self):
        # Exception: parameter checks
        if not self.ring.exact:
            raise InexactRingError("Enumeration needs an exact ring.")
        if self.size_min < 2:
            raise ValueError("size_min has to be at least 2.")
        if self.size_max < self.size_min:
            raise ValueError("size_max has to be at least size_min.")
        if self.coeff_bound < 0 or self.degree_bound < 0:
            raise ValueError("Bounds have to be nonnegative.")
        if self.imag_bound is not None and self.imag_bound < 0:
            raise ValueError("Bounds have to be nonnegative.")

    @property
    def sizes(self):
        return range(self.size_min, self.size_max + 1)

    # In-box elements in ascending ring order
    def box(self):
        payloads = self.ring.ring.box(self.coeff_bound, self.degree_bound,
                                      self.imag_bound)
        return [RingValue(self.ring, p) for p in payloads]

    def contains(self, value):
        return self.ring.ring.in_box(value.payload, self.coeff_bound,
                                     self.degree_bound, self.imag_bound)

    # Number of search-tree leaves: |box|^(n-2) summed over all sizes
    def estimate(self):
        width = len(self.ring.ring.box(self.coeff_bound, self.degree_bound,
                                       self.imag_bound))
        return sum(width ** (n - 2) for n in self.sizes)

    def to_dict(self):
        data = {"ring": str(self.ring), "size_min": self.size_min,
                "size_max": self.size_max, "coeff_bound": self.coeff_bound}
        if self.ring.tag == "zx" : data["degree_bound"] = self.degree_bound
        if self.ring.tag == "z2i":
            data["imag_bound"] = self.imag_bound if self.imag_bound \
                                 is not None else self.coeff_bound
        return data
