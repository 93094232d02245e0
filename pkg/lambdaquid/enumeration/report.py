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
from collections import Counter, OrderedDict
from dataclasses import dataclass, field
from typing import List
# Internal libraries/scripts
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign
from lambdaquid.enumeration.bounds import SearchBounds

#-----------------------------------------------------#
#               Enumeration record - class            #
#-----------------------------------------------------#
# One enumerated quiddity with its sign, verdict and canonical form
@dataclass(frozen=True)
class QuiddityRecord:
    seq: QuidditySeq
    sign: QuidditySign
    irreducible: bool
    canonical: QuidditySeq

    @property
    def size(self):
        return len(self.seq)

    def sort_key(self):
        return (len(self.seq), self.seq.sort_key())

    def to_dict(self):
        return OrderedDict([("n", len(self.seq)),
                            ("tuple", self.seq.format()),
                            ("sign", self.sign.value),
                            ("irreducible", self.irreducible),
                            ("canonical", self.canonical.format())])

#-----------------------------------------------------#
#               Enumeration report - class            #
#-----------------------------------------------------#
""" Result of an exhaustive enumeration: every lambda-quiddity of the box in
    deterministic order (size ascending, then lexicographic in the ring
    order), with counts per size and per irreducibility verdict.
"""
@dataclass
class EnumerationReport:
    bounds: SearchBounds
    records: List[QuiddityRecord] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def counts_by_size(self):
        return dict(sorted(Counter(r.size for r in self.records).items()))

    @property
    def irreducible_by_size(self):
        return dict(sorted(Counter(r.size for r in self.records
                                   if r.irreducible).items()))

    def __len__(self):
        return len(self.records)

    def select(self, size=None):
        return [r for r in self.records if size is None or r.size == size]

    def tuples(self, size=None):
        return {r.seq for r in self.select(size)}

    def irreducibles(self, size=None):
        return [r for r in self.select(size) if r.irreducible]

    # Group the records by canonical form (dihedral orbits inside the box)
    def orbits(self):
        groups = OrderedDict()
        for record in self.records:
            groups.setdefault(record.canonical, []).append(record)
        return groups

    # Summary block; elapsed time is only included on request
    def summary(self, timing=False):
        data = OrderedDict([
            ("bounds", self.bounds.to_dict()),
            ("total", len(self.records)),
            ("irreducible", sum(1 for r in self.records if r.irreducible)),
            ("classes", len(self.orbits())),
            ("by_size", {str(k): v for k, v in self.counts_by_size.items()}),
            ("irreducible_by_size",
             {str(k): v for k, v in self.irreducible_by_size.items()})])
        if timing : data["elapsed"] = round(self.elapsed, 6)
        return data
