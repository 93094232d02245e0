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
from collections import OrderedDict
from dataclasses import dataclass, field
from typing import List

#-----------------------------------------------------#
#                  Verdict - class                    #
#-----------------------------------------------------#
""" Outcome of a verification suite: named counters and the list of failed
    checks. A suite passes iff no check failed.
"""
@dataclass
class Verdict:
    suite: str
    counts: OrderedDict = field(default_factory=OrderedDict)
    failures: List[str] = field(default_factory=list)

    @property
    def passed(self):
        return len(self.failures) == 0

    # Record one check; the message is stored if the condition fails
    def check(self, condition, message):
        self.count("checks")
        if not condition : self.failures.append(message)
        return condition

    def count(self, name, amount=1):
        self.counts[name] = self.counts.get(name, 0) + amount

    def set(self, name, value):
        self.counts[name] = value

    # Compare a found set with an expected set of tuples
    def compare_sets(self, label, found, expected):
        self.set(label + "_found", len(found))
        self.set(label + "_expected", len(expected))
        missing = sorted((t.format() for t in expected - found))
        unexpected = sorted((t.format() for t in found - expected))
        self.check(not missing, label + ": missing " + ", ".join(missing))
        self.check(not unexpected, label + ": unexpected " + \
                                   ", ".join(unexpected))

    def merge(self, other, prefix):
        for key, value in other.counts.items():
            self.set(prefix + "." + key, value)
        self.failures.extend(prefix + ": " + f for f in other.failures)

    def to_dict(self):
        data = OrderedDict([("verdict", "pass" if self.passed else "fail"),
                            ("suite", self.suite)])
        data.update(self.counts)
        data["failures"] = list(self.failures)
        return data
