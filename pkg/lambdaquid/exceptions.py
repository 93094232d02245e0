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
#                  Exception classes                  #
#-----------------------------------------------------#
# Operands belong to different rings
class RingMismatchError(ValueError):
    def __init__(self, left, right):
        self.left = left
        self.right = right
        super().__init__("Ring mismatch: " + str(left) + " vs " + str(right))

# Syntax error in a value, tuple or ring selector
class ValueParseError(ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(message + " at position " + str(position) + \
                         " in '" + text + "'")

# A tuple handed to an operation requiring a lambda-quiddity is none
class NotAQuiddityError(ValueError):
    pass

# Equality based operation requested on the inexact real ring
class InexactRingError(ValueError):
    pass

# Precondition of a constructive reduction is violated
class ReductionError(ValueError):
    pass

# Enumeration box exceeds the search-space ceiling
class SearchSpaceError(RuntimeError):
    def __init__(self, estimate, ceiling):
        self.estimate = estimate
        self.ceiling = ceiling
        super().__init__("Search space estimate " + str(estimate) + \
                         " exceeds the ceiling " + str(ceiling))
