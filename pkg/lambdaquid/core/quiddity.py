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
from enum import Enum
from typing import Optional, Tuple
import numpy as np
# Internal libraries/scripts
from lambdaquid.rings.ring_value import RingId, RingValue, REAL, INT, \
                                        parse_value, format_value, \
                                        eval_poly_at
from lambdaquid.core.matrix import Mat2, word_matrix
from lambdaquid.exceptions import RingMismatchError, ValueParseError

# Absolute tolerance per matrix entry on the real ring
DEFAULT_TOLERANCE = 1e-9

#-----------------------------------------------------#
#                 Quiddity tuple - class              #
#-----------------------------------------------------#
""" A finite tuple (a_1,...,a_n) of values from one ring. The textual form is
    (v1,v2,...,vn); on input the parentheses are optional and whitespace is
    insignificant, on output the parentheses are always written.
"""
@dataclass(frozen=True)
class QuidditySeq:
    ring: RingId
    entries: Tuple[RingValue, ...]

    def __post_init__(self):
        for value in self.entries:
            if value.ring != self.ring:
                raise RingMismatchError(self.ring, value.ring)

    # Build a tuple from ring values or plain payloads (ints are lifted)
    @classmethod
    def of(cls, ring, values):
        entries = []
        for value in values:
            if isinstance(value, RingValue) : entries.append(value)
            else : entries.append(RingValue.of(ring, value))
        return cls(ring, tuple(entries))

    @classmethod
    def parse(cls, ring, text):
        return cls(ring, tuple(parse_entries(ring, text)))

    def format(self):
        return "(" + ",".join(format_value(v) for v in self.entries) + ")"

    @property
    def size(self):
        return len(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __iter__(self):
        return iter(self.entries)

    def __str__(self):
        return self.format()

    def sort_key(self):
        return tuple(v.sort_key() for v in self.entries)

    def replace(self, entries):
        return QuidditySeq(self.ring, tuple(entries))

class QuidditySign(Enum):
    PLUS = "plus"
    MINUS = "minus"

    @property
    def scalar(self):
        return 1 if self is QuidditySign.PLUS else -1

# Result of the quiddity predicate with the Mod(2) ambiguity metadata
@dataclass(frozen=True)
class QuiddityCheck:
    sign: Optional[QuidditySign]
    ambiguous: bool
    matrix: Mat2

    @property
    def quiddity(self):
        return self.sign is not None

#-----------------------------------------------------#
#                 Quiddity predicate                  #
#-----------------------------------------------------#
""" Decide M_n(a_1,...,a_n) = +Id (plus) or -Id (minus).
    In Z/2Z the two scalars coincide, the sign is reported as plus and the
    check is flagged ambiguous. Real tuples are decided with the default
    tolerance of is_quiddity_approx.

    Parameter:
        seq (QuidditySeq):  Tuple of length n >= 1
    Return:
        check (QuiddityCheck):  Sign (or None), ambiguity flag and matrix
"""
def check_quiddity(seq):
    matrix = word_matrix(seq)
    if len(seq) == 0 : return QuiddityCheck(None, False, matrix)
    if not seq.ring.exact:
        sign = approx_sign(matrix, DEFAULT_TOLERANCE)
        return QuiddityCheck(sign, False, matrix)
    plus = matrix == Mat2.identity(seq.ring)
    minus = matrix == Mat2.scalar(seq.ring, -1)
    if plus : sign = QuidditySign.PLUS
    elif minus : sign = QuidditySign.MINUS
    else : sign = None
    return QuiddityCheck(sign, plus and minus, matrix)

def is_quiddity(seq):
    return check_quiddity(seq).sign

#-----------------------------------------------------#
#            Approximate check on the reals           #
#-----------------------------------------------------#
# Convert a real matrix into a numpy array
def matrix_to_array(matrix):
    return np.array([[float(v.payload) for v in row] for row in matrix.rows()])

# Max-norm distance of a real matrix to sign * Id
def matrix_distance(matrix, sign):
    return float(np.max(np.abs(matrix_to_array(matrix) - \
                               sign.scalar * np.eye(2))))

def approx_sign(matrix, tol):
    for sign in (QuidditySign.MINUS, QuidditySign.PLUS):
        if matrix_distance(matrix, sign) < tol : return sign
    return None

""" Decide M_n = +Id or -Id on a real tuple up to an absolute tolerance per
    entry.

    Parameter:
        seq (QuidditySeq):  Tuple over the real ring
        tol (float):        Positive tolerance
    Return:
        sign (QuidditySign or None)
"""
def is_quiddity_approx(seq, tol=DEFAULT_TOLERANCE):
    # Exception: parameter checks
    if seq.ring != REAL:
        raise RingMismatchError(seq.ring, REAL)
    if not tol > 0:
        raise ValueError("Tolerance has to be positive.")
    if len(seq) == 0 : return None
    return approx_sign(word_matrix(seq), tol)

# Constant tuple (u_n,...,u_n) with u_n = 2cos(pi/n)
def cos_quiddity(n):
    if not isinstance(n, int) or n < 2:
        raise ValueError("cos_quiddity requires n >= 2.")
    u = float(2 * np.cos(np.pi / n))
    return QuidditySeq.of(REAL, [u] * n)

#-----------------------------------------------------#
#          Specialization Z[X] -> Z at X = a          #
#-----------------------------------------------------#
def specialize(seq, a):
    return QuidditySeq(INT, tuple(eval_poly_at(p, a) for p in seq.entries))

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
# Split a tuple text on top-level commas and parse every entry
def parse_entries(ring, text):
    body = text.strip()
    offset = len(text) - len(text.lstrip())
    if body.startswith("("):
        if not body.endswith(")"):
            raise ValueParseError("Missing closing parenthesis", text,
                                  offset + len(body))
        body = body[1:-1]
        offset += 1
    # Exception: a tuple has at least one entry
    if body.strip() == "":
        raise ValueParseError("Empty tuple", text, offset)
    # Walk the body and cut at commas outside of brackets
    entries = []
    depth = 0
    start = 0
    for i, char in enumerate(body):
        if char == "[" : depth += 1
        elif char == "]" : depth -= 1
        elif char == "," and depth == 0:
            entries.append(parse_part(ring, body[start:i], text,
                                      offset + start))
            start = i + 1
        if depth < 0:
            raise ValueParseError("Unbalanced bracket", text, offset + i)
    if depth != 0:
        raise ValueParseError("Unbalanced bracket", text, offset + len(body))
    entries.append(parse_part(ring, body[start:], text, offset + start))
    return entries

def parse_part(ring, part, text, offset):
    if part.strip() == "":
        raise ValueParseError("Empty entry", text, offset)
    return parse_value(ring, part, offset)
