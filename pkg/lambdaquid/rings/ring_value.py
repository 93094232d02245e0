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
from functools import lru_cache
from typing import Any, Optional
# Internal libraries/scripts
from lambdaquid.rings.integer import Integer_Ring
from lambdaquid.rings.modular import Modular_Ring
from lambdaquid.rings.polynomial import Polynomial_Ring, horner
from lambdaquid.rings.gauss_even import GaussEven_Ring
from lambdaquid.rings.real import Real_Ring
from lambdaquid.exceptions import (RingMismatchError, ValueParseError,
                                   InexactRingError)

# Ring implementation for each selector tag
RING_CLASSES = {"z": Integer_Ring,
                "zmod": Modular_Ring,
                "zx": Polynomial_Ring,
                "z2i": GaussEven_Ring,
                "real": Real_Ring}

#-----------------------------------------------------#
#                    Ring Identifier                  #
#-----------------------------------------------------#
""" Identifier of a ring of the tower. The tag is one of the selector strings
    z, zmod, zx, z2i, real; the modulus is only set for zmod (n >= 2).
"""
@dataclass(frozen=True)
class RingId:
    tag: str
    modulus: Optional[int] = None

    def __post_init__(self):
        # Exception: tag check
        if self.tag not in RING_CLASSES:
            raise ValueError("Unknown ring tag '" + str(self.tag) + "'.")
        # Exception: modulus check
        if self.tag == "zmod":
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise ValueError("Z/nZ requires a modulus n >= 2.")
        elif self.modulus is not None:
            raise ValueError("Only Z/nZ carries a modulus.")

    # Parse a ring selector string (z, zmod:<n>, zx, z2i, real)
    @classmethod
    def parse(cls, selector):
        text = selector.strip()
        if text.startswith("zmod:"):
            digits = text[len("zmod:"):]
            if not digits.isdigit():
                raise ValueParseError("Invalid modulus", selector,
                                      len("zmod:"))
            modulus = int(digits)
            if modulus < 2:
                raise ValueParseError("Modulus must be at least 2", selector,
                                      len("zmod:"))
            return cls("zmod", modulus)
        if text not in RING_CLASSES or text == "zmod":
            raise ValueParseError("Unknown ring selector", selector, 0)
        return cls(text)

    @property
    def ring(self):
        return ring_implementation(self)

    @property
    def exact(self):
        return self.ring.exact

    def __str__(self):
        if self.tag == "zmod" : return "zmod:" + str(self.modulus)
        return self.tag

# Cached ring implementation for a ring identifier
@lru_cache(maxsize=None)
def ring_implementation(ring_id):
    return RING_CLASSES[ring_id.tag](ring_id)

# Frequently used identifiers
INT = RingId("z")
POLY = RingId("zx")
GAUSS_EVEN = RingId("z2i")
REAL = RingId("real")

def mod(n):
    return RingId("zmod", n)

#-----------------------------------------------------#
#                     Ring Value                      #
#-----------------------------------------------------#
""" An immutable element of one ring of the tower. Always construct values
    with RingValue.of (or the helpers below) so the payload is normalized:
    structural equality is then ring equality.
"""
@dataclass(frozen=True)
class RingValue:
    ring: RingId
    payload: Any

    @classmethod
    def of(cls, ring, payload):
        return cls(ring, ring.ring.normalize(payload))

    # Arithmetic operators dispatch to the ring implementation
    def __add__(self, other):
        return ring_add(self, other)

    def __sub__(self, other):
        return ring_sub(self, other)

    def __mul__(self, other):
        return ring_mul(self, other)

    def __neg__(self):
        return ring_neg(self)

    def sort_key(self):
        return self.ring.ring.sort_key(self.payload)

    def __str__(self):
        return format_value(self)

class UnitSign(Enum):
    PLUS = "plus"
    MINUS = "minus"
    NEITHER = "neither"

#-----------------------------------------------------#
#                   Ring Operations                   #
#-----------------------------------------------------#
# Exception: both operands have to live in the same ring
def check_same_ring(x, y):
    if x.ring != y.ring:
        raise RingMismatchError(x.ring, y.ring)

def ring_add(x, y):
    check_same_ring(x, y)
    return RingValue(x.ring, x.ring.ring.add(x.payload, y.payload))

def ring_mul(x, y):
    check_same_ring(x, y)
    return RingValue(x.ring, x.ring.ring.mul(x.payload, y.payload))

def ring_neg(x):
    return RingValue(x.ring, x.ring.ring.neg(x.payload))

def ring_sub(x, y):
    return ring_add(x, ring_neg(y))

def ring_eq(x, y):
    check_same_ring(x, y)
    return x.ring.ring.eq(x.payload, y.payload)

def ring_from_int(ring, k):
    return RingValue(ring, ring.ring.from_int(k))

def ring_zero(ring):
    return ring_from_int(ring, 0)

def ring_one(ring):
    return ring_from_int(ring, 1)

""" Total order of an exact ring: -1 (less), 0 (equal) or 1 (greater).
    Int and Mod compare numerically, Poly by degree and then by coefficients
    from the highest to the lowest, GaussEven lexicographically on (a, b).
    The real ring has no canonical order and raises an InexactRingError.
"""
def ring_compare(x, y):
    check_same_ring(x, y)
    if not x.ring.exact:
        raise InexactRingError("Comparison on the inexact real ring.")
    kx, ky = x.sort_key(), y.sort_key()
    if kx < ky : return -1
    elif kx > ky : return 1
    else : return 0

# Classify a value as the ring's 1, its -1 or neither (Mod(2): 1 = -1 -> plus)
def is_pm_one(x):
    if ring_eq(x, ring_one(x.ring)) : return UnitSign.PLUS
    elif ring_eq(x, ring_from_int(x.ring, -1)) : return UnitSign.MINUS
    else : return UnitSign.NEITHER

# Evaluate a polynomial value at an integer (Horner), result in Z
def eval_poly_at(p, a):
    if p.ring.tag != "zx":
        raise RingMismatchError(p.ring, POLY)
    return RingValue(INT, horner(p.payload, int(a)))

#-----------------------------------------------------#
#                   Parse and Format                  #
#-----------------------------------------------------#
def parse_value(ring, text, offset=0):
    stripped = text.strip()
    lead = len(text) - len(text.lstrip())
    payload = ring.ring.parse(stripped, offset + lead)
    return RingValue(ring, payload)

def format_value(x):
    return x.ring.ring.format(x.payload)

#-----------------------------------------------------#
#                 Value constructors                  #
#-----------------------------------------------------#
def integer(k):
    return RingValue.of(INT, k)

def modular(r, n):
    return RingValue.of(mod(n), r)

def poly(coeffs):
    return RingValue.of(POLY, coeffs)

def gauss(a, b=0):
    return RingValue.of(GAUSS_EVEN, (a, b))

def real(x):
    return RingValue.of(REAL, x)
