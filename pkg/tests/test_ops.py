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
from itertools import product
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
# Internal libraries/scripts
from lambdaquid.rings import INT, POLY, GAUSS_EVEN, REAL
from lambdaquid.core import QuidditySeq, is_quiddity
from lambdaquid.ops import quiddity_sum, DihedralTransform, \
                           apply_transform, dihedral_transforms, \
                           dihedral_orbit, canonical_form, equivalent, \
                           DecompositionWitness, reduce_by_unit, \
                           reduce_by_zero, reduce, decompose, is_irreducible
from lambdaquid.exceptions import RingMismatchError, NotAQuiddityError, \
                                  InexactRingError, ReductionError
from conftest import Z_QUIDDITIES, tuples

def z(*entries):
    return QuidditySeq.of(INT, entries)

def zx(text):
    return QuidditySeq.parse(POLY, text)

#-----------------------------------------------------#
#                       Sum                           #
#-----------------------------------------------------#
@pytest.mark.parametrize("a, b, expected", [
    (z(1, 0, 1), z(1, 2, 1), z(2, 0, 2, 2)),
    (z(2, 3, 5), z(1, 0, 7), z(9, 3, 6, 0)),
    (z(1, 5, 4, 3), z(2, 4, 4, 6, 2), z(3, 5, 4, 5, 4, 4, 6))])
def test_sum_examples(a, b, expected):
    assert quiddity_sum(a, b) == expected

def test_sum_is_not_commutative():
    a, b = z(1, 0, 1), z(1, 2, 1)
    assert quiddity_sum(a, b) != quiddity_sum(b, a)
    assert quiddity_sum(b, a) == z(2, 2, 2, 0)

def test_sum_of_size_two_operands():
    assert quiddity_sum(z(0, 0), z(0, 0)) == z(0, 0)
    assert quiddity_sum(z(1, 2, 3), z(0, 0)) == z(1, 2, 3)

def test_sum_errors():
    with pytest.raises(RingMismatchError):
        quiddity_sum(z(1, 1, 1), zx("([1],[1],[1])"))
    with pytest.raises(ValueError):
        quiddity_sum(z(1), z(1, 1, 1))

# a (+) b is a quiddity iff a is one, whenever b is a quiddity
def test_sum_preserves_quiddity_random():
    rng = np.random.default_rng(7)
    for i in range(1000):
        b = Z_QUIDDITIES[int(rng.integers(len(Z_QUIDDITIES)))]
        if rng.random() < 0.5:
            a = Z_QUIDDITIES[int(rng.integers(len(Z_QUIDDITIES)))]
        else:
            n = int(rng.integers(2, 7))
            a = QuidditySeq.of(INT, rng.integers(-3, 4, size=n).tolist())
        assert (is_quiddity(quiddity_sum(a, b)) is None) == \
               (is_quiddity(a) is None)

@settings(max_examples=100, deadline=None)
@given(a=tuples(POLY, 2, 6), index=st.integers(0, len(Z_QUIDDITIES) - 1))
def test_sum_preserves_quiddity_polynomial(a, index):
    b = QuidditySeq.of(POLY, [v.payload for v in Z_QUIDDITIES[index]])
    assert (is_quiddity(quiddity_sum(a, b)) is None) == \
           (is_quiddity(a) is None)

#-----------------------------------------------------#
#                  Dihedral action                    #
#-----------------------------------------------------#
def test_orbit_of_pair():
    images = [image for _, image in dihedral_orbit(z(1, 2))]
    assert images == [z(1, 2), z(2, 1), z(2, 1), z(1, 2)]

def test_orbit_of_constant_tuple():
    images = [image for _, image in dihedral_orbit(z(1, 1, 1))]
    assert images == [z(1, 1, 1)] * 6

def test_orbit_order():
    transforms = dihedral_transforms(3)
    assert transforms[0] == DihedralTransform(0, False)
    assert transforms[3] == DihedralTransform(0, True)
    assert apply_transform(z(1, 2, 3), DihedralTransform(1, True)) == \
           z(2, 1, 3)

def test_polynomial_orbit():
    seq = zx("([0],[0,1],[0],[0,-1])")
    images = [image for _, image in dihedral_orbit(seq)]
    assert zx("([0,1],[0],[0,-1],[0])") in images

@pytest.mark.parametrize("seq, expected", [
    (z(2, 1, 2, 1), z(1, 2, 1, 2)),
    (z(1, 1, 1), z(1, 1, 1)),
    (z(0, 3, 0, -3), z(-3, 0, 3, 0))])
def test_canonical_form(seq, expected):
    assert canonical_form(seq) == expected

def test_canonical_form_rejects_reals():
    with pytest.raises(InexactRingError):
        canonical_form(QuidditySeq.of(REAL, [1.0, 1.0, 1.0]))

def test_canonical_form_rejects_empty_tuple():
    with pytest.raises(ValueError):
        canonical_form(QuidditySeq(INT, ()))

@pytest.mark.parametrize("a, b, expected", [
    (z(1, 2, 3), z(3, 2, 1), True),
    (z(1, 2, 3), z(1, 3, 2), True),
    (z(1, 2, 3), z(1, 2, 4), False),
    (z(1, 2, 3), z(1, 2, 3, 0), False)])
def test_equivalent(a, b, expected):
    assert equivalent(a, b) is expected

def test_equivalent_polynomial_families():
    assert equivalent(zx("([0],[0,1],[0],[0,-1])"),
                      zx("([0,1],[0],[0,-1],[0])"))

@settings(max_examples=100, deadline=None)
@given(seq=st.one_of(tuples(INT, 1, 7), tuples(POLY, 1, 5),
                     tuples(GAUSS_EVEN, 1, 5)))
def test_canonical_form_constant_on_orbit(seq):
    canonical = canonical_form(seq)
    assert canonical_form(canonical) == canonical
    for _, image in dihedral_orbit(seq):
        assert canonical_form(image) == canonical
        assert (is_quiddity(image) is None) == (is_quiddity(seq) is None)

#-----------------------------------------------------#
#               Constructive reductions               #
#-----------------------------------------------------#
def test_reduce_by_unit_example():
    seq = z(1, 2, 1, 2)
    witness = reduce_by_unit(seq, 0)
    assert witness.transformed(seq) == z(2, 1, 2, 1)
    assert witness.left == z(1, 1, 1)
    assert witness.right == z(1, 1, 1)
    assert witness.verify(seq)

def test_reduce_by_unit_size_five():
    seq = z(2, 0, -1, 1, 1)
    witness = reduce_by_unit(seq, 3)
    assert witness.right == z(1, 1, 1)
    assert witness.left == z(0, 2, 0, -2)
    assert witness.verify(seq)

def test_reduce_by_minus_one():
    seq = z(-1, -2, -1, -2)
    witness = reduce_by_unit(seq, 2)
    assert witness.right == z(-1, -1, -1)
    assert witness.verify(seq)

def test_reduce_by_zero_example():
    seq = z(2, 0, -1, 1, 1)
    witness = reduce_by_zero(seq, 1)
    assert witness.transform == DihedralTransform(3, False)
    assert witness.transformed(seq) == z(1, 1, 2, 0, -1)
    assert witness.left == z(1, 1, 1)
    assert witness.right == z(1, 0, -1, 0)
    assert witness.verify(seq)

def test_reduce_by_zero_polynomial():
    seq = zx("([1,1],[0],[0,-1],[1],[1])")
    witness = reduce_by_zero(seq, 1)
    assert witness.right == zx("([0,1],[0],[0,-1],[0])")
    assert witness.verify(seq)

def test_reduction_errors():
    with pytest.raises(ReductionError):
        reduce_by_unit(z(1, 1, 1), 0)
    with pytest.raises(ReductionError):
        reduce_by_unit(z(1, 2, 1, 2), 1)
    with pytest.raises(ReductionError):
        reduce_by_zero(z(2, 0, -1, 1, 1), 0)
    with pytest.raises(ReductionError):
        reduce_by_zero(z(0, 3, 0, -3), 0)
    with pytest.raises(NotAQuiddityError):
        reduce_by_unit(z(1, 2, 3, 4), 0)

def test_reduce_prefers_units():
    witness = reduce(z(2, 0, -1, 1, 1))
    assert witness.right == z(-1, -1, -1)
    assert reduce(z(0, 3, 0, -3)) is None

def test_tampered_witness_fails():
    seq = z(1, 2, 1, 2)
    witness = reduce_by_unit(seq, 0)
    tampered = DecompositionWitness(witness.transform, z(1, 1, 1),
                                    z(-1, -1, -1))
    assert not tampered.verify(seq)

#-----------------------------------------------------#
#                Decomposition decision               #
#-----------------------------------------------------#
def test_decompose_examples():
    assert decompose(z(1, 1, 1)) is None
    assert decompose(z(0, 2, 0, -2)) is None
    assert decompose(zx("([0,1],[0],[0,-1],[0])")) is None
    seq = z(1, 2, 1, 2)
    witness = decompose(seq)
    assert witness is not None and witness.verify(seq)
    assert {witness.left, witness.right} == {z(1, 1, 1)}

def test_decompose_errors():
    with pytest.raises(NotAQuiddityError):
        decompose(z(1, 2, 3))
    with pytest.raises(InexactRingError):
        decompose(QuidditySeq.of(REAL, [1.0, 1.0, 1.0]))

def test_witness_to_dict():
    seq = z(1, 2, 1, 2)
    data = decompose(seq).to_dict(seq)
    assert set(data) == {"rotation", "reversed", "left", "right",
                         "transformed"}

@pytest.mark.parametrize("seq, expected", [
    (z(0, 0), False), (z(-1, -1, -1), True), (z(1, 1, 1), True),
    (z(2, 1, 2, 1), False), (z(0, 0, 0, 0), True),
    (z(2, 0, -1, 1, 1), False)])
def test_is_irreducible(seq, expected):
    assert is_irreducible(seq) is expected

def test_is_irreducible_requires_quiddity():
    with pytest.raises(NotAQuiddityError):
        is_irreducible(z(3, 3))

#-----------------------------------------------------#
#           Brute-force decomposition oracle          #
#-----------------------------------------------------#
# All Z quiddities of the given sizes with entries in [-bound, bound]
def naive_quiddities(sizes, bound):
    values = range(-bound, bound + 1)
    found = []
    for n in sizes:
        for entries in product(values, repeat=n):
            seq = QuidditySeq.of(INT, entries)
            if is_quiddity(seq) is not None : found.append(seq)
    return found

def test_decompose_matches_brute_force():
    operands = naive_quiddities(range(3, 5), 3)
    sums = {quiddity_sum(a, b) for a in operands for b in operands
            if len(a) + len(b) - 2 <= 5}
    for seq in naive_quiddities(range(3, 6), 2):
        reducible = any(image in sums for _, image in dihedral_orbit(seq))
        witness = decompose(seq)
        assert (witness is not None) is reducible, seq.format()
        if witness is not None : assert witness.verify(seq)
