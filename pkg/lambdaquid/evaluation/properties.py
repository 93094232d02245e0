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
import logging
import numpy as np
# Internal libraries/scripts
from lambdaquid.rings.ring_value import INT, POLY, UnitSign, is_pm_one, \
                                        ring_zero, eval_poly_at
from lambdaquid.core.matrix import word_matrix
from lambdaquid.core.continuant import continuant_matrix_identity_check
from lambdaquid.core.quiddity import QuidditySeq, is_quiddity, specialize
from lambdaquid.ops.oplus import quiddity_sum
from lambdaquid.ops.dihedral import dihedral_orbit, canonical_form
from lambdaquid.ops.reduction import reduce_by_unit, reduce_by_zero
from lambdaquid.ops.decomposition import decompose
from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.search import enumerate_quiddities, \
                                          DEFAULT_CEILING
from lambdaquid.evaluation.classification import SPECIALIZATION_POINTS
from lambdaquid.evaluation.verdict import Verdict

logger = logging.getLogger(__name__)

#-----------------------------------------------------#
#                 Structural properties               #
#-----------------------------------------------------#
""" Function for checking the structural properties of lambda-quiddities on
    an exhaustive enumeration over Z and on seeded random samples:
        - size 3 quiddities are irreducible
        - reducible quiddities of size 4 contain 1 or -1
        - quiddities of size >= 4 containing 1 or -1 are reducible, every
          unit reduction witness re-verifies
        - quiddities of size >= 5 containing 0 are reducible, every zero
          reduction witness re-verifies
        - every quiddity has two entries in {-1, 0, 1}
        - decomposition witnesses re-verify
        - the box is closed under the dihedral action, orbits share sign and
          verdict, canonical forms are idempotent
        - M_n equals the matrix of continuants (random Z and Z[X] tuples)
        - a (+) b is a quiddity iff a is one, for b a quiddity (random pairs)
        - specialization X -> a commutes with the word matrix

Args:
    coeff_bound (integer):          Bound |a_i| <= B of the Z enumeration.
    size_max (integer):             Largest size of the Z enumeration.
    samples (integer):              Number of random sum pairs.
    continuant_samples (integer):   Number of random Z tuples for the
                                    continuant identity (a tenth of it over
                                    Z[X]).
    seed (integer):                 Seed of the numpy random generator.
    ceiling (integer):              Largest accepted search-space estimate.
    workers (integer):              Number of worker processes.
    verbose (boolean):              Show progress bars.
Return:
    verdict (Verdict):              Counts and failures.
"""
def verify_properties(coeff_bound=3, size_max=6, samples=1000,
                      continuant_samples=10000, seed=0,
                      ceiling=DEFAULT_CEILING, workers=1, verbose=False):
    # Exception: parameter checks
    if samples < 0 or continuant_samples < 0:
        raise ValueError("Sample counts have to be nonnegative.")
    bounds = SearchBounds(INT, 2, size_max, coeff_bound)
    logger.info("Property checks over %s", bounds.to_dict())
    report = enumerate_quiddities(bounds, ceiling, workers, verbose)
    rng = np.random.default_rng(seed)
    verdict = Verdict("properties")
    verdict.set("quiddities", len(report))
    verdict.set("seed", seed)
    check_reductions(report, verdict)
    check_orbits(report, verdict)
    check_continuants(report, verdict, rng, continuant_samples)
    check_sums(report, verdict, rng, samples)
    check_specialization(verdict, rng, continuant_samples // 10)
    logger.info("Property checks: %s", "pass" if verdict.passed else "fail")
    return verdict

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
def check_reductions(report, verdict):
    for record in report.records:
        seq = record.seq
        n = len(seq)
        text = seq.format()
        units = [i for i, v in enumerate(seq)
                 if is_pm_one(v) is not UnitSign.NEITHER]
        zeros = [i for i, v in enumerate(seq) if v == ring_zero(seq.ring)]
        # Two entries of modulus < 2
        verdict.check(len(units) + len(zeros) >= 2,
                      text + ": fewer than two entries in {-1,0,1}")
        if n == 3:
            verdict.check(record.irreducible, text + ": size 3 reducible")
        if n == 4 and not record.irreducible:
            verdict.check(len(units) > 0, text + ": reducible without a unit")
        if n >= 4:
            for i in units:
                verdict.count("unit_witnesses")
                witness = reduce_by_unit(seq, i)
                verdict.check(witness.verify(seq) and not record.irreducible,
                              text + ": unit reduction at " + str(i))
        if n >= 5:
            for i in zeros:
                verdict.count("zero_witnesses")
                witness = reduce_by_zero(seq, i)
                verdict.check(witness.verify(seq) and not record.irreducible,
                              text + ": zero reduction at " + str(i))
        # Witness of the complete decision procedure
        if n >= 3 and not record.irreducible:
            witness = decompose(seq)
            verdict.count("decompositions")
            verdict.check(witness is not None and witness.verify(seq),
                          text + ": decomposition witness")

def check_orbits(report, verdict):
    found = report.tuples()
    for canonical, members in report.orbits().items():
        verdict.count("orbits")
        verdict.check(canonical_form(canonical) == canonical,
                      canonical.format() + ": canonical form not idempotent")
        verdict.check(len({(r.sign, r.irreducible) for r in members}) == 1,
                      canonical.format() + ": orbit members disagree")
        for _, image in dihedral_orbit(members[0].seq):
            verdict.check(image in found, image.format() + \
                          ": orbit member missing from the box")

def check_continuants(report, verdict, rng, count):
    for record in report.records:
        verdict.check(continuant_matrix_identity_check(record.seq),
                      record.seq.format() + ": continuant identity")
    for i in range(count):
        seq = random_int_tuple(rng, 9, 2, 8)
        verdict.count("continuant_samples")
        verdict.check(continuant_matrix_identity_check(seq),
                      seq.format() + ": continuant identity")
    for i in range(count // 10):
        seq = random_poly_tuple(rng, 3, 2, 2, 8)
        verdict.count("continuant_samples")
        verdict.check(continuant_matrix_identity_check(seq),
                      seq.format() + ": continuant identity")

# a (+) b is a quiddity iff a is one, for b a quiddity
def check_sums(report, verdict, rng, count):
    quiddities = [r.seq for r in report.records]
    if not quiddities : return
    for i in range(count):
        b = quiddities[int(rng.integers(len(quiddities)))]
        if rng.random() < 0.5:
            a = quiddities[int(rng.integers(len(quiddities)))]
        else : a = random_int_tuple(rng, 3, 2, 6)
        verdict.count("sum_samples")
        total = quiddity_sum(a, b)
        verdict.check((is_quiddity(total) is None) == (is_quiddity(a) is None),
                      a.format() + " (+) " + b.format())

# Evaluation at X = a is a ring homomorphism
def check_specialization(verdict, rng, count):
    for i in range(count):
        seq = random_poly_tuple(rng, 3, 2, 2, 6)
        matrix = word_matrix(seq)
        for a in SPECIALIZATION_POINTS:
            verdict.count("specialization_samples")
            images = tuple(eval_poly_at(v, a) for v in matrix.entries())
            verdict.check(word_matrix(specialize(seq, a)).entries() == images,
                          seq.format() + ": specialization at " + str(a))

def random_int_tuple(rng, bound, size_min, size_max):
    n = int(rng.integers(size_min, size_max + 1))
    return QuidditySeq.of(INT, rng.integers(-bound, bound + 1,
                                            size=n).tolist())

def random_poly_tuple(rng, bound, degree, size_min, size_max):
    n = int(rng.integers(size_min, size_max + 1))
    coeffs = rng.integers(-bound, bound + 1, size=(n, degree + 1)).tolist()
    return QuidditySeq.of(POLY, coeffs)
