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
# Internal libraries/scripts
from lambdaquid.rings.ring_value import INT, POLY, GAUSS_EVEN
from lambdaquid.core.quiddity import is_quiddity, specialize
from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.search import enumerate_quiddities, \
                                          DEFAULT_CEILING
from lambdaquid.evaluation.families import small_size_family, \
                                           irreducible_family
from lambdaquid.evaluation.verdict import Verdict

logger = logging.getLogger(__name__)

# Integer points for the Z[X] -> Z specialization check
SPECIALIZATION_POINTS = range(-2, 3)

#-----------------------------------------------------#
#           Classification of small sizes             #
#-----------------------------------------------------#
""" Function for reproducing the classification of the lambda-quiddities of
    sizes 2, 3 and 4: the enumeration over Z (and over Z[X] with the given
    degree bound) has to coincide with the closed-form families
        (0,0),  (1,1,1), (-1,-1,-1),
        (-a,b,a,-b) with ab = 0,  (a,b,a,b) with ab = 2
    intersected with the box.

Args:
    bound (integer):            Coefficient bound of both boxes.
    degree_bound (integer):     Degree bound of the Z[X] box, None to skip it.
    ceiling (integer):          Largest accepted search-space estimate.
    workers (integer):          Number of worker processes.
    verbose (boolean):          Show progress bars.
Return:
    verdict (Verdict):          Counts per ring and size plus mismatches.
"""
def verify_prop31(bound=3, degree_bound=1, ceiling=DEFAULT_CEILING,
                  workers=1, verbose=False):
    # Exception: parameter check
    if bound < 0:
        raise ValueError("Bound has to be nonnegative.")
    verdict = Verdict("prop31")
    rings = [("z", SearchBounds(INT, 2, 4, bound))]
    if degree_bound is not None:
        rings.append(("zx", SearchBounds(POLY, 2, 4, bound, degree_bound)))
    for label, bounds in rings:
        logger.info("Small-size classification over %s", bounds.to_dict())
        report = enumerate_quiddities(bounds, ceiling, workers, verbose)
        for n in bounds.sizes:
            verdict.compare_sets(label + ".size" + str(n), report.tuples(n),
                                 small_size_family(bounds, n))
        # Size 3 is always irreducible
        for record in report.select(3):
            verdict.check(record.irreducible, label + ": " + \
                          record.seq.format() + " of size 3 is reducible")
    logger.info("Small-size classification: %s",
                "pass" if verdict.passed else "fail")
    return verdict

#-----------------------------------------------------#
#          Irreducibles over Z[alpha] and Z[2i]       #
#-----------------------------------------------------#
""" Function for checking the irreducible lambda-quiddities over Z[X] (the
    model of Z[alpha] with alpha transcendental) inside a box:
        (1,1,1), (-1,-1,-1), (0,P,0,-P), (P,0,-P,0) with P not 1 or -1,
    and no irreducible of size >= 5. Every enumerated quiddity is also
    specialized at X = a for a in {-2,...,2} and has to remain a quiddity over
    Z with the same sign.

Args:
    degree_bound (integer):     Degree bound of the polynomials.
    coeff_bound (integer):      Bound of the absolute values of the coefficients.
    size_max (integer):         Largest tuple size, at least 4.
    ceiling (integer):          Largest accepted search-space estimate.
    workers (integer):          Number of worker processes.
    verbose (boolean):          Show progress bars.
Return:
    verdict (Verdict):          Counts and mismatches.
"""
def verify_theorem25(degree_bound=1, coeff_bound=1, size_max=6,
                     ceiling=DEFAULT_CEILING, workers=1, verbose=False):
    # Exception: parameter check
    if size_max < 4:
        raise ValueError("size_max has to be at least 4.")
    bounds = SearchBounds(POLY, 3, size_max, coeff_bound, degree_bound)
    verdict = irreducible_suite("theorem25", bounds, ceiling, workers,
                                verbose)
    return verdict

""" Function for checking the irreducible lambda-quiddities over Z[2i]
    (numbers a + 2bi) inside a box: (1,1,1), (-1,-1,-1), (-z,0,z,0) and
    (0,-z,0,z) with z not 1 or -1, and no irreducible of size >= 5.

Args:
    coeff_bound (integer):      Bound of |a|.
    size_max (integer):         Largest tuple size, at least 4.
    imag_bound (integer):       Bound of |b|, defaults to coeff_bound.
    ceiling (integer):          Largest accepted search-space estimate.
    workers (integer):          Number of worker processes.
    verbose (boolean):          Show progress bars.
Return:
    verdict (Verdict):          Counts and mismatches.
"""
def verify_z2i(coeff_bound=2, size_max=5, imag_bound=1,
               ceiling=DEFAULT_CEILING, workers=1, verbose=False):
    # Exception: parameter check
    if size_max < 4:
        raise ValueError("size_max has to be at least 4.")
    bounds = SearchBounds(GAUSS_EVEN, 3, size_max, coeff_bound,
                          imag_bound=imag_bound)
    return irreducible_suite("z2i", bounds, ceiling, workers, verbose)

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
def irreducible_suite(name, bounds, ceiling, workers, verbose):
    logger.info("Irreducible classification over %s", bounds.to_dict())
    report = enumerate_quiddities(bounds, ceiling, workers, verbose)
    verdict = Verdict(name)
    verdict.set("bounds", bounds.to_dict())
    verdict.set("quiddities", len(report))
    found = {r.seq for r in report.irreducibles()}
    verdict.compare_sets("irreducible", found, irreducible_family(bounds))
    # No irreducible quiddity of size >= 5
    large = [r for r in report.irreducibles() if r.size >= 5]
    verdict.set("irreducible_size_5_plus", len(large))
    verdict.check(not large, "irreducible of size >= 5: " + \
                  ", ".join(r.seq.format() for r in large))
    verdict.set("irreducible_by_size",
                {str(k): v for k, v in report.irreducible_by_size.items()})
    verdict.set("classes", len(report.orbits()))
    if bounds.ring == POLY:
        check_specializations(report, verdict)
    logger.info("Irreducible classification (%s): %s", name,
                "pass" if verdict.passed else "fail")
    return verdict

# Every Z[X] quiddity specializes to a Z quiddity with the same sign
def check_specializations(report, verdict, points=SPECIALIZATION_POINTS):
    for record in report.records:
        for a in points:
            image = specialize(record.seq, a)
            verdict.count("specializations")
            verdict.check(is_quiddity(image) is record.sign,
                          "specialization of " + record.seq.format() + \
                          " at " + str(a) + " is " + image.format())
