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
from collections import OrderedDict
import numpy as np
# Internal libraries/scripts
from lambdaquid.core.matrix import word_matrix
from lambdaquid.core.quiddity import QuidditySign, DEFAULT_TOLERANCE, \
                                     cos_quiddity, matrix_distance, \
                                     is_quiddity_approx, specialize
from lambdaquid.evaluation.classification import SPECIALIZATION_POINTS
from lambdaquid.evaluation.verdict import Verdict

logger = logging.getLogger(__name__)

# Default sequence of gaps for the sharpness search
SHARPNESS_TARGETS = (1.0, 0.5, 0.1, 0.05, 0.01)

#-----------------------------------------------------#
#          Two small entries in every quiddity        #
#-----------------------------------------------------#
""" Function for checking the bound on complex lambda-quiddities on an
    enumeration report: every quiddity has at least two entries of complex
    modulus < 2. Z[2i] entries a + 2bi have the modulus sqrt(a^2 + 4b^2).
    Reports over Z[X] are checked through their specializations at the given
    integer points. The bound does not hold in Z/nZ.

Args:
    report (EnumerationReport): Enumeration over Z, Z[X] or Z[2i].
    points (iterable):          Specialization points for Z[X] reports.
Return:
    verdict (Verdict):          Counts and violations.
"""
def verify_cuntz_holm(report, points=SPECIALIZATION_POINTS):
    ring = report.bounds.ring
    # Exception: the bound only applies to subrings of C
    if ring.tag == "zmod":
        raise ValueError("The modulus bound does not apply to " + str(ring) + \
                         ".")
    verdict = Verdict("cuntz-holm")
    verdict.set("ring", str(ring))
    logger.info("Checking %d quiddities for two entries of modulus < 2",
                len(report))
    for record in report.records:
        if ring.tag == "zx":
            images = [specialize(record.seq, a) for a in points]
        else : images = [record.seq]
        for seq in images:
            verdict.count("tuples")
            small = count_small_entries(seq)
            verdict.check(small >= 2, seq.format() + " has " + str(small) + \
                          " entries of modulus < 2")
    verdict.set("quiddities", len(report))
    return verdict

def count_small_entries(seq):
    implementation = seq.ring.ring
    return sum(1 for v in seq if implementation.modulus_below_two(v.payload))

#-----------------------------------------------------#
#        Sharpness of the constant 2 (2cos(pi/n))     #
#-----------------------------------------------------#
""" Function for checking that the constant 2 of the modulus bound is sharp:
    the constant tuple (u_n,...,u_n) of size n with u_n = 2cos(pi/n) is a real
    lambda-quiddity with M_n = -Id, so no bound 2 - eps with eps > 0 holds.
    For every n in 2..n_max the tuple is checked within the tolerance and its
    entry u_n < 2 grows strictly with n. For every target gap eps the
    smallest n with u_n > 2 - eps is searched and its tuple is verified.

Args:
    n_max (integer):            Largest size of the constant tuples.
    tol (float):                Tolerance of the max-norm distance to -Id.
    targets (tuple of floats):  Positive gaps eps of the sharpness search.
Return:
    verdict (Verdict):          Distances, sharpness sizes and failures.
"""
def verify_cos(n_max=12, tol=DEFAULT_TOLERANCE, targets=SHARPNESS_TARGETS):
    # Exception: parameter checks
    if n_max < 2:
        raise ValueError("n_max has to be at least 2.")
    if not tol > 0:
        raise ValueError("Tolerance has to be positive.")
    if any(not eps > 0 for eps in targets):
        raise ValueError("Sharpness targets have to be positive.")
    verdict = Verdict("cos")
    distances = []
    previous = None
    for n in range(2, n_max + 1):
        seq = cos_quiddity(n)
        u = seq[0].payload
        distance = matrix_distance(word_matrix(seq), QuidditySign.MINUS)
        distances.append(distance)
        verdict.check(distance < tol, "size " + str(n) + ": distance " + \
                      repr(distance) + " to -Id")
        verdict.check(is_quiddity_approx(seq, tol) is QuidditySign.MINUS,
                      "size " + str(n) + ": sign is not minus")
        # Entries grow strictly with n and stay below 2
        verdict.check(u < 2.0, "size " + str(n) + ": entry " + repr(u) + \
                      " is not below 2")
        if previous is not None:
            verdict.check(u > previous, "size " + str(n) + ": entry " + \
                          repr(u) + " does not exceed " + repr(previous))
        previous = u
    verdict.set("sizes", n_max - 1)
    verdict.set("max_distance", max(distances))
    # Smallest size whose constant entry beats each gap
    sharpness = OrderedDict()
    for eps in targets:
        n = smallest_size_above(2.0 - eps)
        seq = cos_quiddity(n)
        sharpness[repr(eps)] = n
        verdict.check(seq[0].payload > 2.0 - eps,
                      "gap " + repr(eps) + ": entry below 2 - eps")
        if n > 2:
            verdict.check(cos_quiddity(n - 1)[0].payload <= 2.0 - eps,
                          "gap " + repr(eps) + ": size " + str(n) + \
                          " is not the smallest")
        verdict.check(is_quiddity_approx(seq, tol) is QuidditySign.MINUS,
                      "gap " + repr(eps) + ": size " + str(n) + \
                      " is not a quiddity")
    verdict.set("sharpness", sharpness)
    logger.info("Sharpness of the modulus bound: %s",
                "pass" if verdict.passed else "fail")
    return verdict

# Smallest n >= 2 with 2cos(pi/n) > threshold (threshold < 2)
def smallest_size_above(threshold):
    n = 2
    while float(2 * np.cos(np.pi / n)) <= threshold:
        n += 1
    return n
