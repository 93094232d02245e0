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
import pytest
# Internal libraries/scripts
from lambdaquid.rings import INT, POLY, GAUSS_EVEN, mod
from lambdaquid.core import QuidditySeq
from lambdaquid.enumeration import SearchBounds, enumerate_quiddities
from lambdaquid.evaluation import Verdict, small_size_family, \
                                  irreducible_family, verify_prop31, \
                                  verify_theorem25, verify_z2i, \
                                  verify_cuntz_holm, verify_cos, \
                                  verify_properties

def z(*entries):
    return QuidditySeq.of(INT, entries)

#-----------------------------------------------------#
#                       Verdict                       #
#-----------------------------------------------------#
def test_verdict_bookkeeping():
    verdict = Verdict("demo")
    assert verdict.check(True, "never stored")
    assert not verdict.check(False, "stored")
    verdict.count("items", 3)
    assert not verdict.passed
    data = verdict.to_dict()
    assert data["verdict"] == "fail"
    assert data["suite"] == "demo"
    assert data["checks"] == 2 and data["items"] == 3
    assert data["failures"] == ["stored"]

def test_verdict_compare_sets():
    verdict = Verdict("sets")
    verdict.compare_sets("size3", {z(1, 1, 1)}, {z(1, 1, 1), z(-1, -1, -1)})
    assert verdict.failures == ["size3: missing (-1,-1,-1)"]
    assert verdict.counts["size3_found"] == 1

#-----------------------------------------------------#
#                  Closed-form families               #
#-----------------------------------------------------#
def test_small_size_family():
    bounds = SearchBounds(INT, 2, 4, 2)
    assert small_size_family(bounds, 2) == {z(0, 0)}
    assert small_size_family(bounds, 3) == {z(1, 1, 1), z(-1, -1, -1)}
    assert len(small_size_family(bounds, 4)) == 13
    assert small_size_family(SearchBounds(INT, 2, 4, 0), 3) == set()

def test_irreducible_family():
    family = irreducible_family(SearchBounds(POLY, 3, 6, 1, 1))
    assert len(family) == 15
    assert QuidditySeq.parse(POLY, "([0],[0],[0],[0])") in family
    assert QuidditySeq.parse(POLY, "([-1],[0],[1],[0])") not in family

#-----------------------------------------------------#
#               Classification suites                 #
#-----------------------------------------------------#
def test_prop31_passes():
    verdict = verify_prop31(3)
    assert verdict.passed, verdict.failures
    assert verdict.counts["z.size4_found"] == 17

@pytest.mark.parametrize("bound", [0, 1])
def test_prop31_small_bounds(bound):
    verdict = verify_prop31(bound)
    assert verdict.passed, verdict.failures

def test_theorem25_passes():
    verdict = verify_theorem25(1, 1, 6)
    assert verdict.passed, verdict.failures
    assert verdict.counts["irreducible_found"] == 15
    assert verdict.counts["irreducible_size_5_plus"] == 0
    assert verdict.counts["specializations"] > 0

def test_theorem25_constant_polynomials():
    verdict = verify_theorem25(0, 2, 6)
    assert verdict.passed, verdict.failures

def test_theorem25_needs_size_four():
    with pytest.raises(ValueError):
        verify_theorem25(1, 1, 3)

def test_z2i_passes():
    verdict = verify_z2i(2, 5, 1)
    assert verdict.passed, verdict.failures
    assert verdict.counts["irreducible_size_5_plus"] == 0

def test_z2i_zero_box():
    verdict = verify_z2i(0, 4, 0)
    assert verdict.passed, verdict.failures
    assert verdict.counts["irreducible_found"] == 1

def test_z2i_excludes_units():
    verdict = verify_z2i(1, 4, 0)
    assert verdict.passed, verdict.failures
    family = irreducible_family(SearchBounds(GAUSS_EVEN, 3, 4, 1,
                                             imag_bound=0))
    assert QuidditySeq.of(GAUSS_EVEN, [-1, 0, 1, 0]) not in family

#-----------------------------------------------------#
#            Two entries of modulus below 2           #
#-----------------------------------------------------#
def test_cuntz_holm_reports(z_report, poly_report, gauss_report):
    for report in (z_report, poly_report, gauss_report):
        verdict = verify_cuntz_holm(report)
        assert verdict.passed, verdict.failures

def test_cuntz_holm_rejects_modular_rings():
    report = enumerate_quiddities(SearchBounds(mod(5), 2, 3))
    with pytest.raises(ValueError):
        verify_cuntz_holm(report)

def test_cos_suite():
    verdict = verify_cos()
    assert verdict.passed, verdict.failures
    # Per size: distance, sign, bound and growth; per gap: three checks
    assert verdict.counts["checks"] == 11 * 3 + 10 + 5 * 3
    assert verdict.counts["max_distance"] < 1e-9
    sharpness = verdict.counts["sharpness"]
    assert sharpness["1.0"] in (3, 4)
    assert (sharpness["0.5"], sharpness["0.1"], sharpness["0.05"],
            sharpness["0.01"]) == (5, 10, 15, 32)

def test_cos_suite_sharpness_is_minimal():
    verdict = verify_cos(n_max=3, targets=(0.5, 0.1))
    assert verdict.passed, verdict.failures
    assert dict(verdict.counts["sharpness"]) == {"0.5": 5, "0.1": 10}

def test_cos_suite_validation():
    with pytest.raises(ValueError):
        verify_cos(n_max=1)
    with pytest.raises(ValueError):
        verify_cos(targets=(0.0,))

#-----------------------------------------------------#
#                 Structural properties               #
#-----------------------------------------------------#
def test_properties_pass():
    verdict = verify_properties(samples=1000, continuant_samples=2000, seed=3)
    assert verdict.passed, verdict.failures[:5]
    assert verdict.counts["sum_samples"] == 1000
    assert verdict.counts["unit_witnesses"] > 0
    assert verdict.counts["zero_witnesses"] > 0
