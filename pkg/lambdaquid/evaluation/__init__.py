from lambdaquid.evaluation.verdict import Verdict
from lambdaquid.evaluation.families import small_size_family, \
                                           irreducible_family
from lambdaquid.evaluation.classification import verify_prop31, \
                                                 verify_theorem25, \
                                                 verify_z2i, \
                                                 SPECIALIZATION_POINTS
from lambdaquid.evaluation.cuntz_holm import verify_cuntz_holm, verify_cos
from lambdaquid.evaluation.properties import verify_properties
