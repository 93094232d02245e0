from lambdaquid.core.matrix import Mat2, elementary, word_matrix
from lambdaquid.core.continuant import continuant, continuant_boundary, \
                                       continuant_matrix, \
                                       continuant_matrix_identity_check
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign, \
                                     QuiddityCheck, DEFAULT_TOLERANCE, \
                                     check_quiddity, is_quiddity, \
                                     is_quiddity_approx, cos_quiddity, \
                                     matrix_distance, specialize
