from lambdaquid.ops.oplus import quiddity_sum
from lambdaquid.ops.dihedral import DihedralTransform, apply_transform, \
                                    dihedral_transforms, dihedral_orbit, \
                                    canonical_form, equivalent
from lambdaquid.ops.reduction import DecompositionWitness, reduce_by_unit, \
                                     reduce_by_zero, reduce
from lambdaquid.ops.decomposition import decompose, is_irreducible
