# Core classes
from lambdaquid.rings.ring_value import RingId, RingValue
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign
from lambdaquid.core.matrix import Mat2
from lambdaquid.ops.dihedral import DihedralTransform
from lambdaquid.ops.reduction import DecompositionWitness
from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.search import Quiddity_Search
from lambdaquid.enumeration.report import EnumerationReport
