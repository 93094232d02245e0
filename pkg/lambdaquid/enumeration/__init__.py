from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.report import QuiddityRecord, EnumerationReport
from lambdaquid.enumeration.search import Quiddity_Search, \
                                          enumerate_quiddities, \
                                          DEFAULT_CEILING
