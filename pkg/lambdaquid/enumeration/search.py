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
import time
from concurrent.futures import ProcessPoolExecutor
from tqdm import tqdm
# Internal libraries/scripts
from lambdaquid.rings.ring_value import UnitSign, is_pm_one, ring_one
from lambdaquid.core.matrix import Mat2, step
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign
from lambdaquid.ops.dihedral import canonical_form
from lambdaquid.ops.decomposition import is_irreducible
from lambdaquid.enumeration.report import QuiddityRecord, EnumerationReport
from lambdaquid.exceptions import SearchSpaceError

logger = logging.getLogger(__name__)

# Maximal number of search-tree leaves before an enumeration is refused
DEFAULT_CEILING = 10**8

#-----------------------------------------------------#
#              Quiddity Search - class                #
#-----------------------------------------------------#
class Quiddity_Search:
    #---------------------------------------------#
    #               Class variables               #
    #---------------------------------------------#
    ceiling = DEFAULT_CEILING           # Refuse boxes with a larger estimate
    workers = 1                         # Number of worker processes
    verbose = False                     # Show a progress bar on stderr

    #---------------------------------------------#
    #                Initialization               #
    #---------------------------------------------#
    """ Initialization function for creating a Quiddity Search object.
    This class performs the exhaustive enumeration of all lambda-quiddities
    inside a search box. The first n-2 entries are chosen depth-first while
    the word matrix is updated incrementally, the two closing entries are then
    solved for: with M the product of the first n-2 factors,
        eps = -M_11 (has to be 1 or -1),
        a_{n-1} = -eps M_21,  a_n = eps M_12,  a_n a_{n-1} - 1 = eps M_22,
    and both closing entries have to lie in the box. Every hit is tagged with
    its sign, canonical form and irreducibility verdict.

    The search forest is split by size and first entry. With more than one
    worker the subtrees are processed in parallel and merged into the
    deterministic order afterwards.

    Args:
        bounds (SearchBounds):      Search box (ring, sizes, coefficient bounds).
        ceiling (integer):          Largest accepted search-space estimate.
        workers (integer):          Number of worker processes (1: in-process).
        verbose (boolean):          Show a tqdm progress bar over the subtrees.
    """
    def __init__(self, bounds, ceiling=None, workers=None, verbose=None):
        # Parse parameter
        self.bounds = bounds
        if ceiling is not None : self.ceiling = ceiling
        if workers is not None : self.workers = workers
        if verbose is not None : self.verbose = verbose
        # Exception: worker parameter check
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ValueError("Number of workers has to be a positive integer.")

    #---------------------------------------------#
    #                  Run search                 #
    #---------------------------------------------#
    def run(self):
        # Check the search space against the ceiling
        estimate = self.bounds.estimate()
        if estimate > self.ceiling:
            raise SearchSpaceError(estimate, self.ceiling)
        logger.info("Enumerating %s (estimate %d leaves)",
                    self.bounds.to_dict(), estimate)
        start = time.perf_counter()
        tasks = create_tasks(self.bounds)
        # Run all subtrees in-process or on a process pool
        if self.workers == 1:
            iterator = map(search_task, tasks)
            records = collect(iterator, len(tasks), self.verbose)
        else:
            with ProcessPoolExecutor(max_workers=self.workers) as executor:
                iterator = executor.map(search_task, tasks)
                records = collect(iterator, len(tasks), self.verbose)
        # Merge into the deterministic order
        records.sort(key=lambda r: r.sort_key())
        report = EnumerationReport(self.bounds, records,
                                   time.perf_counter() - start)
        logger.info("Found %d quiddities (%d irreducible) in %.3fs",
                    len(report), len(report.irreducibles()), report.elapsed)
        for size, count in report.counts_by_size.items():
            logger.debug("Size %d: %d quiddities", size, count)
        return report

#-----------------------------------------------------#
#                Enumeration function                 #
#-----------------------------------------------------#
""" Function for the exhaustive enumeration of the lambda-quiddities in a box.

Args:
    bounds (SearchBounds):      Search box.
    ceiling (integer):          Largest accepted search-space estimate.
    workers (integer):          Number of worker processes.
    verbose (boolean):          Show a progress bar.
Return:
    report (EnumerationReport): All quiddities of the box with verdicts.
"""
def enumerate_quiddities(bounds, ceiling=DEFAULT_CEILING, workers=1,
                         verbose=False):
    search = Quiddity_Search(bounds, ceiling=ceiling, workers=workers,
                             verbose=verbose)
    return search.run()

#-----------------------------------------------------#
#                     Subroutines                     #
#-----------------------------------------------------#
# Split the search forest into (bounds, size, first entry) subtrees
def create_tasks(bounds):
    tasks = []
    for n in bounds.sizes:
        if n == 2 : tasks.append((bounds, n, None))
        else:
            for first in bounds.box():
                tasks.append((bounds, n, first))
    return tasks

# Drain the iterator of record lists, optionally behind a progress bar
def collect(iterator, total, verbose):
    records = []
    if verbose : iterator = tqdm(iterator, total=total, desc="subtrees")
    for result in iterator:
        records.extend(result)
    return records

# Enumerate one subtree and classify its quiddities
def search_task(task):
    bounds, n, first = task
    ring = bounds.ring
    box = bounds.box()
    hits = []
    if first is None:
        close_word(Mat2.identity(ring), [], bounds, hits)
    else:
        descend(step(Mat2.identity(ring), first), [first], n - 3, box,
                bounds, hits)
    return [classify(QuidditySeq(ring, tuple(entries)), sign)
            for entries, sign in hits]

# Depth-first choice of the free entries with incremental left product
def descend(matrix, prefix, remaining, box, bounds, hits):
    if remaining == 0:
        close_word(matrix, prefix, bounds, hits)
        return
    for value in box:
        prefix.append(value)
        descend(step(matrix, value), prefix, remaining - 1, box, bounds,
                hits)
        prefix.pop()

# Solve the two closing entries for the product of the free entries
def close_word(matrix, prefix, bounds, hits):
    eps = -matrix.m11
    unit = is_pm_one(eps)
    if unit is UnitSign.NEITHER : return
    before_last = -(eps * matrix.m21)
    last = eps * matrix.m12
    if last * before_last - ring_one(eps.ring) != eps * matrix.m22 : return
    if not bounds.contains(before_last) or not bounds.contains(last) : return
    # M_n = eps Id; in Z/2Z the sign is reported as plus
    if unit is UnitSign.PLUS : sign = QuidditySign.PLUS
    else : sign = QuidditySign.MINUS
    hits.append((prefix + [before_last, last], sign))

def classify(seq, sign):
    return QuiddityRecord(seq, sign, is_irreducible(seq), canonical_form(seq))
