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
import sys
import argparse
import logging
from collections import OrderedDict
# Internal libraries/scripts
from lambdaquid.rings.ring_value import RingId, REAL, format_value
from lambdaquid.core.matrix import word_matrix
from lambdaquid.core.continuant import continuant
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign, \
                                     DEFAULT_TOLERANCE, check_quiddity, \
                                     is_quiddity_approx, cos_quiddity, \
                                     matrix_distance
from lambdaquid.ops.oplus import quiddity_sum
from lambdaquid.ops.dihedral import canonical_form, equivalent
from lambdaquid.ops.decomposition import decompose
from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.search import enumerate_quiddities, \
                                          DEFAULT_CEILING
from lambdaquid.evaluation import verify_prop31, verify_theorem25, \
                                  verify_z2i, verify_cuntz_holm, verify_cos, \
                                  verify_properties
from lambdaquid.data_loading.report_io import dump_json, result_lines, \
                                              report_lines, write_lines, \
                                              load_report
from lambdaquid.exceptions import SearchSpaceError

# Exit codes
EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CEILING = 3

# Verification suites selectable on the command line
SUITES = ["prop31", "theorem25", "z2i", "cuntz-holm", "cos", "properties"]

#-----------------------------------------------------#
#                   Argument Parser                   #
#-----------------------------------------------------#
# Usage errors are raised instead of terminating the interpreter
class UsageError(ValueError):
    pass

class Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)

""" Build the argument parser with one sub parser per subcommand. Tuples are
    written (v1,v2,...,vn) with the value grammar of the selected ring.
"""
def build_parser():
    # Flags shared by every subcommand
    common = Parser(add_help=False)
    common.add_argument("--ring", type=str, default=None,
                        help="Ring selector: z, zmod:<n>, zx, z2i, real.")
    common.add_argument("--format", choices=["json", "text"], default="json",
                        help="Output format (default json).")
    common.add_argument("--tol", type=float, default=DEFAULT_TOLERANCE,
                        help="Tolerance of the real ring (default 1e-9).")
    common.add_argument("--out", type=str, default=None,
                        help="Output file (default stdout).")
    common.add_argument("--verbose", action="store_true",
                        help="Log progress to stderr.")
    # Flags of the enumeration and the verification suites
    search = Parser(add_help=False)
    search.add_argument("--min-size", type=int, default=None)
    search.add_argument("--max-size", type=int, default=None)
    search.add_argument("--coeff", type=int, default=None,
                        help="Coefficient bound B of the search box.")
    search.add_argument("--degree", type=int, default=None,
                        help="Degree bound of Z[X] boxes.")
    search.add_argument("--imag", type=int, default=None,
                        help="Bound of |b| for Z[2i] values a+2bi.")
    search.add_argument("--ceiling", type=int, default=DEFAULT_CEILING,
                        help="Largest accepted search-space estimate.")
    search.add_argument("--workers", type=int, default=1,
                        help="Number of worker processes.")
    search.add_argument("--timing", action="store_true",
                        help="Include the elapsed time in the summary.")

    parser = Parser(prog="lambdaquid",
                    description="Lambda-quiddities over Z, Z/nZ, Z[X], "
                                "Z[2i] and the reals.")
    subparsers = parser.add_subparsers(dest="command")
    subparsers.required = True
    for name, count in [("check", 1), ("canon", 1), ("continuant", 1),
                        ("matrix", 1), ("decompose", 1), ("irreducible", 1),
                        ("sum", 2), ("equiv", 2)]:
        sub = subparsers.add_parser(name, parents=[common])
        sub.add_argument("tuples", nargs=count, metavar="TUPLE")
    subparsers.add_parser("enumerate", parents=[common, search])
    verify = subparsers.add_parser("verify", parents=[common, search])
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--seed", type=int, default=0,
                        help="Seed of the random samples (properties).")
    verify.add_argument("--report", type=str, default=None,
                        help="JSON lines enumeration report (cuntz-holm).")
    cos = subparsers.add_parser("cos", parents=[common])
    cos.add_argument("n", type=int)
    return parser

#-----------------------------------------------------#
#                     Subcommands                     #
#-----------------------------------------------------#
def command_check(args, ring, tuples):
    seq = tuples[0]
    if ring == REAL:
        sign = is_quiddity_approx(seq, args.tol)
        data = OrderedDict([("quiddity", sign is not None)])
        if sign is not None : data["sign"] = sign.value
        return data
    check = check_quiddity(seq)
    data = OrderedDict([("quiddity", check.quiddity)])
    if check.quiddity : data["sign"] = check.sign.value
    if check.ambiguous : data["ambiguous"] = True
    return data

def command_sum(args, ring, tuples):
    return {"result": quiddity_sum(tuples[0], tuples[1]).format()}

def command_canon(args, ring, tuples):
    return {"canonical": canonical_form(tuples[0]).format()}

def command_equiv(args, ring, tuples):
    return {"equivalent": equivalent(tuples[0], tuples[1])}

def command_continuant(args, ring, tuples):
    return {"continuant": format_value(continuant(tuples[0]))}

def command_matrix(args, ring, tuples):
    rows = word_matrix(tuples[0]).rows()
    return {"matrix": [[format_value(v) for v in row] for row in rows]}

def command_decompose(args, ring, tuples):
    seq = tuples[0]
    if check_quiddity(seq).sign is None : return {"quiddity": False}
    witness = decompose(seq)
    data = OrderedDict([("quiddity", True),
                        ("reducible", witness is not None)])
    data["witness"] = witness.to_dict(seq) if witness is not None else None
    return data

def command_irreducible(args, ring, tuples):
    seq = tuples[0]
    if check_quiddity(seq).sign is None : return {"quiddity": False}
    irreducible = len(seq) >= 3 and decompose(seq) is None
    return OrderedDict([("quiddity", True), ("irreducible", irreducible)])

def command_cos(args):
    seq = cos_quiddity(args.n)
    distance = matrix_distance(word_matrix(seq), QuidditySign.MINUS)
    sign = is_quiddity_approx(seq, args.tol)
    data = OrderedDict([("n", args.n), ("entry", seq[0].payload),
                        ("distance", distance),
                        ("quiddity", sign is not None)])
    if sign is not None : data["sign"] = sign.value
    return data

TUPLE_COMMANDS = {"check": command_check,
                  "sum": command_sum,
                  "canon": command_canon,
                  "equiv": command_equiv,
                  "continuant": command_continuant,
                  "matrix": command_matrix,
                  "decompose": command_decompose,
                  "irreducible": command_irreducible}

# Search box of the enumerate subcommand
def search_bounds(args, ring):
    return SearchBounds(ring,
                        value_or(args.min_size, 2), value_or(args.max_size, 4),
                        value_or(args.coeff, 1), value_or(args.degree, 0),
                        args.imag)

""" Run a verification suite. Unset box flags fall back to the defaults of
    the selected suite.
"""
def command_verify(args):
    options = dict(ceiling=args.ceiling, workers=args.workers,
                   verbose=args.verbose)
    if args.suite == "prop31":
        verdict = verify_prop31(value_or(args.coeff, 3),
                                value_or(args.degree, 1), **options)
    elif args.suite == "theorem25":
        verdict = verify_theorem25(value_or(args.degree, 1),
                                   value_or(args.coeff, 1),
                                   value_or(args.max_size, 6), **options)
    elif args.suite == "z2i":
        verdict = verify_z2i(value_or(args.coeff, 2),
                             value_or(args.max_size, 5),
                             value_or(args.imag, 1), **options)
    elif args.suite == "cuntz-holm":
        if args.report is not None : report = load_report(args.report)
        else:
            ring = RingId.parse(args.ring) if args.ring else RingId("z")
            bounds = SearchBounds(ring, value_or(args.min_size, 2),
                                  value_or(args.max_size, 6),
                                  value_or(args.coeff, 3),
                                  value_or(args.degree, 0), args.imag)
            report = enumerate_quiddities(bounds, **options)
        verdict = verify_cuntz_holm(report)
    elif args.suite == "cos":
        verdict = verify_cos(value_or(args.max_size, 12), args.tol)
    else:
        verdict = verify_properties(value_or(args.coeff, 3),
                                    value_or(args.max_size, 6),
                                    seed=args.seed, **options)
    return verdict.to_dict()

def value_or(value, default):
    return default if value is None else value

#-----------------------------------------------------#
#                     Main Runner                     #
#-----------------------------------------------------#
""" Parse the arguments, dispatch the subcommand and write its output.

Args:
    argv (list of strings):     Command line arguments without the program.
    stdout (stream):            Stream of the results.
    stderr (stream):            Stream of the error objects.
Return:
    exit_code (integer):        0 on success (whatever the mathematical
                                verdict), 2 on usage or parse errors, 3 if
                                the search-space ceiling is exceeded.
"""
def run(argv, stdout=None, stderr=None):
    if stdout is None : stdout = sys.stdout
    if stderr is None : stderr = sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            logging.basicConfig(level=logging.INFO, stream=stderr,
                                format="%(asctime)s %(name)s %(message)s")
        lines = dispatch(args)
        write_lines(lines, args.out, stdout)
    except SearchSpaceError as error:
        write_error(stderr, str(error), estimate=error.estimate,
                    ceiling=error.ceiling)
        return EXIT_CEILING
    except (ValueError, OSError) as error:
        write_error(stderr, str(error))
        return EXIT_USAGE
    return EXIT_OK

def dispatch(args):
    if args.command == "cos":
        return result_lines(command_cos(args), args.format)
    if args.command == "verify":
        return result_lines(command_verify(args), args.format)
    # Exception: every other subcommand needs a ring
    if args.ring is None:
        raise UsageError("The subcommand " + args.command + \
                         " requires --ring.")
    ring = RingId.parse(args.ring)
    if args.command == "enumerate":
        report = enumerate_quiddities(search_bounds(args, ring),
                                      ceiling=args.ceiling,
                                      workers=args.workers,
                                      verbose=args.verbose)
        return report_lines(report, args.format, args.timing)
    tuples = [QuidditySeq.parse(ring, text) for text in args.tuples]
    data = TUPLE_COMMANDS[args.command](args, ring, tuples)
    return result_lines(data, args.format)

def write_error(stream, message, **details):
    data = OrderedDict([("error", message)])
    data.update(details)
    stream.write(dump_json(data) + "\n")

def main():
    sys.exit(run(sys.argv[1:]))
