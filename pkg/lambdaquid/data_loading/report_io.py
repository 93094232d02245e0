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
import os
import sys
import json
# Internal libraries/scripts
from lambdaquid.rings.ring_value import RingId
from lambdaquid.core.quiddity import QuidditySeq, QuidditySign
from lambdaquid.enumeration.bounds import SearchBounds
from lambdaquid.enumeration.report import QuiddityRecord, EnumerationReport

# Column order of the tab separated enumeration records
RECORD_COLUMNS = ["n", "tuple", "sign", "irreducible", "canonical"]

#-----------------------------------------------------#
#                   Output Formatting                 #
#-----------------------------------------------------#
# Compact JSON with a stable key order
def dump_json(data):
    return json.dumps(data, separators=(",", ":"))

# Text rendering of a single value
def text_value(value):
    if isinstance(value, str) : return value
    return dump_json(value)

""" Render a result object (a flat mapping) either as one JSON line or as
    one "key: value" line per field.
"""
def result_lines(data, fmt="json"):
    if fmt == "json" : return [dump_json(data)]
    return [key + ": " + text_value(value) for key, value in data.items()]

""" Render an enumeration report: one line per quiddity followed by the
    summary. JSON lines end with {"summary":{...}}; the text format is a tab
    separated table with a header row followed by "# key: value" lines.

Args:
    report (EnumerationReport):     Report to render.
    fmt (string):                   "json" or "text".
    timing (boolean):               Include the elapsed time in the summary.
Return:
    lines [list of strings]:        Output lines without line breaks.
"""
def report_lines(report, fmt="json", timing=False):
    summary = report.summary(timing=timing)
    if fmt == "json":
        lines = [dump_json(r.to_dict()) for r in report.records]
        lines.append(dump_json({"summary": summary}))
        return lines
    lines = ["\t".join(RECORD_COLUMNS)]
    for record in report.records:
        data = record.to_dict()
        lines.append("\t".join(text_value(data[c]) for c in RECORD_COLUMNS))
    for key, value in summary.items():
        lines.append("# " + key + ": " + text_value(value))
    return lines

#-----------------------------------------------------#
#                    Output Writing                   #
#-----------------------------------------------------#
# Write lines to a file (directories are created) or to a stream
def write_lines(lines, output_path=None, stream=None):
    text = "".join(line + "\n" for line in lines)
    if output_path is None:
        if stream is None : stream = sys.stdout
        stream.write(text)
        return
    directory = os.path.dirname(output_path)
    if directory != "" : os.makedirs(directory, exist_ok=True)
    with open(output_path, "w") as fw:
        fw.write(text)

#-----------------------------------------------------#
#                    Report Loading                   #
#-----------------------------------------------------#
""" Load an enumeration report written in the JSON lines format. The summary
    line restores the search bounds, all other lines are parsed as records.

Args:
    input_path (string):            Path to a JSON lines report.
Return:
    report (EnumerationReport):     Report with the stored records (elapsed 0).
"""
def load_report(input_path):
    with open(input_path, "r") as reader:
        rows = [json.loads(line) for line in reader if line.strip() != ""]
    summaries = [row["summary"] for row in rows if "summary" in row]
    # Exception: report layout checks
    if len(summaries) != 1:
        raise ValueError("Report " + input_path + " needs exactly one " + \
                         "summary line.")
    try:
        bounds = bounds_from_dict(summaries[0]["bounds"])
        ring = bounds.ring
        records = []
        for row in rows:
            if "summary" in row : continue
            seq = QuidditySeq.parse(ring, row["tuple"])
            records.append(QuiddityRecord(seq, QuidditySign(row["sign"]),
                                          bool(row["irreducible"]),
                                          QuidditySeq.parse(ring,
                                                            row["canonical"])))
    except KeyError as error:
        raise ValueError("Report " + input_path + " lacks the field " + \
                         str(error) + ".")
    return EnumerationReport(bounds, records)

def bounds_from_dict(data):
    return SearchBounds(RingId.parse(data["ring"]), data["size_min"],
                        data["size_max"], data["coeff_bound"],
                        data.get("degree_bound", 0), data.get("imag_bound"))
