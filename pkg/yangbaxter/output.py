#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2016 Yang-Baxter basis developers

# Author(s):

#   Yang-Baxter basis developers

# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.

# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.

# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Serialization of tables, reports and single values.
"""

import json
import logging

from trollsift import compose

logger = logging.getLogger(__name__)

SCHEMA = 1
FORMATS = ("json", "latex", "text")

TABLE_TITLES = {"p": "p(w,v)",
                "ptilde": "ptilde(w,v)",
                "a": "a(w,v)",
                "b": "b(w,v)"}

LATEX_TITLES = {"p": r"p(w,v)",
                "ptilde": r"\tilde p(w,v)",
                "a": r"a_{w,v}",
                "b": r"b_{w,v}"}


def latex_word(element):
    word = element.word
    if not word:
        return "e"
    return "".join("s_{%d}" % (i + 1) for i in word)


def pair_key(w, v):
    return "%s|%s" % (str(w), str(v))


def to_json(payload):
    """Sorted, versioned JSON text.
    """
    document = dict(payload)
    document["schema"] = SCHEMA
    return json.dumps(document, sort_keys=True, indent=1,
                      ensure_ascii=False) + "\n"


def _latex_tabular(header, rows):
    lines = ["\\begin{tabular}{%s}" % ("l" * len(header)),
             " & ".join(header) + " \\\\",
             "\\hline"]
    for row in rows:
        lines.append(" & ".join(row) + " \\\\")
    lines.append("\\end{tabular}")
    return "\n".join(lines) + "\n"


def _text_columns(rows):
    if not rows:
        return ""
    widths = [max(len(row[k]) for row in rows)
              for k in range(len(rows[0]) - 1)]
    lines = []
    for row in rows:
        cells = [cell.ljust(width) for cell, width in zip(row, widths)]
        lines.append(" | ".join(cells + [row[-1]]))
    return "\n".join(lines) + "\n"


def render_tables(datum, tables, fmt="json"):
    """*tables* maps a kind (p, ptilde, a or b) to its entries.
    """
    kinds = sorted(tables)
    if fmt == "json":
        return to_json({
            "datum": datum.name,
            "convention": datum.to_dict()["convention"],
            "tables": dict((kind, dict((pair_key(w, v), str(value))
                                       for (w, v), value in tables[kind]))
                           for kind in kinds)})
    if fmt == "latex":
        parts = []
        for kind in kinds:
            rows = [["$%s$" % latex_word(w), "$%s$" % latex_word(v),
                     "$%s$" % value.format("latex")]
                    for (w, v), value in tables[kind]]
            parts.append(_latex_tabular(
                ["$w$", "$v$", "$%s$" % LATEX_TITLES[kind]], rows))
        return "\n".join(parts)
    if fmt == "text":
        parts = []
        for kind in kinds:
            rows = [["w", "v", TABLE_TITLES[kind]]]
            rows.extend([str(w), str(v), str(value)]
                        for (w, v), value in tables[kind])
            parts.append("%s %s\n" % (datum.name, TABLE_TITLES[kind]) +
                         _text_columns(rows))
        return "\n".join(parts)
    raise ValueError("unknown format " + str(fmt))


def render_report(report, fmt="json"):
    """A verification or conjecture report.
    """
    payload = report.to_dict()
    if fmt == "json":
        return to_json(payload)
    if "checks" in payload:
        rows = [[check["name"], "pass" if check["passed"] else "FAIL",
                 check["detail"]] for check in payload["checks"]]
        header = ["identity", "result", "detail"]
    else:
        rows = [[entry["kind"], entry["w"], entry["v"], str(entry["|S|"]),
                 "pass" if entry["pass"] else "FAIL"]
                for entry in payload["pairs"]]
        header = ["kind", "w", "v", "|S|", "result"]
    if fmt == "latex":
        return _latex_tabular(header, [[cell.replace("_", "\\_")
                                        for cell in row] for row in rows])
    if fmt == "text":
        if hasattr(report, "lines"):
            return "\n".join(report.lines()) + "\n"
        return _text_columns([header] + rows) + (
            "%s: %d qualifying, %d failed\n" % (payload["datum"],
                                                payload["qualifying_pairs"],
                                                payload["failures"]))
    raise ValueError("unknown format " + str(fmt))


def render_value(payload, value, fmt="json"):
    """A single scalar with its context, e.g. an eval or whittaker result.
    """
    if fmt == "json":
        document = dict(payload)
        document["value"] = str(value)
        return to_json(document)
    if fmt == "latex":
        return "$%s$\n" % value.format("latex")
    if fmt == "text":
        extras = ", ".join("%s=%s" % (key, payload[key])
                           for key in sorted(payload))
        return "%s\n# %s\n" % (str(value), extras)
    raise ValueError("unknown format " + str(fmt))


def render_datum(datum, fmt="json"):
    if fmt == "json":
        return to_json(datum.to_dict())
    description = datum.to_dict()
    lines = ["%s: |W| = %d, |R+| = %d" % (datum.name, description["order"],
                                          len(description["positive_roots"])),
             description["convention"]]
    lines.extend("alpha %s weight %s" % (root["alpha"], root["weight"])
                 for root in description["positive_roots"])
    return "\n".join(lines) + "\n"


def output_filename(pattern, command, datum, fmt):
    """Compose an output file name from a trollsift pattern.
    """
    return compose(pattern, {"command": command,
                             "type": datum.type_label,
                             "rank": datum.rank,
                             "format": fmt})


def write(text, pattern=None, command=None, datum=None, fmt="json",
          stream=None):
    """Write to the composed file name, or to *stream*.
    """
    if not pattern:
        stream.write(text)
        return None
    filename = output_filename(pattern, command, datum, fmt)
    with open(filename, "w", encoding="utf-8") as fd_:
        fd_.write(text)
    logger.info("Wrote %s", filename)
    return filename
