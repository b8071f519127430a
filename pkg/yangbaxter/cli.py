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

"""Command line interface.

    yangbaxter <command> <type> <rank> [options] [w v]

Exit codes: 0 success, 1 failed identity, 2 invalid configuration or
input, 3 Weyl group larger than the cap.
"""

import argparse
import logging
import sys

from yangbaxter import __version__
from yangbaxter.casselman import Casselman
from yangbaxter.config import ConfigError, RunConfig, read_defaults
from yangbaxter.hecke import HeckeAlgebra
from yangbaxter.output import (render_datum, render_report, render_tables,
                               render_value, write)
from yangbaxter.rootdata import GroupTooLargeError, build_root_datum
from yangbaxter.scalars import (SpecializationError, as_rational,
                                evaluate_u, is_laurent_polynomial)
from yangbaxter.verify import run_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INVALID = 2
EXIT_CAP = 3

LOG_FORMAT = "[%(levelname)s %(name)s %(asctime)s] %(message)s"

_HANDLER = None


def setup_logging(level="INFO"):
    """One stderr handler on the root logger.
    """
    global _HANDLER
    root = logging.getLogger("")
    if _HANDLER is not None:
        root.removeHandler(_HANDLER)
    _HANDLER = logging.StreamHandler(sys.stderr)
    _HANDLER.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(_HANDLER)
    root.setLevel(getattr(logging, level))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="yangbaxter",
        description="Yang-Baxter bases, transition tables and Casselman "
        "coefficients for finite root data.")
    parser.add_argument("command",
                        help="table, verify, conjecture, whittaker, eval or "
                        "datum-dump")
    parser.add_argument("type", help="Cartan type letter (A-G)")
    parser.add_argument("rank", help="rank of the root datum")
    parser.add_argument("words", nargs="*",
                        help="w and v for eval, e.g. s1 s1s2s1")
    parser.add_argument("--specialize", action="store_true",
                        help="tables at t1=-1/q, t2=1 (a and b)")
    parser.add_argument("--q", help="exact value of q, NUM/DEN")
    parser.add_argument("--format", help="json, latex or text")
    parser.add_argument("--w", help="Weyl group element as a word")
    parser.add_argument("--v", help="Weyl group element as a word")
    parser.add_argument("--mu",
                        help="weight coordinates c1,..,cr (use --mu=-1,0 "
                        "for negative entries)")
    tables = parser.add_mutually_exclusive_group()
    for kind in ("ptilde", "p", "a", "b"):
        tables.add_argument("--" + kind, dest="table", action="store_const",
                            const=kind, help="use the %s table" % kind)
    parser.add_argument("--jobs", type=int, help="worker threads")
    parser.add_argument("--cap", type=int, help="largest Weyl group built")
    parser.add_argument("--out",
                        help="output file pattern, e.g. "
                        "{command}_{type}{rank}.{format}")
    parser.add_argument("-v", "--verbose", action="store_true",
                        help="debug logging on stderr")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    return parser


def _element(datum, text):
    element, reduced = datum.parse_word(text)
    if not reduced:
        logger.warning("Word %s is not reduced, using %s", text, str(element))
    return element


def cmd_table(config, datum):
    hecke = HeckeAlgebra(datum)
    if config.specialize or config.table in ("a", "b"):
        source = Casselman(hecke, config.jobs).casselman_tables()
        kinds = ("a", "b")
    else:
        source = hecke.transition_tables(config.jobs)
        kinds = ("p", "ptilde")
    if config.table is not None:
        if config.table not in kinds:
            raise ConfigError("--%s needs %s" % (
                config.table, "no --specialize" if config.specialize
                else "--specialize"))
        kinds = (config.table, )
    tables = dict((kind, source.entries(kind)) for kind in kinds)
    if config.q_value is not None:
        if "p" in tables or "ptilde" in tables:
            raise ConfigError("--q applies to the specialized tables")
        tables = dict((kind, [(pair, evaluate_u(value, config.q_value))
                              for pair, value in entries])
                      for kind, entries in tables.items())
    return render_tables(datum, tables, config.output_format), EXIT_OK


def cmd_verify(config, datum):
    report = run_all(datum, config.jobs)
    code = EXIT_OK if report.passed else EXIT_FAILED
    return render_report(report, config.output_format), code


def cmd_conjecture(config, datum):
    report = Casselman(HeckeAlgebra(datum), config.jobs).conjecture_check()
    code = EXIT_OK
    if not report.passed and report.simply_laced:
        code = EXIT_FAILED
    return render_report(report, config.output_format), code


def cmd_whittaker(config, datum):
    w = _element(datum, config.w or "e")
    casselman = Casselman(HeckeAlgebra(datum), config.jobs)
    value = casselman.whittaker_sum(w, config.mu)
    payload = {"command": "whittaker",
               "datum": datum.name,
               "w": str(w),
               "mu": list(config.mu),
               "polynomial": is_laurent_polynomial(value)}
    if config.q_value is not None:
        value = evaluate_u(value, config.q_value)
        payload["q"] = str(config.q_value)
    return render_value(payload, value, config.output_format), EXIT_OK


def cmd_eval(config, datum):
    w = _element(datum, config.w)
    v = _element(datum, config.v)
    hecke = HeckeAlgebra(datum)
    if config.table in ("p", "ptilde"):
        if config.q_value is not None:
            raise ConfigError("--q applies to the a and b tables")
        tables = hecke.transition_tables(config.jobs)
    else:
        tables = Casselman(hecke, config.jobs).casselman_tables()
    value = getattr(tables, config.table)(w, v)
    payload = {"command": "eval",
               "datum": datum.name,
               "table": config.table,
               "w": str(w),
               "v": str(v)}
    if config.q_value is not None:
        value = evaluate_u(value, config.q_value)
        payload["q"] = str(config.q_value)
        number = as_rational(value)
        if number is not None:
            payload["rational"] = str(number)
    return render_value(payload, value, config.output_format), EXIT_OK


def cmd_datum_dump(config, datum):
    return render_datum(datum, config.output_format), EXIT_OK


COMMANDS = {"table": cmd_table,
            "verify": cmd_verify,
            "conjecture": cmd_conjecture,
            "whittaker": cmd_whittaker,
            "eval": cmd_eval,
            "datum-dump": cmd_datum_dump}


def main(argv=None, stdout=None):
    """Run one command and return its exit code.
    """
    stdout = stdout or sys.stdout
    args = build_parser().parse_intermixed_args(argv)
    setup_logging("DEBUG" if args.verbose else "INFO")
    try:
        if len(args.words) > 2:
            raise ConfigError("at most two words, got %d" % len(args.words))
        if args.words:
            args.w = args.w or args.words[0]
        if len(args.words) == 2:
            args.v = args.v or args.words[1]
        config = RunConfig.from_args(args, read_defaults())
        setup_logging(config.log_level)
        datum = build_root_datum(config.type_label, config.rank, config.cap)
        text, code = COMMANDS[config.command](config, datum)
        write(text, config.out, config.command, datum, config.output_format,
              stdout)
        return code
    except GroupTooLargeError as err:
        logger.error(str(err))
        return EXIT_CAP
    except (ValueError, SpecializationError) as err:
        logger.error(str(err))
        return EXIT_INVALID
    except Exception:
        logger.exception("There was an error!")
        raise


if __name__ == '__main__':
    sys.exit(main())
