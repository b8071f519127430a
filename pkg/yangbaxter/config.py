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

"""Run configuration: command line on top of cfg file defaults.
"""

import logging
import os
from configparser import ConfigParser, NoOptionError, NoSectionError

from sympy import Rational

from yangbaxter.output import FORMATS
from yangbaxter.rootdata import DEFAULT_CAP

logger = logging.getLogger(__name__)

ENVIRONMENT_VARIABLE = "YANGBAXTER_CONFIG"

SECTION = "defaults"

DEFAULTS = {"cap": str(DEFAULT_CAP),
            "jobs": "1",
            "format": "json",
            "log_level": "INFO",
            "out": ""}

COMMANDS = ("table", "verify", "conjecture", "whittaker", "eval",
            "datum-dump")

TYPES = ("A", "B", "C", "D", "E", "F", "G")

TABLES = ("p", "ptilde", "a", "b")


class ConfigError(ValueError):

    """Invalid configuration or malformed input.
    """
    pass


def read_defaults(filename=None):
    """Defaults from *filename*, the environment, or the built-in values.
    """
    filename = filename or os.environ.get(ENVIRONMENT_VARIABLE)
    values = dict(DEFAULTS)
    if not filename:
        return values
    cfg = ConfigParser()
    if not cfg.read(filename):
        raise ConfigError("cannot read configuration file " + filename)
    logger.debug("Reading defaults from %s", filename)
    for key in DEFAULTS:
        try:
            values[key] = cfg.get(SECTION, key)
        except (NoSectionError, NoOptionError):
            logger.debug("No option %s in %s, using %s", key, filename,
                         values[key])
    return values


def parse_q(text):
    """An exact nonzero rational written NUM/DEN or NUM.
    """
    parts = str(text).strip().split("/")
    try:
        numbers = [int(part) for part in parts]
    except ValueError:
        raise ConfigError("q must be written NUM/DEN, got %r" % text)
    if len(numbers) == 1:
        numbers.append(1)
    if len(numbers) != 2:
        raise ConfigError("q must be written NUM/DEN, got %r" % text)
    numerator, denominator = numbers
    if denominator == 0:
        raise ConfigError("q has a zero denominator")
    if numerator == 0:
        raise ConfigError("q must be nonzero")
    return Rational(numerator, denominator)


def parse_mu(text, rank):
    """Comma separated integer coordinates, one per fundamental weight.
    """
    try:
        mu = tuple(int(part) for part in str(text).split(","))
    except ValueError:
        raise ConfigError("mu must be integers separated by commas, got %r"
                          % text)
    if len(mu) != rank:
        raise ConfigError("mu has %d coordinates, rank is %d"
                          % (len(mu), rank))
    return mu


def _pick(value, default):
    return default if value is None else value


def _positive_int(name, value):
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError("%s must be an integer, got %r" % (name, value))
    if number < 1:
        raise ConfigError("%s must be at least 1" % name)
    return number


class RunConfig(object):

    """Everything a command needs to run.
    """

    def __init__(self, command, type_label, rank, output_format="json",
                 q_value=None, w=None, v=None, mu=None, table=None,
                 specialize=False, jobs=1, cap=DEFAULT_CAP, out=None,
                 log_level="INFO"):
        self.command = command
        self.type_label = str(type_label).upper()
        self.rank = rank
        self.output_format = output_format
        self.q_value = q_value
        self.w = w
        self.v = v
        self.mu = mu
        self.table = table
        self.specialize = specialize
        self.jobs = jobs
        self.cap = cap
        self.out = out
        self.log_level = log_level

    @classmethod
    def from_args(cls, args, defaults=None):
        """Merge parsed arguments over cfg defaults and validate.
        """
        defaults = defaults or read_defaults()
        rank = _positive_int("rank", args.rank)
        mu = parse_mu(args.mu, rank) if args.mu is not None else None
        q_value = parse_q(args.q) if args.q is not None else None
        config = cls(args.command, args.type, rank,
                     output_format=args.format or defaults["format"],
                     q_value=q_value,
                     w=args.w,
                     v=args.v,
                     mu=mu,
                     table=args.table,
                     specialize=args.specialize,
                     jobs=_positive_int(
                         "jobs", _pick(args.jobs, defaults["jobs"])),
                     cap=_positive_int(
                         "cap", _pick(args.cap, defaults["cap"])),
                     out=args.out or defaults["out"] or None,
                     log_level=("DEBUG" if args.verbose
                                else defaults["log_level"].upper()))
        config.validate()
        return config

    def validate(self):
        if self.command not in COMMANDS:
            raise ConfigError("unknown command " + str(self.command))
        if self.type_label not in TYPES:
            raise ConfigError("unknown type " + self.type_label)
        if self.output_format not in FORMATS:
            raise ConfigError("unknown format " + str(self.output_format))
        if self.table is not None and self.table not in TABLES:
            raise ConfigError("unknown table " + str(self.table))
        if self.log_level not in ("DEBUG", "INFO", "WARNING", "ERROR",
                                  "CRITICAL"):
            raise ConfigError("unknown log level " + str(self.log_level))
        if self.command == "whittaker" and self.mu is None:
            raise ConfigError("whittaker needs --mu")
        if self.command == "eval":
            if self.w is None or self.v is None:
                raise ConfigError("eval needs the words w and v")
            if self.table is None:
                raise ConfigError("eval needs one of --p, --ptilde, --a, --b")
        return self
