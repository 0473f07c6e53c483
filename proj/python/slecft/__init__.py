"""Exact Virasoro operators on univalent-function coefficients, Verma modules and SLE numerics."""

import json as _json

from ._slecft import *  # noqa: F401,F403
from ._slecft import commands, run_command_json


def run(command, **config):
    """Run a named suite and return its report as a dict.

    Keyword arguments are RunConfig keys (``max_mode=3``, ``kappa="8/3"``...).
    """
    return _json.loads(run_command_json(command, _json.dumps(config)))
