"""Python bindings for the swdual library."""

import json

from ._swdual import (
    SwdualError,
    central_case_shift,
    cohomology_dims,
    dump_json,
    exotic_picard_shift,
    period_of,
    psi,
    saturate,
    shift_json,
    suite_names,
    sw_shift,
    verify_json,
)


def shift(case, p=0, n=0, precision=6, timing=False):
    return json.loads(shift_json(case, p, n, precision, timing))


def verify(suite="all", precision=6, max_degree=4, timing=False):
    return json.loads(verify_json(suite, precision, max_degree, timing))


def dump(what, group="", case="", p=0, rep="", maxdeg=4):
    return json.loads(dump_json(what, group, case, p, rep, maxdeg))


__all__ = [
    "SwdualError",
    "central_case_shift",
    "cohomology_dims",
    "dump",
    "exotic_picard_shift",
    "period_of",
    "psi",
    "saturate",
    "shift",
    "suite_names",
    "sw_shift",
    "verify",
]
