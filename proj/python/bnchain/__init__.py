"""Brill-Noether loci on chains of cycles.

Chains and divisors are passed as dicts in the same JSON layout the CLI reads:

    chain = {"genus": 4, "profile": [0, 2, 0]}
    chain = {"cycles": [{"cw": "1", "total": "2"}, ...], "bridges": ["1", ...]}
    divisor = {"terms": [{"cycle": 1, "xi": "1/2", "mult": 1}, {"bridge": 2, "mult": -1}], "wg": -3}
"""

import json

from . import _core

__all__ = [
    "count_syt",
    "hook_length",
    "dual",
    "disp_plus",
    "partition_from_grda",
    "rho",
    "torsion_profile",
    "tableaux",
    "components",
    "dimension",
    "is_general",
    "expected_class",
    "standard_form",
    "weierstrass_partition",
    "rank",
    "cross_check",
    "run_cli",
]

count_syt = _core.count_syt
hook_length = _core.hook_length
dual = _core.dual
disp_plus = _core.disp_plus
partition_from_grda = _core.partition_from_grda
rho = _core.rho


def _dump(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def torsion_profile(chain):
    return json.loads(_core.profile_json(_dump(chain)))


def tableaux(shape, chain):
    return json.loads(_core.tableaux_json(list(shape), _dump(chain)))


def components(shape, chain):
    return json.loads(_core.components_json(list(shape), _dump(chain)))


def dimension(shape, chain):
    """Dimension of W^shape, or None when the locus is empty."""
    return _core.dimension(list(shape), _dump(chain))


def is_general(chain, marked=False, brute=False):
    return json.loads(_core.generality_json(_dump(chain), marked, brute))


def expected_class(shape, genus):
    return json.loads(_core.expected_class_json(list(shape), genus))


def standard_form(chain, divisor):
    return json.loads(_core.standard_form_json(_dump(chain), _dump(divisor)))


def weierstrass_partition(chain, divisor):
    return _core.weierstrass_partition(_dump(chain), _dump(divisor))


def rank(chain, divisor):
    return _core.rank(_dump(chain), _dump(divisor))


def cross_check(chain, divisor):
    return json.loads(_core.cross_check_json(_dump(chain), _dump(divisor)))


def run_cli(args):
    """Runs the command-line front end in-process; returns (code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])
