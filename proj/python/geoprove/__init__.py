"""Exact polynomial engine and plane-geometry prover.

The heavy lifting lives in the C++ extension ``geoprove._core``; this module
re-exports it and unpacks the JSON report strings into dictionaries.
"""

import json as _json

from ._core import (  # noqa: F401
    GeoCompileError,
    GeoParseError,
    GeoProgram,
    MathError,
    Polynomial,
    RationalFunction,
    VariableTable,
    __version__,
    canonicalize,
    case_polynomial,
    exact_divide,
    gcd,
    homogeneous_components,
    homogeneous_degree,
    is_squarefree,
    lcm,
    load_geo,
    mcs,
    nondegeneracy,
    parse_geo,
    poly,
    run_file,
    squarefree_part,
    substitute,
    thesis_degree_bound,
    thesis_polynomial,
    thesis_raw_numerator,
)
from . import _core as _c


def direct_prove(prog, seed=0):
    """Prove by full expansion; returns the report as a dict."""
    return _json.loads(_c.direct_prove_json(prog, seed))


def autarky_prove(prog, mode="assumed", seed=0):
    """Prove by the degree-count method; returns the report as a dict."""
    return _json.loads(_c.autarky_prove_json(prog, mode, seed))


def substitution_prove(prog, constraint, seed=0):
    """Prove by homogeneity substitution, e.g. constraint="b := a^2"."""
    return _json.loads(_c.substitution_prove_json(prog, constraint, seed))


def identity_test(p, precision=128, max_vars=8):
    """Numeric identity test at the universal transcendental point."""
    return _json.loads(_c.identity_test_json(p, precision, max_vars))
