"""Python front-end of the geodisc C++ library."""

import json

from ._geodisc import (
    Disc,
    Domain,
    GeodiscError,
    HypothesisViolation,
    PreconditionError,
    SolverDivergence,
    __version__,
    ball_geodesic,
    counterexample_json,
    geodesic_disc,
    hilbert_conjugate,
    kobayashi_distance,
    tangency_locus,
)


def domain(spec):
    """Domain from a dict or JSON string, e.g. {"kind": "ball", "dimension": 2}."""
    if not isinstance(spec, str):
        spec = json.dumps(spec)
    return Domain.from_json(spec)


def counterexample(discs=64, grid=512):
    return json.loads(counterexample_json(discs, grid))


__all__ = [
    "Disc",
    "Domain",
    "GeodiscError",
    "HypothesisViolation",
    "PreconditionError",
    "SolverDivergence",
    "__version__",
    "ball_geodesic",
    "counterexample",
    "domain",
    "geodesic_disc",
    "hilbert_conjugate",
    "kobayashi_distance",
    "tangency_locus",
]
