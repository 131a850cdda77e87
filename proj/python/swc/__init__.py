"""Stabilizer commutant toolkit."""

import json

from ._swc import *  # noqa: F401,F403
from ._swc import verify_all_json


def verify_all(profile="quick", seed=0, only=()):
    """Run the acceptance suite and return the report as a dict."""
    return json.loads(verify_all_json(profile, seed, list(only)))
