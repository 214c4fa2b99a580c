"""Shared closed-form oracles for the test suite."""

import numpy as np

import aristotle_orbits as ao
from aristotle_orbits.lie_core import EPS0


def cyclotron_exact(p0, q0, t, params):
    """Closed-form kinetic flow on the double chart.

    dp/dt = -omega EPS0 p (clockwise rotation), dq/dt = p / m.
    """
    w = params.omega
    rot = ao.rotation(-w * t)
    p = rot @ p0
    q = q0 + (1.0 / (params.m * w)) * (EPS0 @ ((rot - np.eye(2)) @ p0))
    return p, q
